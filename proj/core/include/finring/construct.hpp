#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "finring/ideal.hpp"
#include "finring/module.hpp"
#include "finring/ring.hpp"

namespace finring {

/// R1 x R2 with componentwise operations. Index = left * |R2| + right.
/// Zero-ring factors are rejected.
Ring product(const Ring& r1, const Ring& r2, const Caps& caps = default_caps());

/// R/I as a coset ring. Cosets are numbered by their least base index, so
/// coset 0 is I itself and the representative map is canonical.
Ring quotient(const Ring& r, const Ideal& i, const Caps& caps = default_caps());

/// R[X]/(f) for a monic f of degree >= 1, given as coefficients c0..cn with
/// cn = 1. Elements are coefficient vectors; index is base-|R| little-endian.
Ring poly_quotient(const Ring& r, const std::vector<Element>& monic_coeffs,
                   const Caps& caps = default_caps());
/// Convenience: integer coefficients mapped through k -> k * 1.
Ring poly_quotient_ints(const Ring& r, const std::vector<long long>& coeffs,
                        const Caps& caps = default_caps());

/// The square-zero extension of A by the module E: pairs (a, e) with
/// (a, e)(b, f) = (ab, af + be). Index = a * |E| + e.
Ring idealization(const Ring& a, const RingModule& e, const Caps& caps = default_caps());

/// Pairs (r, e) with e in I, in the coordinates where
/// (r, e)(s, f) = (rs, rf + se + ef). Index = r * |I| + slot(e) with members
/// of I in sorted order. The embedded form (r, r + e) is exposed as a view.
Ring duplication(const Ring& r, const Ideal& i, const Caps& caps = default_caps());

/// Brute-force isomorphism test for rings of size <= caps.iso_max, pruned by
/// elementwise invariants, mapping 0 to 0 and 1 to 1. Size mismatch gives
/// false; oversized input throws CapExceededError.
bool ring_isomorphic(const Ring& r1, const Ring& r2, const Caps& caps = default_caps());

// structure accessors; throw PreconditionError when the ring has the wrong kind
std::size_t zmod_modulus(const Ring& r);
const Ring& product_left(const Ring& r);
const Ring& product_right(const Ring& r);
const Ring& base_of(const Ring& r);  // quotient, poly_quotient, idealization, duplication
const Ideal& quotient_ideal(const Ring& r);
const Ideal& duplication_ideal(const Ring& r);
const RingModule& idealization_module(const Ring& r);
std::size_t poly_quotient_degree(const Ring& r);
/// Modulus coefficients c0..cn as base-ring indices.
const std::vector<std::uint32_t>& poly_quotient_modulus(const Ring& r);

/// Expression-literal rendering of an element, parseable by the expression
/// grammar whenever the ring's shape admits one; falls back to the display
/// form otherwise.
std::string element_literal(const Ring& r, std::size_t ix);
/// "ideal(...)" literal over minimal generators; "ideal()" for the zero ideal.
std::string ideal_literal(const Ideal& i);
/// "free(k)" / "quotmod(ideal(...))" / "dsum(...)" literal; modules without a
/// grammar form fall back to their descriptor.
std::string module_literal(const RingModule& m);

// codec helpers
std::pair<std::size_t, std::size_t> product_split(const Ring& r, std::size_t ix);
std::size_t product_join(const Ring& r, std::size_t left, std::size_t right);
std::size_t quotient_rep_ix(const Ring& r, std::size_t coset);
std::size_t quotient_coset_ix(const Ring& r, std::size_t base_ix);
std::vector<std::size_t> poly_quotient_coeffs(const Ring& r, std::size_t ix);
std::size_t poly_quotient_from_coeffs(const Ring& r, const std::vector<std::size_t>& coeffs);
std::pair<std::size_t, std::size_t> idealization_split(const Ring& r, std::size_t ix);
std::size_t idealization_join(const Ring& r, std::size_t a, std::size_t e);
/// (r, e) with e as a base-ring index.
std::pair<std::size_t, std::size_t> duplication_parts(const Ring& r, std::size_t ix);
std::size_t duplication_index(const Ring& r, std::size_t base_r, std::size_t base_e);
/// The embedded form (r, r + e) of a duplication element, as base indices.
std::pair<std::size_t, std::size_t> duplication_embedded_view(const Ring& r, std::size_t ix);

}  // namespace finring
