#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

// Elementwise classification. Every query below rejects the zero ring with
// DegenerateRingError; on a one-element ring none of these predicates is
// meaningful. Convention: 0 is a zero-divisor in every nonzero ring.

bool is_unit(const Ring& r, const Element& x);
bool is_zero_divisor(const Ring& r, const Element& x);
/// Regular means "not a zero-divisor". On a finite ring this coincides with
/// being a unit; the two are computed independently so that stays testable.
bool is_regular(const Ring& r, const Element& x);
bool is_nilpotent(const Ring& r, const Element& x);

bool is_reduced(const Ring& r);
/// Local iff the non-units are closed under addition.
bool is_local(const Ring& r);
bool is_field(const Ring& r);

std::size_t units_count(const Ring& r);
/// All zero-divisors, sorted by index. Includes 0.
std::vector<Element> zero_divisor_set(const Ring& r);

// index-level helpers for hot paths
bool is_unit_ix(const Ring& r, std::size_t x);
bool is_nilpotent_ix(const Ring& r, std::size_t x);
/// mask[i] != 0 iff element i is nilpotent; computed fresh per call.
std::vector<std::uint8_t> nilpotent_mask(const Ring& r);
std::size_t additive_order_ix(const Ring& r, std::size_t x);

}  // namespace finring
