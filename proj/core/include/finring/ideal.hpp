#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

/// An ideal of a finite ring: the generators it was built from plus the full
/// member set, materialized as a bitset over the element universe.
class Ideal {
 public:
  Ideal() = default;

  const Ring& ring() const { return ring_; }
  /// Generators as given (order preserved, duplicates kept).
  const std::vector<std::uint32_t>& generator_indices() const { return gens_; }
  std::vector<Element> generators() const;
  /// Sorted member indices.
  const std::vector<std::uint32_t>& member_indices() const { return members_; }
  std::size_t member_count() const { return members_.size(); }
  /// One word per 64 elements of the universe.
  const std::vector<std::uint64_t>& mask() const { return mask_; }

  bool contains_ix(std::size_t x) const {
    return (mask_[x >> 6] >> (x & 63)) & 1u;
  }
  bool contains(const Element& e) const;

 private:
  friend Ideal ideal_from_indices(const Ring&, std::vector<std::uint32_t>);
  friend Ideal ideal_from_members(const Ring&, std::vector<std::uint64_t>);
  friend Ideal ideal_sum(const Ideal&, const Ideal&);
  friend std::vector<Ideal> all_ideals(const Ring&, const Caps&);

  Ring ring_;
  std::vector<std::uint32_t> gens_;
  std::vector<std::uint32_t> members_;
  std::vector<std::uint64_t> mask_;
};

/// Smallest ideal containing the generators, assembled as the sum of the
/// principal ideals Rg. No closure pass is needed: Rg is already an ideal,
/// and a sum of ideals is the elementwise sum set.
Ideal ideal_generate(const Ring& r, const std::vector<Element>& gens);
Ideal ideal_from_indices(const Ring& r, std::vector<std::uint32_t> gen_ix);
/// Wraps an element set already known to be an ideal; the member list doubles
/// as the generator list. No closure is run.
Ideal ideal_from_members(const Ring& r, std::vector<std::uint64_t> mask);

/// Ann(I) = { a : a * x = 0 for every x in I }. Checking the generators
/// suffices. The result is returned as an ideal of r.
Ideal annihilator(const Ring& r, const Ideal& i);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
bool ideal_equals(const Ideal& a, const Ideal& b);
/// Element membership.
bool ideal_contains(const Ideal& i, const Element& x);
bool ideal_subset(const Ideal& a, const Ideal& b);
bool is_proper(const Ideal& i);
/// True iff the ideal contains a regular element. On a finite ring such an
/// ideal is the whole ring.
bool is_regular_ideal(const Ring& r, const Ideal& i);

/// The complete ideal lattice: join-closure of the principal ideals.
/// Includes {0} and R. Sorted by (member count, member list). Requires
/// |R| <= caps.lattice_max.
std::vector<Ideal> all_ideals(const Ring& r, const Caps& caps = default_caps());

/// Greedy generating subset of the members, scanned in index order.
std::vector<std::uint32_t> minimal_generators(const Ideal& i);
/// "ideal(g1, g2, ...)" over the minimal generators, e.g. "ideal(2)".
std::string ideal_display(const Ideal& i);

}  // namespace finring
