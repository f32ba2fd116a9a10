#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "finring/caps.hpp"
#include "finring/errors.hpp"

namespace finring {

class Ring;

enum class RingKind {
  zmod,
  table,
  product,
  quotient,
  poly_quotient,
  idealization,
  duplication,
};

/// Structural backend of a ring: operations on element indices 0..size()-1.
/// Implementations must be commutative, unital and immutable. Index 0 is the
/// additive identity in every backend this library builds.
class RingRep {
 public:
  virtual ~RingRep() = default;
  virtual std::size_t size() const = 0;
  virtual std::size_t add(std::size_t a, std::size_t b) const = 0;
  virtual std::size_t mul(std::size_t a, std::size_t b) const = 0;
  virtual std::size_t neg(std::size_t a) const = 0;
  virtual std::size_t zero() const { return 0; }
  virtual std::size_t one() const = 0;
  virtual std::string display(std::size_t a) const = 0;
  virtual RingKind kind() const = 0;
};

namespace detail {

/// Shared immutable state behind a Ring value. Classification masks are
/// filled lazily; everything else is fixed at construction.
struct RingData {
  std::string descriptor;
  std::size_t size = 0;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  std::unique_ptr<const RingRep> rep;

  // populated when size <= caps.table_memo_max
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;
  std::vector<std::uint16_t> neg_table;

  mutable std::once_flag units_once;
  mutable std::vector<std::uint8_t> units_mask;
  mutable std::once_flag zdiv_once;
  mutable std::vector<std::uint8_t> zdiv_mask;
};

}  // namespace detail

/// A single ring element: owning ring identity plus index. Valid only while
/// the ring it came from is alive.
class Element {
 public:
  Element() = default;

  std::size_t index() const { return index_; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.owner_ == b.owner_ && a.index_ == b.index_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  friend bool operator<(const Element& a, const Element& b) {
    return a.owner_ == b.owner_ ? a.index_ < b.index_ : a.owner_ < b.owner_;
  }

 private:
  friend class Ring;
  Element(const detail::RingData* owner, std::uint32_t index) : owner_(owner), index_(index) {}

  const detail::RingData* owner_ = nullptr;
  std::uint32_t index_ = 0;
};

/// A finite commutative unital ring. Value type over shared immutable state;
/// cheap to copy, safe to share across threads.
class Ring {
 public:
  Ring() = default;

  static Ring create(std::string descriptor, std::unique_ptr<const RingRep> rep,
                     const Caps& caps = default_caps());

  bool valid() const { return d_ != nullptr; }
  const std::string& descriptor() const { return d_->descriptor; }
  std::size_t size() const { return d_->size; }
  bool is_zero_ring() const { return d_->size == 1; }
  RingKind kind() const { return d_->rep->kind(); }
  const RingRep& rep() const { return *d_->rep; }

  /// Identity (same underlying instance, not isomorphism).
  bool same(const Ring& other) const { return d_ == other.d_; }

  // index-level operations; no bounds checks, callers stay in range
  std::size_t add_ix(std::size_t a, std::size_t b) const {
    return d_->add_table.empty() ? d_->rep->add(a, b)
                                 : d_->add_table[a * d_->size + b];
  }
  std::size_t mul_ix(std::size_t a, std::size_t b) const {
    return d_->mul_table.empty() ? d_->rep->mul(a, b)
                                 : d_->mul_table[a * d_->size + b];
  }
  std::size_t neg_ix(std::size_t a) const {
    return d_->neg_table.empty() ? d_->rep->neg(a) : d_->neg_table[a];
  }
  std::size_t sub_ix(std::size_t a, std::size_t b) const { return add_ix(a, neg_ix(b)); }
  std::size_t zero_ix() const { return d_->zero; }
  std::size_t one_ix() const { return d_->one; }
  std::string display_ix(std::size_t a) const { return d_->rep->display(a); }

  /// k * 1 for any integer k, via double-and-add.
  std::size_t int_image_ix(long long k) const;
  /// a^k for k >= 1.
  std::size_t pow_ix(std::size_t a, std::uint64_t k) const;

  // element-level operations with ownership checks
  Element element(std::size_t index) const;
  Element zero() const { return Element(d_.get(), d_->zero); }
  Element one() const { return Element(d_.get(), d_->one); }
  bool owns(const Element& e) const { return e.owner_ == d_.get(); }
  std::size_t index_of(const Element& e) const;
  std::string display(const Element& e) const { return display_ix(index_of(e)); }
  Element add(const Element& a, const Element& b) const {
    return Element(d_.get(), static_cast<std::uint32_t>(add_ix(index_of(a), index_of(b))));
  }
  Element mul(const Element& a, const Element& b) const {
    return Element(d_.get(), static_cast<std::uint32_t>(mul_ix(index_of(a), index_of(b))));
  }
  Element neg(const Element& a) const {
    return Element(d_.get(), static_cast<std::uint32_t>(neg_ix(index_of(a))));
  }
  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

  /// units_mask()[i] != 0 iff element i has a multiplicative inverse.
  /// Built once per ring, O(size^2).
  const std::vector<std::uint8_t>& units_mask() const;
  /// zero_divisor_mask()[i] != 0 iff some y != 0 has i*y = 0. Independent of
  /// units_mask so the unit/zero-divisor dichotomy stays a checkable fact.
  const std::vector<std::uint8_t>& zero_divisor_mask() const;

  const detail::RingData* data() const { return d_.get(); }

 private:
  explicit Ring(std::shared_ptr<detail::RingData> d) : d_(std::move(d)) {}

  std::shared_ptr<detail::RingData> d_;
};

/// The ring of integers mod n. n = 1 gives the zero ring; n = 0 is rejected.
Ring zmod(std::size_t n, const Caps& caps = default_caps());

/// A ring defined by explicit tables. Used for fixtures; tables are taken as
/// given and only the identities are located (throws PreconditionError when
/// no additive or multiplicative identity exists).
Ring table_ring(std::string descriptor, std::size_t n,
                std::vector<std::uint16_t> add_table, std::vector<std::uint16_t> mul_table,
                const Caps& caps = default_caps());

}  // namespace finring
