#include "finring/ring.hpp"

#include <algorithm>
#include <utility>

namespace finring {

const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

namespace {

class ZmodRep final : public RingRep {
 public:
  explicit ZmodRep(std::size_t n) : n_(n) {}

  std::size_t size() const override { return n_; }
  std::size_t add(std::size_t a, std::size_t b) const override { return (a + b) % n_; }
  std::size_t mul(std::size_t a, std::size_t b) const override { return (a * b) % n_; }
  std::size_t neg(std::size_t a) const override { return (n_ - a) % n_; }
  std::size_t one() const override { return 1 % n_; }
  std::string display(std::size_t a) const override { return std::to_string(a); }
  RingKind kind() const override { return RingKind::zmod; }

 private:
  std::size_t n_;
};

class TableRep final : public RingRep {
 public:
  TableRep(std::size_t n, std::vector<std::uint16_t> add, std::vector<std::uint16_t> mul,
           std::size_t zero, std::size_t one)
      : n_(n), add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one) {
    neg_.resize(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < n_; ++b) {
        if (add_[a * n_ + b] == zero_) {
          neg_[a] = static_cast<std::uint16_t>(b);
          found = true;
          break;
        }
      }
      if (!found) {
        throw PreconditionError("table ring: element " + std::to_string(a) +
                                " has no additive inverse");
      }
    }
  }

  std::size_t size() const override { return n_; }
  std::size_t add(std::size_t a, std::size_t b) const override { return add_[a * n_ + b]; }
  std::size_t mul(std::size_t a, std::size_t b) const override { return mul_[a * n_ + b]; }
  std::size_t neg(std::size_t a) const override { return neg_[a]; }
  std::size_t zero() const override { return zero_; }
  std::size_t one() const override { return one_; }
  std::string display(std::size_t a) const override { return std::to_string(a); }
  RingKind kind() const override { return RingKind::table; }

 private:
  std::size_t n_;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<std::uint16_t> neg_;
  std::size_t zero_, one_;
};

}  // namespace

Ring Ring::create(std::string descriptor, std::unique_ptr<const RingRep> rep, const Caps& caps) {
  auto d = std::make_shared<detail::RingData>();
  d->descriptor = std::move(descriptor);
  d->size = rep->size();
  if (d->size == 0) throw PreconditionError("ring with empty universe");
  if (d->size > caps.universe_max)
    throw CapExceededError("universe_max", caps.universe_max, d->size);
  d->zero = static_cast<std::uint32_t>(rep->zero());
  d->one = static_cast<std::uint32_t>(rep->one());
  d->rep = std::move(rep);

  if (d->size <= caps.table_memo_max && d->size <= 0xFFFF) {
    const std::size_t n = d->size;
    d->add_table.resize(n * n);
    d->mul_table.resize(n * n);
    d->neg_table.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      d->neg_table[a] = static_cast<std::uint16_t>(d->rep->neg(a));
      for (std::size_t b = 0; b < n; ++b) {
        d->add_table[a * n + b] = static_cast<std::uint16_t>(d->rep->add(a, b));
        d->mul_table[a * n + b] = static_cast<std::uint16_t>(d->rep->mul(a, b));
      }
    }
  }
  return Ring(std::move(d));
}

std::size_t Ring::int_image_ix(long long k) const {
  std::size_t acc = zero_ix();
  std::size_t base = one_ix();
  bool negate = k < 0;
  unsigned long long u = negate ? static_cast<unsigned long long>(-(k + 1)) + 1ull
                                : static_cast<unsigned long long>(k);
  while (u != 0) {
    if (u & 1ull) acc = add_ix(acc, base);
    base = add_ix(base, base);
    u >>= 1;
  }
  return negate ? neg_ix(acc) : acc;
}

std::size_t Ring::pow_ix(std::size_t a, std::uint64_t k) const {
  std::size_t acc = one_ix();
  std::size_t base = a;
  while (k != 0) {
    if (k & 1ull) acc = mul_ix(acc, base);
    base = mul_ix(base, base);
    k >>= 1;
  }
  return acc;
}

Element Ring::element(std::size_t index) const {
  if (index >= d_->size)
    throw PreconditionError("element index " + std::to_string(index) + " out of range for " +
                            d_->descriptor);
  return Element(d_.get(), static_cast<std::uint32_t>(index));
}

std::size_t Ring::index_of(const Element& e) const {
  if (!owns(e))
    throw RingMismatchError("element does not belong to " + d_->descriptor);
  return e.index();
}

const std::vector<std::uint8_t>& Ring::units_mask() const {
  const detail::RingData* d = d_.get();
  std::call_once(d->units_once, [this, d] {
    const std::size_t n = d->size;
    d->units_mask.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (mul_ix(x, y) == d->one) {
          d->units_mask[x] = 1;
          break;
        }
      }
    }
  });
  return d->units_mask;
}

const std::vector<std::uint8_t>& Ring::zero_divisor_mask() const {
  const detail::RingData* d = d_.get();
  std::call_once(d->zdiv_once, [this, d] {
    const std::size_t n = d->size;
    d->zdiv_mask.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (y != d->zero && mul_ix(x, y) == d->zero) {
          d->zdiv_mask[x] = 1;
          break;
        }
      }
    }
  });
  return d->zdiv_mask;
}

Ring zmod(std::size_t n, const Caps& caps) {
  if (n == 0) throw PreconditionError("Z/0 is not a finite ring");
  return Ring::create("Z/" + std::to_string(n), std::make_unique<ZmodRep>(n), caps);
}

Ring table_ring(std::string descriptor, std::size_t n, std::vector<std::uint16_t> add_table,
                std::vector<std::uint16_t> mul_table, const Caps& caps) {
  if (n == 0 || add_table.size() != n * n || mul_table.size() != n * n)
    throw PreconditionError("table ring: tables must be n*n with n >= 1");

  // locate the additive identity, then the multiplicative one
  std::size_t zero = n, one = n;
  for (std::size_t z = 0; z < n && zero == n; ++z) {
    bool ok = true;
    for (std::size_t x = 0; x < n; ++x) ok = ok && add_table[z * n + x] == x;
    if (ok) zero = z;
  }
  if (zero == n) throw PreconditionError("table ring: no additive identity");
  for (std::size_t u = 0; u < n && one == n; ++u) {
    bool ok = true;
    for (std::size_t x = 0; x < n; ++x) ok = ok && mul_table[u * n + x] == x;
    if (ok) one = u;
  }
  if (one == n) throw PreconditionError("table ring: no multiplicative identity");

  return Ring::create(std::move(descriptor),
                      std::make_unique<TableRep>(n, std::move(add_table), std::move(mul_table),
                                                 zero, one),
                      caps);
}

}  // namespace finring
