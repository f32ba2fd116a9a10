#include "finring/classify.hpp"

#include <bit>

namespace finring {

namespace {

void require_nonzero_ring(const Ring& r) {
  if (r.size() <= 1)
    throw DegenerateRingError("property queries are not defined on the zero ring");
}

}  // namespace

bool is_unit_ix(const Ring& r, std::size_t x) {
  const std::size_t n = r.size();
  const std::size_t one = r.one_ix();
  for (std::size_t y = 0; y < n; ++y)
    if (r.mul_ix(x, y) == one) return true;
  return false;
}

bool is_unit(const Ring& r, const Element& x) {
  require_nonzero_ring(r);
  return is_unit_ix(r, r.index_of(x));
}

bool is_zero_divisor(const Ring& r, const Element& x) {
  require_nonzero_ring(r);
  const std::size_t ix = r.index_of(x);
  const std::size_t n = r.size();
  const std::size_t zero = r.zero_ix();
  for (std::size_t y = 0; y < n; ++y)
    if (y != zero && r.mul_ix(ix, y) == zero) return true;
  return false;
}

bool is_regular(const Ring& r, const Element& x) { return !is_zero_divisor(r, x); }

bool is_nilpotent_ix(const Ring& r, std::size_t x) {
  // x nilpotent iff repeated squaring hits zero; the nilpotency index is at
  // most |R|, so log2(|R|) + 1 squarings decide it.
  const std::size_t zero = r.zero_ix();
  std::size_t cur = x;
  std::size_t steps = std::bit_width(r.size()) + 1;
  for (std::size_t i = 0; i < steps; ++i) {
    if (cur == zero) return true;
    cur = r.mul_ix(cur, cur);
  }
  return cur == zero;
}

bool is_nilpotent(const Ring& r, const Element& x) {
  require_nonzero_ring(r);
  return is_nilpotent_ix(r, r.index_of(x));
}

std::vector<std::uint8_t> nilpotent_mask(const Ring& r) {
  const std::size_t n = r.size();
  std::vector<std::uint8_t> mask(n, 0);
  for (std::size_t x = 0; x < n; ++x) mask[x] = is_nilpotent_ix(r, x) ? 1 : 0;
  return mask;
}

std::size_t additive_order_ix(const Ring& r, std::size_t x) {
  const std::size_t zero = r.zero_ix();
  std::size_t cur = x;
  std::size_t ord = 1;
  while (cur != zero) {
    cur = r.add_ix(cur, x);
    ++ord;
  }
  return ord;
}

bool is_reduced(const Ring& r) {
  require_nonzero_ring(r);
  const std::size_t n = r.size();
  const std::size_t zero = r.zero_ix();
  for (std::size_t x = 0; x < n; ++x)
    if (x != zero && is_nilpotent_ix(r, x)) return false;
  return true;
}

bool is_local(const Ring& r) {
  require_nonzero_ring(r);
  const auto& units = r.units_mask();
  const std::size_t n = r.size();
  std::vector<std::uint32_t> non_units;
  for (std::size_t x = 0; x < n; ++x)
    if (!units[x]) non_units.push_back(static_cast<std::uint32_t>(x));
  // local iff the non-units are closed under addition
  for (std::size_t i = 0; i < non_units.size(); ++i)
    for (std::size_t j = i; j < non_units.size(); ++j)
      if (units[r.add_ix(non_units[i], non_units[j])]) return false;
  return true;
}

bool is_field(const Ring& r) {
  require_nonzero_ring(r);
  const auto& units = r.units_mask();
  const std::size_t zero = r.zero_ix();
  for (std::size_t x = 0; x < r.size(); ++x)
    if (x != zero && !units[x]) return false;
  return true;
}

std::size_t units_count(const Ring& r) {
  require_nonzero_ring(r);
  const auto& units = r.units_mask();
  std::size_t count = 0;
  for (auto u : units) count += u;
  return count;
}

std::vector<Element> zero_divisor_set(const Ring& r) {
  require_nonzero_ring(r);
  const auto& mask = r.zero_divisor_mask();
  std::vector<Element> out;
  for (std::size_t x = 0; x < r.size(); ++x)
    if (mask[x]) out.push_back(r.element(x));
  return out;
}

}  // namespace finring
