#include "finring/ideal.hpp"

#include <algorithm>
#include <map>

namespace finring {

namespace {

std::size_t mask_words(std::size_t universe) { return (universe + 63) / 64; }

bool mask_test(const std::vector<std::uint64_t>& m, std::size_t x) {
  return (m[x >> 6] >> (x & 63)) & 1u;
}

void mask_set(std::vector<std::uint64_t>& m, std::size_t x) { m[x >> 6] |= 1ull << (x & 63); }

bool mask_subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

std::vector<std::uint32_t> mask_to_list(const std::vector<std::uint64_t>& m, std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::size_t x = 0; x < n; ++x)
    if (mask_test(m, x)) out.push_back(static_cast<std::uint32_t>(x));
  return out;
}

// Rg = { r*g : r in R }; with 1 present no additive closure is needed.
std::vector<std::uint64_t> principal_mask(const Ring& r, std::size_t g) {
  std::vector<std::uint64_t> mask(mask_words(r.size()), 0);
  for (std::size_t s = 0; s < r.size(); ++s) mask_set(mask, r.mul_ix(s, g));
  return mask;
}

// I + J = { x + y }; the elementwise sum of two ideals is already an ideal.
std::vector<std::uint64_t> sum_masks(const Ring& r, const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b) {
  std::vector<std::uint64_t> mask(mask_words(r.size()), 0);
  for (auto x : a)
    for (auto y : b) mask_set(mask, r.add_ix(x, y));
  return mask;
}

std::vector<std::uint64_t> span_of(const Ring& r, const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint64_t> mask(mask_words(r.size()), 0);
  mask_set(mask, r.zero_ix());
  std::vector<std::uint32_t> members{static_cast<std::uint32_t>(r.zero_ix())};
  for (auto g : gens) {
    // the span is an ideal at every step, so membership of g covers Rg
    if (mask_test(mask, g)) continue;
    std::vector<std::uint64_t> pg = principal_mask(r, g);
    mask = sum_masks(r, members, mask_to_list(pg, r.size()));
    members = mask_to_list(mask, r.size());
  }
  return mask;
}

}  // namespace

std::vector<Element> Ideal::generators() const {
  std::vector<Element> out;
  out.reserve(gens_.size());
  for (auto g : gens_) out.push_back(ring_.element(g));
  return out;
}

bool Ideal::contains(const Element& e) const { return contains_ix(ring_.index_of(e)); }

Ideal ideal_from_indices(const Ring& r, std::vector<std::uint32_t> gen_ix) {
  for (auto g : gen_ix)
    if (g >= r.size())
      throw PreconditionError("generator index out of range for " + r.descriptor());
  Ideal i;
  i.ring_ = r;
  i.gens_ = std::move(gen_ix);
  i.mask_ = span_of(r, i.gens_);
  i.members_ = mask_to_list(i.mask_, r.size());
  return i;
}

Ideal ideal_generate(const Ring& r, const std::vector<Element>& gens) {
  std::vector<std::uint32_t> ix;
  ix.reserve(gens.size());
  for (const auto& g : gens) ix.push_back(static_cast<std::uint32_t>(r.index_of(g)));
  return ideal_from_indices(r, std::move(ix));
}

Ideal ideal_from_members(const Ring& r, std::vector<std::uint64_t> mask) {
  Ideal i;
  i.ring_ = r;
  i.mask_ = std::move(mask);
  i.members_ = mask_to_list(i.mask_, r.size());
  i.gens_ = i.members_;
  return i;
}

Ideal annihilator(const Ring& r, const Ideal& i) {
  if (!r.same(i.ring())) throw RingMismatchError("annihilator: ideal belongs to another ring");
  const std::size_t n = r.size();
  const std::size_t zero = r.zero_ix();
  std::vector<std::uint64_t> mask(mask_words(n), 0);
  const auto& gens = i.generator_indices();
  for (std::size_t a = 0; a < n; ++a) {
    bool kills = true;
    for (auto g : gens) {
      if (r.mul_ix(a, g) != zero) {
        kills = false;
        break;
      }
    }
    if (kills) mask_set(mask, a);
  }
  return ideal_from_members(r, std::move(mask));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!a.ring().same(b.ring())) throw RingMismatchError("ideal_sum: rings differ");
  const Ring& r = a.ring();
  Ideal out;
  out.ring_ = r;
  out.mask_ = sum_masks(r, a.member_indices(), b.member_indices());
  out.members_ = mask_to_list(out.mask_, r.size());
  out.gens_ = a.generator_indices();
  out.gens_.insert(out.gens_.end(), b.generator_indices().begin(), b.generator_indices().end());
  std::sort(out.gens_.begin(), out.gens_.end());
  out.gens_.erase(std::unique(out.gens_.begin(), out.gens_.end()), out.gens_.end());
  return out;
}

bool ideal_equals(const Ideal& a, const Ideal& b) {
  if (!a.ring().same(b.ring())) throw RingMismatchError("ideal_equals: rings differ");
  return a.mask() == b.mask();
}

bool ideal_contains(const Ideal& i, const Element& x) { return i.contains(x); }

bool ideal_subset(const Ideal& a, const Ideal& b) {
  if (!a.ring().same(b.ring())) throw RingMismatchError("ideal_subset: rings differ");
  return mask_subset(a.mask(), b.mask());
}

bool is_proper(const Ideal& i) { return i.member_count() < i.ring().size(); }

bool is_regular_ideal(const Ring& r, const Ideal& i) {
  if (!r.same(i.ring())) throw RingMismatchError("is_regular_ideal: rings differ");
  if (r.size() <= 1)
    throw DegenerateRingError("regularity is not defined over the zero ring");
  const auto& zd = r.zero_divisor_mask();
  for (auto x : i.member_indices())
    if (!zd[x]) return true;
  return false;
}

std::vector<Ideal> all_ideals(const Ring& r, const Caps& caps) {
  const std::size_t n = r.size();
  if (n > caps.lattice_max) throw CapExceededError("lattice_max", caps.lattice_max, n);

  struct Entry {
    std::vector<std::uint64_t> mask;
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> gens;
  };
  std::map<std::vector<std::uint64_t>, std::size_t> seen;
  std::vector<Entry> entries;

  auto insert = [&](std::vector<std::uint64_t> mask, std::vector<std::uint32_t> gens) {
    if (seen.count(mask)) return;
    Entry e;
    e.members = mask_to_list(mask, n);
    e.mask = std::move(mask);
    e.gens = std::move(gens);
    seen.emplace(e.mask, entries.size());
    entries.push_back(std::move(e));
  };

  for (std::size_t x = 0; x < n; ++x)
    insert(principal_mask(r, x), {static_cast<std::uint32_t>(x)});

  // join closure; the lattice join is the elementwise sum
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (mask_subset(entries[j].mask, entries[i].mask) ||
          mask_subset(entries[i].mask, entries[j].mask))
        continue;
      std::vector<std::uint64_t> mask = sum_masks(r, entries[i].members, entries[j].members);
      if (seen.count(mask)) continue;
      std::vector<std::uint32_t> gens = entries[i].gens;
      gens.insert(gens.end(), entries[j].gens.begin(), entries[j].gens.end());
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      insert(std::move(mask), std::move(gens));
    }
  }

  std::vector<Ideal> out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    Ideal i;
    i.ring_ = r;
    i.gens_ = std::move(e.gens);
    i.members_ = std::move(e.members);
    i.mask_ = std::move(e.mask);
    out.push_back(std::move(i));
  }
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    if (a.member_count() != b.member_count()) return a.member_count() < b.member_count();
    return a.member_indices() < b.member_indices();
  });
  return out;
}

std::vector<std::uint32_t> minimal_generators(const Ideal& i) {
  const Ring& r = i.ring();
  std::vector<std::uint32_t> gens;
  std::vector<std::uint64_t> span(mask_words(r.size()), 0);
  mask_set(span, r.zero_ix());
  std::vector<std::uint32_t> span_members{static_cast<std::uint32_t>(r.zero_ix())};
  for (auto m : i.member_indices()) {
    if (mask_test(span, m)) continue;
    gens.push_back(m);
    span = sum_masks(r, span_members, mask_to_list(principal_mask(r, m), r.size()));
    span_members = mask_to_list(span, r.size());
  }
  return gens;
}

std::string ideal_display(const Ideal& i) {
  std::string out = "ideal(";
  bool first = true;
  for (auto g : minimal_generators(i)) {
    if (!first) out += ", ";
    out += i.ring().display_ix(g);
    first = false;
  }
  out += ")";
  return out;
}

}  // namespace finring
