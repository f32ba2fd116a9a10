#include "finring/decide.hpp"

#include <algorithm>
#include <chrono>

#include "finring/classify.hpp"

namespace finring {

namespace {

constexpr const char* kConventionNote = "0 counted as zero-divisor";
// generator lists above this ring size are reported as member previews
// instead of running the minimal-generator scan
constexpr std::size_t kPreviewLimit = 8;

void require_nonzero(const Ring& r) {
  if (r.size() <= 1)
    throw DegenerateRingError("property queries are not defined on the zero ring");
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<std::string> displays_of(const Ring& r, const std::vector<std::uint32_t>& ixs) {
  std::vector<std::string> out;
  out.reserve(ixs.size());
  for (auto ix : ixs) out.push_back(r.display_ix(ix));
  return out;
}

/// Witness generators: exact minimal generators on small rings, a member
/// preview on large ones where the scan would dominate the run.
void fill_generators(const Ring& r, const Ideal& i, AnnihilatorWitness& w, const Caps& caps) {
  if (r.size() <= caps.table_memo_max) {
    w.ideal_generators = minimal_generators(i);
    w.generators_are_preview = false;
  } else {
    const auto& members = i.member_indices();
    w.ideal_generators.assign(members.begin(),
                              members.begin() +
                                  std::min<std::size_t>(kPreviewLimit, members.size()));
    w.generators_are_preview = true;
  }
  w.generator_displays = displays_of(r, w.ideal_generators);
}

/// Primitive idempotents: nonzero idempotents with no idempotent strictly
/// between zero and themselves. One per local factor of the ring.
std::vector<std::uint32_t> idempotent_atoms(const Ring& r) {
  const std::size_t n = r.size();
  const std::size_t zero = r.zero_ix();
  std::vector<std::uint32_t> idem;
  for (std::size_t x = 0; x < n; ++x)
    if (x != zero && r.mul_ix(x, x) == x) idem.push_back(static_cast<std::uint32_t>(x));
  std::vector<std::uint32_t> atoms;
  for (auto e : idem) {
    bool atom = true;
    for (auto f : idem) {
      const std::size_t p = r.mul_ix(e, f);
      if (p != zero && p != e) {
        atom = false;
        break;
      }
    }
    if (atom) atoms.push_back(e);
  }
  return atoms;
}

std::optional<std::size_t> min_nonzero_annihilator_members(const Ring& r,
                                                          const std::vector<std::uint32_t>& v) {
  const std::size_t n = r.size();
  const std::size_t zero = r.zero_ix();
  for (std::size_t a = 0; a < n; ++a) {
    if (a == zero) continue;
    bool kills = true;
    for (auto g : v) {
      if (r.mul_ix(a, g) != zero) {
        kills = false;
        break;
      }
    }
    if (kills) return a;
  }
  return std::nullopt;
}

/// Maximal ideals read off the lattice by containment alone. Oracle-side
/// counterpart of the structural computation in maximal_ideals.
std::vector<Ideal> lattice_maximal_ideals(const std::vector<Ideal>& lattice) {
  std::vector<Ideal> proper;
  for (const auto& i : lattice)
    if (is_proper(i)) proper.push_back(i);
  std::vector<Ideal> out;
  for (std::size_t i = 0; i < proper.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < proper.size(); ++j) {
      if (i != j && ideal_subset(proper[i], proper[j]) &&
          !ideal_equals(proper[i], proper[j])) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(proper[i]);
  }
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    return a.member_indices() < b.member_indices();
  });
  return out;
}

void sort_witnesses(std::vector<AnnihilatorWitness>& ws) {
  std::sort(ws.begin(), ws.end(), [](const AnnihilatorWitness& a, const AnnihilatorWitness& b) {
    if (a.ideal_size != b.ideal_size) return a.ideal_size < b.ideal_size;
    return a.ideal_generators < b.ideal_generators;
  });
}

}  // namespace

const char* method_name(Method m) { return m == Method::fast ? "fast" : "oracle"; }

const char* property_name(RingProperty p) {
  return p == RingProperty::annihilator_condition ? "A" : "strong_A";
}

std::vector<Ideal> maximal_ideals(const Ring& r) {
  require_nonzero(r);
  std::vector<Ideal> out;
  const std::size_t n = r.size();
  for (auto e : idempotent_atoms(r)) {
    // x belongs to the maximal ideal of the factor cut out by e exactly when
    // x*e is nilpotent; in a finite ring the factor's maximal ideal is its
    // nilradical
    std::vector<std::uint64_t> mask((n + 63) / 64, 0);
    for (std::size_t x = 0; x < n; ++x)
      if (is_nilpotent_ix(r, r.mul_ix(x, e))) mask[x >> 6] |= 1ull << (x & 63);
    out.push_back(ideal_from_members(r, std::move(mask)));
  }
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    return a.member_indices() < b.member_indices();
  });
  return out;
}

std::optional<std::size_t> min_nonzero_annihilator_ix(const Ring& r,
                                                      const std::vector<std::uint32_t>& gens) {
  return min_nonzero_annihilator_members(r, gens);
}

std::vector<Element> shrink_witness(const Ring& r, const std::vector<Element>& gens) {
  require_nonzero(r);
  const auto& zd = r.zero_divisor_mask();
  std::vector<std::uint32_t> ixs;
  ixs.reserve(gens.size());
  for (const auto& g : gens) {
    const std::size_t ix = r.index_of(g);
    if (!zd[ix]) throw PreconditionError("shrink_witness: generator is not a zero-divisor");
    ixs.push_back(static_cast<std::uint32_t>(ix));
  }
  if (min_nonzero_annihilator_members(r, ixs).has_value())
    throw PreconditionError("shrink_witness: the generated ideal has a nonzero annihilator");

  for (std::size_t i = 0; i < ixs.size();) {
    std::vector<std::uint32_t> trial;
    trial.reserve(ixs.size() - 1);
    for (std::size_t j = 0; j < ixs.size(); ++j)
      if (j != i) trial.push_back(ixs[j]);
    // dropping a generator is sound only if the smaller ideal still has
    // annihilator zero; test against the generated ideal, not the list
    if (!min_nonzero_annihilator_members(r, ideal_from_indices(r, trial).member_indices())
             .has_value()) {
      ixs = std::move(trial);
    } else {
      ++i;
    }
  }
  std::vector<Element> out;
  out.reserve(ixs.size());
  for (auto ix : ixs) out.push_back(r.element(ix));
  return out;
}

PropertyReport is_A_ring(const Ring& r, Method method, const Caps& caps) {
  require_nonzero(r);
  const auto start = std::chrono::steady_clock::now();

  PropertyReport report;
  report.ring = r;
  report.ring_descriptor = r.descriptor();
  report.property = RingProperty::annihilator_condition;
  report.method = method;
  report.convention_note = kConventionNote;
  report.verdict = true;

  std::vector<Ideal> maximals;
  if (method == Method::fast) {
    // annihilators only shrink as ideals grow, so the maximal ideals decide
    // the whole proper-ideal family
    maximals = maximal_ideals(r);
    report.ideals_examined = maximals.size();
  } else {
    const std::vector<Ideal> lattice = all_ideals(r, caps);
    const auto& zd = r.zero_divisor_mask();
    for (const auto& i : lattice) {
      bool inside_zd = true;
      for (auto m : i.member_indices()) {
        if (!zd[m]) {
          inside_zd = false;
          break;
        }
      }
      if (!inside_zd) continue;
      ++report.ideals_examined;
      if (!min_nonzero_annihilator_members(r, i.member_indices()).has_value()) {
        report.verdict = false;
        FailureWitness fw;
        std::vector<Element> gens;
        for (auto g : minimal_generators(i)) gens.push_back(r.element(g));
        for (const auto& e : shrink_witness(r, gens))
          fw.generators.push_back(static_cast<std::uint32_t>(r.index_of(e)));
        fw.generator_displays = displays_of(r, fw.generators);
        fw.ideal_size = i.member_count();
        report.failure = std::move(fw);
        break;
      }
    }
    maximals = lattice_maximal_ideals(lattice);
  }

  for (const auto& m : maximals) {
    auto ann = min_nonzero_annihilator_members(r, m.member_indices());
    if (!ann.has_value()) {
      if (method == Method::fast) {
        report.verdict = false;
        FailureWitness fw;
        std::vector<Element> gens;
        for (auto g : minimal_generators(m)) gens.push_back(r.element(g));
        for (const auto& e : shrink_witness(r, gens))
          fw.generators.push_back(static_cast<std::uint32_t>(r.index_of(e)));
        fw.generator_displays = displays_of(r, fw.generators);
        fw.ideal_size = m.member_count();
        report.failure = std::move(fw);
      }
      continue;
    }
    AnnihilatorWitness w;
    w.ideal_size = m.member_count();
    fill_generators(r, m, w, caps);
    w.annihilating_element = static_cast<std::uint32_t>(*ann);
    w.annihilating_display = r.display_ix(*ann);
    report.witnesses.push_back(std::move(w));
  }
  sort_witnesses(report.witnesses);

  report.time_ms = elapsed_ms(start);
  return report;
}

PropertyReport is_strong_A_ring(const Ring& r, Method method, const Caps& caps) {
  require_nonzero(r);
  const auto start = std::chrono::steady_clock::now();

  PropertyReport report;
  report.ring = r;
  report.ring_descriptor = r.descriptor();
  report.property = RingProperty::strong_annihilator_condition;
  report.method = method;
  report.convention_note = kConventionNote;
  report.verdict = true;

  const auto& zd_mask = r.zero_divisor_mask();
  std::vector<std::uint32_t> zd;
  for (std::size_t x = 0; x < r.size(); ++x)
    if (zd_mask[x]) zd.push_back(static_cast<std::uint32_t>(x));

  auto fast_failure = [&]() {
    // the primitive idempotents are zero-divisors whose ideal is the whole
    // ring; greedy shrinking keeps the witness irredundant
    std::vector<Element> gens;
    for (auto e : idempotent_atoms(r)) gens.push_back(r.element(e));
    FailureWitness fw;
    for (const auto& e : shrink_witness(r, gens))
      fw.generators.push_back(static_cast<std::uint32_t>(r.index_of(e)));
    fw.generator_displays = displays_of(r, fw.generators);
    fw.ideal_size = ideal_from_indices(r, fw.generators).member_count();
    return fw;
  };

  if (method == Method::fast) {
    report.ideals_examined = 1;
    // every ideal generated by zero-divisors sits inside <Z(R)>, so that one
    // ideal decides the property
    auto ann = min_nonzero_annihilator_members(r, zd);
    if (ann.has_value()) {
      Ideal zideal = ideal_from_indices(r, zd);
      AnnihilatorWitness w;
      w.ideal_size = zideal.member_count();
      fill_generators(r, zideal, w, caps);
      w.annihilating_element = static_cast<std::uint32_t>(*ann);
      w.annihilating_display = r.display_ix(*ann);
      report.witnesses.push_back(std::move(w));
    } else {
      report.verdict = false;
      report.failure = fast_failure();
    }
  } else {
    // an ideal qualifies exactly when its zero-divisor members already
    // generate it
    const std::vector<Ideal> lattice = all_ideals(r, caps);
    for (const auto& i : lattice) {
      std::vector<std::uint32_t> zd_members;
      for (auto m : i.member_indices())
        if (zd_mask[m]) zd_members.push_back(m);
      if (!ideal_equals(ideal_from_indices(r, zd_members), i)) continue;
      ++report.ideals_examined;
      auto ann = min_nonzero_annihilator_members(r, i.member_indices());
      if (ann.has_value()) {
        AnnihilatorWitness w;
        w.ideal_size = i.member_count();
        fill_generators(r, i, w, caps);
        w.annihilating_element = static_cast<std::uint32_t>(*ann);
        w.annihilating_display = r.display_ix(*ann);
        report.witnesses.push_back(std::move(w));
        continue;
      }
      if (report.verdict) {
        report.verdict = false;
        FailureWitness fw;
        // witness generators must themselves be zero-divisors, so the greedy
        // pick runs over the ideal's zero-divisor members only
        std::vector<Element> gens;
        {
          std::vector<std::uint32_t> picked;
          for (auto m : zd_members) {
            if (ideal_from_indices(r, picked).contains_ix(m)) continue;
            picked.push_back(m);
          }
          for (auto g : picked) gens.push_back(r.element(g));
        }
        for (const auto& e : shrink_witness(r, gens))
          fw.generators.push_back(static_cast<std::uint32_t>(r.index_of(e)));
        fw.generator_displays = displays_of(r, fw.generators);
        fw.ideal_size = i.member_count();
        report.failure = std::move(fw);
      }
    }
    if (report.verdict) {
      // keep only the top witness so both methods describe the same ideal:
      // the ideal generated by all zero-divisors is the unique largest one
      std::optional<AnnihilatorWitness> top;
      for (auto& w : report.witnesses)
        if (!top.has_value() || w.ideal_size > top->ideal_size) top = std::move(w);
      report.witnesses.clear();
      if (top.has_value()) report.witnesses.push_back(std::move(*top));
    } else {
      report.witnesses.clear();
    }
  }
  sort_witnesses(report.witnesses);

  report.time_ms = elapsed_ms(start);
  return report;
}

}  // namespace finring
