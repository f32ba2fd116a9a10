#include "finring/axioms.hpp"

#include <random>

namespace finring {

namespace {

struct AxiomEval {
  const char* name;
  // arity 2 axioms ignore c
  std::size_t arity;
  bool (*holds)(const Ring&, std::size_t, std::size_t, std::size_t);
  std::string (*render)(const Ring&, std::size_t, std::size_t, std::size_t);
};

std::string d(const Ring& r, std::size_t x) { return r.display_ix(x); }

const AxiomEval kAxioms[] = {
    {"add_commutative", 2,
     [](const Ring& r, std::size_t a, std::size_t b, std::size_t) {
       return r.add_ix(a, b) == r.add_ix(b, a);
     },
     [](const Ring& r, std::size_t a, std::size_t b, std::size_t) {
       return d(r, a) + " + " + d(r, b) + " != " + d(r, b) + " + " + d(r, a);
     }},
    {"add_associative", 3,
     [](const Ring& r, std::size_t a, std::size_t b, std::size_t c) {
       return r.add_ix(r.add_ix(a, b), c) == r.add_ix(a, r.add_ix(b, c));
     },
     [](const Ring& r, std::size_t a, std::size_t b, std::size_t c) {
       return "(" + d(r, a) + " + " + d(r, b) + ") + " + d(r, c) + " != " + d(r, a) + " + (" +
              d(r, b) + " + " + d(r, c) + ")";
     }},
    {"zero_identity", 1,
     [](const Ring& r, std::size_t a, std::size_t, std::size_t) {
       return r.add_ix(a, r.zero_ix()) == a;
     },
     [](const Ring& r, std::size_t a, std::size_t, std::size_t) {
       return d(r, a) + " + 0 != " + d(r, a);
     }},
    {"additive_inverse", 1,
     [](const Ring& r, std::size_t a, std::size_t, std::size_t) {
       return r.add_ix(a, r.neg_ix(a)) == r.zero_ix();
     },
     [](const Ring& r, std::size_t a, std::size_t, std::size_t) {
       return d(r, a) + " + (-" + d(r, a) + ") != 0";
     }},
    {"mul_commutative", 2,
     [](const Ring& r, std::size_t a, std::size_t b, std::size_t) {
       return r.mul_ix(a, b) == r.mul_ix(b, a);
     },
     [](const Ring& r, std::size_t a, std::size_t b, std::size_t) {
       return d(r, a) + " * " + d(r, b) + " != " + d(r, b) + " * " + d(r, a);
     }},
    {"mul_associative", 3,
     [](const Ring& r, std::size_t a, std::size_t b, std::size_t c) {
       return r.mul_ix(r.mul_ix(a, b), c) == r.mul_ix(a, r.mul_ix(b, c));
     },
     [](const Ring& r, std::size_t a, std::size_t b, std::size_t c) {
       return "(" + d(r, a) + " * " + d(r, b) + ") * " + d(r, c) + " != " + d(r, a) + " * (" +
              d(r, b) + " * " + d(r, c) + ")";
     }},
    {"one_identity", 1,
     [](const Ring& r, std::size_t a, std::size_t, std::size_t) {
       return r.mul_ix(a, r.one_ix()) == a;
     },
     [](const Ring& r, std::size_t a, std::size_t, std::size_t) {
       return d(r, a) + " * 1 != " + d(r, a);
     }},
    {"left_distributive", 3,
     [](const Ring& r, std::size_t a, std::size_t b, std::size_t c) {
       return r.mul_ix(a, r.add_ix(b, c)) == r.add_ix(r.mul_ix(a, b), r.mul_ix(a, c));
     },
     [](const Ring& r, std::size_t a, std::size_t b, std::size_t c) {
       return d(r, a) + " * (" + d(r, b) + " + " + d(r, c) + ") != " + d(r, a) + " * " +
              d(r, b) + " + " + d(r, a) + " * " + d(r, c);
     }},
    {"right_distributive", 3,
     [](const Ring& r, std::size_t a, std::size_t b, std::size_t c) {
       return r.mul_ix(r.add_ix(a, b), c) == r.add_ix(r.mul_ix(a, c), r.mul_ix(b, c));
     },
     [](const Ring& r, std::size_t a, std::size_t b, std::size_t c) {
       return "(" + d(r, a) + " + " + d(r, b) + ") * " + d(r, c) + " != " + d(r, a) + " * " +
              d(r, c) + " + " + d(r, b) + " * " + d(r, c);
     }},
};

}  // namespace

AxiomReport check_ring_axioms(const Ring& r, AxiomMode mode, std::uint64_t seed,
                              const Caps& caps) {
  AxiomReport report;
  report.ring = r.descriptor();
  report.size = r.size();

  const std::size_t n = r.size();
  bool full = mode.kind == AxiomMode::Kind::full;
  if (full && n > caps.axiom_full_max) {
    full = false;
    report.downgraded = true;
  }
  report.mode = full ? AxiomMode::Kind::full : AxiomMode::Kind::sampled;

  for (const auto& ax : kAxioms) report.checks.push_back({ax.name, true, std::nullopt});

  auto record = [&](std::size_t which, std::size_t a, std::size_t b, std::size_t c) {
    auto& chk = report.checks[which];
    if (!chk.pass) return;  // keep the first witness
    chk.pass = false;
    chk.witness = AxiomWitness{{a, b, c}, kAxioms[which].render(r, a, b, c)};
    report.all_pass = false;
  };

  if (full) {
    for (std::size_t w = 0; w < std::size(kAxioms); ++w) {
      const auto& ax = kAxioms[w];
      if (ax.arity == 1) {
        for (std::size_t a = 0; a < n; ++a)
          if (!ax.holds(r, a, 0, 0)) {
            record(w, a, 0, 0);
            break;
          }
      } else if (ax.arity == 2) {
        bool done = false;
        for (std::size_t a = 0; a < n && !done; ++a)
          for (std::size_t b = 0; b < n && !done; ++b)
            if (!ax.holds(r, a, b, 0)) {
              record(w, a, b, 0);
              done = true;
            }
      } else {
        bool done = false;
        for (std::size_t a = 0; a < n && !done; ++a)
          for (std::size_t b = 0; b < n && !done; ++b)
            for (std::size_t c = 0; c < n && !done; ++c)
              if (!ax.holds(r, a, b, c)) {
                record(w, a, b, c);
                done = true;
              }
      }
    }
  } else {
    std::size_t k = mode.samples != 0 ? mode.samples : 10 * n;
    report.samples = k;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < k; ++s) {
      std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      for (std::size_t w = 0; w < std::size(kAxioms); ++w) {
        const auto& ax = kAxioms[w];
        if (!ax.holds(r, a, b, c)) record(w, a, b, c);
      }
    }
  }

  return report;
}

}  // namespace finring
