#include "finring/harness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "finring/classify.hpp"
#include "finring/expr.hpp"

namespace finring {

namespace {

const char* kNoteFreeExtension =
    "Finite scope: free modules here have finite rank; the rank is part of the instance.";
const char* kNoteFieldExtension =
    "Finite scope: a finite domain is a field and a torsion-free module over it is free, so "
    "instances range over finite fields and finite ranks.";
const char* kNoteDuplicationTransfer =
    "Finite scope: an ideal of a finite ring containing a regular element is the whole ring, "
    "so the regular-ideal biconditional is exercised only at I = R.";
const char* kNoteProduct =
    "Finite scope: the classical two-factor instance lives over a polynomial ring; finite "
    "instances realize the same idempotent mechanism over finite fields and residue rings.";
const char* kNoteCoincidence =
    "Scope: with I * I = 0 the duplication along I and the square-zero extension by I define "
    "the same operations; the check compares both tables entry by entry.";
const char* kNoteReduced =
    "Finite scope: a finite domain is a field, whose only ideals are zero and the whole ring.";

std::string bool_str(bool b) { return b ? "true" : "false"; }

bool verdict_of(const Ring& r, RingProperty p, Method m, const Caps& caps) {
  return p == RingProperty::annihilator_condition ? is_A_ring(r, m, caps).verdict
                                                  : is_strong_A_ring(r, m, caps).verdict;
}

/// Runs the jobs across a thread pool and keeps the results in job order.
/// The first exception, by job index, is rethrown after all threads join.
std::vector<CheckResult> run_jobs(std::vector<std::function<CheckResult()>> jobs) {
  std::vector<CheckResult> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), jobs.size());
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        results[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

bool pow_fits(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base == 0 || v > cap / base) return false;
    v *= base;
  }
  return true;
}

}  // namespace

std::vector<std::size_t> CorpusSpec::effective_moduli() const {
  if (!moduli.empty()) return moduli;
  std::vector<std::size_t> out;
  for (std::size_t m = 2; m <= 27; ++m) out.push_back(m);
  return out;
}

namespace {

/// Corpus accumulator: keeps insertion order, drops candidates isomorphic to
/// an accepted ring of the same size (small sizes) or sharing a descriptor.
class CorpusBuilder {
 public:
  CorpusBuilder(const CorpusSpec& spec, const Caps& caps) : spec_(spec), caps_(caps) {}

  bool add(const Ring& r, std::size_t level) {
    const std::size_t n = r.size();
    if (n < 2 || n > spec_.max_size) return false;
    auto& bucket = by_size_[n];
    const bool use_iso = n <= spec_.iso_dedup_max && n <= caps_.iso_max;
    for (std::size_t ix : bucket) {
      const Ring& have = rings_[ix];
      if (have.descriptor() == r.descriptor()) return false;
      if (use_iso && ring_isomorphic(have, r, caps_)) return false;
    }
    bucket.push_back(rings_.size());
    rings_.push_back(r);
    levels_.push_back(level);
    return true;
  }

  const std::vector<Ring>& rings() const { return rings_; }
  std::size_t level_of(std::size_t ix) const { return levels_[ix]; }

 private:
  const CorpusSpec& spec_;
  const Caps& caps_;
  std::vector<Ring> rings_;
  std::vector<std::size_t> levels_;
  std::map<std::size_t, std::vector<std::size_t>> by_size_;
};

}  // namespace

std::vector<Ring> generate_corpus(const CorpusSpec& spec, const Caps& caps) {
  CorpusBuilder out(spec, caps);
  for (std::size_t m : spec.effective_moduli())
    if (m >= 2 && m <= spec.max_size) out.add(zmod(m, caps), 1);

  const std::vector<std::vector<long long>> polys = {{0, 0, 1}, {0, 0, 0, 1}, {1, 1, 1}};

  for (std::size_t level = 2; level <= spec.depth; ++level) {
    // snapshot: constructions at this level draw on rings of depth < level
    // only, with at least one operand of depth exactly level - 1
    const std::size_t snapshot = out.rings().size();
    for (std::size_t ix = 0; ix < snapshot; ++ix) {
      if (out.level_of(ix) != level - 1) continue;
      const Ring r = out.rings()[ix];
      const std::size_t n = r.size();

      for (const auto& p : polys) {
        if (!pow_fits(n, p.size() - 1, spec.max_size)) continue;
        out.add(poly_quotient_ints(r, p, caps), level);
      }

      if (n <= caps.lattice_max) {
        const std::vector<Ideal> ideals = all_ideals(r, caps);
        for (const auto& i : ideals) {
          const std::size_t isz = i.member_count();
          if (n / isz >= 2 && isz > 1) out.add(quotient(r, i, caps), level);
          if (n * isz <= spec.max_size) out.add(duplication(r, i, caps), level);
          if (n * (n / isz) <= spec.max_size)
            out.add(idealization(r, module_quotient(r, i, caps), caps), level);
        }
      }

      for (std::size_t k = 1; k <= 2; ++k) {
        if (!pow_fits(n, k + 1, spec.max_size)) continue;
        out.add(idealization(r, module_free(r, k, caps), caps), level);
      }
    }

    for (std::size_t a = 0; a < snapshot; ++a) {
      for (std::size_t b = a; b < snapshot; ++b) {
        if (std::max(out.level_of(a), out.level_of(b)) != level - 1) continue;
        const std::size_t sz = out.rings()[a].size() * out.rings()[b].size();
        if (sz > spec.max_size) continue;
        out.add(product(out.rings()[a], out.rings()[b], caps), level);
      }
    }
  }

  std::vector<Ring> corpus = out.rings();
  std::sort(corpus.begin(), corpus.end(), [](const Ring& a, const Ring& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.descriptor() < b.descriptor();
  });
  return corpus;
}

CheckResult check_free_extension_transfer(const Ring& a, std::size_t k, Method method,
                                          const Caps& caps) {
  CheckResult res;
  res.check_id = "thm2.2";
  res.instance = "A=" + a.descriptor() + ";k=" + std::to_string(k);
  res.note = kNoteFreeExtension;

  const Ring ext = idealization(a, module_free(a, k, caps), caps);
  const bool base_a = verdict_of(a, RingProperty::annihilator_condition, method, caps);
  const bool base_s = verdict_of(a, RingProperty::strong_annihilator_condition, method, caps);
  const bool ext_a = verdict_of(ext, RingProperty::annihilator_condition, method, caps);
  const bool ext_s = verdict_of(ext, RingProperty::strong_annihilator_condition, method, caps);

  res.details = {{"base", a.descriptor()},
                 {"extension", ext.descriptor()},
                 {"extension_size", std::to_string(ext.size())},
                 {"base_is_A", bool_str(base_a)},
                 {"extension_is_A", bool_str(ext_a)},
                 {"base_is_strong_A", bool_str(base_s)},
                 {"extension_is_strong_A", bool_str(ext_s)}};
  res.holds = base_a == ext_a && base_s == ext_s;
  if (!res.holds)
    res.counterexample = "base and extension disagree: A verdicts " + bool_str(base_a) + "/" +
                         bool_str(ext_a) + ", strong verdicts " + bool_str(base_s) + "/" +
                         bool_str(ext_s);
  return res;
}

CheckResult check_field_free_extension(const Ring& k_field, std::size_t n, Method method,
                                       const Caps& caps) {
  if (!is_field(k_field))
    throw PreconditionError("field extension check needs a field base, got " +
                            k_field.descriptor());
  CheckResult res;
  res.check_id = "lem2.6";
  res.instance = "K=" + k_field.descriptor() + ";n=" + std::to_string(n);
  res.note = kNoteFieldExtension;

  const Ring ext = idealization(k_field, module_free(k_field, n, caps), caps);
  const bool ext_a = verdict_of(ext, RingProperty::annihilator_condition, method, caps);
  const bool ext_s = verdict_of(ext, RingProperty::strong_annihilator_condition, method, caps);

  res.details = {{"field", k_field.descriptor()},
                 {"extension", ext.descriptor()},
                 {"extension_size", std::to_string(ext.size())},
                 {"extension_is_A", bool_str(ext_a)},
                 {"extension_is_strong_A", bool_str(ext_s)}};
  res.holds = ext_a && ext_s;
  if (!res.holds)
    res.counterexample = "extension of a field by a free module lost a property: A=" +
                         bool_str(ext_a) + ", strong=" + bool_str(ext_s);
  return res;
}

CheckResult check_duplication_transfer(const Ring& r, const Ideal& i, Method method,
                                       const Caps& caps) {
  CheckResult res;
  res.check_id = "thm3.1";
  res.instance = "R=" + r.descriptor() + ";I=" + ideal_literal(i);
  res.note = kNoteDuplicationTransfer;

  const Ring dup = duplication(r, i, caps);
  const bool base_a = verdict_of(r, RingProperty::annihilator_condition, method, caps);
  const bool base_s = verdict_of(r, RingProperty::strong_annihilator_condition, method, caps);
  const bool dup_a = verdict_of(dup, RingProperty::annihilator_condition, method, caps);
  const bool dup_s = verdict_of(dup, RingProperty::strong_annihilator_condition, method, caps);
  const bool regular = is_regular_ideal(r, i);

  const bool strong_transfers = !dup_s || base_s;
  const bool plain_transfers = !dup_a || base_a;
  const bool regular_iff = !regular || dup_a == base_a;

  res.details = {{"base", r.descriptor()},
                 {"duplication", dup.descriptor()},
                 {"duplication_size", std::to_string(dup.size())},
                 {"ideal_is_regular", bool_str(regular)},
                 {"base_is_A", bool_str(base_a)},
                 {"duplication_is_A", bool_str(dup_a)},
                 {"base_is_strong_A", bool_str(base_s)},
                 {"duplication_is_strong_A", bool_str(dup_s)}};
  res.holds = strong_transfers && plain_transfers && regular_iff;
  if (!res.holds) {
    if (!strong_transfers)
      res.counterexample = "duplication has the strong property but the base does not";
    else if (!plain_transfers)
      res.counterexample = "duplication has the annihilator property but the base does not";
    else
      res.counterexample =
          "regular ideal, yet base and duplication disagree on the annihilator property";
  }
  return res;
}

CheckResult check_product_transfer(const Ring& r1, const Ring& r2, Method method,
                                   const Caps& caps) {
  CheckResult res;
  res.check_id = "ex2.1";
  res.instance = "R1=" + r1.descriptor() + ";R2=" + r2.descriptor();
  res.note = kNoteProduct;

  const Ring prod = product(r1, r2, caps);
  const bool a1 = verdict_of(r1, RingProperty::annihilator_condition, method, caps);
  const bool a2 = verdict_of(r2, RingProperty::annihilator_condition, method, caps);
  const PropertyReport prod_a = is_A_ring(prod, method, caps);
  const PropertyReport prod_s = is_strong_A_ring(prod, method, caps);

  const bool preserves = !(a1 && a2) || prod_a.verdict;
  const bool never_strong = !prod_s.verdict;

  std::string witness;
  if (prod_s.failure.has_value()) {
    for (std::size_t ix = 0; ix < prod_s.failure->generator_displays.size(); ++ix) {
      if (ix) witness += ", ";
      witness += prod_s.failure->generator_displays[ix];
    }
  }
  res.details = {{"product", prod.descriptor()},
                 {"product_size", std::to_string(prod.size())},
                 {"left_is_A", bool_str(a1)},
                 {"right_is_A", bool_str(a2)},
                 {"product_is_A", bool_str(prod_a.verdict)},
                 {"product_is_strong_A", bool_str(prod_s.verdict)},
                 {"strong_failure_generators", witness}};
  res.holds = preserves && never_strong;
  if (!res.holds) {
    res.counterexample = preserves
                             ? "a product of two nonzero rings reported the strong property"
                             : "both factors have the annihilator property but the product lost it";
  }
  return res;
}

CheckResult check_idealization_coincidence(const Ring& r, const Ideal& i, const Caps& caps) {
  for (auto x : i.member_indices())
    for (auto y : i.member_indices())
      if (r.mul_ix(x, y) != r.zero_ix())
        throw PreconditionError("coincidence check needs I * I = 0, but " + r.display_ix(x) +
                                " * " + r.display_ix(y) + " = " +
                                r.display_ix(r.mul_ix(x, y)) + " in " + r.descriptor());

  CheckResult res;
  res.check_id = "coincidence";
  res.instance = "R=" + r.descriptor() + ";I=" + ideal_literal(i);
  res.note = kNoteCoincidence;

  const Ring dup = duplication(r, i, caps);
  const Ring ext = idealization(r, module_from_ideal(i, caps), caps);
  res.details = {{"duplication", dup.descriptor()},
                 {"idealization", ext.descriptor()},
                 {"size", std::to_string(dup.size())}};

  res.holds = dup.size() == ext.size();
  for (std::size_t x = 0; res.holds && x < dup.size(); ++x) {
    for (std::size_t y = x; y < dup.size(); ++y) {
      if (dup.mul_ix(x, y) != ext.mul_ix(x, y)) {
        res.holds = false;
        res.counterexample = "multiplication differs at (" + std::to_string(x) + ", " +
                             std::to_string(y) + "): " + std::to_string(dup.mul_ix(x, y)) +
                             " vs " + std::to_string(ext.mul_ix(x, y));
        break;
      }
      if (dup.add_ix(x, y) != ext.add_ix(x, y)) {
        res.holds = false;
        res.counterexample = "addition differs at (" + std::to_string(x) + ", " +
                             std::to_string(y) + ")";
        break;
      }
    }
  }
  res.details.emplace_back("tables_identical", bool_str(res.holds));
  return res;
}

CheckResult check_duplication_reduced(const Ring& k_field, const Ideal& i, const Caps& caps) {
  if (!is_field(k_field))
    throw PreconditionError("reducedness check needs a field base, got " + k_field.descriptor());
  CheckResult res;
  res.check_id = "reduced";
  res.instance = "K=" + k_field.descriptor() + ";I=" + ideal_literal(i);
  res.note = kNoteReduced;

  const Ring dup = duplication(k_field, i, caps);
  res.holds = is_reduced(dup);
  res.details = {{"duplication", dup.descriptor()},
                 {"duplication_size", std::to_string(dup.size())},
                 {"reduced", bool_str(res.holds)}};
  if (!res.holds) res.counterexample = "duplication of a field reported a nonzero nilpotent";
  return res;
}

SearchReport search_duplication_strong_converse(const CorpusSpec& spec, Method method,
                                                std::size_t dup_size_cap, const Caps& caps) {
  SearchReport report;
  report.corpus = spec;
  report.dup_size_cap = dup_size_cap;

  const std::vector<Ring> corpus = generate_corpus(spec, caps);
  report.corpus_rings = corpus.size();

  for (const Ring& r : corpus) {
    const bool base_strong =
        verdict_of(r, RingProperty::strong_annihilator_condition, method, caps);
    for (const Ideal& i : all_ideals(r, caps)) {
      if (!is_proper(i)) continue;
      if (r.size() * i.member_count() > dup_size_cap) continue;
      ++report.instances_examined;
      if (!base_strong) continue;  // a hit needs a strong base by definition
      const Ring dup = duplication(r, i, caps);
      if (!verdict_of(dup, RingProperty::strong_annihilator_condition, method, caps))
        report.hits.push_back({r.descriptor(), ideal_literal(i)});
    }
  }
  return report;
}

std::vector<CheckResult> run_check_family(const std::string& check_id,
                                          const std::vector<Ring>& corpus, Method method,
                                          const Caps& caps) {
  std::vector<std::function<CheckResult()>> jobs;

  if (check_id == "thm2.2") {
    for (const Ring& a : corpus) {
      if (a.size() > 16) continue;
      for (std::size_t k = 1; k <= 2; ++k) {
        if (!pow_fits(a.size(), k + 1, 4096)) continue;
        jobs.emplace_back(
            [a, k, method, &caps] { return check_free_extension_transfer(a, k, method, caps); });
      }
    }
  } else if (check_id == "lem2.6") {
    for (const Ring& f : corpus) {
      if (f.size() > 16 || !is_field(f)) continue;
      for (std::size_t n = 1; n <= 3; ++n) {
        if (!pow_fits(f.size(), n + 1, 4096)) continue;
        jobs.emplace_back(
            [f, n, method, &caps] { return check_field_free_extension(f, n, method, caps); });
      }
    }
  } else if (check_id == "thm3.1") {
    for (const Ring& r : corpus) {
      if (r.size() > 16) continue;
      for (const Ideal& i : all_ideals(r, caps))
        jobs.emplace_back(
            [r, i, method, &caps] { return check_duplication_transfer(r, i, method, caps); });
    }
  } else if (check_id == "ex2.1") {
    for (std::size_t a = 0; a < corpus.size(); ++a) {
      if (corpus[a].size() > 16) continue;
      for (std::size_t b = a; b < corpus.size(); ++b) {
        if (corpus[b].size() > 16 || corpus[a].size() * corpus[b].size() > 256) continue;
        const Ring r1 = corpus[a], r2 = corpus[b];
        jobs.emplace_back(
            [r1, r2, method, &caps] { return check_product_transfer(r1, r2, method, caps); });
      }
    }
  } else if (check_id == "coincidence") {
    for (const Ring& r : corpus) {
      if (r.size() > 64) continue;
      for (const Ideal& i : all_ideals(r, caps)) {
        if (r.size() * i.member_count() > 256) continue;
        bool square_zero = true;
        for (auto x : i.member_indices()) {
          for (auto y : i.member_indices())
            if (r.mul_ix(x, y) != r.zero_ix()) {
              square_zero = false;
              break;
            }
          if (!square_zero) break;
        }
        if (!square_zero) continue;
        jobs.emplace_back(
            [r, i, &caps] { return check_idealization_coincidence(r, i, caps); });
      }
    }
  } else if (check_id == "reduced") {
    for (const Ring& f : corpus) {
      if (f.size() > 64 || !is_field(f)) continue;
      for (const Ideal& i : all_ideals(f, caps))
        jobs.emplace_back([f, i, &caps] { return check_duplication_reduced(f, i, caps); });
    }
  } else {
    throw PreconditionError("unknown check id: " + check_id);
  }

  std::vector<CheckResult> results = run_jobs(std::move(jobs));
  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.instance < b.instance; });
  return results;
}

namespace {

std::map<std::string, std::string> parse_instance(const std::string& instance) {
  std::map<std::string, std::string> kv;
  std::size_t pos = 0;
  while (pos < instance.size()) {
    std::size_t semi = instance.find(';', pos);
    if (semi == std::string::npos) semi = instance.size();
    const std::string part = instance.substr(pos, semi - pos);
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos || eq == 0)
      throw PreconditionError("malformed instance string: " + instance);
    kv[part.substr(0, eq)] = part.substr(eq + 1);
    pos = semi + 1;
  }
  return kv;
}

std::string need(const std::map<std::string, std::string>& kv, const std::string& key,
                 const std::string& instance) {
  auto it = kv.find(key);
  if (it == kv.end())
    throw PreconditionError("instance string lacks key " + key + ": " + instance);
  return it->second;
}

}  // namespace

CheckResult replay(const CheckResult& result, const Caps& caps) {
  const auto kv = parse_instance(result.instance);
  auto ring_of = [&](const std::string& key) {
    return build_ring(*parse_ring_expr(need(kv, key, result.instance)), caps);
  };
  auto ideal_of = [&](const Ring& r, const std::string& key) {
    return elaborate_ideal(r, parse_ideal_literal(need(kv, key, result.instance)));
  };

  if (result.check_id == "thm2.2") {
    const Ring a = ring_of("A");
    return check_free_extension_transfer(a, std::stoull(need(kv, "k", result.instance)),
                                         Method::fast, caps);
  }
  if (result.check_id == "lem2.6") {
    const Ring f = ring_of("K");
    return check_field_free_extension(f, std::stoull(need(kv, "n", result.instance)),
                                      Method::fast, caps);
  }
  if (result.check_id == "thm3.1") {
    const Ring r = ring_of("R");
    return check_duplication_transfer(r, ideal_of(r, "I"), Method::fast, caps);
  }
  if (result.check_id == "ex2.1")
    return check_product_transfer(ring_of("R1"), ring_of("R2"), Method::fast, caps);
  if (result.check_id == "coincidence") {
    const Ring r = ring_of("R");
    return check_idealization_coincidence(r, ideal_of(r, "I"), caps);
  }
  if (result.check_id == "reduced") {
    const Ring f = ring_of("K");
    return check_duplication_reduced(f, ideal_of(f, "I"), caps);
  }
  throw PreconditionError("unknown check id: " + result.check_id);
}

std::vector<std::string> finite_analog_notes() {
  return {
      kNoteFreeExtension,
      kNoteFieldExtension,
      kNoteDuplicationTransfer,
      kNoteProduct,
      kNoteCoincidence,
      kNoteReduced,
      "Finite scope: power series rings have no finite image; local behaviour is exercised "
      "on finite local rings instead.",
      "Finite scope: every finite commutative ring satisfies the annihilator condition, so "
      "no failing instance can appear in any corpus; the known failing rings are "
      "non-Noetherian and infinite.",
      "Finite scope: a finite ring equals its own total ring of quotients, so extensions by "
      "the total quotient ring coincide with free rank-1 extensions.",
  };
}

}  // namespace finring
