#include "finring/module.hpp"

#include <algorithm>
#include <random>

#include "finring/errors.hpp"

namespace finring {

namespace {

// ModuleRep indices must place zero at 0. Rings built by the library already
// index their zero at 0, but table-backed fixtures need not, so digit codecs
// go through an involution swapping 0 with the ring's zero index.
struct ZeroSwap {
  std::size_t z = 0;
  std::size_t fold(std::size_t x) const { return x == 0 ? z : (x == z ? 0 : x); }
};

class FreeRep final : public ModuleRep {
 public:
  FreeRep(Ring base, std::size_t rank) : base_(std::move(base)), rank_(rank) {
    swap_.z = base_.zero_ix();
    size_ = 1;
    for (std::size_t i = 0; i < rank_; ++i) size_ *= base_.size();
  }

  std::size_t size() const override { return size_; }

  std::size_t add(std::size_t e, std::size_t f) const override {
    std::size_t out = 0, place = 1;
    const std::size_t n = base_.size();
    for (std::size_t i = 0; i < rank_; ++i) {
      const std::size_t a = swap_.fold(e % n), b = swap_.fold(f % n);
      out += swap_.fold(base_.add_ix(a, b)) * place;
      e /= n;
      f /= n;
      place *= n;
    }
    return out;
  }

  std::size_t neg(std::size_t e) const override {
    std::size_t out = 0, place = 1;
    const std::size_t n = base_.size();
    for (std::size_t i = 0; i < rank_; ++i) {
      out += swap_.fold(base_.neg_ix(swap_.fold(e % n))) * place;
      e /= n;
      place *= n;
    }
    return out;
  }

  std::size_t scalar(std::size_t a, std::size_t e) const override {
    std::size_t out = 0, place = 1;
    const std::size_t n = base_.size();
    for (std::size_t i = 0; i < rank_; ++i) {
      out += swap_.fold(base_.mul_ix(a, swap_.fold(e % n))) * place;
      e /= n;
      place *= n;
    }
    return out;
  }

  std::string display(std::size_t e) const override {
    if (rank_ == 0) return "0";
    const std::size_t n = base_.size();
    if (rank_ == 1) return base_.display_ix(swap_.fold(e % n));
    std::string out = "(";
    for (std::size_t i = 0; i < rank_; ++i) {
      if (i) out += ", ";
      out += base_.display_ix(swap_.fold(e % n));
      e /= n;
    }
    out += ")";
    return out;
  }

  ModuleKind kind() const override { return ModuleKind::free_of_rank; }

  std::size_t rank() const { return rank_; }

  std::vector<std::size_t> decode(std::size_t e) const {
    std::vector<std::size_t> out(rank_);
    const std::size_t n = base_.size();
    for (std::size_t i = 0; i < rank_; ++i) {
      out[i] = swap_.fold(e % n);
      e /= n;
    }
    return out;
  }

  std::size_t encode(const std::vector<std::size_t>& parts) const {
    if (parts.size() != rank_) throw PreconditionError("component count does not match rank");
    std::size_t out = 0, place = 1;
    for (std::size_t i = 0; i < rank_; ++i) {
      if (parts[i] >= base_.size()) throw PreconditionError("component index out of range");
      out += swap_.fold(parts[i]) * place;
      place *= base_.size();
    }
    return out;
  }

 private:
  Ring base_;
  std::size_t rank_;
  std::size_t size_;
  ZeroSwap swap_;
};

class QuotientModRep final : public ModuleRep {
 public:
  QuotientModRep(Ring base, Ideal ideal) : base_(std::move(base)), ideal_(std::move(ideal)) {
    const std::size_t n = base_.size();
    coset_of_.assign(n, SIZE_MAX);
    // coset 0 is the ideal itself; the rest follow in order of least member
    for (auto m : ideal_.member_indices()) coset_of_[m] = 0;
    rep_of_.push_back(base_.zero_ix());
    for (std::size_t x = 0; x < n; ++x) {
      if (coset_of_[x] != SIZE_MAX) continue;
      const std::size_t c = rep_of_.size();
      rep_of_.push_back(x);
      for (auto m : ideal_.member_indices()) coset_of_[base_.add_ix(x, m)] = c;
    }
  }

  std::size_t size() const override { return rep_of_.size(); }
  std::size_t add(std::size_t e, std::size_t f) const override {
    return coset_of_[base_.add_ix(rep_of_[e], rep_of_[f])];
  }
  std::size_t neg(std::size_t e) const override { return coset_of_[base_.neg_ix(rep_of_[e])]; }
  std::size_t scalar(std::size_t a, std::size_t e) const override {
    return coset_of_[base_.mul_ix(a, rep_of_[e])];
  }
  std::string display(std::size_t e) const override {
    return "[" + base_.display_ix(rep_of_[e]) + "]";
  }
  ModuleKind kind() const override { return ModuleKind::quotient_by_ideal; }

  const Ideal& ideal() const { return ideal_; }
  std::size_t coset_of(std::size_t base_ix) const { return coset_of_[base_ix]; }
  std::size_t rep_of(std::size_t e) const { return rep_of_[e]; }

 private:
  Ring base_;
  Ideal ideal_;
  std::vector<std::size_t> coset_of_;
  std::vector<std::size_t> rep_of_;
};

class IdealModRep final : public ModuleRep {
 public:
  explicit IdealModRep(Ideal ideal) : base_(ideal.ring()), ideal_(std::move(ideal)) {
    // ring zero first so module index 0 is the zero element, rest ascending
    member_.push_back(base_.zero_ix());
    for (auto m : ideal_.member_indices())
      if (m != base_.zero_ix()) member_.push_back(m);
    pos_.assign(base_.size(), SIZE_MAX);
    for (std::size_t e = 0; e < member_.size(); ++e) pos_[member_[e]] = e;
  }

  std::size_t size() const override { return member_.size(); }
  std::size_t add(std::size_t e, std::size_t f) const override {
    return pos_[base_.add_ix(member_[e], member_[f])];
  }
  std::size_t neg(std::size_t e) const override { return pos_[base_.neg_ix(member_[e])]; }
  std::size_t scalar(std::size_t a, std::size_t e) const override {
    return pos_[base_.mul_ix(a, member_[e])];
  }
  std::string display(std::size_t e) const override { return base_.display_ix(member_[e]); }
  ModuleKind kind() const override { return ModuleKind::ideal_members; }

  const Ideal& ideal() const { return ideal_; }
  std::size_t member(std::size_t e) const { return member_[e]; }

 private:
  Ring base_;
  Ideal ideal_;
  std::vector<std::size_t> member_;
  std::vector<std::size_t> pos_;
};

class DirectSumRep final : public ModuleRep {
 public:
  explicit DirectSumRep(std::vector<RingModule> parts) : parts_(std::move(parts)) {
    size_ = 1;
    for (const auto& p : parts_) size_ *= p.size();
  }

  std::size_t size() const override { return size_; }

  std::size_t add(std::size_t e, std::size_t f) const override {
    std::size_t out = 0, place = 1;
    for (const auto& p : parts_) {
      const std::size_t n = p.size();
      out += p.add_ix(e % n, f % n) * place;
      e /= n;
      f /= n;
      place *= n;
    }
    return out;
  }

  std::size_t neg(std::size_t e) const override {
    std::size_t out = 0, place = 1;
    for (const auto& p : parts_) {
      const std::size_t n = p.size();
      out += p.neg_ix(e % n) * place;
      e /= n;
      place *= n;
    }
    return out;
  }

  std::size_t scalar(std::size_t a, std::size_t e) const override {
    std::size_t out = 0, place = 1;
    for (const auto& p : parts_) {
      const std::size_t n = p.size();
      out += p.scalar_ix(a, e % n) * place;
      e /= n;
      place *= n;
    }
    return out;
  }

  std::string display(std::size_t e) const override {
    if (parts_.empty()) return "0";
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ", ";
      const std::size_t n = parts_[i].size();
      out += parts_[i].display_ix(e % n);
      e /= n;
    }
    out += ")";
    return out;
  }

  ModuleKind kind() const override { return ModuleKind::direct_sum; }

  const std::vector<RingModule>& parts() const { return parts_; }

  std::vector<std::size_t> decode(std::size_t e) const {
    std::vector<std::size_t> out(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      out[i] = e % parts_[i].size();
      e /= parts_[i].size();
    }
    return out;
  }

  std::size_t encode(const std::vector<std::size_t>& comps) const {
    if (comps.size() != parts_.size())
      throw PreconditionError("component count does not match summand count");
    std::size_t out = 0, place = 1;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (comps[i] >= parts_[i].size()) throw PreconditionError("component index out of range");
      out += comps[i] * place;
      place *= parts_[i].size();
    }
    return out;
  }

 private:
  std::vector<RingModule> parts_;
  std::size_t size_;
};

void check_universe(std::size_t size, const Caps& caps) {
  if (size > caps.universe_max) throw CapExceededError("universe_max", caps.universe_max, size);
}

const FreeRep& as_free(const RingModule& m) {
  if (m.kind() != ModuleKind::free_of_rank)
    throw PreconditionError("module is not free: " + m.descriptor());
  return static_cast<const FreeRep&>(m.rep());
}

const QuotientModRep& as_quotient(const RingModule& m) {
  if (m.kind() != ModuleKind::quotient_by_ideal)
    throw PreconditionError("module is not a quotient: " + m.descriptor());
  return static_cast<const QuotientModRep&>(m.rep());
}

const IdealModRep& as_ideal(const RingModule& m) {
  if (m.kind() != ModuleKind::ideal_members)
    throw PreconditionError("module does not carry ideal members: " + m.descriptor());
  return static_cast<const IdealModRep&>(m.rep());
}

const DirectSumRep& as_sum(const RingModule& m) {
  if (m.kind() != ModuleKind::direct_sum)
    throw PreconditionError("module is not a direct sum: " + m.descriptor());
  return static_cast<const DirectSumRep&>(m.rep());
}

}  // namespace

RingModule RingModule::create(std::string descriptor, Ring base,
                              std::unique_ptr<const ModuleRep> rep) {
  auto d = std::make_shared<detail::ModuleData>();
  d->descriptor = std::move(descriptor);
  d->base = std::move(base);
  d->size = rep->size();
  d->rep = std::move(rep);
  return RingModule(std::move(d));
}

RingModule module_free(const Ring& a, std::size_t rank, const Caps& caps) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    if (a.size() != 0 && size > caps.universe_max / a.size())
      throw CapExceededError("universe_max", caps.universe_max, caps.universe_max + 1);
    size *= a.size();
  }
  check_universe(size, caps);
  std::string desc = "Free(" + a.descriptor() + ", " + std::to_string(rank) + ")";
  return RingModule::create(std::move(desc), a, std::make_unique<FreeRep>(a, rank));
}

RingModule module_quotient(const Ring& a, const Ideal& i, const Caps& caps) {
  if (!a.same(i.ring()))
    throw RingMismatchError("module_quotient: ideal belongs to another ring");
  check_universe(a.size(), caps);
  std::string desc = "Mod(" + a.descriptor() + " / " + ideal_display(i) + ")";
  return RingModule::create(std::move(desc), a, std::make_unique<QuotientModRep>(a, i));
}

RingModule module_from_ideal(const Ideal& i, const Caps& caps) {
  check_universe(i.ring().size(), caps);
  std::string desc = "Mod(" + ideal_display(i) + " in " + i.ring().descriptor() + ")";
  return RingModule::create(std::move(desc), i.ring(), std::make_unique<IdealModRep>(i));
}

RingModule module_direct_sum(const std::vector<RingModule>& parts, const Caps& caps) {
  if (parts.empty()) throw PreconditionError("module_direct_sum needs at least one summand");
  const Ring& base = parts.front().base();
  std::size_t size = 1;
  std::string desc = "DirectSum(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!base.same(parts[i].base()))
      throw RingMismatchError("module_direct_sum: summands have different base rings");
    if (parts[i].size() != 0 && size > caps.universe_max / parts[i].size())
      throw CapExceededError("universe_max", caps.universe_max, caps.universe_max + 1);
    size *= parts[i].size();
    if (i) desc += ", ";
    desc += parts[i].descriptor();
  }
  desc += ")";
  check_universe(size, caps);
  std::vector<RingModule> copy = parts;
  return RingModule::create(std::move(desc), base, std::make_unique<DirectSumRep>(std::move(copy)));
}

std::size_t module_free_rank(const RingModule& m) { return as_free(m).rank(); }

std::size_t module_free_basis_ix(const RingModule& m, std::size_t slot) {
  const FreeRep& rep = as_free(m);
  if (slot >= rep.rank()) throw PreconditionError("basis slot out of range");
  std::vector<std::size_t> comps(rep.rank(), m.base().zero_ix());
  comps[slot] = m.base().one_ix();
  return rep.encode(comps);
}

const Ideal& module_quotient_ideal(const RingModule& m) { return as_quotient(m).ideal(); }

std::size_t module_quotient_rep_ix(const RingModule& m, std::size_t e) {
  const QuotientModRep& rep = as_quotient(m);
  if (e >= rep.size()) throw PreconditionError("module index out of range");
  return rep.rep_of(e);
}

std::size_t module_quotient_coset_ix(const RingModule& m, std::size_t base_ix) {
  const QuotientModRep& rep = as_quotient(m);
  if (base_ix >= m.base().size()) throw PreconditionError("base index out of range");
  return rep.coset_of(base_ix);
}

const Ideal& module_ideal_source(const RingModule& m) { return as_ideal(m).ideal(); }

std::size_t module_ideal_member_ix(const RingModule& m, std::size_t e) {
  const IdealModRep& rep = as_ideal(m);
  if (e >= rep.size()) throw PreconditionError("module index out of range");
  return rep.member(e);
}

const std::vector<RingModule>& module_direct_sum_parts(const RingModule& m) {
  return as_sum(m).parts();
}

std::vector<std::size_t> module_components(const RingModule& m, std::size_t e) {
  if (e >= m.size()) throw PreconditionError("module index out of range");
  if (m.kind() == ModuleKind::free_of_rank) return as_free(m).decode(e);
  if (m.kind() == ModuleKind::direct_sum) return as_sum(m).decode(e);
  throw PreconditionError("module has no component structure: " + m.descriptor());
}

std::size_t module_from_components(const RingModule& m, const std::vector<std::size_t>& parts) {
  if (m.kind() == ModuleKind::free_of_rank) return as_free(m).encode(parts);
  if (m.kind() == ModuleKind::direct_sum) return as_sum(m).encode(parts);
  throw PreconditionError("module has no component structure: " + m.descriptor());
}

namespace {

struct ModAxiom {
  const char* name;
  // slots: (a, b) ring indices, (e, f, g) module indices
  bool (*holds)(const Ring&, const RingModule&, std::size_t, std::size_t, std::size_t,
                std::size_t, std::size_t);
  std::string (*render)(const Ring&, const RingModule&, std::size_t, std::size_t, std::size_t,
                        std::size_t, std::size_t);
  // which slots matter, for full-mode loop shaping: 'r' ring, 'm' module, '.' unused
  const char* shape;
};

const ModAxiom kModAxioms[] = {
    {"add_commutative",
     [](const Ring&, const RingModule& m, std::size_t, std::size_t, std::size_t e, std::size_t f,
        std::size_t) { return m.add_ix(e, f) == m.add_ix(f, e); },
     [](const Ring&, const RingModule& m, std::size_t, std::size_t, std::size_t e, std::size_t f,
        std::size_t) {
       return m.display_ix(e) + " + " + m.display_ix(f) + " != " + m.display_ix(f) + " + " +
              m.display_ix(e);
     },
     "..mm."},
    {"add_associative",
     [](const Ring&, const RingModule& m, std::size_t, std::size_t, std::size_t e, std::size_t f,
        std::size_t g) { return m.add_ix(m.add_ix(e, f), g) == m.add_ix(e, m.add_ix(f, g)); },
     [](const Ring&, const RingModule& m, std::size_t, std::size_t, std::size_t e, std::size_t f,
        std::size_t g) {
       return "(" + m.display_ix(e) + " + " + m.display_ix(f) + ") + " + m.display_ix(g) +
              " != " + m.display_ix(e) + " + (" + m.display_ix(f) + " + " + m.display_ix(g) + ")";
     },
     "..mmm"},
    {"zero_identity",
     [](const Ring&, const RingModule& m, std::size_t, std::size_t, std::size_t e, std::size_t,
        std::size_t) { return m.add_ix(e, m.zero_ix()) == e; },
     [](const Ring&, const RingModule& m, std::size_t, std::size_t, std::size_t e, std::size_t,
        std::size_t) { return m.display_ix(e) + " + 0 != " + m.display_ix(e); },
     "..m.."},
    {"additive_inverse",
     [](const Ring&, const RingModule& m, std::size_t, std::size_t, std::size_t e, std::size_t,
        std::size_t) { return m.add_ix(e, m.neg_ix(e)) == m.zero_ix(); },
     [](const Ring&, const RingModule& m, std::size_t, std::size_t, std::size_t e, std::size_t,
        std::size_t) { return m.display_ix(e) + " + (-" + m.display_ix(e) + ") != 0"; },
     "..m.."},
    {"scalar_distributes_over_module_add",
     [](const Ring&, const RingModule& m, std::size_t a, std::size_t, std::size_t e, std::size_t f,
        std::size_t) {
       return m.scalar_ix(a, m.add_ix(e, f)) == m.add_ix(m.scalar_ix(a, e), m.scalar_ix(a, f));
     },
     [](const Ring& r, const RingModule& m, std::size_t a, std::size_t, std::size_t e,
        std::size_t f, std::size_t) {
       return r.display_ix(a) + " * (" + m.display_ix(e) + " + " + m.display_ix(f) + ") != " +
              r.display_ix(a) + " * " + m.display_ix(e) + " + " + r.display_ix(a) + " * " +
              m.display_ix(f);
     },
     "r.mm."},
    {"scalar_distributes_over_ring_add",
     [](const Ring& r, const RingModule& m, std::size_t a, std::size_t b, std::size_t e,
        std::size_t, std::size_t) {
       return m.scalar_ix(r.add_ix(a, b), e) == m.add_ix(m.scalar_ix(a, e), m.scalar_ix(b, e));
     },
     [](const Ring& r, const RingModule& m, std::size_t a, std::size_t b, std::size_t e,
        std::size_t, std::size_t) {
       return "(" + r.display_ix(a) + " + " + r.display_ix(b) + ") * " + m.display_ix(e) +
              " != " + r.display_ix(a) + " * " + m.display_ix(e) + " + " + r.display_ix(b) +
              " * " + m.display_ix(e);
     },
     "rrm.."},
    {"scalar_associative",
     [](const Ring& r, const RingModule& m, std::size_t a, std::size_t b, std::size_t e,
        std::size_t, std::size_t) {
       return m.scalar_ix(r.mul_ix(a, b), e) == m.scalar_ix(a, m.scalar_ix(b, e));
     },
     [](const Ring& r, const RingModule& m, std::size_t a, std::size_t b, std::size_t e,
        std::size_t, std::size_t) {
       return "(" + r.display_ix(a) + " * " + r.display_ix(b) + ") * " + m.display_ix(e) +
              " != " + r.display_ix(a) + " * (" + r.display_ix(b) + " * " + m.display_ix(e) + ")";
     },
     "rrm.."},
    {"one_acts_as_identity",
     [](const Ring& r, const RingModule& m, std::size_t, std::size_t, std::size_t e, std::size_t,
        std::size_t) { return m.scalar_ix(r.one_ix(), e) == e; },
     [](const Ring&, const RingModule& m, std::size_t, std::size_t, std::size_t e, std::size_t,
        std::size_t) { return "1 * " + m.display_ix(e) + " != " + m.display_ix(e); },
     "..m.."},
};

AxiomWitness mod_witness(const ModAxiom& ax, std::size_t a, std::size_t b, std::size_t e,
                         std::size_t f, std::size_t g, const Ring& r, const RingModule& m) {
  AxiomWitness w;
  const std::size_t vals[5] = {a, b, e, f, g};
  std::size_t slot = 0;
  for (std::size_t i = 0; i < 5 && slot < 3; ++i)
    if (ax.shape[i] != '.') w.triple[slot++] = vals[i];
  w.rendered = ax.render(r, m, a, b, e, f, g);
  return w;
}

}  // namespace

AxiomReport check_module_axioms(const RingModule& m, AxiomMode mode, std::uint64_t seed,
                                const Caps& caps) {
  const Ring& r = m.base();
  AxiomReport report;
  report.ring = m.descriptor();
  report.size = m.size();

  bool full = mode.kind == AxiomMode::Kind::full;
  if (full && (r.size() > caps.axiom_full_max || m.size() > caps.axiom_full_max)) {
    full = false;
    report.downgraded = true;
  }
  report.mode = full ? AxiomMode::Kind::full : AxiomMode::Kind::sampled;

  if (full) {
    for (const auto& ax : kModAxioms) {
      AxiomCheck check;
      check.axiom = ax.name;
      const char* s = ax.shape;
      const std::size_t la = s[0] == 'r' ? r.size() : 1;
      const std::size_t lb = s[1] == 'r' ? r.size() : 1;
      const std::size_t le = s[2] == 'm' ? m.size() : 1;
      const std::size_t lf = s[3] == 'm' ? m.size() : 1;
      const std::size_t lg = s[4] == 'm' ? m.size() : 1;
      for (std::size_t a = 0; a < la && check.pass; ++a)
        for (std::size_t b = 0; b < lb && check.pass; ++b)
          for (std::size_t e = 0; e < le && check.pass; ++e)
            for (std::size_t f = 0; f < lf && check.pass; ++f)
              for (std::size_t g = 0; g < lg && check.pass; ++g)
                if (!ax.holds(r, m, a, b, e, f, g)) {
                  check.pass = false;
                  check.witness = mod_witness(ax, a, b, e, f, g, r, m);
                }
      report.all_pass = report.all_pass && check.pass;
      report.checks.push_back(std::move(check));
    }
    return report;
  }

  const std::size_t samples = mode.samples ? mode.samples : 10 * m.size();
  report.samples = samples;
  for (const auto& ax : kModAxioms) {
    AxiomCheck check;
    check.axiom = ax.name;
    report.checks.push_back(std::move(check));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> ring_pick(0, r.size() - 1);
  std::uniform_int_distribution<std::size_t> mod_pick(0, m.size() - 1);
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t a = ring_pick(rng), b = ring_pick(rng);
    const std::size_t e = mod_pick(rng), f = mod_pick(rng), g = mod_pick(rng);
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
      const auto& ax = kModAxioms[i];
      auto& check = report.checks[i];
      if (!check.pass) continue;
      if (!ax.holds(r, m, a, b, e, f, g)) {
        check.pass = false;
        check.witness = mod_witness(ax, a, b, e, f, g, r, m);
      }
    }
  }
  for (const auto& c : report.checks) report.all_pass = report.all_pass && c.pass;
  return report;
}

}  // namespace finring
