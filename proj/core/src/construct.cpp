#include "finring/construct.hpp"

#include <algorithm>
#include <tuple>

#include "finring/classify.hpp"

namespace finring {

namespace {

std::size_t checked_product(std::size_t a, std::size_t b, const Caps& caps) {
  if (b != 0 && a > caps.universe_max / b)
    throw CapExceededError("universe_max", caps.universe_max, caps.universe_max + 1);
  return a * b;
}

class ProductRep final : public RingRep {
 public:
  ProductRep(Ring left, Ring right) : left_(std::move(left)), right_(std::move(right)) {
    n2_ = right_.size();
    size_ = left_.size() * n2_;
  }

  std::size_t size() const override { return size_; }
  std::size_t add(std::size_t a, std::size_t b) const override {
    return left_.add_ix(a / n2_, b / n2_) * n2_ + right_.add_ix(a % n2_, b % n2_);
  }
  std::size_t mul(std::size_t a, std::size_t b) const override {
    return left_.mul_ix(a / n2_, b / n2_) * n2_ + right_.mul_ix(a % n2_, b % n2_);
  }
  std::size_t neg(std::size_t a) const override {
    return left_.neg_ix(a / n2_) * n2_ + right_.neg_ix(a % n2_);
  }
  std::size_t zero() const override { return left_.zero_ix() * n2_ + right_.zero_ix(); }
  std::size_t one() const override { return left_.one_ix() * n2_ + right_.one_ix(); }
  std::string display(std::size_t a) const override {
    return "(" + left_.display_ix(a / n2_) + ", " + right_.display_ix(a % n2_) + ")";
  }
  RingKind kind() const override { return RingKind::product; }

  const Ring& left() const { return left_; }
  const Ring& right() const { return right_; }
  std::size_t right_size() const { return n2_; }

 private:
  Ring left_, right_;
  std::size_t n2_;
  std::size_t size_;
};

class QuotRingRep final : public RingRep {
 public:
  QuotRingRep(Ring base, Ideal ideal) : base_(std::move(base)), ideal_(std::move(ideal)) {
    const std::size_t n = base_.size();
    coset_of_.assign(n, SIZE_MAX);
    // scan in index order, so cosets are numbered by their least member
    for (std::size_t x = 0; x < n; ++x) {
      if (coset_of_[x] != SIZE_MAX) continue;
      const std::size_t c = rep_of_.size();
      rep_of_.push_back(x);
      for (auto m : ideal_.member_indices()) coset_of_[base_.add_ix(x, m)] = c;
    }
  }

  std::size_t size() const override { return rep_of_.size(); }
  std::size_t add(std::size_t a, std::size_t b) const override {
    return coset_of_[base_.add_ix(rep_of_[a], rep_of_[b])];
  }
  std::size_t mul(std::size_t a, std::size_t b) const override {
    return coset_of_[base_.mul_ix(rep_of_[a], rep_of_[b])];
  }
  std::size_t neg(std::size_t a) const override { return coset_of_[base_.neg_ix(rep_of_[a])]; }
  std::size_t zero() const override { return coset_of_[base_.zero_ix()]; }
  std::size_t one() const override { return coset_of_[base_.one_ix()]; }
  std::string display(std::size_t a) const override {
    return "[" + base_.display_ix(rep_of_[a]) + "]";
  }
  RingKind kind() const override { return RingKind::quotient; }

  const Ring& base() const { return base_; }
  const Ideal& ideal() const { return ideal_; }
  std::size_t rep_ix(std::size_t coset) const { return rep_of_[coset]; }
  std::size_t coset_ix(std::size_t base_ix) const { return coset_of_[base_ix]; }

 private:
  Ring base_;
  Ideal ideal_;
  std::vector<std::size_t> coset_of_;
  std::vector<std::size_t> rep_of_;
};

class PolyQuotRep final : public RingRep {
 public:
  PolyQuotRep(Ring base, std::vector<std::uint32_t> coeffs, std::size_t size)
      : base_(std::move(base)), coeffs_(std::move(coeffs)), size_(size) {
    deg_ = coeffs_.size() - 1;
  }

  std::size_t size() const override { return size_; }

  std::size_t add(std::size_t a, std::size_t b) const override {
    std::size_t out = 0, place = 1;
    const std::size_t n = base_.size();
    for (std::size_t i = 0; i < deg_; ++i) {
      out += base_.add_ix(a % n, b % n) * place;
      a /= n;
      b /= n;
      place *= n;
    }
    return out;
  }

  std::size_t neg(std::size_t a) const override {
    std::size_t out = 0, place = 1;
    const std::size_t n = base_.size();
    for (std::size_t i = 0; i < deg_; ++i) {
      out += base_.neg_ix(a % n) * place;
      a /= n;
      place *= n;
    }
    return out;
  }

  std::size_t mul(std::size_t a, std::size_t b) const override {
    const std::size_t n = base_.size();
    std::vector<std::size_t> da = decode(a), db = decode(b);
    // convolve, then fold degrees >= deg_ through x^deg_ = -(c_0 + ... )
    std::vector<std::size_t> conv(2 * deg_ - 1, base_.zero_ix());
    for (std::size_t i = 0; i < deg_; ++i)
      for (std::size_t j = 0; j < deg_; ++j)
        conv[i + j] = base_.add_ix(conv[i + j], base_.mul_ix(da[i], db[j]));
    for (std::size_t d = 2 * deg_ - 2; d + 1 > deg_; --d) {
      const std::size_t t = conv[d];
      if (t == base_.zero_ix()) continue;
      conv[d] = base_.zero_ix();
      for (std::size_t j = 0; j < deg_; ++j)
        conv[d - deg_ + j] = base_.sub_ix(conv[d - deg_ + j], base_.mul_ix(t, coeffs_[j]));
    }
    std::size_t out = 0, place = 1;
    for (std::size_t i = 0; i < deg_; ++i) {
      out += conv[i] * place;
      place *= n;
    }
    return out;
  }

  std::size_t zero() const override { return encode_const(base_.zero_ix()); }
  std::size_t one() const override { return encode_const(base_.one_ix()); }

  std::string display(std::size_t a) const override {
    std::vector<std::size_t> d = decode(a);
    std::string out;
    for (std::size_t k = deg_; k-- > 0;) {
      if (d[k] == base_.zero_ix()) continue;
      if (!out.empty()) out += " + ";
      if (k == 0) {
        out += base_.display_ix(d[0]);
        continue;
      }
      if (d[k] != base_.one_ix()) out += base_.display_ix(d[k]);
      out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    return out.empty() ? base_.display_ix(base_.zero_ix()) : out;
  }

  RingKind kind() const override { return RingKind::poly_quotient; }

  const Ring& base() const { return base_; }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return deg_; }

  std::vector<std::size_t> decode(std::size_t a) const {
    std::vector<std::size_t> out(deg_);
    const std::size_t n = base_.size();
    for (std::size_t i = 0; i < deg_; ++i) {
      out[i] = a % n;
      a /= n;
    }
    return out;
  }

  std::size_t encode(const std::vector<std::size_t>& digits) const {
    if (digits.size() != deg_)
      throw PreconditionError("coefficient count does not match the quotient degree");
    std::size_t out = 0, place = 1;
    for (std::size_t i = 0; i < deg_; ++i) {
      if (digits[i] >= base_.size()) throw PreconditionError("coefficient index out of range");
      out += digits[i] * place;
      place *= base_.size();
    }
    return out;
  }

 private:
  std::size_t encode_const(std::size_t c) const {
    std::size_t out = 0, place = 1;
    for (std::size_t i = 0; i < deg_; ++i) {
      out += (i == 0 ? c : base_.zero_ix()) * place;
      place *= base_.size();
    }
    return out;
  }

  Ring base_;
  std::vector<std::uint32_t> coeffs_;
  std::size_t size_;
  std::size_t deg_;
};

class IdealizationRep final : public RingRep {
 public:
  IdealizationRep(Ring a, RingModule e) : a_(std::move(a)), e_(std::move(e)) {
    ne_ = e_.size();
    size_ = a_.size() * ne_;
  }

  std::size_t size() const override { return size_; }
  std::size_t add(std::size_t x, std::size_t y) const override {
    return a_.add_ix(x / ne_, y / ne_) * ne_ + e_.add_ix(x % ne_, y % ne_);
  }
  std::size_t mul(std::size_t x, std::size_t y) const override {
    const std::size_t a1 = x / ne_, e1 = x % ne_, a2 = y / ne_, e2 = y % ne_;
    return a_.mul_ix(a1, a2) * ne_ + e_.add_ix(e_.scalar_ix(a1, e2), e_.scalar_ix(a2, e1));
  }
  std::size_t neg(std::size_t x) const override {
    return a_.neg_ix(x / ne_) * ne_ + e_.neg_ix(x % ne_);
  }
  std::size_t zero() const override { return a_.zero_ix() * ne_ + e_.zero_ix(); }
  std::size_t one() const override { return a_.one_ix() * ne_ + e_.zero_ix(); }
  std::string display(std::size_t x) const override {
    return "(" + a_.display_ix(x / ne_) + ", " + e_.display_ix(x % ne_) + ")";
  }
  RingKind kind() const override { return RingKind::idealization; }

  const Ring& base() const { return a_; }
  const RingModule& module() const { return e_; }
  std::size_t module_size() const { return ne_; }

 private:
  Ring a_;
  RingModule e_;
  std::size_t ne_;
  std::size_t size_;
};

class DupRep final : public RingRep {
 public:
  DupRep(Ring base, Ideal ideal) : base_(std::move(base)), ideal_(std::move(ideal)) {
    members_.assign(ideal_.member_indices().begin(), ideal_.member_indices().end());
    slot_of_.assign(base_.size(), SIZE_MAX);
    for (std::size_t s = 0; s < members_.size(); ++s) slot_of_[members_[s]] = s;
    ni_ = members_.size();
    size_ = base_.size() * ni_;
  }

  std::size_t size() const override { return size_; }
  std::size_t add(std::size_t x, std::size_t y) const override {
    const std::size_t r1 = x / ni_, e1 = members_[x % ni_];
    const std::size_t r2 = y / ni_, e2 = members_[y % ni_];
    return base_.add_ix(r1, r2) * ni_ + slot_of_[base_.add_ix(e1, e2)];
  }
  std::size_t mul(std::size_t x, std::size_t y) const override {
    const std::size_t r1 = x / ni_, e1 = members_[x % ni_];
    const std::size_t r2 = y / ni_, e2 = members_[y % ni_];
    const std::size_t cross = base_.add_ix(base_.mul_ix(r1, e2), base_.mul_ix(r2, e1));
    const std::size_t e = base_.add_ix(cross, base_.mul_ix(e1, e2));
    return base_.mul_ix(r1, r2) * ni_ + slot_of_[e];
  }
  std::size_t neg(std::size_t x) const override {
    return base_.neg_ix(x / ni_) * ni_ + slot_of_[base_.neg_ix(members_[x % ni_])];
  }
  std::size_t zero() const override {
    return base_.zero_ix() * ni_ + slot_of_[base_.zero_ix()];
  }
  std::size_t one() const override {
    return base_.one_ix() * ni_ + slot_of_[base_.zero_ix()];
  }
  /// Shown in the embedded coordinates (r, r + e), the pair form inside
  /// R x R where the second component is congruent to the first mod I.
  std::string display(std::size_t x) const override {
    const std::size_t r = x / ni_, e = members_[x % ni_];
    return "(" + base_.display_ix(r) + ", " + base_.display_ix(base_.add_ix(r, e)) + ")";
  }
  RingKind kind() const override { return RingKind::duplication; }

  const Ring& base() const { return base_; }
  const Ideal& ideal() const { return ideal_; }
  std::size_t ideal_size() const { return ni_; }
  std::size_t member(std::size_t slot) const { return members_[slot]; }
  std::size_t slot(std::size_t base_ix) const { return slot_of_[base_ix]; }

 private:
  Ring base_;
  Ideal ideal_;
  std::vector<std::size_t> members_;
  std::vector<std::size_t> slot_of_;
  std::size_t ni_;
  std::size_t size_;
};

template <typename Rep>
const Rep& rep_as(const Ring& r, RingKind k, const char* what) {
  if (r.kind() != k)
    throw PreconditionError(std::string(what) + ": wrong ring kind for " + r.descriptor());
  return static_cast<const Rep&>(r.rep());
}

std::string module_element_literal(const RingModule& m, std::size_t e);

}  // namespace

Ring product(const Ring& r1, const Ring& r2, const Caps& caps) {
  if (r1.is_zero_ring() || r2.is_zero_ring())
    throw DegenerateRingError("product with a zero-ring factor");
  checked_product(r1.size(), r2.size(), caps);
  std::string desc = "product(" + r1.descriptor() + ", " + r2.descriptor() + ")";
  return Ring::create(std::move(desc), std::make_unique<ProductRep>(r1, r2), caps);
}

Ring quotient(const Ring& r, const Ideal& i, const Caps& caps) {
  if (!r.same(i.ring())) throw RingMismatchError("quotient: ideal belongs to another ring");
  std::string desc = "quot(" + r.descriptor() + ", " + ideal_literal(i) + ")";
  return Ring::create(std::move(desc), std::make_unique<QuotRingRep>(r, i), caps);
}

Ring poly_quotient(const Ring& r, const std::vector<Element>& monic_coeffs, const Caps& caps) {
  if (monic_coeffs.size() < 2)
    throw PreconditionError("poly_quotient needs a monic modulus of degree at least 1");
  std::vector<std::uint32_t> coeffs;
  coeffs.reserve(monic_coeffs.size());
  for (const auto& c : monic_coeffs) coeffs.push_back(static_cast<std::uint32_t>(r.index_of(c)));
  if (coeffs.back() != r.one_ix())
    throw PreconditionError("poly_quotient modulus must be monic");

  const std::size_t deg = coeffs.size() - 1;
  std::size_t size = 1;
  for (std::size_t i = 0; i < deg; ++i) size = checked_product(size, r.size(), caps);

  std::string desc = "polyquot(" + r.descriptor() + ", [";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) desc += ", ";
    desc += element_literal(r, coeffs[i]);
  }
  desc += "])";
  return Ring::create(std::move(desc), std::make_unique<PolyQuotRep>(r, std::move(coeffs), size),
                      caps);
}

Ring poly_quotient_ints(const Ring& r, const std::vector<long long>& coeffs, const Caps& caps) {
  std::vector<Element> elems;
  elems.reserve(coeffs.size());
  for (long long c : coeffs) elems.push_back(r.element(r.int_image_ix(c)));
  return poly_quotient(r, elems, caps);
}

Ring idealization(const Ring& a, const RingModule& e, const Caps& caps) {
  if (!a.same(e.base()))
    throw RingMismatchError("idealization: module is over a different ring");
  checked_product(a.size(), e.size(), caps);
  std::string desc = "idealize(" + a.descriptor() + ", " + module_literal(e) + ")";
  return Ring::create(std::move(desc), std::make_unique<IdealizationRep>(a, e), caps);
}

Ring duplication(const Ring& r, const Ideal& i, const Caps& caps) {
  if (!r.same(i.ring())) throw RingMismatchError("duplication: ideal belongs to another ring");
  checked_product(r.size(), i.member_count(), caps);
  std::string desc = "dup(" + r.descriptor() + ", " + ideal_literal(i) + ")";
  return Ring::create(std::move(desc), std::make_unique<DupRep>(r, i), caps);
}

std::size_t zmod_modulus(const Ring& r) {
  if (r.kind() != RingKind::zmod)
    throw PreconditionError("zmod_modulus: not a Z/n ring: " + r.descriptor());
  return r.size();
}

const Ring& product_left(const Ring& r) {
  return rep_as<ProductRep>(r, RingKind::product, "product_left").left();
}

const Ring& product_right(const Ring& r) {
  return rep_as<ProductRep>(r, RingKind::product, "product_right").right();
}

const Ring& base_of(const Ring& r) {
  switch (r.kind()) {
    case RingKind::quotient:
      return static_cast<const QuotRingRep&>(r.rep()).base();
    case RingKind::poly_quotient:
      return static_cast<const PolyQuotRep&>(r.rep()).base();
    case RingKind::idealization:
      return static_cast<const IdealizationRep&>(r.rep()).base();
    case RingKind::duplication:
      return static_cast<const DupRep&>(r.rep()).base();
    default:
      throw PreconditionError("base_of: ring has no base: " + r.descriptor());
  }
}

const Ideal& quotient_ideal(const Ring& r) {
  return rep_as<QuotRingRep>(r, RingKind::quotient, "quotient_ideal").ideal();
}

const Ideal& duplication_ideal(const Ring& r) {
  return rep_as<DupRep>(r, RingKind::duplication, "duplication_ideal").ideal();
}

const RingModule& idealization_module(const Ring& r) {
  return rep_as<IdealizationRep>(r, RingKind::idealization, "idealization_module").module();
}

std::size_t poly_quotient_degree(const Ring& r) {
  return rep_as<PolyQuotRep>(r, RingKind::poly_quotient, "poly_quotient_degree").degree();
}

const std::vector<std::uint32_t>& poly_quotient_modulus(const Ring& r) {
  return rep_as<PolyQuotRep>(r, RingKind::poly_quotient, "poly_quotient_modulus").coeffs();
}

std::pair<std::size_t, std::size_t> product_split(const Ring& r, std::size_t ix) {
  const auto& rep = rep_as<ProductRep>(r, RingKind::product, "product_split");
  return {ix / rep.right_size(), ix % rep.right_size()};
}

std::size_t product_join(const Ring& r, std::size_t left, std::size_t right) {
  const auto& rep = rep_as<ProductRep>(r, RingKind::product, "product_join");
  if (left >= rep.left().size() || right >= rep.right().size())
    throw PreconditionError("product_join: component index out of range");
  return left * rep.right_size() + right;
}

std::size_t quotient_rep_ix(const Ring& r, std::size_t coset) {
  const auto& rep = rep_as<QuotRingRep>(r, RingKind::quotient, "quotient_rep_ix");
  if (coset >= rep.size()) throw PreconditionError("quotient_rep_ix: coset out of range");
  return rep.rep_ix(coset);
}

std::size_t quotient_coset_ix(const Ring& r, std::size_t base_ix) {
  const auto& rep = rep_as<QuotRingRep>(r, RingKind::quotient, "quotient_coset_ix");
  if (base_ix >= rep.base().size())
    throw PreconditionError("quotient_coset_ix: base index out of range");
  return rep.coset_ix(base_ix);
}

std::vector<std::size_t> poly_quotient_coeffs(const Ring& r, std::size_t ix) {
  const auto& rep = rep_as<PolyQuotRep>(r, RingKind::poly_quotient, "poly_quotient_coeffs");
  if (ix >= rep.size()) throw PreconditionError("poly_quotient_coeffs: index out of range");
  return rep.decode(ix);
}

std::size_t poly_quotient_from_coeffs(const Ring& r, const std::vector<std::size_t>& coeffs) {
  const auto& rep = rep_as<PolyQuotRep>(r, RingKind::poly_quotient, "poly_quotient_from_coeffs");
  return rep.encode(coeffs);
}

std::pair<std::size_t, std::size_t> idealization_split(const Ring& r, std::size_t ix) {
  const auto& rep = rep_as<IdealizationRep>(r, RingKind::idealization, "idealization_split");
  return {ix / rep.module_size(), ix % rep.module_size()};
}

std::size_t idealization_join(const Ring& r, std::size_t a, std::size_t e) {
  const auto& rep = rep_as<IdealizationRep>(r, RingKind::idealization, "idealization_join");
  if (a >= rep.base().size() || e >= rep.module_size())
    throw PreconditionError("idealization_join: component index out of range");
  return a * rep.module_size() + e;
}

std::pair<std::size_t, std::size_t> duplication_parts(const Ring& r, std::size_t ix) {
  const auto& rep = rep_as<DupRep>(r, RingKind::duplication, "duplication_parts");
  return {ix / rep.ideal_size(), rep.member(ix % rep.ideal_size())};
}

std::size_t duplication_index(const Ring& r, std::size_t base_r, std::size_t base_e) {
  const auto& rep = rep_as<DupRep>(r, RingKind::duplication, "duplication_index");
  if (base_r >= rep.base().size())
    throw PreconditionError("duplication_index: first component out of range");
  if (base_e >= rep.base().size() || rep.slot(base_e) == SIZE_MAX)
    throw PreconditionError("duplication_index: second component is not in the ideal");
  return base_r * rep.ideal_size() + rep.slot(base_e);
}

std::pair<std::size_t, std::size_t> duplication_embedded_view(const Ring& r, std::size_t ix) {
  const auto& rep = rep_as<DupRep>(r, RingKind::duplication, "duplication_embedded_view");
  const std::size_t rr = ix / rep.ideal_size();
  const std::size_t e = rep.member(ix % rep.ideal_size());
  return {rr, rep.base().add_ix(rr, e)};
}

namespace {

std::string module_element_literal(const RingModule& m, std::size_t e) {
  switch (m.kind()) {
    case ModuleKind::free_of_rank: {
      const std::size_t rank = module_free_rank(m);
      std::vector<std::size_t> comps = module_components(m, e);
      if (rank == 1) return element_literal(m.base(), comps[0]);
      if (m.base().kind() == RingKind::zmod) {
        std::string out = "[";
        for (std::size_t i = 0; i < comps.size(); ++i) {
          if (i) out += ", ";
          out += std::to_string(comps[i]);
        }
        return out + "]";
      }
      return m.display_ix(e);
    }
    case ModuleKind::quotient_by_ideal:
      return element_literal(m.base(), module_quotient_rep_ix(m, e));
    case ModuleKind::direct_sum: {
      const auto& parts = module_direct_sum_parts(m);
      if (parts.size() == 2) {
        std::vector<std::size_t> comps = module_components(m, e);
        return "(" + module_element_literal(parts[0], comps[0]) + ", " +
               module_element_literal(parts[1], comps[1]) + ")";
      }
      return m.display_ix(e);
    }
    default:
      return m.display_ix(e);
  }
}

}  // namespace

std::string element_literal(const Ring& r, std::size_t ix) {
  switch (r.kind()) {
    case RingKind::zmod:
      return std::to_string(ix);
    case RingKind::product: {
      auto [a, b] = product_split(r, ix);
      return "(" + element_literal(product_left(r), a) + ", " +
             element_literal(product_right(r), b) + ")";
    }
    case RingKind::quotient:
      return element_literal(base_of(r), quotient_rep_ix(r, ix));
    case RingKind::poly_quotient: {
      if (base_of(r).kind() != RingKind::zmod) return r.display_ix(ix);
      std::vector<std::size_t> digits = poly_quotient_coeffs(r, ix);
      std::string out = "[";
      for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(digits[i]);
      }
      return out + "]";
    }
    case RingKind::idealization: {
      auto [a, e] = idealization_split(r, ix);
      return "(" + element_literal(base_of(r), a) + ", " +
             module_element_literal(idealization_module(r), e) + ")";
    }
    case RingKind::duplication: {
      auto [rr, s] = duplication_embedded_view(r, ix);
      return "(" + element_literal(base_of(r), rr) + ", " + element_literal(base_of(r), s) + ")";
    }
    default:
      return r.display_ix(ix);
  }
}

std::string ideal_literal(const Ideal& i) {
  std::string out = "ideal(";
  bool first = true;
  for (auto g : minimal_generators(i)) {
    if (!first) out += ", ";
    out += element_literal(i.ring(), g);
    first = false;
  }
  return out + ")";
}

std::string module_literal(const RingModule& m) {
  switch (m.kind()) {
    case ModuleKind::free_of_rank:
      return "free(" + std::to_string(module_free_rank(m)) + ")";
    case ModuleKind::quotient_by_ideal:
      return "quotmod(" + ideal_literal(module_quotient_ideal(m)) + ")";
    case ModuleKind::direct_sum: {
      std::string out = "dsum(";
      const auto& parts = module_direct_sum_parts(m);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += module_literal(parts[i]);
      }
      return out + ")";
    }
    default:
      return m.descriptor();
  }
}

namespace {

struct Fingerprint {
  std::size_t add_order = 0;
  bool unit = false;
  bool idempotent = false;
  bool nilpotent = false;
  std::size_t principal_size = 0;
  std::size_t ann_size = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend bool operator<(const Fingerprint& a, const Fingerprint& b) {
    return std::tie(a.add_order, a.unit, a.idempotent, a.nilpotent, a.principal_size,
                    a.ann_size) < std::tie(b.add_order, b.unit, b.idempotent, b.nilpotent,
                                           b.principal_size, b.ann_size);
  }
};

std::vector<Fingerprint> fingerprints(const Ring& r) {
  const std::size_t n = r.size();
  const auto& units = r.units_mask();
  std::vector<Fingerprint> out(n);
  std::vector<std::uint8_t> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    Fingerprint& f = out[x];
    f.add_order = additive_order_ix(r, x);
    f.unit = units[x] != 0;
    f.idempotent = r.mul_ix(x, x) == x;
    f.nilpotent = is_nilpotent_ix(r, x);
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t p = r.mul_ix(s, x);
      if (!seen[p]) {
        seen[p] = 1;
        ++f.principal_size;
      }
      if (r.mul_ix(x, s) == r.zero_ix()) ++f.ann_size;
    }
  }
  return out;
}

/// Consistent extension of a partial generator assignment to the subring the
/// assigned elements generate. Returns false on any conflict, including a
/// collision in the image.
struct IsoSearch {
  const Ring& r1;
  const Ring& r2;
  const std::vector<Fingerprint>& f1;
  const std::vector<Fingerprint>& f2;

  bool propagate(std::vector<std::size_t>& map, std::vector<std::uint8_t>& used,
                 std::vector<std::size_t>& defined) const {
    auto define = [&](std::size_t x, std::size_t y) {
      if (map[x] != SIZE_MAX) return map[x] == y;
      if (used[y]) return false;
      if (f1[x] != f2[y]) return false;
      map[x] = y;
      used[y] = 1;
      defined.push_back(x);
      return true;
    };
    for (std::size_t head = 0; head < defined.size(); ++head) {
      const std::size_t x = defined[head];
      if (!define(r1.neg_ix(x), r2.neg_ix(map[x]))) return false;
      const std::size_t snapshot = defined.size();
      for (std::size_t j = 0; j < snapshot; ++j) {
        const std::size_t y = defined[j];
        if (!define(r1.add_ix(x, y), r2.add_ix(map[x], map[y]))) return false;
        if (!define(r1.mul_ix(x, y), r2.mul_ix(map[x], map[y]))) return false;
      }
    }
    return true;
  }

  bool assign(std::size_t g, const std::vector<std::size_t>& gens,
              const std::vector<std::size_t>& map, const std::vector<std::uint8_t>& used,
              const std::vector<std::size_t>& defined) const {
    if (g == gens.size()) return defined.size() == r1.size();
    const std::size_t x = gens[g];
    for (std::size_t y = 0; y < r2.size(); ++y) {
      if (used[y] || f1[x] != f2[y]) continue;
      std::vector<std::size_t> m = map;
      std::vector<std::uint8_t> u = used;
      std::vector<std::size_t> d = defined;
      m[x] = y;
      u[y] = 1;
      d.push_back(x);
      if (propagate(m, u, d) && assign(g + 1, gens, m, u, d)) return true;
    }
    return false;
  }
};

}  // namespace

bool ring_isomorphic(const Ring& r1, const Ring& r2, const Caps& caps) {
  if (r1.size() > caps.iso_max)
    throw CapExceededError("iso_max", caps.iso_max, r1.size());
  if (r2.size() > caps.iso_max)
    throw CapExceededError("iso_max", caps.iso_max, r2.size());
  if (r1.size() != r2.size()) return false;
  if (r1.same(r2)) return true;
  if (r1.size() == 1) return true;

  const std::size_t n = r1.size();
  std::vector<Fingerprint> f1 = fingerprints(r1), f2 = fingerprints(r2);
  {
    std::vector<Fingerprint> s1 = f1, s2 = f2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }

  // greedy generators of r1: everything outside the subring grown so far
  std::vector<std::size_t> map(n, SIZE_MAX);
  std::vector<std::uint8_t> used(n, 0);
  std::vector<std::size_t> defined;
  IsoSearch search{r1, r2, f1, f2};
  auto define_anchor = [&](std::size_t x, std::size_t y) {
    if (map[x] != SIZE_MAX) return map[x] == y;
    if (used[y] || f1[x] != f2[y]) return false;
    map[x] = y;
    used[y] = 1;
    defined.push_back(x);
    return true;
  };
  if (!define_anchor(r1.zero_ix(), r2.zero_ix())) return false;
  if (!define_anchor(r1.one_ix(), r2.one_ix())) return false;
  if (!search.propagate(map, used, defined)) return false;

  std::vector<std::size_t> gens;
  {
    std::vector<std::size_t> probe_map = map;
    std::vector<std::uint8_t> probe_used = used;
    std::vector<std::size_t> probe_defined = defined;
    std::vector<std::uint8_t> in_subring(n, 0);
    for (auto x : probe_defined) in_subring[x] = 1;
    // grow the generated subring inside r1 alone to pick generators; images
    // are chosen later by the search
    std::vector<std::size_t> sub = probe_defined;
    auto sub_push = [&](std::size_t x) {
      if (!in_subring[x]) {
        in_subring[x] = 1;
        sub.push_back(x);
      }
    };
    for (std::size_t x = 0; x < n; ++x) {
      if (in_subring[x]) continue;
      gens.push_back(x);
      sub_push(x);
      for (std::size_t head = 0; head < sub.size(); ++head) {
        const std::size_t a = sub[head];
        sub_push(r1.neg_ix(a));
        const std::size_t snapshot = sub.size();
        for (std::size_t j = 0; j < snapshot; ++j) {
          sub_push(r1.add_ix(a, sub[j]));
          sub_push(r1.mul_ix(a, sub[j]));
        }
      }
    }
  }

  return search.assign(0, gens, map, used, defined);
}

}  // namespace finring
