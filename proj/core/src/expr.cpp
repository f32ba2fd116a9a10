#include "finring/expr.hpp"

#include <cctype>

#include "finring/construct.hpp"

namespace finring {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  Span here() {
    skip_ws();
    return {line_, col_};
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected ") + what);
    step();
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      step();
      return true;
    }
    return false;
  }

  std::string word() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      fail("expected a name");
    std::string w;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      w += text_[pos_];
      step();
    }
    return w;
  }

  long long integer() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (1LL << 40)) fail("integer literal too large");
      v = v * 10 + (text_[pos_] - '0');
      step();
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) step();
  }

  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

ElemLit parse_elem(Scanner& sc) {
  ElemLit e;
  e.span = sc.here();
  const char c = sc.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    e.kind = ElemLit::Kind::integer;
    e.int_value = sc.integer();
  } else if (c == '(') {
    sc.expect('(', "'('");
    e.kind = ElemLit::Kind::pair;
    e.first = std::make_shared<ElemLit>(parse_elem(sc));
    sc.expect(',', "','");
    e.second = std::make_shared<ElemLit>(parse_elem(sc));
    sc.expect(')', "')'");
  } else if (c == '[') {
    sc.expect('[', "'['");
    e.kind = ElemLit::Kind::vec;
    e.vec_values.push_back(sc.integer());
    while (sc.accept(',')) e.vec_values.push_back(sc.integer());
    sc.expect(']', "']'");
  } else {
    sc.fail("expected an element literal");
  }
  return e;
}

IdealLit parse_ideal(Scanner& sc) {
  IdealLit lit;
  lit.span = sc.here();
  if (sc.word() != "ideal") throw ParseError("expected 'ideal'", lit.span.line, lit.span.col);
  sc.expect('(', "'(' after ideal");
  if (!sc.accept(')')) {
    lit.elems.push_back(parse_elem(sc));
    while (sc.accept(',')) lit.elems.push_back(parse_elem(sc));
    sc.expect(')', "')'");
  }
  return lit;
}

std::vector<long long> parse_poly(Scanner& sc) {
  sc.expect('[', "'[' opening the coefficient list");
  std::vector<long long> out;
  out.push_back(sc.integer());
  while (sc.accept(',')) out.push_back(sc.integer());
  sc.expect(']', "']'");
  return out;
}

ModuleLit parse_module(Scanner& sc) {
  ModuleLit m;
  m.span = sc.here();
  const std::string w = sc.word();
  if (w == "free") {
    m.kind = ModuleLit::Kind::free_of_rank;
    sc.expect('(', "'(' after free");
    m.rank = sc.integer();
    sc.expect(')', "')'");
  } else if (w == "quotmod") {
    m.kind = ModuleLit::Kind::quotient_by_ideal;
    sc.expect('(', "'(' after quotmod");
    m.ideal = parse_ideal(sc);
    sc.expect(')', "')'");
  } else if (w == "dsum") {
    m.kind = ModuleLit::Kind::direct_sum;
    sc.expect('(', "'(' after dsum");
    m.summands.push_back(parse_module(sc));
    while (sc.accept(',')) m.summands.push_back(parse_module(sc));
    sc.expect(')', "')'");
  } else {
    throw ParseError("unknown module form '" + w + "'", m.span.line, m.span.col);
  }
  return m;
}

RingExprPtr parse_expr(Scanner& sc) {
  auto node = std::make_shared<RingExpr>();
  node->span = sc.here();
  const std::string w = sc.word();
  if (w == "Z") {
    sc.expect('/', "'/' after Z");
    node->kind = RingExpr::Kind::zmod;
    node->modulus = sc.integer();
  } else if (w == "product") {
    node->kind = RingExpr::Kind::product;
    sc.expect('(', "'(' after product");
    node->left = parse_expr(sc);
    sc.expect(',', "','");
    node->right = parse_expr(sc);
    sc.expect(')', "')'");
  } else if (w == "quot") {
    node->kind = RingExpr::Kind::quot;
    sc.expect('(', "'(' after quot");
    node->left = parse_expr(sc);
    sc.expect(',', "','");
    node->ideal = parse_ideal(sc);
    sc.expect(')', "')'");
  } else if (w == "polyquot") {
    node->kind = RingExpr::Kind::polyquot;
    sc.expect('(', "'(' after polyquot");
    node->left = parse_expr(sc);
    sc.expect(',', "','");
    node->poly = parse_poly(sc);
    sc.expect(')', "')'");
  } else if (w == "idealize") {
    node->kind = RingExpr::Kind::idealize;
    sc.expect('(', "'(' after idealize");
    node->left = parse_expr(sc);
    sc.expect(',', "','");
    node->module = parse_module(sc);
    sc.expect(')', "')'");
  } else if (w == "dup") {
    node->kind = RingExpr::Kind::dup;
    sc.expect('(', "'(' after dup");
    node->left = parse_expr(sc);
    sc.expect(',', "','");
    node->ideal = parse_ideal(sc);
    sc.expect(')', "')'");
  } else {
    throw ParseError("unknown construction '" + w + "'", node->span.line, node->span.col);
  }
  return node;
}

}  // namespace

RingExprPtr parse_ring_expr(std::string_view text) {
  Scanner sc(text);
  RingExprPtr e = parse_expr(sc);
  if (!sc.at_end()) sc.fail("unexpected trailing input");
  return e;
}

IdealLit parse_ideal_literal(std::string_view text) {
  Scanner sc(text);
  IdealLit lit = parse_ideal(sc);
  if (!sc.at_end()) sc.fail("unexpected trailing input");
  return lit;
}

std::string pretty_print(const ElemLit& e) {
  switch (e.kind) {
    case ElemLit::Kind::integer:
      return std::to_string(e.int_value);
    case ElemLit::Kind::pair:
      return "(" + pretty_print(*e.first) + ", " + pretty_print(*e.second) + ")";
    case ElemLit::Kind::vec: {
      std::string out = "[";
      for (std::size_t i = 0; i < e.vec_values.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(e.vec_values[i]);
      }
      return out + "]";
    }
  }
  return {};
}

std::string pretty_print(const IdealLit& i) {
  std::string out = "ideal(";
  for (std::size_t k = 0; k < i.elems.size(); ++k) {
    if (k) out += ", ";
    out += pretty_print(i.elems[k]);
  }
  return out + ")";
}

std::string pretty_print(const ModuleLit& m) {
  switch (m.kind) {
    case ModuleLit::Kind::free_of_rank:
      return "free(" + std::to_string(m.rank) + ")";
    case ModuleLit::Kind::quotient_by_ideal:
      return "quotmod(" + pretty_print(m.ideal) + ")";
    case ModuleLit::Kind::direct_sum: {
      std::string out = "dsum(";
      for (std::size_t i = 0; i < m.summands.size(); ++i) {
        if (i) out += ", ";
        out += pretty_print(m.summands[i]);
      }
      return out + ")";
    }
  }
  return {};
}

std::string pretty_print(const RingExpr& e) {
  switch (e.kind) {
    case RingExpr::Kind::zmod:
      return "Z/" + std::to_string(e.modulus);
    case RingExpr::Kind::product:
      return "product(" + pretty_print(*e.left) + ", " + pretty_print(*e.right) + ")";
    case RingExpr::Kind::quot:
      return "quot(" + pretty_print(*e.left) + ", " + pretty_print(e.ideal) + ")";
    case RingExpr::Kind::polyquot: {
      std::string out = "polyquot(" + pretty_print(*e.left) + ", [";
      for (std::size_t i = 0; i < e.poly.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(e.poly[i]);
      }
      return out + "])";
    }
    case RingExpr::Kind::idealize:
      return "idealize(" + pretty_print(*e.left) + ", " + pretty_print(e.module) + ")";
    case RingExpr::Kind::dup:
      return "dup(" + pretty_print(*e.left) + ", " + pretty_print(e.ideal) + ")";
  }
  return {};
}

namespace {

bool elem_equal(const ElemLit& a, const ElemLit& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ElemLit::Kind::integer:
      return a.int_value == b.int_value;
    case ElemLit::Kind::pair:
      return elem_equal(*a.first, *b.first) && elem_equal(*a.second, *b.second);
    case ElemLit::Kind::vec:
      return a.vec_values == b.vec_values;
  }
  return false;
}

bool ideal_lit_equal(const IdealLit& a, const IdealLit& b) {
  if (a.elems.size() != b.elems.size()) return false;
  for (std::size_t i = 0; i < a.elems.size(); ++i)
    if (!elem_equal(a.elems[i], b.elems[i])) return false;
  return true;
}

bool module_lit_equal(const ModuleLit& a, const ModuleLit& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ModuleLit::Kind::free_of_rank:
      return a.rank == b.rank;
    case ModuleLit::Kind::quotient_by_ideal:
      return ideal_lit_equal(a.ideal, b.ideal);
    case ModuleLit::Kind::direct_sum: {
      if (a.summands.size() != b.summands.size()) return false;
      for (std::size_t i = 0; i < a.summands.size(); ++i)
        if (!module_lit_equal(a.summands[i], b.summands[i])) return false;
      return true;
    }
  }
  return false;
}

}  // namespace

bool expr_equal(const RingExpr& a, const RingExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RingExpr::Kind::zmod:
      return a.modulus == b.modulus;
    case RingExpr::Kind::product:
      return expr_equal(*a.left, *b.left) && expr_equal(*a.right, *b.right);
    case RingExpr::Kind::quot:
    case RingExpr::Kind::dup:
      return expr_equal(*a.left, *b.left) && ideal_lit_equal(a.ideal, b.ideal);
    case RingExpr::Kind::polyquot:
      return expr_equal(*a.left, *b.left) && a.poly == b.poly;
    case RingExpr::Kind::idealize:
      return expr_equal(*a.left, *b.left) && module_lit_equal(a.module, b.module);
  }
  return false;
}

namespace {

std::size_t elem_ix(const Ring& r, const ElemLit& lit);

[[noreturn]] void misfit(const Ring& r, const ElemLit& lit, const char* shape) {
  throw ElaborationError(std::string(shape) + " literal does not denote an element of " +
                             r.descriptor(),
                         lit.span.line, lit.span.col);
}

std::size_t pair_ix(const Ring& r, const ElemLit& lit) {
  switch (r.kind()) {
    case RingKind::product:
      return product_join(r, elem_ix(product_left(r), *lit.first),
                          elem_ix(product_right(r), *lit.second));
    case RingKind::idealization:
      return idealization_join(
          r, elem_ix(base_of(r), *lit.first),
          elaborate_module_element(idealization_module(r), *lit.second));
    case RingKind::duplication: {
      // embedded form (r, s): the pair lies in the duplication iff s - r
      // falls in the ideal
      const Ring& b = base_of(r);
      const std::size_t rix = elem_ix(b, *lit.first);
      const std::size_t six = elem_ix(b, *lit.second);
      const std::size_t eix = b.sub_ix(six, rix);
      if (!duplication_ideal(r).contains_ix(eix))
        throw ElaborationError(
            "pair does not lie in " + r.descriptor() +
                ": the difference of its parts is outside the ideal",
            lit.span.line, lit.span.col);
      return duplication_index(r, rix, eix);
    }
    case RingKind::quotient:
      return quotient_coset_ix(r, elem_ix(base_of(r), lit));
    default:
      misfit(r, lit, "pair");
  }
}

std::size_t vec_ix(const Ring& r, const ElemLit& lit) {
  switch (r.kind()) {
    case RingKind::poly_quotient: {
      const Ring& b = base_of(r);
      const std::size_t deg = poly_quotient_degree(r);
      if (lit.vec_values.size() > deg)
        throw ElaborationError("coefficient vector longer than the modulus degree " +
                                   std::to_string(deg),
                               lit.span.line, lit.span.col);
      std::vector<std::size_t> coeffs(deg, b.zero_ix());
      for (std::size_t i = 0; i < lit.vec_values.size(); ++i)
        coeffs[i] = b.int_image_ix(lit.vec_values[i]);
      return poly_quotient_from_coeffs(r, coeffs);
    }
    case RingKind::quotient:
      return quotient_coset_ix(r, elem_ix(base_of(r), lit));
    default:
      misfit(r, lit, "vector");
  }
}

std::size_t elem_ix(const Ring& r, const ElemLit& lit) {
  switch (lit.kind) {
    case ElemLit::Kind::integer:
      return r.int_image_ix(lit.int_value);
    case ElemLit::Kind::pair:
      return pair_ix(r, lit);
    case ElemLit::Kind::vec:
      return vec_ix(r, lit);
  }
  misfit(r, lit, "unknown");
}

}  // namespace

Element elaborate_element(const Ring& r, const ElemLit& lit) {
  return r.element(elem_ix(r, lit));
}

std::size_t elaborate_module_element(const RingModule& m, const ElemLit& lit) {
  switch (m.kind()) {
    case ModuleKind::free_of_rank: {
      const std::size_t rank = module_free_rank(m);
      if (lit.kind == ElemLit::Kind::vec) {
        if (lit.vec_values.size() != rank)
          throw ElaborationError("vector length must equal the free rank " +
                                     std::to_string(rank),
                                 lit.span.line, lit.span.col);
        std::vector<std::size_t> comps(rank);
        for (std::size_t i = 0; i < rank; ++i)
          comps[i] = m.base().int_image_ix(lit.vec_values[i]);
        return module_from_components(m, comps);
      }
      if (rank == 1) return module_from_components(m, {elem_ix(m.base(), lit)});
      if (rank == 0 && lit.kind == ElemLit::Kind::integer && lit.int_value == 0) return 0;
      throw ElaborationError("literal does not fit a free module of rank " +
                                 std::to_string(rank),
                             lit.span.line, lit.span.col);
    }
    case ModuleKind::quotient_by_ideal:
      return module_quotient_coset_ix(m, elem_ix(m.base(), lit));
    case ModuleKind::ideal_members: {
      const std::size_t bix = elem_ix(m.base(), lit);
      for (std::size_t e = 0; e < m.size(); ++e)
        if (module_ideal_member_ix(m, e) == bix) return e;
      throw ElaborationError("element is not a member of the ideal behind " + m.descriptor(),
                             lit.span.line, lit.span.col);
    }
    case ModuleKind::direct_sum: {
      const auto& parts = module_direct_sum_parts(m);
      std::vector<std::size_t> comps;
      if (lit.kind == ElemLit::Kind::pair && parts.size() == 2) {
        comps = {elaborate_module_element(parts[0], *lit.first),
                 elaborate_module_element(parts[1], *lit.second)};
      } else if (lit.kind == ElemLit::Kind::vec && lit.vec_values.size() == parts.size()) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
          ElemLit scalar;
          scalar.kind = ElemLit::Kind::integer;
          scalar.int_value = lit.vec_values[i];
          scalar.span = lit.span;
          comps.push_back(elaborate_module_element(parts[i], scalar));
        }
      } else {
        throw ElaborationError("literal does not fit a direct sum of " +
                                   std::to_string(parts.size()) + " summands",
                               lit.span.line, lit.span.col);
      }
      return module_from_components(m, comps);
    }
  }
  throw ElaborationError("literal does not fit the module", lit.span.line, lit.span.col);
}

Ideal elaborate_ideal(const Ring& r, const IdealLit& lit) {
  std::vector<Element> gens;
  gens.reserve(lit.elems.size());
  for (const auto& e : lit.elems) gens.push_back(elaborate_element(r, e));
  return ideal_generate(r, gens);
}

RingModule elaborate_module(const Ring& base, const ModuleLit& lit, const Caps& caps) {
  switch (lit.kind) {
    case ModuleLit::Kind::free_of_rank:
      return module_free(base, static_cast<std::size_t>(lit.rank), caps);
    case ModuleLit::Kind::quotient_by_ideal:
      return module_quotient(base, elaborate_ideal(base, lit.ideal), caps);
    case ModuleLit::Kind::direct_sum: {
      std::vector<RingModule> parts;
      parts.reserve(lit.summands.size());
      for (const auto& s : lit.summands) parts.push_back(elaborate_module(base, s, caps));
      return module_direct_sum(parts, caps);
    }
  }
  throw ElaborationError("unknown module form", lit.span.line, lit.span.col);
}

Ring build_ring(const RingExpr& e, const Caps& caps) {
  switch (e.kind) {
    case RingExpr::Kind::zmod:
      if (e.modulus < 1)
        throw ElaborationError("modulus must be at least 1", e.span.line, e.span.col);
      return zmod(static_cast<std::size_t>(e.modulus), caps);
    case RingExpr::Kind::product:
      return product(build_ring(*e.left, caps), build_ring(*e.right, caps), caps);
    case RingExpr::Kind::quot: {
      const Ring b = build_ring(*e.left, caps);
      return quotient(b, elaborate_ideal(b, e.ideal), caps);
    }
    case RingExpr::Kind::polyquot: {
      const Ring b = build_ring(*e.left, caps);
      try {
        return poly_quotient_ints(b, e.poly, caps);
      } catch (const PreconditionError& err) {
        throw ElaborationError(err.what(), e.span.line, e.span.col);
      }
    }
    case RingExpr::Kind::idealize: {
      const Ring b = build_ring(*e.left, caps);
      return idealization(b, elaborate_module(b, e.module, caps), caps);
    }
    case RingExpr::Kind::dup: {
      const Ring b = build_ring(*e.left, caps);
      return duplication(b, elaborate_ideal(b, e.ideal), caps);
    }
  }
  throw ElaborationError("unknown ring expression", e.span.line, e.span.col);
}

}  // namespace finring
