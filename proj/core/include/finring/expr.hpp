#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "finring/module.hpp"
#include "finring/ring.hpp"

namespace finring {

struct Span {
  std::size_t line = 1;
  std::size_t col = 1;
};

/// Element literal: INT | "(" elem "," elem ")" | "[" INT {"," INT} "]".
/// Integers are nonnegative; INT k denotes k * 1 in the context ring.
struct ElemLit {
  enum class Kind { integer, pair, vec };
  Kind kind = Kind::integer;
  long long int_value = 0;
  std::shared_ptr<const ElemLit> first;   // pair
  std::shared_ptr<const ElemLit> second;  // pair
  std::vector<long long> vec_values;      // vec
  Span span;
};

struct IdealLit {
  std::vector<ElemLit> elems;
  Span span;
};

struct ModuleLit {
  enum class Kind { free_of_rank, quotient_by_ideal, direct_sum };
  Kind kind = Kind::free_of_rank;
  long long rank = 0;                // free
  IdealLit ideal;                    // quotmod
  std::vector<ModuleLit> summands;   // dsum
  Span span;
};

struct RingExpr {
  enum class Kind { zmod, product, quot, polyquot, idealize, dup };
  Kind kind = Kind::zmod;
  long long modulus = 0;                    // zmod
  std::shared_ptr<const RingExpr> left;     // product / unary base
  std::shared_ptr<const RingExpr> right;    // product
  IdealLit ideal;                           // quot, dup
  std::vector<long long> poly;              // polyquot, c0..cn
  ModuleLit module;                         // idealize
  Span span;
};

using RingExprPtr = std::shared_ptr<const RingExpr>;

/// Grammar:
///   expr   := "Z/" INT | "product(" expr "," expr ")" | "quot(" expr "," ideal ")"
///           | "polyquot(" expr "," poly ")" | "idealize(" expr "," module ")"
///           | "dup(" expr "," ideal ")"
///   ideal  := "ideal(" [elem {"," elem}] ")"
///   module := "free(" INT ")" | "quotmod(" ideal ")" | "dsum(" module {"," module} ")"
///   elem   := INT | "(" elem "," elem ")" | "[" INT {"," INT} "]"
///   poly   := "[" INT {"," INT} "]"
/// Whitespace between tokens is free. Errors carry 1-based line:col.
RingExprPtr parse_ring_expr(std::string_view text);

/// Canonical rendering; parse(pretty_print(e)) reproduces e.
std::string pretty_print(const RingExpr& e);
std::string pretty_print(const ElemLit& e);
std::string pretty_print(const IdealLit& i);
std::string pretty_print(const ModuleLit& m);

bool expr_equal(const RingExpr& a, const RingExpr& b);

/// Builds the ring bottom-up, elaborating element literals against their
/// context rings. Throws ElaborationError with the literal's position when a
/// literal does not fit.
Ring build_ring(const RingExpr& e, const Caps& caps = default_caps());

/// INT k -> k * 1; pairs match product / idealization / duplication; vectors
/// match polynomial coefficient space.
Element elaborate_element(const Ring& r, const ElemLit& lit);
std::size_t elaborate_module_element(const RingModule& m, const ElemLit& lit);
Ideal elaborate_ideal(const Ring& r, const IdealLit& lit);
RingModule elaborate_module(const Ring& base, const ModuleLit& lit,
                            const Caps& caps = default_caps());

/// Standalone ideal literal, e.g. "ideal(2, 4)". Used to rebuild instances.
IdealLit parse_ideal_literal(std::string_view text);

}  // namespace finring
