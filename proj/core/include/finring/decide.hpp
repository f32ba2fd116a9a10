#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finring/ideal.hpp"
#include "finring/ring.hpp"

namespace finring {

enum class Method { fast, oracle };
enum class RingProperty { annihilator_condition, strong_annihilator_condition };

const char* method_name(Method m);
const char* property_name(RingProperty p);  // "A" / "strong_A"

/// One maximal tested ideal together with a nonzero element annihilating it.
struct AnnihilatorWitness {
  std::size_t ideal_size = 0;
  std::vector<std::uint32_t> ideal_generators;  // minimal generators, or a member preview
  bool generators_are_preview = false;
  std::vector<std::string> generator_displays;
  std::uint32_t annihilating_element = 0;
  std::string annihilating_display;
};

/// A zero-divisor generating set whose ideal has annihilator {0}.
struct FailureWitness {
  std::vector<std::uint32_t> generators;
  std::vector<std::string> generator_displays;
  std::size_t ideal_size = 0;
};

struct PropertyReport {
  Ring ring;
  std::string ring_descriptor;
  RingProperty property = RingProperty::annihilator_condition;
  Method method = Method::fast;
  bool verdict = false;
  std::optional<FailureWitness> failure;
  std::vector<AnnihilatorWitness> witnesses;  // sorted by ideal member list
  std::size_t ideals_examined = 0;
  double time_ms = 0.0;
  std::string convention_note;
};

/// Every finitely generated ideal consisting of zero-divisors must have a
/// nonzero annihilator. oracle walks the whole ideal lattice; fast tests only
/// the maximal ideals, which is enough since annihilators shrink as ideals
/// grow. Rejects the zero ring.
PropertyReport is_A_ring(const Ring& r, Method method = Method::fast,
                         const Caps& caps = default_caps());

/// Every ideal generated by finitely many zero-divisors, the improper one
/// included, must have a nonzero annihilator. fast reduces to a single test:
/// Ann of the ideal generated by all zero-divisors. Rejects the zero ring.
PropertyReport is_strong_A_ring(const Ring& r, Method method = Method::fast,
                                const Caps& caps = default_caps());

/// Greedy minimization: drops generators in list order while the generated
/// ideal keeps annihilator {0}. Input generators must be zero-divisors and
/// generate an ideal with zero annihilator.
std::vector<Element> shrink_witness(const Ring& r, const std::vector<Element>& gens);

/// Maximal ideals, computed structurally: atoms e of the idempotent order
/// give M = { x : x * e nilpotent }. Sorted by member list.
std::vector<Ideal> maximal_ideals(const Ring& r);

/// Least nonzero index annihilating every generator, if any.
std::optional<std::size_t> min_nonzero_annihilator_ix(const Ring& r,
                                                      const std::vector<std::uint32_t>& gens);

}  // namespace finring
