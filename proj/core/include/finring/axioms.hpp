#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

struct AxiomMode {
  enum class Kind { full, sampled };
  Kind kind = Kind::full;
  /// sampled only; 0 means "10 * |R|".
  std::size_t samples = 0;

  static AxiomMode Full() { return {Kind::full, 0}; }
  static AxiomMode Sampled(std::size_t k = 0) { return {Kind::sampled, k}; }
};

struct AxiomWitness {
  std::array<std::size_t, 3> triple{};  // unused slots hold 0
  std::string rendered;
};

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::optional<AxiomWitness> witness;
};

struct AxiomReport {
  std::string ring;
  std::size_t size = 0;
  AxiomMode::Kind mode = AxiomMode::Kind::full;
  bool downgraded = false;  ///< full was requested but the ring is over cap
  std::size_t samples = 0;  ///< 0 in full mode
  std::vector<AxiomCheck> checks;
  bool all_pass = true;
};

/// Checks the commutative unital ring axioms on the stored operation tables.
/// Never throws: a full-mode request on a ring over the axiom cap is
/// downgraded to sampled mode and reported as such.
AxiomReport check_ring_axioms(const Ring& r, AxiomMode mode = AxiomMode::Full(),
                              std::uint64_t seed = 0, const Caps& caps = default_caps());

}  // namespace finring
