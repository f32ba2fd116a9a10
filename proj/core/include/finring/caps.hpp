#pragma once

#include <cstddef>

namespace finring {

/// Resource limits. Every cap is explicit and can be overridden per call;
/// exceeding one raises CapExceededError instead of silently truncating.
struct Caps {
  /// Full add/mul tables are materialized for rings at or below this size.
  std::size_t table_memo_max = 256;
  /// Exhaustive axiom checking runs at or below this size; larger rings are
  /// checked on random samples.
  std::size_t axiom_full_max = 512;
  /// all_ideals refuses rings larger than this.
  std::size_t lattice_max = 4096;
  /// Brute-force isomorphism search refuses rings larger than this.
  std::size_t iso_max = 64;
  /// Hard limit on the size of any constructed ring or module.
  std::size_t universe_max = std::size_t{1} << 20;
};

const Caps& default_caps();

}  // namespace finring
