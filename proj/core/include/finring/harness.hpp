#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "finring/construct.hpp"
#include "finring/decide.hpp"
#include "finring/ideal.hpp"
#include "finring/ring.hpp"

namespace finring {

struct CorpusSpec {
  std::size_t max_size = 256;
  std::size_t depth = 2;
  std::vector<std::size_t> moduli;  // empty means 2..27
  std::uint64_t seed = 0;
  std::size_t iso_dedup_max = 64;  ///< pairwise isomorphism dedup up to this size

  std::vector<std::size_t> effective_moduli() const;
};

/// Deterministic corpus: base residue rings, then every construction applied
/// once (depth 2), capped by max_size, deduplicated up to isomorphism for
/// small sizes and by descriptor above that. Sorted by (size, descriptor).
std::vector<Ring> generate_corpus(const CorpusSpec& spec, const Caps& caps = default_caps());

struct CheckResult {
  std::string check_id;  ///< token the CLI accepts, e.g. "thm2.2"
  std::string instance;  ///< rebuildable, e.g. "A=Z/4;k=1"
  bool holds = false;
  std::vector<std::pair<std::string, std::string>> details;  // ordered key/value
  std::string counterexample;  ///< empty when holds
  std::string note;            ///< scope disclosure for this family
};

/// A and its square-zero extension by the free module A^k agree on both
/// annihilator properties.
CheckResult check_free_extension_transfer(const Ring& a, std::size_t k,
                                          Method method = Method::fast,
                                          const Caps& caps = default_caps());

/// A field extended by a free module of rank n satisfies both properties.
CheckResult check_field_free_extension(const Ring& k_field, std::size_t n,
                                       Method method = Method::fast,
                                       const Caps& caps = default_caps());

/// Transfer along duplication: the strong property of the duplicated ring
/// forces it on the base; same for the plain property; and when I contains a
/// regular element (finitely: I = R) the plain property transfers both ways.
CheckResult check_duplication_transfer(const Ring& r, const Ideal& i,
                                       Method method = Method::fast,
                                       const Caps& caps = default_caps());

/// A product of two nonzero rings keeps the plain property when both factors
/// have it, and never has the strong property.
CheckResult check_product_transfer(const Ring& r1, const Ring& r2,
                                   Method method = Method::fast,
                                   const Caps& caps = default_caps());

/// With I * I = 0, duplication along I and the square-zero extension by I as
/// a module carry identical operation tables under the identity pairing.
CheckResult check_idealization_coincidence(const Ring& r, const Ideal& i,
                                           const Caps& caps = default_caps());

/// Duplication of a field along either of its ideals is reduced.
CheckResult check_duplication_reduced(const Ring& k_field, const Ideal& i,
                                      const Caps& caps = default_caps());

struct SearchHit {
  std::string ring;
  std::string ideal;
};

struct SearchReport {
  CorpusSpec corpus;
  std::size_t corpus_rings = 0;
  std::size_t instances_examined = 0;
  std::size_t dup_size_cap = 0;
  std::vector<SearchHit> hits;  // empty means none found
};

/// Searches for a base ring with the strong property whose duplication along
/// a proper ideal loses it. Improper ideals are excluded: duplication along
/// the whole ring is the direct square, which never has the strong property.
SearchReport search_duplication_strong_converse(const CorpusSpec& spec,
                                                Method method = Method::fast,
                                                std::size_t dup_size_cap = 256,
                                                const Caps& caps = default_caps());

/// Every instance of one check family drawn from the corpus. check_id must be
/// one of the tokens the CLI accepts. Instances run concurrently; the result
/// list is sorted by instance string.
std::vector<CheckResult> run_check_family(const std::string& check_id,
                                          const std::vector<Ring>& corpus,
                                          Method method = Method::fast,
                                          const Caps& caps = default_caps());

/// Rebuilds the instance named in a result and re-runs its check. Used to
/// confirm that reported outcomes reproduce from the instance string alone.
CheckResult replay(const CheckResult& result, const Caps& caps = default_caps());

/// Scope disclosures attached to reports so output never overstates what was
/// checked.
std::vector<std::string> finite_analog_notes();

}  // namespace finring
