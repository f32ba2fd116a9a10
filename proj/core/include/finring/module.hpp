#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finring/axioms.hpp"
#include "finring/ideal.hpp"
#include "finring/ring.hpp"

namespace finring {

enum class ModuleKind {
  free_of_rank,
  quotient_by_ideal,
  ideal_members,
  direct_sum,
};

/// Structural backend of a module: index-level operations, index 0 is zero.
class ModuleRep {
 public:
  virtual ~ModuleRep() = default;
  virtual std::size_t size() const = 0;
  virtual std::size_t add(std::size_t e, std::size_t f) const = 0;
  virtual std::size_t neg(std::size_t e) const = 0;
  /// a is an index in the base ring, e an index in the module.
  virtual std::size_t scalar(std::size_t a, std::size_t e) const = 0;
  virtual std::string display(std::size_t e) const = 0;
  virtual ModuleKind kind() const = 0;
};

namespace detail {
struct ModuleData {
  std::string descriptor;
  Ring base;
  std::size_t size = 0;
  std::unique_ptr<const ModuleRep> rep;
};
}  // namespace detail

/// A finite module over a finite ring. Value type, shared immutable state.
class RingModule {
 public:
  RingModule() = default;

  static RingModule create(std::string descriptor, Ring base,
                           std::unique_ptr<const ModuleRep> rep);

  bool valid() const { return d_ != nullptr; }
  const std::string& descriptor() const { return d_->descriptor; }
  const Ring& base() const { return d_->base; }
  std::size_t size() const { return d_->size; }
  ModuleKind kind() const { return d_->rep->kind(); }
  const ModuleRep& rep() const { return *d_->rep; }

  std::size_t add_ix(std::size_t e, std::size_t f) const { return d_->rep->add(e, f); }
  std::size_t neg_ix(std::size_t e) const { return d_->rep->neg(e); }
  std::size_t scalar_ix(std::size_t a, std::size_t e) const { return d_->rep->scalar(a, e); }
  std::size_t zero_ix() const { return 0; }
  std::string display_ix(std::size_t e) const { return d_->rep->display(e); }

  bool same(const RingModule& other) const { return d_ == other.d_; }

 private:
  explicit RingModule(std::shared_ptr<detail::ModuleData> d) : d_(std::move(d)) {}
  std::shared_ptr<detail::ModuleData> d_;
};

/// A^rank with componentwise operations. rank 0 gives the zero module.
RingModule module_free(const Ring& a, std::size_t rank, const Caps& caps = default_caps());
/// A/I as a module: additive cosets, scalar action through representatives.
RingModule module_quotient(const Ring& a, const Ideal& i, const Caps& caps = default_caps());
/// The members of I as a module over the ambient ring, in member order.
RingModule module_from_ideal(const Ideal& i, const Caps& caps = default_caps());
RingModule module_direct_sum(const std::vector<RingModule>& parts,
                             const Caps& caps = default_caps());

// structure accessors; throw PreconditionError on the wrong kind
std::size_t module_free_rank(const RingModule& m);
/// Basis element with 1 in slot i, free modules only.
std::size_t module_free_basis_ix(const RingModule& m, std::size_t slot);
const Ideal& module_quotient_ideal(const RingModule& m);
/// Canonical base-ring representative of coset e, quotient modules only.
std::size_t module_quotient_rep_ix(const RingModule& m, std::size_t e);
/// Coset of a base-ring element, quotient modules only.
std::size_t module_quotient_coset_ix(const RingModule& m, std::size_t base_ix);
const Ideal& module_ideal_source(const RingModule& m);
/// Ring element represented by module index e, ideal_members modules only.
std::size_t module_ideal_member_ix(const RingModule& m, std::size_t e);
const std::vector<RingModule>& module_direct_sum_parts(const RingModule& m);
/// Component decode/encode for free and direct_sum modules.
std::vector<std::size_t> module_components(const RingModule& m, std::size_t e);
std::size_t module_from_components(const RingModule& m, const std::vector<std::size_t>& parts);

/// Module axioms over the stored operations. A full-mode request is honored
/// when both |A| and |E| are at most caps.axiom_full_max and downgraded to
/// sampled otherwise; never throws.
AxiomReport check_module_axioms(const RingModule& m, AxiomMode mode = AxiomMode::Full(),
                                std::uint64_t seed = 0, const Caps& caps = default_caps());

}  // namespace finring
