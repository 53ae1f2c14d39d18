#pragma once

// Relations with contention: arrows of the Kleisli category of the
// independent-powerset monad over finite c-sets.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linking/contention.hpp"
#include "linking/index_set.hpp"

namespace linking {

/// Why a CRel fails to be an arrow.
struct Violation {
  std::string message;
  /// Offending pair of domain elements, when the morphism condition fails.
  std::optional<ContentionPair> pair;
};

/// c-relation dom ⇸ cod: every domain element maps to a subset of cod.
///
/// The constructor only checks shapes. Whether the value is an arrow (images
/// independent, and contending images only over contending sources) is
/// reported by validate(); operations assume valid inputs.
class CRel {
 public:
  CRel() = default;
  /// Throws DomainError if `map` has the wrong length or leaves the codomain.
  CRel(CSet dom, CSet cod, std::vector<IndexSet> map);

  const CSet& dom() const noexcept { return dom_; }
  const CSet& cod() const noexcept { return cod_; }
  const std::vector<IndexSet>& map() const noexcept { return map_; }
  const IndexSet& operator()(std::size_t x) const { return map_.at(x); }

  std::optional<Violation> validate() const;
  bool is_valid() const { return !validate().has_value(); }

  bool operator==(const CRel&) const = default;

 private:
  CSet dom_;
  CSet cod_;
  std::vector<IndexSet> map_;
};

/// Kleisli unit: x ↦ {x}.
CRel identity(const CSet& x);

/// x ↦ ∪_{u ∈ f(x)} g(u). Throws DomainError unless f.cod() == g.dom().
CRel compose(const CRel& f, const CRel& g);

/// ∪_{u ∈ U} f(u), without checking U.
IndexSet lift_unchecked(const CRel& f, const IndexSet& u);

/// f^#(U). Throws DomainError if U is not independent in f.dom().
IndexSet lift(const CRel& f, const IndexSet& u);

/// Graph [fn] of a function dom.size() → cod_size, as a CRel into the discrete
/// c-set of size cod_size. Only an arrow when elements with equal image contend.
CRel graph_of(const CSet& dom, const std::vector<std::size_t>& fn, std::size_t cod_size);

/// Opposite graph [fn]^op : discrete(cod_size) ⇸ discrete(fn.size()), u ↦ fn⁻¹(u).
CRel opposite_graph_of(const std::vector<std::size_t>& fn, std::size_t cod_size);

}  // namespace linking
