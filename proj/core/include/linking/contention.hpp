#pragma once

// Finite sets with contention (c-sets) and their independent subsets.

#include <cstddef>
#include <utility>
#include <vector>

#include "linking/index_set.hpp"

namespace linking {

using ContentionPair = std::pair<std::size_t, std::size_t>;

/// A finite carrier {0..size-1} with a reflexive, symmetric contention
/// relation. Only the off-diagonal pairs are stored, as (a, b) with a < b,
/// sorted; reflexivity is implicit.
class CSet {
 public:
  CSet() = default;

  /// Self-pairs are dropped, pairs are normalised to a < b and deduplicated.
  /// Throws DomainError if an index is out of range.
  CSet(std::size_t size, std::vector<ContentionPair> contention);

  static CSet discrete(std::size_t n);
  /// Every pair of elements in contention.
  static CSet full(std::size_t n);

  std::size_t size() const noexcept { return size_; }
  const std::vector<ContentionPair>& contention() const noexcept { return pairs_; }

  /// x ⌣ y; true whenever x == y.
  bool contends(std::size_t x, std::size_t y) const;
  /// Elements in contention with x, excluding x itself.
  const IndexSet& neighbours(std::size_t x) const { return neighbours_.at(x); }

  bool operator==(const CSet& other) const noexcept {
    return size_ == other.size_ && pairs_ == other.pairs_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<ContentionPair> pairs_;
  std::vector<IndexSet> neighbours_;
};

/// Coproduct a + b together with its two injections, as index maps.
struct Coproduct {
  CSet sum;
  std::vector<std::size_t> inl;
  std::vector<std::size_t> inr;
};

Coproduct coproduct(const CSet& a, const CSet& b);

/// True iff no two distinct elements of `u` are in contention.
/// Throws DomainError if `u` mentions an element outside the carrier.
bool is_independent(const CSet& x, const IndexSet& u);

/// All independent subsets, each once, in IndexSet order.
std::vector<IndexSet> indep_subsets(const CSet& x);

/// U ⌣ V in the independent-powerset c-set: some u ∈ U contends with some v ∈ V.
/// Throws DomainError if either subset is not independent.
bool powerset_contention(const CSet& x, const IndexSet& u, const IndexSet& v);

/// Same test without validating independence of the arguments.
bool subsets_contend(const CSet& x, const IndexSet& u, const IndexSet& v);

}  // namespace linking
