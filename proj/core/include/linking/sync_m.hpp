#pragma once

// Multi-synchronisations of multirelations: minimal solutions of a
// homogeneous linear Diophantine system, and the weak pullback they span.

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "linking/multiset.hpp"

namespace linking {

/// (U, V) with f^#U = g^#V. Ordered lexicographically on (U, V).
struct SyncM {
  Multiset u;
  Multiset v;

  bool is_zero() const noexcept { return u.is_zero() && v.is_zero(); }
  bool leq(const SyncM& other) const { return geq(other.u, u) && geq(other.v, v); }

  bool operator==(const SyncM&) const = default;
  std::strong_ordering operator<=>(const SyncM&) const = default;
};

/// Minimal non-zero x ∈ ℕⁿ with A·x = 0, where A is given by its rows (each of
/// length n). Contejean–Devie completion: grow candidates from the unit vectors
/// one unit at a time, only in directions that decrease the defect A·x, and
/// drop any candidate that dominates a solution already found. Output sorted
/// lexicographically on the count vectors.
std::vector<std::vector<Count>> hilbert_basis(const std::vector<std::vector<std::int64_t>>& rows, std::size_t n);

/// Throws DomainError unless f and g share a codomain and u, v have matching bases.
bool is_msync(const MRel& f, const MRel& g, const SyncM& s);

/// The minimal non-zero synchronisations of f and g, canonically ordered.
std::vector<SyncM> min_msyncs(const MRel& f, const MRel& g);

/// Diagram over f, g whose apex has one element per minimal synchronisation.
struct WeakPullbackM {
  std::vector<SyncM> syncs;
  MRel p;
  MRel q;

  std::size_t apex() const noexcept { return syncs.size(); }
};

WeakPullbackM weak_pullback(const MRel& f, const MRel& g);

using Decomposition = std::vector<std::pair<Count, SyncM>>;

/// Writes s as Σ kᵢ·mᵢ over distinct minimal synchronisations, repeatedly
/// subtracting the first minimal synchronisation (canonical order) below the
/// remainder. Throws DomainError if s is not a synchronisation.
Decomposition minimal_decomposition(const MRel& f, const MRel& g, const SyncM& s);
Decomposition minimal_decomposition(const std::vector<SyncM>& minimal, const SyncM& s);

/// Every coefficient vector k with Σ kᵢ·minimal[i] = s.
std::vector<std::vector<Count>> all_decompositions(const std::vector<SyncM>& minimal, const SyncM& s);

/// A factorisation h : Z ⇸ apex with h;p = alpha and h;q = beta, taking each
/// row to its greedy minimal decomposition. Throws DomainError if alpha;f != beta;g.
MRel weak_mediator(const WeakPullbackM& pb, const MRel& f, const MRel& g, const MRel& alpha, const MRel& beta);

}  // namespace linking
