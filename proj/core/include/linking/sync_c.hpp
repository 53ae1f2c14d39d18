#pragma once

// Synchronisations of c-relations and the pullback they induce.

#include <compare>
#include <vector>

#include "linking/crel.hpp"

namespace linking {

/// A pair (U, V) of independent subsets with f^#U = g^#V for some fixed
/// f : A ⇸ X, g : B ⇸ X. Ordered lexicographically on (U, V).
struct SyncC {
  IndexSet u;
  IndexSet v;

  bool trivial() const noexcept { return u.empty() && v.empty(); }
  /// Pointwise inclusion.
  bool within(const SyncC& other) const noexcept {
    return u.is_subset_of(other.u) && v.is_subset_of(other.v);
  }

  bool operator==(const SyncC&) const = default;
  std::strong_ordering operator<=>(const SyncC&) const = default;
};

/// The minimal synchronisations of f and g as a c-set: element i is syncs[i],
/// and two elements contend when their U-parts or their V-parts contend.
struct MinSyncs {
  std::vector<SyncC> syncs;
  CSet carrier;
};

/// Pullback square over f and g with apex `apex` and projections p, q.
struct PullbackC {
  MinSyncs min;
  CRel p;
  CRel q;

  const CSet& apex() const noexcept { return min.carrier; }
};

/// Throws DomainError unless f and g share a codomain and u, v are independent.
bool is_sync(const CRel& f, const CRel& g, const IndexSet& u, const IndexSet& v);

/// All minimal synchronisations, canonically ordered.
///
/// Works by closure search: starting from a single element of A or B, any
/// boundary element covered on one side only must be covered on the other by
/// exactly one element independent of those already chosen. Every minimal
/// synchronisation is reached this way from each of its elements.
MinSyncs min_syncs(const CRel& f, const CRel& g);

PullbackC pullback(const CRel& f, const CRel& g);

/// The unique h : Z ⇸ apex with h;p = alpha and h;q = beta, where h(z) is the
/// set of minimal synchronisations contained in (alpha z, beta z).
/// Throws DomainError if alpha;f != beta;g.
CRel mediator(const PullbackC& pb, const CRel& f, const CRel& g, const CRel& alpha, const CRel& beta);

}  // namespace linking
