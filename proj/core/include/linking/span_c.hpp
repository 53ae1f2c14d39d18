#pragma once

// Spans of c-relations between discrete boundaries: the contention model of
// linking diagrams.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linking/crel.hpp"
#include "linking/generator.hpp"
#include "linking/sync_c.hpp"

namespace linking {

/// left ⇐ carrier ⇒ right. Each carrier element is a link; its left and right
/// images are the boundary ports it touches. Links touching a common port must
/// contend; any further contention is extra information carried by the span.
class SpanC {
 public:
  SpanC() = default;
  /// Throws DomainError if a leg has the wrong shape or is not a valid c-relation.
  SpanC(std::size_t left, std::size_t right, CSet carrier, std::vector<IndexSet> lleg,
        std::vector<IndexSet> rleg);
  SpanC(CRel lleg, CRel rleg);

  std::size_t left() const noexcept { return lleg_.cod().size(); }
  std::size_t right() const noexcept { return rleg_.cod().size(); }
  const CSet& carrier() const noexcept { return lleg_.dom(); }
  const CRel& lleg() const noexcept { return lleg_; }
  const CRel& rleg() const noexcept { return rleg_; }
  std::size_t links() const noexcept { return carrier().size(); }

  /// Structural equality of representatives; use iso_check for arrows.
  bool operator==(const SpanC&) const = default;

 private:
  CRel lleg_;
  CRel rleg_;
};

/// Composition via pullback of the inner legs.
/// Throws DomainError if s.right() != t.left().
SpanC compose(const SpanC& s, const SpanC& t);

/// Same composite, also returning the pullback that produced its carrier.
std::pair<SpanC, PullbackC> compose_with_pullback(const SpanC& s, const SpanC& t);

SpanC tensor(const SpanC& s, const SpanC& t);

SpanC identity_span_c(std::size_t n);

SpanC generator_c(Generator g);
std::vector<std::pair<Generator, SpanC>> generators_c();

/// Carrier bijection sigma (s-element i ↦ t-element sigma[i]) preserving both
/// legs and contention exactly, if one exists.
std::optional<std::vector<std::size_t>> iso_witness(const SpanC& s, const SpanC& t);
bool iso_check(const SpanC& s, const SpanC& t);

/// Isomorphic representative with canonically ordered links; equal for
/// isomorphic spans.
SpanC canonical(const SpanC& s);
/// Compact string form of canonical(s).
std::string canonical_key(const SpanC& s);

/// Pairs of links forced to contend because they share a boundary port.
std::vector<ContentionPair> structural_contention(const SpanC& s);

/// Relabel carrier element i as perm[i].
SpanC permute_carrier(const SpanC& s, const std::vector<std::size_t>& perm);

}  // namespace linking
