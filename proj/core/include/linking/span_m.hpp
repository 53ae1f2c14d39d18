#pragma once

// Relational spans of multirelations: the weighted model of linking diagrams.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "linking/generator.hpp"
#include "linking/multiset.hpp"
#include "linking/sync_m.hpp"

namespace linking {

/// A link's boundary images: (left multiset, right multiset).
using LinkImage = std::pair<Multiset, Multiset>;

/// left ⇐ carrier ⇒ right where no two links have the same pair of images.
/// Weights above 1 record a link touching a port several times.
class SpanM {
 public:
  SpanM() = default;
  /// Throws DomainError on shape mismatch or if two links share both images.
  SpanM(MRel lleg, MRel rleg);
  SpanM(std::size_t left, std::size_t right, std::vector<LinkImage> links);

  std::size_t left() const noexcept { return lleg_.cod(); }
  std::size_t right() const noexcept { return rleg_.cod(); }
  std::size_t links() const noexcept { return lleg_.dom(); }
  const MRel& lleg() const noexcept { return lleg_; }
  const MRel& rleg() const noexcept { return rleg_; }
  LinkImage link(std::size_t x) const { return {lleg_(x), rleg_(x)}; }
  std::vector<LinkImage> images() const;

  bool operator==(const SpanM&) const = default;

 private:
  MRel lleg_;
  MRel rleg_;
};

/// Merges links with equal images and sorts them; the canonical representative.
SpanM factorise(std::size_t left, std::size_t right, std::vector<LinkImage> links);

/// Composite together with the intermediate weak pullback (one image per
/// minimal synchronisation, before merging), for diagnostics.
struct ComposeTraceM {
  WeakPullbackM pullback;
  std::vector<LinkImage> raw;
  SpanM result;
};

ComposeTraceM compose_traced(const SpanM& s, const SpanM& t);
/// Throws DomainError if s.right() != t.left().
SpanM compose(const SpanM& s, const SpanM& t);
SpanM tensor(const SpanM& s, const SpanM& t);

SpanM identity_span_m(std::size_t n);
SpanM generator_m(Generator g);
std::vector<std::pair<Generator, SpanM>> generators_m();

SpanM canonical(const SpanM& s);
bool iso_check(const SpanM& s, const SpanM& t);

}  // namespace linking

namespace linking {

/// Compact string form of canonical(s), e.g. "m1:1|[1]>[2]".
std::string canonical_key(const SpanM& s);

}  // namespace linking
