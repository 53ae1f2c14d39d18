#pragma once

// Cospans of finite functions and their embedding into the contention model.

#include <cstddef>
#include <vector>

#include "linking/span_c.hpp"

namespace linking {

/// left → carrier ← right, as two total index maps into the carrier.
struct Cospan {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t carrier = 0;
  std::vector<std::size_t> lmap;
  std::vector<std::size_t> rmap;

  /// Throws DomainError unless both maps are total and land in the carrier.
  void check() const;
  bool operator==(const Cospan&) const = default;
};

/// Composite via pushout, computed with union-find on the two carriers.
Cospan compose(const Cospan& a, const Cospan& b);

/// Representative with carrier numbered by first appearance along lmap then
/// rmap; untouched carrier elements come last.
Cospan canonical(const Cospan& c);
bool iso_check(const Cospan& a, const Cospan& b);

/// The faithful embedding: left ⇐ [lmap]^op  carrier  [rmap]^op ⇒ right, all discrete.
SpanC embed_cospan(const Cospan& c);

}  // namespace linking
