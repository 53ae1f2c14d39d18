#pragma once

// Recovering a generator term from a span.

#include <cstddef>
#include <memory>
#include <vector>

#include "linking/eval.hpp"

namespace linking {

struct DecomposeOptions {
  /// Maximum number of compose/tensor evaluations spent in the search.
  std::size_t budget = 20000;
  /// Search is only attempted when both boundaries and the carrier are at most this.
  std::size_t search_limit = 3;
  /// Fall back to the normal-form construction when the search gives up.
  bool construct = true;
};

struct DecomposeResult {
  enum class Method { Search, Construction, NotFound };

  /// Null when method is NotFound.
  TermPtr term;
  Method method = Method::NotFound;
  std::size_t evaluations = 0;

  bool found() const noexcept { return term != nullptr; }
};

/// Keeps the search enumeration between calls, so decomposing many spans
/// shares the work. Each answer is the one a fresh decompose() with the same
/// options would give; `evaluations` counts only work not done before.
class Decomposer {
 public:
  explicit Decomposer(DecomposeOptions opts = {});
  ~Decomposer();
  Decomposer(Decomposer&&) noexcept;
  Decomposer& operator=(Decomposer&&) noexcept;

  DecomposeResult operator()(const SpanC& s);
  DecomposeResult operator()(const SpanM& s);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// A term whose evaluation is isomorphic to s. First a search over terms in
/// order of size, deduplicated by canonical form of their evaluation; the
/// first hit is the smallest term. Failing that, a normal form built from
/// fan-outs, permutations and contention gadgets, checked by evaluation.
DecomposeResult decompose(const SpanC& s, const DecomposeOptions& opts = {});
DecomposeResult decompose(const SpanM& s, const DecomposeOptions& opts = {});

/// The normal-form term alone, without search or verification.
TermPtr normal_form(const SpanC& s);
TermPtr normal_form(const SpanM& s);

/// Term for a permutation of m wires: the wire at position i ends at perm[i].
TermPtr permutation_term(const std::vector<std::size_t>& perm);

/// 2 ⇐ 2 ⇒ 2 with identity legs and its two links in contention.
TermPtr contention_gadget();

}  // namespace linking
