#pragma once

// Finite multisets over ordinals and arrows of the Kleisli category of the
// multiset monad.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace linking {

using Count = std::uint64_t;

/// A count vector over {0..over-1}. Arithmetic is checked: results that do not
/// fit a Count throw std::overflow_error rather than wrap.
///
/// Ordering (`operator<=>`) compares the ascending element sequences with
/// repetition lexicographically, so {0} < {0,0} < {0,1} < {1}; for 0/1 vectors
/// it agrees with IndexSet ordering.
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(std::size_t over) : counts_(over, 0) {}
  Multiset(std::initializer_list<Count> counts) : counts_(counts) {}
  explicit Multiset(std::vector<Count> counts) : counts_(std::move(counts)) {}

  static Multiset unit(std::size_t over, std::size_t x);

  std::size_t over() const noexcept { return counts_.size(); }
  Count operator[](std::size_t x) const { return counts_.at(x); }
  Count& operator[](std::size_t x) { return counts_.at(x); }
  const std::vector<Count>& counts() const noexcept { return counts_; }

  bool is_zero() const noexcept;
  /// Total number of elements with multiplicity.
  Count total() const;

  bool operator==(const Multiset&) const = default;
  std::strong_ordering operator<=>(const Multiset& other) const;

  std::string to_string() const;

 private:
  std::vector<Count> counts_;
};

/// Pointwise sum. Throws DomainError on base mismatch.
Multiset add(const Multiset& a, const Multiset& b);
/// a ≥ b pointwise.
bool geq(const Multiset& a, const Multiset& b);
/// a − b. Throws DomainError unless geq(a, b).
Multiset sub(const Multiset& a, const Multiset& b);
Multiset scale(Count k, const Multiset& a);

/// Multirelation dom ⇸ cod: a multiset of cod for each element of dom.
/// Equivalently a dom × cod natural-number matrix.
class MRel {
 public:
  MRel() = default;
  /// Throws DomainError if the row count or any row base is wrong.
  MRel(std::size_t dom, std::size_t cod, std::vector<Multiset> rows);

  static MRel identity(std::size_t n);

  std::size_t dom() const noexcept { return dom_; }
  std::size_t cod() const noexcept { return cod_; }
  const std::vector<Multiset>& rows() const noexcept { return rows_; }
  const Multiset& operator()(std::size_t x) const { return rows_.at(x); }

  bool operator==(const MRel&) const = default;

 private:
  std::size_t dom_ = 0;
  std::size_t cod_ = 0;
  std::vector<Multiset> rows_;
};

/// f^#(u) = Σ_a u(a)·f(a). Throws DomainError if u is not over f.dom().
Multiset lift(const MRel& f, const Multiset& u);

/// x ↦ g^#(f(x)). Throws DomainError unless f.cod() == g.dom().
MRel compose(const MRel& f, const MRel& g);

}  // namespace linking
