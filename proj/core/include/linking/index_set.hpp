#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace linking {

/// Finite set of natural-number indices stored as a packed bitset.
///
/// Trailing zero words are never stored, so two sets are equal exactly when
/// their word vectors are equal. Ordering (`operator<=>`) is lexicographic on
/// the ascending element sequence, e.g. {} < {0} < {0,1} < {1}.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> elements);

  static IndexSet from_elements(const std::vector<std::size_t>& elements);
  /// The set {0, ..., n-1}.
  static IndexSet range(std::size_t n);
  static IndexSet singleton(std::size_t x) { return IndexSet{x}; }

  bool empty() const noexcept { return words_.empty(); }
  std::size_t size() const noexcept;
  bool contains(std::size_t x) const noexcept;
  /// Largest element plus one; 0 for the empty set.
  std::size_t bound() const noexcept;

  void insert(std::size_t x);
  void erase(std::size_t x);

  IndexSet operator|(const IndexSet& other) const;
  IndexSet operator&(const IndexSet& other) const;
  /// Set difference.
  IndexSet operator-(const IndexSet& other) const;
  IndexSet& operator|=(const IndexSet& other);

  bool intersects(const IndexSet& other) const noexcept;
  bool is_subset_of(const IndexSet& other) const noexcept;

  /// Every element shifted up by `offset`.
  IndexSet shifted(std::size_t offset) const;

  /// Smallest element; undefined on the empty set.
  std::size_t front() const noexcept;
  std::vector<std::size_t> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(w * 64 + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

  bool operator==(const IndexSet& other) const noexcept = default;
  std::strong_ordering operator<=>(const IndexSet& other) const noexcept;

  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  void trim();

  std::vector<std::uint64_t> words_;
};

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const noexcept { return s.hash(); }
};

}  // namespace linking
