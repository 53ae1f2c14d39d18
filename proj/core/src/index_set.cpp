#include "linking/index_set.hpp"

#include <algorithm>
#include <bit>

namespace linking {

IndexSet::IndexSet(std::initializer_list<std::size_t> elements) {
  for (std::size_t x : elements) insert(x);
}

IndexSet IndexSet::from_elements(const std::vector<std::size_t>& elements) {
  IndexSet s;
  for (std::size_t x : elements) s.insert(x);
  return s;
}

IndexSet IndexSet::range(std::size_t n) {
  IndexSet s;
  if (n == 0) return s;
  s.words_.assign((n + 63) / 64, ~std::uint64_t{0});
  const std::size_t tail = n % 64;
  if (tail != 0) s.words_.back() = (std::uint64_t{1} << tail) - 1;
  return s;
}

std::size_t IndexSet::size() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool IndexSet::contains(std::size_t x) const noexcept {
  const std::size_t w = x / 64;
  return w < words_.size() && ((words_[w] >> (x % 64)) & 1U) != 0;
}

std::size_t IndexSet::bound() const noexcept {
  if (words_.empty()) return 0;
  const std::uint64_t last = words_.back();
  return (words_.size() - 1) * 64 + (64 - static_cast<std::size_t>(std::countl_zero(last)));
}

void IndexSet::insert(std::size_t x) {
  const std::size_t w = x / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (x % 64);
}

void IndexSet::erase(std::size_t x) {
  const std::size_t w = x / 64;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (x % 64));
  trim();
}

void IndexSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

IndexSet IndexSet::operator|(const IndexSet& other) const {
  IndexSet r = *this;
  r |= other;
  return r;
}

IndexSet& IndexSet::operator|=(const IndexSet& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

IndexSet IndexSet::operator&(const IndexSet& other) const {
  IndexSet r;
  const std::size_t n = std::min(words_.size(), other.words_.size());
  r.words_.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.words_[i] = words_[i] & other.words_[i];
  r.trim();
  return r;
}

IndexSet IndexSet::operator-(const IndexSet& other) const {
  IndexSet r = *this;
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) r.words_[i] &= ~other.words_[i];
  r.trim();
  return r;
}

bool IndexSet::intersects(const IndexSet& other) const noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool IndexSet::is_subset_of(const IndexSet& other) const noexcept {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

IndexSet IndexSet::shifted(std::size_t offset) const {
  if (offset == 0) return *this;
  IndexSet r;
  for_each([&](std::size_t x) { r.insert(x + offset); });
  return r;
}

std::size_t IndexSet::front() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return 0;
}

std::vector<std::size_t> IndexSet::elements() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each([&](std::size_t x) { out.push_back(x); });
  return out;
}

std::strong_ordering IndexSet::operator<=>(const IndexSet& other) const noexcept {
  // Locate the smallest element of the symmetric difference. The set holding
  // it is smaller iff the other set still has a larger element.
  const std::size_t n = std::max(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t a = i < words_.size() ? words_[i] : 0;
    const std::uint64_t b = i < other.words_.size() ? other.words_[i] : 0;
    const std::uint64_t diff = a ^ b;
    if (diff == 0) continue;
    const std::size_t d = i * 64 + static_cast<std::size_t>(std::countr_zero(diff));
    const bool in_this = contains(d);
    const IndexSet& rest = in_this ? other : *this;
    const bool rest_has_larger = rest.bound() > d + 1;
    if (in_this) return rest_has_larger ? std::strong_ordering::less : std::strong_ordering::greater;
    return rest_has_larger ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::size_t IndexSet::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words_) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](std::size_t x) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  });
  return s + "}";
}

}  // namespace linking
