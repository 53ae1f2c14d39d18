#include "linking/contention.hpp"

#include <algorithm>
#include <string>

#include "linking/errors.hpp"

namespace linking {

CSet::CSet(std::size_t size, std::vector<ContentionPair> contention) : size_(size) {
  for (auto& [a, b] : contention) {
    if (a >= size || b >= size)
      throw DomainError("contention pair (" + std::to_string(a) + "," + std::to_string(b) +
                        ") outside carrier of size " + std::to_string(size));
    if (a > b) std::swap(a, b);
  }
  std::erase_if(contention, [](const ContentionPair& p) { return p.first == p.second; });
  std::sort(contention.begin(), contention.end());
  contention.erase(std::unique(contention.begin(), contention.end()), contention.end());
  pairs_ = std::move(contention);

  neighbours_.resize(size);
  for (const auto& [a, b] : pairs_) {
    neighbours_[a].insert(b);
    neighbours_[b].insert(a);
  }
}

CSet CSet::discrete(std::size_t n) { return CSet(n, {}); }

CSet CSet::full(std::size_t n) {
  std::vector<ContentionPair> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  return CSet(n, std::move(pairs));
}

bool CSet::contends(std::size_t x, std::size_t y) const {
  if (x >= size_ || y >= size_) throw DomainError("element outside carrier");
  return x == y || neighbours_[x].contains(y);
}

Coproduct coproduct(const CSet& a, const CSet& b) {
  std::vector<ContentionPair> pairs = a.contention();
  for (const auto& [x, y] : b.contention()) pairs.emplace_back(x + a.size(), y + a.size());
  Coproduct out{CSet(a.size() + b.size(), std::move(pairs)), {}, {}};
  for (std::size_t i = 0; i < a.size(); ++i) out.inl.push_back(i);
  for (std::size_t i = 0; i < b.size(); ++i) out.inr.push_back(a.size() + i);
  return out;
}

bool is_independent(const CSet& x, const IndexSet& u) {
  if (u.bound() > x.size()) throw DomainError("subset " + u.to_string() + " outside carrier");
  bool ok = true;
  u.for_each([&](std::size_t e) {
    if (ok && x.neighbours(e).intersects(u)) ok = false;
  });
  return ok;
}

namespace {

void extend_independent(const CSet& x, std::size_t next, IndexSet& current, IndexSet& blocked,
                        std::vector<IndexSet>& out) {
  out.push_back(current);
  for (std::size_t e = next; e < x.size(); ++e) {
    if (blocked.contains(e)) continue;
    const IndexSet saved = blocked;
    current.insert(e);
    blocked |= x.neighbours(e);
    extend_independent(x, e + 1, current, blocked, out);
    current.erase(e);
    blocked = saved;
  }
}

}  // namespace

std::vector<IndexSet> indep_subsets(const CSet& x) {
  std::vector<IndexSet> out;
  IndexSet current;
  IndexSet blocked;
  extend_independent(x, 0, current, blocked, out);
  // Depth-first with increasing elements already yields IndexSet order.
  return out;
}

bool subsets_contend(const CSet& x, const IndexSet& u, const IndexSet& v) {
  if (u.intersects(v)) return true;
  bool hit = false;
  u.for_each([&](std::size_t e) {
    if (!hit && x.neighbours(e).intersects(v)) hit = true;
  });
  return hit;
}

bool powerset_contention(const CSet& x, const IndexSet& u, const IndexSet& v) {
  if (!is_independent(x, u) || !is_independent(x, v))
    throw DomainError("powerset contention is defined on independent subsets only");
  return subsets_contend(x, u, v);
}

}  // namespace linking
