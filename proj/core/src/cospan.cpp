#include "linking/cospan.hpp"

#include <algorithm>
#include <numeric>

#include "linking/errors.hpp"

namespace linking {

void Cospan::check() const {
  if (lmap.size() != left || rmap.size() != right) throw DomainError("cospan map length does not match its boundary");
  for (std::size_t x : lmap)
    if (x >= carrier) throw DomainError("cospan map leaves the carrier");
  for (std::size_t x : rmap)
    if (x >= carrier) throw DomainError("cospan map leaves the carrier");
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Cospan compose(const Cospan& a, const Cospan& b) {
  a.check();
  b.check();
  if (a.right != b.left) throw DomainError("cannot compose cospans: boundaries differ");
  const std::size_t n = a.carrier + b.carrier;
  UnionFind uf(n);
  for (std::size_t i = 0; i < a.right; ++i) uf.unite(a.rmap[i], a.carrier + b.lmap[i]);

  std::vector<std::size_t> cls(n, static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t root = uf.find(x);
    if (cls[root] == static_cast<std::size_t>(-1)) cls[root] = next++;
    cls[x] = cls[root];
  }
  Cospan out{a.left, b.right, next, {}, {}};
  for (std::size_t x : a.lmap) out.lmap.push_back(cls[x]);
  for (std::size_t x : b.rmap) out.rmap.push_back(cls[a.carrier + x]);
  return out;
}

Cospan canonical(const Cospan& c) {
  c.check();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> relabel(c.carrier, unset);
  std::size_t next = 0;
  auto visit = [&](std::size_t x) {
    if (relabel[x] == unset) relabel[x] = next++;
    return relabel[x];
  };
  Cospan out{c.left, c.right, c.carrier, {}, {}};
  for (std::size_t x : c.lmap) out.lmap.push_back(visit(x));
  for (std::size_t x : c.rmap) out.rmap.push_back(visit(x));
  return out;
}

bool iso_check(const Cospan& a, const Cospan& b) { return canonical(a) == canonical(b); }

SpanC embed_cospan(const Cospan& c) {
  c.check();
  return SpanC(opposite_graph_of(c.lmap, c.carrier), opposite_graph_of(c.rmap, c.carrier));
}

}  // namespace linking
