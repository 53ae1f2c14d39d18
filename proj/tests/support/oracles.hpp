#pragma once

// Independent reference implementations and random generators for tests.
// Everything here is deliberately naive: exhaustive enumeration over subsets,
// vectors in a box, or all maps, so that it shares no logic with the library.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linking/cospan.hpp"
#include "linking/crel.hpp"
#include "linking/eval.hpp"
#include "linking/multiset.hpp"
#include "linking/span_c.hpp"
#include "linking/span_m.hpp"
#include "linking/sync_c.hpp"
#include "linking/sync_m.hpp"
#include "linking/term.hpp"

namespace oracle {

using namespace linking;
using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// ---- c-sets and c-relations ------------------------------------------------

/// Every subset of {0..n-1}, by bitmask.
inline std::vector<IndexSet> all_subsets(std::size_t n) {
  std::vector<IndexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s.insert(i);
    out.push_back(s);
  }
  return out;
}

/// Independence straight from the definition.
inline bool independent(const CSet& x, const IndexSet& u) {
  const auto e = u.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (x.contends(e[i], e[j])) return false;
  return true;
}

inline std::vector<IndexSet> independent_subsets(const CSet& x) {
  std::vector<IndexSet> out;
  for (const IndexSet& s : all_subsets(x.size()))
    if (independent(x, s)) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool exists_contending(const CSet& x, const IndexSet& u, const IndexSet& v) {
  for (std::size_t a : u.elements())
    for (std::size_t b : v.elements())
      if (x.contends(a, b)) return true;
  return false;
}

/// Every c-set on n elements (one per graph on n vertices).
inline std::vector<CSet> all_csets(std::size_t n) {
  std::vector<ContentionPair> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::vector<CSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<ContentionPair> pairs;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1U) pairs.push_back(slots[i]);
    out.emplace_back(n, pairs);
  }
  return out;
}

inline std::vector<CSet> all_csets_up_to(std::size_t n) {
  std::vector<CSet> out;
  for (std::size_t k = 0; k <= n; ++k)
    for (CSet& c : all_csets(k)) out.push_back(std::move(c));
  return out;
}

/// The morphism condition checked directly.
inline bool valid_crel(const CSet& dom, const CSet& cod, const std::vector<IndexSet>& map) {
  for (const IndexSet& u : map)
    if (!independent(cod, u)) return false;
  for (std::size_t x = 0; x < dom.size(); ++x)
    for (std::size_t y = x + 1; y < dom.size(); ++y)
      if (exists_contending(cod, map[x], map[y]) && !dom.contends(x, y)) return false;
  return true;
}

/// Every valid c-relation dom → cod.
inline std::vector<CRel> all_crels(const CSet& dom, const CSet& cod) {
  const auto images = independent_subsets(cod);
  std::vector<CRel> out;
  std::vector<std::size_t> idx(dom.size(), 0);
  while (true) {
    std::vector<IndexSet> map;
    for (std::size_t i : idx) map.push_back(images[i]);
    if (valid_crel(dom, cod, map)) out.emplace_back(dom, cod, map);
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == images.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

inline CSet random_cset(Rng& rng, std::size_t n, double p = 0.4) {
  std::vector<ContentionPair> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng, p)) pairs.emplace_back(a, b);
  return CSet(n, pairs);
}

/// Images first, then the domain contention they force plus random extra pairs.
inline CRel random_crel_from(Rng& rng, std::size_t dom_size, const CSet& cod, double extra = 0.3) {
  const auto images = independent_subsets(cod);
  std::vector<IndexSet> map;
  for (std::size_t x = 0; x < dom_size; ++x) map.push_back(images[uniform(rng, 0, images.size() - 1)]);
  std::vector<ContentionPair> pairs;
  for (std::size_t a = 0; a < dom_size; ++a)
    for (std::size_t b = a + 1; b < dom_size; ++b)
      if (exists_contending(cod, map[a], map[b]) || coin(rng, extra)) pairs.emplace_back(a, b);
  return CRel(CSet(dom_size, pairs), cod, map);
}

/// Rejection sampling into a fixed domain; nullopt if no valid map turned up.
inline std::optional<CRel> random_crel_between(Rng& rng, const CSet& dom, const CSet& cod, int tries = 200) {
  const auto images = independent_subsets(cod);
  for (int t = 0; t < tries; ++t) {
    std::vector<IndexSet> map;
    for (std::size_t x = 0; x < dom.size(); ++x) map.push_back(images[uniform(rng, 0, images.size() - 1)]);
    if (valid_crel(dom, cod, map)) return CRel(dom, cod, map);
  }
  return std::nullopt;
}

// ---- synchronisations by brute force --------------------------------------

inline IndexSet union_of_images(const CRel& f, const IndexSet& u) {
  IndexSet out;
  for (std::size_t a : u.elements()) out = out | f(a);
  return out;
}

/// All (U, V) with U, V independent and equal lifts, including the trivial one.
inline std::vector<SyncC> all_syncs(const CRel& f, const CRel& g) {
  std::vector<SyncC> out;
  const auto us = independent_subsets(f.dom()), vs = independent_subsets(g.dom());
  for (const IndexSet& u : us)
    for (const IndexSet& v : vs)
      if (union_of_images(f, u) == union_of_images(g, v)) out.push_back(SyncC{u, v});
  return out;
}

inline bool sync_leq(const SyncC& a, const SyncC& b) { return a.u.is_subset_of(b.u) && a.v.is_subset_of(b.v); }

inline std::vector<SyncC> brute_min_syncs(const CRel& f, const CRel& g) {
  auto all = all_syncs(f, g);
  std::vector<SyncC> out;
  for (const SyncC& s : all) {
    if (s.u.empty() && s.v.empty()) continue;
    bool minimal = true;
    for (const SyncC& t : all)
      if (!(t.u.empty() && t.v.empty()) && !(t == s) && sync_leq(t, s)) minimal = false;
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- multisets --------------------------------------------------------------

inline MRel random_mrel(Rng& rng, std::size_t dom, std::size_t cod, Count max_entry) {
  std::vector<Multiset> rows;
  for (std::size_t x = 0; x < dom; ++x) {
    Multiset r(cod);
    for (std::size_t y = 0; y < cod; ++y) r[y] = uniform(rng, 0, max_entry);
    rows.push_back(r);
  }
  return MRel(dom, cod, rows);
}

/// Every MRel dom → cod with entries ≤ max_entry.
inline std::vector<MRel> all_mrels(std::size_t dom, std::size_t cod, Count max_entry) {
  const std::size_t cells = dom * cod;
  std::vector<Count> v(cells, 0);
  std::vector<MRel> out;
  while (true) {
    std::vector<Multiset> rows;
    for (std::size_t x = 0; x < dom; ++x)
      rows.emplace_back(std::vector<Count>(v.begin() + static_cast<std::ptrdiff_t>(x * cod),
                                           v.begin() + static_cast<std::ptrdiff_t>((x + 1) * cod)));
    out.emplace_back(dom, cod, rows);
    std::size_t k = 0;
    while (k < cells && ++v[k] > max_entry) v[k++] = 0;
    if (k == cells) break;
  }
  return out;
}

/// Natural-number matrix product, the textbook way.
inline std::vector<std::vector<Count>> matmul(const MRel& f, const MRel& g) {
  std::vector<std::vector<Count>> out(f.dom(), std::vector<Count>(g.cod(), 0));
  for (std::size_t i = 0; i < f.dom(); ++i)
    for (std::size_t j = 0; j < g.cod(); ++j)
      for (std::size_t k = 0; k < f.cod(); ++k) out[i][j] += f(i)[k] * g(k)[j];
  return out;
}

/// Every vector in {0..bound}^n.
inline std::vector<std::vector<Count>> box(std::size_t n, Count bound) {
  std::vector<std::vector<Count>> out;
  std::vector<Count> v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t k = 0;
    while (k < n && ++v[k] > bound) v[k++] = 0;
    if (k == n) break;
  }
  return out;
}

inline Multiset mlift(const MRel& f, const std::vector<Count>& u) {
  Multiset out(f.cod());
  for (std::size_t a = 0; a < f.dom(); ++a)
    for (std::size_t x = 0; x < f.cod(); ++x) out[x] += u[a] * f(a)[x];
  return out;
}

/// Minimal non-zero synchronisations whose components are all ≤ bound,
/// by joining the two sides' lifts and filtering to ≤-minimal elements.
/// Within a box this is exact: the box is closed downwards.
inline std::vector<SyncM> brute_min_msyncs_in_box(const MRel& f, const MRel& g, Count bound) {
  std::map<std::vector<Count>, std::vector<std::vector<Count>>> by_lift;
  for (const auto& v : box(g.dom(), bound)) by_lift[mlift(g, v).counts()].push_back(v);
  std::vector<std::pair<std::vector<Count>, std::vector<Count>>> sols;
  for (const auto& u : box(f.dom(), bound)) {
    const auto it = by_lift.find(mlift(f, u).counts());
    if (it == by_lift.end()) continue;
    for (const auto& v : it->second) sols.emplace_back(u, v);
  }
  auto total = [](const auto& s) {
    Count t = 0;
    for (Count c : s.first) t += c;
    for (Count c : s.second) t += c;
    return t;
  };
  std::stable_sort(sols.begin(), sols.end(), [&](const auto& a, const auto& b) { return total(a) < total(b); });
  std::vector<SyncM> minimal;
  for (const auto& [u, v] : sols) {
    if (total(std::make_pair(u, v)) == 0) continue;
    const SyncM s{Multiset(u), Multiset(v)};
    bool dominated = false;
    for (const SyncM& m : minimal)
      if (m.leq(s)) dominated = true;
    if (!dominated) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

// ---- spans and cospans ------------------------------------------------------

inline SpanC random_span_c(Rng& rng, std::size_t k, std::size_t l, std::size_t n, double extra = 0.3) {
  const auto ls = all_subsets(k), rs = all_subsets(l);
  std::vector<IndexSet> lleg, rleg;
  for (std::size_t x = 0; x < n; ++x) {
    lleg.push_back(ls[uniform(rng, 0, ls.size() - 1)]);
    rleg.push_back(rs[uniform(rng, 0, rs.size() - 1)]);
  }
  std::vector<ContentionPair> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (lleg[a].intersects(lleg[b]) || rleg[a].intersects(rleg[b]) || coin(rng, extra)) pairs.emplace_back(a, b);
  return SpanC(k, l, CSet(n, pairs), lleg, rleg);
}

inline SpanM random_span_m(Rng& rng, std::size_t k, std::size_t l, std::size_t n, Count max_weight) {
  std::vector<LinkImage> links;
  for (std::size_t x = 0; x < n; ++x) {
    Multiset a(k), b(l);
    for (std::size_t p = 0; p < k; ++p) a[p] = uniform(rng, 0, max_weight);
    for (std::size_t q = 0; q < l; ++q) b[q] = uniform(rng, 0, max_weight);
    links.emplace_back(a, b);
  }
  return factorise(k, l, links);
}

inline Cospan random_cospan(Rng& rng, std::size_t k, std::size_t l, std::size_t carrier) {
  Cospan c{k, l, carrier, {}, {}};
  for (std::size_t i = 0; i < k; ++i) c.lmap.push_back(uniform(rng, 0, carrier - 1));
  for (std::size_t i = 0; i < l; ++i) c.rmap.push_back(uniform(rng, 0, carrier - 1));
  return c;
}

/// Pushout of finite functions by explicit equivalence closure (no union-find).
inline Cospan pushout_compose(const Cospan& a, const Cospan& b) {
  const std::size_t n = a.carrier + b.carrier;
  std::vector<std::size_t> cls(n);
  for (std::size_t i = 0; i < n; ++i) cls[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < a.right; ++i) {
      std::size_t x = a.rmap[i], y = a.carrier + b.lmap[i];
      const std::size_t lo = std::min(cls[x], cls[y]);
      for (std::size_t z = 0; z < n; ++z)
        if ((cls[z] == cls[x] || cls[z] == cls[y]) && cls[z] != lo) {
          cls[z] = lo;
          changed = true;
        }
    }
  }
  std::map<std::size_t, std::size_t> number;
  for (std::size_t z = 0; z < n; ++z) number.emplace(cls[z], number.size());
  Cospan out{a.left, b.right, number.size(), {}, {}};
  for (std::size_t x : a.lmap) out.lmap.push_back(number[cls[x]]);
  for (std::size_t x : b.rmap) out.rmap.push_back(number[cls[a.carrier + x]]);
  return out;
}

/// Span of finite functions k ← x → l, sent to a c-span with full contention.
/// Composition is preserved, identities are not.
struct SetSpan {
  std::size_t left = 0, right = 0, carrier = 0;
  std::vector<std::size_t> lmap, rmap;  // carrier → boundary
};

inline SpanC full_contention_image(const SetSpan& s) {
  std::vector<IndexSet> l, r;
  for (std::size_t x = 0; x < s.carrier; ++x) {
    l.push_back(IndexSet{s.lmap[x]});
    r.push_back(IndexSet{s.rmap[x]});
  }
  return SpanC(s.left, s.right, CSet::full(s.carrier), l, r);
}

/// Pullback of finite functions: pairs agreeing in the middle.
inline SetSpan set_span_compose(const SetSpan& a, const SetSpan& b) {
  SetSpan out{a.left, b.right, 0, {}, {}};
  for (std::size_t x = 0; x < a.carrier; ++x)
    for (std::size_t y = 0; y < b.carrier; ++y)
      if (a.rmap[x] == b.lmap[y]) {
        ++out.carrier;
        out.lmap.push_back(a.lmap[x]);
        out.rmap.push_back(b.rmap[y]);
      }
  return out;
}

// ---- terms ------------------------------------------------------------------

/// Largest input arity a term of the given depth can have.
inline std::size_t max_input(std::size_t depth) { return std::size_t{2} << depth; }

/// Random well-typed term of depth ≤ depth with input arity `in`
/// (requires in ≤ max_input(depth)).
inline TermPtr random_term(Rng& rng, std::size_t depth, std::size_t in) {
  if (in > max_input(depth)) throw std::invalid_argument("random_term: input arity too large for depth");
  if (in <= 2 && (depth == 0 || coin(rng, 0.25))) {
    std::vector<Generator> gs;
    for (Generator g : kAllGenerators)
      if (arity(g).in == in) gs.push_back(g);
    return atom(gs[uniform(rng, 0, gs.size() - 1)]);
  }
  const std::size_t cap = max_input(depth - 1);
  if (in <= cap && coin(rng)) {
    const TermPtr a = random_term(rng, depth - 1, in);
    const std::size_t mid = type_of(a).out;
    if (mid <= cap) return seq(a, random_term(rng, depth - 1, mid));
  }
  const std::size_t lo = in > cap ? in - cap : 0;
  const std::size_t i = uniform(rng, lo, std::min(in, cap));
  return ten(random_term(rng, depth - 1, i), random_term(rng, depth - 1, in - i));
}

}  // namespace oracle
