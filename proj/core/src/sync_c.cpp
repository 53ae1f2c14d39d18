#include "linking/sync_c.hpp"

#include <algorithm>
#include <set>

#include "linking/errors.hpp"

namespace linking {

namespace {

void require_common_codomain(const CRel& f, const CRel& g) {
  if (!(f.cod() == g.cod())) throw DomainError("synchronisation needs a common codomain");
}

struct ClosureSearch {
  const CRel& f;
  const CRel& g;
  std::set<SyncC> found;

  // Elements of B whose image contains each codomain element, and likewise A.
  std::vector<std::vector<std::size_t>> covers_f;
  std::vector<std::vector<std::size_t>> covers_g;

  ClosureSearch(const CRel& f_, const CRel& g_) : f(f_), g(g_) {
    const std::size_t n = f.cod().size();
    covers_f.resize(n);
    covers_g.resize(n);
    for (std::size_t a = 0; a < f.dom().size(); ++a) f(a).for_each([&](std::size_t x) { covers_f[x].push_back(a); });
    for (std::size_t b = 0; b < g.dom().size(); ++b) g(b).for_each([&](std::size_t x) { covers_g[x].push_back(b); });
  }

  void grow(IndexSet& u, IndexSet& v, IndexSet& lu, IndexSet& lv) {
    if (lu == lv) {
      found.insert(SyncC{u, v});
      return;
    }
    const IndexSet only_f = lu - lv;
    if (!only_f.empty()) {
      const std::size_t x = only_f.front();
      for (std::size_t b : covers_g[x]) {
        if (v.contains(b) || g.dom().neighbours(b).intersects(v) || g(b).intersects(lv)) continue;
        IndexSet v2 = v;
        v2.insert(b);
        IndexSet lv2 = lv | g(b);
        grow(u, v2, lu, lv2);
      }
      return;
    }
    const std::size_t x = (lv - lu).front();
    for (std::size_t a : covers_f[x]) {
      if (u.contains(a) || f.dom().neighbours(a).intersects(u) || f(a).intersects(lu)) continue;
      IndexSet u2 = u;
      u2.insert(a);
      IndexSet lu2 = lu | f(a);
      grow(u2, v, lu2, lv);
    }
  }
};

}  // namespace

bool is_sync(const CRel& f, const CRel& g, const IndexSet& u, const IndexSet& v) {
  require_common_codomain(f, g);
  return lift(f, u) == lift(g, v);
}

MinSyncs min_syncs(const CRel& f, const CRel& g) {
  require_common_codomain(f, g);
  ClosureSearch search(f, g);
  for (std::size_t a = 0; a < f.dom().size(); ++a) {
    IndexSet u{a}, v, lu = f(a), lv;
    search.grow(u, v, lu, lv);
  }
  for (std::size_t b = 0; b < g.dom().size(); ++b) {
    IndexSet u, v{b}, lu, lv = g(b);
    search.grow(u, v, lu, lv);
  }

  // Every result is minimal for valid inputs; filtering keeps the contract
  // intact if an argument breaks the morphism condition.
  std::vector<SyncC> all(search.found.begin(), search.found.end());
  MinSyncs out;
  for (const SyncC& s : all) {
    const bool dominated = std::any_of(all.begin(), all.end(), [&](const SyncC& t) { return !(t == s) && t.within(s); });
    if (!dominated) out.syncs.push_back(s);
  }

  std::vector<ContentionPair> pairs;
  for (std::size_t i = 0; i < out.syncs.size(); ++i)
    for (std::size_t j = i + 1; j < out.syncs.size(); ++j)
      if (subsets_contend(f.dom(), out.syncs[i].u, out.syncs[j].u) ||
          subsets_contend(g.dom(), out.syncs[i].v, out.syncs[j].v))
        pairs.emplace_back(i, j);
  out.carrier = CSet(out.syncs.size(), std::move(pairs));
  return out;
}

PullbackC pullback(const CRel& f, const CRel& g) {
  MinSyncs min = min_syncs(f, g);
  std::vector<IndexSet> pmap, qmap;
  pmap.reserve(min.syncs.size());
  qmap.reserve(min.syncs.size());
  for (const SyncC& s : min.syncs) {
    pmap.push_back(s.u);
    qmap.push_back(s.v);
  }
  CRel p(min.carrier, f.dom(), std::move(pmap));
  CRel q(min.carrier, g.dom(), std::move(qmap));
  return PullbackC{std::move(min), std::move(p), std::move(q)};
}

CRel mediator(const PullbackC& pb, const CRel& f, const CRel& g, const CRel& alpha, const CRel& beta) {
  if (!(alpha.dom() == beta.dom())) throw DomainError("cone legs have different domains");
  if (!(compose(alpha, f) == compose(beta, g))) throw DomainError("cone does not commute over the cospan");
  std::vector<IndexSet> map(alpha.dom().size());
  for (std::size_t z = 0; z < map.size(); ++z) {
    const SyncC whole{alpha(z), beta(z)};
    for (std::size_t i = 0; i < pb.min.syncs.size(); ++i)
      if (pb.min.syncs[i].within(whole)) map[z].insert(i);
  }
  return CRel(alpha.dom(), pb.apex(), std::move(map));
}

}  // namespace linking
