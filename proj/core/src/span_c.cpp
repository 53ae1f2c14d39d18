#include "linking/span_c.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "linking/errors.hpp"

namespace linking {

namespace {

void require_discrete(const CSet& boundary) {
  if (!boundary.contention().empty()) throw DomainError("span boundaries must be discrete");
}

void require_valid(const CRel& leg, const char* which) {
  if (auto v = leg.validate()) throw DomainError(std::string(which) + " leg is not a c-relation: " + v->message);
}

}  // namespace

SpanC::SpanC(std::size_t left, std::size_t right, CSet carrier, std::vector<IndexSet> lleg,
             std::vector<IndexSet> rleg)
    : SpanC(CRel(carrier, CSet::discrete(left), std::move(lleg)),
            CRel(carrier, CSet::discrete(right), std::move(rleg))) {}

SpanC::SpanC(CRel lleg, CRel rleg) : lleg_(std::move(lleg)), rleg_(std::move(rleg)) {
  if (!(lleg_.dom() == rleg_.dom())) throw DomainError("span legs have different carriers");
  require_discrete(lleg_.cod());
  require_discrete(rleg_.cod());
  require_valid(lleg_, "left");
  require_valid(rleg_, "right");
}

std::pair<SpanC, PullbackC> compose_with_pullback(const SpanC& s, const SpanC& t) {
  if (s.right() != t.left())
    throw DomainError("cannot compose " + std::to_string(s.left()) + "→" + std::to_string(s.right()) + " with " +
                      std::to_string(t.left()) + "→" + std::to_string(t.right()));
  PullbackC pb = pullback(s.rleg(), t.lleg());
  SpanC out(compose(pb.p, s.lleg()), compose(pb.q, t.rleg()));
  return {std::move(out), std::move(pb)};
}

SpanC compose(const SpanC& s, const SpanC& t) { return compose_with_pullback(s, t).first; }

SpanC tensor(const SpanC& s, const SpanC& t) {
  Coproduct sum = coproduct(s.carrier(), t.carrier());
  std::vector<IndexSet> lleg = s.lleg().map();
  std::vector<IndexSet> rleg = s.rleg().map();
  for (const IndexSet& x : t.lleg().map()) lleg.push_back(x.shifted(s.left()));
  for (const IndexSet& x : t.rleg().map()) rleg.push_back(x.shifted(s.right()));
  return SpanC(s.left() + t.left(), s.right() + t.right(), std::move(sum.sum), std::move(lleg), std::move(rleg));
}

SpanC identity_span_c(std::size_t n) {
  CRel id = identity(CSet::discrete(n));
  return SpanC(id, id);
}

SpanC generator_c(Generator g) {
  const IndexSet none;
  const IndexSet p0{0};
  const IndexSet p1{1};
  const IndexSet both{0, 1};
  switch (g) {
    case Generator::Copy: return SpanC(1, 2, CSet::discrete(1), {p0}, {both});
    case Generator::Del: return SpanC(1, 0, CSet::discrete(1), {p0}, {none});
    case Generator::Merge: return SpanC(2, 1, CSet::discrete(1), {both}, {p0});
    case Generator::New: return SpanC(0, 1, CSet::discrete(1), {none}, {p0});
    case Generator::Split: return SpanC(1, 2, CSet::full(2), {p0, p0}, {p0, p1});
    case Generator::Stop: return SpanC(1, 0, CSet::discrete(0), {}, {});
    case Generator::Join: return SpanC(2, 1, CSet::full(2), {p0, p1}, {p0, p0});
    case Generator::Start: return SpanC(0, 1, CSet::discrete(0), {}, {});
    case Generator::Id: return identity_span_c(1);
    case Generator::Swap: return SpanC(2, 2, CSet::discrete(2), {p0, p1}, {p1, p0});
  }
  throw DomainError("unknown generator");
}

std::vector<std::pair<Generator, SpanC>> generators_c() {
  std::vector<std::pair<Generator, SpanC>> out;
  for (Generator g : kAllGenerators) out.emplace_back(g, generator_c(g));
  return out;
}

std::vector<ContentionPair> structural_contention(const SpanC& s) {
  std::vector<ContentionPair> out;
  for (std::size_t i = 0; i < s.links(); ++i)
    for (std::size_t j = i + 1; j < s.links(); ++j)
      if (s.lleg()(i).intersects(s.lleg()(j)) || s.rleg()(i).intersects(s.rleg()(j))) out.emplace_back(i, j);
  return out;
}

SpanC permute_carrier(const SpanC& s, const std::vector<std::size_t>& perm) {
  const std::size_t n = s.links();
  if (perm.size() != n) throw DomainError("permutation size mismatch");
  std::vector<IndexSet> lleg(n), rleg(n);
  for (std::size_t i = 0; i < n; ++i) {
    lleg[perm[i]] = s.lleg()(i);
    rleg[perm[i]] = s.rleg()(i);
  }
  std::vector<ContentionPair> pairs;
  for (const auto& [a, b] : s.carrier().contention()) pairs.emplace_back(perm[a], perm[b]);
  return SpanC(s.left(), s.right(), CSet(n, std::move(pairs)), std::move(lleg), std::move(rleg));
}

namespace {

using Signature = std::tuple<IndexSet, IndexSet, std::size_t>;

Signature signature(const SpanC& s, std::size_t x) {
  return {s.lleg()(x), s.rleg()(x), s.carrier().neighbours(x).size()};
}

bool extend_iso(const SpanC& s, const SpanC& t, const std::vector<Signature>& ss, const std::vector<Signature>& ts,
                std::size_t i, std::vector<std::size_t>& sigma, std::vector<bool>& used) {
  if (i == s.links()) return true;
  for (std::size_t j = 0; j < t.links(); ++j) {
    if (used[j] || ss[i] != ts[j]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < i && ok; ++k)
      ok = s.carrier().contends(i, k) == t.carrier().contends(j, sigma[k]);
    if (!ok) continue;
    sigma[i] = j;
    used[j] = true;
    if (extend_iso(s, t, ss, ts, i + 1, sigma, used)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> iso_witness(const SpanC& s, const SpanC& t) {
  if (s.left() != t.left() || s.right() != t.right() || s.links() != t.links() ||
      s.carrier().contention().size() != t.carrier().contention().size())
    return std::nullopt;
  const std::size_t n = s.links();
  std::vector<Signature> ss(n), ts(n);
  for (std::size_t i = 0; i < n; ++i) {
    ss[i] = signature(s, i);
    ts[i] = signature(t, i);
  }
  {
    auto a = ss, b = ts;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<std::size_t> sigma(n);
  std::vector<bool> used(n, false);
  if (!extend_iso(s, t, ss, ts, 0, sigma, used)) return std::nullopt;
  return sigma;
}

bool iso_check(const SpanC& s, const SpanC& t) { return iso_witness(s, t).has_value(); }

namespace {

// Colour refinement seeded with leg images, then a search over orderings of
// the remaining colour classes.
std::vector<std::size_t> refined_colours(const SpanC& s) {
  const std::size_t n = s.links();
  std::vector<std::size_t> colour(n);
  {
    std::vector<Signature> sig(n);
    for (std::size_t i = 0; i < n; ++i) sig[i] = signature(s, i);
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t i = 0; i < n; ++i)
      colour[i] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), sig[i]) - distinct.begin());
  }
  std::size_t classes = 0;
  while (true) {
    using Key = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<Key> keys(n);
    for (std::size_t i = 0; i < n; ++i) {
      keys[i].first = colour[i];
      s.carrier().neighbours(i).for_each([&](std::size_t j) { keys[i].second.push_back(colour[j]); });
      std::sort(keys[i].second.begin(), keys[i].second.end());
    }
    std::vector<Key> distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t i = 0; i < n; ++i)
      colour[i] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), keys[i]) - distinct.begin());
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return colour;
}

bool twins(const SpanC& s, const std::vector<std::size_t>& members) {
  for (std::size_t a = 1; a < members.size(); ++a) {
    IndexSet x = s.carrier().neighbours(members[0]);
    IndexSet y = s.carrier().neighbours(members[a]);
    x.erase(members[a]);
    y.erase(members[0]);
    if (!(x == y)) return false;
  }
  return true;
}

std::vector<bool> encode(const SpanC& s, const std::vector<std::size_t>& order) {
  std::vector<bool> bits;
  bits.reserve(order.size() * order.size() / 2);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) bits.push_back(s.carrier().contends(order[i], order[j]));
  return bits;
}

}  // namespace

SpanC canonical(const SpanC& s) {
  const std::size_t n = s.links();
  const std::vector<std::size_t> colour = refined_colours(s);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return colour[a] < colour[b]; });

  // Class boundaries in `order`; only non-twin classes need permuting.
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    std::vector<std::size_t> members(order.begin() + static_cast<std::ptrdiff_t>(i),
                                     order.begin() + static_cast<std::ptrdiff_t>(j));
    if (j - i > 1 && !twins(s, members)) ranges.emplace_back(i, j);
    i = j;
  }

  std::vector<std::size_t> best = order;
  std::vector<bool> best_bits = encode(s, order);
  std::vector<std::size_t> work = order;
  for (auto& [a, b] : ranges)
    std::sort(work.begin() + static_cast<std::ptrdiff_t>(a), work.begin() + static_cast<std::ptrdiff_t>(b));

  // Odometer over the product of class permutations.
  auto advance = [&]() {
    for (std::size_t r = 0; r < ranges.size(); ++r) {
      auto first = work.begin() + static_cast<std::ptrdiff_t>(ranges[r].first);
      auto last = work.begin() + static_cast<std::ptrdiff_t>(ranges[r].second);
      if (std::next_permutation(first, last)) return true;
    }
    return false;
  };
  if (!ranges.empty()) {
    best = work;
    best_bits = encode(s, work);
    while (advance()) {
      std::vector<bool> bits = encode(s, work);
      if (bits < best_bits) {
        best_bits = std::move(bits);
        best = work;
      }
    }
  }

  std::vector<std::size_t> perm(n);
  for (std::size_t pos = 0; pos < n; ++pos) perm[best[pos]] = pos;
  return permute_carrier(s, perm);
}

std::string canonical_key(const SpanC& s) {
  const SpanC c = canonical(s);
  std::string key = "c" + std::to_string(c.left()) + ":" + std::to_string(c.right()) + "|";
  for (std::size_t i = 0; i < c.links(); ++i) key += c.lleg()(i).to_string() + c.rleg()(i).to_string() + ";";
  key += "|";
  for (const auto& [a, b] : c.carrier().contention()) key += std::to_string(a) + "-" + std::to_string(b) + ",";
  return key;
}

}  // namespace linking
