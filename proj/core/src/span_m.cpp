#include "linking/span_m.hpp"

#include <algorithm>

#include "linking/errors.hpp"

namespace linking {

namespace {

Multiset padded(const Multiset& m, std::size_t before, std::size_t after) {
  std::vector<Count> c(before, 0);
  c.insert(c.end(), m.counts().begin(), m.counts().end());
  c.resize(c.size() + after, 0);
  return Multiset(std::move(c));
}

std::pair<MRel, MRel> legs_of(std::size_t left, std::size_t right, const std::vector<LinkImage>& links) {
  std::vector<Multiset> l, r;
  l.reserve(links.size());
  r.reserve(links.size());
  for (const auto& [a, b] : links) {
    l.push_back(a);
    r.push_back(b);
  }
  return {MRel(links.size(), left, std::move(l)), MRel(links.size(), right, std::move(r))};
}

}  // namespace

SpanM::SpanM(MRel lleg, MRel rleg) : lleg_(std::move(lleg)), rleg_(std::move(rleg)) {
  if (lleg_.dom() != rleg_.dom()) throw DomainError("span legs have different carriers");
  std::vector<LinkImage> im = images();
  std::sort(im.begin(), im.end());
  if (std::adjacent_find(im.begin(), im.end()) != im.end())
    throw DomainError("span is not relational: two links have the same boundary images");
}

SpanM::SpanM(std::size_t left, std::size_t right, std::vector<LinkImage> links) {
  auto [l, r] = legs_of(left, right, links);
  *this = SpanM(std::move(l), std::move(r));
}

std::vector<LinkImage> SpanM::images() const {
  std::vector<LinkImage> out;
  out.reserve(links());
  for (std::size_t x = 0; x < links(); ++x) out.push_back(link(x));
  return out;
}

SpanM factorise(std::size_t left, std::size_t right, std::vector<LinkImage> links) {
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  return SpanM(left, right, std::move(links));
}

ComposeTraceM compose_traced(const SpanM& s, const SpanM& t) {
  if (s.right() != t.left())
    throw DomainError("cannot compose spans " + std::to_string(s.left()) + "→" + std::to_string(s.right()) +
                      " and " + std::to_string(t.left()) + "→" + std::to_string(t.right()));
  WeakPullbackM pb = weak_pullback(s.rleg(), t.lleg());
  std::vector<LinkImage> raw;
  raw.reserve(pb.apex());
  for (const SyncM& m : pb.syncs) raw.emplace_back(lift(s.lleg(), m.u), lift(t.rleg(), m.v));
  SpanM result = factorise(s.left(), t.right(), raw);
  return ComposeTraceM{std::move(pb), std::move(raw), std::move(result)};
}

SpanM compose(const SpanM& s, const SpanM& t) { return compose_traced(s, t).result; }

SpanM tensor(const SpanM& s, const SpanM& t) {
  std::vector<LinkImage> links;
  for (const auto& [l, r] : s.images()) links.emplace_back(padded(l, 0, t.left()), padded(r, 0, t.right()));
  for (const auto& [l, r] : t.images()) links.emplace_back(padded(l, s.left(), 0), padded(r, s.right(), 0));
  // Links with no boundary on either side would collide; merging keeps the span relational.
  return factorise(s.left() + t.left(), s.right() + t.right(), std::move(links));
}

SpanM identity_span_m(std::size_t n) { return SpanM(MRel::identity(n), MRel::identity(n)); }

SpanM generator_m(Generator g) {
  const Multiset none0{};
  const Multiset one{1};
  const Multiset p0{1, 0};
  const Multiset p1{0, 1};
  const Multiset both{1, 1};
  switch (g) {
    case Generator::Copy: return SpanM(1, 2, {{one, both}});
    case Generator::Del: return SpanM(1, 0, {{one, none0}});
    case Generator::Merge: return SpanM(2, 1, {{both, one}});
    case Generator::New: return SpanM(0, 1, {{none0, one}});
    case Generator::Split: return SpanM(1, 2, {{one, p0}, {one, p1}});
    case Generator::Stop: return SpanM(1, 0, std::vector<LinkImage>{});
    case Generator::Join: return SpanM(2, 1, {{p0, one}, {p1, one}});
    case Generator::Start: return SpanM(0, 1, std::vector<LinkImage>{});
    case Generator::Id: return identity_span_m(1);
    case Generator::Swap: return SpanM(2, 2, {{p0, p1}, {p1, p0}});
  }
  throw DomainError("unknown generator");
}

std::vector<std::pair<Generator, SpanM>> generators_m() {
  std::vector<std::pair<Generator, SpanM>> out;
  for (Generator g : kAllGenerators) out.emplace_back(g, generator_m(g));
  return out;
}

SpanM canonical(const SpanM& s) { return factorise(s.left(), s.right(), s.images()); }

bool iso_check(const SpanM& s, const SpanM& t) {
  return s.left() == t.left() && s.right() == t.right() && canonical(s) == canonical(t);
}

}  // namespace linking

namespace linking {

std::string canonical_key(const SpanM& s) {
  std::string out = "m" + std::to_string(s.left()) + ":" + std::to_string(s.right()) + "|";
  bool first = true;
  for (const auto& [l, r] : canonical(s).images()) {
    if (!first) out += ";";
    first = false;
    out += l.to_string() + ">" + r.to_string();
  }
  return out;
}

}  // namespace linking
