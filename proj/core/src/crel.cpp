#include "linking/crel.hpp"

#include "linking/errors.hpp"

namespace linking {

CRel::CRel(CSet dom, CSet cod, std::vector<IndexSet> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (map_.size() != dom_.size())
    throw DomainError("relation has " + std::to_string(map_.size()) + " images for a domain of size " +
                      std::to_string(dom_.size()));
  for (const IndexSet& image : map_)
    if (image.bound() > cod_.size())
      throw DomainError("image " + image.to_string() + " outside codomain of size " +
                        std::to_string(cod_.size()));
}

std::optional<Violation> CRel::validate() const {
  for (std::size_t x = 0; x < map_.size(); ++x)
    if (!is_independent(cod_, map_[x]))
      return Violation{"image of " + std::to_string(x) + " is not independent", std::nullopt};
  for (std::size_t x = 0; x < map_.size(); ++x) {
    for (std::size_t y = x + 1; y < map_.size(); ++y) {
      if (subsets_contend(cod_, map_[x], map_[y]) && !dom_.contends(x, y))
        return Violation{"images of " + std::to_string(x) + " and " + std::to_string(y) +
                             " contend but the elements are independent",
                         ContentionPair{x, y}};
    }
  }
  return std::nullopt;
}

CRel identity(const CSet& x) {
  std::vector<IndexSet> map;
  map.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) map.push_back(IndexSet::singleton(i));
  return CRel(x, x, std::move(map));
}

IndexSet lift_unchecked(const CRel& f, const IndexSet& u) {
  IndexSet out;
  u.for_each([&](std::size_t x) { out |= f.map()[x]; });
  return out;
}

IndexSet lift(const CRel& f, const IndexSet& u) {
  if (!is_independent(f.dom(), u)) throw DomainError("lift of a non-independent subset " + u.to_string());
  return lift_unchecked(f, u);
}

CRel compose(const CRel& f, const CRel& g) {
  if (!(f.cod() == g.dom())) throw DomainError("cannot compose: codomain and domain differ");
  std::vector<IndexSet> map;
  map.reserve(f.dom().size());
  for (const IndexSet& image : f.map()) map.push_back(lift_unchecked(g, image));
  return CRel(f.dom(), g.cod(), std::move(map));
}

CRel graph_of(const CSet& dom, const std::vector<std::size_t>& fn, std::size_t cod_size) {
  if (fn.size() != dom.size()) throw DomainError("function length does not match domain");
  std::vector<IndexSet> map;
  for (std::size_t y : fn) {
    if (y >= cod_size) throw DomainError("function value outside codomain");
    map.push_back(IndexSet::singleton(y));
  }
  return CRel(dom, CSet::discrete(cod_size), std::move(map));
}

CRel opposite_graph_of(const std::vector<std::size_t>& fn, std::size_t cod_size) {
  std::vector<IndexSet> map(cod_size);
  for (std::size_t x = 0; x < fn.size(); ++x) {
    if (fn[x] >= cod_size) throw DomainError("function value outside codomain");
    map[fn[x]].insert(x);
  }
  return CRel(CSet::discrete(cod_size), CSet::discrete(fn.size()), std::move(map));
}

}  // namespace linking
