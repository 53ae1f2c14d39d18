#include "linking/multiset.hpp"

#include <stdexcept>

#include "linking/errors.hpp"

namespace linking {

namespace {

Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("multiset count overflow");
  return r;
}

Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("multiset count overflow");
  return r;
}

void require_same_base(const Multiset& a, const Multiset& b) {
  if (a.over() != b.over()) throw DomainError("multisets over different bases");
}

}  // namespace

Multiset Multiset::unit(std::size_t over, std::size_t x) {
  Multiset m(over);
  m[x] = 1;
  return m;
}

bool Multiset::is_zero() const noexcept {
  for (Count c : counts_)
    if (c != 0) return false;
  return true;
}

Count Multiset::total() const {
  Count t = 0;
  for (Count c : counts_) t = checked_add(t, c);
  return t;
}

std::strong_ordering Multiset::operator<=>(const Multiset& other) const {
  // Walk both ascending element sequences in step.
  std::size_t i = 0, j = 0;
  Count ci = 0, cj = 0;
  auto settle = [](const std::vector<Count>& v, std::size_t& k, Count& used) {
    while (k < v.size() && used == v[k]) {
      ++k;
      used = 0;
    }
  };
  while (true) {
    settle(counts_, i, ci);
    settle(other.counts_, j, cj);
    const bool end_a = i >= counts_.size();
    const bool end_b = j >= other.counts_.size();
    if (end_a || end_b) {
      if (end_a && end_b) return counts_.size() <=> other.counts_.size();
      return end_a ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (i != j) return i < j ? std::strong_ordering::less : std::strong_ordering::greater;
    ++ci;
    ++cj;
  }
}

std::string Multiset::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i != 0) s += ",";
    s += std::to_string(counts_[i]);
  }
  return s + "]";
}

Multiset add(const Multiset& a, const Multiset& b) {
  require_same_base(a, b);
  Multiset r(a.over());
  for (std::size_t x = 0; x < a.over(); ++x) r[x] = checked_add(a[x], b[x]);
  return r;
}

bool geq(const Multiset& a, const Multiset& b) {
  require_same_base(a, b);
  for (std::size_t x = 0; x < a.over(); ++x)
    if (a[x] < b[x]) return false;
  return true;
}

Multiset sub(const Multiset& a, const Multiset& b) {
  if (!geq(a, b)) throw DomainError("multiset subtraction underflow: " + a.to_string() + " - " + b.to_string());
  Multiset r(a.over());
  for (std::size_t x = 0; x < a.over(); ++x) r[x] = a[x] - b[x];
  return r;
}

Multiset scale(Count k, const Multiset& a) {
  Multiset r(a.over());
  for (std::size_t x = 0; x < a.over(); ++x) r[x] = checked_mul(k, a[x]);
  return r;
}

MRel::MRel(std::size_t dom, std::size_t cod, std::vector<Multiset> rows)
    : dom_(dom), cod_(cod), rows_(std::move(rows)) {
  if (rows_.size() != dom_)
    throw DomainError("multirelation has " + std::to_string(rows_.size()) + " rows for a domain of size " +
                      std::to_string(dom_));
  for (const Multiset& r : rows_)
    if (r.over() != cod_) throw DomainError("multirelation row is not over the codomain");
}

MRel MRel::identity(std::size_t n) {
  std::vector<Multiset> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rows.push_back(Multiset::unit(n, i));
  return MRel(n, n, std::move(rows));
}

Multiset lift(const MRel& f, const Multiset& u) {
  if (u.over() != f.dom()) throw DomainError("lift: multiset is not over the domain");
  Multiset out(f.cod());
  for (std::size_t a = 0; a < f.dom(); ++a) {
    if (u[a] == 0) continue;
    const Multiset& row = f(a);
    for (std::size_t x = 0; x < f.cod(); ++x) out[x] = checked_add(out[x], checked_mul(u[a], row[x]));
  }
  return out;
}

MRel compose(const MRel& f, const MRel& g) {
  if (f.cod() != g.dom()) throw DomainError("cannot compose multirelations: codomain and domain differ");
  std::vector<Multiset> rows;
  rows.reserve(f.dom());
  for (const Multiset& r : f.rows()) rows.push_back(lift(g, r));
  return MRel(f.dom(), g.cod(), std::move(rows));
}

}  // namespace linking
