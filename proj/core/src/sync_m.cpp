#include "linking/sync_m.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "linking/errors.hpp"

namespace linking {

namespace {

using Vec = std::vector<Count>;

std::int64_t to_signed(Count c) {
  if (c > static_cast<Count>(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("multiplicity too large for the synchronisation system");
  return static_cast<std::int64_t>(c);
}

// acc + a*b, throwing instead of wrapping.
std::int64_t mul_add(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod, sum;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &sum))
    throw std::overflow_error("synchronisation defect overflow");
  return sum;
}

bool dominates(const Vec& x, const Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < y[i]) return false;
  return true;
}

void require_common_codomain(const MRel& f, const MRel& g) {
  if (f.cod() != g.cod()) throw DomainError("synchronisation needs a common codomain");
}

}  // namespace

std::vector<Vec> hilbert_basis(const std::vector<std::vector<std::int64_t>>& rows, std::size_t n) {
  for (const auto& r : rows)
    if (r.size() != n) throw DomainError("ragged system matrix");
  const std::size_t m = rows.size();

  auto defect = [&](const Vec& x) {
    std::vector<std::int64_t> d(m);
    for (std::size_t r = 0; r < m; ++r) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc = mul_add(acc, rows[r][j], to_signed(x[j]));
      d[r] = acc;
    }
    return d;
  };

  std::vector<Vec> basis;
  std::set<Vec> frontier;
  for (std::size_t j = 0; j < n; ++j) {
    Vec e(n, 0);
    e[j] = 1;
    frontier.insert(std::move(e));
  }

  while (!frontier.empty()) {
    std::vector<std::pair<Vec, std::vector<std::int64_t>>> pending;
    for (const Vec& x : frontier) {
      auto d = defect(x);
      if (std::all_of(d.begin(), d.end(), [](std::int64_t v) { return v == 0; }))
        basis.push_back(x);
      else
        pending.emplace_back(x, std::move(d));
    }
    std::set<Vec> next;
    for (const auto& [x, d] : pending) {
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t dot = 0;
        for (std::size_t r = 0; r < m; ++r) dot = mul_add(dot, d[r], rows[r][j]);
        if (dot >= 0) continue;
        Vec y = x;
        ++y[j];
        if (std::any_of(basis.begin(), basis.end(), [&](const Vec& b) { return dominates(y, b); })) continue;
        next.insert(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

bool is_msync(const MRel& f, const MRel& g, const SyncM& s) {
  require_common_codomain(f, g);
  return lift(f, s.u) == lift(g, s.v);
}

std::vector<SyncM> min_msyncs(const MRel& f, const MRel& g) {
  require_common_codomain(f, g);
  const std::size_t a = f.dom(), b = g.dom();
  std::vector<std::vector<std::int64_t>> rows(f.cod(), std::vector<std::int64_t>(a + b, 0));
  for (std::size_t x = 0; x < f.cod(); ++x) {
    for (std::size_t i = 0; i < a; ++i) rows[x][i] = to_signed(f(i)[x]);
    for (std::size_t j = 0; j < b; ++j) rows[x][a + j] = -to_signed(g(j)[x]);
  }
  std::vector<SyncM> out;
  for (const Vec& sol : hilbert_basis(rows, a + b)) {
    SyncM s{Multiset(Vec(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(a))),
            Multiset(Vec(sol.begin() + static_cast<std::ptrdiff_t>(a), sol.end()))};
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeakPullbackM weak_pullback(const MRel& f, const MRel& g) {
  std::vector<SyncM> syncs = min_msyncs(f, g);
  std::vector<Multiset> prow, qrow;
  for (const SyncM& s : syncs) {
    prow.push_back(s.u);
    qrow.push_back(s.v);
  }
  MRel p(syncs.size(), f.dom(), std::move(prow));
  MRel q(syncs.size(), g.dom(), std::move(qrow));
  return WeakPullbackM{std::move(syncs), std::move(p), std::move(q)};
}

Decomposition minimal_decomposition(const std::vector<SyncM>& minimal, const SyncM& s) {
  std::vector<Count> coeff(minimal.size(), 0);
  SyncM rest = s;
  while (!rest.is_zero()) {
    bool progressed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      if (!minimal[i].leq(rest)) continue;
      rest = SyncM{sub(rest.u, minimal[i].u), sub(rest.v, minimal[i].v)};
      ++coeff[i];
      progressed = true;
      break;
    }
    if (!progressed) throw DomainError("no minimal synchronisation below the remainder; not a synchronisation");
  }
  Decomposition out;
  for (std::size_t i = 0; i < minimal.size(); ++i)
    if (coeff[i] != 0) out.emplace_back(coeff[i], minimal[i]);
  return out;
}

Decomposition minimal_decomposition(const MRel& f, const MRel& g, const SyncM& s) {
  if (!is_msync(f, g, s)) throw DomainError("not a synchronisation");
  return minimal_decomposition(min_msyncs(f, g), s);
}

namespace {

void enumerate_decompositions(const std::vector<SyncM>& minimal, std::size_t i, const SyncM& rest,
                              std::vector<Count>& coeff, std::vector<std::vector<Count>>& out) {
  if (rest.is_zero()) {
    out.push_back(coeff);
    return;
  }
  if (i == minimal.size()) return;
  // Try every multiple of minimal[i] that still fits, largest first.
  std::vector<SyncM> multiples{rest};
  while (minimal[i].leq(multiples.back()) && !minimal[i].is_zero())
    multiples.push_back(SyncM{sub(multiples.back().u, minimal[i].u), sub(multiples.back().v, minimal[i].v)});
  for (std::size_t k = multiples.size(); k-- > 0;) {
    coeff[i] = k;
    enumerate_decompositions(minimal, i + 1, multiples[k], coeff, out);
  }
  coeff[i] = 0;
}

}  // namespace

std::vector<std::vector<Count>> all_decompositions(const std::vector<SyncM>& minimal, const SyncM& s) {
  std::vector<std::vector<Count>> out;
  std::vector<Count> coeff(minimal.size(), 0);
  enumerate_decompositions(minimal, 0, s, coeff, out);
  return out;
}

MRel weak_mediator(const WeakPullbackM& pb, const MRel& f, const MRel& g, const MRel& alpha, const MRel& beta) {
  if (alpha.dom() != beta.dom()) throw DomainError("cone legs have different domains");
  if (!(compose(alpha, f) == compose(beta, g))) throw DomainError("cone does not commute over the cospan");
  std::vector<Multiset> rows;
  for (std::size_t z = 0; z < alpha.dom(); ++z) {
    Multiset row(pb.apex());
    const Decomposition d = minimal_decomposition(pb.syncs, SyncM{alpha(z), beta(z)});
    for (const auto& [k, m] : d) {
      const auto it = std::find(pb.syncs.begin(), pb.syncs.end(), m);
      row[static_cast<std::size_t>(it - pb.syncs.begin())] = k;
    }
    rows.push_back(std::move(row));
  }
  return MRel(alpha.dom(), pb.apex(), std::move(rows));
}

}  // namespace linking
