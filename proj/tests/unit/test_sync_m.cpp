#include <doctest.h>

#include "linking/errors.hpp"
#include "linking/sync_m.hpp"
#include "oracles.hpp"

using namespace linking;

namespace {

const MRel t(2, 1, {Multiset{1}, Multiset{1}});

}  // namespace

TEST_SUITE("sync_m") {
  TEST_CASE("the two-to-one map against itself") {
    const auto m = min_msyncs(t, t);
    const std::vector<SyncM> expect{{{1, 0}, {1, 0}}, {{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}, {{0, 1}, {0, 1}}};
    CHECK(m == expect);
    CHECK(weak_pullback(t, t).apex() == 4);
  }

  TEST_CASE("identities give the diagonal") {
    const auto m = min_msyncs(MRel::identity(3), MRel::identity(3));
    REQUIRE(m.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(m[i].u == Multiset::unit(3, i));
      CHECK(m[i].v == m[i].u);
    }
    const WeakPullbackM pb = weak_pullback(MRel::identity(3), MRel::identity(3));
    CHECK(pb.p == MRel::identity(3));
    CHECK(pb.q == MRel::identity(3));
  }

  TEST_CASE("two and three meet at six") {
    const MRel f(1, 1, {Multiset{2}}), g(1, 1, {Multiset{3}});
    CHECK(min_msyncs(f, g) == std::vector<SyncM>{{{3}, {2}}});
    CHECK(oracle::brute_min_msyncs_in_box(f, g, 6) == min_msyncs(f, g));
  }

  TEST_CASE("hilbert basis of small systems") {
    CHECK(hilbert_basis({}, 0).empty());
    CHECK(hilbert_basis({}, 2) == std::vector<std::vector<Count>>{{0, 1}, {1, 0}});
    CHECK(hilbert_basis({{1, -1}}, 2) == std::vector<std::vector<Count>>{{1, 1}});
    CHECK(hilbert_basis({{1, 1}}, 2).empty());
    CHECK(hilbert_basis({{2, -3, -1}}, 3) ==
          std::vector<std::vector<Count>>{{1, 0, 2}, {2, 1, 1}, {3, 2, 0}});
  }

  TEST_CASE("decompositions") {
    const auto mins = min_msyncs(t, t);
    const SyncM s{{1, 1}, {1, 1}};
    const Decomposition d = minimal_decomposition(t, t, s);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == std::pair<Count, SyncM>{1, {{1, 0}, {1, 0}}});
    CHECK(d[1] == std::pair<Count, SyncM>{1, {{0, 1}, {0, 1}}});
    CHECK(all_decompositions(mins, s).size() == 2);
    CHECK(minimal_decomposition(t, t, mins[1]) == Decomposition{{1, mins[1]}});
    CHECK(minimal_decomposition(t, t, SyncM{{2, 0}, {0, 2}}) == Decomposition{{2, mins[1]}});
    CHECK_THROWS_AS(minimal_decomposition(t, t, SyncM{{1, 0}, {0, 0}}), DomainError);
  }

  TEST_CASE("weak pullback commutes and admits several factorisations") {
    const WeakPullbackM pb = weak_pullback(t, t);
    CHECK(compose(pb.p, t) == compose(pb.q, t));
    const MRel u(1, 2, {Multiset{1, 1}});
    const MRel h = weak_mediator(pb, t, t, u, u);
    CHECK(compose(h, pb.p) == u);
    CHECK(compose(h, pb.q) == u);
    std::size_t factorisations = 0;
    for (const auto& k : all_decompositions(pb.syncs, SyncM{u(0), u(0)})) {
      const MRel hk(1, pb.apex(), {Multiset(k)});
      if (compose(hk, pb.p) == u && compose(hk, pb.q) == u) ++factorisations;
    }
    CHECK(factorisations >= 2);
  }

  TEST_CASE("min_msyncs matches brute force in a box on random small systems") {
    oracle::Rng rng(61);
    for (int i = 0; i < 100; ++i) {
      const std::size_t x = oracle::uniform(rng, 0, 2);
      const MRel f = oracle::random_mrel(rng, oracle::uniform(rng, 0, 2), x, 3);
      const MRel g = oracle::random_mrel(rng, oracle::uniform(rng, 0, 2), x, 3);
      const auto mins = min_msyncs(f, g);
      Count bound = 6;
      for (const SyncM& s : mins) {
        for (Count c : s.u.counts()) bound = std::max(bound, c);
        for (Count c : s.v.counts()) bound = std::max(bound, c);
      }
      CHECK(mins == oracle::brute_min_msyncs_in_box(f, g, bound));
      for (std::size_t a = 0; a < mins.size(); ++a) {
        CHECK(is_msync(f, g, mins[a]));
        CHECK_FALSE(mins[a].is_zero());
        for (std::size_t b = 0; b < mins.size(); ++b)
          if (a != b) CHECK_FALSE(mins[a].leq(mins[b]));
      }
    }
  }
}
