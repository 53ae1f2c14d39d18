#include <doctest.h>

#include <limits>

#include "linking/errors.hpp"
#include "linking/multiset.hpp"
#include "oracles.hpp"

using namespace linking;

TEST_SUITE("multiset") {
  TEST_CASE("arithmetic") {
    CHECK(add(Multiset{1, 0}, Multiset{0, 2}) == Multiset{1, 2});
    CHECK(geq(Multiset{2, 1}, Multiset{1, 1}));
    CHECK(sub(Multiset{2, 1}, Multiset{1, 1}) == Multiset{1, 0});
    CHECK(scale(3, Multiset{1, 2}) == Multiset{3, 6});
    CHECK_THROWS_AS(sub(Multiset{0, 1}, Multiset{1, 0}), DomainError);
    CHECK_THROWS_AS(add(Multiset{1}, Multiset{1, 0}), DomainError);
  }

  TEST_CASE("overflow is reported, not wrapped") {
    const Count big = std::numeric_limits<Count>::max();
    CHECK_THROWS_AS(add(Multiset{big}, Multiset{1}), std::overflow_error);
    CHECK_THROWS_AS(scale(2, Multiset{big}), std::overflow_error);
  }

  TEST_CASE("order compares element sequences") {
    CHECK(Multiset{0, 0} < Multiset{1, 0});
    CHECK(Multiset{1, 0} < Multiset{2, 0});
    CHECK(Multiset{2, 0} < Multiset{1, 1});
    CHECK(Multiset{1, 1} < Multiset{0, 1});
    CHECK(Multiset{1, 0} == Multiset{1, 0});
  }

  TEST_CASE("lift") {
    const MRel t(2, 1, {Multiset{1}, Multiset{1}});
    CHECK(lift(t, Multiset{0, 0}) == Multiset{0});
    CHECK(lift(MRel::identity(3), Multiset{1, 0, 2}) == Multiset{1, 0, 2});
    CHECK(lift(t, Multiset{2, 3}) == Multiset{5});
    CHECK_THROWS_AS(lift(t, Multiset{1}), DomainError);
  }

  TEST_CASE("lift is linear") {
    oracle::Rng rng(51);
    for (int i = 0; i < 200; ++i) {
      const MRel f = oracle::random_mrel(rng, oracle::uniform(rng, 0, 3), oracle::uniform(rng, 0, 3), 3);
      Multiset u(f.dom()), v(f.dom());
      for (std::size_t a = 0; a < f.dom(); ++a) {
        u[a] = oracle::uniform(rng, 0, 4);
        v[a] = oracle::uniform(rng, 0, 4);
      }
      const Count k = oracle::uniform(rng, 0, 5);
      CHECK(lift(f, add(u, v)) == add(lift(f, u), lift(f, v)));
      CHECK(lift(f, scale(k, u)) == scale(k, lift(f, u)));
    }
  }

  TEST_CASE("composition is matrix product and satisfies the monad laws") {
    oracle::Rng rng(52);
    for (int i = 0; i < 200; ++i) {
      const std::size_t a = oracle::uniform(rng, 0, 3), b = oracle::uniform(rng, 0, 3), c = oracle::uniform(rng, 0, 3),
                        d = oracle::uniform(rng, 0, 3);
      const MRel f = oracle::random_mrel(rng, a, b, 3), g = oracle::random_mrel(rng, b, c, 3),
                 h = oracle::random_mrel(rng, c, d, 3);
      const MRel fg = compose(f, g);
      const auto expect = oracle::matmul(f, g);
      for (std::size_t x = 0; x < a; ++x) CHECK(fg(x).counts() == expect[x]);
      CHECK(compose(fg, h) == compose(f, compose(g, h)));
      CHECK(compose(MRel::identity(a), f) == f);
      CHECK(compose(f, MRel::identity(b)) == f);
    }
    CHECK_THROWS_AS(compose(MRel::identity(2), MRel::identity(3)), DomainError);
  }
}
