#include <doctest.h>

#include "linking/errors.hpp"
#include "linking/eval.hpp"
#include "linking/suite.hpp"
#include "oracles.hpp"

using namespace linking;

TEST_SUITE("terms") {
  TEST_CASE("parse builds left-associative trees with tensor binding tighter") {
    const TermPtr t = parse("copy ; (del * id)");
    CHECK(same_term(t, seq(atom(Generator::Copy), ten(atom(Generator::Del), atom(Generator::Id)))));
    CHECK(same_term(parse("split ; join"), seq(atom(Generator::Split), atom(Generator::Join))));
  }
}

TEST_SUITE("terms") {
  TEST_CASE("precedence and associativity") {
    const TermPtr t = parse("id * id ; swap ; id * id");
    REQUIRE(t->kind == Term::Kind::Seq);
    CHECK(t->lhs->kind == Term::Kind::Seq);
    CHECK(t->rhs->kind == Term::Kind::Ten);
    const TermPtr u = parse("id * id * id");
    CHECK(u->lhs->kind == Term::Kind::Ten);
    CHECK(u->rhs->kind == Term::Kind::Atom);
  }

  TEST_CASE("unicode names and tensor symbol") {
    CHECK(same_term(parse("Δ ; (⊥ ⊗ I)"), parse("copy ; (del * id)")));
    CHECK(same_term(parse("Λ;V"), parse("split ; join")));
    CHECK(same_term(parse("⊤ * ↑ * ↓ * ∇ * X"), parse("new * start * stop * merge * swap")));
  }

  TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("copy ;"), ParseError);
    CHECK_THROWS_AS(parse("(copy"), ParseError);
    CHECK_THROWS_AS(parse("copy )"), ParseError);
    try {
      parse("copy ; frob");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 7);
    }
  }

  TEST_CASE("typechecking") {
    CHECK(type_of(parse("copy ; (del * id)")) == Arity{1, 1});
    CHECK(type_of(parse("new * swap")) == Arity{2, 3});
    CHECK_THROWS_AS(type_of(parse("copy ; copy")), TypeError);
    CHECK_THROWS_AS(parse_typed("copy ; copy"), TypeError);
    try {
      type_of(parse("copy ; copy"));
    } catch (const TypeError& e) {
      CHECK(std::string(e.what()).find("offset 5") != std::string::npos);
    }
  }

  TEST_CASE("print round-trips through parse") {
    oracle::Rng rng(81);
    for (int i = 0; i < 300; ++i) {
      const TermPtr t = oracle::random_term(rng, 4, oracle::uniform(rng, 0, 2));
      const TermPtr back = parse(print(t));
      CHECK(same_term(t, back));
      CHECK(print(back) == print(t));
    }
  }

  TEST_CASE("random terms respect the depth bound") {
    oracle::Rng rng(82);
    for (int i = 0; i < 300; ++i) {
      const TermPtr t = oracle::random_term(rng, 4, oracle::uniform(rng, 0, 3));
      CHECK(term_depth(t) <= 4);
      CHECK_NOTHROW(type_of(t));
    }
  }

  TEST_CASE("evaluation examples") {
    CHECK(iso_check(eval_m(parse("split ; join")), generator_m(Generator::Id)));
    CHECK_FALSE(iso_check(eval_c(parse("split ; join")), generator_c(Generator::Id)));
    CHECK(iso_check(eval_c(parse("copy ; (id * del)")), generator_c(Generator::Id)));
    CHECK_THROWS_AS(eval_c(parse("copy ; copy")), TypeError);
  }

  TEST_CASE("evaluation is compositional") {
    oracle::Rng rng(83);
    for (int i = 0; i < 100; ++i) {
      const TermPtr a = oracle::random_term(rng, 3, oracle::uniform(rng, 0, 2));
      const TermPtr b = oracle::random_term(rng, 3, type_of(a).out > 4 ? 0 : type_of(a).out);
      if (type_of(a).out == type_of(b).in) {
        CHECK(iso_check(eval_c(seq(a, b)), compose(eval_c(a), eval_c(b))));
        CHECK(iso_check(eval_m(seq(a, b)), compose(eval_m(a), eval_m(b))));
      }
      CHECK(iso_check(eval_c(ten(a, b)), tensor(eval_c(a), eval_c(b))));
      CHECK(iso_check(eval_m(ten(a, b)), tensor(eval_m(a), eval_m(b))));
    }
  }

  TEST_CASE("check_equation") {
    const TermPtr f1 = parse("(id * copy) ; (merge * id)");
    const TermPtr f2 = parse("merge ; copy");
    CHECK(check_equation(f1, f2, Model::C));
    CHECK(check_equation(f1, f2, Model::M));
    const TermPtr b1 = parse("(split * split) ; (id * swap * id) ; (join * join)");
    const TermPtr b2 = parse("join ; split");
    CHECK_FALSE(check_equation(b1, b2, Model::C));
    CHECK(check_equation(b1, b2, Model::M));
    CHECK_THROWS_AS(check_equation(parse("copy"), parse("id"), Model::C), TypeError);
  }

  TEST_CASE("the equation table passes") {
    const auto rows = run_suite();
    CHECK(rows.size() > 60);
    for (const SuiteRow& r : rows) {
      INFO(r.label << " " << r.model << ": " << r.lhs << " = " << r.rhs);
      CHECK(r.pass());
    }
  }

  TEST_CASE("same picture") {
    CHECK(same_picture(eval_c(parse("join ; copy")), eval_m(parse("join ; copy"))));
    CHECK_FALSE(same_picture(eval_c(parse("copy ; join")), eval_m(parse("copy ; join"))));
    CHECK_FALSE(same_picture(eval_c(parse("join ; del")), eval_m(parse("join ; del"))));
  }
}
