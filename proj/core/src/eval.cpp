#include "linking/eval.hpp"

#include "linking/errors.hpp"

namespace linking {

std::string_view model_name(Model m) { return m == Model::C ? "c" : "m"; }

Model model_from_name(std::string_view s) {
  if (s == "c") return Model::C;
  if (s == "m") return Model::M;
  throw ParseError("unknown model '" + std::string(s) + "', expected c or m");
}

namespace {

template <class Span, class Gen>
Span fold(const TermPtr& t, Gen gen) {
  switch (t->kind) {
    case Term::Kind::Atom: return gen(t->gen);
    case Term::Kind::Seq: return compose(fold<Span>(t->lhs, gen), fold<Span>(t->rhs, gen));
    case Term::Kind::Ten: return tensor(fold<Span>(t->lhs, gen), fold<Span>(t->rhs, gen));
  }
  throw DomainError("malformed term");
}

}  // namespace

SpanC eval_c(const TermPtr& t) {
  type_of(t);
  return fold<SpanC>(t, generator_c);
}

SpanM eval_m(const TermPtr& t) {
  type_of(t);
  return fold<SpanM>(t, generator_m);
}

}  // namespace linking
