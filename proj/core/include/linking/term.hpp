#pragma once

// Terms over the ten generators, composed with ";" and tensored with "*".

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "linking/generator.hpp"

namespace linking {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable expression tree. `pos` is the source offset of the node's
/// operator (or atom) when parsed, npos when built in code.
struct Term {
  enum class Kind { Atom, Seq, Ten };

  Kind kind = Kind::Atom;
  Generator gen = Generator::Id;
  TermPtr lhs;
  TermPtr rhs;
  std::size_t pos = std::string::npos;
};

TermPtr atom(Generator g, std::size_t pos = std::string::npos);
TermPtr seq(TermPtr a, TermPtr b, std::size_t pos = std::string::npos);
TermPtr ten(TermPtr a, TermPtr b, std::size_t pos = std::string::npos);

/// Grammar, with "*" binding tighter than ";" and both left-associative:
///   term   := factor (";" factor)*
///   factor := atom ("*" atom)*
///   atom   := NAME | "(" term ")"
/// NAME is an ASCII generator name or its symbol; "⊗" is accepted for "*".
/// Throws ParseError. Does not typecheck.
TermPtr parse(std::string_view text);

/// Minimal-parenthesis ASCII rendering; parse(print(t)) is structurally t.
std::string print(const TermPtr& t);

/// Boundary type. Throws TypeError naming the offending ";" node.
Arity type_of(const TermPtr& t);

/// Parse and typecheck.
TermPtr parse_typed(std::string_view text);

std::size_t term_size(const TermPtr& t);
std::size_t term_depth(const TermPtr& t);
bool same_term(const TermPtr& a, const TermPtr& b);

}  // namespace linking
