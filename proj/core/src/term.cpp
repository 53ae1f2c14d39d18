#include "linking/term.hpp"

#include <algorithm>
#include <cctype>

#include "linking/errors.hpp"

namespace linking {

TermPtr atom(Generator g, std::size_t pos) {
  return std::make_shared<const Term>(Term{Term::Kind::Atom, g, nullptr, nullptr, pos});
}

TermPtr seq(TermPtr a, TermPtr b, std::size_t pos) {
  return std::make_shared<const Term>(Term{Term::Kind::Seq, Generator::Id, std::move(a), std::move(b), pos});
}

TermPtr ten(TermPtr a, TermPtr b, std::size_t pos) {
  return std::make_shared<const Term>(Term{Term::Kind::Ten, Generator::Id, std::move(a), std::move(b), pos});
}

namespace {

constexpr std::string_view kTensorSymbol = "⊗";

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TermPtr run() {
    TermPtr t = term();
    skip_space();
    if (i_ != text_.size()) fail("unexpected input");
    return t;
  }

 private:
  std::string_view text_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

  void skip_space() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  bool accept(std::string_view tok) {
    skip_space();
    if (text_.substr(i_).starts_with(tok)) {
      i_ += tok.size();
      return true;
    }
    return false;
  }

  bool accept_tensor() { return accept("*") || accept(kTensorSymbol); }

  TermPtr term() {
    TermPtr t = factor();
    while (true) {
      skip_space();
      const std::size_t at = i_;
      if (!accept(";")) return t;
      t = seq(std::move(t), factor(), at);
    }
  }

  TermPtr factor() {
    TermPtr t = primary();
    while (true) {
      skip_space();
      const std::size_t at = i_;
      if (!accept_tensor()) return t;
      t = ten(std::move(t), primary(), at);
    }
  }

  TermPtr primary() {
    skip_space();
    if (i_ == text_.size()) fail("unexpected end of input, expected a generator or '('");
    if (accept("(")) {
      TermPtr t = term();
      if (!accept(")")) fail("expected ')'");
      return t;
    }
    const std::size_t start = i_;
    std::string_view word;
    if (std::isalpha(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_') {
      std::size_t j = i_;
      while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
      word = text_.substr(i_, j - i_);
    } else {
      for (Generator g : kAllGenerators)
        if (text_.substr(i_).starts_with(symbol(g))) word = symbol(g);
    }
    if (word.empty()) fail("unexpected character");
    const auto g = generator_from_name(word);
    if (!g) fail("unknown generator '" + std::string(word) + "'");
    i_ += word.size();
    return atom(*g, start);
  }
};

void print_into(const TermPtr& t, std::string& out);

void print_operand(const TermPtr& t, bool parens, std::string& out) {
  if (parens) out += "(";
  print_into(t, out);
  if (parens) out += ")";
}

void print_into(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case Term::Kind::Atom: out += name(t->gen); return;
    case Term::Kind::Seq:
      print_operand(t->lhs, false, out);
      out += " ; ";
      print_operand(t->rhs, t->rhs->kind == Term::Kind::Seq, out);
      return;
    case Term::Kind::Ten:
      print_operand(t->lhs, t->lhs->kind == Term::Kind::Seq, out);
      out += " * ";
      print_operand(t->rhs, t->rhs->kind != Term::Kind::Atom, out);
      return;
  }
}

}  // namespace

TermPtr parse(std::string_view text) { return Parser(text).run(); }

std::string print(const TermPtr& t) {
  std::string out;
  print_into(t, out);
  return out;
}

Arity type_of(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Atom: return arity(t->gen);
    case Term::Kind::Seq: {
      const Arity a = type_of(t->lhs);
      const Arity b = type_of(t->rhs);
      if (a.out != b.in) {
        std::string msg = "type error: ';' joins an output of " + std::to_string(a.out) + " to an input of " +
                          std::to_string(b.in) + " in '" + print(t) + "'";
        if (t->pos != std::string::npos) msg += " at offset " + std::to_string(t->pos);
        throw TypeError(msg);
      }
      return {a.in, b.out};
    }
    case Term::Kind::Ten: {
      const Arity a = type_of(t->lhs);
      const Arity b = type_of(t->rhs);
      return {a.in + b.in, a.out + b.out};
    }
  }
  return {};
}

TermPtr parse_typed(std::string_view text) {
  TermPtr t = parse(text);
  type_of(t);
  return t;
}

std::size_t term_size(const TermPtr& t) {
  if (t->kind == Term::Kind::Atom) return 1;
  return term_size(t->lhs) + term_size(t->rhs);
}

std::size_t term_depth(const TermPtr& t) {
  if (t->kind == Term::Kind::Atom) return 0;
  return 1 + std::max(term_depth(t->lhs), term_depth(t->rhs));
}

bool same_term(const TermPtr& a, const TermPtr& b) {
  if (a->kind != b->kind) return false;
  if (a->kind == Term::Kind::Atom) return a->gen == b->gen;
  return same_term(a->lhs, b->lhs) && same_term(a->rhs, b->rhs);
}

}  // namespace linking
