#include "linkdiag/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "linking/decompose.hpp"
#include "linking/errors.hpp"
#include "linking/json_io.hpp"
#include "linking/suite.hpp"

namespace linkdiag {

namespace {

using namespace linking;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& s) {
  std::ostringstream buf;
  buf << s.rdbuf();
  return buf.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_all(in);
  std::ifstream f(path);
  if (!f) throw IoError("cannot read " + path);
  return read_all(f);
}

Json read_json(const std::string& path, std::istream& in) { return parse_json(read_input(path, in)); }

std::optional<std::vector<std::size_t>> witness_m(const SpanM& a, const SpanM& b) {
  if (!iso_check(a, b)) return std::nullopt;
  std::vector<std::size_t> sigma;
  const auto bi = b.images();
  for (const auto& img : a.images())
    sigma.push_back(static_cast<std::size_t>(std::find(bi.begin(), bi.end(), img) - bi.begin()));
  return sigma;
}

struct Options {
  std::string model;
  std::string output;
  std::string term;
  std::string lhs;
  std::string rhs;
  std::vector<std::string> paths;
  std::string path;
  std::size_t budget = DecomposeOptions{}.budget;
  bool witness = false;
};

int cmd_eval(const Options& o, std::ostream& out) {
  const TermPtr t = parse(o.term);
  const Json j = model_from_name(o.model) == Model::C ? to_json(eval_c(t)) : to_json(eval_m(t));
  out << j.dump() << "\n";
  return 0;
}

int cmd_compose(const Options& o, std::istream& in, std::ostream& out) {
  Json a, b;
  if (o.paths.empty()) {
    const Json both = read_json("", in);
    if (!both.is_array() || both.size() != 2) throw ParseError("expected a JSON array of two spans on stdin");
    a = both[0];
    b = both[1];
  } else if (o.paths.size() == 2) {
    a = read_json(o.paths[0], in);
    b = read_json(o.paths[1], in);
  } else {
    throw ParseError("compose takes two span files, or an array of two spans on stdin");
  }
  const AnySpan s = span_from_json(a), t = span_from_json(b);
  if (s.index() != t.index()) throw DomainError("cannot compose spans from different models");
  if (const auto* sc = std::get_if<SpanC>(&s))
    out << to_json(compose(*sc, std::get<SpanC>(t))).dump() << "\n";
  else
    out << to_json(compose(std::get<SpanM>(s), std::get<SpanM>(t))).dump() << "\n";
  return 0;
}

int cmd_eq(const Options& o, std::ostream& out) {
  const TermPtr l = parse(o.lhs), r = parse(o.rhs);
  const Model m = model_from_name(o.model);
  const bool equal = check_equation(l, r, m);
  out << (equal ? "true" : "false") << "\n";
  if (o.witness && equal) {
    const auto sigma = m == Model::C ? iso_witness(eval_c(l), eval_c(r)) : witness_m(eval_m(l), eval_m(r));
    out << Json{{"witness", *sigma}}.dump() << "\n";
  }
  return 0;
}

int cmd_suite(std::ostream& out) {
  const auto rows = run_suite();
  std::size_t failed = 0;
  out << std::left << std::setw(20) << "equation" << std::setw(6) << "model" << std::setw(10) << "expected"
      << std::setw(8) << "actual" << "result\n";
  for (const SuiteRow& r : rows) {
    out << std::setw(20) << r.label << std::setw(6) << r.model << std::setw(10) << (r.expected ? "true" : "false")
        << std::setw(8) << (r.actual ? "true" : "false") << (r.pass() ? "pass" : "FAIL") << "\n";
    if (!r.pass()) ++failed;
  }
  out << rows.size() - failed << "/" << rows.size() << " rows pass\n";
  return failed == 0 ? 0 : 1;
}

int cmd_decompose(const Options& o, std::istream& in, std::ostream& out) {
  const Model m = model_from_name(o.model);
  const AnySpan s = span_from_json(read_json(o.path, in));
  if ((m == Model::C) != std::holds_alternative<SpanC>(s))
    throw DomainError("span model does not match -m " + o.model);
  DecomposeOptions opts;
  opts.budget = o.budget;
  const DecomposeResult r =
      std::visit([&](const auto& span) { return decompose(span, opts); }, s);
  out << (r.found() ? print(r.term) : std::string("NOT_FOUND")) << "\n";
  return 0;
}

int cmd_embed(const Options& o, std::istream& in, std::ostream& out) {
  out << to_json(embed_cospan(cospan_from_json(read_json(o.path, in)))).dump() << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Evaluate, compare, compose and decompose linking diagrams", "linkdiag"};
  app.require_subcommand(1);
  app.add_option("-o,--output", o.output, "Write results to this file instead of standard output");
  const std::vector<std::string> models{"c", "m"};

  auto* eval = app.add_subcommand("eval", "Evaluate a term to a span");
  eval->add_option("-m,--model", o.model, "c (contention) or m (multiset)")->required()->check(CLI::IsMember(models));
  eval->add_option("term", o.term, "Term, e.g. \"copy ; (del * id)\"")->required();

  auto* comp = app.add_subcommand("compose", "Compose two JSON spans");
  comp->add_option("spans", o.paths, "Two span files; omit to read [A, B] from stdin");

  auto* eq = app.add_subcommand("eq", "Decide whether two terms evaluate to isomorphic spans");
  eq->add_option("-m,--model", o.model, "c or m")->required()->check(CLI::IsMember(models));
  eq->add_option("lhs", o.lhs)->required();
  eq->add_option("rhs", o.rhs)->required();
  eq->add_flag("--witness", o.witness, "Also print a carrier bijection when the answer is true");

  auto* suite = app.add_subcommand("suite", "Check every equation of the table; nonzero exit on a mismatch");

  auto* dec = app.add_subcommand("decompose", "Find a term for a JSON span");
  dec->add_option("-m,--model", o.model, "c or m")->required()->check(CLI::IsMember(models));
  dec->add_option("--budget", o.budget, "Search budget in evaluations");
  dec->add_option("span", o.path, "Span file; omit for stdin");

  auto* emb = app.add_subcommand("embed", "Map a JSON cospan to its contention span");
  emb->add_option("cospan", o.path, "Cospan file; omit for stdin");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream buffer;
  std::ostream& sink = o.output.empty() ? out : buffer;
  int status = 0;
  try {
    if (eval->parsed()) status = cmd_eval(o, sink);
    else if (comp->parsed()) status = cmd_compose(o, in, sink);
    else if (eq->parsed()) status = cmd_eq(o, sink);
    else if (suite->parsed()) status = cmd_suite(sink);
    else if (dec->parsed()) status = cmd_decompose(o, in, sink);
    else if (emb->parsed()) status = cmd_embed(o, in, sink);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (!o.output.empty()) {
    std::ofstream f(o.output);
    if (!(f << buffer.str())) {
      err << "io error: cannot write " << o.output << "\n";
      return 2;
    }
  }
  return status;
}

}  // namespace linkdiag
