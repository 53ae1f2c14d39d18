#include "linking/suite.hpp"

#include <algorithm>
#include <functional>

#include "linking/errors.hpp"

namespace linking {

bool check_equation(const TermPtr& lhs, const TermPtr& rhs, Model m) {
  const Arity a = type_of(lhs);
  const Arity b = type_of(rhs);
  if (a != b)
    throw TypeError("sides have different boundaries: " + std::to_string(a.in) + "→" + std::to_string(a.out) +
                    " vs " + std::to_string(b.in) + "→" + std::to_string(b.out));
  if (m == Model::C) return iso_check(eval_c(lhs), eval_c(rhs));
  return iso_check(eval_m(lhs), eval_m(rhs));
}

namespace {

Multiset as_multiset(const IndexSet& s, std::size_t over) {
  Multiset m(over);
  s.for_each([&](std::size_t x) { m[x] = 1; });
  return m;
}

}  // namespace

bool same_picture(const SpanC& c, const SpanM& m) {
  if (c.left() != m.left() || c.right() != m.right() || c.links() != m.links()) return false;
  if (c.carrier().contention() != structural_contention(c)) return false;
  std::vector<LinkImage> ci;
  for (std::size_t x = 0; x < c.links(); ++x)
    ci.emplace_back(as_multiset(c.lleg()(x), c.left()), as_multiset(c.rleg()(x), c.right()));
  std::vector<LinkImage> mi = m.images();
  std::sort(ci.begin(), ci.end());
  std::sort(mi.begin(), mi.end());
  return ci == mi;
}

namespace {

const IndexSet kNone;
const IndexSet kP0{0};
const IndexSet kP1{1};

class Table {
 public:
  std::vector<SuiteRow> rows;

  // Term equation in the listed models, with one expectation per model.
  void eq(const std::string& label, const std::string& lhs, const std::string& rhs, bool in_c, bool in_m) {
    const TermPtr l = parse_typed(lhs), r = parse_typed(rhs);
    add(label, "c", lhs, rhs, in_c, [&] { return check_equation(l, r, Model::C); });
    add(label, "m", lhs, rhs, in_m, [&] { return check_equation(l, r, Model::M); });
  }
  void eq_c(const std::string& label, const std::string& lhs, const std::string& rhs, bool expected) {
    const TermPtr l = parse_typed(lhs), r = parse_typed(rhs);
    add(label, "c", lhs, rhs, expected, [&] { return check_equation(l, r, Model::C); });
  }
  void lit_c(const std::string& label, const std::string& lhs, const SpanC& rhs, bool expected) {
    const TermPtr l = parse_typed(lhs);
    add(label, "c", lhs, canonical_key(rhs), expected, [&] { return iso_check(eval_c(l), rhs); });
  }
  void lit_m(const std::string& label, const std::string& lhs, const SpanM& rhs, bool expected) {
    const TermPtr l = parse_typed(lhs);
    add(label, "m", lhs, canonical_key(rhs), expected, [&] { return iso_check(eval_m(l), rhs); });
  }
  void picture(const std::string& label, const std::string& term, bool expected) {
    const TermPtr t = parse_typed(term);
    add(label, "c~m", term, term, expected, [&] { return same_picture(eval_c(t), eval_m(t)); });
  }

 private:
  void add(const std::string& label, const char* model, const std::string& lhs, const std::string& rhs,
           bool expected, const std::function<bool()>& check) {
    rows.push_back(SuiteRow{label, model, lhs, rhs, expected, check()});
  }
};

}  // namespace

std::vector<SuiteRow> run_suite() {
  Table t;

  // Frobenius structure on copy/del/merge/new.
  t.eq("DeltaUC/1", "copy ; (del * id)", "id", true, true);
  t.eq("DeltaUC/2", "copy ; (id * del)", "id", true, true);
  t.eq("DeltaUC/3", "copy ; swap", "copy", true, true);
  t.eq("DeltaA", "copy ; (copy * id)", "copy ; (id * copy)", true, true);
  t.eq("NablaUC/1", "(new * id) ; merge", "id", true, true);
  t.eq("NablaUC/2", "(id * new) ; merge", "id", true, true);
  t.eq("NablaUC/3", "swap ; merge", "merge", true, true);
  t.eq("NablaA", "(merge * id) ; merge", "(id * merge) ; merge", true, true);
  t.eq("F/1", "(id * copy) ; (merge * id)", "merge ; copy", true, true);
  t.eq("F/2", "(copy * id) ; (id * merge)", "merge ; copy", true, true);
  t.eq("S", "copy ; merge", "id", true, true);
  t.eq("CC/1", "(id * (new ; copy)) ; ((merge ; del) * id)", "id", true, true);
  t.eq("CC/2", "((new ; copy) * id) ; (id * (merge ; del))", "id", true, true);

  // Bialgebra-like structure on split/stop/join/start.
  t.eq("LambdaUC/1", "split ; (stop * id)", "id", true, true);
  t.eq("LambdaUC/2", "split ; (id * stop)", "id", true, true);
  t.eq("LambdaUC/3", "split ; swap", "split", true, true);
  t.eq("LambdaA", "split ; (split * id)", "split ; (id * split)", true, true);
  t.eq("VUC/1", "(start * id) ; join", "id", true, true);
  t.eq("VUC/2", "(id * start) ; join", "id", true, true);
  t.eq("VUC/3", "swap ; join", "join", true, true);
  t.eq("VA", "(join * id) ; join", "(id * join) ; join", true, true);
  t.eq("Vstop/1", "join ; stop", "stop * stop", true, true);
  t.eq("Vstop/2", "start ; split", "start * start", true, true);

  // split;join: two contending parallel links in c, the identity in m.
  t.lit_c("LambdaV/c", "split ; join", SpanC(1, 1, CSet::full(2), {kP0, kP0}, {kP0, kP0}), true);
  t.eq("LambdaV/id", "split ; join", "id", false, true);

  t.eq("B", "(split * split) ; (id * swap * id) ; (join * join)", "join ; split", false, true);
  {
    const std::vector<IndexSet> l{kP0, kP0, kP1, kP1}, r{kP0, kP1, kP0, kP1};
    const SpanC rook(2, 2, CSet(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}), l, r);
    t.lit_c("B/c", "(split * split) ; (id * swap * id) ; (join * join)", rook, true);
    t.lit_c("VLambda/c", "join ; split", SpanC(2, 2, CSet::full(4), l, r), true);
  }

  // Interaction of the two families.
  t.eq("Dstopstart/1", "copy ; (id * stop)", "stop ; start", true, true);
  t.eq("Dstopstart/2", "merge ; stop", "stop * stop", true, true);
  t.picture("Dstopstart/1", "copy ; (id * stop)", true);

  t.lit_c("LambdaNewDel/1", "split ; (id * del)", SpanC(1, 1, CSet::full(2), {kP0, kP0}, {kP0, kNone}), true);
  t.lit_m("LambdaNewDel/1", "split ; (id * del)", SpanM(1, 1, {{{1}, {1}}, {{1}, {0}}}), true);
  t.picture("LambdaNewDel/1", "split ; (id * del)", true);
  t.lit_c("LambdaNewDel/2", "join ; del", SpanC(2, 0, CSet::full(2), {kP0, kP1}, {kNone, kNone}), true);
  t.eq("LambdaNewDel/2-del", "join ; del", "del * del", false, true);
  t.picture("LambdaNewDel/2", "join ; del", false);

  t.eq_c("DeltaV/1", "copy ; join", "stop ; start", true);
  t.lit_m("DeltaV/1", "copy ; join", SpanM(1, 1, {{{1}, {2}}}), true);
  t.picture("DeltaV/1", "copy ; join", false);
  t.eq("DeltaV/2", "join ; copy", "(copy * copy) ; (id * swap * id) ; (join * join)", true, true);
  t.picture("DeltaV/2", "join ; copy", true);

  t.eq("DeltaLambda/1", "copy ; (split * id)", "split ; (copy * copy) ; (id * swap * id) ; (id * id * join)", true,
       true);
  t.picture("DeltaLambda/1", "copy ; (split * id)", true);
  t.lit_c("DeltaLambda/2", "split ; (copy * id)",
          SpanC(1, 3, CSet::full(2), {kP0, kP0}, {IndexSet{0, 1}, IndexSet{2}}), true);
  t.lit_m("DeltaLambda/2", "split ; (copy * id)", SpanM(1, 3, {{{1}, {1, 1, 0}}, {{1}, {0, 0, 1}}}), true);
  t.picture("DeltaLambda/2", "split ; (copy * id)", true);

  // Extra contention is information: two parallel contending links are not the identity.
  {
    const SpanC contended(2, 2, CSet::full(2), {kP0, kP1}, {kP0, kP1});
    t.lit_c("Contended", "id * id", contended, false);
  }
  return t.rows;
}

}  // namespace linking
