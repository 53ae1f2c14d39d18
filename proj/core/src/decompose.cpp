#include "linking/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "linking/errors.hpp"

namespace linking {

namespace {

TermPtr g(Generator x) { return atom(x); }

TermPtr empty_identity() { return seq(g(Generator::Start), g(Generator::Stop)); }

TermPtr tensor_all(const std::vector<TermPtr>& parts) {
  if (parts.empty()) return empty_identity();
  TermPtr t = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) t = ten(t, parts[i]);
  return t;
}

TermPtr identity_term(std::size_t n) { return tensor_all(std::vector<TermPtr>(n, g(Generator::Id))); }

bool is_identity_term(const TermPtr& t) {
  if (t->kind == Term::Kind::Atom) return t->gen == Generator::Id;
  return t->kind == Term::Kind::Ten && is_identity_term(t->lhs) && is_identity_term(t->rhs);
}

/// Folds a chain, dropping null entries and tensors of `id`. Falls back to `id` if nothing is left.
TermPtr seq_all(const std::vector<TermPtr>& parts, const TermPtr& id) {
  TermPtr t;
  for (const TermPtr& p : parts) {
    if (!p || is_identity_term(p)) continue;
    t = t ? seq(t, p) : p;
  }
  return t ? t : id;
}

// 1 → d fan-out or d → 1 fan-in built from a binary generator and its unit.
TermPtr fan_out(std::size_t d, Generator binary, Generator unit) {
  if (d == 0) return g(unit);
  if (d == 1) return g(Generator::Id);
  if (d == 2) return g(binary);
  return seq(g(binary), ten(fan_out(d - 1, binary, unit), g(Generator::Id)));
}

TermPtr fan_in(std::size_t d, Generator binary, Generator unit) {
  if (d == 0) return g(unit);
  if (d == 1) return g(Generator::Id);
  if (d == 2) return g(binary);
  return seq(ten(fan_in(d - 1, binary, unit), g(Generator::Id)), g(binary));
}

/// Null when perm is the identity.
TermPtr permutation_or_null(const std::vector<std::size_t>& perm) {
  const std::size_t m = perm.size();
  std::vector<std::size_t> arr = perm;
  std::vector<TermPtr> layers;
  for (std::size_t round = 0; round < m; ++round) {
    std::vector<TermPtr> layer;
    bool swapped = false;
    std::size_t pos = 0;
    if (round % 2 == 1 && m > 0) {
      layer.push_back(g(Generator::Id));
      pos = 1;
    }
    for (; pos < m; ++pos) {
      if (pos + 1 < m && arr[pos] > arr[pos + 1]) {
        std::swap(arr[pos], arr[pos + 1]);
        layer.push_back(g(Generator::Swap));
        swapped = true;
        ++pos;
      } else {
        layer.push_back(g(Generator::Id));
      }
    }
    if (swapped) layers.push_back(tensor_all(layer));
  }
  if (layers.empty()) return nullptr;
  return seq_all(layers, nullptr);
}

/// Position of each item once the items are stably sorted by key.
template <class Key>
std::vector<std::size_t> ranks(const std::vector<Key>& keys) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> rank(keys.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return rank;
}

/// Link shapes as port-weight tables: left[x][p], right[x][q].
struct Shape {
  std::size_t k = 0;
  std::size_t l = 0;
  std::vector<std::vector<Count>> left;
  std::vector<std::vector<Count>> right;
  std::size_t links() const { return left.size(); }
};

/// k → n: link x touches its left ports and wire x.
TermPtr left_stage(const Shape& s) {
  const std::size_t n = s.links();
  std::vector<TermPtr> fans;
  std::vector<std::pair<std::size_t, std::size_t>> wires;  // (link, port) in port-major order
  for (std::size_t p = 0; p < s.k; ++p) {
    std::size_t d = 0;
    for (std::size_t x = 0; x < n; ++x)
      for (Count c = 0; c < s.left[x][p]; ++c, ++d) wires.emplace_back(x, p);
    fans.push_back(fan_out(d, Generator::Split, Generator::Stop));
  }
  std::vector<TermPtr> merges;
  for (std::size_t x = 0; x < n; ++x) {
    const Count c = std::accumulate(s.left[x].begin(), s.left[x].end(), Count{0});
    merges.push_back(fan_in(c, Generator::Merge, Generator::New));
  }
  return seq_all({tensor_all(fans), permutation_or_null(ranks(wires)), tensor_all(merges)}, nullptr);
}

/// n → l: wire x fans out to the right ports of link x.
TermPtr right_stage(const Shape& s) {
  const std::size_t n = s.links();
  std::vector<TermPtr> copies;
  std::vector<std::pair<std::size_t, std::size_t>> wires;  // (port, link) in link-major order
  std::vector<std::size_t> per_port(s.l, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t d = 0;
    for (std::size_t q = 0; q < s.l; ++q)
      for (Count c = 0; c < s.right[x][q]; ++c, ++d, ++per_port[q]) wires.emplace_back(q, x);
    copies.push_back(fan_out(d, Generator::Copy, Generator::Del));
  }
  std::vector<TermPtr> joins;
  for (std::size_t q = 0; q < s.l; ++q) joins.push_back(fan_in(per_port[q], Generator::Join, Generator::Start));
  return seq_all({tensor_all(copies), permutation_or_null(ranks(wires)), tensor_all(joins)}, nullptr);
}

TermPtr stages(const Shape& s, const std::vector<TermPtr>& middle) {
  if (s.links() == 0)
    return seq(tensor_all(std::vector<TermPtr>(s.k, g(Generator::Stop))),
               tensor_all(std::vector<TermPtr>(s.l, g(Generator::Start))));
  std::vector<TermPtr> parts{left_stage(s)};
  parts.insert(parts.end(), middle.begin(), middle.end());
  parts.push_back(right_stage(s));
  return seq_all(parts, identity_term(s.k));
}

/// Adds contention between wires a and b for each listed pair, one matching per round.
std::vector<TermPtr> contention_rounds(std::size_t n, std::vector<ContentionPair> pairs) {
  std::vector<TermPtr> out;
  while (!pairs.empty()) {
    std::vector<bool> busy(n, false);
    std::vector<ContentionPair> matching, rest;
    for (const auto& pr : pairs) {
      if (!busy[pr.first] && !busy[pr.second]) {
        busy[pr.first] = busy[pr.second] = true;
        matching.push_back(pr);
      } else {
        rest.push_back(pr);
      }
    }
    std::vector<std::size_t> sigma(n);
    std::size_t next = 0;
    for (const auto& [a, b] : matching) {
      sigma[a] = next++;
      sigma[b] = next++;
    }
    for (std::size_t x = 0; x < n; ++x)
      if (!busy[x]) sigma[x] = next++;
    std::vector<std::size_t> inverse(n);
    for (std::size_t x = 0; x < n; ++x) inverse[sigma[x]] = x;

    std::vector<TermPtr> layer(matching.size(), contention_gadget());
    layer.resize(n - matching.size(), g(Generator::Id));
    out.push_back(permutation_or_null(sigma));
    out.push_back(tensor_all(layer));
    out.push_back(permutation_or_null(inverse));
    pairs = std::move(rest);
  }
  return out;
}

Shape shape_of(const SpanC& s) {
  Shape sh{s.left(), s.right(), {}, {}};
  for (std::size_t x = 0; x < s.links(); ++x) {
    std::vector<Count> l(s.left(), 0), r(s.right(), 0);
    s.lleg()(x).for_each([&](std::size_t p) { l[p] = 1; });
    s.rleg()(x).for_each([&](std::size_t q) { r[q] = 1; });
    sh.left.push_back(std::move(l));
    sh.right.push_back(std::move(r));
  }
  return sh;
}

Shape shape_of(const SpanM& s) {
  Shape sh{s.left(), s.right(), {}, {}};
  for (std::size_t x = 0; x < s.links(); ++x) {
    sh.left.push_back(s.lleg()(x).counts());
    sh.right.push_back(s.rleg()(x).counts());
  }
  return sh;
}

template <class M>
struct Candidate {
  TermPtr term;
  typename M::Span span;
};

/// Terms enumerated by size, each kept only if its evaluation is new up to
/// isomorphism and fits the caps. Resumable, so later queries reuse earlier work.
template <class M>
class Enumeration {
 public:
  Enumeration(std::size_t port_cap, std::size_t link_cap) : port_cap_(port_cap), link_cap_(link_cap) {
    levels_.resize(2);
    for (Generator x : kAllGenerators) admit(levels_[1], atom(x), M::gen(x));
  }

  /// Looks key up among the terms reached within the first `budget`
  /// evaluations of the enumeration, extending it as needed. The answer does
  /// not depend on earlier queries; `spent` counts only new evaluations.
  TermPtr find(const std::string& key, std::size_t budget, std::size_t& spent) {
    while (true) {
      if (const auto it = found_.find(key); it != found_.end() && it->second.at <= budget) return it->second.term;
      if (done_ || total_ >= budget) return nullptr;
      const std::size_t before = total_;
      step();
      spent += total_ - before;
    }
  }

 private:
  std::size_t port_cap_;
  std::size_t link_cap_;
  std::vector<std::vector<Candidate<M>>> levels_;
  struct Hit {
    TermPtr term;
    std::size_t at;  // evaluations spent when first reached
  };
  std::unordered_map<std::string, Hit> found_;
  std::vector<Candidate<M>> pending_;
  std::size_t size_ = 2, i_ = 1, a_ = 0, b_ = 0;
  std::size_t largest_ = 1;
  std::size_t total_ = 0;
  bool done_ = false;

  void admit(std::vector<Candidate<M>>& level, TermPtr term, typename M::Span span) {
    if (span.left() > port_cap_ || span.right() > port_cap_ || span.links() > link_cap_) return;
    if (!found_.emplace(M::key(span), Hit{term, total_}).second) return;
    level.push_back(Candidate<M>{std::move(term), std::move(span)});
  }

  // One (a, b) pair of the current size, then advance the cursor.
  void step() {
    const auto& as = levels_[i_];
    const auto& bs = levels_[size_ - i_];
    if (a_ < as.size() && b_ < bs.size()) {
      const auto& a = as[a_];
      const auto& b = bs[b_];
      if (a.span.right() == b.span.left()) {
        ++total_;
        admit(pending_, seq(a.term, b.term), compose(a.span, b.span));
      }
      ++total_;
      admit(pending_, ten(a.term, b.term), tensor(a.span, b.span));
      if (++b_ < bs.size()) return;
      b_ = 0;
      if (++a_ < as.size()) return;
    }
    a_ = b_ = 0;
    if (++i_ < size_) return;
    // Size finished. Once no two stored sizes can sum to the next one, nothing new can appear.
    if (!pending_.empty()) largest_ = size_;
    levels_.push_back(std::move(pending_));
    pending_.clear();
    ++size_;
    i_ = 1;
    done_ = size_ > 2 * largest_;
  }
};

struct CModel {
  using Span = SpanC;
  static Span gen(Generator x) { return generator_c(x); }
  static std::string key(const Span& s) { return canonical_key(s); }
  static Span eval(const TermPtr& t) { return eval_c(t); }
};

struct MModel {
  using Span = SpanM;
  static Span gen(Generator x) { return generator_m(x); }
  static std::string key(const Span& s) { return canonical_key(s); }
  static Span eval(const TermPtr& t) { return eval_m(t); }
};

template <class M>
DecomposeResult decompose_in(Enumeration<M>& search, const typename M::Span& s, const DecomposeOptions& opts) {
  DecomposeResult res;
  if (s.left() <= opts.search_limit && s.right() <= opts.search_limit && s.links() <= opts.search_limit) {
    res.term = search.find(M::key(s), opts.budget, res.evaluations);
    if (res.term) {
      res.method = DecomposeResult::Method::Search;
      return res;
    }
  }
  if (!opts.construct) return res;
  TermPtr t = normal_form(s);
  if (iso_check(M::eval(t), s)) {
    res.term = std::move(t);
    res.method = DecomposeResult::Method::Construction;
  }
  return res;
}

}  // namespace

TermPtr permutation_term(const std::vector<std::size_t>& perm) {
  TermPtr t = permutation_or_null(perm);
  return t ? t : identity_term(perm.size());
}

TermPtr contention_gadget() {
  static const TermPtr gadget = parse(
      "(copy * copy) ; (id * swap * id) ; (join * id * id) ; (split * id * id) ; (id * swap * id) ; (merge * merge)");
  return gadget;
}

TermPtr normal_form(const SpanC& s) {
  const auto forced = structural_contention(s);
  std::vector<ContentionPair> extra;
  std::set_difference(s.carrier().contention().begin(), s.carrier().contention().end(), forced.begin(),
                      forced.end(), std::back_inserter(extra));
  return stages(shape_of(s), contention_rounds(s.links(), std::move(extra)));
}

TermPtr normal_form(const SpanM& s) { return stages(shape_of(s), {}); }

struct Decomposer::Impl {
  explicit Impl(const DecomposeOptions& o)
      : opts(o), c(o.search_limit + 1, o.search_limit + 1), m(o.search_limit + 1, o.search_limit + 1) {}
  DecomposeOptions opts;
  Enumeration<CModel> c;
  Enumeration<MModel> m;
};

Decomposer::Decomposer(DecomposeOptions opts) : impl_(std::make_unique<Impl>(opts)) {}
Decomposer::~Decomposer() = default;
Decomposer::Decomposer(Decomposer&&) noexcept = default;
Decomposer& Decomposer::operator=(Decomposer&&) noexcept = default;

DecomposeResult Decomposer::operator()(const SpanC& s) { return decompose_in(impl_->c, s, impl_->opts); }
DecomposeResult Decomposer::operator()(const SpanM& s) { return decompose_in(impl_->m, s, impl_->opts); }

DecomposeResult decompose(const SpanC& s, const DecomposeOptions& opts) { return Decomposer(opts)(s); }
DecomposeResult decompose(const SpanM& s, const DecomposeOptions& opts) { return Decomposer(opts)(s); }

}  // namespace linking
