#pragma once

// The table of generator equations and their expected truth per model.

#include <string>
#include <vector>

#include "linking/eval.hpp"

namespace linking {

/// iso_check of the two evaluations. Throws TypeError if either side is
/// ill-typed or the sides have different boundaries.
bool check_equation(const TermPtr& lhs, const TermPtr& rhs, Model m);

/// The two evaluations draw the same diagram: every c-contention is forced by
/// a shared port, and the c-links, read as 0/1 multisets, are exactly the
/// m-links.
bool same_picture(const SpanC& c, const SpanM& m);

struct SuiteRow {
  std::string label;
  /// "c", "m", or "c~m" for a same-picture comparison across models.
  std::string model;
  std::string lhs;
  std::string rhs;
  bool expected = true;
  bool actual = false;

  bool pass() const noexcept { return expected == actual; }
};

/// Every row of the table, evaluated. Labels share a prefix per equation group
/// (e.g. "F/1", "B/c").
std::vector<SuiteRow> run_suite();

}  // namespace linking
