#pragma once

// Interpretation of terms in the two models.

#include <string>
#include <string_view>

#include "linking/span_c.hpp"
#include "linking/span_m.hpp"
#include "linking/term.hpp"

namespace linking {

enum class Model { C, M };

std::string_view model_name(Model m);
/// Accepts "c" or "m"; throws ParseError otherwise.
Model model_from_name(std::string_view s);

/// Typecheck, then fold compose/tensor over the generators. Throws TypeError.
SpanC eval_c(const TermPtr& t);
SpanM eval_m(const TermPtr& t);

}  // namespace linking
