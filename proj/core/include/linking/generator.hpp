#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace linking {

/// The ten basic linking diagrams.
///
///   name    symbol  arity   reading
///   copy    Δ       1 → 2   one link touching both right ports
///   del     ⊥       1 → 0   one link touching only the left port
///   merge   ∇       2 → 1   one link touching both left ports
///   new     ⊤       0 → 1   one link touching only the right port
///   split   Λ       1 → 2   two contending links, one per right port
///   stop    ↓       1 → 0   no links
///   join    V       2 → 1   two contending links, one per left port
///   start   ↑       0 → 1   no links
///   id      I       1 → 1   one link
///   swap    X       2 → 2   two links crossing
enum class Generator { Copy, Del, Merge, New, Split, Stop, Join, Start, Id, Swap };

struct Arity {
  std::size_t in = 0;
  std::size_t out = 0;
  bool operator==(const Arity&) const = default;
};

inline constexpr std::array<Generator, 10> kAllGenerators = {
    Generator::Copy,  Generator::Del,  Generator::Merge, Generator::New, Generator::Split,
    Generator::Stop,  Generator::Join, Generator::Start, Generator::Id,  Generator::Swap};

constexpr Arity arity(Generator g) {
  switch (g) {
    case Generator::Copy: return {1, 2};
    case Generator::Del: return {1, 0};
    case Generator::Merge: return {2, 1};
    case Generator::New: return {0, 1};
    case Generator::Split: return {1, 2};
    case Generator::Stop: return {1, 0};
    case Generator::Join: return {2, 1};
    case Generator::Start: return {0, 1};
    case Generator::Id: return {1, 1};
    case Generator::Swap: return {2, 2};
  }
  return {};
}

constexpr std::string_view name(Generator g) {
  switch (g) {
    case Generator::Copy: return "copy";
    case Generator::Del: return "del";
    case Generator::Merge: return "merge";
    case Generator::New: return "new";
    case Generator::Split: return "split";
    case Generator::Stop: return "stop";
    case Generator::Join: return "join";
    case Generator::Start: return "start";
    case Generator::Id: return "id";
    case Generator::Swap: return "swap";
  }
  return "";
}

constexpr std::string_view symbol(Generator g) {
  switch (g) {
    case Generator::Copy: return "Δ";
    case Generator::Del: return "⊥";
    case Generator::Merge: return "∇";
    case Generator::New: return "⊤";
    case Generator::Split: return "Λ";
    case Generator::Stop: return "↓";
    case Generator::Join: return "V";
    case Generator::Start: return "↑";
    case Generator::Id: return "I";
    case Generator::Swap: return "X";
  }
  return "";
}

/// Accepts the ASCII name or the symbol.
constexpr std::optional<Generator> generator_from_name(std::string_view s) {
  for (Generator g : kAllGenerators)
    if (s == name(g) || s == symbol(g)) return g;
  return std::nullopt;
}

}  // namespace linking
