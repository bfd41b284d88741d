#pragma once

#include <stdexcept>
#include <string>

#include "krlab/crystal.hpp"

namespace krlab {

/// The shape removed from a rectangle: single box (D^{(2)}_{N+1}),
/// horizontal domino (C^{(1)}_N), vertical domino (B^{(1)}_N).
enum class Kind { Box, HDomino, VDomino };

inline int kind_size(Kind k) { return k == Kind::Box ? 1 : 2; }

inline LetterCrystal::Type classical_type(Kind k) {
  return k == Kind::HDomino ? LetterCrystal::Type::C : LetterCrystal::Type::B;
}

inline Kind parse_kind(const std::string& s) {
  if (s == "box" || s == "single-box" || s == "D2") return Kind::Box;
  if (s == "hdomino" || s == "horizontal-domino" || s == "C1") return Kind::HDomino;
  if (s == "vdomino" || s == "vertical-domino" || s == "B1") return Kind::VDomino;
  throw std::invalid_argument("unknown kind '" + s + "' (box, hdomino, vdomino)");
}

inline std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Box: return "box";
    case Kind::HDomino: return "hdomino";
    case Kind::VDomino: return "vdomino";
  }
  return "?";
}

}  // namespace krlab
