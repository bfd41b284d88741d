#pragma once

#include <optional>
#include <vector>

#include "krlab/letters.hpp"

namespace krlab {

/// Classical letter crystal B(ω_1) of type B_N (f_N: N → 0 → \bar{N}) or
/// C_N (f_N: N → \bar{N}). N = 0 means "N sufficiently large": only
/// indices 1 ≤ i < ∞ with the type-A rule are used, and i is never N.
struct LetterCrystal {
  enum class Type { B, C };
  Type type = Type::B;
  int N = 0;

  std::optional<Letter> e(int i, Letter x) const;
  std::optional<Letter> f(int i, Letter x) const;
  int eps(int i, Letter x) const;
  int phi(int i, Letter x) const;
};

/// A flat tensor x_1 ⊗ x_2 ⊗ ... ⊗ x_m of letters (∅ is a trivial factor),
/// read left to right with the convention: f acts on x in x ⊗ y iff
/// φ(y) ≤ ε(x).
using LetterTensor = std::vector<Letter>;

int tensor_eps(const LetterCrystal& c, int i, const LetterTensor& b);
int tensor_phi(const LetterCrystal& c, int i, const LetterTensor& b);
std::optional<LetterTensor> tensor_e(const LetterCrystal& c, int i, const LetterTensor& b);
std::optional<LetterTensor> tensor_f(const LetterCrystal& c, int i, const LetterTensor& b);

/// Weight in ε-coordinates, length n (letters beyond n are ignored).
std::vector<int> tensor_weight(const LetterTensor& b, int n);

/// Largest letter magnitude in b.
int max_index(const LetterTensor& b);

/// Indices 1..N (or 1..max_index for N = 0) that can act.
int index_bound(const LetterCrystal& c, const LetterTensor& b);

bool is_highest_weight(const LetterCrystal& c, const LetterTensor& b);

/// Raises b to its classical highest weight element; `path` receives the
/// indices applied, in order.
LetterTensor highest_weight(const LetterCrystal& c, const LetterTensor& b, std::vector<int>* path = nullptr);

/// Applies f_{path[k]} in reverse order, undoing a highest_weight path.
LetterTensor lower_along(const LetterCrystal& c, LetterTensor b, const std::vector<int>& path);

/// Column words v_1 ≺ ... ≺ v_k embed as v_k ⊗ ... ⊗ v_1; rows as v_1 ⊗ ... ⊗ v_k.
enum class Reading { Column, Row };

LetterTensor flatten(const std::vector<Word>& factors, Reading r);
/// Regroups a flat tensor into factors with the given letter counts.
std::vector<Word> regroup(const LetterTensor& b, const std::vector<int>& lengths, Reading r);

/// Crystal operators on a tensor of words.
std::optional<std::vector<Word>> words_e(const LetterCrystal& c, int i, const std::vector<Word>& t, Reading r);
std::optional<std::vector<Word>> words_f(const LetterCrystal& c, int i, const std::vector<Word>& t, Reading r);
std::vector<Word> words_hw(const LetterCrystal& c, const std::vector<Word>& t, Reading r);
bool words_is_hw(const LetterCrystal& c, const std::vector<Word>& t, Reading r);

}  // namespace krlab
