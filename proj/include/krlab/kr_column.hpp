#pragma once

#include <string>
#include <utility>
#include <vector>

#include "krlab/kind.hpp"
#include "krlab/letters.hpp"
#include "krlab/poly.hpp"

namespace krlab {

/// An element of B^{cap,1}(kind): an admissible column word.
struct Column {
  int cap = 0;
  Word word;
  friend bool operator==(const Column&, const Column&) = default;
  friend auto operator<=>(const Column&, const Column&) = default;
};

/// b_n ⊗ ... ⊗ b_1, stored left to right.
using ColumnTensor = std::vector<Column>;

/// A chain in (B^{1,1})^{⊗m}, left to right; ∅ is kEmpty.
using Chain = std::vector<Letter>;

void validate_column(Kind kind, const Column& c);

struct RMatrixResult {
  Letter left;   // the B^{1,1} factor
  Word right;    // the B^{a,1} factor
  std::string rule;  // e.g. "1-4", "2-2"
};

/// R: B^{a,1} ⊗ B^{1,1} → B^{1,1} ⊗ B^{a,1} for kind Box or VDomino.
RMatrixResult r_matrix_col(Kind kind, int a, const Word& u, Letter c);

/// R: B^{1,1} ⊗ B^{a,1} → B^{a,1} ⊗ B^{1,1}, inverted through highest weights.
std::pair<Word, Letter> r_matrix_col_inverse(Kind kind, int a, Letter c, const Word& u);

/// The column splitting map into (B^{1,1})^{⊗|μ|}.
Chain split_col(Kind kind, const ColumnTensor& b);

/// Closed form of the splitting of a highest weight pair u ⊗ [1..n].
struct SplitStats {
  int k = 0, n = 0, p = 0, q = 0;
  int tol = 0, midd = 0;
};
SplitStats split_stats(int a, const Word& u, int n);
Chain split_image_hw(Kind kind, int a, const Word& u, int b, int n);

int local_H(Kind kind, Letter x, Letter y);
/// Σ_i (n-i) H(b_{i+1}, b_i), doubled and plus #∅ for Box.
long energy_chain(Kind kind, const Chain& c);
long energy_col(Kind kind, const ColumnTensor& b);

int vacancy(const ColumnTensor& b);
/// q^{(D̄ - vac)/2} t^{vac} for Box tensors.
QTPoly qt_energy(const ColumnTensor& b);

/// ι(v) = 1 (v + 1) in B^{cap+1,1}, applied factorwise.
Column iota(const Column& c);
ColumnTensor iota(const ColumnTensor& b);

/// Classical crystal view of a column tensor at rank N.
std::vector<Word> column_words(const ColumnTensor& b);
ColumnTensor with_words(const ColumnTensor& shape, const std::vector<Word>& words);
bool column_is_hw(const ColumnTensor& b);

}  // namespace krlab
