#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "krlab/kind.hpp"
#include "krlab/kr_column.hpp"
#include "krlab/letters.hpp"

namespace krlab {

/// An element of B^{1,cap}(kind): a weakly increasing word.
struct Row {
  int cap = 0;
  Word word;
  friend bool operator==(const Row&, const Row&) = default;
  friend auto operator<=>(const Row&, const Row&) = default;
};

/// b_n ⊗ ... ⊗ b_1, stored left to right.
using RowTensor = std::vector<Row>;

void validate_row(Kind kind, const Row& r, bool allow_zero = false);

/// Affine crystal structure on rows and row tensors at classical rank N.
/// Index 0 uses the closed ε₀/φ₀ forms; indices 1..N the letter crystal.
struct RowCrystal {
  Kind kind = Kind::HDomino;
  int N = 4;

  int eps(int i, const Row& r) const;
  int phi(int i, const Row& r) const;
  std::optional<Row> e(int i, const Row& r) const;
  std::optional<Row> f(int i, const Row& r) const;

  int eps(int i, const RowTensor& b) const;
  int phi(int i, const RowTensor& b) const;
  std::optional<RowTensor> e(int i, const RowTensor& b) const;
  std::optional<RowTensor> f(int i, const RowTensor& b) const;

  bool is_hw(const RowTensor& b) const;
  RowTensor highest_weight(const RowTensor& b, std::vector<int>* path = nullptr) const;
  RowTensor lower_along(RowTensor b, const std::vector<int>& path) const;
};

int eps0_row(Kind kind, const Row& r);
int phi0_row(Kind kind, const Row& r);
/// ⟨wt, α₀^∨⟩ on the classical weight of a row.
int pairing0_row(Kind kind, const Row& r);
int eps0_tensor(Kind kind, const RowTensor& b);

/// Smallest rank at which rows with these letters are treated as "N large".
int default_rank(const RowTensor& b);

/// R: B^{1,s} ⊗ B^{1,1} → B^{1,1} ⊗ B^{1,s}; memoized per (kind, s, N).
std::pair<Row, Row> r_matrix_row(Kind kind, const Row& u, const Row& c, int N = 0);

/// Same map computed only by affine BFS from 1^s ⊗ 1 ↦ 1 ⊗ 1^s.
std::pair<Row, Row> r_matrix_row_bfs(Kind kind, const Row& u, const Row& c, int N);

/// Counts of R evaluations resolved by highest weight matching vs BFS.
struct RowRStats {
  long by_hw = 0;
  long by_bfs = 0;
};
RowRStats row_r_stats();

Chain split_row(Kind kind, const RowTensor& b, int N = 0);
long energy_row(Kind kind, const RowTensor& b, int N = 0);

}  // namespace krlab
