#pragma once

#include <string>
#include <utility>
#include <vector>

#include "krlab/letters.hpp"
#include "krlab/oscillating.hpp"
#include "krlab/partition.hpp"

namespace krlab {

/// A tableau as rows of entries: rows weakly increasing, columns strictly.
using Tableau = std::vector<std::vector<int>>;

/// Zero-based position.
struct Cell {
  int row = 0, col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

Partition tableau_shape(const Tableau& t);
/// Rows weakly increasing, columns strictly increasing, shape a partition.
bool is_semistandard(const Tableau& t);
/// Semistandard with pairwise-distinct positive entries.
bool is_distinct_tableau(const Tableau& t);

/// T ← x: bumps the leftmost entry greater than x. Returns the new cell.
Cell row_insert(Tableau& t, int x);
/// x → T: bumps the topmost entry greater than x. Returns the new cell.
Cell column_insert(Tableau& t, int x);
/// T ← w_1 ⋯ w_n.
Tableau row_insert_word(Tableau t, const std::vector<int>& w);
/// w_1 → (⋯ → (w_n → T)).
Tableau column_insert_word(const std::vector<int>& w, Tableau t);

/// Removes the corner at the end of row `row` by reverse row bumping and
/// returns the letter leaving the first row. Throws if the cell is not a corner.
int row_delete(Tableau& t, int row);
/// Removes the corner at the bottom of column `col` by reverse column
/// bumping and returns the letter leaving the first column.
int column_delete(Tableau& t, int col);

/// Rows bottom to top, each left to right; w → ∅ gives back T.
std::vector<int> row_reading_word(const Tableau& t);
/// Columns left to right, each bottom to top.
std::vector<int> column_reading_word(const Tableau& t);

/// The first k columns.
Tableau truncate(const Tableau& t, int k);

/// Length of the first row, 0 for the empty tableau.
int first_row(const Tableau& t);

/// Columns (top_s / bottom_s).
struct TwoLineArray {
  std::vector<int> top, bottom;
  std::size_t size() const { return top.size(); }
  friend bool operator==(const TwoLineArray&, const TwoLineArray&) = default;
  friend auto operator<=>(const TwoLineArray&, const TwoLineArray&) = default;
};

/// j_s ≥ i_s, strictly increasing top row, entries distinct except j_s = i_s.
bool is_tl(const TwoLineArray& a);
/// Adds (i / j) for every column (j / i) with j > i, sorted by the top row.
TwoLineArray bar(const TwoLineArray& a);
/// Drops the columns (j / j).
TwoLineArray hat(const TwoLineArray& a);
/// i_r ⋯ i_1 → ∅.
Tableau tab(const TwoLineArray& a);
/// tab(bar(I)) built column by column; I must be in TL(r).
Tableau burge(const TwoLineArray& a);
/// The unique I ∈ TL(r) with tab(bar(I)) = T, by reversing Burge's steps.
TwoLineArray tl_of(const Tableau& t);

Tableau alpha(const Tableau& t);
Tableau beta(const Tableau& t);

/// Letters bumped out of the first row during ∅ ← w.
std::vector<int> second(const std::vector<int>& w);
/// The greedy chain of first-row placements ending at the last letter.
std::vector<int> lseq(const std::vector<int>& w);
/// Length of the longest strictly increasing subsequence.
int longest_increasing(const std::vector<int>& w);

/// G_0 = ∅, ..., G_n = λ with consecutive shapes differing by at most one cell.
using ShapeChain = std::vector<Partition>;

bool is_gsot_chain(const ShapeChain& g);
/// The chain of final shapes of a GSSOT or SSOT tableau of weight (1^n).
ShapeChain chain_of(const OscTableau& t);
/// The GSSOT tableau of weight (1^n) with this chain.
OscTableau gsot_of(const ShapeChain& g);

struct BCStage1 {
  Tableau t;
  TwoLineArray i;
  friend bool operator==(const BCStage1&, const BCStage1&) = default;
};

/// Insertion, recording and row deletion along the chain. `trace` receives
/// the pair after each step.
BCStage1 phi_bc_stage1(const ShapeChain& g, std::vector<BCStage1>* trace = nullptr);

/// P and the recording tableau Q of shape(P); cells of shape(T) hold 0.
struct BCPair {
  Tableau p, q;
  friend bool operator==(const BCPair&, const BCPair&) = default;
  friend auto operator<=>(const BCPair&, const BCPair&) = default;
};

/// P = T ← column word of tab(bar(I)); Q records the source column of each new cell.
BCPair phi_bc_stage2(const BCStage1& s);
BCPair phi_bc(const ShapeChain& g);

/// Q restricted to its nonzero cells, transposed, is an LR tableau of shape
/// shape(Q)ᵗ / λᵗ.
bool is_transposed_lr(const Tableau& q, const Partition& lam);
/// Content of Q's nonzero entries.
std::vector<int> q_content(const Tableau& q);

/// Column criterion on Q for c(G) ≤ g, g given doubled.
bool bound_from_q(const Tableau& q, const Partition& lam, int g2);
/// First-row criterion on (T ← i_r ⋯ i_1) and (T ← d_s ⋯ d_1) for c(G) ≤ g.
bool bound_from_stage1(const BCStage1& s, int g2);

/// Type D plactic relations on words in the letters 1..n, \bar{n}..\bar{1}.
enum class PlacticRule { R1, R2, R3, R4 };

PlacticRule parse_plactic_rule(const std::string& s);
/// Every word obtained by one rewrite of the three letters at `pos` under `rule`.
std::vector<Word> plactic_rewrites(const Word& v, PlacticRule rule, std::size_t pos, int n);
/// The first of plactic_rewrites; throws if nothing matches.
Word plactic_rewrite(const Word& v, PlacticRule rule, std::size_t pos, int n);
/// All single-rewrite neighbours of v.
std::vector<Word> plactic_neighbours(const Word& v, int n);
/// Words reachable from v in at most `depth` rewrites, including v.
std::vector<Word> plactic_ball(const Word& v, int n, int depth);

/// c ↦ \overline{n+1-c}, \bar{c} ↦ n+1-c, letterwise.
Word theta_1n(const Word& b, int n);

std::string rows_to_string(const Tableau& t);
std::string two_line_to_string(const TwoLineArray& a);

}  // namespace krlab
