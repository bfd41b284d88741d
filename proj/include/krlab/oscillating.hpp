#pragma once

#include <climits>
#include <functional>
#include <string>
#include <vector>

#include "krlab/crystal.hpp"
#include "krlab/kr_column.hpp"
#include "krlab/kr_row.hpp"
#include "krlab/partition.hpp"

namespace krlab {

/// SSOT chains use ohs, GSSOT chains gohs, SSROT chains rohs.
enum class TabKind { SSOT, GSSOT, SSROT };

TabKind parse_tab_kind(const std::string& s);
std::string tab_kind_name(TabKind k);
Kind column_kind(TabKind k);  // SSOT → vdomino, GSSOT → box
Kind row_kind(TabKind k);     // SSOT → hdomino, GSSOT → box, SSROT → vdomino

/// A strip (μ, ν, λ): initial shape, middle shape, final shape. Stored trimmed.
struct Strip {
  Partition mu, nu, lam;
  friend bool operator==(const Strip&, const Strip&) = default;
  friend auto operator<=>(const Strip&, const Strip&) = default;
};

/// |ν/μ| + |ν/λ| for ohs/gohs, |μ/ν| + |λ/ν| for rohs.
int strip_size(TabKind k, const Strip& s);

/// Whether s is a strip of length r of the given kind.
bool is_strip(TabKind k, const Strip& s, int r);

/// Twice the smallest g for which s (of length r) is g-bounded.
int strip_bound2(TabKind k, const Strip& s, int r);

/// Doubled bound meaning "no bound".
inline constexpr int kNoBound = INT_MAX;

/// All strips of length r with initial shape `init` and doubled bound ≤ bound2,
/// sorted lexicographically by (ν, λ).
std::vector<Strip> strips_from(TabKind k, const Partition& init, int r, int bound2 = kNoBound);

struct OscTableau {
  TabKind kind = TabKind::SSOT;
  std::vector<Strip> strips;  // T_1, ..., T_n
  std::vector<int> weight;    // lengths of the strips
  friend bool operator==(const OscTableau&, const OscTableau&) = default;
  friend auto operator<=>(const OscTableau&, const OscTableau&) = default;
};

Partition shape_of(const OscTableau& t);
void validate_tableau(const OscTableau& t);

/// 2·c(T); 0 for a chain without strips.
int bound2(const OscTableau& t);

/// Calls `visit` for every tableau of the given kind, shape and weight with
/// 2·c(T) ≤ bound2, in lexicographic order of the intermediate shapes with
/// T_1 varying slowest. Stops early when `visit` returns false.
void enumerate_tableaux(TabKind k, const Partition& shape, const std::vector<int>& weight, int bound2,
                        const std::function<bool(const OscTableau&)>& visit);
std::vector<OscTableau> all_tableaux(TabKind k, const Partition& shape, const std::vector<int>& weight,
                                     int bound2 = kNoBound);
long count_tableaux(TabKind k, const Partition& shape, const std::vector<int>& weight, int bound2 = kNoBound);

/// Column indices: i when ν/μ has a cell in column i, \bar{i} when ν/λ does
/// (for rohs: i when λ/ν has a cell in column i, \bar{i} when μ/ν does). Sorted in ≺ order.
Word cind(const Strip& s, TabKind k = TabKind::SSOT);
/// Row indices with multiplicity, sorted in ≺ order; same orientation as cind.
Word rind(const Strip& s, TabKind k = TabKind::SSOT);

/// red(cind(T_n)) ⊗ ... ⊗ red(cind(T_1)) in B^{weight_n,1} ⊗ ... ⊗ B^{weight_1,1}.
ColumnTensor phi_c(const OscTableau& t);
/// Inverse of phi_c on a column tensor of the matching kind.
OscTableau phi_c_inverse(TabKind k, const ColumnTensor& b);

/// The multiset transform taking an ohs to an rohs with the same ends.
Strip gamma(const Strip& ohs);
/// Inverse of gamma, producing an ohs of length r.
Strip gamma_inv(const Strip& rohs, int r);

/// rind(Γ(T_n)) ⊗ ... (SSOT, GSSOT) or rind(T_n) ⊗ ... (SSROT).
RowTensor phi_r(const OscTableau& t);

/// Standardization of an ohs: the partitions after each single-cell step.
std::vector<Partition> std_seq(const Strip& ohs);
/// The cind letters as a tensor \bar{b}_r ⊗ ... ⊗ a_1, left to right.
LetterTensor sp(const Strip& ohs);

/// One growth step: mu → lam differ by one cell and ζ/μ is a horizontal strip.
Partition fg_step(const Partition& mu, const Partition& lam, const Partition& zeta);
std::vector<Partition> fg_sequence(const std::vector<Partition>& seq, const Partition& zeta);

/// Aug(T, r) computed by growth along the standardizations of T_2, ..., T_n.
OscTableau aug(const OscTableau& t, int r);
/// Aug(T, r) computed from the highest weight of φ_c(T) with b_1 extended.
OscTableau aug_by_hw(const OscTableau& t, int r);

/// The unique T' of shape (λ_1, ..., λ_{n-1}) with Aug(T', λ_n) = T.
OscTableau deaug_last_row(const OscTableau& t);

/// The unique T' of shape new_shape with Aug(T', r') = Aug(T, r).
OscTableau reshape_aug(const OscTableau& t, int r, const Partition& new_shape);

/// Adds a column of height i to the i-th strip's shapes.
OscTableau iota_ssot(const OscTableau& t);

/// Number of bound-limited strips of length r from μ to λ; kind 'B' is
/// gohs, 'C' ohs, 'D' rohs. The bound is doubled.
long kappa_count(char kind, const Partition& lam, const Partition& mu, int r, int bound2);

/// (2g - λ_1, λ_2, ...) with g given doubled.
std::vector<int> flip_doubled(std::vector<int> lam, int g2);

std::string strip_to_string(const Strip& s);
std::string tableau_to_string(const OscTableau& t);

}  // namespace krlab
