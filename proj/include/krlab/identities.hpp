#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "krlab/characters.hpp"
#include "krlab/oscillating.hpp"
#include "krlab/poly.hpp"
#include "krlab/roots.hpp"

namespace krlab {

/// Both sides of one identity instance.
struct IdentityReport {
  std::string identity;
  nlohmann::json params = nlohmann::json::object();
  std::string lhs, rhs;
  bool equal = false;
  double seconds = 0;
  nlohmann::json witnesses;  // null unless requested
};

nlohmann::json to_json(const IdentityReport& r);
/// identity,params,lhs,rhs,equal with RFC 4180 quoting.
std::string csv_header();
std::string to_csv(const IdentityReport& r);

/// A tableau with its statistic, for failure forensics.
template <class P>
struct Witness {
  OscTableau tableau;
  P value;
};

// ---------------------------------------------------------------------------
// Lusztig q-weight multiplicities through oscillating tableaux

/// Σ over SSOT_g(oc(λ,g), oc_bar(μ,g)) of q^{D̄(φ_c(T))}.
QPoly thm_c_rhs(const Partition& lam, const Partition& mu, int n, int g,
                std::vector<Witness<QPoly>>* witnesses = nullptr);
/// Σ over GSSOT_{g+1/2}(oc(λ,g), oc_bar(μ,g)) of energy_{q,t}(φ_c(T)).
QTPoly thm_b_rhs(const Partition& lam, const Partition& mu, int n, int g,
                 std::vector<Witness<QTPoly>>* witnesses = nullptr);

/// λ^{(i)} for 1 ≤ i ≤ n: the first i-1 parts raised by one, λ_i dropped.
Partition lambda_i(const Partition& lam, int i, int n);
/// (μ_2, ..., μ_n).
Partition mu_prime(const Partition& mu, int n);
/// λ_i - μ_1 + 1 - i.
int morris_length(const Partition& lam, const Partition& mu, int i);

/// Rohs of length r with initial shape λ and final shape of length ≤ m.
std::vector<Strip> rohs_le(const Partition& lam, int r, int m);

/// Morris recurrence for KL^{C_n}_{λ,μ}(q), recursing on the C_{n-1} oracle. n ≥ 2.
QPoly morris_c(const Partition& lam, const Partition& mu, int n);
/// Morris recurrence for KL^{B_n}_{λ♯,μ♯}(q,t), recursing on the B_{n-1} oracle. n ≥ 2.
QTPoly morris_b_qt(const Partition& lam, const Partition& mu, int n);

/// Φ^{(i)}(S, T): appends the ohs (oc(ν,g), (oc(ζ,g), m'), oc(λ^{(i)},g)) to T,
/// where S = (λ^{(i)}, ζ, ν). Type C (SSOT T): m' = m with r + 2m = λ_i - μ_1 + 1 - i.
/// Type B (GSSOT T): m = λ_i - μ_1 + 1 - i - r and m' = ⌊m/2⌋.
/// Throws std::invalid_argument when (S, T) is not in A^{(i)}.
OscTableau add_rohs_phi(LieType type, const Partition& lam, const Partition& mu, int n, int g, int i,
                        const Strip& s, const OscTableau& t);

struct AddRohsAudit {
  long pairs = 0;         // |A^{(i)}|
  long targets = 0;       // size of the target set
  long distinct = 0;      // distinct images
  long misses = 0;        // images outside the target set
  long energy_faults = 0; // violations of the q^r t^m (or +r+m) law
};
/// Enumerates A^{(i)}, maps it through Φ^{(i)} and audits bijectivity and the energy law.
AddRohsAudit audit_add_rohs(LieType type, const Partition& lam, const Partition& mu, int n, int g, int i);

struct InvolutionReport {
  std::vector<std::vector<OscTableau>> g_sets;  // G_1, ..., G_n
  std::vector<std::vector<OscTableau>> g1, g2;  // G_i^{(1)}, G_i^{(2)}
  bool chaining = false;        // G_i^{(2)} = G_{i+1}^{(1)} for all i
  bool bounded = false;         // every element of every G_i has c ≤ g
  bool energy_preserved = false;  // D̄(T) = D̄(Aug(T, ·)) for all T
  bool matches_ssot = false;    // G_1^{(1)} = SSOT_g(oc(λ,g), oc_bar(μ,g))
  QPoly telescoped;             // Σ_i (-1)^{i-1} Σ_{G_i} q^{D̄}
  QPoly direct;                 // thm_c_rhs
};
/// Builds G_i = {Aug(T, g - λ_i + i - 1) : T ∈ SSOT_g(oc(λ^{(i)},g), β^{(i)})} and its split.
InvolutionReport involution_partition(const Partition& lam, const Partition& mu, int n, int g);

// ---------------------------------------------------------------------------
// Level-restricted multiplicities and X = K

/// ⋄ and ζ: B → (box, 2), C → (hdomino, 1), D → (vdomino, 2).
Kind level_kind(LieType type);
int level_zeta(LieType type);
/// The tableau family whose φ_r images are HW(B_μ(⋄), λ).
TabKind level_tab_kind(LieType type);

/// q^{||μ|| + (|μ|-|λ|)/2} Σ_{b ∈ HW(B_μ(⋄), λ), ε₀(b) ≤ bound} q^{-|⋄| D̄(b)/2};
/// μ lists the row lengths with b_1 first. bound = kNoBound drops the filter.
QPoly filtered_x(Kind kind, const Partition& lam, const std::vector<int>& mu, int eps0_bound = kNoBound);

struct LevelTriple {
  QPoly lhs, mid, rhs;
  bool equal() const { return lhs == mid && mid == rhs; }
};
/// lhs = KL^{g_n, L_A}_{λ,μ}, mid = Σ_ν K^A_{ν̂,μ̂}(q) d_{λ,ν}, rhs = the ε₀ ≤ ζg filtered sum.
/// Weights and g are doubled; oc(λ,g), oc(μ,g) must be nonnegative integer vectors.
LevelTriple level_formula(LieType type, int n, const Weight& lam, const Weight& mu, int g2);

/// d̄^⋄_{λ,ν}(M) for ν ⊢ |μ| with ℓ(ν) ≤ ℓ(μ), by triangular expansion of the
/// filtered sums in the Kostka–Foulkes basis. Throws std::runtime_error if a
/// coefficient is not a nonnegative integer.
std::map<Partition, std::int64_t> xk_filter_table(Kind kind, const Partition& lam, const std::vector<int>& mu,
                                                  int eps0_bound = kNoBound);
/// Σ_{γ ∈ P^⋄} c^ν_{γ,λ}: P^box all partitions, P^hdomino even parts, P^vdomino even columns.
std::int64_t xk_coefficient(Kind kind, const Partition& nu, const Partition& lam);

// ---------------------------------------------------------------------------
// q = 1 counts and the character identities behind them

/// Coefficient of x^μ in a character; μ doubled.
std::int64_t weight_multiplicity(LieType type, int n, const Weight& lam, const Weight& mu);

/// |GSSOT_g| (B), |SSOT_g| (C) or |SSROT_g| (D) of shape oc(λ,g), weight oc(μ,g)
/// against [x^μ] s_λ; λ, μ, g doubled.
IdentityReport q1_counts(LieType type, int n, const Weight& lam, const Weight& mu, int g2);

/// Expands a W-invariant Laurent polynomial in irreducible characters.
/// Throws std::runtime_error if a remainder is left.
std::map<Weight, std::int64_t> character_expand(LieType type, int n, const WeightPoly& f);

/// Okada's dual Pieri counts: K^{B_n}_{λ,μ}(r) and K^{D_n}_{λ,μ}(r), M(λ,μ,n).
std::int64_t okada_kb(const Partition& lam, const Partition& mu, int r, int n);
std::int64_t okada_kd(const Partition& lam, const Partition& mu, int r, int n);
int okada_m(const Partition& lam, const Partition& mu, int n);

/// ps, ns (non-spin) and pss, nss (spin) combinations of type D characters.
WeightPoly ps_d(int n, const Partition& lam);
WeightPoly ns_d(int n, const Partition& lam);
WeightPoly pss_d(int n, const Partition& lam);
WeightPoly nss_d(int n, const Partition& lam);
/// pss / Π (x_i^{1/2} + x_i^{-1/2}); throws std::runtime_error if not divisible.
WeightPoly pss_bar_d(int n, const Partition& lam);

/// Exact division by x_i^{1/2} + s·x_i^{-1/2} (s = ±1), or nullopt.
std::optional<WeightPoly> divide_half_binomial(const WeightPoly& f, int i, int s);

/// Π_{i ≤ n, j ≤ g} (x_i + x_i^{-1} - t_j - t_j^{-1}) in n + g variables.
WeightPoly cauchy_product(int n, int g);
/// The character side of the type B, type D and spin type D Cauchy identities.
WeightPoly cauchy_b_side(int n, int g);
WeightPoly cauchy_d_side(int n, int g);
WeightPoly cauchy_spin_side(int n, int g);

/// Named property checks at one (n, g); every entry must hold.
std::vector<IdentityReport> q1_property_suite(int n, int g);

// ---------------------------------------------------------------------------
// Suites

struct SuiteConfig {
  std::string suite;   // thm-c, thm-b, morris-c, morris-b, add-rohs, involution, level, xk, q1, all
  int max_n = 4;
  int max_weight = 6;
  int jobs = 1;
  bool witnesses = false;
};

std::vector<std::string> suite_names();
/// Runs every instance of the suite; reports are in a fixed instance order.
std::vector<IdentityReport> run_suite(const SuiteConfig& cfg);

}  // namespace krlab
