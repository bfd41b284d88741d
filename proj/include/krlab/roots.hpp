#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krlab/poly.hpp"

namespace krlab {

enum class LieType { A, B, C, D };

LieType parse_lie_type(const std::string& s);
char lie_type_char(LieType t);

/// Coordinates in the ε-basis, stored doubled so half-integers stay exact.
using Weight = std::vector<int>;

/// Integer vector to doubled weight.
Weight doubled(const std::vector<int>& v);
/// Doubled weight to integer vector; throws if some coordinate is half-integral.
std::vector<int> halved(const Weight& w);
/// Parses "1,1,0" or "3/2,3/2" into a doubled weight.
Weight parse_weight(const std::string& s);
std::string weight_to_string(const Weight& w);
bool is_spin(const Weight& w);

struct Root {
  enum class Kind { Minus, Plus, Short, Long2 };
  Weight v;  // doubled
  Kind kind;
  int i, j;  // ε_i - ε_j, ε_i + ε_j (j >= 0), or ε_i / 2ε_i (j = -1); zero-based
};

struct RootSystem {
  LieType type;
  int n;
  std::vector<Root> positive;
  Weight rho;  // doubled
};

const RootSystem& root_system(LieType type, int n);
std::vector<Weight> positive_roots(LieType type, int n);

/// Coordinates of a doubled weight in the simple-root basis, or nullopt when
/// it is not an integral combination of simple roots.
std::optional<std::vector<int>> simple_coords(const RootSystem& rs, const Weight& beta);

struct SignedPermutation {
  std::vector<int> perm;  // w(x)[perm[i]] = sign[i] * x[i]
  std::vector<int> sign;
  Weight apply(const Weight& x) const;
  int det() const;
};

/// W(A_{n-1}) = S_n, W(B_n) = W(C_n) = signed permutations, W(D_n) = even sign changes.
const std::vector<SignedPermutation>& weyl_group(LieType type, int n);

bool is_dominant(LieType type, const Weight& w);

/// Which root exponents the Kostant product carries.
enum class LMap { One, LevelA };

QPoly q_kostant(const RootSystem& rs, const Weight& beta, LMap L = LMap::One);
/// Type B only: q marks long roots, t marks short roots.
QTPoly q_kostant_qt(const RootSystem& rs, const Weight& beta);

/// Σ_w (-1)^w [e^{w(λ+ρ)-(μ+ρ)}] Π 1/(1 - q^{L(α)} e^α).
QPoly kl_poly(LieType type, int n, const Weight& lam, const Weight& mu, LMap L = LMap::One);
QTPoly kl_qt_B(int n, const Weight& lam, const Weight& mu);
QPoly kl_level_restricted(LieType type, int n, const Weight& lam, const Weight& mu);
/// Alternating sum restricted to the symmetric group.
QPoly stable_kl(LieType type, int n, const Weight& lam, const Weight& mu, LMap L = LMap::One);

}  // namespace krlab
