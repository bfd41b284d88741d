#pragma once

#include <map>
#include <vector>

#include "krlab/partition.hpp"
#include "krlab/poly.hpp"
#include "krlab/roots.hpp"

namespace krlab {

/// Laurent polynomial in x_1..x_n keyed by doubled exponent vectors.
class WeightPoly {
 public:
  using Coeff = std::int64_t;

  WeightPoly() = default;
  static WeightPoly constant(int n, Coeff c = 1);
  static WeightPoly monomial(const Weight& e, Coeff c = 1);

  const std::map<Weight, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(const Weight& e) const;
  void add_term(const Weight& e, Coeff c);

  WeightPoly& operator+=(const WeightPoly& o);
  WeightPoly& operator-=(const WeightPoly& o);
  friend WeightPoly operator+(WeightPoly a, const WeightPoly& b) { return a += b; }
  friend WeightPoly operator-(WeightPoly a, const WeightPoly& b) { return a -= b; }
  friend WeightPoly operator*(const WeightPoly& a, const WeightPoly& b);
  friend WeightPoly operator*(WeightPoly a, Coeff s);
  friend bool operator==(const WeightPoly& a, const WeightPoly& b) { return a.terms_ == b.terms_; }

  /// x_i -> x_i^{-1}.
  WeightPoly inverted() const;
  /// Multiply by x^{shift}.
  WeightPoly shifted(const Weight& shift) const;
  Coeff at_one() const;

 private:
  std::map<Weight, Coeff> terms_;
};

/// Schur polynomial s_λ(x_1..x_n).
const WeightPoly& schur(const Partition& lam, int n);
/// Kostka number K_{λ,μ} for a composition μ.
std::int64_t kostka_number(const Partition& lam, const std::vector<int>& mu);

/// Expands a symmetric polynomial (integral exponents) in Schur polynomials;
/// throws if the remainder does not vanish.
std::map<Partition, std::int64_t> schur_expand(const WeightPoly& f, int n);

/// Irreducible character from orbit sums of q=1 weight multiplicities.
/// Type A weights are partitions with at most n parts.
const WeightPoly& character(LieType type, int n, const Weight& lam);
/// Dominant weights with nonzero multiplicity in the character.
std::vector<std::pair<Weight, std::int64_t>> dominant_multiplicities(LieType type, int n, const Weight& lam);

/// Coefficients d_{λ,ν}, keyed by ν̂ = oc(ν, g) (a partition).
std::map<Partition, std::int64_t> twisted_branching(LieType type, int n, const Weight& lam, const Weight& g2);
std::int64_t twisted_branching_d(LieType type, int n, const Weight& lam, const Weight& nu, const Weight& g2);

/// e^{(n)}_r = Σ_i e_i(x) e_{r-i}(x^{-1}).
WeightPoly e_poly(int n, int r);

/// m_λ: the sum of x^w over the W-orbit of λ.
WeightPoly orbit_sum(LieType type, int n, const Weight& lam);

/// Littlewood–Richardson coefficient c^ν_{α,β} computed in ℓ(ν) variables.
std::int64_t lr_coefficient(const Partition& nu, const Partition& a, const Partition& b);

/// Kostka–Foulkes polynomial via the Lascoux–Schützenberger charge.
QPoly kostka_foulkes(const Partition& lam, const Partition& mu);
/// Charge of a word whose content is a partition.
int charge(const std::vector<int>& word);

/// Semistandard tableaux of shape λ with content μ, as rows.
std::vector<std::vector<std::vector<int>>> ssyt(const Partition& lam, const std::vector<int>& mu);

}  // namespace krlab
