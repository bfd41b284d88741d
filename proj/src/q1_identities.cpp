#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "krlab/identities.hpp"

namespace krlab {

namespace {

Partition padded(Partition p, int n) {
  p.resize(std::max<std::size_t>(p.size(), n), 0);
  p.resize(n);
  return p;
}

/// Places f (in `width` variables) at coordinates offset.. of a `total`-variable polynomial.
WeightPoly embed(const WeightPoly& f, int offset, int total) {
  WeightPoly out;
  for (const auto& [e, c] : f.terms()) {
    Weight x(total, 0);
    std::copy(e.begin(), e.end(), x.begin() + offset);
    out.add_term(x, c);
  }
  return out;
}

Weight unit(int total, int i, int exponent2) {
  Weight w(total, 0);
  w[i] = exponent2;
  return w;
}

/// Conjugate of oc(λ, g), the index set of the dual side of the Cauchy identities.
Partition tilde(const Partition& lam, int n, int g) { return conjugate(trimmed(oc(padded(lam, n), g))); }

std::string poly_string(const WeightPoly& f) {
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "x" + weight_to_string(e);
  }
  return out.empty() ? "0" : out;
}

IdentityReport report(std::string id, nlohmann::json params, std::string lhs, std::string rhs, bool equal) {
  IdentityReport r;
  r.identity = std::move(id);
  r.params = std::move(params);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.equal = equal;
  return r;
}

IdentityReport compare(std::string id, nlohmann::json params, const WeightPoly& a, const WeightPoly& b) {
  const bool eq = a == b;
  return report(std::move(id), std::move(params), eq ? "equal" : poly_string(a), eq ? "equal" : poly_string(b), eq);
}

IdentityReport compare(std::string id, nlohmann::json params, std::int64_t a, std::int64_t b) {
  return report(std::move(id), std::move(params), std::to_string(a), std::to_string(b), a == b);
}

}  // namespace

std::int64_t weight_multiplicity(LieType type, int n, const Weight& lam, const Weight& mu) {
  return character(type, n, lam).coeff(mu);
}

IdentityReport q1_counts(LieType type, int n, const Weight& lam, const Weight& mu, int g2) {
  const auto start = std::chrono::steady_clock::now();
  auto hat = [&](const Weight& w) {
    std::vector<int> h(n);
    for (int i = 0; i < n; ++i) {
      const int v = g2 - w[n - 1 - i];
      if (v < 0 || v % 2) throw std::invalid_argument("q1_counts: oc(·, g) must be a nonnegative integer vector");
      h[i] = v / 2;
    }
    return h;
  };
  const auto lh = hat(lam), mh = hat(mu);
  TabKind k = type == LieType::B ? TabKind::GSSOT : type == LieType::C ? TabKind::SSOT : TabKind::SSROT;
  if (type == LieType::A) throw std::invalid_argument("q1_counts: type B, C or D");
  const std::int64_t lhs = is_partition(lh) ? count_tableaux(k, lh, mh, g2) : 0;
  const std::int64_t rhs = weight_multiplicity(type, n, lam, mu);
  IdentityReport r = compare(std::string("q1-") + lie_type_char(type),
                             {{"type", std::string(1, lie_type_char(type))},
                              {"n", n},
                              {"lambda", weight_to_string(lam)},
                              {"mu", weight_to_string(mu)},
                              {"g", g2 % 2 ? std::to_string(g2) + "/2" : std::to_string(g2 / 2)}},
                             lhs, rhs);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::map<Weight, std::int64_t> character_expand(LieType type, int n, const WeightPoly& f_in) {
  const Weight rho = root_system(type, n).rho;
  auto height = [&](const Weight& w) {
    long h = 0;
    for (int i = 0; i < n; ++i) h += static_cast<long>(w[i]) * rho[i];
    return h;
  };
  std::map<Weight, std::int64_t> out;
  WeightPoly f = f_in;
  while (!f.is_zero()) {
    const Weight* top = nullptr;
    long best = 0;
    for (const auto& [e, c] : f.terms()) {
      const long h = height(e);
      if (!top || h > best || (h == best && is_dominant(type, e) && !is_dominant(type, *top))) {
        top = &e;
        best = h;
      }
    }
    if (!is_dominant(type, *top)) throw std::runtime_error("character_expand: not W-invariant at " + weight_to_string(*top));
    const Weight lam = *top;
    const std::int64_t c = f.coeff(lam);
    out[lam] += c;
    f -= character(type, n, lam) * c;
  }
  return out;
}

std::int64_t okada_kb(const Partition& lam_in, const Partition& mu_in, int r, int n) {
  const Partition lam = padded(lam_in, n), mu = padded(mu_in, n);
  if (length_of(lam_in) > n || length_of(mu_in) > n) return 0;
  const int lm = length_of(mu), ll = length_of(lam);
  std::int64_t count = 0;
  Partition xi(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (!is_partition(xi)) return;
      const int s = 2 * size_of(xi) - size_of(mu) - size_of(lam);
      if (s != r && s != r - 1) return;
      if (lm < n) {
        const int lx = length_of(xi);
        if (!((s == r && lx == std::max(lm, ll)) || (s == r - 1 && lx == n))) return;
      }
      ++count;
      return;
    }
    for (xi[i] = std::max(lam[i], mu[i]); xi[i] <= std::min(lam[i], mu[i]) + 1; ++xi[i]) rec(i + 1);
  };
  rec(0);
  return count;
}

std::int64_t okada_kd(const Partition& lam_in, const Partition& mu_in, int r, int n) {
  const Partition lam = padded(lam_in, n), mu = padded(mu_in, n);
  if (length_of(lam_in) > n || length_of(mu_in) > n) return 0;
  const int lm = length_of(mu), ll = length_of(lam);
  std::int64_t count = 0;
  Partition xi(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (!is_partition(xi)) return;
      if (2 * size_of(xi) - size_of(mu) - size_of(lam) != r) return;
      const int lx = length_of(xi);
      if (lx != n && lx != lm && lx != ll) return;
      ++count;
      return;
    }
    for (xi[i] = std::max(lam[i], mu[i]); xi[i] <= std::min(lam[i], mu[i]) + 1; ++xi[i]) rec(i + 1);
  };
  rec(0);
  return count;
}

int okada_m(const Partition& lam, const Partition& mu, int n) {
  return length_of(lam) == n && length_of(mu) < n ? 2 : 1;
}

WeightPoly ps_d(int n, const Partition& lam) {
  Weight plus = doubled(padded(lam, n)), minus = plus;
  minus[n - 1] = -minus[n - 1];
  return character(LieType::D, n, plus) + character(LieType::D, n, minus);
}

WeightPoly ns_d(int n, const Partition& lam) {
  Weight plus = doubled(padded(lam, n)), minus = plus;
  minus[n - 1] = -minus[n - 1];
  return character(LieType::D, n, plus) - character(LieType::D, n, minus);
}

namespace {

std::pair<Weight, Weight> spin_pair(int n, const Partition& lam) {
  Weight plus = doubled(padded(lam, n));
  for (int& x : plus) x += 1;
  Weight minus = plus;
  minus[n - 1] = -minus[n - 1];
  return {plus, minus};
}

}  // namespace

WeightPoly pss_d(int n, const Partition& lam) {
  auto [plus, minus] = spin_pair(n, lam);
  return character(LieType::D, n, plus) + character(LieType::D, n, minus);
}

WeightPoly nss_d(int n, const Partition& lam) {
  auto [plus, minus] = spin_pair(n, lam);
  return character(LieType::D, n, plus) - character(LieType::D, n, minus);
}

std::optional<WeightPoly> divide_half_binomial(const WeightPoly& f, int i, int s) {
  // Work with p(y)·y = (y² + s)·q(y), y = x_i^{1/2} (one step in doubled exponents).
  std::map<Weight, std::map<int, WeightPoly::Coeff>> groups;
  for (const auto& [e, c] : f.terms()) {
    Weight rest = e;
    rest[i] = 0;
    groups[rest][e[i] + 1] += c;
  }
  WeightPoly out;
  for (auto& [rest, p] : groups) {
    const int low = p.begin()->first;
    while (!p.empty()) {
      auto top = std::prev(p.end());
      const int e = top->first;
      const auto c = top->second;
      if (e - 2 < low) return std::nullopt;
      Weight w = rest;
      w[i] = e - 2;
      out.add_term(w, c);
      p.erase(top);
      if ((p[e - 2] -= s * c) == 0) p.erase(e - 2);
    }
  }
  return out;
}

WeightPoly pss_bar_d(int n, const Partition& lam) {
  WeightPoly f = pss_d(n, lam);
  for (int i = 0; i < n; ++i) {
    auto q = divide_half_binomial(f, i, 1);
    if (!q) throw std::runtime_error("pss_bar_d: no factor x^{1/2} + x^{-1/2} in variable " + std::to_string(i + 1));
    f = std::move(*q);
  }
  return f;
}

WeightPoly cauchy_product(int n, int g) {
  const int total = n + g;
  WeightPoly out = WeightPoly::constant(total);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < g; ++j) {
      WeightPoly f;
      f.add_term(unit(total, i, 2), 1);
      f.add_term(unit(total, i, -2), 1);
      f.add_term(unit(total, n + j, 2), -1);
      f.add_term(unit(total, n + j, -2), -1);
      out = out * f;
    }
  return out;
}

namespace {

WeightPoly cauchy_sum(int n, int g, const std::function<WeightPoly(const Partition&, const Partition&)>& term) {
  WeightPoly out;
  for (const auto& lam : partitions_in_box(n, g)) {
    const Partition t = tilde(lam, n, g);
    WeightPoly f = term(lam, t);
    if (size_of(t) % 2) f = f * -1;
    out += f;
  }
  return out;
}

}  // namespace

WeightPoly cauchy_b_side(int n, int g) {
  return cauchy_sum(n, g, [&](const Partition& lam, const Partition& t) {
    return embed(character(LieType::B, n, doubled(padded(lam, n))), 0, n + g) *
           embed(character(LieType::B, g, doubled(padded(t, g))), n, n + g);
  });
}

WeightPoly cauchy_d_side(int n, int g) {
  WeightPoly twice = cauchy_sum(n, g, [&](const Partition& lam, const Partition& t) {
    return embed(ps_d(n, lam), 0, n + g) * embed(ps_d(g, t), n, n + g);
  });
  WeightPoly out;
  for (const auto& [e, c] : twice.terms()) {
    if (c % 2) throw std::runtime_error("cauchy_d_side: odd coefficient");
    out.add_term(e, c / 2);
  }
  return out;
}

WeightPoly cauchy_spin_side(int n, int g) {
  return cauchy_sum(n, g, [&](const Partition& lam, const Partition& t) {
    return embed(pss_bar_d(n, lam), 0, n + g) * embed(pss_bar_d(g, t), n, n + g);
  });
}

namespace {

/// Σ_{λ ⊆ (g^n)} (-1)^{|λ̃|} m_λ(x) Π_i e^{(g)}_{g-λ_i}(t).
WeightPoly cauchy_monomial_side(int n, int g) {
  return cauchy_sum(n, g, [&](const Partition& lam, const Partition&) {
    WeightPoly f = embed(orbit_sum(LieType::B, n, doubled(padded(lam, n))), 0, n + g);
    for (int i = 0; i < n; ++i) f = f * embed(e_poly(g, g - part(lam, i)), n, n + g);
    return f;
  });
}

WeightPoly s_one_r(LieType type, int n, int r) {
  Partition p(n, 0);
  for (int i = 0; i < r; ++i) p[i] = 1;
  return character(type, n, doubled(p));
}

nlohmann::json np(int n, int g) { return {{"n", n}, {"g", g}}; }

}  // namespace

std::vector<IdentityReport> q1_property_suite(int n, int g) {
  std::vector<IdentityReport> out;
  const auto lhs = cauchy_product(n, g);
  out.push_back(compare("cauchy-monomial", np(n, g), lhs, cauchy_monomial_side(n, g)));
  out.push_back(compare("cauchy-B", np(n, g), lhs, cauchy_b_side(n, g)));
  if (n >= 2 && g >= 2) out.push_back(compare("cauchy-D", np(n, g), lhs, cauchy_d_side(n, g)));
  if (n >= 2 && g >= 2) out.push_back(compare("cauchy-spin-D", np(n, g), lhs, cauchy_spin_side(n, g)));

  // dual Pieri rules in rank n for μ in the n × g box
  const auto box = partitions_in_box(n, g);
  for (const auto& mu : box)
    for (int r = 0; r <= n; ++r) {
      nlohmann::json p{{"n", n}, {"mu", vec_to_string(mu)}, {"r", r}};
      WeightPoly rhs_b, rhs_d;
      for (const auto& lam : partitions_in_box(n, g + 1)) {
        if (auto k = okada_kb(lam, mu, r, n)) rhs_b += character(LieType::B, n, doubled(padded(lam, n))) * k;
        if (n >= 2)
          if (auto k = okada_kd(lam, mu, r, n)) rhs_d += ps_d(n, lam) * (k * okada_m(lam, mu, n));
      }
      out.push_back(compare("dual-pieri-B", p, s_one_r(LieType::B, n, r) * character(LieType::B, n, doubled(padded(mu, n))), rhs_b));
      if (n >= 2) out.push_back(compare("dual-pieri-D", p, e_poly(n, r) * ps_d(n, mu), rhs_d));
      if (n >= 2) {
        WeightPoly rhs_s;
        for (const auto& lam : partitions_in_box(n, g + 1)) {
          const Partition lt = conjugate(trimmed(lam)), mt = conjugate(trimmed(mu));
          if (auto k = kappa_count('B', lt, mt, r, 2 * n)) rhs_s += pss_bar_d(n, lam) * k;
        }
        out.push_back(compare("dual-pieri-spin-D", p, e_poly(n, r) * pss_bar_d(n, mu), rhs_s));
      }
    }

  // Weyl factorizations of ns and nss
  if (n >= 2)
    for (const auto& lam : box) {
      nlohmann::json p{{"n", n}, {"lambda", vec_to_string(lam)}};
      WeightPoly shift = WeightPoly::constant(n), sign_prod = WeightPoly::constant(n), half_prod = WeightPoly::constant(n);
      for (int i = 0; i < n; ++i) {
        WeightPoly f, h;
        f.add_term(unit(n, i, 4), 1);
        f.add_term(unit(n, i, 0), -1);
        sign_prod = sign_prod * f;
        h.add_term(unit(n, i, 1), 1);
        h.add_term(unit(n, i, -1), -1);
        half_prod = half_prod * h;
        shift = shift * WeightPoly::monomial(unit(n, i, 2));
      }
      if (part(lam, n - 1) >= 1) {
        Partition lm = padded(lam, n);
        for (int& x : lm) --x;
        out.push_back(compare("weyl-D", p, ns_d(n, lam) * shift, sign_prod * character(LieType::C, n, doubled(lm))));
      }
      out.push_back(compare("weyl-spin-D", p, nss_d(n, lam), half_prod * character(LieType::B, n, doubled(padded(lam, n)))));
      bool divisible = true;
      try {
        pss_bar_d(n, lam);
      } catch (const std::runtime_error&) {
        divisible = false;
      }
      out.push_back(report("pss-factor", p, divisible ? "divisible" : "not divisible", "divisible", divisible));
    }

  // κ lemmas at bound g, shapes with at most n + 1 rows inside g columns
  const auto shapes = partitions_in_box(n + 1, g);
  for (const auto& lam : shapes)
    for (const auto& mu : shapes)
      for (int r = 0; r <= n + 1; ++r) {
        nlohmann::json p{{"g", g}, {"lambda", vec_to_string(lam)}, {"mu", vec_to_string(mu)}, {"r", r}};
        const auto fl = flip(trimmed(lam).empty() ? Partition{0} : trimmed(lam), g);
        const long d = kappa_count('D', lam, mu, r, 2 * g), df = kappa_count('D', fl, mu, r, 2 * g);
        const Partition lt = conjugate(trimmed(lam)), mt = conjugate(trimmed(mu));
        const long lhs = fl == trimmed(lam) ? d : d + df;  // flip(λ, g) = λ when λ_1 = g
        out.push_back(compare("rohs-okada", p, lhs, okada_m(mt, lt, g) * okada_kd(lt, mt, r, g)));
        out.push_back(compare("dohs-minus", p, d - df,
                              kappa_count('C', lam, mu, r, 2 * g - 2) - kappa_count('C', lam, mu, r - 2, 2 * g - 2)));
        const auto fs = flip_doubled(trimmed(lam).empty() ? Partition{0} : trimmed(lam), 2 * g + 1);
        const long sd = kappa_count('D', lam, mu, r, 2 * g + 1), sf = kappa_count('D', fs, mu, r, 2 * g + 1);
        const long b = kappa_count('B', lam, mu, r, 2 * g) - kappa_count('B', lam, mu, r - 1, 2 * g);
        const int parity = (size_of(lam) - size_of(mu) - r) % 2 ? -1 : 1;
        out.push_back(compare("spin-okada-sum", p, parity * (sd + sf), b));
        out.push_back(compare("spin-okada-difference", p, sd - sf, b));
        if (length_of(lam) <= g && length_of(mu) <= g) {
          std::int64_t alt = 0;
          for (int i = 0; i <= r; ++i) alt += (i % 2 ? -1 : 1) * okada_kb(conjugate(trimmed(lam)), conjugate(trimmed(mu)), r - i, g);
          out.push_back(compare("kappa-B-alternating", p, alt, parity * kappa_count('B', lam, mu, r, 2 * g)));
        }
      }
  return out;
}

}  // namespace krlab
