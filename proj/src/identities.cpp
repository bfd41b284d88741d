#include "krlab/identities.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "krlab/kr_column.hpp"
#include "krlab/kr_row.hpp"

namespace krlab {

namespace {

Partition padded(Partition p, int n) {
  p.resize(std::max<std::size_t>(p.size(), n), 0);
  p.resize(n);
  return p;
}

bool nonnegative(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

Weight sharp(const Partition& p) {
  Weight w = doubled(p);
  for (int& x : w) x += 1;
  return w;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json j{{"identity", r.identity}, {"params", r.params}, {"lhs", r.lhs},
                   {"rhs", r.rhs},           {"equal", r.equal},   {"seconds", r.seconds}};
  if (!r.witnesses.is_null()) j["witnesses"] = r.witnesses;
  return j;
}

std::string csv_header() { return "identity,params,lhs,rhs,equal"; }

std::string to_csv(const IdentityReport& r) {
  return csv_quote(r.identity) + "," + csv_quote(r.params.dump()) + "," + csv_quote(r.lhs) + "," + csv_quote(r.rhs) +
         "," + (r.equal ? "true" : "false");
}

QPoly thm_c_rhs(const Partition& lam, const Partition& mu, int n, int g, std::vector<Witness<QPoly>>* witnesses) {
  const auto shape = oc(padded(lam, n), g), weight = oc_bar(padded(mu, n), g);
  QPoly out;
  if (!is_partition(shape) || !nonnegative(weight)) return out;
  enumerate_tableaux(TabKind::SSOT, shape, weight, 2 * g, [&](const OscTableau& t) {
    const QPoly term = q_pow(static_cast<int>(energy_col(Kind::VDomino, phi_c(t))));
    out += term;
    if (witnesses) witnesses->push_back({t, term});
    return true;
  });
  return out;
}

QTPoly thm_b_rhs(const Partition& lam, const Partition& mu, int n, int g, std::vector<Witness<QTPoly>>* witnesses) {
  const auto shape = oc(padded(lam, n), g), weight = oc_bar(padded(mu, n), g);
  QTPoly out;
  if (!is_partition(shape) || !nonnegative(weight)) return out;
  enumerate_tableaux(TabKind::GSSOT, shape, weight, 2 * g + 1, [&](const OscTableau& t) {
    const QTPoly term = qt_energy(phi_c(t));
    out += term;
    if (witnesses) witnesses->push_back({t, term});
    return true;
  });
  return out;
}

Partition lambda_i(const Partition& lam_in, int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("lambda_i: i out of range");
  const Partition lam = padded(lam_in, n);
  Partition out;
  for (int j = 0; j < n; ++j) {
    if (j + 1 < i) out.push_back(lam[j] + 1);
    else if (j + 1 > i) out.push_back(lam[j]);
  }
  return out;
}

Partition mu_prime(const Partition& mu_in, int n) {
  const Partition mu = padded(mu_in, n);
  return Partition(mu.begin() + 1, mu.end());
}

int morris_length(const Partition& lam, const Partition& mu, int i) {
  return part(lam, i - 1) - part(mu, 0) + 1 - i;
}

std::vector<Strip> rohs_le(const Partition& lam, int r, int m) {
  std::vector<Strip> out;
  for (auto& s : strips_from(TabKind::SSROT, lam, r))
    if (length_of(s.lam) <= m) out.push_back(std::move(s));
  return out;
}

QPoly morris_c(const Partition& lam, const Partition& mu, int n) {
  if (n < 2) throw std::invalid_argument("morris_c needs n ≥ 2");
  const Weight mp = doubled(mu_prime(mu, n));
  std::map<Partition, QPoly> memo;
  QPoly out;
  for (int i = 1; i <= n; ++i) {
    const int k = morris_length(lam, mu, i);
    const Partition li = lambda_i(lam, i, n);
    const int sign = i % 2 ? 1 : -1;
    for (int r = k; r >= 0; r -= 2) {
      const int m = (k - r) / 2;
      for (const auto& s : rohs_le(li, r, n - 1)) {
        const Partition nu = padded(s.lam, n - 1);
        auto it = memo.find(nu);
        if (it == memo.end()) it = memo.emplace(nu, kl_poly(LieType::C, n - 1, doubled(nu), mp)).first;
        out += it->second.shifted({r + m}) * sign;
      }
    }
  }
  return out;
}

QTPoly morris_b_qt(const Partition& lam, const Partition& mu, int n) {
  if (n < 2) throw std::invalid_argument("morris_b_qt needs n ≥ 2");
  const Weight mp = sharp(mu_prime(mu, n));
  std::map<Partition, QTPoly> memo;
  QTPoly out;
  for (int i = 1; i <= n; ++i) {
    const int k = morris_length(lam, mu, i);
    const Partition li = lambda_i(lam, i, n);
    const int sign = i % 2 ? 1 : -1;
    for (int r = 0; r <= k; ++r) {
      const int m = k - r;
      for (const auto& s : rohs_le(li, r, n - 1)) {
        const Partition nu = padded(s.lam, n - 1);
        auto it = memo.find(nu);
        if (it == memo.end()) it = memo.emplace(nu, kl_qt_B(n - 1, sharp(nu), mp)).first;
        out += it->second.shifted({r, m}) * sign;
      }
    }
  }
  return out;
}

OscTableau add_rohs_phi(LieType type, const Partition& lam, const Partition& mu, int n, int g, int i, const Strip& s,
                        const OscTableau& t) {
  if (type != LieType::B && type != LieType::C) throw std::invalid_argument("add_rohs_phi: type B or C");
  const TabKind kind = type == LieType::C ? TabKind::SSOT : TabKind::GSSOT;
  const int bound = type == LieType::C ? 2 * g : 2 * g + 1;
  const Partition li = lambda_i(lam, i, n);
  const int k = morris_length(lam, mu, i);
  if (s.mu != trimmed(li)) throw std::invalid_argument("add_rohs_phi: S does not start at λ^(i)");
  const int r = strip_size(TabKind::SSROT, s);
  if (!is_strip(TabKind::SSROT, s, r) || length_of(s.lam) > n - 1)
    throw std::invalid_argument("add_rohs_phi: S is not in ROHS_{≤n-1}");
  if (r > k || (type == LieType::C && (k - r) % 2)) throw std::invalid_argument("add_rohs_phi: no m for this r");
  const int m = type == LieType::C ? (k - r) / 2 : k - r;
  const int m_row = type == LieType::C ? m : m / 2;

  const Partition nu = padded(s.lam, n - 1), zeta = padded(s.nu, n - 1);
  const auto nu_hat = oc(nu, g), li_hat = oc(li, g);
  auto mid = oc(zeta, g);
  mid.push_back(m_row);
  if (!is_partition(nu_hat) || !is_partition(li_hat) || !is_partition(mid))
    throw std::invalid_argument("add_rohs_phi: g too small");

  if (t.kind != kind || t.weight != oc_bar(mu_prime(mu, n), g) || shape_of(t) != trimmed(nu_hat) || bound2(t) > bound)
    throw std::invalid_argument("add_rohs_phi: T is not in the matching tableau set");
  validate_tableau(t);

  OscTableau out = t;
  out.strips.push_back({trimmed(nu_hat), trimmed(mid), trimmed(li_hat)});
  out.weight.push_back(k);
  if (!is_strip(kind, out.strips.back(), k)) throw std::invalid_argument("add_rohs_phi: appended strip is invalid");
  validate_tableau(out);
  return out;
}

AddRohsAudit audit_add_rohs(LieType type, const Partition& lam, const Partition& mu, int n, int g, int i) {
  const TabKind kind = type == LieType::C ? TabKind::SSOT : TabKind::GSSOT;
  const int bound = type == LieType::C ? 2 * g : 2 * g + 1;
  const Partition li = lambda_i(lam, i, n);
  const int k = morris_length(lam, mu, i);
  AddRohsAudit a;
  if (k < 0) return a;
  std::vector<int> gamma = oc_bar(mu_prime(mu, n), g);
  gamma.push_back(k);
  std::set<OscTableau> target;
  const auto li_hat = oc(li, g);
  if (is_partition(li_hat) && nonnegative(gamma))
    for (auto& t : all_tableaux(kind, li_hat, gamma, bound)) target.insert(std::move(t));
  a.targets = static_cast<long>(target.size());

  std::set<OscTableau> images;
  const auto weight = oc_bar(mu_prime(mu, n), g);
  for (int r = 0; r <= k; ++r) {
    if (type == LieType::C && (k - r) % 2) continue;
    const int m = type == LieType::C ? (k - r) / 2 : k - r;
    for (const auto& s : rohs_le(li, r, n - 1)) {
      const auto nu_hat = oc(padded(s.lam, n - 1), g);
      if (!is_partition(nu_hat) || !nonnegative(weight)) continue;
      for (const auto& t : all_tableaux(kind, nu_hat, weight, bound)) {
        ++a.pairs;
        OscTableau img;
        try {
          img = add_rohs_phi(type, lam, mu, n, g, i, s, t);
        } catch (const std::invalid_argument&) {
          ++a.misses;
          continue;
        }
        if (!target.count(img)) ++a.misses;
        images.insert(img);
        if (type == LieType::C) {
          if (energy_col(Kind::VDomino, phi_c(img)) != r + m + energy_col(Kind::VDomino, phi_c(t))) ++a.energy_faults;
        } else if (qt_energy(phi_c(img)) != qt_energy(phi_c(t)).shifted({r, m})) {
          ++a.energy_faults;
        }
      }
    }
  }
  a.distinct = static_cast<long>(images.size());
  return a;
}

InvolutionReport involution_partition(const Partition& lam_in, const Partition& mu_in, int n, int g) {
  const Partition lam = padded(lam_in, n), mu = padded(mu_in, n);
  InvolutionReport rep;
  rep.g_sets.resize(n);
  rep.g1.resize(n);
  rep.g2.resize(n);
  rep.bounded = true;
  rep.energy_preserved = true;
  auto energy = [](const OscTableau& t) { return energy_col(Kind::VDomino, phi_c(t)); };
  for (int i = 1; i <= n; ++i) {
    const int k = morris_length(lam, mu, i);
    const int shift = g - lam[i - 1] + i - 1;
    if (k < 0 || shift < 0) continue;
    std::vector<int> beta{k};
    for (int j = 1; j < n; ++j) beta.push_back(g - mu[j]);
    const auto shape = oc(lambda_i(lam, i, n), g);
    if (!is_partition(shape) || !nonnegative(beta)) continue;
    const int sign = i % 2 ? 1 : -1;
    for (const auto& t : all_tableaux(TabKind::SSOT, shape, beta, 2 * g)) {
      OscTableau a = aug(t, shift);
      if (bound2(a) > 2 * g) rep.bounded = false;
      const long e = energy(a);
      if (e != energy(t)) rep.energy_preserved = false;
      rep.telescoped += q_pow(static_cast<int>(e), sign);
      const Partition tau = padded(shape_of(a), n);
      (tau[n - i] >= g - lam[i - 1] ? rep.g1 : rep.g2)[i - 1].push_back(a);
      rep.g_sets[i - 1].push_back(std::move(a));
    }
  }
  auto as_set = [](const std::vector<OscTableau>& v) { return std::set<OscTableau>(v.begin(), v.end()); };
  rep.chaining = true;
  for (int i = 0; i < n; ++i) {
    const auto next = i + 1 < n ? as_set(rep.g1[i + 1]) : std::set<OscTableau>{};
    if (as_set(rep.g2[i]) != next) rep.chaining = false;
  }
  std::set<OscTableau> direct;
  const auto shape = oc(lam, g), weight = oc_bar(mu, g);
  if (is_partition(shape) && nonnegative(weight))
    for (auto& t : all_tableaux(TabKind::SSOT, shape, weight, 2 * g)) direct.insert(std::move(t));
  rep.matches_ssot = as_set(rep.g1[0]) == direct;
  rep.direct = thm_c_rhs(lam, mu, n, g);
  return rep;
}

Kind level_kind(LieType type) {
  switch (type) {
    case LieType::B: return Kind::Box;
    case LieType::C: return Kind::HDomino;
    case LieType::D: return Kind::VDomino;
    default: throw std::invalid_argument("level formula: type B, C or D");
  }
}

int level_zeta(LieType type) { return type == LieType::C ? 1 : 2; }

TabKind level_tab_kind(LieType type) {
  switch (level_kind(type)) {
    case Kind::Box: return TabKind::GSSOT;
    case Kind::HDomino: return TabKind::SSOT;
    case Kind::VDomino: return TabKind::SSROT;
  }
  return TabKind::SSOT;
}

namespace {

TabKind tab_kind_of(Kind kind) {
  switch (kind) {
    case Kind::Box: return TabKind::GSSOT;
    case Kind::HDomino: return TabKind::SSOT;
    case Kind::VDomino: return TabKind::SSROT;
  }
  return TabKind::SSOT;
}

}  // namespace

QPoly filtered_x(Kind kind, const Partition& lam, const std::vector<int>& mu, int eps0_bound) {
  QPoly out;
  if (!nonnegative(mu) || !is_partition(lam)) return out;
  const long base2 = 2 * weighted_norm(mu) + size_of(mu) - size_of(lam);
  enumerate_tableaux(tab_kind_of(kind), lam, mu, kNoBound, [&](const OscTableau& t) {
    const RowTensor b = phi_r(t);
    if (eps0_bound != kNoBound && eps0_tensor(kind, b) > eps0_bound) return true;
    const long e2 = base2 - kind_size(kind) * energy_row(kind, b);
    if (e2 % 2) throw std::logic_error("filtered_x: half-integral exponent");
    out += q_pow(static_cast<int>(e2 / 2));
    return true;
  });
  return out;
}

LevelTriple level_formula(LieType type, int n, const Weight& lam, const Weight& mu, int g2) {
  LevelTriple out;
  out.lhs = kl_level_restricted(type, n, lam, mu);
  auto hat = [&](const Weight& w) {
    std::vector<int> h(n);
    for (int i = 0; i < n; ++i) {
      const int v = g2 - w[n - 1 - i];
      if (v < 0 || v % 2) throw std::invalid_argument("level_formula: oc(·, g) must be a nonnegative integer vector");
      h[i] = v / 2;
    }
    return h;
  };
  const auto lam_hat = hat(lam), mu_hat = hat(mu);
  for (const auto& [nu_hat, d] : twisted_branching(type, n, lam, Weight(n, g2)))
    if (size_of(nu_hat) == size_of(mu_hat)) out.mid += kostka_foulkes(trimmed(nu_hat), trimmed(mu_hat)) * d;
  out.rhs = filtered_x(level_kind(type), lam_hat, mu_hat, level_zeta(type) * g2 / 2);
  return out;
}

std::int64_t xk_coefficient(Kind kind, const Partition& nu, const Partition& lam) {
  const int rest = size_of(nu) - size_of(lam);
  if (rest < 0) return 0;
  std::int64_t c = 0;
  for (const auto& gam : partitions_of(rest, std::max(rest, 1), rest)) {
    bool ok = true;
    if (kind == Kind::HDomino)
      for (int x : gam) ok &= x % 2 == 0;
    if (kind == Kind::VDomino)
      for (int x : conjugate(trimmed(gam))) ok &= x % 2 == 0;
    if (ok) c += lr_coefficient(trimmed(nu), trimmed(gam), trimmed(lam));
  }
  return c;
}

std::map<Partition, std::int64_t> xk_filter_table(Kind kind, const Partition& lam, const std::vector<int>& mu,
                                                  int eps0_bound) {
  const int n = static_cast<int>(mu.size()), total = size_of(mu);
  std::map<Partition, std::int64_t> out;
  // reverse lexicographic order refines dominance from the top
  for (const auto& kappa : partitions_of(total, n, total)) {
    QPoly residual = filtered_x(kind, lam, kappa, eps0_bound);
    for (const auto& [nu, d] : out) residual -= kostka_foulkes(nu, trimmed(kappa)) * d;
    std::int64_t c = 0;
    for (const auto& [e, v] : residual.terms()) {
      if (e[0] != 0) throw std::runtime_error("xk_filter_table: residual at " + vec_to_string(kappa) + " is not constant: " + to_string(residual));
      c = v;
    }
    if (c < 0) throw std::runtime_error("xk_filter_table: negative coefficient at " + vec_to_string(kappa));
    if (c) out[trimmed(kappa)] = c;
  }
  return out;
}

}  // namespace krlab
