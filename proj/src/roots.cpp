#include "krlab/roots.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace krlab {

LieType parse_lie_type(const std::string& s) {
  if (s == "A") return LieType::A;
  if (s == "B") return LieType::B;
  if (s == "C") return LieType::C;
  if (s == "D") return LieType::D;
  throw std::invalid_argument("unsupported Lie type: " + s);
}

char lie_type_char(LieType t) {
  switch (t) {
    case LieType::A: return 'A';
    case LieType::B: return 'B';
    case LieType::C: return 'C';
    case LieType::D: return 'D';
  }
  return '?';
}

Weight doubled(const std::vector<int>& v) {
  Weight w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = 2 * v[i];
  return w;
}

std::vector<int> halved(const Weight& w) {
  std::vector<int> v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] % 2 != 0) throw std::invalid_argument("half-integral coordinate");
    v[i] = w[i] / 2;
  }
  return v;
}

Weight parse_weight(const std::string& s) {
  Weight w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty weight entry in '" + s + "'");
    auto slash = tok.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("bad weight entry: " + tok);
      w.push_back(2 * v);
    } else {
      int num = std::stoi(tok.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument("bad weight entry: " + tok);
      std::string den = tok.substr(slash + 1);
      if (den != "2") throw std::invalid_argument("only halves are supported: " + tok);
      w.push_back(num);
    }
  }
  return w;
}

std::string weight_to_string(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    if (w[i] % 2 == 0)
      s += std::to_string(w[i] / 2);
    else
      s += std::to_string(w[i]) + "/2";
  }
  return s;
}

bool is_spin(const Weight& w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](int x) { return x % 2 != 0; });
}

namespace {

Weight unit(int n, int i, int c) {
  Weight w(n, 0);
  w[i] = c;
  return w;
}

RootSystem build_root_system(LieType type, int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  RootSystem rs{type, n, {}, Weight(n, 0)};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Weight v(n, 0);
      v[i] = 2;
      v[j] = -2;
      rs.positive.push_back({v, Root::Kind::Minus, i, j});
    }
  if (type != LieType::A) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Weight v(n, 0);
        v[i] = 2;
        v[j] = 2;
        rs.positive.push_back({v, Root::Kind::Plus, i, j});
      }
  }
  if (type == LieType::B)
    for (int i = 0; i < n; ++i) rs.positive.push_back({unit(n, i, 2), Root::Kind::Short, i, -1});
  if (type == LieType::C)
    for (int i = 0; i < n; ++i) rs.positive.push_back({unit(n, i, 4), Root::Kind::Long2, i, -1});
  for (const auto& r : rs.positive)
    for (int i = 0; i < n; ++i) rs.rho[i] += r.v[i];
  for (int i = 0; i < n; ++i) rs.rho[i] /= 2;
  return rs;
}

}  // namespace

const RootSystem& root_system(LieType type, int n) {
  thread_local std::map<std::pair<LieType, int>, std::unique_ptr<RootSystem>> cache;
  auto& slot = cache[{type, n}];
  if (!slot) slot = std::make_unique<RootSystem>(build_root_system(type, n));
  return *slot;
}

std::vector<Weight> positive_roots(LieType type, int n) {
  std::vector<Weight> out;
  for (const auto& r : root_system(type, n).positive) out.push_back(r.v);
  return out;
}

std::optional<std::vector<int>> simple_coords(const RootSystem& rs, const Weight& beta) {
  const int n = rs.n;
  std::vector<int> S(n);
  int acc = 0;
  for (int i = 0; i < n; ++i) {
    acc += beta[i];
    S[i] = acc;  // doubled partial sums
  }
  std::vector<int> c(n);
  auto half = [](int x, int d) -> std::optional<int> {
    if (x % d != 0) return std::nullopt;
    return x / d;
  };
  for (int i = 0; i < n - 1; ++i) {
    auto v = half(S[i], 2);
    if (!v) return std::nullopt;
    c[i] = *v;
  }
  switch (rs.type) {
    case LieType::A: {
      if (S[n - 1] != 0) return std::nullopt;
      c.pop_back();
      break;
    }
    case LieType::B: {
      auto v = half(S[n - 1], 2);
      if (!v) return std::nullopt;
      c[n - 1] = *v;
      break;
    }
    case LieType::C: {
      auto v = half(S[n - 1], 4);
      if (!v) return std::nullopt;
      c[n - 1] = *v;
      break;
    }
    case LieType::D: {
      if (n == 1) {
        if (beta[0] != 0) return std::nullopt;
        c.clear();
        break;
      }
      auto vn = half(S[n - 1], 4);
      auto vm = half(S[n - 2] - beta[n - 1], 4);
      if (!vn || !vm) return std::nullopt;
      c[n - 2] = *vm;
      c[n - 1] = *vn;
      break;
    }
  }
  return c;
}

Weight SignedPermutation::apply(const Weight& x) const {
  Weight y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[perm[i]] = sign[i] * x[i];
  return y;
}

int SignedPermutation::det() const {
  int d = 1;
  for (int s : sign) d *= s;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) d = -d;
  return d;
}

const std::vector<SignedPermutation>& weyl_group(LieType type, int n) {
  thread_local std::map<std::pair<LieType, int>, std::vector<SignedPermutation>> cache;
  auto it = cache.find({type, n});
  if (it != cache.end()) return it->second;
  std::vector<SignedPermutation> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool signed_group = type != LieType::A;
    int masks = signed_group ? (1 << n) : 1;
    for (int m = 0; m < masks; ++m) {
      std::vector<int> s(n, 1);
      int neg = 0;
      for (int i = 0; i < n; ++i)
        if (m >> i & 1) {
          s[i] = -1;
          ++neg;
        }
      if (type == LieType::D && neg % 2 != 0) continue;
      out.push_back({p, s});
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return cache.emplace(std::make_pair(type, n), std::move(out)).first->second;
}

bool is_dominant(LieType type, const Weight& w) {
  const int n = static_cast<int>(w.size());
  if (n == 0) return true;
  for (int i = 0; i + 2 < n; ++i)
    if (w[i] < w[i + 1]) return false;
  if (n >= 2) {
    int bound = type == LieType::D ? std::abs(w[n - 1]) : w[n - 1];
    if (w[n - 2] < bound) return false;
  }
  return (type == LieType::B || type == LieType::C) ? w[n - 1] >= 0 : true;
}

namespace {

/// Memoized [e^β] Π_α 1/(1 - x^{L(α)} e^α), with the recursion peeling one
/// root at a time in simple-root coordinates.
template <int K>
class KostantTable {
 public:
  KostantTable(const RootSystem& rs, std::vector<std::array<int, K>> lexp) : rs_(rs), lexp_(std::move(lexp)) {
    for (const auto& r : rs.positive) coords_.push_back(*simple_coords(rs, r.v));
  }

  Poly<K> operator()(const Weight& beta) {
    auto c = simple_coords(rs_, beta);
    if (!c) return {};
    for (int x : *c)
      if (x < 0) return {};
    return rec(static_cast<int>(coords_.size()) - 1, *c);
  }

 private:
  Poly<K> rec(int k, const std::vector<int>& c) {
    if (k < 0) {
      for (int x : c)
        if (x != 0) return {};
      return Poly<K>(1);
    }
    auto key = std::make_pair(k, c);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Poly<K> total;
    std::vector<int> cur = c;
    std::array<int, K> shift{};
    for (int m = 0;; ++m) {
      total += rec(k - 1, cur).shifted(shift);
      bool ok = true;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        cur[i] -= coords_[k][i];
        if (cur[i] < 0) ok = false;
      }
      if (!ok) break;
      for (int t = 0; t < K; ++t) shift[t] += lexp_[k][t];
    }
    memo_.emplace(key, total);
    return total;
  }

  const RootSystem& rs_;
  std::vector<std::array<int, K>> lexp_;
  std::vector<std::vector<int>> coords_;
  std::map<std::pair<int, std::vector<int>>, Poly<K>> memo_;
};

KostantTable<1>& table_q(const RootSystem& rs, LMap L) {
  thread_local std::map<std::tuple<LieType, int, LMap>, std::unique_ptr<KostantTable<1>>> cache;
  auto& slot = cache[{rs.type, rs.n, L}];
  if (!slot) {
    std::vector<std::array<int, 1>> lexp;
    for (const auto& r : rs.positive)
      lexp.push_back({L == LMap::One ? 1 : (r.kind == Root::Kind::Minus ? 1 : 0)});
    slot = std::make_unique<KostantTable<1>>(rs, lexp);
  }
  return *slot;
}

KostantTable<2>& table_qt(const RootSystem& rs) {
  thread_local std::map<int, std::unique_ptr<KostantTable<2>>> cache;
  auto& slot = cache[rs.n];
  if (!slot) {
    std::vector<std::array<int, 2>> lexp;
    for (const auto& r : rs.positive)
      lexp.push_back(r.kind == Root::Kind::Short ? std::array<int, 2>{0, 1} : std::array<int, 2>{1, 0});
    slot = std::make_unique<KostantTable<2>>(rs, lexp);
  }
  return *slot;
}

void check_inputs(LieType type, int n, const Weight& lam, const Weight& mu) {
  if (static_cast<int>(lam.size()) != n || static_cast<int>(mu.size()) != n)
    throw std::invalid_argument("weight length differs from rank");
  bool sl = is_spin(lam), sm = is_spin(mu);
  auto mixed = [](const Weight& w) {
    bool odd = false, even = false;
    for (int x : w) (x % 2 ? odd : even) = true;
    return odd && even;
  };
  if (mixed(lam) || mixed(mu)) throw std::invalid_argument("weight mixes integral and half-integral entries");
  if (sl != sm) throw std::invalid_argument("mixed spin parity");
  if (sl && (type == LieType::A || type == LieType::C))
    throw std::invalid_argument("spin weights need type B or D");
}

Weight add(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
Weight sub(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class Table, class P>
P alternating_sum(const RootSystem& rs, const std::vector<SignedPermutation>& group, Table& table,
                  const Weight& lam, const Weight& mu) {
  P total;
  Weight lr = add(lam, rs.rho), mr = add(mu, rs.rho);
  for (const auto& w : group) {
    P term = table(sub(w.apply(lr), mr));
    if (term.is_zero()) continue;
    total += term * w.det();
  }
  return total;
}

}  // namespace

QPoly q_kostant(const RootSystem& rs, const Weight& beta, LMap L) { return table_q(rs, L)(beta); }

QTPoly q_kostant_qt(const RootSystem& rs, const Weight& beta) {
  if (rs.type != LieType::B) throw std::invalid_argument("q,t Kostant function is defined for type B");
  return table_qt(rs)(beta);
}

QPoly kl_poly(LieType type, int n, const Weight& lam, const Weight& mu, LMap L) {
  check_inputs(type, n, lam, mu);
  const auto& rs = root_system(type, n);
  return alternating_sum<KostantTable<1>, QPoly>(rs, weyl_group(type, n), table_q(rs, L), lam, mu);
}

QTPoly kl_qt_B(int n, const Weight& lam, const Weight& mu) {
  check_inputs(LieType::B, n, lam, mu);
  const auto& rs = root_system(LieType::B, n);
  return alternating_sum<KostantTable<2>, QTPoly>(rs, weyl_group(LieType::B, n), table_qt(rs), lam, mu);
}

QPoly kl_level_restricted(LieType type, int n, const Weight& lam, const Weight& mu) {
  return kl_poly(type, n, lam, mu, LMap::LevelA);
}

QPoly stable_kl(LieType type, int n, const Weight& lam, const Weight& mu, LMap L) {
  check_inputs(type, n, lam, mu);
  const auto& rs = root_system(type, n);
  return alternating_sum<KostantTable<1>, QPoly>(rs, weyl_group(LieType::A, n), table_q(rs, L), lam, mu);
}

}  // namespace krlab
