#include "krlab/characters.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <tuple>

namespace krlab {

WeightPoly WeightPoly::constant(int n, Coeff c) { return monomial(Weight(n, 0), c); }

WeightPoly WeightPoly::monomial(const Weight& e, Coeff c) {
  WeightPoly p;
  p.add_term(e, c);
  return p;
}

WeightPoly::Coeff WeightPoly::coeff(const Weight& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void WeightPoly::add_term(const Weight& e, Coeff c) {
  if (c == 0) return;
  auto [it, ins] = terms_.emplace(e, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeightPoly& WeightPoly::operator+=(const WeightPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

WeightPoly& WeightPoly::operator-=(const WeightPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

WeightPoly operator*(const WeightPoly& a, const WeightPoly& b) {
  WeightPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Weight e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

WeightPoly operator*(WeightPoly a, WeightPoly::Coeff s) {
  if (s == 0) return {};
  for (auto& [e, c] : a.terms_) c *= s;
  return a;
}

WeightPoly WeightPoly::inverted() const {
  WeightPoly r;
  for (const auto& [e, c] : terms_) {
    Weight f = e;
    for (int& x : f) x = -x;
    r.terms_.emplace(f, c);
  }
  return r;
}

WeightPoly WeightPoly::shifted(const Weight& shift) const {
  WeightPoly r;
  for (const auto& [e, c] : terms_) {
    Weight f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
    r.terms_.emplace(f, c);
  }
  return r;
}

WeightPoly::Coeff WeightPoly::at_one() const {
  Coeff s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::int64_t kostka_number(const Partition& lam_in, const std::vector<int>& mu_in) {
  Partition lam = trimmed(lam_in);
  std::vector<int> mu;
  for (int x : mu_in)
    if (x > 0) mu.push_back(x);
  if (size_of(lam) != size_of(mu)) return 0;
  std::sort(mu.begin(), mu.end(), std::greater<int>());
  thread_local std::map<std::pair<Partition, std::vector<int>>, std::int64_t> memo;
  auto key = std::make_pair(lam, mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::int64_t total = 0;
  if (mu.empty()) {
    total = lam.empty() ? 1 : 0;
  } else {
    int last = mu.back();
    std::vector<int> rest(mu.begin(), mu.end() - 1);
    for (const auto& nu : remove_horizontal_strips(lam, last)) total += kostka_number(nu, rest);
  }
  memo.emplace(key, total);
  return total;
}

const WeightPoly& schur(const Partition& lam_in, int n) {
  Partition lam = trimmed(lam_in);
  thread_local std::map<std::pair<Partition, int>, WeightPoly> cache;
  auto key = std::make_pair(lam, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  WeightPoly s;
  if (static_cast<int>(lam.size()) <= n) {
    for (const auto& mu : partitions_of(size_of(lam), n, part(lam, 0))) {
      auto k = kostka_number(lam, mu);
      if (k == 0) continue;
      std::vector<int> perm = mu;
      std::sort(perm.begin(), perm.end());
      do {
        s.add_term(doubled(perm), k);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return cache.emplace(key, std::move(s)).first->second;
}

std::map<Partition, std::int64_t> schur_expand(const WeightPoly& f_in, int n) {
  std::map<Partition, std::int64_t> out;
  WeightPoly f = f_in;
  while (!f.is_zero()) {
    auto [e, c] = *f.terms().rbegin();
    std::vector<int> lam = halved(e);
    if (!is_partition(lam)) throw std::runtime_error("Schur expansion left a non-dominant leading term");
    out[lam] += c;
    f -= schur(lam, n) * c;
  }
  return out;
}

std::vector<std::pair<Weight, std::int64_t>> dominant_multiplicities(LieType type, int n, const Weight& lam) {
  if (!is_dominant(type, lam)) throw std::invalid_argument("character of a non-dominant weight");
  std::vector<std::pair<Weight, std::int64_t>> out;
  const int bound = lam.empty() ? 0 : std::max(std::abs(lam.front()), std::abs(lam.back()));
  const int parity = lam.empty() ? 0 : ((lam[0] % 2) + 2) % 2;
  Weight mu(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (!is_dominant(type, mu)) return;
      auto m = kl_poly(type, n, lam, mu).at_one();
      if (m != 0) out.emplace_back(mu, m);
      return;
    }
    for (int v = bound; v >= -bound; --v) {
      if (((v % 2) + 2) % 2 != parity) continue;
      mu[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

WeightPoly orbit_sum(LieType type, int n, const Weight& lam) {
  std::set<Weight> orbit;
  for (const auto& w : weyl_group(type, n)) orbit.insert(w.apply(lam));
  WeightPoly r;
  for (const auto& e : orbit) r.add_term(e, 1);
  return r;
}

const WeightPoly& character(LieType type, int n, const Weight& lam) {
  thread_local std::map<std::tuple<LieType, int, Weight>, WeightPoly> cache;
  auto key = std::make_tuple(type, n, lam);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  WeightPoly ch;
  if (type == LieType::A) {
    ch = schur(halved(lam), n);
  } else {
    for (const auto& [mu, m] : dominant_multiplicities(type, n, lam)) ch += orbit_sum(type, n, mu) * m;
  }
  return cache.emplace(key, std::move(ch)).first->second;
}

std::map<Partition, std::int64_t> twisted_branching(LieType type, int n, const Weight& lam, const Weight& g2) {
  const auto& ch = character(type, n, lam);
  WeightPoly twisted = ch.inverted().shifted(g2);
  for (const auto& [e, c] : twisted.terms())
    for (int x : e)
      if (x < 0 || x % 2 != 0) throw std::invalid_argument("g too small or of the wrong parity for twisting");
  return schur_expand(twisted, n);
}

std::int64_t twisted_branching_d(LieType type, int n, const Weight& lam, const Weight& nu, const Weight& g2) {
  auto d = twisted_branching(type, n, lam, g2);
  Partition hat(n);
  for (int i = 0; i < n; ++i) {
    int v = g2[i] - nu[n - 1 - i];
    if (v % 2 != 0) return 0;
    hat[i] = v / 2;
  }
  auto it = d.find(hat);
  return it == d.end() ? 0 : it->second;
}

WeightPoly e_poly(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("e_poly: r out of range");
  auto elementary = [n](int k, int sign) {
    WeightPoly out;
    for (int m = 0; m < (1 << n); ++m) {
      if (__builtin_popcount(m) != k) continue;
      Weight e(n, 0);
      for (int i = 0; i < n; ++i)
        if (m >> i & 1) e[i] = 2 * sign;
      out.add_term(e, 1);
    }
    return out;
  };
  WeightPoly out;
  for (int i = 0; i <= r; ++i) out += elementary(i, 1) * elementary(r - i, -1);
  return out;
}

std::int64_t lr_coefficient(const Partition& nu, const Partition& a, const Partition& b) {
  if (size_of(nu) != size_of(a) + size_of(b)) return 0;
  int n = std::max(1, length_of(nu));
  if (length_of(a) > n || length_of(b) > n) return 0;
  auto prod = schur(a, n) * schur(b, n);
  auto ex = schur_expand(prod, n);
  Partition key = trimmed(nu);
  key.resize(n, 0);
  auto it = ex.find(key);
  return it == ex.end() ? 0 : it->second;
}

std::vector<std::vector<std::vector<int>>> ssyt(const Partition& lam_in, const std::vector<int>& mu) {
  Partition lam = trimmed(lam_in);
  std::vector<std::vector<std::vector<int>>> out;
  if (size_of(lam) != size_of(mu)) return out;
  const int len = static_cast<int>(lam.size());
  std::vector<Partition> chain{Partition(len, 0)};
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == mu.size()) {
      if (trimmed(chain.back()) != lam) return;
      std::vector<std::vector<int>> t(len);
      for (std::size_t j = 1; j < chain.size(); ++j)
        for (int i = 0; i < len; ++i)
          for (int c = chain[j - 1][i]; c < chain[j][i]; ++c) t[i].push_back(static_cast<int>(j));
      out.push_back(t);
      return;
    }
    for (auto nu : add_horizontal_strips(chain.back(), mu[k], len, part(lam, 0))) {
      if (!contains(lam, nu)) continue;
      chain.push_back(nu);
      rec(k + 1);
      chain.pop_back();
    }
  };
  rec(0);
  return out;
}

int charge(const std::vector<int>& word_in) {
  std::vector<int> word = word_in;
  int total = 0;
  while (!word.empty()) {
    int top = *std::max_element(word.begin(), word.end());
    const int m = static_cast<int>(word.size());
    std::vector<int> picked;  // positions of 1, 2, ..., top
    int pos = m;
    for (int letter = 1; letter <= top; ++letter) {
      int found = -1;
      for (int step = 1; step <= m; ++step) {
        int p = ((pos - step) % m + m) % m;
        if (word[p] == letter) {
          found = p;
          break;
        }
      }
      if (found < 0) throw std::invalid_argument("charge needs partition content");
      picked.push_back(found);
      pos = found;
    }
    int idx = 0;
    for (int letter = 2; letter <= top; ++letter) {
      if (picked[letter - 1] > picked[letter - 2]) ++idx;
      total += idx;
    }
    std::vector<int> rest;
    std::set<int> drop(picked.begin(), picked.end());
    for (int p = 0; p < m; ++p)
      if (!drop.count(p)) rest.push_back(word[p]);
    word = rest;
  }
  return total;
}

QPoly kostka_foulkes(const Partition& lam, const Partition& mu) {
  if (size_of(lam) != size_of(mu)) throw std::invalid_argument("Kostka-Foulkes: size mismatch");
  if (!is_partition(mu)) throw std::invalid_argument("Kostka-Foulkes: weight must be a partition");
  thread_local std::map<std::pair<Partition, Partition>, QPoly> cache;
  auto key = std::make_pair(trimmed(lam), trimmed(mu));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  QPoly out;
  for (const auto& t : ssyt(lam, trimmed(mu))) {
    std::vector<int> word;
    for (auto r = t.rbegin(); r != t.rend(); ++r) word.insert(word.end(), r->begin(), r->end());
    out.add_term({charge(word)}, 1);
  }
  cache.emplace(key, out);
  return out;
}

}  // namespace krlab
