#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace krlab {

/// Sparse Laurent polynomial in K variables with exact integer coefficients.
/// Zero coefficients are never stored.
template <int K>
class Poly {
 public:
  using Exp = std::array<int, K>;
  using Coeff = std::int64_t;

  Poly() = default;
  explicit Poly(Coeff c) {
    if (c != 0) terms_[Exp{}] = c;
  }

  static Poly monomial(const Exp& e, Coeff c = 1) {
    Poly p;
    if (c != 0) p.terms_[e] = c;
    return p;
  }

  const std::map<Exp, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const Exp& e, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(Coeff s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, Coeff s) { return a *= s; }
  friend Poly operator-(Poly a) { return a *= -1; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exp e;
        for (int i = 0; i < K; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  /// Multiply by the monomial with exponent `shift`.
  Poly shifted(const Exp& shift) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
      Exp f;
      for (int i = 0; i < K; ++i) f[i] = e[i] + shift[i];
      r.terms_.emplace(f, c);
    }
    return r;
  }

  Coeff at_one() const {
    Coeff s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  bool nonnegative() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  std::map<Exp, Coeff> terms_;
};

using QPoly = Poly<1>;
using QTPoly = Poly<2>;

inline QPoly q_pow(int e, std::int64_t c = 1) { return QPoly::monomial({e}, c); }
inline QTPoly qt_pow(int a, int b, std::int64_t c = 1) { return QTPoly::monomial({a, b}, c); }

/// Substitute t := q.
inline QPoly collapse_t(const QTPoly& p) {
  QPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term({e[0] + e[1]}, c);
  return r;
}

inline QPoly eval_t_one(const QTPoly& p) {
  QPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term({e[0]}, c);
  return r;
}

/// Render with terms in descending total degree, ties broken by
/// descending exponent of the earlier variable: `q^3t^3+q^3t+q^2t+qt`.
template <int K>
std::string to_string(const Poly<K>& p, const std::array<const char*, K>& names) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<typename Poly<K>::Exp, typename Poly<K>::Coeff>> ts(p.terms().begin(),
                                                                            p.terms().end());
  auto total = [](const typename Poly<K>::Exp& e) {
    long s = 0;
    for (int x : e) s += x;
    return s;
  };
  std::stable_sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
    long ta = total(a.first), tb = total(b.first);
    if (ta != tb) return ta > tb;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ts) {
    bool constant = true;
    for (int x : e)
      if (x != 0) constant = false;
    std::int64_t mag = c < 0 ? -c : c;
    if (c < 0)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    if (constant || mag != 1) out += std::to_string(mag);
    for (int i = 0; i < K; ++i) {
      if (e[i] == 0) continue;
      out += names[i];
      if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

inline std::string to_string(const QPoly& p) { return to_string<1>(p, {"q"}); }
inline std::string to_string(const QTPoly& p) { return to_string<2>(p, {"q", "t"}); }

/// Parse the output format of `to_string` back into a polynomial.
template <int K>
Poly<K> parse_poly(const std::string& s, const std::array<char, K>& names) {
  Poly<K> p;
  std::size_t i = 0;
  auto read_int = [&](std::size_t& j) {
    bool neg = false;
    if (j < s.size() && s[j] == '-') {
      neg = true;
      ++j;
    }
    std::size_t st = j;
    long v = 0;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) v = v * 10 + (s[j++] - '0');
    if (st == j) throw std::invalid_argument("bad polynomial: " + s);
    return neg ? -v : v;
  };
  if (s == "0") return p;
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+') ++i;
    else if (s[i] == '-') {
      sign = -1;
      ++i;
    }
    std::int64_t coef = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) coef = read_int(i);
    typename Poly<K>::Exp e{};
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      int var = -1;
      for (int k = 0; k < K; ++k)
        if (s[i] == names[k]) var = k;
      if (var < 0) throw std::invalid_argument("bad polynomial: " + s);
      ++i;
      int ex = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        ex = static_cast<int>(read_int(i));
      }
      e[var] += ex;
    }
    p.add_term(e, sign * coef);
  }
  return p;
}

}  // namespace krlab
