#include "krlab/crystal.hpp"

#include <algorithm>
#include <stdexcept>

namespace krlab {

std::optional<Letter> LetterCrystal::f(int i, Letter x) const {
  if (i < 1 || x == kEmpty) return std::nullopt;
  if (N == 0 || i < N) {
    if (x == i) return i + 1;
    if (x == -(i + 1)) return -i;
    return std::nullopt;
  }
  if (i > N) return std::nullopt;
  if (type == Type::C) {
    if (x == N) return -N;
    return std::nullopt;
  }
  if (x == N) return 0;
  if (x == 0) return -N;
  return std::nullopt;
}

std::optional<Letter> LetterCrystal::e(int i, Letter x) const {
  if (i < 1 || x == kEmpty) return std::nullopt;
  if (N == 0 || i < N) {
    if (x == i + 1) return i;
    if (x == -i) return -(i + 1);
    return std::nullopt;
  }
  if (i > N) return std::nullopt;
  if (type == Type::C) {
    if (x == -N) return N;
    return std::nullopt;
  }
  if (x == -N) return 0;
  if (x == 0) return N;
  return std::nullopt;
}

int LetterCrystal::eps(int i, Letter x) const {
  int k = 0;
  for (auto y = e(i, x); y; y = e(i, *y)) ++k;
  return k;
}

int LetterCrystal::phi(int i, Letter x) const {
  int k = 0;
  for (auto y = f(i, x); y; y = f(i, *y)) ++k;
  return k;
}

namespace {

struct Signature {
  std::vector<std::size_t> minus;  // unmatched -, reading order
  std::vector<std::size_t> plus;   // unmatched +, reading order
};

// Reads factors right to left; each contributes -^ε +^φ; "+ then -" pairs cancel.
Signature signature(const LetterCrystal& c, int i, const LetterTensor& b) {
  Signature s;
  for (std::size_t k = b.size(); k-- > 0;) {
    int ep = c.eps(i, b[k]);
    int ph = c.phi(i, b[k]);
    for (int t = 0; t < ep; ++t) {
      if (!s.plus.empty())
        s.plus.pop_back();
      else
        s.minus.push_back(k);
    }
    for (int t = 0; t < ph; ++t) s.plus.push_back(k);
  }
  return s;
}

}  // namespace

int tensor_eps(const LetterCrystal& c, int i, const LetterTensor& b) {
  return static_cast<int>(signature(c, i, b).minus.size());
}

int tensor_phi(const LetterCrystal& c, int i, const LetterTensor& b) {
  return static_cast<int>(signature(c, i, b).plus.size());
}

std::optional<LetterTensor> tensor_e(const LetterCrystal& c, int i, const LetterTensor& b) {
  auto s = signature(c, i, b);
  if (s.minus.empty()) return std::nullopt;
  std::size_t k = s.minus.back();
  LetterTensor out = b;
  out[k] = *c.e(i, b[k]);
  return out;
}

std::optional<LetterTensor> tensor_f(const LetterCrystal& c, int i, const LetterTensor& b) {
  auto s = signature(c, i, b);
  if (s.plus.empty()) return std::nullopt;
  std::size_t k = s.plus.front();
  LetterTensor out = b;
  out[k] = *c.f(i, b[k]);
  return out;
}

std::vector<int> tensor_weight(const LetterTensor& b, int n) {
  std::vector<int> w(n, 0);
  for (Letter x : b) {
    if (x == kEmpty || x == 0) continue;
    int m = magnitude(x);
    if (m <= n) w[m - 1] += x > 0 ? 1 : -1;
  }
  return w;
}

int max_index(const LetterTensor& b) {
  int m = 0;
  for (Letter x : b)
    if (x != kEmpty) m = std::max(m, magnitude(x));
  return m;
}

int index_bound(const LetterCrystal& c, const LetterTensor& b) { return c.N > 0 ? c.N : max_index(b); }

bool is_highest_weight(const LetterCrystal& c, const LetterTensor& b) {
  const int top = index_bound(c, b);
  for (int i = 1; i <= top; ++i)
    if (tensor_eps(c, i, b) > 0) return false;
  return true;
}

LetterTensor highest_weight(const LetterCrystal& c, const LetterTensor& b_in, std::vector<int>* path) {
  if (c.N <= 0) throw std::invalid_argument("highest_weight needs a finite rank N");
  LetterTensor b = b_in;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= c.N; ++i) {
      if (auto up = tensor_e(c, i, b)) {
        b = *up;
        if (path) path->push_back(i);
        moved = true;
        break;
      }
    }
  }
  return b;
}

LetterTensor lower_along(const LetterCrystal& c, LetterTensor b, const std::vector<int>& path) {
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto down = tensor_f(c, *it, b);
    if (!down) throw std::logic_error("lower_along: f annihilated an element on a recorded path");
    b = *down;
  }
  return b;
}

LetterTensor flatten(const std::vector<Word>& factors, Reading r) {
  LetterTensor out;
  for (const auto& w : factors) {
    Word s = sorted_word(w);
    if (r == Reading::Column) std::reverse(s.begin(), s.end());
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

std::vector<Word> regroup(const LetterTensor& b, const std::vector<int>& lengths, Reading) {
  std::vector<Word> out;
  std::size_t pos = 0;
  for (int len : lengths) {
    Word w(b.begin() + pos, b.begin() + pos + len);
    out.push_back(sorted_word(w));
    pos += len;
  }
  return out;
}

namespace {

std::vector<int> lengths_of(const std::vector<Word>& t) {
  std::vector<int> l;
  for (const auto& w : t) l.push_back(static_cast<int>(w.size()));
  return l;
}

}  // namespace

std::optional<std::vector<Word>> words_e(const LetterCrystal& c, int i, const std::vector<Word>& t, Reading r) {
  auto b = tensor_e(c, i, flatten(t, r));
  if (!b) return std::nullopt;
  return regroup(*b, lengths_of(t), r);
}

std::optional<std::vector<Word>> words_f(const LetterCrystal& c, int i, const std::vector<Word>& t, Reading r) {
  auto b = tensor_f(c, i, flatten(t, r));
  if (!b) return std::nullopt;
  return regroup(*b, lengths_of(t), r);
}

std::vector<Word> words_hw(const LetterCrystal& c, const std::vector<Word>& t, Reading r) {
  return regroup(highest_weight(c, flatten(t, r)), lengths_of(t), r);
}

bool words_is_hw(const LetterCrystal& c, const std::vector<Word>& t, Reading r) {
  return is_highest_weight(c, flatten(t, r));
}

}  // namespace krlab
