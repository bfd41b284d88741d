#include "krlab/kr_column.hpp"

#include <algorithm>
#include <stdexcept>

#include "krlab/crystal.hpp"

namespace krlab {

namespace {

bool contains(const Word& w, Letter x) { return std::find(w.begin(), w.end(), x) != w.end(); }

Word without(Word w, std::initializer_list<Letter> xs) {
  for (Letter x : xs) {
    auto it = std::find(w.begin(), w.end(), x);
    if (it == w.end()) throw std::logic_error("R-matrix: removing a letter that is absent");
    w.erase(it);
  }
  return w;
}

Word with(Word w, std::initializer_list<Letter> xs) {
  for (Letter x : xs) {
    if (contains(w, x)) throw std::logic_error("R-matrix: inserting a letter that is present");
    w.push_back(x);
  }
  return sorted_word(std::move(w));
}

Letter max_letter(const Word& w) {
  return *std::max_element(w.begin(), w.end(), [](Letter a, Letter b) { return prec(a, b); });
}

RMatrixResult case1(Kind kind, int a, const Word& u, Letter c) {
  Word v = u;
  if (c != kEmpty) v.insert(v.begin(), c);
  Word w = red(v);
  if (kind == Kind::Box) {
    // u' = ∅ with u ≠ ∅ takes 1-2; otherwise 12⊗∅ and 2⊗1 collide
    const bool shrink = c == kEmpty && !u.empty();
    if (!shrink && w == v && static_cast<int>(w.size()) < a + 1) return {kEmpty, w, "1-1"};
    Letter d = max_letter(v);
    return {d, without(v, {d}), "1-2"};
  }
  if (w.empty()) return {-1, {1}, "1-1"};
  if (w != v) {
    Letter d = max_letter(w);
    return {d, without(w, {d}), "1-2"};
  }
  if (static_cast<int>(w.size()) == a + 1) {
    Letter d = max_letter(w);
    return {d, without(w, {d}), "1-3"};
  }
  const int top = std::max(max_index(w), 0) + a + 2;
  for (int i = 1; i <= top; ++i) {
    if (contains(w, i) || contains(w, -i)) continue;
    Word x = with(w, {i, -i});
    Letter d = max_letter(x);
    Word s = without(x, {d});
    if (is_admissible(s)) return {d, s, "1-4"};
  }
  throw std::logic_error("R-matrix rule 1-4 found no insertion index");
}

// Largest p ≺ bound (or ⪯ when inclusive) with \bar{p} ∉ u.
Letter max_free_below(const Word& u, Letter bound, bool inclusive) {
  for (int p = bound; p >= 1; --p) {
    if (!inclusive && p == bound) continue;
    if (!contains(u, -p)) return p;
  }
  throw std::logic_error("R-matrix: no free letter below " + letter_to_string(bound));
}

}  // namespace

void validate_column(Kind kind, const Column& c) {
  if (kind == Kind::HDomino) throw std::invalid_argument("column crystals are defined for box and vdomino kinds");
  if (c.cap < 0) throw std::invalid_argument("negative column capacity");
  const int len = static_cast<int>(c.word.size());
  if (len > c.cap) throw std::invalid_argument("column word longer than its capacity");
  if (kind == Kind::VDomino && (c.cap - len) % 2 != 0)
    throw std::invalid_argument("vdomino column needs capacity - length even: " + word_to_string(c.word));
  for (std::size_t k = 0; k < c.word.size(); ++k) {
    if (c.word[k] == 0 || c.word[k] == kEmpty) throw std::invalid_argument("column words use nonzero letters");
    if (k > 0 && !prec(c.word[k - 1], c.word[k])) throw std::invalid_argument("column word not strictly increasing");
  }
  if (!is_admissible(c.word)) throw std::invalid_argument("column word not admissible: " + word_to_string(c.word));
}

RMatrixResult r_matrix_col(Kind kind, int a, const Word& u_in, Letter c) {
  validate_column(kind, {a, u_in});
  const Word u = sorted_word(u_in);
  if (kind == Kind::VDomino && (c == kEmpty || c == 0)) throw std::invalid_argument("vdomino B^{1,1} has no ∅");
  if (c == kEmpty || u.empty() || prec(c, u.front())) return case1(kind, a, u, c);

  if (c > 0) {
    Letter ui = kEmpty;
    for (Letter x : u)
      if (!prec(c, x)) ui = x;
    if (!contains(u, -ui)) return {ui, with(without(u, {ui}), {c}), "2-1"};
    Letter p = max_free_below(u, ui, false);
    return {p, with(without(u, {ui, -ui}), {c, -p}), "2-2"};
  }

  const int cc = -c;
  if (!contains(u, cc)) {
    Letter ui = kEmpty;
    for (Letter x : u)
      if (!prec(c, x)) ui = x;
    if (ui > 0 && ui < cc && contains(u, -ui)) {
      Letter p = max_free_below(u, ui, true);
      return {p, with(without(u, {ui, -ui}), {c, -p}), "3-1"};
    }
    return {ui, with(without(u, {ui}), {c}), "3-2"};
  }

  Word interval, shifted;
  for (Letter x : u) {
    if (prec(x, cc) || prec(c, x)) continue;
    interval.push_back(x);
    shifted.push_back(x > 0 ? x - cc + 1 : -(-x - cc + 1));
  }
  Word reduced = red(sorted_word(shifted));
  if (reduced.empty()) {
    Letter p = max_free_below(u, cc, true);
    return {p, with(without(u, {cc}), {-p}), "4-1"};
  }
  Letter d = max_letter(reduced);
  Letter dd = d > 0 ? d + cc - 1 : -(-d + cc - 1);
  if (dd == cc) return {cc, with(without(u, {cc}), {c}), "4-2"};
  Word rest = without(interval, {dd});
  for (int p = cc + 1;; ++p) {
    if (contains(rest, p) || contains(rest, -p)) continue;
    return {dd, with(without(u, {cc, dd}), {p, -p}), "4-2"};
  }
}

std::pair<Word, Letter> r_matrix_col_inverse(Kind kind, int a, Letter c, const Word& u_in) {
  validate_column(kind, {a, u_in});
  const Word u = sorted_word(u_in);
  LetterTensor flat{c};
  flat.insert(flat.end(), u.rbegin(), u.rend());
  const int N = max_index(flat) + a + 3;
  LetterCrystal lc{LetterCrystal::Type::B, N};
  std::vector<int> path;
  LetterTensor top = highest_weight(lc, flat, &path);
  const Letter top_c = top[0];
  const Word top_u = sorted_word(Word(top.begin() + 1, top.end()));
  auto wt = tensor_weight(top, N);

  const std::vector<Letter> rights = kind == Kind::Box ? std::vector<Letter>{kEmpty, 1} : std::vector<Letter>{1};
  for (Letter c0 : rights) {
    auto w = wt;
    if (c0 == 1) w[0] -= 1;
    Word base;
    std::vector<int> free;
    bool ok = true;
    for (int i = 1; i <= N; ++i) {
      if (w[i - 1] == 1) base.push_back(i);
      else if (w[i - 1] == -1) base.push_back(-i);
      else if (w[i - 1] == 0) free.push_back(i);
      else ok = false;
    }
    if (!ok) continue;
    const int extra = std::min<int>(static_cast<int>(free.size()), 16);
    for (int mask = 0; mask < (1 << extra); ++mask) {
      Word cand = base;
      for (int k = 0; k < extra; ++k)
        if (mask >> k & 1) {
          cand.push_back(free[k]);
          cand.push_back(-free[k]);
        }
      cand = sorted_word(cand);
      const int len = static_cast<int>(cand.size());
      if (len > a || (kind == Kind::VDomino && (a - len) % 2) || !is_admissible(cand)) continue;
      auto img = r_matrix_col(kind, a, cand, c0);
      if (img.left != top_c || img.right != top_u) continue;
      LetterTensor pre(cand.rbegin(), cand.rend());
      pre.push_back(c0);
      LetterTensor low = lower_along(lc, pre, path);
      Word back = sorted_word(Word(low.begin(), low.end() - 1));
      return {back, low.back()};
    }
  }
  throw std::logic_error("R-matrix inverse: no highest weight preimage");
}

namespace {

void append_hat(Kind kind, const Column& col, Chain& out) {
  for (auto it = col.word.rbegin(); it != col.word.rend(); ++it) out.push_back(*it);
  const int gap = col.cap - static_cast<int>(col.word.size());
  if (kind == Kind::Box) {
    for (int k = 0; k < gap; ++k) out.push_back(kEmpty);
  } else {
    for (int k = 0; k < gap / 2; ++k) {
      out.push_back(-1);
      out.push_back(1);
    }
  }
}

}  // namespace

Chain split_col(Kind kind, const ColumnTensor& b) {
  std::vector<Column> items;
  for (const auto& col : b) {
    validate_column(kind, col);
    if (col.cap > 0) items.push_back({col.cap, sorted_word(col.word)});
  }
  for (;;) {
    std::size_t idx = items.size();
    for (std::size_t k = items.size(); k-- > 0;)
      if (items[k].cap >= 2) {
        idx = k;
        break;
      }
    if (idx == items.size()) break;
    // everything right of items[idx] is already a single letter
    for (std::size_t j = idx; j + 1 < items.size(); ++j) {
      const Column big = items[j];
      const Column& small = items[j + 1];
      Letter x = small.word.empty() ? kEmpty : small.word[0];
      auto r = r_matrix_col(kind, big.cap, big.word, x);
      items[j] = r.left == kEmpty ? Column{1, {}} : Column{1, {r.left}};
      items[j + 1] = Column{big.cap, r.right};
    }
    Chain hat;
    append_hat(kind, items.back(), hat);
    items.pop_back();
    for (Letter x : hat) items.push_back(x == kEmpty ? Column{1, {}} : Column{1, {x}});
  }
  Chain out;
  for (const auto& col : items) out.push_back(col.word.empty() ? kEmpty : col.word[0]);
  return out;
}

SplitStats split_stats(int a, const Word& u_in, int n) {
  const Word u = sorted_word(u_in);
  SplitStats s;
  s.n = n;
  Word unb, barred;
  for (Letter x : u) (x > 0 ? unb : barred).push_back(x);
  std::size_t pos = 0;
  while (pos < unb.size() && unb[pos] == static_cast<int>(pos) + 1 && unb[pos] <= n) ++pos;
  s.k = static_cast<int>(pos);
  s.p = n;
  for (; pos < unb.size(); ++pos) {
    if (unb[pos] != s.p + 1) throw std::invalid_argument("not of the form [1..k | n+1..p | ...]: " + word_to_string(u));
    s.p = unb[pos];
  }
  s.q = s.p + 1;
  for (Letter x : barred) {
    if (-x != s.q - 1) throw std::invalid_argument("barred part is not \\bar{p}..\\bar{q}: " + word_to_string(u));
    --s.q;
  }
  auto build = [&](int kk) {
    Word w;
    for (int i = 1; i <= kk; ++i) w.push_back(i);
    for (int i = n + 1; i <= s.p; ++i) w.push_back(i);
    for (int i = s.p; i >= s.q; --i) w.push_back(-i);
    return w;
  };
  for (int t = n - s.k; t >= 0; --t)
    if (is_admissible(build(s.k + t))) {
      s.tol = t;
      break;
    }
  const int len = s.k + (s.p - n) + (s.p + 1 - s.q);
  s.midd = std::min(s.tol, a - len);
  return s;
}

Chain split_image_hw(Kind kind, int a, const Word& u, int b, int n) {
  SplitStats s = split_stats(a, u, n);
  Chain out;
  for (int i = s.k; i >= 1; --i) out.push_back(i);
  auto fill = [&](Chain& c) {
    const int gap = a + b - static_cast<int>(c.size());
    if (kind == Kind::Box) {
      c.insert(c.end(), gap, kEmpty);
    } else {
      for (int k = 0; k < gap / 2; ++k) {
        c.push_back(-1);
        c.push_back(1);
      }
    }
  };
  auto tail = [&](int bar_lo, int bar_hi, int top) {
    for (int i = bar_lo; i <= bar_hi; ++i) out.push_back(-i);
    for (int i = top; i >= 1; --i) out.push_back(i);
    fill(out);
  };
  if (kind == Kind::Box) {
    out.insert(out.end(), s.midd, kEmpty);
    tail(s.q, s.p, s.p);
    return out;
  }
  const int m2 = 2 * (s.midd / 2);
  for (int k = 0; k < m2 / 2; ++k) {
    out.push_back(-1);
    out.push_back(1);
  }
  const int nbar = s.p + 1 - s.q;
  if (nbar % 2 == 1 && s.tol == m2) {
    tail(s.q, s.p - 1, s.p - 1);
    return out;
  }
  if (nbar % 2 == 0) {
    Word v = with(sorted_word(u), {s.p + 1, -(s.p + 1)});
    if (is_admissible(v)) {
      SplitStats sv = split_stats(a, v, n);
      if (sv.tol == 2 * (sv.midd / 2)) {
        tail(s.q, s.p + 1, s.p + 1);
        return out;
      }
    }
  }
  tail(s.q, s.p, s.p);
  return out;
}

int local_H(Kind kind, Letter x, Letter y) {
  switch (kind) {
    case Kind::VDomino:
      if (x == -1 && y == 1) return 2;
      return prec(y, x) ? 1 : 0;
    case Kind::HDomino:
      return prec(y, x) ? 1 : 0;
    case Kind::Box:
      return (prec(y, x) || (x == kEmpty && y == kEmpty)) ? 1 : 0;
  }
  return 0;
}

long energy_chain(Kind kind, const Chain& c) {
  const long n = static_cast<long>(c.size());
  long e = 0;
  // b_i = c[n - i]
  for (long i = 1; i < n; ++i) e += (n - i) * local_H(kind, c[n - i - 1], c[n - i]);
  if (kind == Kind::Box) {
    e *= 2;
    e += std::count(c.begin(), c.end(), kEmpty);
  }
  return e;
}

long energy_col(Kind kind, const ColumnTensor& b) {
  std::vector<int> mu;
  for (const auto& col : b) mu.push_back(col.cap);
  std::sort(mu.rbegin(), mu.rend());
  long size = 0, norm = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    size += mu[i];
    norm += static_cast<long>(i) * mu[i];
  }
  const long c = kind == Kind::Box ? 2 : 1;
  return energy_chain(kind, split_col(kind, b)) - c * (size * (size - 1) / 2 - norm);
}

int vacancy(const ColumnTensor& b) {
  int v = 0;
  for (const auto& col : b) v += col.cap - static_cast<int>(col.word.size());
  return v;
}

QTPoly qt_energy(const ColumnTensor& b) {
  const long d = energy_col(Kind::Box, b);
  const int vac = vacancy(b);
  if ((d - vac) % 2 != 0) throw std::logic_error("energy and vacancy have different parity");
  return qt_pow(static_cast<int>((d - vac) / 2), vac);
}

Column iota(const Column& c) {
  Column out{c.cap + 1, {1}};
  for (Letter x : c.word) out.word.push_back(x > 0 ? x + 1 : x - 1);
  out.word = sorted_word(out.word);
  return out;
}

ColumnTensor iota(const ColumnTensor& b) {
  ColumnTensor out;
  for (const auto& c : b) out.push_back(iota(c));
  return out;
}

std::vector<Word> column_words(const ColumnTensor& b) {
  std::vector<Word> out;
  for (const auto& c : b) out.push_back(c.word);
  return out;
}

ColumnTensor with_words(const ColumnTensor& shape, const std::vector<Word>& words) {
  ColumnTensor out = shape;
  for (std::size_t k = 0; k < out.size(); ++k) out[k].word = words[k];
  return out;
}

bool column_is_hw(const ColumnTensor& b) {
  return words_is_hw(LetterCrystal{}, column_words(b), Reading::Column);
}

}  // namespace krlab
