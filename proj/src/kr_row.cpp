#include "krlab/kr_row.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

#include "krlab/crystal.hpp"

namespace krlab {

namespace {

int count(const Word& w, Letter x) { return static_cast<int>(std::count(w.begin(), w.end(), x)); }

Word erase_n(Word w, Letter x, int n) {
  for (int k = 0; k < n; ++k) {
    auto it = std::find(w.begin(), w.end(), x);
    if (it == w.end()) throw std::logic_error("row e0/f0: missing letter");
    w.erase(it);
  }
  return w;
}

Word add_n(Word w, Letter x, int n) {
  for (int k = 0; k < n; ++k) w.push_back(x);
  return sorted_word(std::move(w));
}

Word replace(Word w, Letter from, Letter to) { return add_n(erase_n(std::move(w), from, 1), to, 1); }

LetterCrystal letters_of(Kind kind, int N) { return LetterCrystal{classical_type(kind), N}; }

}  // namespace

void validate_row(Kind kind, const Row& r, bool allow_zero) {
  const int len = static_cast<int>(r.word.size());
  if (r.cap < 0 || len > r.cap) throw std::invalid_argument("row word longer than its capacity");
  if (kind == Kind::HDomino && (r.cap - len) % 2 != 0)
    throw std::invalid_argument("hdomino row needs capacity - length even: " + word_to_string(r.word));
  if (kind == Kind::VDomino && len != r.cap) throw std::invalid_argument("vdomino row must have full length");
  int zeros = 0;
  for (std::size_t k = 0; k < r.word.size(); ++k) {
    if (r.word[k] == kEmpty) throw std::invalid_argument("∅ inside a row word");
    if (r.word[k] == 0) ++zeros;
    if (k > 0 && prec(r.word[k], r.word[k - 1])) throw std::invalid_argument("row word not weakly increasing");
  }
  if (zeros > (allow_zero ? 1 : 0)) throw std::invalid_argument("row word has a forbidden 0 letter");
}

int eps0_row(Kind kind, const Row& r) {
  const int L = static_cast<int>(r.word.size());
  const int x1 = count(r.word, 1), xb1 = count(r.word, -1);
  switch (kind) {
    case Kind::HDomino: return (r.cap - L) / 2 + std::max(0, x1 - xb1);
    case Kind::Box: return (r.cap - L) + 2 * std::max(0, x1 - xb1);
    case Kind::VDomino: return x1 + std::max(0, count(r.word, 2) - count(r.word, -2));
  }
  return 0;
}

int pairing0_row(Kind kind, const Row& r) {
  const int w1 = count(r.word, 1) - count(r.word, -1);
  switch (kind) {
    case Kind::HDomino: return -w1;
    case Kind::Box: return -2 * w1;
    case Kind::VDomino: return -w1 - (count(r.word, 2) - count(r.word, -2));
  }
  return 0;
}

int phi0_row(Kind kind, const Row& r) { return eps0_row(kind, r) + pairing0_row(kind, r); }

namespace {

std::optional<Row> e0_row(Kind kind, const Row& r) {
  const int L = static_cast<int>(r.word.size());
  const int d = count(r.word, 1) - count(r.word, -1);
  switch (kind) {
    case Kind::HDomino:
      if (d >= 2) return Row{r.cap, erase_n(r.word, 1, 2)};
      if (d == 1) return Row{r.cap, replace(r.word, 1, -1)};
      if (r.cap - L >= 2) return Row{r.cap, add_n(r.word, -1, 2)};
      return std::nullopt;
    case Kind::Box:
      if (d >= 1) return Row{r.cap, erase_n(r.word, 1, 1)};
      if (L < r.cap) return Row{r.cap, add_n(r.word, -1, 1)};
      return std::nullopt;
    case Kind::VDomino:
      if (count(r.word, 2) > count(r.word, -2)) return Row{r.cap, replace(r.word, 2, -1)};
      if (count(r.word, 1) >= 1) return Row{r.cap, replace(r.word, 1, -2)};
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Row> f0_row(Kind kind, const Row& r) {
  const int L = static_cast<int>(r.word.size());
  const int d = count(r.word, -1) - count(r.word, 1);
  switch (kind) {
    case Kind::HDomino:
      if (d >= 2) return Row{r.cap, erase_n(r.word, -1, 2)};
      if (d == 1) return Row{r.cap, replace(r.word, -1, 1)};
      if (r.cap - L >= 2) return Row{r.cap, add_n(r.word, 1, 2)};
      return std::nullopt;
    case Kind::Box:
      if (d >= 1) return Row{r.cap, erase_n(r.word, -1, 1)};
      if (L < r.cap) return Row{r.cap, add_n(r.word, 1, 1)};
      return std::nullopt;
    case Kind::VDomino:
      if (count(r.word, -2) > count(r.word, 2)) return Row{r.cap, replace(r.word, -2, 1)};
      if (count(r.word, -1) >= 1) return Row{r.cap, replace(r.word, -1, 2)};
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

int RowCrystal::eps(int i, const Row& r) const {
  if (i == 0) return eps0_row(kind, r);
  return tensor_eps(letters_of(kind, N), i, r.word);
}

int RowCrystal::phi(int i, const Row& r) const {
  if (i == 0) return phi0_row(kind, r);
  return tensor_phi(letters_of(kind, N), i, r.word);
}

std::optional<Row> RowCrystal::e(int i, const Row& r) const {
  if (i == 0) return e0_row(kind, r);
  auto w = tensor_e(letters_of(kind, N), i, r.word);
  if (!w) return std::nullopt;
  return Row{r.cap, sorted_word(*w)};
}

std::optional<Row> RowCrystal::f(int i, const Row& r) const {
  if (i == 0) return f0_row(kind, r);
  auto w = tensor_f(letters_of(kind, N), i, r.word);
  if (!w) return std::nullopt;
  return Row{r.cap, sorted_word(*w)};
}

namespace {

struct FactorSignature {
  std::vector<std::size_t> minus, plus;
};

FactorSignature factor_signature(const RowCrystal& rc, int i, const RowTensor& b) {
  FactorSignature s;
  for (std::size_t k = b.size(); k-- > 0;) {
    const int ep = rc.eps(i, b[k]);
    const int ph = rc.phi(i, b[k]);
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

int RowCrystal::eps(int i, const RowTensor& b) const {
  return static_cast<int>(factor_signature(*this, i, b).minus.size());
}

int RowCrystal::phi(int i, const RowTensor& b) const {
  return static_cast<int>(factor_signature(*this, i, b).plus.size());
}

std::optional<RowTensor> RowCrystal::e(int i, const RowTensor& b) const {
  auto s = factor_signature(*this, i, b);
  if (s.minus.empty()) return std::nullopt;
  RowTensor out = b;
  out[s.minus.back()] = *e(i, b[s.minus.back()]);
  return out;
}

std::optional<RowTensor> RowCrystal::f(int i, const RowTensor& b) const {
  auto s = factor_signature(*this, i, b);
  if (s.plus.empty()) return std::nullopt;
  RowTensor out = b;
  out[s.plus.front()] = *f(i, b[s.plus.front()]);
  return out;
}

bool RowCrystal::is_hw(const RowTensor& b) const {
  for (int i = 1; i <= N; ++i)
    if (eps(i, b) > 0) return false;
  return true;
}

RowTensor RowCrystal::highest_weight(const RowTensor& b_in, std::vector<int>* path) const {
  RowTensor b = b_in;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i <= N; ++i)
      if (auto up = e(i, b)) {
        b = *up;
        if (path) path->push_back(i);
        moved = true;
        break;
      }
  }
  return b;
}

RowTensor RowCrystal::lower_along(RowTensor b, const std::vector<int>& path) const {
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto down = f(*it, b);
    if (!down) throw std::logic_error("row lower_along: f annihilated an element on a recorded path");
    b = *down;
  }
  return b;
}

int eps0_tensor(Kind kind, const RowTensor& b) { return RowCrystal{kind, 4}.eps(0, b); }

int default_rank(const RowTensor& b) {
  int m = 2;
  for (const auto& r : b)
    for (Letter x : r.word)
      if (x != kEmpty) m = std::max(m, magnitude(x));
  return m + 2;
}

namespace {

using RKey = std::tuple<int, int, int, Word, Word>;
std::mutex r_mutex;
std::map<RKey, std::pair<Row, Row>> r_memo;
std::atomic<long> stat_hw{0}, stat_bfs{0};

std::vector<Row> hw_single_letters(Kind kind, int N) {
  std::vector<Row> out;
  if (kind == Kind::Box) out.push_back({1, {}});
  for (int i = 1; i <= N; ++i) {
    out.push_back({1, {i}});
    out.push_back({1, {-i}});
  }
  if (kind != Kind::HDomino) out.push_back({1, {0}});
  return out;
}

std::optional<std::pair<Row, Row>> r_by_hw(Kind kind, const Row& u, const Row& c, int N) {
  RowCrystal rc{kind, N};
  std::vector<int> path;
  RowTensor top = rc.highest_weight({u, c}, &path);
  LetterTensor flat = flatten({top[0].word, top[1].word}, Reading::Row);
  const auto wt = tensor_weight(flat, N);
  const int e0 = rc.eps(0, top);
  std::vector<RowTensor> hits;
  for (const Row& c2 : hw_single_letters(kind, N)) {
    for (int k = 0; k <= u.cap; ++k) {
      Row u2{u.cap, Word(k, 1)};
      if (kind == Kind::HDomino && (u.cap - k) % 2) continue;
      if (kind == Kind::VDomino && k != u.cap) continue;
      RowTensor cand{c2, u2};
      if (tensor_weight(flatten({c2.word, u2.word}, Reading::Row), N) != wt) continue;
      if (!rc.is_hw(cand) || rc.eps(0, cand) != e0) continue;
      hits.push_back(cand);
    }
  }
  if (hits.size() != 1) return std::nullopt;
  RowTensor low = rc.lower_along(hits[0], path);
  return std::make_pair(low[0], low[1]);
}

}  // namespace

std::pair<Row, Row> r_matrix_row_bfs(Kind kind, const Row& u, const Row& c, int N) {
  RowCrystal rc{kind, N};
  RowTensor x0{{u.cap, Word(u.cap, 1)}, {1, {1}}};
  RowTensor y0{{1, {1}}, {u.cap, Word(u.cap, 1)}};
  RowTensor target{u, c};
  std::map<RowTensor, RowTensor> img{{x0, y0}};
  std::queue<RowTensor> todo;
  todo.push(x0);
  while (!todo.empty()) {
    RowTensor x = todo.front();
    todo.pop();
    const RowTensor& y = img.at(x);
    if (x == target) return {y[0], y[1]};
    for (int i = 0; i <= N; ++i)
      for (int dir = 0; dir < 2; ++dir) {
        auto x2 = dir ? rc.f(i, x) : rc.e(i, x);
        auto y2 = dir ? rc.f(i, y) : rc.e(i, y);
        if (x2.has_value() != y2.has_value()) throw std::logic_error("row R BFS: operator domains disagree");
        if (!x2) continue;
        auto [it, fresh] = img.emplace(*x2, *y2);
        if (!fresh && it->second != *y2) throw std::logic_error("row R BFS: inconsistent image");
        if (fresh) todo.push(*x2);
      }
  }
  throw std::logic_error("row R BFS: target not connected to the anchor");
}

std::pair<Row, Row> r_matrix_row(Kind kind, const Row& u, const Row& c, int N) {
  validate_row(kind, u, true);
  validate_row(kind, c, true);
  if (c.cap != 1) throw std::invalid_argument("r_matrix_row: right factor must be B^{1,1}");
  if (u.cap == 1) return {u, c};
  if (N <= 0) N = default_rank({u, c});
  RKey key{static_cast<int>(kind), u.cap, N, u.word, c.word};
  {
    std::lock_guard<std::mutex> lock(r_mutex);
    if (auto it = r_memo.find(key); it != r_memo.end()) return it->second;
  }
  std::pair<Row, Row> out;
  if (auto hw = r_by_hw(kind, u, c, N)) {
    out = *hw;
    ++stat_hw;
  } else {
    out = r_matrix_row_bfs(kind, u, c, N);
    ++stat_bfs;
  }
  std::lock_guard<std::mutex> lock(r_mutex);
  r_memo.emplace(key, out);
  return out;
}

RowRStats row_r_stats() { return {stat_hw.load(), stat_bfs.load()}; }

Chain split_row(Kind kind, const RowTensor& b, int N) {
  for (const auto& r : b) validate_row(kind, r);
  if (N <= 0) N = default_rank(b);
  std::vector<Row> items;
  for (const auto& r : b)
    if (r.cap > 0) items.push_back(r);
  for (;;) {
    std::size_t idx = items.size();
    for (std::size_t k = items.size(); k-- > 0;)
      if (items[k].cap >= 2) {
        idx = k;
        break;
      }
    if (idx == items.size()) break;
    for (std::size_t j = idx; j + 1 < items.size(); ++j) {
      auto [c2, u2] = r_matrix_row(kind, items[j], items[j + 1], N);
      items[j] = c2;
      items[j + 1] = u2;
    }
    Row last = items.back();
    items.pop_back();
    const int k = static_cast<int>(last.word.size());
    const int a = last.cap;
    if (a >= k + 2) {
      items.push_back({1, {-1}});
      items.push_back({a - 1, add_n(last.word, 1, 1)});
    } else if (a == k + 1) {
      items.push_back({1, {}});
      items.push_back({a - 1, last.word});
    } else {
      items.push_back({1, {last.word.front()}});
      items.push_back({a - 1, Word(last.word.begin() + 1, last.word.end())});
    }
  }
  Chain out;
  for (const auto& r : items) out.push_back(r.word.empty() ? kEmpty : r.word.front());
  return out;
}

long energy_row(Kind kind, const RowTensor& b, int N) { return energy_chain(kind, split_row(kind, b, N)); }

}  // namespace krlab
