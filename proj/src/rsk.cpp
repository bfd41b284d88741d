#include "krlab/rsk.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace krlab {

Partition tableau_shape(const Tableau& t) {
  Partition p;
  for (const auto& row : t) p.push_back(static_cast<int>(row.size()));
  return trimmed(p);
}

bool is_semistandard(const Tableau& t) {
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (t[r].empty()) return false;
    if (r > 0 && t[r].size() > t[r - 1].size()) return false;
    for (std::size_t c = 0; c < t[r].size(); ++c) {
      if (c > 0 && t[r][c] < t[r][c - 1]) return false;
      if (r > 0 && t[r][c] <= t[r - 1][c]) return false;
    }
  }
  return true;
}

bool is_distinct_tableau(const Tableau& t) {
  if (!is_semistandard(t)) return false;
  std::set<int> seen;
  for (const auto& row : t)
    for (int x : row)
      if (x <= 0 || !seen.insert(x).second) return false;
  return true;
}

Cell row_insert(Tableau& t, int x) {
  for (std::size_t r = 0;; ++r) {
    if (r == t.size()) {
      t.push_back({x});
      return {static_cast<int>(r), 0};
    }
    auto& row = t[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {static_cast<int>(r), static_cast<int>(row.size()) - 1};
    }
    std::swap(*it, x);
  }
}

namespace {

int column_height(const Tableau& t, std::size_t c) {
  int h = 0;
  while (static_cast<std::size_t>(h) < t.size() && t[h].size() > c) ++h;
  return h;
}

}  // namespace

Cell column_insert(Tableau& t, int x) {
  for (std::size_t c = 0;; ++c) {
    const int h = column_height(t, c);
    int r = 0;
    while (r < h && t[r][c] <= x) ++r;
    if (r == h) {
      if (static_cast<std::size_t>(h) == t.size()) t.push_back({});
      if (t[h].size() != c) throw std::logic_error("column_insert: not a tableau");
      t[h].push_back(x);
      return {h, static_cast<int>(c)};
    }
    std::swap(t[r][c], x);
  }
}

Tableau row_insert_word(Tableau t, const std::vector<int>& w) {
  for (int x : w) row_insert(t, x);
  return t;
}

Tableau column_insert_word(const std::vector<int>& w, Tableau t) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) column_insert(t, *it);
  return t;
}

int row_delete(Tableau& t, int row) {
  const auto r0 = static_cast<std::size_t>(row);
  if (row < 0 || r0 >= t.size() || (r0 + 1 < t.size() && t[r0 + 1].size() >= t[r0].size()))
    throw std::invalid_argument("row_delete: the end of row " + std::to_string(row) + " is not a corner");
  int y = t[r0].back();
  t[r0].pop_back();
  if (t[r0].empty()) t.pop_back();
  for (int r = row - 1; r >= 0; --r) {
    auto& cur = t[r];
    auto it = std::lower_bound(cur.begin(), cur.end(), y);
    if (it == cur.begin()) throw std::logic_error("row_delete: not a tableau");
    std::swap(*std::prev(it), y);
  }
  return y;
}

int column_delete(Tableau& t, int col) {
  const auto c0 = static_cast<std::size_t>(col);
  const int h = col < 0 ? 0 : column_height(t, c0);
  if (h == 0 || t[h - 1].size() != c0 + 1)
    throw std::invalid_argument("column_delete: the bottom of column " + std::to_string(col) + " is not a corner");
  int y = t[h - 1].back();
  t[h - 1].pop_back();
  if (t[h - 1].empty()) t.pop_back();
  for (int c = col - 1; c >= 0; --c) {
    const int hc = column_height(t, c);
    int r = hc - 1;
    while (r >= 0 && t[r][c] >= y) --r;
    if (r < 0) throw std::logic_error("column_delete: not a tableau");
    std::swap(t[r][c], y);
  }
  return y;
}

std::vector<int> row_reading_word(const Tableau& t) {
  std::vector<int> w;
  for (auto r = t.rbegin(); r != t.rend(); ++r) w.insert(w.end(), r->begin(), r->end());
  return w;
}

std::vector<int> column_reading_word(const Tableau& t) {
  std::vector<int> w;
  const std::size_t width = t.empty() ? 0 : t[0].size();
  for (std::size_t c = 0; c < width; ++c)
    for (int r = column_height(t, c) - 1; r >= 0; --r) w.push_back(t[r][c]);
  return w;
}

Tableau truncate(const Tableau& t, int k) {
  Tableau out;
  for (const auto& row : t) {
    const auto n = std::min<std::size_t>(row.size(), static_cast<std::size_t>(std::max(k, 0)));
    if (n == 0) break;
    out.emplace_back(row.begin(), row.begin() + static_cast<long>(n));
  }
  return out;
}

int first_row(const Tableau& t) { return t.empty() ? 0 : static_cast<int>(t[0].size()); }

bool is_tl(const TwoLineArray& a) {
  if (a.top.size() != a.bottom.size()) return false;
  std::set<int> seen;
  for (std::size_t s = 0; s < a.size(); ++s) {
    const int j = a.top[s], i = a.bottom[s];
    if (i <= 0 || j < i) return false;
    if (s > 0 && a.top[s - 1] >= j) return false;
    if (!seen.insert(j).second) return false;
    if (j != i && !seen.insert(i).second) return false;
  }
  return true;
}

TwoLineArray bar(const TwoLineArray& a) {
  std::vector<std::pair<int, int>> cols;
  for (std::size_t s = 0; s < a.size(); ++s) {
    cols.emplace_back(a.top[s], a.bottom[s]);
    if (a.top[s] > a.bottom[s]) cols.emplace_back(a.bottom[s], a.top[s]);
  }
  std::sort(cols.begin(), cols.end());
  TwoLineArray out;
  for (auto [j, i] : cols) {
    out.top.push_back(j);
    out.bottom.push_back(i);
  }
  return out;
}

TwoLineArray hat(const TwoLineArray& a) {
  TwoLineArray out;
  for (std::size_t s = 0; s < a.size(); ++s)
    if (a.top[s] != a.bottom[s]) {
      out.top.push_back(a.top[s]);
      out.bottom.push_back(a.bottom[s]);
    }
  return out;
}

Tableau tab(const TwoLineArray& a) {
  std::vector<int> w(a.bottom.rbegin(), a.bottom.rend());
  return column_insert_word(w, {});
}

Tableau burge(const TwoLineArray& a) {
  if (!is_tl(a)) throw std::invalid_argument("burge: not a two-line array in TL(r)");
  Tableau t;
  for (std::size_t s = 0; s < a.size(); ++s) {
    const Cell c = column_insert(t, a.bottom[s]);
    if (a.top[s] == a.bottom[s]) continue;
    const auto col = static_cast<std::size_t>(c.col) + 1;
    const int h = column_height(t, col);
    if (static_cast<std::size_t>(h) == t.size()) t.push_back({});
    if (t[h].size() != col) throw std::logic_error("burge: new cell is not addable");
    t[h].push_back(a.top[s]);
  }
  return t;
}

TwoLineArray tl_of(const Tableau& t0) {
  if (!is_distinct_tableau(t0)) throw std::invalid_argument("tl_of: not a tableau with distinct entries");
  Tableau t = t0;
  std::vector<std::pair<int, int>> cols;
  while (!t.empty()) {
    std::size_t mr = 0;
    for (std::size_t r = 1; r < t.size(); ++r)
      if (t[r].back() > t[mr].back()) mr = r;
    const int m = t[mr].back();
    const int mc = static_cast<int>(t[mr].size()) - 1;
    t[mr].pop_back();
    if (t[mr].empty()) t.pop_back();
    cols.emplace_back(m, mc == 0 ? m : column_delete(t, mc - 1));
  }
  TwoLineArray a;
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
    a.top.push_back(it->first);
    a.bottom.push_back(it->second);
  }
  if (burge(a) != t0) throw std::logic_error("tl_of: reversal did not reproduce the tableau");
  return a;
}

Tableau alpha(const Tableau& t) { return tab(tl_of(t)); }
Tableau beta(const Tableau& t) { return tab(hat(tl_of(t))); }

std::vector<int> second(const std::vector<int>& w) {
  std::vector<int> row, out;
  for (int x : w) {
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
    } else {
      out.push_back(*it);
      *it = x;
    }
  }
  return out;
}

std::vector<int> lseq(const std::vector<int>& w) {
  if (w.empty()) return {};
  std::vector<int> row, col;
  for (int x : w) {
    auto it = std::upper_bound(row.begin(), row.end(), x);
    col.push_back(static_cast<int>(it - row.begin()) + 1);
    if (it == row.end())
      row.push_back(x);
    else
      *it = x;
  }
  const int len = col.back();
  std::vector<std::size_t> idx(static_cast<std::size_t>(len) + 1);
  idx[len] = w.size() - 1;
  for (int k = len; k >= 2; --k) {
    std::size_t j = 0;
    while (!(w[j] < w[idx[k]] && col[j] == k - 1)) ++j;
    idx[k - 1] = j;
  }
  std::vector<int> out;
  for (int k = 1; k <= len; ++k) out.push_back(w[idx[k]]);
  return out;
}

int longest_increasing(const std::vector<int>& w) {
  std::vector<int> tails;
  for (int x : w) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end())
      tails.push_back(x);
    else
      *it = x;
  }
  return static_cast<int>(tails.size());
}

namespace {

// Row of the single cell in which a and b differ, or -1 if they are equal.
int changed_row(const Partition& a, const Partition& b) {
  const std::size_t n = std::max(a.size(), b.size());
  int row = -1;
  for (std::size_t r = 0; r < n; ++r) {
    const int d = part(a, r) - part(b, r);
    if (d == 0) continue;
    if (row >= 0 || std::abs(d) != 1) throw std::invalid_argument("shapes differ by more than one cell");
    row = static_cast<int>(r);
  }
  return row;
}

}  // namespace

bool is_gsot_chain(const ShapeChain& g) {
  if (g.empty() || !trimmed(g[0]).empty()) return false;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (!is_partition(g[j])) return false;
    if (j == 0) continue;
    const int d = size_of(g[j]) - size_of(g[j - 1]);
    if (d == 0 && !same_partition(g[j], g[j - 1])) return false;
    if (d == 1 && !contains(g[j], g[j - 1])) return false;
    if (d == -1 && !contains(g[j - 1], g[j])) return false;
    if (std::abs(d) > 1) return false;
  }
  return true;
}

ShapeChain chain_of(const OscTableau& t) {
  ShapeChain g{{}};
  for (std::size_t k = 0; k < t.strips.size(); ++k) {
    if (t.weight[k] != 1) throw std::invalid_argument("chain_of: weight is not (1^n)");
    g.push_back(t.strips[k].lam);
  }
  return g;
}

OscTableau gsot_of(const ShapeChain& g) {
  if (!is_gsot_chain(g)) throw std::invalid_argument("gsot_of: not a chain of single-cell steps");
  OscTableau t{TabKind::GSSOT, {}, {}};
  for (std::size_t j = 1; j < g.size(); ++j) {
    const Partition a = trimmed(g[j - 1]), b = trimmed(g[j]);
    const Partition nu = size_of(b) > size_of(a) ? b : a;
    t.strips.push_back({a, nu, b});
    t.weight.push_back(1);
  }
  validate_tableau(t);
  return t;
}

BCStage1 phi_bc_stage1(const ShapeChain& g, std::vector<BCStage1>* trace) {
  if (!is_gsot_chain(g)) throw std::invalid_argument("phi_bc: not a chain of single-cell steps");
  BCStage1 s;
  if (trace) trace->assign(1, s);
  for (std::size_t j = 1; j < g.size(); ++j) {
    const int step = static_cast<int>(j);
    const int d = size_of(g[j]) - size_of(g[j - 1]);
    if (d == 0) {
      s.i.top.push_back(step);
      s.i.bottom.push_back(step);
    } else {
      const int r = changed_row(g[j], g[j - 1]);
      if (d > 0) {
        if (static_cast<std::size_t>(r) == s.t.size()) s.t.push_back({});
        s.t[r].push_back(step);
      } else {
        s.i.top.push_back(step);
        s.i.bottom.push_back(row_delete(s.t, r));
      }
    }
    if (trace) trace->push_back(s);
  }
  return s;
}

BCPair phi_bc_stage2(const BCStage1& s) {
  const Tableau y = tab(bar(s.i));
  BCPair out{s.t, {}};
  for (const auto& row : s.t) out.q.emplace_back(row.size(), 0);
  const std::size_t width = y.empty() ? 0 : y[0].size();
  for (std::size_t c = 0; c < width; ++c)
    for (int r = column_height(y, c) - 1; r >= 0; --r) {
      const Cell cell = row_insert(out.p, y[r][c]);
      if (static_cast<std::size_t>(cell.row) == out.q.size()) out.q.emplace_back();
      out.q[cell.row].push_back(static_cast<int>(c) + 1);
    }
  return out;
}

BCPair phi_bc(const ShapeChain& g) { return phi_bc_stage2(phi_bc_stage1(g)); }

bool is_transposed_lr(const Tableau& q, const Partition& lam) {
  const Partition shape = tableau_shape(q);
  if (!is_partition(shape) || !contains(shape, lam)) return false;
  for (std::size_t r = 0; r < q.size(); ++r)
    for (std::size_t c = 0; c < q[r].size(); ++c)
      if ((static_cast<int>(c) < part(lam, r)) != (q[r][c] == 0)) return false;
  // Transpose: qt[c][r] = q[r][c].
  const std::size_t width = q.empty() ? 0 : q[0].size();
  Tableau qt(width);
  for (std::size_t c = 0; c < width; ++c)
    for (int r = 0; r < column_height(q, c); ++r) qt[c].push_back(q[r][c]);
  for (std::size_t r = 0; r < qt.size(); ++r)
    for (std::size_t c = 0; c < qt[r].size(); ++c) {
      if (qt[r][c] == 0) continue;
      if (c > 0 && qt[r][c - 1] != 0 && qt[r][c - 1] > qt[r][c]) return false;
      if (r > 0 && qt[r - 1][c] != 0 && qt[r - 1][c] >= qt[r][c]) return false;
    }
  std::vector<int> count(1, 0);
  for (const auto& row : qt)
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      const int e = *it;
      if (e == 0) continue;
      if (static_cast<std::size_t>(e) >= count.size()) count.resize(static_cast<std::size_t>(e) + 1, 0);
      ++count[e];
      if (e > 1 && count[e] > count[e - 1]) return false;
    }
  return true;
}

std::vector<int> q_content(const Tableau& q) {
  std::vector<int> c;
  for (const auto& row : q)
    for (int e : row) {
      if (e <= 0) continue;
      if (static_cast<std::size_t>(e) > c.size()) c.resize(static_cast<std::size_t>(e), 0);
      ++c[e - 1];
    }
  return c;
}

namespace {

std::pair<int, int> split_bound(int g2) {
  if (g2 < 0) throw std::invalid_argument("bound must be nonnegative");
  const int m = (g2 + 1) / 2;
  return {m, 2 * m - g2};
}

}  // namespace

bool bound_from_q(const Tableau& q, const Partition& lam, int g2) {
  const auto [m, k] = split_bound(g2);
  if (part(lam, 0) > m - k) return false;
  for (const auto& row : q)
    for (std::size_t c = 0; c < row.size(); ++c) {
      const int e = row[c];
      if (e <= 0) continue;
      const int col = static_cast<int>(c) + 1;
      const int limit = e % 2 == 1 ? m + (e - 1) / 2 : m + e / 2 - k;
      if (col > limit) return false;
    }
  return true;
}

bool bound_from_stage1(const BCStage1& s, int g2) {
  const auto [m, k] = split_bound(g2);
  const TwoLineArray h = hat(s.i);
  const std::vector<int> is(s.i.bottom.rbegin(), s.i.bottom.rend());
  const std::vector<int> ds(h.bottom.rbegin(), h.bottom.rend());
  return first_row(row_insert_word(s.t, is)) <= m && first_row(row_insert_word(s.t, ds)) <= m - k;
}

PlacticRule parse_plactic_rule(const std::string& s) {
  if (s == "R1" || s == "1") return PlacticRule::R1;
  if (s == "R2" || s == "2") return PlacticRule::R2;
  if (s == "R3" || s == "3") return PlacticRule::R3;
  if (s == "R4" || s == "4") return PlacticRule::R4;
  throw std::invalid_argument("unknown plactic rule '" + s + "' (R1..R4)");
}

namespace {

using Triple = std::array<Letter, 3>;

// Position in 1 ≺ ... ≺ n, \bar{n} ≺ ... ≺ \bar{1}; n and \bar{n} are incomparable.
struct DOrder {
  int n;
  int rk(Letter x) const { return x > 0 ? x : 2 * n + 1 + x; }
  bool leq(Letter a, Letter b) const {
    if (a == b) return true;
    if ((a == n && b == -n) || (a == -n && b == n)) return false;
    return rk(a) < rk(b);
  }
  bool lt(Letter a, Letter b) const { return a != b && leq(a, b); }
};

void check_d_word(const Word& v, int n) {
  for (Letter x : v)
    if (x == 0 || x == kEmpty || magnitude(x) > n)
      throw std::invalid_argument("letter " + letter_to_string(x) + " is not in B(ω_1) of type D_" + std::to_string(n));
}

// Fixed pairs of equivalent words.
std::vector<std::pair<Triple, Triple>> fixed_relations(PlacticRule rule, int n) {
  std::vector<std::pair<Triple, Triple>> rel;
  if (rule == PlacticRule::R3) {
    for (int x = 1; x <= n - 1; ++x) {
      rel.push_back({{n, -x, -n}, {n, -n, -x}});
      rel.push_back({{-n, -x, n}, {-n, n, -x}});
      rel.push_back({{x, n, -n}, {n, x, -n}});
      rel.push_back({{x, -n, n}, {-n, x, n}});
    }
  } else if (rule == PlacticRule::R4 && n >= 2) {
    rel.push_back({{-n, -n, n}, {-n, n - 1, -(n - 1)}});
    rel.push_back({{n, n, -n}, {n, n - 1, -(n - 1)}});
    rel.push_back({{n - 1, -(n - 1), -n}, {n, -n, -n}});
    rel.push_back({{n - 1, -(n - 1), n}, {-n, n, n}});
  }
  return rel;
}

std::vector<Triple> rewrite_triple(const Triple& w, PlacticRule rule, int n) {
  const DOrder o{n};
  const auto [a, b, c] = w;
  std::vector<Triple> out;
  switch (rule) {
    case PlacticRule::R1:
      // xzy ≡ zxy for x ⪯ y ≺ z, read with either side matching.
      if ((o.leq(a, c) && o.lt(c, b) && a != -b) || (o.leq(b, c) && o.lt(c, a) && b != -a)) out.push_back({b, a, c});
      // yzx ≡ yxz for x ≺ y ⪯ z.
      if ((o.lt(c, a) && o.leq(a, b) && c != -b) || (o.lt(b, a) && o.leq(a, c) && b != -c)) out.push_back({a, c, b});
      break;
    case PlacticRule::R2:
      for (int x = 2; x <= n; ++x) {
        // (x-1)\overline{(x-1)} y ≡ \bar{x} x y; the order of x, \bar{x} on the
        // right is the one compatible with this tensor convention.
        if (o.leq(x, c) && o.leq(c, -x)) {
          if (a == x - 1 && b == -(x - 1)) out.push_back({-x, x, c});
          if (a == -x && b == x) out.push_back({x - 1, -(x - 1), c});
        }
        if (o.leq(x, a) && o.leq(a, -x)) {
          if (b == -x && c == x) out.push_back({a, x - 1, -(x - 1)});
          if (b == x - 1 && c == -(x - 1)) out.push_back({a, -x, x});
        }
      }
      break;
    case PlacticRule::R3:
    case PlacticRule::R4:
      for (const auto& [l, r] : fixed_relations(rule, n)) {
        if (w == l) out.push_back(r);
        if (w == r) out.push_back(l);
      }
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Word> plactic_rewrites(const Word& v, PlacticRule rule, std::size_t pos, int n) {
  check_d_word(v, n);
  if (pos + 3 > v.size()) throw std::invalid_argument("plactic_rewrite: position out of range");
  std::vector<Word> out;
  for (const auto& t : rewrite_triple({v[pos], v[pos + 1], v[pos + 2]}, rule, n)) {
    Word w = v;
    std::copy(t.begin(), t.end(), w.begin() + static_cast<long>(pos));
    out.push_back(std::move(w));
  }
  return out;
}

Word plactic_rewrite(const Word& v, PlacticRule rule, std::size_t pos, int n) {
  auto all = plactic_rewrites(v, rule, pos, n);
  if (all.empty()) throw std::invalid_argument("plactic_rewrite: the rule does not match at this position");
  return all.front();
}

std::vector<Word> plactic_neighbours(const Word& v, int n) {
  std::set<Word> out;
  for (std::size_t pos = 0; pos + 3 <= v.size(); ++pos)
    for (PlacticRule rule : {PlacticRule::R1, PlacticRule::R2, PlacticRule::R3, PlacticRule::R4})
      for (auto& w : plactic_rewrites(v, rule, pos, n)) out.insert(std::move(w));
  return {out.begin(), out.end()};
}

std::vector<Word> plactic_ball(const Word& v, int n, int depth) {
  std::set<Word> seen{v};
  std::vector<Word> frontier{v};
  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (auto& u : plactic_neighbours(w, n))
        if (seen.insert(u).second) next.push_back(u);
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Word theta_1n(const Word& b, int n) {
  check_d_word(b, n);
  Word out;
  for (Letter x : b) out.push_back(x > 0 ? -(n + 1 - x) : n + 1 + x);
  return out;
}

std::string rows_to_string(const Tableau& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < t[r].size(); ++c) os << (c ? "," : "") << t[r][c];
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string two_line_to_string(const TwoLineArray& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t s = 0; s < a.size(); ++s) os << (s ? " " : "") << a.top[s];
  os << " / ";
  for (std::size_t s = 0; s < a.size(); ++s) os << (s ? " " : "") << a.bottom[s];
  os << ')';
  return os.str();
}

}  // namespace krlab
