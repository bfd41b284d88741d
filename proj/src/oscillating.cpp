#include "krlab/oscillating.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace krlab {

namespace {

Partition conj(const Partition& p) { return conjugate(trimmed(p)); }

/// Adds (or removes, for delta = -1) one cell in column c (1-based).
Partition move_cell(const Partition& p_in, int c, int delta) {
  Partition p = trimmed(p_in);
  Partition t = conj(p);
  const int height = part(t, static_cast<std::size_t>(c - 1));
  if (delta > 0) {
    if (c > 1 && part(t, static_cast<std::size_t>(c - 2)) <= height)
      throw std::invalid_argument("cannot add a cell in column " + std::to_string(c));
    if (static_cast<int>(p.size()) <= height) p.resize(height + 1, 0);
    ++p[height];
  } else {
    if (height == 0 || part(t, static_cast<std::size_t>(c)) >= height)
      throw std::invalid_argument("cannot remove a cell from column " + std::to_string(c));
    --p[height - 1];
  }
  return trimmed(p);
}

bool can_add(const Partition& p, int c) {
  Partition t = conj(p);
  return c == 1 || part(t, static_cast<std::size_t>(c - 2)) > part(t, static_cast<std::size_t>(c - 1));
}

bool can_remove(const Partition& p, int c) {
  Partition t = conj(p);
  const int h = part(t, static_cast<std::size_t>(c - 1));
  return h > 0 && part(t, static_cast<std::size_t>(c)) < h;
}

/// Column of the single cell in big/small.
int cell_column(const Partition& big, const Partition& small) {
  const std::size_t n = std::max(big.size(), small.size());
  for (std::size_t i = 0; i < n; ++i)
    if (part(big, i) != part(small, i)) return part(big, i);
  throw std::invalid_argument("partitions do not differ by a cell");
}

int diff_size(const Partition& big, const Partition& small) { return size_of(big) - size_of(small); }

bool is_ohs_triple(const Strip& s) {
  return is_partition(s.mu) && is_partition(s.nu) && is_partition(s.lam) && is_horizontal_strip(s.nu, s.mu) &&
         is_horizontal_strip(s.nu, s.lam);
}

bool is_rohs_triple(const Strip& s) {
  return is_partition(s.mu) && is_partition(s.nu) && is_partition(s.lam) && is_horizontal_strip(s.mu, s.nu) &&
         is_horizontal_strip(s.lam, s.nu);
}

Strip make_strip(Partition a, Partition b, Partition c) { return {trimmed(a), trimmed(b), trimmed(c)}; }

/// Splits a glued standardization into per-strip ohs using the step counts.
std::vector<Strip> unglue(const std::vector<Partition>& seq, const std::vector<int>& steps) {
  std::vector<Strip> out;
  std::size_t pos = 0;
  for (int len : steps) {
    const Partition& first = seq[pos];
    std::size_t peak = pos;
    while (peak < pos + static_cast<std::size_t>(len) && size_of(seq[peak + 1]) > size_of(seq[peak])) ++peak;
    for (std::size_t j = peak; j < pos + static_cast<std::size_t>(len); ++j)
      if (size_of(seq[j + 1]) > size_of(seq[j])) throw std::logic_error("growth sequence is not add-then-remove");
    out.push_back(make_strip(first, seq[peak], seq[pos + len]));
    pos += len;
  }
  return out;
}

std::vector<Partition> glue_std(const std::vector<Strip>& strips, std::size_t from) {
  std::vector<Partition> seq;
  for (std::size_t i = from; i < strips.size(); ++i) {
    auto s = std_seq(strips[i]);
    seq.insert(seq.end(), seq.empty() ? s.begin() : s.begin() + 1, s.end());
  }
  return seq;
}

}  // namespace

TabKind parse_tab_kind(const std::string& s) {
  if (s == "ssot" || s == "SSOT") return TabKind::SSOT;
  if (s == "gssot" || s == "GSSOT") return TabKind::GSSOT;
  if (s == "ssrot" || s == "SSROT") return TabKind::SSROT;
  throw std::invalid_argument("unknown tableau kind: " + s);
}

std::string tab_kind_name(TabKind k) {
  switch (k) {
    case TabKind::SSOT: return "ssot";
    case TabKind::GSSOT: return "gssot";
    case TabKind::SSROT: return "ssrot";
  }
  return "?";
}

Kind column_kind(TabKind k) {
  if (k == TabKind::SSROT) throw std::invalid_argument("SSROT has no column embedding");
  return k == TabKind::SSOT ? Kind::VDomino : Kind::Box;
}

Kind row_kind(TabKind k) {
  switch (k) {
    case TabKind::SSOT: return Kind::HDomino;
    case TabKind::GSSOT: return Kind::Box;
    case TabKind::SSROT: return Kind::VDomino;
  }
  return Kind::Box;
}

int strip_size(TabKind k, const Strip& s) {
  if (k == TabKind::SSROT) return diff_size(s.mu, s.nu) + diff_size(s.lam, s.nu);
  return diff_size(s.nu, s.mu) + diff_size(s.nu, s.lam);
}

bool is_strip(TabKind k, const Strip& s, int r) {
  if (k == TabKind::SSROT) return is_rohs_triple(s) && strip_size(k, s) == r;
  if (!is_ohs_triple(s)) return false;
  const int sz = strip_size(k, s);
  return sz == r || (k == TabKind::GSSOT && sz == r - 1);
}

int strip_bound2(TabKind k, const Strip& s, int r) {
  switch (k) {
    case TabKind::SSOT: return 2 * part(s.nu, 0);
    case TabKind::GSSOT: return 2 * part(s.nu, 0) + (strip_size(k, s) == r ? 0 : 1);
    case TabKind::SSROT:
      return part(s.mu, 0) + (part(s.lam, 0) - part(s.nu, 0)) + std::max(part(s.mu, 1), part(s.lam, 1));
  }
  return 0;
}

std::vector<Strip> strips_from(TabKind k, const Partition& init_in, int r, int bound2) {
  const Partition init = trimmed(init_in);
  std::vector<Strip> out;
  if (r < 0) return out;
  const int len = length_of(init);
  if (k == TabKind::SSROT) {
    for (int a = 0; a <= r; ++a)
      for (const auto& nu : remove_horizontal_strips(init, a)) {
        const Partition tn = trimmed(nu);
        for (const auto& lam : add_horizontal_strips(tn, r - a, length_of(tn) + 1, part(tn, 0) + r - a)) {
          Strip s = make_strip(init, tn, lam);
          if (strip_bound2(k, s, r) <= bound2) out.push_back(s);
        }
      }
  } else {
    std::vector<int> sums{r};
    if (k == TabKind::GSSOT && r >= 1) sums.push_back(r - 1);
    for (int total : sums)
      for (int a = 0; a <= total; ++a) {
        int max_part = part(init, 0) + a;
        if (bound2 != kNoBound) max_part = std::min(max_part, bound2 / 2);
        for (const auto& nu : add_horizontal_strips(init, a, len + 1, max_part)) {
          const Partition tn = trimmed(nu);
          for (const auto& lam : remove_horizontal_strips(tn, total - a)) {
            Strip s = make_strip(init, tn, lam);
            if (strip_bound2(k, s, r) <= bound2) out.push_back(s);
          }
        }
      }
  }
  std::sort(out.begin(), out.end(),
            [](const Strip& x, const Strip& y) { return std::tie(x.nu, x.lam) < std::tie(y.nu, y.lam); });
  return out;
}

Partition shape_of(const OscTableau& t) { return t.strips.empty() ? Partition{} : t.strips.back().lam; }

void validate_tableau(const OscTableau& t) {
  if (t.strips.size() != t.weight.size()) throw std::invalid_argument("strip count differs from weight length");
  Partition cur;
  for (std::size_t i = 0; i < t.strips.size(); ++i) {
    const Strip& s = t.strips[i];
    if (!is_strip(t.kind, s, t.weight[i]))
      throw std::invalid_argument("T_" + std::to_string(i + 1) + " = " + strip_to_string(s) + " is not a strip of length " +
                                  std::to_string(t.weight[i]));
    if (!same_partition(s.mu, cur)) throw std::invalid_argument("strips do not chain at T_" + std::to_string(i + 1));
    cur = s.lam;
  }
}

int bound2(const OscTableau& t) {
  int b = 0;
  for (std::size_t i = 0; i < t.strips.size(); ++i) b = std::max(b, strip_bound2(t.kind, t.strips[i], t.weight[i]));
  return b;
}

void enumerate_tableaux(TabKind k, const Partition& shape_in, const std::vector<int>& weight, int bound2,
                        const std::function<bool(const OscTableau&)>& visit) {
  const Partition shape = trimmed(shape_in);
  for (int w : weight)
    if (w < 0) return;
  const int n = static_cast<int>(weight.size());
  std::map<std::pair<int, Partition>, std::vector<Strip>> strip_cache;
  std::map<std::pair<int, Partition>, bool> reach;
  auto strips_at = [&](int i, const Partition& kappa) -> const std::vector<Strip>& {
    auto key = std::make_pair(i, kappa);
    auto it = strip_cache.find(key);
    if (it == strip_cache.end()) it = strip_cache.emplace(key, strips_from(k, kappa, weight[i], bound2)).first;
    return it->second;
  };
  std::function<bool(int, const Partition&)> can_finish = [&](int i, const Partition& kappa) -> bool {
    if (i == n) return kappa == shape;
    auto key = std::make_pair(i, kappa);
    if (auto it = reach.find(key); it != reach.end()) return it->second;
    bool ok = false;
    for (const auto& s : strips_at(i, kappa))
      if (can_finish(i + 1, s.lam)) {
        ok = true;
        break;
      }
    reach[key] = ok;
    return ok;
  };
  OscTableau cur{k, {}, weight};
  bool stop = false;
  std::function<void(int, const Partition&)> rec = [&](int i, const Partition& kappa) {
    if (stop) return;
    if (i == n) {
      if (!visit(cur)) stop = true;
      return;
    }
    for (const auto& s : strips_at(i, kappa)) {
      if (!can_finish(i + 1, s.lam)) continue;
      cur.strips.push_back(s);
      rec(i + 1, s.lam);
      cur.strips.pop_back();
      if (stop) return;
    }
  };
  if (can_finish(0, {})) rec(0, {});
}

std::vector<OscTableau> all_tableaux(TabKind k, const Partition& shape, const std::vector<int>& weight, int bound2) {
  std::vector<OscTableau> out;
  enumerate_tableaux(k, shape, weight, bound2, [&](const OscTableau& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

long count_tableaux(TabKind k, const Partition& shape, const std::vector<int>& weight, int bound2) {
  long c = 0;
  enumerate_tableaux(k, shape, weight, bound2, [&](const OscTableau&) {
    ++c;
    return true;
  });
  return c;
}

Word cind(const Strip& s, TabKind k) {
  // for rohs the added side is λ/ν and the removed side μ/ν
  const bool reverse = k == TabKind::SSROT;
  const Partition mt = conj(s.mu), nt = conj(s.nu), lt = conj(s.lam);
  Word w;
  const int cols = std::max({part(s.mu, 0), part(s.nu, 0), part(s.lam, 0)});
  for (int i = 1; i <= cols; ++i) {
    const std::size_t c = static_cast<std::size_t>(i - 1);
    if (!reverse) {
      if (part(nt, c) == part(mt, c) + 1) w.push_back(i);
      if (part(nt, c) == part(lt, c) + 1) w.push_back(-i);
    } else {
      if (part(lt, c) == part(nt, c) + 1) w.push_back(i);
      if (part(mt, c) == part(nt, c) + 1) w.push_back(-i);
    }
  }
  return sorted_word(w);
}

Word rind(const Strip& s, TabKind k) {
  const bool reverse = k == TabKind::SSROT;
  Word w;
  const std::size_t rows = std::max({s.mu.size(), s.nu.size(), s.lam.size()});
  for (std::size_t i = 0; i < rows; ++i) {
    const int up = reverse ? part(s.lam, i) - part(s.nu, i) : part(s.nu, i) - part(s.mu, i);
    const int down = reverse ? part(s.mu, i) - part(s.nu, i) : part(s.nu, i) - part(s.lam, i);
    for (int k = 0; k < up; ++k) w.push_back(static_cast<int>(i) + 1);
    for (int k = 0; k < down; ++k) w.push_back(-(static_cast<int>(i) + 1));
  }
  return sorted_word(w);
}

ColumnTensor phi_c(const OscTableau& t) {
  const Kind kind = column_kind(t.kind);
  ColumnTensor out;
  for (std::size_t i = t.strips.size(); i-- > 0;) {
    Column c{t.weight[i], red(cind(t.strips[i]))};
    validate_column(kind, c);
    out.push_back(c);
  }
  return out;
}

OscTableau phi_c_inverse(TabKind k, const ColumnTensor& b) {
  const Kind kind = column_kind(k);
  OscTableau t{k, {}, {}};
  Partition cur;
  for (std::size_t j = b.size(); j-- > 0;) {
    const Column& c = b[j];
    validate_column(kind, c);
    const int r = c.cap, l = static_cast<int>(c.word.size());
    const int total = (r - l) % 2 == 0 ? r : r - 1;
    const Word w = unred(c.word, (total - l) / 2);
    Partition nu = cur;
    for (Letter x : w)
      if (!is_barred(x)) nu = move_cell(nu, x, +1);
    Partition lam = nu;
    for (Letter x : w)
      if (is_barred(x)) lam = move_cell(lam, -x, -1);
    Strip s = make_strip(cur, nu, lam);
    if (cind(s) != w) throw std::invalid_argument("column word is not the cind of a strip");
    t.strips.push_back(s);
    t.weight.push_back(r);
    cur = s.lam;
  }
  validate_tableau(t);
  return t;
}

Strip gamma(const Strip& s) {
  if (!is_ohs_triple(s)) throw std::invalid_argument("gamma needs an ohs");
  const std::size_t n = s.nu.size() + 1;
  std::vector<int> a(n + 1, 0), ab(n + 1, 0), m(n + 2, 0);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = part(s.nu, i) - part(s.mu, i);
    ab[i] = part(s.nu, i) - part(s.lam, i);
    m[i] = std::min(a[i], ab[i]);
  }
  Partition zeta(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int b = a[i] - m[i] + m[i + 1];
    const int bb = ab[i] - m[i] + m[i + 1];
    zeta[i] = part(s.lam, i) - b;
    if (part(s.mu, i) - zeta[i] != bb) throw std::logic_error("gamma produced inconsistent counts");
  }
  Strip out = make_strip(s.mu, zeta, s.lam);
  if (!is_rohs_triple(out)) throw std::logic_error("gamma produced a non-rohs");
  return out;
}

Strip gamma_inv(const Strip& s, int r) {
  if (!is_rohs_triple(s)) throw std::invalid_argument("gamma_inv needs an rohs");
  const int len = strip_size(TabKind::SSROT, s);
  if (r < len || (r - len) % 2) throw std::invalid_argument("gamma_inv: target length incompatible");
  const std::size_t n = std::max(s.mu.size(), s.lam.size()) + 1;
  std::vector<int> b(n + 1, 0), bb(n + 1, 0), m(n + 2, 0);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = part(s.lam, i) - part(s.nu, i);
    bb[i] = part(s.mu, i) - part(s.nu, i);
  }
  m[0] = (r - len) / 2;
  for (std::size_t i = 0; i < n; ++i) m[i + 1] = std::min(b[i], bb[i]);
  Partition nu(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int a = b[i] + m[i] - m[i + 1];
    const int ab = bb[i] + m[i] - m[i + 1];
    nu[i] = part(s.mu, i) + a;
    if (nu[i] - part(s.lam, i) != ab) throw std::logic_error("gamma_inv produced inconsistent counts");
  }
  Strip out = make_strip(s.mu, nu, s.lam);
  if (!is_ohs_triple(out)) throw std::invalid_argument("gamma_inv: no ohs of that length");
  return out;
}

RowTensor phi_r(const OscTableau& t) {
  const Kind kind = row_kind(t.kind);
  RowTensor out;
  for (std::size_t i = t.strips.size(); i-- > 0;) {
    const Strip& s = t.strips[i];
    Row r{t.weight[i], t.kind == TabKind::SSROT ? rind(s, TabKind::SSROT) : rind(gamma(s), TabKind::SSROT)};
    validate_row(kind, r);
    out.push_back(r);
  }
  return out;
}

std::vector<Partition> std_seq(const Strip& s) {
  std::vector<Partition> seq{trimmed(s.mu)};
  for (Letter x : cind(s)) seq.push_back(move_cell(seq.back(), magnitude(x), is_barred(x) ? -1 : +1));
  return seq;
}

LetterTensor sp(const Strip& s) {
  Word w = cind(s);
  return LetterTensor(w.rbegin(), w.rend());
}

Partition fg_step(const Partition& mu_in, const Partition& lam_in, const Partition& zeta_in) {
  const Partition mu = trimmed(mu_in), lam = trimmed(lam_in), zeta = trimmed(zeta_in);
  if (!is_horizontal_strip(zeta, mu)) throw std::invalid_argument("fg_step: ζ/μ is not a horizontal strip");
  const int d = diff_size(lam, mu);
  if (d == 1 && contains(lam, mu)) {
    const int a = cell_column(lam, mu);
    for (int b = a; b >= 1; --b)
      if (can_add(zeta, b)) return move_cell(zeta, b, +1);
  } else if (d == -1 && contains(mu, lam)) {
    const int a = cell_column(mu, lam);
    for (int b = a; b <= part(zeta, 0); ++b)
      if (can_remove(zeta, b)) return move_cell(zeta, b, -1);
    throw std::logic_error("fg_step: no removable cell");
  }
  throw std::invalid_argument("fg_step: μ and λ must differ by one cell");
}

std::vector<Partition> fg_sequence(const std::vector<Partition>& seq, const Partition& zeta) {
  std::vector<Partition> out{trimmed(zeta)};
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) out.push_back(fg_step(seq[i], seq[i + 1], out.back()));
  return out;
}

OscTableau aug(const OscTableau& t, int r) {
  if (t.kind != TabKind::SSOT) throw std::invalid_argument("aug needs an SSOT");
  if (t.strips.empty()) throw std::invalid_argument("aug needs at least one strip");
  if (r < 0) throw std::invalid_argument("aug needs r ≥ 0");
  validate_tableau(t);
  const int p = part(t.strips[0].nu, 0), k = part(t.strips[0].lam, 0);
  OscTableau out{t.kind, {make_strip({}, {p + r}, {k + r})}, t.weight};
  out.weight[0] += r;
  if (t.strips.size() > 1) {
    auto seq = fg_sequence(glue_std(t.strips, 1), {k + r});
    auto rest = unglue(seq, std::vector<int>(t.weight.begin() + 1, t.weight.end()));
    out.strips.insert(out.strips.end(), rest.begin(), rest.end());
  }
  validate_tableau(out);
  return out;
}

OscTableau aug_by_hw(const OscTableau& t, int r) {
  if (t.kind != TabKind::SSOT || t.strips.empty()) throw std::invalid_argument("aug needs a nonempty SSOT");
  ColumnTensor b = phi_c(t);
  const int k = part(t.strips[0].lam, 0);
  Word top;
  for (int i = 1; i <= k + r; ++i) top.push_back(i);
  b.back() = Column{b.back().cap + r, top};
  const auto words = column_words(b);
  const LetterTensor flat = flatten(words, Reading::Column);
  const LetterCrystal lc{LetterCrystal::Type::B, max_index(flat) + static_cast<int>(flat.size()) + 2};
  b = with_words(b, words_hw(lc, words, Reading::Column));
  return phi_c_inverse(TabKind::SSOT, b);
}

OscTableau deaug_last_row(const OscTableau& t) {
  validate_tableau(t);
  const std::size_t n = t.strips.size();
  const Partition shape = shape_of(t);
  if (length_of(shape) > static_cast<int>(n) || n == 0) throw std::invalid_argument("deaug: shape longer than the chain");
  const int ln = part(shape, n - 1);
  if (ln == 0) return t;
  OscTableau out = t;
  auto dec = [&](Partition p, std::size_t row) {
    if (p.size() <= row) p.resize(row + 1, 0);
    p[row] -= ln;
    if (p[row] < 0) throw std::invalid_argument("deaug: strip too short in row " + std::to_string(row + 1));
    return trimmed(p);
  };
  const int p = part(t.strips[0].nu, 0), k = part(t.strips[0].lam, 0);
  out.strips[0] = make_strip({}, {p - ln}, {k - ln});
  out.weight[0] -= ln;
  for (std::size_t i = 1; i < n; ++i) {
    const Strip& s = t.strips[i];
    out.strips[i] = make_strip(dec(s.mu, i - 1), dec(s.nu, i), dec(s.lam, i));
  }
  validate_tableau(out);
  if (aug(out, ln) != t) throw std::invalid_argument("deaug: the chain is not in the image of Aug");
  return out;
}

OscTableau reshape_aug(const OscTableau& t, int r, const Partition& new_shape) {
  const OscTableau a = aug(t, r);
  const Partition tau = shape_of(a);
  const Partition target = trimmed(new_shape);
  const int r2 = size_of(tau) - size_of(target);
  if (r2 < 0) throw std::invalid_argument("reshape_aug: new shape too large");
  const int k = part(t.strips[0].lam, 0), p = part(t.strips[0].nu, 0);
  std::vector<Partition> out_seq;
  std::vector<Partition> tilde;
  if (a.strips.size() > 1) tilde = glue_std(a.strips, 1);
  else tilde = {a.strips[0].lam};
  std::vector<Partition> back(tilde.size());
  back.back() = target;
  for (std::size_t j = tilde.size() - 1; j-- > 0;) {
    const Partition& zeta = tilde[j];
    const Partition& eta = tilde[j + 1];
    const Partition& lam = back[j + 1];
    bool found = false;
    if (diff_size(eta, zeta) == 1) {
      const int a_col = cell_column(eta, zeta);
      for (int c = a_col; c <= part(lam, 0) && !found; ++c) {
        if (!can_remove(lam, c)) continue;
        Partition mu = move_cell(lam, c, -1);
        if (is_horizontal_strip(zeta, mu) && fg_step(mu, lam, zeta) == eta) {
          back[j] = mu;
          found = true;
        }
      }
    } else {
      const int a_col = cell_column(zeta, eta);
      for (int c = a_col; c >= 1 && !found; --c) {
        if (!can_add(lam, c)) continue;
        Partition mu = move_cell(lam, c, +1);
        if (is_horizontal_strip(zeta, mu) && fg_step(mu, lam, zeta) == eta) {
          back[j] = mu;
          found = true;
        }
      }
    }
    if (!found) throw std::invalid_argument("reshape_aug: incompatible shape");
  }
  const int k2 = k + r - r2;
  if (back.front() != trimmed(Partition{k2})) throw std::invalid_argument("reshape_aug: incompatible shape");
  OscTableau out{TabKind::SSOT, {make_strip({}, {p + r - r2}, {k2})}, t.weight};
  out.weight[0] = t.weight[0] + r - r2;
  if (out.weight[0] < 0 || k2 < 0) throw std::invalid_argument("reshape_aug: incompatible shape");
  if (a.strips.size() > 1) {
    auto rest = unglue(back, std::vector<int>(t.weight.begin() + 1, t.weight.end()));
    out.strips.insert(out.strips.end(), rest.begin(), rest.end());
  }
  validate_tableau(out);
  if (aug(out, r2) != a) throw std::invalid_argument("reshape_aug: incompatible shape");
  return out;
}

OscTableau iota_ssot(const OscTableau& t) {
  const std::size_t n = t.strips.size();
  OscTableau out = t;
  auto bump = [&](Partition p, std::size_t rows) {
    p.resize(std::max(p.size(), n), 0);
    for (std::size_t j = 0; j < rows; ++j) ++p[j];
    return trimmed(p);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Strip& s = t.strips[i];
    out.strips[i] = make_strip(bump(s.mu, i), bump(s.nu, i + 1), bump(s.lam, i + 1));
    ++out.weight[i];
  }
  validate_tableau(out);
  return out;
}

long kappa_count(char kind, const Partition& lam, const Partition& mu, int r, int bound2) {
  TabKind k;
  switch (kind) {
    case 'B': k = TabKind::GSSOT; break;
    case 'C': k = TabKind::SSOT; break;
    case 'D': k = TabKind::SSROT; break;
    default: throw std::invalid_argument(std::string("unknown kappa kind ") + kind);
  }
  if (!is_partition(lam) || !is_partition(mu)) return 0;
  const Partition target = trimmed(lam);
  long c = 0;
  for (const auto& s : strips_from(k, mu, r, bound2))
    if (s.lam == target) ++c;
  return c;
}

std::vector<int> flip_doubled(std::vector<int> lam, int g2) {
  if (!lam.empty()) lam[0] = g2 - lam[0];
  return lam;
}

std::string strip_to_string(const Strip& s) {
  return "(" + vec_to_string(s.mu) + "," + vec_to_string(s.nu) + "," + vec_to_string(s.lam) + ")";
}

std::string tableau_to_string(const OscTableau& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.strips.size(); ++i) {
    if (i) out += ", ";
    out += strip_to_string(t.strips[i]);
  }
  return out + ")";
}

}  // namespace krlab
