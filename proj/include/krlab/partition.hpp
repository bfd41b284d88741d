#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace krlab {

/// Weakly decreasing nonnegative integers; trailing zeros are insignificant.
using Partition = std::vector<int>;

inline Partition trimmed(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline int part(const Partition& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

inline int size_of(const std::vector<int>& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline int length_of(const Partition& p) {
  int l = 0;
  for (int x : p)
    if (x > 0) ++l;
  return l;
}

inline bool is_partition(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

inline bool same_partition(const Partition& a, const Partition& b) { return trimmed(a) == trimmed(b); }

inline Partition conjugate(const Partition& p) {
  Partition c;
  int m = p.empty() ? 0 : *std::max_element(p.begin(), p.end());
  for (int j = 1; j <= m; ++j) {
    int cnt = 0;
    for (int x : p)
      if (x >= j) ++cnt;
    c.push_back(cnt);
  }
  return c;
}

inline bool contains(const Partition& big, const Partition& small) {
  std::size_t n = std::max(big.size(), small.size());
  for (std::size_t i = 0; i < n; ++i)
    if (part(big, i) < part(small, i)) return false;
  return true;
}

/// big/small is a horizontal strip: small ⊆ big and at most one cell per column.
inline bool is_horizontal_strip(const Partition& big, const Partition& small) {
  if (!contains(big, small)) return false;
  std::size_t n = std::max(big.size(), small.size());
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (part(big, i + 1) > part(small, i)) return false;
  return true;
}

inline bool is_vertical_strip(const Partition& big, const Partition& small) {
  if (!contains(big, small)) return false;
  for (std::size_t i = 0; i < big.size(); ++i)
    if (part(big, i) - part(small, i) > 1) return false;
  return true;
}

/// (g-λ_n, ..., g-λ_1) for a length-n vector.
inline std::vector<int> oc(const std::vector<int>& lam, int g) {
  std::vector<int> r(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) r[i] = g - lam[lam.size() - 1 - i];
  return r;
}

/// (g-λ_1, ..., g-λ_n).
inline std::vector<int> oc_bar(const std::vector<int>& lam, int g) {
  std::vector<int> r(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) r[i] = g - lam[i];
  return r;
}

/// Σ (i-1) β_i with β the weakly decreasing rearrangement.
inline long weighted_norm(std::vector<int> a) {
  std::sort(a.begin(), a.end(), std::greater<int>());
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(i) * a[i];
  return s;
}

inline std::vector<int> flip(std::vector<int> lam, int g) {
  if (!lam.empty()) lam[0] = 2 * g - lam[0];
  return lam;
}

/// Partitions of `total` with at most `max_len` parts, each at most `max_part`,
/// in reverse lexicographic order, padded with zeros to `max_len`.
inline std::vector<Partition> partitions_of(int total, int max_len, int max_part) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int cap) {
    if (rem == 0) {
      Partition p = cur;
      p.resize(max_len, 0);
      out.push_back(p);
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int x = std::min(rem, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(rem - x, x);
      cur.pop_back();
    }
  };
  if (total >= 0) rec(total, max_part);
  return out;
}

/// All partitions inside the max_len × max_part box, padded to max_len.
inline std::vector<Partition> partitions_in_box(int max_len, int max_part) {
  std::vector<Partition> out;
  for (int t = 0; t <= max_len * max_part; ++t) {
    auto ps = partitions_of(t, max_len, max_part);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

/// All ν ⊇ κ with ν/κ a horizontal strip of `k` cells, ℓ(ν) ≤ max_len and
/// ν_1 ≤ max_part; each result padded to max_len.
inline std::vector<Partition> add_horizontal_strips(const Partition& kappa, int k, int max_len, int max_part) {
  std::vector<Partition> out;
  if (length_of(kappa) > max_len || part(kappa, 0) > max_part) return out;
  Partition cur(max_len, 0);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == max_len) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    int lo = part(kappa, i);
    int hi = i == 0 ? max_part : part(kappa, i - 1);
    hi = std::min(hi, lo + rem);
    for (int v = lo; v <= hi; ++v) {
      cur[i] = v;
      rec(i + 1, rem - (v - lo));
    }
  };
  if (k >= 0) rec(0, k);
  return out;
}

/// All ν ⊆ κ with κ/ν a horizontal strip of `k` cells, padded to κ's length.
inline std::vector<Partition> remove_horizontal_strips(const Partition& kappa, int k) {
  std::vector<Partition> out;
  const int n = static_cast<int>(kappa.size());
  Partition cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == n) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    int hi = kappa[i];
    int lo = std::max(part(kappa, i + 1), hi - rem);
    for (int v = hi; v >= lo; --v) {
      cur[i] = v;
      rec(i + 1, rem - (hi - v));
    }
  };
  if (k >= 0) rec(0, k);
  return out;
}

inline std::string vec_to_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace krlab
