#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "krlab/crystal.hpp"
#include "krlab/kr_row.hpp"

using namespace krlab;

namespace {

// All rows of B^{1,s}(kind) with letters of magnitude ≤ n (no 0).
std::vector<Row> rows(Kind kind, int s, int n) {
  std::vector<Letter> alphabet;
  for (int i = 1; i <= n; ++i) alphabet.push_back(i);
  for (int i = n; i >= 1; --i) alphabet.push_back(-i);
  std::vector<Row> out;
  std::vector<Word> cur{{}};
  for (int len = 0; len <= s; ++len) {
    for (const auto& w : cur) {
      Row r{s, w};
      try {
        validate_row(kind, r);
        out.push_back(r);
      } catch (const std::invalid_argument&) {
      }
    }
    std::vector<Word> next;
    for (const auto& w : cur) {
      std::size_t start = 0;
      if (!w.empty())
        start = static_cast<std::size_t>(std::find(alphabet.begin(), alphabet.end(), w.back()) - alphabet.begin());
      for (std::size_t k = start; k < alphabet.size(); ++k) {
        Word x = w;
        x.push_back(alphabet[k]);
        next.push_back(x);
      }
    }
    cur = next;
  }
  return out;
}

std::vector<int> weight_of(const RowTensor& b, int n) {
  std::vector<Word> ws;
  for (const auto& r : b) ws.push_back(r.word);
  return tensor_weight(flatten(ws, Reading::Row), n);
}

const Kind kAllKinds[] = {Kind::HDomino, Kind::Box, Kind::VDomino};

}  // namespace

TEST_CASE("row epsilon_0 closed forms") {
  CHECK_THROWS(validate_row(Kind::HDomino, {3, {1, 1}}));
  CHECK(eps0_tensor(Kind::Box, {{3, {1, -1}}, {3, {1, 1}}}) == 5);
  CHECK(eps0_row(Kind::HDomino, {3, {2, 3, 3}}) == 0);
  CHECK(eps0_row(Kind::Box, {3, {2, 3, 3}}) == 0);
  CHECK(eps0_row(Kind::VDomino, {2, {1, -1}}) == 1);
  CHECK(phi0_row(Kind::VDomino, {2, {1, -1}}) == 1);
}

TEST_CASE("row e_0 and f_0 satisfy the crystal axioms") {
  for (Kind kind : kAllKinds) {
    RowCrystal rc{kind, 4};
    const std::map<Kind, std::vector<int>> alpha0{
        {Kind::HDomino, {-2, 0}}, {Kind::Box, {-1, 0}}, {Kind::VDomino, {-1, -1}}};
    for (int s = 1; s <= 3; ++s)
      for (const auto& r : rows(kind, s, 4)) {
        const int e = rc.eps(0, r);
        CHECK(rc.phi(0, r) - e == pairing0_row(kind, r));
        Row cur = r;
        for (int k = 0; k < e; ++k) {
          auto up = rc.e(0, cur);
          REQUIRE(up);
          CHECK(rc.eps(0, *up) == rc.eps(0, cur) - 1);
          auto back = rc.f(0, *up);
          REQUIRE(back);
          CHECK(*back == cur);
          auto dw = weight_of({*up}, 4);
          auto w0 = weight_of({cur}, 4);
          CHECK(dw[0] - w0[0] == alpha0.at(kind)[0]);
          CHECK(dw[1] - w0[1] == alpha0.at(kind)[1]);
          cur = *up;
        }
        CHECK_FALSE(rc.e(0, cur));
      }
  }
}

TEST_CASE("row R-matrix") {
  for (Kind kind : kAllKinds) {
    for (int s = 2; s <= 3; ++s) {
      const int N = 4;
      RowCrystal rc{kind, N};
      auto anchor = r_matrix_row(kind, {s, Word(s, 1)}, {1, {1}}, N);
      CHECK(anchor.first == Row{1, {1}});
      CHECK(anchor.second == Row{s, Word(s, 1)});
      std::set<std::pair<Row, Row>> images;
      int count = 0;
      for (const auto& u : rows(kind, s, N))
        for (const auto& c : rows(kind, 1, N)) {
          auto [c2, u2] = r_matrix_row(kind, u, c, N);
          ++count;
          images.insert({c2, u2});
          CHECK(rc.eps(0, RowTensor{u, c}) == rc.eps(0, RowTensor{c2, u2}));
          CHECK(rc.phi(0, RowTensor{u, c}) == rc.phi(0, RowTensor{c2, u2}));
          for (int i = 0; i <= N; ++i) {
            auto a = rc.e(i, RowTensor{u, c});
            auto b = rc.e(i, RowTensor{c2, u2});
            REQUIRE(a.has_value() == b.has_value());
            if (a) {
              auto [c3, u3] = r_matrix_row(kind, (*a)[0], (*a)[1], N);
              CHECK(RowTensor{c3, u3} == *b);
            }
          }
        }
      CHECK(static_cast<int>(images.size()) == count);
    }
  }
  auto st = row_r_stats();
  MESSAGE("row R: ", st.by_hw, " by highest weight matching, ", st.by_bfs, " by BFS");
}

TEST_CASE("row R-matrix: highest weight matching agrees with affine BFS") {
  for (Kind kind : kAllKinds) {
    const int N = 4, s = 2;
    for (const auto& u : rows(kind, s, 3))
      for (const auto& c : rows(kind, 1, 3)) CHECK(r_matrix_row(kind, u, c, N) == r_matrix_row_bfs(kind, u, c, N));
  }
}

TEST_CASE("row R-matrix: Yang-Baxter and rank stability") {
  for (Kind kind : kAllKinds) {
    const int s = 3, m = 2;
    for (const auto& u : rows(kind, s, m))
      for (const auto& c1 : rows(kind, 1, m))
        for (const auto& c2 : rows(kind, 1, m)) {
          // route A: R_12 R_23 R_12 ; route B: R_23 R_12 R_23 (R on B^{1,1}⊗B^{1,1} is the identity)
          auto [a1, ua] = r_matrix_row(kind, u, c1, m + 2);
          auto [a2, ua2] = r_matrix_row(kind, ua, c2, m + 2);
          auto [b1, ub] = r_matrix_row(kind, u, c1, m + 2);
          auto [b2, ub2] = r_matrix_row(kind, ub, c2, m + 2);
          CHECK(RowTensor{a1, a2, ua2} == RowTensor{b1, b2, ub2});
          CHECK(r_matrix_row(kind, u, c1, m + 2) == r_matrix_row(kind, u, c1, m + 3));
          CHECK(split_row(kind, {u, c1, c2}, m + 2) == split_row(kind, {u, c1, c2}, m + 3));
        }
  }
}

TEST_CASE("row splitting") {
  CHECK(split_row(Kind::HDomino, {{4, {1, 2, 3, 4}}}) == Chain{1, 2, 3, 4});
  CHECK(split_row(Kind::Box, {{3, {1, 2}}}) == Chain{kEmpty, 1, 2});
  CHECK(split_row(Kind::HDomino, {{3, {2}}}) == Chain{-1, 1, 2});

  std::mt19937 rng(5);
  for (Kind kind : kAllKinds) {
    LetterCrystal lc{classical_type(kind), 6};
    for (int trial = 0; trial < 100; ++trial) {
      RowTensor b;
      int total = 0;
      while (total < 6) {
        int s = 1 + static_cast<int>(rng() % 3);
        if (total + s > 6) break;
        auto pool = rows(kind, s, 3);
        b.push_back(pool[rng() % pool.size()]);
        total += s;
      }
      RowCrystal rc{kind, 6};
      Chain sb = split_row(kind, b, 6);
      Chain hw_then = split_row(kind, rc.highest_weight(b), 6);
      CHECK(highest_weight(lc, sb) == hw_then);
    }
  }
}

TEST_CASE("row energy") {
  for (Kind kind : kAllKinds) {
    for (std::vector<int> mu : {std::vector<int>{2, 1}, {2, 2}, {3, 1}}) {
      RowTensor ones;
      for (int s : mu) ones.push_back({s, Word(s, 1)});
      CHECK(energy_row(kind, ones) == 0);
      auto p0 = rows(kind, mu[0], 3), p1 = rows(kind, mu[1], 3);
      RowCrystal rc{kind, 5};
      for (const auto& x : p0)
        for (const auto& y : p1) {
          RowTensor b{x, y};
          const long d = energy_row(kind, b, 5);
          CHECK(d >= 0);
          for (int i = 1; i <= 3; ++i)
            if (auto fb = rc.f(i, b)) CHECK(energy_row(kind, *fb, 5) == d);
        }
    }
  }
}
