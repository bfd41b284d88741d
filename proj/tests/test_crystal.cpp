#include <map>
#include <queue>
#include <random>
#include <set>

#include "doctest.h"
#include "krlab/crystal.hpp"
#include "krlab/letters.hpp"

using namespace krlab;

namespace {

std::vector<Word> strict_words(int max_letter, int max_len) {
  std::vector<Letter> alphabet;
  for (int i = 1; i <= max_letter; ++i) alphabet.push_back(i);
  for (int i = max_letter; i >= 1; --i) alphabet.push_back(-i);
  std::vector<Word> out;
  const int m = static_cast<int>(alphabet.size());
  for (int mask = 0; mask < (1 << m); ++mask) {
    if (__builtin_popcount(mask) > max_len) continue;
    Word w;
    for (int k = 0; k < m; ++k)
      if (mask >> k & 1) w.push_back(alphabet[k]);
    out.push_back(w);
  }
  return out;
}

int pairing(const LetterCrystal& c, int i, const std::vector<int>& wt) {
  if (i < c.N || c.N == 0) return wt[i - 1] - wt[i];
  return c.type == LetterCrystal::Type::B ? 2 * wt[i - 1] : wt[i - 1];
}

}  // namespace

TEST_CASE("letter order and syntax") {
  CHECK(prec(kEmpty, 1));
  CHECK(prec(1, 2));
  CHECK(prec(7, 0));
  CHECK(prec(0, -7));
  CHECK(prec(-3, -2));
  CHECK(prec(-2, -1));
  CHECK(parse_word("2,4,-2") == Word{2, 4, -2});
  CHECK(parse_word("[]").empty());
  CHECK(word_to_string({1, 2, -2}) == "1,2,-2");
  auto t = parse_tensor("2,4,-2 | 1");
  REQUIRE(t.size() == 2);
  CHECK(t[1] == Word{1});
  CHECK(parse_tensor("[] ⊗ 1,2")[0].empty());
}

TEST_CASE("admissibility") {
  CHECK_FALSE(is_admissible({1, -1}));
  CHECK_FALSE(is_admissible({1, 2, -2}));
  CHECK_FALSE(is_admissible({1, 3, -3, -2}));
  CHECK(is_admissible({2, -2}));
  CHECK(is_admissible({4, -4}));
  CHECK(is_admissible({}));
}

TEST_CASE("red and unred") {
  CHECK(red({1, -1}).empty());
  CHECK(red({1, 2, 3, -3}) == Word{1, 2});
  CHECK(red({1, 2, -2}) == Word{1});
  CHECK(red({1, 2, -1}) == Word{2});
  CHECK(red({2, -2}) == Word{2, -2});

  CHECK(unred({}, 0).empty());
  CHECK(unred({}, 1) == Word{1, -1});
  CHECK(unred({1, 2}, 1) == Word{1, 2, 3, -3});

  // brute-force oracle: every strict two-letter word reducing to ∅
  std::vector<Word> hits;
  for (const auto& w : strict_words(6, 2))
    if (w.size() == 2 && red(w).empty()) hits.push_back(w);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0] == Word{1, -1});

  for (const auto& w : strict_words(5, 10)) {
    if (!is_admissible(w)) {
      CHECK(is_admissible(red(w)));
      continue;
    }
    CHECK(red(w) == w);
    for (int r = 1; r <= 2; ++r) CHECK(red(unred(w, r)) == w);
  }
}

TEST_CASE("tensor rule golden") {
  LetterCrystal big;  // N sufficiently large
  auto b = tensor_e(big, 1, {-1, 2, 1});
  REQUIRE(b);
  CHECK(*b == LetterTensor{-2, 2, 1});
  CHECK_FALSE(tensor_e(big, 1, {2, 1}));
  CHECK(tensor_eps(big, 1, {1}) == 0);
  CHECK(tensor_phi(big, 1, {1}) == 1);
}

TEST_CASE("red commutes with classical operators") {
  LetterCrystal big;
  for (const auto& w : strict_words(5, 5)) {
    Word r = red(w);
    for (int i = 1; i <= 5; ++i) {
      auto a = words_e(big, i, {w}, Reading::Column);
      auto b = words_e(big, i, {r}, Reading::Column);
      REQUIRE(a.has_value() == b.has_value());
      if (a) CHECK(red((*a)[0]) == (*b)[0]);
      auto fa = words_f(big, i, {w}, Reading::Column);
      auto fb = words_f(big, i, {r}, Reading::Column);
      REQUIRE(fa.has_value() == fb.has_value());
      if (fa) CHECK(red((*fa)[0]) == (*fb)[0]);
    }
  }
}

TEST_CASE("crystal axioms on random tensors") {
  std::mt19937 rng(7);
  for (auto type : {LetterCrystal::Type::B, LetterCrystal::Type::C}) {
    LetterCrystal c{type, 4};
    std::vector<Letter> alphabet{1, 2, 3, 4, -4, -3, -2, -1};
    if (type == LetterCrystal::Type::B) alphabet.push_back(0);
    for (int trial = 0; trial < 400; ++trial) {
      LetterTensor b;
      int len = 1 + static_cast<int>(rng() % 5);
      for (int k = 0; k < len; ++k) b.push_back(alphabet[rng() % alphabet.size()]);
      auto wt = tensor_weight(b, 4);
      for (int i = 1; i <= 4; ++i) {
        CHECK(tensor_phi(c, i, b) - tensor_eps(c, i, b) == pairing(c, i, wt));
        if (auto up = tensor_e(c, i, b)) {
          auto back = tensor_f(c, i, *up);
          REQUIRE(back);
          CHECK(*back == b);
        }
      }
    }
  }
}

TEST_CASE("highest weight") {
  for (auto type : {LetterCrystal::Type::B, LetterCrystal::Type::C}) {
    LetterCrystal c{type, 9};
    auto hw = words_hw(c, {{9}, {1, 2}, {1, 2, 3}}, Reading::Column);
    CHECK(hw == std::vector<Word>{{4}, {1, 2}, {1, 2, 3}});
    CHECK(words_hw(c, hw, Reading::Column) == hw);

    // exhaustive e-search oracle
    std::vector<Word> start{{3, 4, 5, 6, -7}, {1, 2, 3}};
    LetterTensor flat = flatten(start, Reading::Column);
    std::set<LetterTensor> seen{flat};
    std::queue<LetterTensor> todo;
    todo.push(flat);
    std::set<LetterTensor> tops;
    while (!todo.empty()) {
      auto b = todo.front();
      todo.pop();
      bool any = false;
      for (int i = 1; i <= c.N; ++i)
        if (auto up = tensor_e(c, i, b)) {
          any = true;
          if (seen.insert(*up).second) todo.push(*up);
        }
      if (!any) tops.insert(b);
    }
    REQUIRE(tops.size() == 1);
    CHECK(highest_weight(c, flat) == *tops.begin());
  }
}
