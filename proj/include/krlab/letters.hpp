#pragma once

#include <climits>
#include <string>
#include <vector>

namespace krlab {

/// m > 0 is the unbarred letter m, -m is \bar{m}, 0 is the zero letter,
/// kEmpty is the empty symbol ∅.
using Letter = int;
using Word = std::vector<Letter>;

inline constexpr Letter kEmpty = INT_MIN;

/// Position in the order ∅ ≺ 1 ≺ 2 ≺ ... ≺ 0 ≺ ... ≺ \bar{2} ≺ \bar{1}.
inline long rank(Letter x) {
  constexpr long kMid = 1L << 40;
  if (x == kEmpty) return -1;
  if (x > 0) return x;
  if (x == 0) return kMid;
  return 2 * kMid + x;
}

inline bool prec(Letter a, Letter b) { return rank(a) < rank(b); }

inline int magnitude(Letter x) { return x < 0 ? -x : x; }
inline bool is_barred(Letter x) { return x < 0 && x != kEmpty; }
inline Letter bar(Letter x) { return -x; }

/// Sorts a word in ≺ order.
Word sorted_word(Word w);

Letter parse_letter(const std::string& s);
std::string letter_to_string(Letter x);

/// Comma-separated letters; "[]" is the empty word.
Word parse_word(const std::string& s);
std::string word_to_string(const Word& w);

/// Tensor factors separated by '|' or "⊗", e.g. "2,4,-2 | 1".
std::vector<Word> parse_tensor(const std::string& s);
std::string tensor_to_string(const std::vector<Word>& t);

/// Count of letters in w strictly ≺ x.
int count_below(const Word& w, Letter x);

/// Column-word admissibility: for every i with i, \bar{i} ∈ w,
/// #{c ≺ i} + #{\bar{i} ≺ c} < i - 1.
bool is_admissible(const Word& w);

/// Repeatedly deletes the worst offending pair i, \bar{i}.
Word red(const Word& w);

/// The unique strict word of length |w| + 2r whose reduction is w.
Word unred(const Word& w, int r);

}  // namespace krlab
