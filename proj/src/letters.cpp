#include "krlab/letters.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace krlab {

Word sorted_word(Word w) {
  std::sort(w.begin(), w.end(), [](Letter a, Letter b) { return prec(a, b); });
  return w;
}

Letter parse_letter(const std::string& s_in) {
  std::string s;
  for (char c : s_in)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "[]" || s == "e" || s == "∅") return kEmpty;
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad letter '" + s_in + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("bad letter '" + s_in + "'");
  return v;
}

std::string letter_to_string(Letter x) { return x == kEmpty ? "[]" : std::to_string(x); }

Word parse_word(const std::string& s) {
  Word w;
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty() || t == "[]") return w;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) w.push_back(parse_letter(item));
  return w;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "[]";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += letter_to_string(w[i]);
  }
  return s;
}

std::vector<Word> parse_tensor(const std::string& s_in) {
  std::string s = s_in;
  const std::string otimes = "⊗";
  for (std::size_t p; (p = s.find(otimes)) != std::string::npos;) s.replace(p, otimes.size(), "|");
  std::vector<Word> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '|')) out.push_back(parse_word(item));
  return out;
}

std::string tensor_to_string(const std::vector<Word>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += " | ";
    s += word_to_string(t[i]);
  }
  return s;
}

int count_below(const Word& w, Letter x) {
  int c = 0;
  for (Letter y : w)
    if (prec(y, x)) ++c;
  return c;
}

namespace {

int count_above(const Word& w, Letter x) {
  int c = 0;
  for (Letter y : w)
    if (prec(x, y)) ++c;
  return c;
}

bool contains_letter(const Word& w, Letter x) { return std::find(w.begin(), w.end(), x) != w.end(); }

}  // namespace

bool is_admissible(const Word& w) {
  for (Letter x : w) {
    if (x <= 0) continue;
    if (!contains_letter(w, -x)) continue;
    if (count_below(w, x) + count_above(w, -x) >= x - 1) return false;
  }
  return true;
}

Word red(const Word& w_in) {
  Word w = sorted_word(w_in);
  while (true) {
    int best_i = 0;
    long best = 0;
    for (Letter x : w) {
      if (x <= 0 || !contains_letter(w, -x)) continue;
      if (count_below(w, x) + count_above(w, -x) < x - 1) continue;
      long score = count_below(w, x) + count_above(w, -x) - x;
      if (best_i == 0 || score > best || (score == best && x < best_i)) {
        best_i = x;
        best = score;
      }
    }
    if (best_i == 0) return w;
    w.erase(std::find(w.begin(), w.end(), best_i));
    w.erase(std::find(w.begin(), w.end(), -best_i));
  }
}

Word unred(const Word& w_in, int r) {
  Word w = sorted_word(w_in);
  if (r == 0) return w;
  if (!is_admissible(w)) throw std::invalid_argument("unred needs an admissible word");
  int top = 0;
  for (Letter x : w) top = std::max(top, magnitude(x));
  const int limit = top + 2 * r + 1;
  std::vector<int> free;
  for (int i = 1; i <= limit; ++i)
    if (!contains_letter(w, i) && !contains_letter(w, -i)) free.push_back(i);
  std::vector<Word> found;
  Word pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(pick.size()) == r) {
      Word v = w;
      for (int i : pick) {
        v.push_back(i);
        v.push_back(-i);
      }
      if (red(v) == w) found.push_back(sorted_word(v));
      return;
    }
    for (std::size_t k = start; k < free.size(); ++k) {
      pick.push_back(free[k]);
      rec(k + 1);
      pick.pop_back();
    }
  };
  rec(0);
  if (found.size() != 1) throw std::logic_error("unred: expected a unique preimage");
  return found.front();
}

}  // namespace krlab
