#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "lorenz/error.hpp"

namespace lorenz {

enum class Letter : std::uint8_t { X, Y };

inline Letter other(Letter a) { return a == Letter::X ? Letter::Y : Letter::X; }
inline char letter_char(Letter a) { return a == Letter::X ? 'x' : 'y'; }

// One maximal same-letter block x^k or y^l of a code word.
struct Run {
  Letter letter;
  long long exponent;  // >= 1

  bool operator==(const Run&) const = default;
};

namespace detail {

constexpr long long kMaxExponent = std::numeric_limits<long long>::max();

inline long long checked_add(long long a, long long b) {
  if (a > kMaxExponent - b) throw Error(ErrorCode::ExponentOverflow);
  return a + b;
}

// Rotation of a run sequence by whole (X,Y) pairs.
inline std::vector<Run> rotate_pairs(const std::vector<Run>& runs, std::size_t pairs) {
  std::vector<Run> out;
  out.reserve(runs.size());
  const std::size_t off = 2 * pairs;
  for (std::size_t t = 0; t < runs.size(); ++t)
    out.push_back(runs[(t + off) % runs.size()]);
  return out;
}

inline std::vector<long long> exponent_tuple(const std::vector<Run>& runs) {
  std::vector<long long> t;
  t.reserve(runs.size());
  for (const Run& r : runs) t.push_back(r.exponent);
  return t;
}

}  // namespace detail

// A primitive positive cyclic word x^{k1}y^{l1}...x^{kn}y^{ln}, stored in
// normalized rotation: k1 is a maximal x-exponent and the exponent tuple
// (k1,l1,...,kn,ln) is lexicographically least among rotations attaining it.
struct LorenzWord {
  std::vector<Run> runs;  // alternating, even length, starts with X
  int component_id = 0;

  int period() const { return static_cast<int>(runs.size() / 2); }

  long long k(int i) const { return runs[2 * (i - 1)].exponent; }      // i in [1,n]
  long long l(int i) const { return runs[2 * (i - 1) + 1].exponent; }  // i in [1,n]

  long long letter_length() const {
    long long total = 0;
    for (const Run& r : runs) total = detail::checked_add(total, r.exponent);
    return total;
  }

  bool same_runs(const LorenzWord& o) const { return runs == o.runs; }
};

inline std::string render(const LorenzWord& w) {
  std::string out;
  for (const Run& r : w.runs) {
    out.push_back(letter_char(r.letter));
    if (r.exponent != 1) {
      out.push_back('^');
      out += std::to_string(r.exponent);
    }
  }
  return out;
}

// Parses a single word per the grammar: tokens `x` or `y`, each optionally
// followed by `^` and a decimal integer >= 1; whitespace ignored.
inline LorenzWord parse_word(std::string_view text) {
  std::vector<Run> runs;
  std::size_t pos = 0;
  auto push = [&runs](Letter letter, long long exponent) {
    if (!runs.empty() && runs.back().letter == letter)
      runs.back().exponent = detail::checked_add(runs.back().exponent, exponent);
    else
      runs.push_back(Run{letter, exponent});
  };
  while (pos < text.size()) {
    char c = text[pos];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++pos;
      continue;
    }
    Letter letter;
    if (c == 'x' || c == 'X')
      letter = Letter::X;
    else if (c == 'y' || c == 'Y')
      letter = Letter::Y;
    else
      throw Error(ErrorCode::SyntaxError, "unexpected character at byte " + std::to_string(pos));
    ++pos;
    long long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      std::size_t caret = pos++;
      while (pos < text.size() &&
             (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
        ++pos;
      if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
        throw Error(ErrorCode::SyntaxError, "expected integer after '^' at byte " + std::to_string(caret));
      exponent = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        int d = text[pos] - '0';
        if (exponent > (detail::kMaxExponent - d) / 10) throw Error(ErrorCode::ExponentOverflow);
        exponent = exponent * 10 + d;
        ++pos;
      }
      if (exponent < 1)
        throw Error(ErrorCode::SyntaxError, "exponent must be >= 1 at byte " + std::to_string(caret));
    }
    push(letter, exponent);
  }

  if (runs.empty()) throw Error(ErrorCode::EmptyWord);
  if (runs.size() == 1) throw Error(ErrorCode::SingleLetterWord);

  // The word is cyclic: merge a same-letter wrap-around, then rotate to X-first.
  if (runs.front().letter == runs.back().letter) {
    runs.front().exponent = detail::checked_add(runs.front().exponent, runs.back().exponent);
    runs.pop_back();
    if (runs.size() == 1) throw Error(ErrorCode::SingleLetterWord);
  }
  if (runs.front().letter == Letter::Y) {
    std::rotate(runs.begin(), runs.begin() + 1, runs.end());
  }

  const std::size_t n = runs.size() / 2;
  // Primitivity on the run sequence: no proper divisor d of n may give a
  // cyclic period of 2d runs.
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t t = 0; t < runs.size() && periodic; ++t)
      periodic = runs[t] == runs[(t + 2 * d) % runs.size()];
    if (periodic) throw Error(ErrorCode::PeriodicWord);
  }

  // Normalize: maximal k1, then lexicographically least exponent tuple.
  long long kmax = 0;
  for (std::size_t i = 0; i < n; ++i) kmax = std::max(kmax, runs[2 * i].exponent);
  std::vector<Run> best;
  std::vector<long long> best_tuple;
  for (std::size_t r = 0; r < n; ++r) {
    if (runs[2 * r].exponent != kmax) continue;
    std::vector<Run> cand = detail::rotate_pairs(runs, r);
    std::vector<long long> tuple = detail::exponent_tuple(cand);
    if (best.empty() || tuple < best_tuple) {
      best = std::move(cand);
      best_tuple = std::move(tuple);
    }
  }

  LorenzWord w;
  w.runs = std::move(best);
  return w;
}

// A global base label x_i or y_i, i in [1, nbar], numbered consecutively
// across components in component order.
struct BaseLabel {
  Letter kind;
  int index;  // 1-based global subscript

  bool operator==(const BaseLabel&) const = default;
  auto operator<=>(const BaseLabel&) const = default;
};

inline std::string to_string(const BaseLabel& b) {
  return std::string(1, letter_char(b.kind)) + std::to_string(b.index);
}

// A finite set of distinct cyclic classes of code words with global base
// labels x_1..x_nbar / y_1..y_nbar assigned in component order.
class ModularLink {
 public:
  explicit ModularLink(std::vector<LorenzWord> words) : words_(std::move(words)) {
    kexp_.push_back(0);  // 1-based
    lexp_.push_back(0);
    comp_of_.push_back(-1);
    for (std::size_t c = 0; c < words_.size(); ++c) {
      words_[c].component_id = static_cast<int>(c);
      comp_start_.push_back(nbar_);
      comp_period_.push_back(words_[c].period());
      for (int i = 1; i <= words_[c].period(); ++i) {
        kexp_.push_back(words_[c].k(i));
        lexp_.push_back(words_[c].l(i));
        comp_of_.push_back(static_cast<int>(c));
        ++nbar_;
      }
    }
  }

  const std::vector<LorenzWord>& words() const { return words_; }
  int components() const { return static_cast<int>(words_.size()); }
  int nbar() const { return nbar_; }

  long long k(int i) const { check_index(i); return kexp_[i]; }
  long long l(int i) const { check_index(i); return lexp_[i]; }
  int component_of(int i) const { check_index(i); return comp_of_[i]; }
  int component_start(int c) const { return comp_start_[c]; }   // Sigma(c), 0-based offset
  int component_period(int c) const { return comp_period_[c]; }

  // Cyclically next base index within the same component.
  int successor_index(int i) const {
    check_index(i);
    int c = comp_of_[i];
    int s = comp_start_[c];
    return s + ((i - s) % comp_period_[c]) + 1;
  }
  int predecessor_index(int i) const {
    check_index(i);
    int c = comp_of_[i];
    int s = comp_start_[c];
    return s + ((i - s - 2 + comp_period_[c]) % comp_period_[c]) + 1;
  }

  long long max_x_exponent() const { return *std::max_element(kexp_.begin() + 1, kexp_.end()); }
  long long max_y_exponent() const { return *std::max_element(lexp_.begin() + 1, lexp_.end()); }

  std::string canonical_text() const {
    std::string out;
    for (std::size_t c = 0; c < words_.size(); ++c) {
      if (c) out.push_back(',');
      out += render(words_[c]);
    }
    return out;
  }

 private:
  void check_index(int i) const {
    if (i < 1 || i > nbar_) throw Error(ErrorCode::UnknownLabel, "base index " + std::to_string(i));
  }

  std::vector<LorenzWord> words_;
  int nbar_ = 0;
  std::vector<long long> kexp_, lexp_;
  std::vector<int> comp_of_;
  std::vector<int> comp_start_, comp_period_;
};

inline ModularLink parse_link(const std::vector<std::string>& texts) {
  if (texts.empty()) throw Error(ErrorCode::EmptyWord, "no words given");
  std::vector<LorenzWord> words;
  words.reserve(texts.size());
  for (const std::string& t : texts) words.push_back(parse_word(t));
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = a + 1; b < words.size(); ++b)
      if (words[a].same_runs(words[b]))
        throw Error(ErrorCode::DuplicateCyclicClass, render(words[a]));
  return ModularLink(std::move(words));
}

inline int trip_number(const ModularLink& link) { return link.nbar(); }

inline BaseLabel successor(const ModularLink& link, const BaseLabel& b) {
  return BaseLabel{b.kind, link.successor_index(b.index)};
}

}  // namespace lorenz
