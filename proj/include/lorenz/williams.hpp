#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lorenz/bunch.hpp"
#include "lorenz/error.hpp"
#include "lorenz/word.hpp"

namespace lorenz {

// One letter of the expanded cyclic word of a component, stored in run form.
struct LetterPosition {
  int component_id;
  int run;            // index into the component word's run sequence
  long long offset;   // 0-based within the run, < exponent

  bool operator==(const LetterPosition&) const = default;
};

enum class WilliamsMode { NaiveLetters, RleRuns };

// All letter positions of the link sorted lexicographically by forward
// itinerary with x < y, plus the shift map (cyclically next letter).
struct BranchOrder {
  std::vector<LetterPosition> positions;           // sorted
  std::vector<std::size_t> shift;                  // rank -> rank of shifted position
};

namespace williams_detail {

inline Letter letter_at(const LorenzWord& w, const LetterPosition& p) {
  return w.runs[p.run].letter;
}

inline LetterPosition shifted(const LorenzWord& w, LetterPosition p) {
  if (p.offset + 1 < w.runs[p.run].exponent) {
    ++p.offset;
    return p;
  }
  p.offset = 0;
  p.run = (p.run + 1) % static_cast<int>(w.runs.size());
  return p;
}

// Run-by-run itinerary comparison, independent of the bunch comparator.
// Same-letter runs of different lengths decide: longer x-run is smaller,
// longer y-run is larger.
inline int compare_rle(const ModularLink& link, const LetterPosition& p, const LetterPosition& q) {
  const LorenzWord& wp = link.words()[p.component_id];
  const LorenzWord& wq = link.words()[q.component_id];
  int rp = p.run, rq = q.run;
  long long remp = wp.runs[rp].exponent - p.offset;
  long long remq = wq.runs[rq].exponent - q.offset;
  const int cap = 2 * static_cast<int>(wp.runs.size() + wq.runs.size()) + 2;
  for (int step = 0; step < cap; ++step) {
    Letter lp = wp.runs[rp].letter;
    Letter lq = wq.runs[rq].letter;
    if (lp != lq) return lp == Letter::X ? -1 : 1;
    if (remp != remq) {
      if (lp == Letter::X) return remp > remq ? -1 : 1;
      return remp < remq ? -1 : 1;
    }
    rp = (rp + 1) % static_cast<int>(wp.runs.size());
    rq = (rq + 1) % static_cast<int>(wq.runs.size());
    remp = wp.runs[rp].exponent;
    remq = wq.runs[rq].exponent;
  }
  throw Error(ErrorCode::TieDetected);
}

struct ExpandedWords {
  std::vector<std::string> letters;        // per component
  std::vector<std::vector<long long>> run_start;  // letter offset of each run
};

inline ExpandedWords expand(const ModularLink& link, long long cap) {
  long long total = 0;
  for (const LorenzWord& w : link.words()) total += w.letter_length();
  if (total > cap) throw Error(ErrorCode::CapExceeded, std::to_string(total) + " letters");
  ExpandedWords out;
  for (const LorenzWord& w : link.words()) {
    std::string s;
    std::vector<long long> starts;
    for (const Run& r : w.runs) {
      starts.push_back(static_cast<long long>(s.size()));
      s.append(static_cast<std::size_t>(r.exponent), letter_char(r.letter));
    }
    out.letters.push_back(std::move(s));
    out.run_start.push_back(std::move(starts));
  }
  return out;
}

inline int compare_naive(const ExpandedWords& ex, const LetterPosition& p, const LetterPosition& q) {
  const std::string& sp = ex.letters[p.component_id];
  const std::string& sq = ex.letters[q.component_id];
  const long long op = ex.run_start[p.component_id][p.run] + p.offset;
  const long long oq = ex.run_start[q.component_id][q.run] + q.offset;
  const long long lenp = static_cast<long long>(sp.size());
  const long long lenq = static_cast<long long>(sq.size());
  for (long long t = 0; t < lenp + lenq; ++t) {
    char a = sp[static_cast<std::size_t>((op + t) % lenp)];
    char b = sq[static_cast<std::size_t>((oq + t) % lenq)];
    if (a != b) return a < b ? -1 : 1;
  }
  throw Error(ErrorCode::TieDetected);
}

inline std::vector<LetterPosition> all_positions(const ModularLink& link, long long cap) {
  long long total = 0;
  for (const LorenzWord& w : link.words()) total += w.letter_length();
  if (total > cap) throw Error(ErrorCode::CapExceeded, std::to_string(total) + " letters");
  std::vector<LetterPosition> ps;
  ps.reserve(static_cast<std::size_t>(total));
  for (int c = 0; c < link.components(); ++c) {
    const LorenzWord& w = link.words()[c];
    for (int r = 0; r < static_cast<int>(w.runs.size()); ++r)
      for (long long off = 0; off < w.runs[r].exponent; ++off)
        ps.push_back(LetterPosition{c, r, off});
  }
  return ps;
}

}  // namespace williams_detail

constexpr long long kDefaultLetterCap = 1'000'000;

inline BranchOrder branch_order(const ModularLink& link, WilliamsMode mode,
                                long long letter_cap = kDefaultLetterCap) {
  using namespace williams_detail;
  std::vector<LetterPosition> ps = all_positions(link, letter_cap);

  if (mode == WilliamsMode::NaiveLetters) {
    ExpandedWords ex = expand(link, letter_cap);
    std::sort(ps.begin(), ps.end(), [&](const LetterPosition& a, const LetterPosition& b) {
      return compare_naive(ex, a, b) < 0;
    });
  } else {
    std::sort(ps.begin(), ps.end(), [&](const LetterPosition& a, const LetterPosition& b) {
      return compare_rle(link, a, b) < 0;
    });
  }

  BranchOrder out;
  out.positions = std::move(ps);
  // Rank lookup by (component, run, offset).
  std::vector<std::pair<LetterPosition, std::size_t>> ranked;
  ranked.reserve(out.positions.size());
  for (std::size_t r = 0; r < out.positions.size(); ++r) ranked.emplace_back(out.positions[r], r);
  auto canonical = [](const LetterPosition& p) {
    return std::tuple(p.component_id, p.run, p.offset);
  };
  std::sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
    return canonical(a.first) < canonical(b.first);
  });
  auto rank_of = [&](const LetterPosition& p) {
    auto it = std::lower_bound(ranked.begin(), ranked.end(), p, [&](const auto& e, const LetterPosition& v) {
      return canonical(e.first) < canonical(v);
    });
    return it->second;
  };
  out.shift.resize(out.positions.size());
  for (std::size_t r = 0; r < out.positions.size(); ++r) {
    const LetterPosition& p = out.positions[r];
    out.shift[r] = rank_of(shifted(link.words()[p.component_id], p));
  }
  return out;
}

// pi(rank of p) = rank of shift(p); one cycle per link component.
inline std::vector<std::size_t> lorenz_permutation(const ModularLink& link,
                                                   WilliamsMode mode = WilliamsMode::RleRuns,
                                                   long long letter_cap = kDefaultLetterCap) {
  return branch_order(link, mode, letter_cap).shift;
}

struct VerificationReport {
  bool pass = true;
  std::string detail;  // first mismatch when pass is false
};

// Checks a template embedding against the lexicographic branch order:
// (a) used-slot sequence equals the sorted letter positions under the
//     position <-> turn bijection,
// (b) each position's interval equals +/- its leading-run length,
// (c) bunch member sets are exactly {k_i >= u} / {l_j >= v}.
inline VerificationReport verify_against_bunch(const ModularLink& link, const TemplateEmbedding& emb,
                                               WilliamsMode mode = WilliamsMode::NaiveLetters,
                                               long long letter_cap = kDefaultLetterCap) {
  if (emb.link_text != link.canonical_text())
    throw Error(ErrorCode::MismatchedInput, emb.link_text);

  VerificationReport rep;
  auto fail = [&rep](std::string why) {
    if (rep.pass) {
      rep.pass = false;
      rep.detail = std::move(why);
    }
  };

  BranchOrder order = branch_order(link, mode, letter_cap);
  if (order.positions.size() != emb.used_slots.size()) {
    fail("position count " + std::to_string(order.positions.size()) + " != used slots " +
         std::to_string(emb.used_slots.size()));
    return rep;
  }

  for (std::size_t t = 0; t < order.positions.size(); ++t) {
    const LetterPosition& p = order.positions[t];
    const LorenzWord& w = link.words()[p.component_id];
    const Run& run = w.runs[p.run];
    // Global label of the base holding this letter.
    int local = p.run / 2 + 1;
    int global = link.component_start(p.component_id) + local;
    BaseLabel expect_label{run.letter, global};
    long long remaining = run.exponent - p.offset;  // leading-run length of the itinerary
    long long expect_interval = run.letter == Letter::X ? -remaining : remaining;

    const Slot& s = emb.used_slots[t];
    if (s.label != expect_label || s.interval != expect_interval) {
      fail("slot " + std::to_string(t) + ": got (" + std::to_string(s.interval) + ", " +
           to_string(s.label) + "), oracle expects (" + std::to_string(expect_interval) + ", " +
           to_string(expect_label) + ")");
      return rep;
    }
  }

  for (const auto& [interval, bunch] : emb.bunches) {
    std::vector<int> members, expected;
    for (const BunchEntry& e : bunch) members.push_back(e.label.index);
    for (int i = 1; i <= link.nbar(); ++i) {
      long long e = interval < 0 ? link.k(i) : link.l(i);
      if (e >= (interval < 0 ? -interval : interval)) expected.push_back(i);
    }
    std::vector<int> sorted_members = members;
    std::sort(sorted_members.begin(), sorted_members.end());
    if (sorted_members != expected) {
      fail("bunch " + std::to_string(interval) + " member set mismatch");
      return rep;
    }
  }
  return rep;
}

}  // namespace lorenz
