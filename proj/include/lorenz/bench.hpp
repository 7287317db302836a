#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "lorenz/bunch.hpp"
#include "lorenz/williams.hpp"
#include "lorenz/word.hpp"

namespace lorenz {

struct BenchRow {
  int nbar;
  long long scale;
  long long items_ordered_bunch;     // 2 * nbar, scale-independent
  long long items_ordered_williams;  // sum of all exponents
  double t_bunch_us;
  double t_williams_us;
};

namespace bench_detail {

inline ModularLink scaled(const ModularLink& link, long long scale) {
  std::vector<std::string> texts;
  for (const LorenzWord& w : link.words()) {
    std::string t;
    for (const Run& r : w.runs) {
      t.push_back(letter_char(r.letter));
      t += "^" + std::to_string(r.exponent * scale);
    }
    texts.push_back(std::move(t));
  }
  return parse_link(texts);
}

// Best-of-repeats timing of one call, in microseconds; the call is looped
// until the sample is long enough to be trustworthy.
template <typename F>
double time_us(F&& f, int repeats = 5) {
  using clock = std::chrono::steady_clock;
  double best = 1e30;
  for (int rep = 0; rep < repeats; ++rep) {
    int iters = 1;
    for (;;) {
      auto t0 = clock::now();
      for (int i = 0; i < iters; ++i) f();
      double us = std::chrono::duration<double, std::micro>(clock::now() - t0).count();
      if (us >= 2000.0 || iters >= 1 << 20) {
        best = std::min(best, us / iters);
        break;
      }
      iters *= 2;
    }
  }
  return best;
}

}  // namespace bench_detail

// Times the run-length bunch ordering against the letter-level lexicographic
// ordering across an exponent-scaling grid. The item counts alone already
// show the asymmetry: 2*nbar vs the sum of all exponents.
inline std::vector<BenchRow> run_bench(const ModularLink& base,
                                       const std::vector<long long>& scales = {1, 10, 100}) {
  std::vector<BenchRow> rows;
  for (long long scale : scales) {
    ModularLink link = bench_detail::scaled(base, scale);
    BenchRow row;
    row.nbar = link.nbar();
    row.scale = scale;
    row.items_ordered_bunch = 2LL * link.nbar();
    row.items_ordered_williams = 0;
    for (int i = 1; i <= link.nbar(); ++i)
      row.items_ordered_williams += link.k(i) + link.l(i);
    row.t_bunch_us = bench_detail::time_us([&link] {
      FullBunchOrders o = full_bunch_orders(link);
      (void)o;
    });
    row.t_williams_us = bench_detail::time_us([&link] {
      BranchOrder o = branch_order(link, WilliamsMode::NaiveLetters);
      (void)o;
    });
    rows.push_back(row);
  }
  return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string csv = "nbar,scale,items_ordered_bunch,items_ordered_williams,t_bunch_us,t_williams_us\n";
  char buf[64];
  for (const BenchRow& r : rows) {
    csv += std::to_string(r.nbar) + "," + std::to_string(r.scale) + "," +
           std::to_string(r.items_ordered_bunch) + "," + std::to_string(r.items_ordered_williams);
    std::snprintf(buf, sizeof(buf), ",%.3f,%.3f\n", r.t_bunch_us, r.t_williams_us);
    csv += buf;
  }
  return csv;
}

}  // namespace lorenz
