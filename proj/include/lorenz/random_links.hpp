#pragma once

#include <random>
#include <string>
#include <vector>

#include "lorenz/error.hpp"
#include "lorenz/word.hpp"

namespace lorenz {

// Seed-reproducible random link generator: component count and trip number
// uniform within budget, exponents uniform in [1, max_exp], rejection-sampled
// until the words are primitive and pairwise distinct as cyclic classes.
class RandomLinkGenerator {
 public:
  RandomLinkGenerator(int max_trip, long long max_exp, std::uint64_t seed)
      : max_trip_(max_trip), max_exp_(max_exp), rng_(seed) {}

  ModularLink next() {
    for (;;) {
      int c = std::uniform_int_distribution<int>(1, std::min(3, max_trip_))(rng_);
      int nbar = std::uniform_int_distribution<int>(c, max_trip_)(rng_);
      // Random composition of nbar into c positive parts.
      std::vector<int> periods(c, 1);
      for (int extra = nbar - c; extra > 0; --extra)
        ++periods[std::uniform_int_distribution<int>(0, c - 1)(rng_)];

      std::vector<std::string> texts;
      for (int p : periods) texts.push_back(random_word_text(p));
      try {
        return parse_link(texts);
      } catch (const Error&) {
        continue;  // periodic word or duplicate class; resample
      }
    }
  }

 private:
  std::string random_word_text(int period) {
    std::uniform_int_distribution<long long> exp(1, max_exp_);
    std::string t;
    for (int i = 0; i < period; ++i) {
      t += "x^" + std::to_string(exp(rng_));
      t += "y^" + std::to_string(exp(rng_));
    }
    return t;
  }

  int max_trip_;
  long long max_exp_;
  std::mt19937_64 rng_;
};

}  // namespace lorenz
