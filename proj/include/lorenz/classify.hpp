#pragma once

#include <set>
#include <string>
#include <vector>

#include "lorenz/word.hpp"

namespace lorenz {

// Per component: labels grouped by exponent value. The x-tuple runs over the
// distinct x-exponents of the whole link in descending order (d_#k, ..., d_1),
// the y-tuple over distinct y-exponents ascending (a_1, ..., a_#l). Groups
// absent from a component are empty sets.
struct BaseOrder {
  std::vector<long long> x_exponents;  // descending distinct values
  std::vector<long long> y_exponents;  // ascending distinct values
  // component -> tuple position -> set of labels
  std::vector<std::vector<std::vector<BaseLabel>>> x_tuples;
  std::vector<std::vector<std::vector<BaseLabel>>> y_tuples;
};

inline std::vector<long long> distinct_x_exponents_desc(const ModularLink& link) {
  std::set<long long> s;
  for (int i = 1; i <= link.nbar(); ++i) s.insert(link.k(i));
  return {s.rbegin(), s.rend()};
}

inline std::vector<long long> distinct_y_exponents_asc(const ModularLink& link) {
  std::set<long long> s;
  for (int i = 1; i <= link.nbar(); ++i) s.insert(link.l(i));
  return {s.begin(), s.end()};
}

inline BaseOrder base_orders(const ModularLink& link) {
  BaseOrder out;
  out.x_exponents = distinct_x_exponents_desc(link);
  out.y_exponents = distinct_y_exponents_asc(link);
  for (int c = 0; c < link.components(); ++c) {
    std::vector<std::vector<BaseLabel>> xt(out.x_exponents.size());
    std::vector<std::vector<BaseLabel>> yt(out.y_exponents.size());
    int start = link.component_start(c);
    for (int j = 1; j <= link.component_period(c); ++j) {
      int g = start + j;
      for (std::size_t p = 0; p < out.x_exponents.size(); ++p)
        if (link.k(g) == out.x_exponents[p]) xt[p].push_back(BaseLabel{Letter::X, g});
      for (std::size_t p = 0; p < out.y_exponents.size(); ++p)
        if (link.l(g) == out.y_exponents[p]) yt[p].push_back(BaseLabel{Letter::Y, g});
    }
    out.x_tuples.push_back(std::move(xt));
    out.y_tuples.push_back(std::move(yt));
  }
  return out;
}

// Canonical byte string deciding the classification: equal keys iff the links
// have the same base orders up to word reordering and cyclic relabelling.
// Only exponent ranks enter the key, never magnitudes: each base becomes the
// pair (rank of k among distinct x-exponents descending, rank of l among
// distinct y-exponents ascending); each component's pair sequence is reduced
// to its least cyclic rotation and components are sorted.
using ClassKey = std::string;

inline ClassKey class_key(const ModularLink& link) {
  std::vector<long long> xd = distinct_x_exponents_desc(link);
  std::vector<long long> ya = distinct_y_exponents_asc(link);
  auto xrank = [&xd](long long v) {
    return static_cast<int>(std::lower_bound(xd.rbegin(), xd.rend(), v) - xd.rbegin());
  };
  auto yrank = [&ya](long long v) {
    return static_cast<int>(std::lower_bound(ya.begin(), ya.end(), v) - ya.begin());
  };

  std::vector<std::string> parts;
  for (int c = 0; c < link.components(); ++c) {
    const int n = link.component_period(c);
    const int start = link.component_start(c);
    std::vector<std::pair<int, int>> seq;
    for (int j = 1; j <= n; ++j) {
      int g = start + j;
      // xrank measured from the largest exponent: rank 0 = d_#k.
      seq.emplace_back(static_cast<int>(xd.size()) - 1 - xrank(link.k(g)), yrank(link.l(g)));
    }
    // Least cyclic rotation of the pair sequence.
    std::vector<std::pair<int, int>> best = seq;
    for (int r = 1; r < n; ++r) {
      std::vector<std::pair<int, int>> cand;
      for (int t = 0; t < n; ++t) cand.push_back(seq[(t + r) % n]);
      if (cand < best) best = cand;
    }
    std::string enc = "n" + std::to_string(n) + ":";
    for (auto [a, b] : best) enc += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    parts.push_back(std::move(enc));
  }
  std::sort(parts.begin(), parts.end());
  std::string key = "x#" + std::to_string(xd.size()) + ";y#" + std::to_string(ya.size()) + ";";
  for (const std::string& p : parts) key += p + ";";
  return key;
}

inline bool same_class(const ModularLink& a, const ModularLink& b) {
  return class_key(a) == class_key(b);
}

}  // namespace lorenz
