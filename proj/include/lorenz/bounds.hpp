#pragma once

#include <optional>
#include <string>

#include "lorenz/error.hpp"
#include "lorenz/parent.hpp"
#include "lorenz/word.hpp"

namespace lorenz {

// Volume of the regular ideal tetrahedron.
constexpr double kVTet = 1.0149416064096536;

// 12 * v_tet * (nbar^2 + 3 nbar + 2); holds for every modular link with trip
// number nbar, and for hyperbolic Lorenz links of that braid index.
inline double quadratic_bound(long long nbar) {
  if (nbar < 1) throw std::invalid_argument("nbar must be >= 1");
  double n = static_cast<double>(nbar);
  return 12.0 * kVTet * (n * n + 3.0 * n + 2.0);
}

// 8 * v_tet * iota, iota the self-intersection count of the projected link
// collection (parent link + trefoil + V-unknots).
inline double count_based_bound(long long iota) {
  if (iota < 0) throw std::invalid_argument("iota must be >= 0");
  return 8.0 * kVTet * static_cast<double>(iota);
}

// 8 * v_tet * (7n + 2) for knots x^{k_1}y^c ... x^{k_n}y^c whose x-exponents
// are strictly monotone around the cycle; absent otherwise.
inline std::optional<double> linear_bound(const ModularLink& link, std::string* note = nullptr) {
  auto miss = [&note](const char* why) -> std::optional<double> {
    if (note) *note = why;
    return std::nullopt;
  };
  if (link.components() != 1) return miss("not a knot");
  const int n = link.nbar();
  for (int i = 2; i <= n; ++i)
    if (link.l(i) != link.l(1)) return miss("y-exponents not constant");
  // Strict monotonicity of (k_1, ..., k_n) under some cyclic rotation.
  bool monotone = n == 1;
  for (int r = 0; r < n && !monotone; ++r) {
    bool inc = true, dec = true;
    for (int t = 1; t < n; ++t) {
      long long prev = link.k((r + t - 1) % n + 1);
      long long cur = link.k((r + t) % n + 1);
      inc = inc && prev < cur;
      dec = dec && prev > cur;
    }
    monotone = inc || dec;
  }
  if (!monotone) return miss("x-exponents not strictly monotone");
  if (note) *note = "monotone family x^{k_1}y^c...x^{k_n}y^c";
  return 8.0 * kVTet * (7.0 * n + 2.0);
}

struct BoundReport {
  long long nbar = 0;
  long long iota_total = 0;
  double quadratic = 0.0;
  double count_based = 0.0;
  std::optional<double> linear;
  std::string applicability_note;
};

// The quadratic/count-based bounds cover both the modular link complement and
// (by trivial filling of the trefoil cusp) the hyperbolic Lorenz link case.
inline BoundReport bound_report(const ModularLink& link) {
  BoundReport r;
  r.nbar = link.nbar();
  r.iota_total = total_iota(link);
  r.quadratic = quadratic_bound(r.nbar);
  r.count_based = count_based_bound(r.iota_total);
  std::string note;
  r.linear = linear_bound(link, &note);
  r.applicability_note =
      "upper bounds for the modular link complement; also valid for the Lorenz "
      "link complement when hyperbolic (" + note + ")";
  return r;
}

}  // namespace lorenz
