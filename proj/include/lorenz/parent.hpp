#pragma once

#include <boost/rational.hpp>
#include <map>
#include <string>
#include <vector>

#include "lorenz/bunch.hpp"
#include "lorenz/error.hpp"
#include "lorenz/word.hpp"

namespace lorenz {

using Rational = boost::rational<long long>;

enum class AnnulusSide { XSide, YSide };

// One concentric annulus of the Seifert-fibred space, carrying a distinct
// exponent value d_j (XSide) or a_j (YSide).
struct Annulus {
  AnnulusSide side;
  long long exponent;

  bool operator==(const Annulus&) const = default;
};

enum class Region { TopLeft, BottomLeft, BottomRight, TopRight };

struct HSegment {
  BaseLabel label;
  int height;
  Rational left;
  Rational right;
};

struct VSegment {
  BaseLabel label;
  Rational abscissa;
  int bottom;
  int top;
};

struct Crossing {
  BaseLabel vertical;    // segment passing under or over at this point
  BaseLabel horizontal;
  Region region;
  bool vertical_over;    // false: the vertical strand goes under
};

// Rectilinear projection of the parent link. Blue x_sigma(s) horizontals sit
// at heights 1..nbar bottom-up, red y_tau(t) horizontals at 2nbar+1-t. Every
// abscissa is exact: coarse band +/-e for the annulus of exponent e, plus an
// in-group stagger r/(g+1).
struct ParentDiagram {
  int nbar = 0;
  FullBunchOrders orders;
  std::vector<HSegment> blue_h;  // per x_i, index i-1
  std::vector<HSegment> red_h;   // per y_i
  std::vector<VSegment> blue_v;  // per x_i, at B_i
  std::vector<VSegment> red_v;   // per y_i, at U_i = A_{i+1}
  std::vector<Crossing> crossings;
  std::map<long long, std::vector<BaseLabel>> v_unknots;  // y-exponent -> x-labels approaching A^y
  std::string link_text;
};

struct CrossingReport {
  long long top_left = 0;      // red x red, always zero
  long long bottom_left = 0;   // red vertical x blue horizontal
  long long bottom_right = 0;  // blue vertical x blue horizontal
  long long top_right = 0;     // blue vertical x red horizontal
  long long total() const { return top_left + bottom_left + bottom_right + top_right; }
};

namespace parent_detail {

// Stagger abscissas within one coarse band: members get k + r/(g+1) with
// ranks 1..g following ascending sort keys.
inline void assign_staggered(std::vector<std::pair<int, int>>& members,  // (sort key, base index)
                             long long coarse, bool negative,
                             std::vector<Rational>& out) {
  std::sort(members.begin(), members.end());
  const long long g = static_cast<long long>(members.size());
  for (long long r = 1; r <= g; ++r) {
    Rational a = Rational(coarse) + Rational(r, g + 1);
    out[members[static_cast<std::size_t>(r - 1)].second] = negative ? -a : a;
  }
}

}  // namespace parent_detail

inline CrossingReport count_crossings(const ParentDiagram& d);

inline ParentDiagram build_parent_diagram(const ModularLink& link) {
  ParentDiagram d;
  d.nbar = link.nbar();
  d.orders = full_bunch_orders(link);
  d.link_text = link.canonical_text();
  const int nbar = d.nbar;

  std::vector<int> hx(nbar + 1), hy(nbar + 1);
  for (int s = 1; s <= nbar; ++s) hx[d.orders.x_order[s - 1].index] = s;
  for (int t = 1; t <= nbar; ++t) hy[d.orders.y_order[t - 1].index] = 2 * nbar + 1 - t;

  // B_i: band of A^y_{l_i}; within a band, higher red height of y_i => larger B.
  std::vector<Rational> B(nbar + 1), A(nbar + 1);
  {
    std::map<long long, std::vector<std::pair<int, int>>> groups;
    for (int i = 1; i <= nbar; ++i) groups[link.l(i)].emplace_back(hy[i], i);
    for (auto& [l, members] : groups) parent_detail::assign_staggered(members, l, false, B);
  }
  // A_i: band of A^x_{k_i}; higher red height of y_{i-1} => more negative A_i.
  {
    std::map<long long, std::vector<std::pair<int, int>>> groups;
    for (int i = 1; i <= nbar; ++i) groups[link.k(i)].emplace_back(hy[link.predecessor_index(i)], i);
    for (auto& [k, members] : groups) parent_detail::assign_staggered(members, k, true, A);
  }

  for (int i = 1; i <= nbar; ++i) {
    int nxt = link.successor_index(i);
    d.blue_h.push_back(HSegment{BaseLabel{Letter::X, i}, hx[i], A[i], B[i]});
    d.red_h.push_back(HSegment{BaseLabel{Letter::Y, i}, hy[i], A[nxt], B[i]});
    d.blue_v.push_back(VSegment{BaseLabel{Letter::X, i}, B[i], hx[i], hy[i]});
    d.red_v.push_back(VSegment{BaseLabel{Letter::Y, i}, A[nxt], hx[nxt], hy[i]});
    d.v_unknots[link.l(i)].push_back(BaseLabel{Letter::X, i});
  }

  // Crossings by rule; endpoint incidences are connections, not crossings.
  for (int i = 1; i <= nbar; ++i) {
    int nxt = link.successor_index(i);
    for (int j = 1; j <= nbar; ++j) {
      // red vertical of y_i against blue horizontal of x_j (bottom-left)
      if (hx[j] > hx[nxt] && A[j] < A[nxt])
        d.crossings.push_back(Crossing{BaseLabel{Letter::Y, i}, BaseLabel{Letter::X, j},
                                       Region::BottomLeft, false});
      // blue vertical of x_i against red horizontal of y_j (top-right)
      if (hy[j] < hy[i] && B[j] > B[i])
        d.crossings.push_back(Crossing{BaseLabel{Letter::X, i}, BaseLabel{Letter::Y, j},
                                       Region::TopRight, true});
      // blue vertical of x_i against blue horizontal of x_j (bottom-right)
      if (hx[j] > hx[i] && B[j] > B[i])
        d.crossings.push_back(Crossing{BaseLabel{Letter::X, i}, BaseLabel{Letter::X, j},
                                       Region::BottomRight, false});
    }
  }

  count_crossings(d);  // runs the red-red layout guard
  return d;
}

inline CrossingReport count_crossings(const ParentDiagram& d) {
  CrossingReport rep;
  for (const Crossing& c : d.crossings) {
    switch (c.region) {
      case Region::TopLeft: ++rep.top_left; break;
      case Region::BottomLeft: ++rep.bottom_left; break;
      case Region::BottomRight: ++rep.bottom_right; break;
      case Region::TopRight: ++rep.top_right; break;
    }
  }
  // Guard: the stagger must leave the red arcs pairwise disjoint.
  for (const VSegment& v : d.red_v)
    for (const HSegment& h : d.red_h) {
      if (h.label == v.label) continue;
      if (h.left < v.abscissa && v.abscissa < h.right && v.bottom < h.height && h.height < v.top)
        throw Error(ErrorCode::LayoutViolation,
                    to_string(v.label) + " x " + to_string(h.label));
    }
  if (rep.top_left != 0) throw Error(ErrorCode::LayoutViolation, "red-red crossing recorded");
  return rep;
}

// Total self-intersection count iota of the projected link collection: parent
// link crossings, plus 4nbar+3 for the trefoil, plus 2nbar for the V-unknots
// (each V meets twice the verticals it encircles; the verticals total nbar).
inline long long total_iota(const ModularLink& link) {
  ParentDiagram d = build_parent_diagram(link);
  return count_crossings(d).total() + (4LL * link.nbar() + 3) + 2LL * link.nbar();
}

enum class VSlope { MinusOne, Trivial };
enum class TrefoilFilling { Keep, TrivialFill };  // keep: modular; fill: Lorenz

struct DehnRecipe {
  // Slopes +1/den, ascending exponents; XSide denominators telescope to k_mu.
  std::vector<std::pair<Annulus, long long>> annular;  // (annulus, slope denominator)
  std::map<long long, VSlope> v_fillings;              // y-exponent a -> slope of V_a
  TrefoilFilling trefoil_filling = TrefoilFilling::Keep;
  // The unknot U is always filled trivially.
};

inline DehnRecipe dehn_recipe(const ModularLink& link) {
  DehnRecipe r;
  std::map<long long, long long> xcount, ycount;
  for (int i = 1; i <= link.nbar(); ++i) {
    ++xcount[link.k(i)];
    ++ycount[link.l(i)];
  }
  long long prev = 0;
  for (auto [d, cnt] : xcount) {
    r.annular.emplace_back(Annulus{AnnulusSide::XSide, d}, d - prev);
    prev = d;
  }
  prev = 0;
  for (auto [a, cnt] : ycount) {
    r.annular.emplace_back(Annulus{AnnulusSide::YSide, a}, a - prev);
    prev = a;
    r.v_fillings[a] = cnt >= 2 ? VSlope::MinusOne : VSlope::Trivial;
  }
  return r;
}

}  // namespace lorenz
