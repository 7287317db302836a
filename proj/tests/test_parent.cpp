#include <numeric>
#include <string>

#include "doctest.h"
#include "lorenz/parent.hpp"
#include "lorenz/random_links.hpp"
#include "support/oracles.hpp"

using namespace lorenz;

namespace {

const char* kRunning = "x^10y^2x^5y^2x^7y^6x^2y^2x^5y^3";

CrossingReport crossings_of(const std::vector<std::string>& words) {
  return count_crossings(build_parent_diagram(parse_link(words)));
}

// x^{k_1}y^c ... x^{k_n}y^c with k strictly decreasing (n..1) or increasing.
std::string monotone_word(int n, long long c, bool decreasing) {
  std::string t;
  for (int i = 0; i < n; ++i) {
    long long k = decreasing ? n - i : i + 1;
    t += "x^" + std::to_string(k) + "y^" + std::to_string(c);
  }
  return t;
}

}  // namespace

TEST_CASE("count_crossings: worked cases") {
  CrossingReport trivial = crossings_of({"xy"});
  CHECK(trivial.total() == 0);

  // k strictly decreasing: the leftmost red vertical crosses n-1 blue horizontals
  CrossingReport dec = crossings_of({"x^3yx^2yxy"});
  CHECK(dec.bottom_left == 2);
  CHECK(dec.top_left == 0);
  CHECK(dec.top_right == 0);
  CHECK(dec.bottom_right == 0);

  // k strictly increasing: the topmost blue horizontal crosses n-1 red verticals
  CrossingReport inc = crossings_of({"xyx^2yx^3y"});
  CHECK(inc.bottom_left == 2);
  CHECK(inc.total() == 2);
}

TEST_CASE("count_crossings: running example vs sweep oracle") {
  ParentDiagram d = build_parent_diagram(parse_link({kRunning}));
  CrossingReport rep = count_crossings(d);
  CHECK(rep.total() == oracles::sweep_crossings(d));
  CHECK(rep.total() <= 30);
}

TEST_CASE("rule-based counts equal the geometric sweep on random links") {
  RandomLinkGenerator gen(8, 9, 555);
  for (int trial = 0; trial < 300; ++trial) {
    ParentDiagram d = build_parent_diagram(gen.next());
    CHECK(count_crossings(d).total() == oracles::sweep_crossings(d));
  }
}

TEST_CASE("lemma and region bounds on random links") {
  RandomLinkGenerator gen(40, 9, 777);
  for (int trial = 0; trial < 200; ++trial) {
    ModularLink link = gen.next();
    const long long n = link.nbar();
    CrossingReport rep = count_crossings(build_parent_diagram(link));
    CHECK(rep.top_left == 0);
    CHECK(rep.bottom_left <= n * (n - 1) / 2);
    CHECK(rep.bottom_right <= n * (n - 1) / 2);
    CHECK(rep.top_right <= n * (n - 1) / 2);
    CHECK(rep.total() * 2 <= 3 * n * (n - 1));
  }
}

TEST_CASE("over/under rules of the stored crossings") {
  ParentDiagram d = build_parent_diagram(parse_link({kRunning}));
  for (const Crossing& c : d.crossings) {
    switch (c.region) {
      case Region::BottomLeft:  // red vertical under blue horizontal
        CHECK(c.vertical.kind == Letter::Y);
        CHECK(c.horizontal.kind == Letter::X);
        CHECK_FALSE(c.vertical_over);
        break;
      case Region::TopRight:  // blue vertical over red horizontal
        CHECK(c.vertical.kind == Letter::X);
        CHECK(c.horizontal.kind == Letter::Y);
        CHECK(c.vertical_over);
        break;
      case Region::BottomRight:  // blue vertical under blue horizontal
        CHECK(c.vertical.kind == Letter::X);
        CHECK(c.horizontal.kind == Letter::X);
        CHECK_FALSE(c.vertical_over);
        break;
      case Region::TopLeft:
        FAIL("red-red crossing recorded");
    }
  }
}

TEST_CASE("total_iota: worked values") {
  CHECK(total_iota(parse_link({"x^3yx^2yxy"})) == 23);  // 2 + 15 + 6
  CHECK(total_iota(parse_link({"x^2y^3"})) == 9);       // 0 + 7 + 2
  // (3/2)nbar^2 + (9/2)nbar + 3 at nbar = 5
  CHECK(total_iota(parse_link({kRunning})) <= 63);
}

TEST_CASE("monotone families: crossings n-1, iota 7n+2") {
  for (int n = 2; n <= 50; ++n)
    for (long long c : {1LL, 2LL, 5LL})
      for (bool dec : {true, false}) {
        ModularLink link = parse_link({monotone_word(n, c, dec)});
        CHECK(count_crossings(build_parent_diagram(link)).total() == n - 1);
        CHECK(total_iota(link) == 7LL * n + 2);
      }
}

TEST_CASE("dehn_recipe: worked lists") {
  DehnRecipe r = dehn_recipe(parse_link({kRunning}));
  std::vector<std::tuple<AnnulusSide, long long, long long>> got;
  for (const auto& [ann, den] : r.annular) got.emplace_back(ann.side, ann.exponent, den);
  std::vector<std::tuple<AnnulusSide, long long, long long>> want = {
      {AnnulusSide::XSide, 2, 2},  {AnnulusSide::XSide, 5, 3}, {AnnulusSide::XSide, 7, 2},
      {AnnulusSide::XSide, 10, 3}, {AnnulusSide::YSide, 2, 2}, {AnnulusSide::YSide, 3, 1},
      {AnnulusSide::YSide, 6, 3}};
  CHECK(got == want);
  CHECK(r.v_fillings.at(2) == VSlope::MinusOne);
  CHECK(r.v_fillings.at(3) == VSlope::Trivial);
  CHECK(r.v_fillings.at(6) == VSlope::Trivial);
  CHECK(r.trefoil_filling == TrefoilFilling::Keep);

  DehnRecipe t = dehn_recipe(parse_link({"xy"}));
  REQUIRE(t.annular.size() == 2);
  CHECK(t.annular[0].second == 1);
  CHECK(t.annular[1].second == 1);
  CHECK(t.v_fillings.at(1) == VSlope::Trivial);

  DehnRecipe tor = dehn_recipe(parse_link({"x^5y^5"}));
  REQUIRE(tor.annular.size() == 2);
  CHECK(tor.annular[0].first == Annulus{AnnulusSide::XSide, 5});
  CHECK(tor.annular[0].second == 5);
  CHECK(tor.annular[1].first == Annulus{AnnulusSide::YSide, 5});
  CHECK(tor.annular[1].second == 5);
  CHECK(tor.v_fillings.at(5) == VSlope::Trivial);
}

TEST_CASE("dehn_recipe: slopes telescope to the maximal exponents") {
  RandomLinkGenerator gen(10, 9, 888);
  for (int trial = 0; trial < 100; ++trial) {
    ModularLink link = gen.next();
    DehnRecipe r = dehn_recipe(link);
    long long xsum = 0, ysum = 0;
    for (const auto& [ann, den] : r.annular)
      (ann.side == AnnulusSide::XSide ? xsum : ysum) += den;
    CHECK(xsum == link.max_x_exponent());
    CHECK(ysum == link.max_y_exponent());
  }
}

TEST_CASE("v-unknot budget: encircled verticals total nbar") {
  RandomLinkGenerator gen(10, 9, 999);
  for (int trial = 0; trial < 100; ++trial) {
    ModularLink link = gen.next();
    ParentDiagram d = build_parent_diagram(link);
    long long total = 0;
    for (const auto& [a, members] : d.v_unknots) total += static_cast<long long>(members.size());
    CHECK(total == link.nbar());
    CHECK(total_iota(link) ==
          count_crossings(d).total() + 4LL * link.nbar() + 3 + 2LL * link.nbar());
  }
}

TEST_CASE("diagram geometry invariants") {
  ModularLink link = parse_link({kRunning});
  ParentDiagram d = build_parent_diagram(link);
  const int nbar = link.nbar();
  // heights: blue 1..nbar, red nbar+1..2nbar, all distinct
  std::vector<int> heights;
  for (const HSegment& h : d.blue_h) heights.push_back(h.height);
  for (const HSegment& h : d.red_h) heights.push_back(h.height);
  std::sort(heights.begin(), heights.end());
  std::vector<int> want(2 * nbar);
  std::iota(want.begin(), want.end(), 1);
  CHECK(heights == want);
  // all abscissas pairwise distinct
  std::vector<Rational> abscissas;
  for (const VSegment& v : d.blue_v) abscissas.push_back(v.abscissa);
  for (const VSegment& v : d.red_v) abscissas.push_back(v.abscissa);
  std::sort(abscissas.begin(), abscissas.end());
  CHECK(std::adjacent_find(abscissas.begin(), abscissas.end()) == abscissas.end());
}
