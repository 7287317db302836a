#include "doctest.h"
#include "lorenz/bounds.hpp"
#include "lorenz/random_links.hpp"

using namespace lorenz;

namespace {
const char* kRunning = "x^10y^2x^5y^2x^7y^6x^2y^2x^5y^3";
}

TEST_CASE("quadratic_bound: values and precondition") {
  CHECK(quadratic_bound(5) == doctest::Approx(504.0 * kVTet).epsilon(1e-12));
  CHECK(quadratic_bound(5) == doctest::Approx(511.531).epsilon(1e-5));
  CHECK(quadratic_bound(1) == doctest::Approx(72.0 * kVTet).epsilon(1e-12));
  CHECK_THROWS_AS(quadratic_bound(0), std::invalid_argument);
}

TEST_CASE("count_based_bound: values") {
  CHECK(count_based_bound(23) == doctest::Approx(184.0 * kVTet).epsilon(1e-12));
  CHECK(count_based_bound(9) == doctest::Approx(quadratic_bound(1)).epsilon(1e-12));
  CHECK(count_based_bound(0) == 0.0);
  CHECK_THROWS_AS(count_based_bound(-1), std::invalid_argument);
}

TEST_CASE("linear_bound: applicability") {
  std::string note;
  auto dec = linear_bound(parse_link({"x^3yx^2yxy"}), &note);
  REQUIRE(dec.has_value());
  CHECK(*dec == doctest::Approx(184.0 * kVTet).epsilon(1e-12));

  auto inc = linear_bound(parse_link({"xy^7x^2y^7x^3y^7"}));
  REQUIRE(inc.has_value());
  CHECK(*inc == doctest::Approx(184.0 * kVTet).epsilon(1e-12));

  CHECK_FALSE(linear_bound(parse_link({kRunning}), &note).has_value());
  CHECK(!note.empty());
  CHECK_FALSE(linear_bound(parse_link({"xy", "x^2y"})).has_value());
  CHECK_FALSE(linear_bound(parse_link({"x^3yx^2y^2xy"})).has_value());   // l not constant
  CHECK_FALSE(linear_bound(parse_link({"x^4yxyx^3yx^2y"})).has_value());  // k not cyclically monotone
  CHECK(linear_bound(parse_link({"x^4y^2"})).has_value());              // n = 1 family
}

TEST_CASE("count-based never exceeds quadratic") {
  RandomLinkGenerator gen(40, 9, 2024);
  for (int trial = 0; trial < 200; ++trial) {
    ModularLink link = gen.next();
    CHECK(count_based_bound(total_iota(link)) <= quadratic_bound(link.nbar()) + 1e-9);
  }
}

TEST_CASE("monotone families: count-based equals linear") {
  for (int n = 2; n <= 30; ++n) {
    std::string t;
    for (int i = 0; i < n; ++i) t += "x^" + std::to_string(n - i) + "y^2";
    ModularLink link = parse_link({t});
    auto lin = linear_bound(link);
    REQUIRE(lin.has_value());
    CHECK(count_based_bound(total_iota(link)) == doctest::Approx(*lin).epsilon(1e-12));
  }
}

TEST_CASE("bound_report: aggregates") {
  BoundReport r = bound_report(parse_link({kRunning}));
  CHECK(r.nbar == 5);
  CHECK(r.iota_total == total_iota(parse_link({kRunning})));
  CHECK(r.quadratic == doctest::Approx(504.0 * kVTet));
  CHECK(r.count_based == doctest::Approx(8.0 * kVTet * static_cast<double>(r.iota_total)));
  CHECK_FALSE(r.linear.has_value());
  CHECK(!r.applicability_note.empty());
}
