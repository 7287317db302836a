// Acceptance checks, one pass/fail line each. argv[1] is the CLI binary path.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lorenz/bench.hpp"
#include "lorenz/bounds.hpp"
#include "lorenz/bunch.hpp"
#include "lorenz/classify.hpp"
#include "lorenz/json_io.hpp"
#include "lorenz/parent.hpp"
#include "lorenz/random_links.hpp"
#include "lorenz/render.hpp"
#include "lorenz/williams.hpp"
#include "support/oracles.hpp"

namespace {

using lorenz::Json;

const char* kRunning = "x^10y^2x^5y^2x^7y^6x^2y^2x^5y^3";
std::string cli_path;
int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
  std::printf("criterion %d: %s — %s\n", criterion, pass ? "PASS" : "FAIL", what.c_str());
  if (!pass) ++failures;
}

struct CliResult {
  int status;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = "'" + cli_path + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof(buf), pipe)) > 0;) out.append(buf, n);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::vector<std::string> str_array(const Json& j) {
  std::vector<std::string> out;
  for (const Json& e : j) out.push_back(e.get<std::string>());
  return out;
}

void criterion1() {
  CliResult r = run_cli(std::string("orders --format json --word ") + kRunning);
  bool pass = r.status == 0;
  std::string why;
  if (pass) {
    Json j = Json::parse(r.out);
    pass = str_array(j["x_order"]) == std::vector<std::string>{"x2", "x1", "x4", "x5", "x3"} &&
           str_array(j["y_order"]) == std::vector<std::string>{"y5", "y2", "y1", "y4", "y3"};
    if (!pass) why = "; got " + j.dump();
  }
  // the computation itself (not process startup) must run in under 1 ms
  lorenz::ModularLink link = lorenz::parse_link({kRunning});
  using clock = std::chrono::steady_clock;
  double best_us = 1e18;
  for (int rep = 0; rep < 100; ++rep) {
    auto t0 = clock::now();
    lorenz::FullBunchOrders o = lorenz::full_bunch_orders(link);
    (void)o;
    best_us = std::min(best_us, std::chrono::duration<double, std::micro>(clock::now() - t0).count());
  }
  pass = pass && best_us < 1000.0;
  report(1, pass, "worked-example full-bunch orders via `orders` (" +
                      std::to_string(best_us) + " us)" + why);
}

void criterion2() {
  CliResult r = run_cli(std::string("recipe --format json --word ") + kRunning);
  bool pass = r.status == 0;
  if (pass) {
    Json j = Json::parse(r.out);
    Json want_annular = Json::parse(R"([
      {"side":"x","exponent":2,"slope":[1,2]},
      {"side":"x","exponent":5,"slope":[1,3]},
      {"side":"x","exponent":7,"slope":[1,2]},
      {"side":"x","exponent":10,"slope":[1,3]},
      {"side":"y","exponent":2,"slope":[1,2]},
      {"side":"y","exponent":3,"slope":[1,1]},
      {"side":"y","exponent":6,"slope":[1,3]}])");
    Json want_v = Json::parse(R"([
      {"y_exponent":2,"slope":"-1"},
      {"y_exponent":3,"slope":"trivial"},
      {"y_exponent":6,"slope":"trivial"}])");
    pass = j["annular"] == want_annular && j["v_fillings"] == want_v &&
           j["u_filling"] == "trivial";
  }
  report(2, pass, "worked-example Dehn-filling recipe via `recipe`");
}

void criterion3() {
  bool pass = true;
  std::string why = "oracle equivalence";
  long long cases = 0;
  auto check = [&](const lorenz::ModularLink& link) {
    lorenz::TemplateEmbedding emb = lorenz::embed(link);
    lorenz::VerificationReport rep = lorenz::verify_against_bunch(link, emb);
    ++cases;
    if (!rep.pass && pass) {
      pass = false;
      why = link.canonical_text() + ": " + rep.detail;
    }
  };
  for (const auto& words : oracles::enumerate_links(3, 3)) check(lorenz::parse_link(words));
  lorenz::RandomLinkGenerator gen(8, 9, 7);
  for (int i = 0; i < 1000; ++i) check(gen.next());
  report(3, pass, why + " on " + std::to_string(cases) + " links (exhaustive + random)");
}

std::vector<lorenz::ModularLink> criterion4_links() {
  std::vector<lorenz::ModularLink> links;
  lorenz::RandomLinkGenerator gen(40, 9, 1234);
  for (int i = 0; i < 1000; ++i) links.push_back(gen.next());
  return links;
}

void criterion4(const std::vector<lorenz::ModularLink>& links) {
  bool pass = true;
  for (const lorenz::ModularLink& link : links) {
    const long long n = link.nbar();
    lorenz::CrossingReport rep = lorenz::count_crossings(lorenz::build_parent_diagram(link));
    pass = pass && rep.top_left == 0 && 2 * rep.total() <= 3 * n * (n - 1) &&
           rep.bottom_left <= n * (n - 1) / 2 && rep.bottom_right <= n * (n - 1) / 2 &&
           rep.top_right <= n * (n - 1) / 2;
    if (!pass) break;
  }
  report(4, pass, "crossing bounds (3/2)n(n-1) and per-region n(n-1)/2 on 1000 random links");
}

void criterion5() {
  bool pass = true;
  for (int n = 2; n <= 50 && pass; ++n)
    for (long long c : {1LL, 2LL, 5LL})
      for (bool dec : {true, false}) {
        std::string t;
        for (int i = 0; i < n; ++i)
          t += "x^" + std::to_string(dec ? n - i : i + 1) + "y^" + std::to_string(c);
        lorenz::ModularLink link = lorenz::parse_link({t});
        pass = pass &&
               lorenz::count_crossings(lorenz::build_parent_diagram(link)).total() == n - 1 &&
               lorenz::total_iota(link) == 7LL * n + 2;
      }
  report(5, pass, "monotone families: crossings n-1 and iota 7n+2 for n in 2..50");
}

void criterion6(const std::vector<lorenz::ModularLink>& links) {
  double q5 = lorenz::quadratic_bound(5);
  bool pass = std::fabs(q5 - 504.0 * lorenz::kVTet) < 1e-9;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", q5);
  pass = pass && std::string(buf) == "511.531";
  for (const lorenz::ModularLink& link : links) {
    if (!(lorenz::count_based_bound(lorenz::total_iota(link)) <=
          lorenz::quadratic_bound(link.nbar()) + 1e-9)) {
      pass = false;
      break;
    }
  }
  report(6, pass, "quadratic_bound(5) = 504 v_tet = " + std::string(buf) +
                      "; count-based <= quadratic on 1000 random links");
}

void criterion7() {
  lorenz::ModularLink a = lorenz::parse_link({"x^2yxyxy"});
  lorenz::ModularLink b = lorenz::parse_link({"x^3y^5x^2y^5x^2y^5"});
  bool pass = lorenz::same_class(a, b);
  lorenz::ParentDiagram da = lorenz::build_parent_diagram(a);
  lorenz::ParentDiagram db = lorenz::build_parent_diagram(b);
  lorenz::CrossingReport ra = lorenz::count_crossings(da);
  lorenz::CrossingReport rb = lorenz::count_crossings(db);
  pass = pass && da.nbar == db.nbar && ra.bottom_left == rb.bottom_left &&
         ra.bottom_right == rb.bottom_right && ra.top_right == rb.top_right;

  auto groups = [](const std::vector<std::vector<lorenz::BaseLabel>>& tuple) {
    std::vector<std::vector<std::string>> out;
    for (const auto& g : tuple) {
      std::vector<std::string> names;
      for (const lorenz::BaseLabel& l : g) names.push_back(lorenz::to_string(l));
      out.push_back(std::move(names));
    }
    return out;
  };
  using G = std::vector<std::vector<std::string>>;

  lorenz::BaseOrder c1 = lorenz::base_orders(lorenz::parse_link({kRunning}));
  pass = pass && groups(c1.x_tuples[0]) == G{{"x1"}, {"x3"}, {"x2", "x5"}, {"x4"}} &&
         groups(c1.y_tuples[0]) == G{{"y1", "y2", "y4"}, {"y5"}, {"y3"}};

  lorenz::BaseOrder c2 = lorenz::base_orders(
      lorenz::parse_link({"x^100y^10x^500y^50", "x^200y^20x^400y^40", "x^300y^30"}));
  pass = pass && groups(c2.x_tuples[0]) == G{{"x1"}, {}, {}, {}, {"x2"}} &&
         groups(c2.x_tuples[1]) == G{{}, {"x3"}, {}, {"x4"}, {}} &&
         groups(c2.x_tuples[2]) == G{{}, {}, {"x5"}, {}, {}} &&
         groups(c2.y_tuples[0]) == G{{"y2"}, {}, {}, {}, {"y1"}} &&
         groups(c2.y_tuples[1]) == G{{}, {"y4"}, {}, {"y3"}, {}} &&
         groups(c2.y_tuples[2]) == G{{}, {}, {"y5"}, {}, {}};
  report(7, pass, "classification pair shares a key and a diagram; printed base orders match");
}

void criterion8() {
  bool pass = true;
  lorenz::RandomLinkGenerator gen(8, 9, 31337);
  for (int i = 0; i < 1000; ++i) {
    lorenz::ParentDiagram d = lorenz::build_parent_diagram(gen.next());
    if (lorenz::count_crossings(d).total() != oracles::sweep_crossings(d)) {
      pass = false;
      break;
    }
  }
  report(8, pass, "rule-based crossing counts equal the geometric sweep on 1000 diagrams");
}

void criterion9() {
  CliResult r = run_cli(std::string("bench --word ") + kRunning);
  bool pass = r.status == 0;
  std::string detail = "bench CSV across scales 1/10/100";
  if (pass) {
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);  // header
    std::vector<std::array<double, 6>> rows;
    while (std::getline(in, line)) {
      std::array<double, 6> row{};
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream fields(line);
      for (double& v : row) fields >> v;
      rows.push_back(row);
    }
    pass = rows.size() == 3;
    if (pass) {
      for (const auto& row : rows) pass = pass && row[2] == 10.0;
      pass = pass && rows[0][3] * 10 == rows[1][3] && rows[0][3] * 100 == rows[2][3];
      double tb_min = std::min({rows[0][4], rows[1][4], rows[2][4]});
      double tb_max = std::max({rows[0][4], rows[1][4], rows[2][4]});
      pass = pass && tb_max < 2.0 * tb_min;
      pass = pass && rows[0][5] < rows[1][5] && rows[1][5] < rows[2][5];
      std::ostringstream d;
      d << "bench: items 10/10/10 vs " << static_cast<long long>(rows[0][3]) << "/"
        << static_cast<long long>(rows[1][3]) << "/" << static_cast<long long>(rows[2][3])
        << "; t_bunch spread " << tb_max / tb_min << "x; t_williams "
        << rows[0][5] << "/" << rows[1][5] << "/" << rows[2][5] << " us";
      detail = d.str();
    }
  }
  report(9, pass, detail);
}

void criterion10() {
  lorenz::ModularLink link = lorenz::parse_link({kRunning});
  std::string tpl1 = lorenz::render_template_svg(lorenz::embed(link));
  std::string tpl2 = lorenz::render_template_svg(lorenz::embed(lorenz::parse_link({kRunning})));
  std::string par1 = lorenz::render_parent_svg(lorenz::build_parent_diagram(link));
  std::string par2 =
      lorenz::render_parent_svg(lorenz::build_parent_diagram(lorenz::parse_link({kRunning})));
  std::string js1 = lorenz::to_json(lorenz::embed(link)).dump(2);
  std::string js2 = lorenz::to_json(lorenz::embed(lorenz::parse_link({kRunning}))).dump(2);
  bool pass = tpl1 == tpl2 && par1 == par2 && js1 == js2;

  // and the frozen golden bytes still match
  auto read = [](const std::string& path) {
    std::string data;
    if (FILE* f = std::fopen(path.c_str(), "rb")) {
      char buf[4096];
      for (std::size_t n; (n = fread(buf, 1, sizeof(buf), f)) > 0;) data.append(buf, n);
      std::fclose(f);
    }
    return data;
  };
  const std::string dir = LORENZ_GOLDEN_DIR;
  pass = pass && tpl1 == read(dir + "/template_running.svg") &&
         par1 == read(dir + "/parent_running.svg") &&
         js1 + "\n" == read(dir + "/embed_running.json");
  report(10, pass, "SVG and JSON outputs byte-identical across runs and against goldens");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <cli-binary>\n", argv[0]);
    return 2;
  }
  cli_path = argv[1];

  criterion1();
  criterion2();
  criterion3();
  std::vector<lorenz::ModularLink> links = criterion4_links();
  criterion4(links);
  criterion5();
  criterion6(links);
  criterion7();
  criterion8();
  criterion9();
  criterion10();

  return failures == 0 ? 0 : 1;
}
