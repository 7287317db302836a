// Command-line front end: normalize / orders / embed / bunches / verify /
// classify / parent / recipe / bound / render / bench / batch.

#include <cstdio>
#include <fstream>
#include <future>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lorenz/bench.hpp"
#include "lorenz/bounds.hpp"
#include "lorenz/bunch.hpp"
#include "lorenz/classify.hpp"
#include "lorenz/json_io.hpp"
#include "lorenz/parent.hpp"
#include "lorenz/random_links.hpp"
#include "lorenz/render.hpp"
#include "lorenz/williams.hpp"
#include "lorenz/word.hpp"

namespace {

using lorenz::Json;

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct LinkArgs {
  std::vector<std::string> words;
  std::string link_text;

  lorenz::ModularLink parse() const {
    std::vector<std::string> texts = words;
    if (!link_text.empty())
      for (const std::string& w : split_words(link_text)) texts.push_back(w);
    return lorenz::parse_link(texts);
  }
};

void add_link_options(CLI::App* cmd, LinkArgs& args) {
  cmd->add_option("--word", args.words, "one code word (repeatable)");
  cmd->add_option("link", args.link_text, "comma-separated code words");
}

void print_output(const Json& j, const std::string& format, const std::string& text_form) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text_form;
}

std::string labels_text(const std::vector<lorenz::BaseLabel>& ls) {
  std::string out = "(";
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) out += ", ";
    out += lorenz::to_string(ls[i]);
  }
  return out + ")";
}

std::string recipe_text(const lorenz::DehnRecipe& r) {
  std::string out;
  for (const auto& [ann, den] : r.annular) {
    out += "apply (+1/" + std::to_string(den) + ")-annular Dehn filling to A^" +
           (ann.side == lorenz::AnnulusSide::XSide ? std::string("x_") : std::string("y_")) +
           std::to_string(ann.exponent) + "\n";
  }
  for (const auto& [a, slope] : r.v_fillings) {
    out += "fill V_" + std::to_string(a) +
           (slope == lorenz::VSlope::MinusOne ? " along slope -1\n" : " trivially\n");
  }
  out += "fill U trivially\n";
  out += r.trefoil_filling == lorenz::TrefoilFilling::Keep
             ? "keep the trefoil cusp (modular link complement)\n"
             : "fill the trefoil cusp trivially (Lorenz link complement)\n";
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"bunch-based construction of modular and Lorenz links"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global options after the subcommand name
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  LinkArgs link_args;

  auto* normalize = app.add_subcommand("normalize", "canonical form of each word");
  add_link_options(normalize, link_args);

  auto* orders = app.add_subcommand("orders", "orders within the full bunches");
  add_link_options(orders, link_args);

  auto* embed_cmd = app.add_subcommand("embed", "split-template embedding");
  add_link_options(embed_cmd, link_args);

  auto* bunches = app.add_subcommand("bunches", "bunch decomposition and sizes");
  add_link_options(bunches, link_args);

  auto* verify = app.add_subcommand("verify", "check the embedding against the lexicographic oracle");
  add_link_options(verify, link_args);
  int random_n = 0;
  int max_period = 6;
  long long max_exp = 9;
  std::uint64_t seed = 1;
  verify->add_option("--random", random_n, "verify N random links instead of a given one");
  verify->add_option("--max-period", max_period, "trip-number budget for random links");
  verify->add_option("--max-exp", max_exp, "maximal exponent for random links");
  verify->add_option("--seed", seed, "random seed");

  auto* classify = app.add_subcommand("classify", "base orders and classification key");
  add_link_options(classify, link_args);
  std::string against_file;
  classify->add_option("--against", against_file, "file of links (one per line): print the partition");

  auto* parent = app.add_subcommand("parent", "parent-link diagram and crossing report");
  add_link_options(parent, link_args);

  auto* recipe = app.add_subcommand("recipe", "annular Dehn-filling recipe");
  add_link_options(recipe, link_args);

  auto* bound = app.add_subcommand("bound", "volume upper bounds");
  add_link_options(bound, link_args);

  auto* render = app.add_subcommand("render", "SVG of the template embedding or parent diagram");
  add_link_options(render, link_args);
  std::string what = "template";
  std::string out_file;
  lorenz::RenderOptions ropts;
  render->add_option("--what", what, "diagram kind")->check(CLI::IsMember({"template", "parent"}));
  render->add_option("--out", out_file, "output file (default stdout)");
  render->add_option("--width", ropts.unit, "pixels per branch-line unit");
  render->add_option("--palette", ropts.palette, "colour palette")
      ->check(CLI::IsMember({"default", "mono"}));
  bool hide_unused = false;
  render->add_flag("--hide-unused-slots", hide_unused, "omit hollow dots for unused slots");

  auto* bench = app.add_subcommand("bench", "time bunch ordering vs letter-level ordering (CSV)");
  add_link_options(bench, link_args);
  std::vector<long long> scales = {1, 10, 100};
  bench->add_option("--scales", scales, "exponent scaling factors");

  auto* batch = app.add_subcommand("batch", "apply an operation to one link per line");
  std::string in_file, op = "orders";
  int jobs = 4;
  batch->add_option("--in", in_file, "input file, one comma-separated link per line")->required();
  batch->add_option("--op", op, "operation per line")
      ->check(CLI::IsMember({"normalize", "orders", "classify", "recipe", "bound"}));
  batch->add_option("--jobs", jobs, "maximal concurrent lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 0 for --help, 2 for usage errors
  }

  if (normalize->parsed()) {
    lorenz::ModularLink link = link_args.parse();
    Json j;
    j["words"] = Json::array();
    std::string text;
    for (const auto& w : link.words()) {
      j["words"].push_back(lorenz::render(w));
      text += lorenz::render(w) + "\n";
    }
    j["nbar"] = link.nbar();
    j["note"] = "canonicalized";
    print_output(j, format, text);
  } else if (orders->parsed()) {
    lorenz::ModularLink link = link_args.parse();
    lorenz::FullBunchOrders o = lorenz::full_bunch_orders(link);
    print_output(lorenz::to_json(o), format,
                 "x: " + labels_text(o.x_order) + "\ny: " + labels_text(o.y_order) + "\n");
  } else if (embed_cmd->parsed()) {
    lorenz::ModularLink link = link_args.parse();
    lorenz::TemplateEmbedding emb = lorenz::embed(link);
    std::ostringstream text;
    text << "used slots: " << emb.used_slots.size() << "\n";
    print_output(lorenz::to_json(emb), format, text.str());
  } else if (bunches->parsed()) {
    lorenz::ModularLink link = link_args.parse();
    lorenz::TemplateEmbedding emb = lorenz::embed(link);
    auto sizes = lorenz::bunch_sizes(link);
    Json j;
    j["sizes"] = Json::array();
    std::ostringstream text;
    for (const auto& [interval, count] : sizes) {
      j["sizes"].push_back(Json::array({interval, count}));
      text << "interval " << interval << ": " << count << " turn(s)\n";
    }
    j["bunches"] = lorenz::to_json(emb)["bunches"];
    print_output(j, format, text.str());
  } else if (verify->parsed()) {
    bool all_pass = true;
    Json results = Json::array();
    auto run_one = [&](const lorenz::ModularLink& link) {
      lorenz::TemplateEmbedding emb = lorenz::embed(link);
      lorenz::VerificationReport rep = lorenz::verify_against_bunch(link, emb);
      all_pass = all_pass && rep.pass;
      Json j = lorenz::to_json(rep);
      j["link"] = link.canonical_text();
      results.push_back(std::move(j));
    };
    if (random_n > 0) {
      lorenz::RandomLinkGenerator gen(max_period, max_exp, seed);
      for (int i = 0; i < random_n; ++i) run_one(gen.next());
    } else {
      run_one(link_args.parse());
    }
    std::string text = all_pass ? "PASS\n" : "FAIL\n";
    print_output(results, format, text);
    if (!all_pass) return 3;
  } else if (classify->parsed()) {
    if (!against_file.empty()) {
      std::ifstream in(against_file);
      if (!in) throw lorenz::Error(lorenz::ErrorCode::SyntaxError, "cannot open " + against_file);
      std::map<lorenz::ClassKey, std::vector<std::string>> partition;
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        lorenz::ModularLink link = lorenz::parse_link(split_words(line));
        partition[lorenz::class_key(link)].push_back(link.canonical_text());
      }
      Json j = Json::array();
      std::string text;
      for (const auto& [key, members] : partition) {
        Json e;
        e["class_key"] = key;
        e["members"] = members;
        j.push_back(std::move(e));
        text += "class " + key + "\n";
        for (const std::string& m : members) text += "  " + m + "\n";
      }
      print_output(j, format, text);
    } else {
      lorenz::ModularLink link = link_args.parse();
      Json j;
      j["class_key"] = lorenz::class_key(link);
      j["base_orders"] = lorenz::to_json(lorenz::base_orders(link));
      print_output(j, format, "class_key: " + lorenz::class_key(link) + "\n");
    }
  } else if (parent->parsed()) {
    lorenz::ModularLink link = link_args.parse();
    lorenz::ParentDiagram d = lorenz::build_parent_diagram(link);
    lorenz::CrossingReport rep = lorenz::count_crossings(d);
    Json j;
    j["diagram"] = lorenz::to_json(d);
    j["crossings"] = lorenz::to_json(rep);
    j["iota_total"] = lorenz::total_iota(link);
    std::ostringstream text;
    text << "crossings: total " << rep.total() << " (BL " << rep.bottom_left << ", BR "
         << rep.bottom_right << ", TR " << rep.top_right << ", TL " << rep.top_left << ")\n"
         << "iota_total: " << lorenz::total_iota(link) << "\n";
    print_output(j, format, text.str());
  } else if (recipe->parsed()) {
    lorenz::ModularLink link = link_args.parse();
    lorenz::DehnRecipe r = lorenz::dehn_recipe(link);
    print_output(lorenz::to_json(r), format, recipe_text(r));
  } else if (bound->parsed()) {
    lorenz::ModularLink link = link_args.parse();
    lorenz::BoundReport r = lorenz::bound_report(link);
    std::ostringstream text;
    text.precision(6);
    text << std::fixed << "nbar: " << r.nbar << "\niota_total: " << r.iota_total
         << "\nquadratic_bound: " << r.quadratic << "\ncount_based_bound: " << r.count_based << "\n";
    if (r.linear) text << "linear_bound: " << *r.linear << "\n";
    print_output(lorenz::to_json(r), format, text.str());
  } else if (render->parsed()) {
    ropts.show_unused = !hide_unused;
    lorenz::ModularLink link = link_args.parse();
    std::string svg = what == "template"
                          ? lorenz::render_template_svg(lorenz::embed(link), ropts)
                          : lorenz::render_parent_svg(lorenz::build_parent_diagram(link), ropts);
    if (out_file.empty()) {
      std::cout << svg;
    } else {
      std::ofstream out(out_file, std::ios::binary);
      out << svg;
    }
  } else if (bench->parsed()) {
    lorenz::ModularLink link = link_args.parse();
    std::cout << lorenz::bench_csv(lorenz::run_bench(link, scales));
  } else if (batch->parsed()) {
    std::ifstream in(in_file);
    if (!in) throw lorenz::Error(lorenz::ErrorCode::SyntaxError, "cannot open " + in_file);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) lines.push_back(line);
    auto process = [&op, &format](const std::string& text) -> std::string {
      lorenz::ModularLink link = lorenz::parse_link(split_words(text));
      Json j;
      if (op == "normalize") {
        j = link.canonical_text();
      } else if (op == "orders") {
        j = lorenz::to_json(lorenz::full_bunch_orders(link));
      } else if (op == "classify") {
        j["class_key"] = lorenz::class_key(link);
      } else if (op == "recipe") {
        j = lorenz::to_json(lorenz::dehn_recipe(link));
      } else {
        j = lorenz::to_json(lorenz::bound_report(link));
      }
      (void)format;
      return j.dump();
    };
    // Fan out in windows of `jobs`; output order follows input order.
    std::vector<std::string> outputs(lines.size());
    for (std::size_t base = 0; base < lines.size(); base += static_cast<std::size_t>(jobs)) {
      std::size_t end = std::min(lines.size(), base + static_cast<std::size_t>(jobs));
      std::vector<std::future<std::string>> futs;
      for (std::size_t i = base; i < end; ++i)
        futs.push_back(std::async(std::launch::async, process, lines[i]));
      for (std::size_t i = base; i < end; ++i) outputs[i] = futs[i - base].get();
    }
    for (const std::string& o : outputs) std::cout << o << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lorenz::Error& e) {
    std::cerr << e.name() << "\n";
    if (std::string(e.what()) != e.name()) std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
