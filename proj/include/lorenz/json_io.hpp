#pragma once

#include <string>

#include "json.hpp"
#include "lorenz/bounds.hpp"
#include "lorenz/bunch.hpp"
#include "lorenz/classify.hpp"
#include "lorenz/parent.hpp"
#include "lorenz/williams.hpp"
#include "lorenz/word.hpp"

namespace lorenz {

using Json = nlohmann::ordered_json;

inline Json to_json(const BaseLabel& b) { return to_string(b); }

inline BaseLabel label_from_json(const Json& j) {
  std::string s = j.get<std::string>();
  if (s.size() < 2 || (s[0] != 'x' && s[0] != 'y'))
    throw Error(ErrorCode::SyntaxError, "bad label " + s);
  return BaseLabel{s[0] == 'x' ? Letter::X : Letter::Y, std::stoi(s.substr(1))};
}

inline Json to_json(const FullBunchOrders& o) {
  Json j;
  j["x_order"] = Json::array();
  j["y_order"] = Json::array();
  for (const BaseLabel& b : o.x_order) j["x_order"].push_back(to_json(b));
  for (const BaseLabel& b : o.y_order) j["y_order"].push_back(to_json(b));
  return j;
}

inline FullBunchOrders orders_from_json(const Json& j) {
  FullBunchOrders o;
  for (const Json& e : j.at("x_order")) o.x_order.push_back(label_from_json(e));
  for (const Json& e : j.at("y_order")) o.y_order.push_back(label_from_json(e));
  return o;
}

inline Json to_json(const TemplateEmbedding& emb) {
  Json j;
  j["link"] = emb.link_text;
  j["k_mu"] = emb.k_mu;
  j["l_lambda"] = emb.l_lambda;
  j["orders"] = to_json(emb.orders);
  j["slots"] = Json::array();
  for (const Slot& s : emb.slots) {
    if (!s.used) continue;
    j["slots"].push_back(Json::array({s.interval, s.rank, to_string(s.label)}));
  }
  j["unused_slots"] = Json::array();
  for (const Slot& s : emb.slots)
    if (!s.used) j["unused_slots"].push_back(Json::array({s.interval, s.rank, to_string(s.label)}));
  j["arcs"] = Json::array();
  for (const auto& [label, turns] : emb.arcs) {
    Json arc;
    arc["base"] = to_string(label);
    arc["turns"] = Json::array();
    for (const Turn& t : turns)
      arc["turns"].push_back(Json::array({Json::array({t.from.interval, t.from.rank}),
                                          Json::array({t.to.interval, t.to.rank})}));
    j["arcs"].push_back(std::move(arc));
  }
  j["bunches"] = Json::array();
  for (const auto& [interval, bunch] : emb.bunches) {
    Json b;
    b["interval"] = interval;
    b["turns"] = Json::array();
    for (const BunchEntry& e : bunch)
      b["turns"].push_back(Json::array({to_string(e.label), e.remaining}));
    j["bunches"].push_back(std::move(b));
  }
  return j;
}

inline Json to_json(const BaseOrder& bo) {
  Json j;
  j["x_exponents"] = bo.x_exponents;
  j["y_exponents"] = bo.y_exponents;
  auto tuples = [](const std::vector<std::vector<std::vector<BaseLabel>>>& t) {
    Json out = Json::array();
    for (const auto& comp : t) {
      Json ct = Json::array();
      for (const auto& group : comp) {
        Json g = Json::array();
        for (const BaseLabel& b : group) g.push_back(to_string(b));
        ct.push_back(std::move(g));
      }
      out.push_back(std::move(ct));
    }
    return out;
  };
  j["x_tuples"] = tuples(bo.x_tuples);
  j["y_tuples"] = tuples(bo.y_tuples);
  return j;
}

inline Json to_json(const Rational& r) { return Json::array({r.numerator(), r.denominator()}); }

inline Json to_json(const ParentDiagram& d) {
  Json j;
  j["link"] = d.link_text;
  j["nbar"] = d.nbar;
  auto hseg = [](const HSegment& h) {
    Json s;
    s["label"] = to_string(h.label);
    s["height"] = h.height;
    s["left"] = to_json(h.left);
    s["right"] = to_json(h.right);
    return s;
  };
  auto vseg = [](const VSegment& v) {
    Json s;
    s["label"] = to_string(v.label);
    s["abscissa"] = to_json(v.abscissa);
    s["bottom"] = v.bottom;
    s["top"] = v.top;
    return s;
  };
  j["blue_h"] = Json::array();
  for (const HSegment& h : d.blue_h) j["blue_h"].push_back(hseg(h));
  j["red_h"] = Json::array();
  for (const HSegment& h : d.red_h) j["red_h"].push_back(hseg(h));
  j["blue_v"] = Json::array();
  for (const VSegment& v : d.blue_v) j["blue_v"].push_back(vseg(v));
  j["red_v"] = Json::array();
  for (const VSegment& v : d.red_v) j["red_v"].push_back(vseg(v));
  j["crossings"] = Json::array();
  for (const Crossing& c : d.crossings) {
    Json e;
    e["vertical"] = to_string(c.vertical);
    e["horizontal"] = to_string(c.horizontal);
    switch (c.region) {
      case Region::TopLeft: e["region"] = "TopLeft"; break;
      case Region::BottomLeft: e["region"] = "BottomLeft"; break;
      case Region::BottomRight: e["region"] = "BottomRight"; break;
      case Region::TopRight: e["region"] = "TopRight"; break;
    }
    e["vertical_over"] = c.vertical_over;
    j["crossings"].push_back(std::move(e));
  }
  j["v_unknots"] = Json::array();
  for (const auto& [a, members] : d.v_unknots) {
    Json e;
    e["y_exponent"] = a;
    e["verticals"] = Json::array();
    for (const BaseLabel& m : members) e["verticals"].push_back(to_string(m));
    j["v_unknots"].push_back(std::move(e));
  }
  return j;
}

inline Json to_json(const CrossingReport& r) {
  Json j;
  j["top_left"] = r.top_left;
  j["bottom_left"] = r.bottom_left;
  j["bottom_right"] = r.bottom_right;
  j["top_right"] = r.top_right;
  j["total"] = r.total();
  return j;
}

inline CrossingReport crossing_report_from_json(const Json& j) {
  CrossingReport r;
  r.top_left = j.at("top_left");
  r.bottom_left = j.at("bottom_left");
  r.bottom_right = j.at("bottom_right");
  r.top_right = j.at("top_right");
  return r;
}

inline Json to_json(const DehnRecipe& r) {
  Json j;
  j["annular"] = Json::array();
  for (const auto& [ann, den] : r.annular) {
    Json e;
    e["side"] = ann.side == AnnulusSide::XSide ? "x" : "y";
    e["exponent"] = ann.exponent;
    e["slope"] = Json::array({1, den});
    j["annular"].push_back(std::move(e));
  }
  j["v_fillings"] = Json::array();
  for (const auto& [a, slope] : r.v_fillings) {
    Json e;
    e["y_exponent"] = a;
    e["slope"] = slope == VSlope::MinusOne ? "-1" : "trivial";
    j["v_fillings"].push_back(std::move(e));
  }
  j["u_filling"] = "trivial";
  j["trefoil_filling"] = r.trefoil_filling == TrefoilFilling::Keep ? "keep" : "trivial-fill";
  return j;
}

inline DehnRecipe recipe_from_json(const Json& j) {
  DehnRecipe r;
  for (const Json& e : j.at("annular")) {
    Annulus a{e.at("side") == "x" ? AnnulusSide::XSide : AnnulusSide::YSide,
              e.at("exponent").get<long long>()};
    r.annular.emplace_back(a, e.at("slope")[1].get<long long>());
  }
  for (const Json& e : j.at("v_fillings"))
    r.v_fillings[e.at("y_exponent").get<long long>()] =
        e.at("slope") == "-1" ? VSlope::MinusOne : VSlope::Trivial;
  r.trefoil_filling =
      j.at("trefoil_filling") == "keep" ? TrefoilFilling::Keep : TrefoilFilling::TrivialFill;
  return r;
}

inline Json to_json(const BoundReport& r) {
  Json j;
  j["nbar"] = r.nbar;
  j["iota_total"] = r.iota_total;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", r.quadratic);
  j["quadratic_bound"] = buf;
  std::snprintf(buf, sizeof(buf), "%.6f", r.count_based);
  j["count_based_bound"] = buf;
  if (r.linear) {
    std::snprintf(buf, sizeof(buf), "%.6f", *r.linear);
    j["linear_bound"] = buf;
  } else {
    j["linear_bound"] = nullptr;
  }
  j["applicability_note"] = r.applicability_note;
  return j;
}

inline Json to_json(const VerificationReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["detail"] = r.detail;
  return j;
}

}  // namespace lorenz
