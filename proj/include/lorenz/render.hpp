#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "lorenz/bunch.hpp"
#include "lorenz/classify.hpp"
#include "lorenz/parent.hpp"

namespace lorenz {

struct RenderOptions {
  double unit = 40.0;        // pixels per branch-line integer
  bool show_unused = true;   // draw hollow dots for unoccupied slots
  std::string palette = "default";  // "default" or "mono"
};

namespace render_detail {

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

// Colour intensity per label: darker = lower index.
inline std::string side_colour(const RenderOptions& opts, Letter kind, int index, int nbar) {
  double t = nbar > 1 ? static_cast<double>(index - 1) / (nbar - 1) : 0.0;
  int c = static_cast<int>(30 + 190 * t);
  char buf[32];
  if (opts.palette == "mono") {
    std::snprintf(buf, sizeof(buf), "rgb(%d,%d,%d)", c, c, c);
  } else if (kind == Letter::X) {
    std::snprintf(buf, sizeof(buf), "rgb(%d,%d,220)", c, c);
  } else {
    std::snprintf(buf, sizeof(buf), "rgb(220,%d,%d)", c, c);
  }
  return buf;
}

struct StrandPath {
  bool vertical;
  double fixed;          // x if vertical, y if horizontal
  double from, to;       // along the variable axis, from < to
  std::vector<double> gaps;
  std::string colour;
  std::string cls;
};

inline void emit_strand(std::string& svg, const StrandPath& s, double gap_radius) {
  std::vector<double> cuts = s.gaps;
  std::sort(cuts.begin(), cuts.end());
  std::string dpath;
  double pos = s.from;
  auto point = [&s](double v) {
    return s.vertical ? fmt(s.fixed) + " " + fmt(v) : fmt(v) + " " + fmt(s.fixed);
  };
  for (double c : cuts) {
    dpath += "M " + point(pos) + " L " + point(c - gap_radius) + " ";
    pos = c + gap_radius;
  }
  dpath += "M " + point(pos) + " L " + point(s.to);
  svg += "<path class=\"" + s.cls + "\" d=\"" + dpath + "\" stroke=\"" + s.colour +
         "\" stroke-width=\"2\" fill=\"none\"/>\n";
}

}  // namespace render_detail

// Split template: branch line with integer ticks, the slot grid, and every
// turn drawn as an arc through its ear.
inline std::string render_template_svg(const TemplateEmbedding& emb, const RenderOptions& opts = {}) {
  using render_detail::fmt;
  const double unit = opts.unit;
  const int nbar = static_cast<int>(emb.orders.x_order.size());
  const double margin = unit;
  const double span = static_cast<double>(emb.k_mu + emb.l_lambda);
  const double width = 2 * margin + (span + 1) * unit;
  const double ybase = margin + 4.5 * unit;
  const double height = ybase + 1.5 * unit;

  auto slot_x = [&](const Slot& s) {
    double centre = margin + (static_cast<double>(s.interval) + emb.k_mu + 0.5) * unit;
    return centre + (-0.4 + 0.8 * s.rank / (nbar + 1)) * unit;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // branch line and ticks
  svg += "<line x1=\"" + fmt(margin) + "\" y1=\"" + fmt(ybase) + "\" x2=\"" + fmt(width - margin) +
         "\" y2=\"" + fmt(ybase) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  for (long long i = -emb.k_mu; i <= emb.l_lambda; ++i) {
    double x = margin + (static_cast<double>(i) + emb.k_mu + 0.5) * unit;
    const char* dash = i == 0 ? " stroke-dasharray=\"4 3\"" : "";
    double tick_top = i == 0 ? margin : ybase - 5;
    svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(tick_top) + "\" x2=\"" + fmt(x) + "\" y2=\"" +
           fmt(ybase + 5) + "\" stroke=\"black\" stroke-width=\"1\"" + dash + "/>\n";
    svg += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(ybase + 18) +
           "\" font-size=\"10\" text-anchor=\"middle\">" + std::to_string(i) + "</text>\n";
  }

  // turn arcs: x-turns through the left ear, y-turns through the right ear
  for (const auto& [label, turns] : emb.arcs) {
    std::string colour = render_detail::side_colour(opts, label.kind, label.index, nbar);
    for (const Turn& t : turns) {
      double x1 = slot_x(t.from);
      double x2 = slot_x(t.to);
      double rise = unit * (1.0 + 0.35 * std::min(4.0, std::abs(x2 - x1) / unit));
      svg += "<path d=\"M " + fmt(x1) + " " + fmt(ybase) + " Q " + fmt((x1 + x2) / 2) + " " +
             fmt(ybase - rise) + " " + fmt(x2) + " " + fmt(ybase) + "\" stroke=\"" + colour +
             "\" stroke-width=\"1.6\" fill=\"none\"/>\n";
    }
  }

  // slots on top of the arcs
  for (const Slot& s : emb.slots) {
    if (!s.used && !opts.show_unused) continue;
    std::string colour = render_detail::side_colour(opts, s.label.kind, s.label.index, nbar);
    if (s.used) {
      svg += "<circle cx=\"" + fmt(slot_x(s)) + "\" cy=\"" + fmt(ybase) +
             "\" r=\"3.000000\" fill=\"" + colour + "\"/>\n";
    } else {
      svg += "<circle cx=\"" + fmt(slot_x(s)) + "\" cy=\"" + fmt(ybase) +
             "\" r=\"2.400000\" fill=\"white\" stroke=\"" + colour + "\" stroke-width=\"1\"/>\n";
    }
  }

  svg += "</svg>\n";
  return svg;
}

// Parent-link projection: rectilinear strands with crossing gaps on the under
// strand, annuli as shaded bands, V-unknot ellipses, schematic U and T.
inline std::string render_parent_svg(const ParentDiagram& d, const RenderOptions& opts = {}) {
  using render_detail::fmt;
  using render_detail::StrandPath;
  const double unit = opts.unit;
  const int nbar = d.nbar;

  double min_a = 0, max_b = 0;
  for (const HSegment& h : d.blue_h) {
    min_a = std::min(min_a, boost::rational_cast<double>(h.left));
    max_b = std::max(max_b, boost::rational_cast<double>(h.right));
  }
  const double margin = 1.5 * unit;
  auto X = [&](const Rational& a) {
    return margin + (boost::rational_cast<double>(a) - min_a + 0.5) * unit;
  };
  auto Y = [&](double h) { return margin + (2 * nbar + 1 - h) * unit; };
  const double width = 2 * margin + (max_b - min_a + 1) * unit;
  const double height = 2 * margin + (2 * nbar + 1) * unit;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // annuli bands, outer boundary at previous exponent + 0.55, inner at e + 0.45;
  // coarse exponents recovered from the v_unknot keys and blue_h left abscissas
  std::vector<long long> xd, ya;
  for (const HSegment& h : d.blue_h) {
    long long k = (-h.left).numerator() / (-h.left).denominator();  // floor of k + frac
    if (std::find(xd.begin(), xd.end(), k) == xd.end()) xd.push_back(k);
  }
  std::sort(xd.begin(), xd.end());
  for (const auto& [a, members] : d.v_unknots) ya.push_back(a);
  std::sort(ya.begin(), ya.end());

  long long prev = 0;
  for (long long e : xd) {
    double x0 = X(Rational(-e) - Rational(45, 100));
    double x1 = X(Rational(-prev) - Rational(55, 100));
    svg += "<rect x=\"" + fmt(x0) + "\" y=\"" + fmt(Y(2 * nbar + 0.5)) + "\" width=\"" +
           fmt(x1 - x0) + "\" height=\"" + fmt((2 * nbar) * unit) +
           "\" fill=\"rgb(225,235,245)\"/>\n";
    prev = e;
  }
  prev = 0;
  for (long long e : ya) {
    double x0 = X(Rational(prev) + Rational(55, 100));
    double x1 = X(Rational(e) + Rational(45, 100));
    svg += "<rect x=\"" + fmt(x0) + "\" y=\"" + fmt(Y(2 * nbar + 0.5)) + "\" width=\"" +
           fmt(x1 - x0) + "\" height=\"" + fmt((2 * nbar) * unit) +
           "\" fill=\"rgb(245,230,230)\"/>\n";
    prev = e;
  }

  // strands with gaps at crossings where they go under
  std::map<std::pair<char, int>, StrandPath> strands;  // ('H'/'V' + colour tag via label)
  auto key_h = [](const BaseLabel& b) { return std::pair('H', b.kind == Letter::X ? b.index : -b.index); };
  auto key_v = [](const BaseLabel& b) { return std::pair('V', b.kind == Letter::X ? b.index : -b.index); };
  for (const HSegment& h : d.blue_h)
    strands[key_h(h.label)] = StrandPath{false, Y(h.height), X(h.left), X(h.right), {},
                                         render_detail::side_colour(opts, Letter::X, h.label.index, nbar),
                                         "strand"};
  for (const HSegment& h : d.red_h)
    strands[key_h(h.label)] = StrandPath{false, Y(h.height), X(h.left), X(h.right), {},
                                         render_detail::side_colour(opts, Letter::Y, h.label.index, nbar),
                                         "strand"};
  for (const VSegment& v : d.blue_v)
    strands[key_v(v.label)] = StrandPath{true, X(v.abscissa), Y(v.top), Y(v.bottom), {},
                                         render_detail::side_colour(opts, Letter::X, v.label.index, nbar),
                                         "strand"};
  for (const VSegment& v : d.red_v)
    strands[key_v(v.label)] = StrandPath{true, X(v.abscissa), Y(v.top), Y(v.bottom), {},
                                         render_detail::side_colour(opts, Letter::Y, v.label.index, nbar),
                                         "strand"};

  auto abscissa_of_v = [&](const BaseLabel& b) { return strands[key_v(b)].fixed; };
  auto height_of_h = [&](const BaseLabel& b) { return strands[key_h(b)].fixed; };
  for (const Crossing& c : d.crossings) {
    double cx = abscissa_of_v(c.vertical);
    double cy = height_of_h(c.horizontal);
    if (c.vertical_over)
      strands[key_h(c.horizontal)].gaps.push_back(cx);
    else
      strands[key_v(c.vertical)].gaps.push_back(cy);
  }
  for (const auto& [key, s] : strands) render_detail::emit_strand(svg, s, 0.12 * unit);

  // V-unknots around the blue verticals approaching each y-annulus
  for (const auto& [a, members] : d.v_unknots) {
    double lo = 1e18, hi = -1e18;
    for (const BaseLabel& m : members) {
      double x = abscissa_of_v(m);
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    svg += "<ellipse class=\"vunknot\" cx=\"" + fmt((lo + hi) / 2) + "\" cy=\"" + fmt(Y(nbar + 0.5)) +
           "\" rx=\"" + fmt((hi - lo) / 2 + 0.28 * unit) + "\" ry=\"" + fmt(0.3 * unit) +
           "\" fill=\"none\" stroke=\"rgb(90,150,90)\" stroke-width=\"1.5\"/>\n";
  }

  // schematic U (boundary of the disc) and trefoil T
  svg += "<rect x=\"" + fmt(margin / 3) + "\" y=\"" + fmt(margin / 3) + "\" width=\"" +
         fmt(width - 2 * margin / 3) + "\" height=\"" + fmt(height - 2 * margin / 3) +
         "\" rx=\"" + fmt(unit / 2) +
         "\" fill=\"none\" stroke=\"rgb(120,120,120)\" stroke-width=\"1.5\"/>\n";
  svg += "<text x=\"" + fmt(margin / 3 + 6) + "\" y=\"" + fmt(margin / 3 + 14) +
         "\" font-size=\"12\">U</text>\n";
  svg += "<path d=\"M " + fmt(width - margin) + " " + fmt(margin / 2) + " c 10 20 30 20 40 0 c -10 -20 "
         "-30 -20 -40 0\" fill=\"none\" stroke=\"rgb(160,120,60)\" stroke-width=\"1.5\"/>\n";
  svg += "<text x=\"" + fmt(width - margin + 14) + "\" y=\"" + fmt(margin / 2 + 28) +
         "\" font-size=\"12\">T</text>\n";

  svg += "</svg>\n";
  return svg;
}

}  // namespace lorenz
