#include "toromaps/coset_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace toromaps {

namespace {

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string fmt_cm(double v) {
  if (std::fabs(v) < 5e-4) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fcm", v);
  return buf;
}

}  // namespace

SchreierGraph build_graph(std::span<const Permutation> generators,
                          std::span<const std::string> labels) {
  if (generators.size() != labels.size()) {
    throw std::invalid_argument("one label per generator required");
  }
  SchreierGraph g;
  g.vertex_count = generators.empty() ? 0 : generators.front().degree();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Permutation& p = generators[i];
    if (p.degree() != g.vertex_count) {
      throw std::invalid_argument("generators of different degree");
    }
    const bool involution = p.order() == 2;
    for (Point x = 0; x < p.degree(); ++x) {
      const Point y = p(x);
      if (y == x) continue;
      if (involution && y < x) continue;
      g.edges.push_back({x, y, labels[i], !involution});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& l, const GraphEdge& r) {
    return std::tie(l.source, l.label, l.target) < std::tie(r.source, r.label, r.target);
  });
  return g;
}

SchreierGraph build_graph(const PermutationRep& rep,
                          std::span<const std::string> labels) {
  const Permutation gens[] = {rep.a, rep.b};
  return build_graph(std::span<const Permutation>(gens), labels);
}

std::vector<Permutation> permutations_from_graph(const SchreierGraph& g,
                                                 std::span<const std::string> labels) {
  const std::size_t n = g.vertex_count;
  constexpr Point kUnset = ~Point{0};
  std::vector<std::vector<Point>> images(labels.size(), std::vector<Point>(n, kUnset));
  auto set = [&](std::size_t gen, Point x, Point y) {
    if (x >= n || y >= n) throw std::invalid_argument("edge endpoint out of range");
    if (images[gen][x] != kUnset) throw std::invalid_argument("duplicate edge");
    images[gen][x] = y;
  };
  for (const GraphEdge& e : g.edges) {
    const auto it = std::find(labels.begin(), labels.end(), e.label);
    if (it == labels.end()) throw std::invalid_argument("unknown edge label " + e.label);
    const auto gen = static_cast<std::size_t>(it - labels.begin());
    set(gen, e.source, e.target);
    if (!e.directed) set(gen, e.target, e.source);
  }
  std::vector<Permutation> out;
  for (auto& im : images) {
    for (Point x = 0; x < n; ++x) {
      if (im[x] == kUnset) im[x] = x;
    }
    out.emplace_back(std::move(im));
  }
  return out;
}

std::string emit_dot(const SchreierGraph& g) {
  std::string out = "digraph schreier {\n  node [shape=ellipse];\n";
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    out += "  " + std::to_string(v + 1) + ";\n";
  }
  for (const GraphEdge& e : g.edges) {
    out += "  " + std::to_string(e.source + 1) + " -> " + std::to_string(e.target + 1) +
           " [label=\"" + escape_dot(e.label) + "\"" + (e.directed ? "" : ", dir=none") +
           "];\n";
  }
  return out + "}\n";
}

std::vector<Position> layout_positions(const SchreierGraph& g, Layout layout) {
  const std::size_t n = g.vertex_count;
  const double radius = std::max(2.0, 0.35 * static_cast<double>(n));
  std::vector<Position> pos(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = std::numbers::pi / 2 +
                         2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    pos[i] = {radius * std::cos(angle), radius * std::sin(angle)};
  }
  if (n <= 1) pos.assign(n, Position{});
  if (layout == Layout::Circular || n <= 2) return pos;

  // Fruchterman-Reingold from the circular start with linear cooling.
  const double area = 4 * radius * radius;
  const double k = std::sqrt(area / static_cast<double>(n));
  constexpr int kIterations = 300;
  for (int it = 0; it < kIterations; ++it) {
    const double temperature = radius * 0.1 * (1.0 - static_cast<double>(it) / kIterations);
    std::vector<Position> disp(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double dx = pos[i].x - pos[j].x;
        double dy = pos[i].y - pos[j].y;
        const double dist = std::max(1e-6, std::hypot(dx, dy));
        const double f = k * k / dist;
        disp[i].x += dx / dist * f;
        disp[i].y += dy / dist * f;
        disp[j].x -= dx / dist * f;
        disp[j].y -= dy / dist * f;
      }
    }
    for (const GraphEdge& e : g.edges) {
      const double dx = pos[e.source].x - pos[e.target].x;
      const double dy = pos[e.source].y - pos[e.target].y;
      const double dist = std::max(1e-6, std::hypot(dx, dy));
      const double f = dist * dist / k;
      disp[e.source].x -= dx / dist * f;
      disp[e.source].y -= dy / dist * f;
      disp[e.target].x += dx / dist * f;
      disp[e.target].y += dy / dist * f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double len = std::max(1e-9, std::hypot(disp[i].x, disp[i].y));
      const double step = std::min(len, temperature);
      pos[i].x += disp[i].x / len * step;
      pos[i].y += disp[i].y / len * step;
    }
  }
  // Recentre and scale into the circle of the circular layout.
  double cx = 0;
  double cy = 0;
  for (const auto& p : pos) {
    cx += p.x;
    cy += p.y;
  }
  cx /= static_cast<double>(n);
  cy /= static_cast<double>(n);
  double extent = 1e-9;
  for (auto& p : pos) {
    p.x -= cx;
    p.y -= cy;
    extent = std::max(extent, std::hypot(p.x, p.y));
  }
  for (auto& p : pos) {
    p.x *= radius / extent;
    p.y *= radius / extent;
  }
  return pos;
}

std::string emit_tikz(const SchreierGraph& g, Layout layout) {
  const std::vector<Position> pos = layout_positions(g, layout);
  std::string out = "\\begin{tikzpicture}[>=latex,line join=bevel]\n";
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    const std::string name = std::to_string(v + 1);
    out += "  \\node (" + name + ") at (" + fmt_cm(pos[v].x) + "," + fmt_cm(pos[v].y) +
           ") [draw,ellipse] {" + name + "};\n";
  }
  for (const GraphEdge& e : g.edges) {
    const std::string s = std::to_string(e.source + 1);
    const std::string t = std::to_string(e.target + 1);
    if (e.directed) {
      out += "  \\draw [->] (" + s + ") to[bend left=12] node[auto,font=\\small] {" +
             e.label + "} (" + t + ");\n";
    } else {
      out += "  \\draw (" + s + ") -- node[auto,font=\\small] {" + e.label + "} (" + t +
             ");\n";
    }
  }
  return out + "\\end{tikzpicture}\n";
}

}  // namespace toromaps
