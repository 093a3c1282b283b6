#include "farey/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "farey/metrics.hpp"
#include "farey/polygon.hpp"

namespace farey::render {
namespace {

constexpr double kPi = std::numbers::pi;

Point polar(double radius, double angle) { return {radius * std::cos(angle), radius * std::sin(angle)}; }

class SvgWriter {
 public:
  SvgWriter(double extent, const Options& options) : scale_(options.scale), half_(extent * options.scale + 40) {
    os_ << std::fixed << std::setprecision(3);
    os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << 2 * half_ << "\" height=\""
        << 2 * half_ << "\" viewBox=\"0 0 " << 2 * half_ << " " << 2 * half_ << "\">\n";
    os_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  // SVG y grows downwards; flip so anticlockwise stays anticlockwise.
  double sx(const Point& p) const { return half_ + p.x * scale_; }
  double sy(const Point& p) const { return half_ - p.y * scale_; }

  void circle(double radius, const std::string& style) {
    os_ << "<circle cx=\"" << half_ << "\" cy=\"" << half_ << "\" r=\"" << radius * scale_ << "\" " << style
        << "/>\n";
  }

  void line(const Point& a, const Point& b) {
    os_ << "<line x1=\"" << sx(a) << "\" y1=\"" << sy(a) << "\" x2=\"" << sx(b) << "\" y2=\"" << sy(b)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }

  void triangle(const Point& a, const Point& b, const Point& c) {
    os_ << "<polygon points=\"" << sx(a) << "," << sy(a) << " " << sx(b) << "," << sy(b) << " " << sx(c) << ","
        << sy(c) << "\" fill=\"#cfe0f3\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }

  void vertex(const Point& p, const std::string& label, bool with_label) {
    os_ << "<circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"3\" fill=\"black\"/>\n";
    if (with_label) {
      os_ << "<text x=\"" << sx(p) + 5 << "\" y=\"" << sy(p) - 5
          << "\" font-family=\"serif\" font-size=\"12\">" << label << "</text>\n";
    }
  }

  std::string finish() {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  double scale_;
  double half_;
  std::ostringstream os_;
};

}  // namespace

Layout shell_layout(const FareyMap& map) {
  const auto dist = bfs_from(map, 0);
  const int depth = *std::max_element(dist.begin(), dist.end());
  Layout layout;
  layout.positions.resize(map.num_vertices());
  for (int d = 0; d <= depth; ++d) {
    std::vector<int> shell;
    for (std::size_t v = 0; v < dist.size(); ++v)
      if (dist[v] == d) shell.push_back(static_cast<int>(v));
    for (std::size_t i = 0; i < shell.size(); ++i) {
      layout.positions[shell[i]] =
          d == 0 ? Point{} : polar(d, kPi / 2 + 2 * kPi * static_cast<double>(i) / static_cast<double>(shell.size()));
    }
    if (d > 0) layout.circles.push_back(d);
  }
  return layout;
}

Layout map_layout(const FareyMap& map) {
  const int p = map.level();
  if (p < 5 || !is_prime(p)) return shell_layout(map);

  Layout layout;
  layout.positions.resize(map.num_vertices());
  layout.circles = {1.0, 2.0, 3.0};
  const auto s1 = circuit_S1(p);
  const auto s2 = circuit_S2(p);
  const auto block = static_cast<double>(p - 4);
  const auto slots = static_cast<double>(s2.size());

  layout.positions[map.index_of(FareyFraction::canonical(1, 0, p))] = Point{};
  for (std::size_t k = 0; k < s1.size(); ++k) {
    const double angle = kPi / 2 + 2 * kPi * (static_cast<double>(k) * block - 0.5) / slots;
    layout.positions[map.index_of(s1.vertices[k])] = polar(1.0, angle);
  }
  for (std::size_t i = 0; i < s2.size(); ++i) {
    auto& slot = layout.positions[map.index_of(s2.vertices[i])];
    if (!slot) slot = polar(2.0, kPi / 2 + 2 * kPi * static_cast<double>(i) / slots);
  }
  const auto outer = decompose(p).poles;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    layout.positions[map.index_of(outer[i])] =
        polar(3.0, kPi / 2 + 2 * kPi * static_cast<double>(i) / static_cast<double>(outer.size()));
  }
  return layout;
}

Layout sector_layout(const FareyMap& map, const eleven::Sector& sector) {
  std::vector<char> included(map.num_faces(), 0);
  for (int f : sector.faces) included[f] = 1;
  // The sector on its own, glued along the edges its faces share.
  CutComplex complex(map, included, [](int) { return true; });
  const auto cycles = complex.boundary_cycles();
  const auto dist = bfs_from(map, 0);

  std::vector<int> order;
  for (const auto& cycle : cycles) {
    for (int d : cycle) order.push_back(map.source(d));
  }
  // Start at the centre so the wedge opens from 1/0.
  if (auto it = std::find(order.begin(), order.end(), 0); it != order.end()) {
    std::rotate(order.begin(), it, order.end());
  }
  Layout layout;
  layout.positions.resize(map.num_vertices());
  layout.circles = {1.0, 2.0, 3.0};
  const double wedge = 2 * kPi / eleven::kLevel * 3.0;
  const double start = kPi / 2 - wedge / 2;
  const std::size_t rim = order.empty() ? 1 : order.size() - 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto& slot = layout.positions[order[i]];
    if (slot) continue;
    if (dist[order[i]] == 0) {
      slot = Point{};
    } else {
      slot = polar(dist[order[i]], start + wedge * static_cast<double>(i - 1) / static_cast<double>(rim - 1));
    }
  }
  // Interior vertices of the sector, if any, go on their shell at the wedge centre.
  for (int f : sector.faces) {
    for (const auto& v : map.faces()[f].v) {
      auto& slot = layout.positions[map.index_of(v)];
      if (!slot) slot = polar(dist[map.index_of(v)], kPi / 2);
    }
  }
  return layout;
}

std::string render_map(const FareyMap& map, const Options& options) {
  const auto layout = map_layout(map);
  const double extent = layout.circles.empty() ? 1.0 : layout.circles.back();
  SvgWriter svg(extent, options);
  for (std::size_t i = 0; i < layout.circles.size(); ++i) {
    svg.circle(layout.circles[i], i + 1 == layout.circles.size() && layout.circles.size() == 3
                                      ? "fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 3\""
                                      : "fill=\"none\" stroke=\"gray\"");
  }
  for (auto [u, v] : map.edges()) svg.line(*layout.positions[u], *layout.positions[v]);
  for (std::size_t v = 0; v < map.num_vertices(); ++v) {
    svg.vertex(*layout.positions[v], map.vertex(static_cast<int>(v)).str(), options.labels);
  }
  return svg.finish();
}

std::string render_sector(const FareyMap& map, const eleven::Sector& sector, const Options& options) {
  if (map.level() != eleven::kLevel) {
    throw Error(ErrorCode::WrongLevel, "sector drawings exist for M3(11) only");
  }
  const auto layout = sector_layout(map, sector);
  SvgWriter svg(layout.circles.back(), options);
  for (double r : layout.circles) svg.circle(r, "fill=\"none\" stroke=\"lightgray\"");
  std::vector<int> drawn;
  for (int f : sector.faces) {
    const Face& face = map.faces()[f];
    svg.triangle(*layout.positions[map.index_of(face.v[0])], *layout.positions[map.index_of(face.v[1])],
                 *layout.positions[map.index_of(face.v[2])]);
    for (const auto& v : face.v) drawn.push_back(map.index_of(v));
  }
  std::sort(drawn.begin(), drawn.end());
  drawn.erase(std::unique(drawn.begin(), drawn.end()), drawn.end());
  for (int v : drawn) svg.vertex(*layout.positions[v], map.vertex(v).str(), options.labels);
  return svg.finish();
}

}  // namespace farey::render
