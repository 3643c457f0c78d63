#include "arrlab/export.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "arrlab/errors.hpp"

namespace arrlab {

namespace {

// Visits the nodes of a cycle (every node degree 2) starting at `start`,
// stepping first to its smaller-indexed neighbour.
std::vector<std::size_t> walk_cycle(const Graph& g, const std::vector<std::size_t>& nodes, std::size_t start) {
  std::vector<std::size_t> order{start};
  std::size_t prev = start;
  std::size_t cur = start;
  auto member = [&](std::size_t v) { return std::find(nodes.begin(), nodes.end(), v) != nodes.end(); };
  while (true) {
    std::size_t next = g.size();
    for (std::size_t w : g.neighbors(cur)) {
      if (w != prev && member(w) && (order.size() == 1 || w != order[order.size() - 2])) {
        next = w;
        break;
      }
    }
    if (next == g.size() || next == start) break;
    if (order.size() > nodes.size()) throw ConsistencyError("face boundary is not a cycle");
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  if (order.size() != nodes.size()) throw ConsistencyError("face boundary is not a single cycle");
  return order;
}

}  // namespace

std::string diameter_color(std::size_t diameter) {
  static const std::array<const char*, 6> ramp{"#fde725", "#7ad151", "#22a884", "#2a788e", "#414487", "#440154"};
  if (diameter == 0) return ramp[0];
  return ramp[std::min(diameter, ramp.size()) - 1];
}

std::string export_svg(const Analysis& analysis) {
  if (analysis.dim() != 2) throw UnsupportedDimensionError("SVG export needs a planar arrangement");
  const auto& complex = analysis.complex();
  const auto& vertices = complex.vertices();

  Rational xmin = vertices.front().point[0], xmax = xmin;
  Rational ymin = vertices.front().point[1], ymax = ymin;
  for (const auto& v : vertices) {
    xmin = std::min(xmin, v.point[0]);
    xmax = std::max(xmax, v.point[0]);
    ymin = std::min(ymin, v.point[1]);
    ymax = std::max(ymax, v.point[1]);
  }
  Rational padx = (xmax - xmin) * Rational(1, 5);
  Rational pady = (ymax - ymin) * Rational(1, 5);
  if (padx.is_zero()) padx = 1;
  if (pady.is_zero()) pady = 1;
  xmin -= padx;
  xmax += padx;
  ymin -= pady;
  ymax += pady;

  const Rational width(800);
  const Rational scale = width / (xmax - xmin);
  const Rational height = (ymax - ymin) * scale;
  auto sx = [&](const Rational& x) { return ((x - xmin) * scale).to_decimal(6); };
  auto sy = [&](const Rational& y) { return ((ymax - y) * scale).to_decimal(6); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width.to_decimal(6) << "\" height=\""
      << height.to_decimal(6) << "\" viewBox=\"0 0 " << width.to_decimal(6) << " " << height.to_decimal(6)
      << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width.to_decimal(6) << "\" height=\"" << height.to_decimal(6)
      << "\" fill=\"#ffffff\"/>\n";

  out << "<g class=\"cells\" stroke=\"none\">\n";
  for (const auto& cell : analysis.cells()) {
    std::vector<std::size_t> nodes(cell.skeleton.graph.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = i;
    out << "<polygon data-signature=\"" << cell.signature.to_string() << "\" data-diameter=\"" << cell.diameter
        << "\" fill=\"" << diameter_color(cell.diameter) << "\" points=\"";
    bool first = true;
    for (std::size_t local : walk_cycle(cell.skeleton.graph, nodes, 0)) {
      const auto& p = vertices[cell.skeleton.vertex_ids[local]].point;
      out << (first ? "" : " ") << sx(p[0]) << "," << sy(p[1]);
      first = false;
    }
    out << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g class=\"lines\" stroke=\"#000000\" stroke-width=\"1\">\n";
  for (const auto& h : complex.arrangement().hyperplanes()) {
    // Exact intersections of a.x = b with the four sides of the box.
    std::vector<std::array<Rational, 2>> hits;
    const Rational& a0 = h.a[0];
    const Rational& a1 = h.a[1];
    if (!a1.is_zero()) {
      for (const Rational& x : {xmin, xmax}) {
        Rational y = (h.b - a0 * x) / a1;
        if (y >= ymin && y <= ymax) hits.push_back({x, y});
      }
    }
    if (!a0.is_zero()) {
      for (const Rational& y : {ymin, ymax}) {
        Rational x = (h.b - a1 * y) / a0;
        if (x >= xmin && x <= xmax) hits.push_back({x, y});
      }
    }
    if (hits.size() < 2) continue;
    std::sort(hits.begin(), hits.end());
    const auto& p = hits.front();
    const auto& q = hits.back();
    out << "<line data-hyperplane=\"" << h.index + 1 << "\" x1=\"" << sx(p[0]) << "\" y1=\"" << sy(p[1])
        << "\" x2=\"" << sx(q[0]) << "\" y2=\"" << sy(q[1]) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g class=\"vertices\" fill=\"#000000\">\n";
  for (const auto& v : vertices) {
    out << "<circle cx=\"" << sx(v.point[0]) << "\" cy=\"" << sy(v.point[1]) << "\" r=\"3\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string export_off(const Analysis& analysis, const CellSignature& signature) {
  if (analysis.dim() != 3) throw UnsupportedDimensionError("OFF export needs a 3-dimensional arrangement");
  const auto& complex = analysis.complex();
  const std::size_t index = complex.find_cell(signature);
  if (index == complex.cells().size()) {
    throw InputError("\"" + signature.to_string() + "\" is not a bounded cell");
  }
  const CellRecord& cell = analysis.cells()[index];
  const auto& ids = cell.skeleton.vertex_ids;
  const auto& g = cell.skeleton.graph;
  auto point = [&](std::size_t local) -> const RationalVector& { return complex.vertices()[ids[local]].point; };

  RationalVector centroid(3);
  for (std::size_t i = 0; i < ids.size(); ++i) centroid = centroid + point(i);
  centroid = Rational(1, static_cast<long>(ids.size())) * centroid;

  std::vector<std::size_t> hyperplanes;
  for (std::size_t vid : ids) {
    for (std::size_t h : complex.vertices()[vid].tight_set) hyperplanes.push_back(h);
  }
  std::sort(hyperplanes.begin(), hyperplanes.end());
  hyperplanes.erase(std::unique(hyperplanes.begin(), hyperplanes.end()), hyperplanes.end());

  std::vector<std::vector<std::size_t>> faces;
  for (std::size_t h : hyperplanes) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const auto& tight = complex.vertices()[ids[i]].tight_set;
      if (std::binary_search(tight.begin(), tight.end(), h)) nodes.push_back(i);
    }
    auto order = walk_cycle(g, nodes, nodes.front());
    const RationalVector u = point(order[1]) - point(order[0]);
    const RationalVector w = point(order[2]) - point(order[0]);
    const RationalVector normal{u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
    if (dot(normal, centroid - point(order[0])).sign() > 0) std::reverse(order.begin() + 1, order.end());
    faces.push_back(std::move(order));
  }

  std::ostringstream out;
  out << "OFF\n" << ids.size() << " " << faces.size() << " " << g.edge_count() << "\n";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto& p = point(i);
    out << p[0].to_decimal(6) << " " << p[1].to_decimal(6) << " " << p[2].to_decimal(6) << "\n";
  }
  for (const auto& f : faces) {
    out << f.size();
    for (std::size_t v : f) out << " " << v;
    out << "\n";
  }
  return out.str();
}

}  // namespace arrlab
