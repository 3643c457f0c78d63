#include "arrlab/cell_analysis.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <regex>

#include "arrlab/errors.hpp"
#include "arrlab/parallel.hpp"

namespace arrlab {

CellClass CellClass::simplex_product(std::size_t k, std::size_t l) {
  return {Kind::SimplexProduct, std::min(k, l), std::max(k, l), 0};
}

std::string CellClass::name() const {
  auto s = [](std::size_t x) { return std::to_string(x); };
  switch (kind) {
    case Kind::Simplex: return "Simplex(" + s(a) + ")";
    case Kind::Cube: return "Cube(" + s(a) + ")";
    case Kind::SimplexProduct: return "SimplexProduct(" + s(a) + "," + s(b) + ")";
    case Kind::Polygon: return "Polygon(" + s(a) + ")";
    case Kind::Shell: return "Shell(" + s(a) + ")";
    case Kind::Other: return "Other(" + s(a) + "," + s(b) + "," + s(c) + ")";
  }
  return "?";
}

CellClass CellClass::parse(const std::string& name) {
  static const std::regex pattern(R"(^(Simplex|Cube|SimplexProduct|Polygon|Shell|Other)\((\d+)(?:,(\d+))?(?:,(\d+))?\)$)");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) throw InputError("unknown cell class \"" + name + "\"");
  auto num = [&](int i) -> std::size_t { return m[i].matched ? std::stoul(m[i].str()) : 0; };
  const std::string kind = m[1].str();
  const bool second = m[3].matched;
  const bool third = m[4].matched;
  if (kind == "SimplexProduct" && second && !third) return simplex_product(num(2), num(3));
  if (kind == "Other" && second && third) return other(num(2), num(3), num(4));
  if (!second) {
    if (kind == "Simplex") return simplex(num(2));
    if (kind == "Cube") return cube(num(2));
    if (kind == "Polygon") return polygon(num(2));
    if (kind == "Shell") return shell(num(2));
  }
  throw InputError("malformed cell class \"" + name + "\"");
}

CellSkeleton cell_skeleton(const BoundedCell& cell, const ArrangementComplex& complex) {
  CellSkeleton sk{cell.vertex_ids, Graph(cell.vertex_ids.size())};
  auto local = [&](std::size_t vid) {
    auto it = std::lower_bound(sk.vertex_ids.begin(), sk.vertex_ids.end(), vid);
    if (it == sk.vertex_ids.end() || *it != vid) {
      throw ConsistencyError("edge endpoint " + std::to_string(vid) + " is not a vertex of cell " +
                             cell.signature.to_string());
    }
    return static_cast<std::size_t>(it - sk.vertex_ids.begin());
  };
  for (const auto& e : complex.edges()) {
    if (!e.bounded() || !face_in_closure(e.sign_vector, cell.signature)) continue;
    sk.graph.add_edge(local(e.segment().from), local(e.segment().to));
  }
  if (!sk.graph.is_connected()) {
    throw ConsistencyError("skeleton of cell " + cell.signature.to_string() + " is disconnected");
  }
  if (!sk.graph.is_regular(complex.dim())) {
    throw ConsistencyError("skeleton of cell " + cell.signature.to_string() + " is not " +
                           std::to_string(complex.dim()) + "-regular");
  }
  return sk;
}

std::size_t cell_diameter(const Graph& skeleton) { return graph_diameter(skeleton); }

FaceCounts cell_f_counts(const CellSkeleton& skeleton, const ArrangementComplex& complex) {
  std::vector<bool> seen(complex.size(), false);
  for (std::size_t vid : skeleton.vertex_ids) {
    for (std::size_t h : complex.vertices()[vid].tight_set) seen[h] = true;
  }
  return FaceCounts{skeleton.graph.size(), skeleton.graph.edge_count(),
                    static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true))};
}

namespace {

// Canonical forms of reference skeletons, keyed by (kind, a, b).
const std::string& reference_form(CellClass::Kind kind, std::size_t a, std::size_t b) {
  static std::mutex mutex;
  static std::map<std::tuple<int, std::size_t, std::size_t>, std::string> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(static_cast<int>(kind), a, b);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Graph g = kind == CellClass::Kind::Cube ? hypercube(a) : complete_product(a + 1, b + 1);
    it = cache.emplace(key, canonical_form(g)).first;
  }
  return it->second;
}

}  // namespace

CellClass classify_cell(const CellSkeleton& skeleton, const FaceCounts& counts, std::size_t dim,
                        std::size_t hyperplanes) {
  const std::size_t v = counts.vertices;
  if (dim == 2) return CellClass::polygon(v);
  if (v == dim + 1) return CellClass::simplex(dim);

  std::optional<std::string> form;
  auto matches = [&](CellClass::Kind kind, std::size_t a, std::size_t b) {
    if (!form) form = canonical_form(skeleton.graph);
    return *form == reference_form(kind, a, b);
  };
  if (dim < 8 * sizeof(std::size_t) && v == (std::size_t{1} << dim) && counts.facets == 2 * dim &&
      matches(CellClass::Kind::Cube, dim, 0)) {
    return CellClass::cube(dim);
  }
  for (std::size_t k = 1; 2 * k <= dim; ++k) {
    if (v == (k + 1) * (dim - k + 1) && counts.facets == dim + 2 &&
        matches(CellClass::Kind::SimplexProduct, k, dim - k)) {
      return CellClass::simplex_product(k, dim - k);
    }
  }
  if (dim == 3 && counts.facets == hyperplanes && hyperplanes >= 2 && v == 2 * (hyperplanes - 2)) {
    return CellClass::shell(hyperplanes);
  }
  return CellClass::other(v, counts.edges, counts.facets);
}

std::vector<CellRecord> analyze_cells(const ArrangementComplex& complex) {
  const auto& cells = complex.cells();
  std::vector<CellRecord> records(cells.size());
  parallel_for(cells.size(), [&](std::size_t i) {
    CellRecord r;
    r.signature = cells[i].signature;
    r.skeleton = cell_skeleton(cells[i], complex);
    r.counts = cell_f_counts(r.skeleton, complex);
    r.diameter = cell_diameter(r.skeleton.graph);
    r.classification = classify_cell(r.skeleton, r.counts, complex.dim(), complex.size());
    if (r.classification.kind == CellClass::Kind::Shell) r.canonical_form = canonical_form(r.skeleton.graph);
    records[i] = std::move(r);
  });
  return records;
}

}  // namespace arrlab
