#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrlab/enumeration.hpp"
#include "arrlab/graph.hpp"

namespace arrlab {

/// Combinatorial type of a bounded cell.
struct CellClass {
  enum class Kind { Simplex, Cube, SimplexProduct, Polygon, Shell, Other };

  Kind kind = Kind::Other;
  std::size_t a = 0;  // Simplex/Cube: dimension; SimplexProduct: k; Polygon: sides; Shell: facets; Other: V
  std::size_t b = 0;  // SimplexProduct: d-k (>= k); Other: E
  std::size_t c = 0;  // Other: F

  static CellClass simplex(std::size_t d) { return {Kind::Simplex, d, 0, 0}; }
  static CellClass cube(std::size_t d) { return {Kind::Cube, d, 0, 0}; }
  static CellClass simplex_product(std::size_t k, std::size_t l);
  static CellClass polygon(std::size_t sides) { return {Kind::Polygon, sides, 0, 0}; }
  static CellClass shell(std::size_t facets) { return {Kind::Shell, facets, 0, 0}; }
  static CellClass other(std::size_t v, std::size_t e, std::size_t f) { return {Kind::Other, v, e, f}; }

  /// "Simplex(3)", "Cube(3)", "SimplexProduct(1,2)", "Polygon(7)", "Shell(7)", "Other(V,E,F)".
  std::string name() const;
  static CellClass parse(const std::string& name);

  friend auto operator<=>(const CellClass&, const CellClass&) = default;
  friend bool operator==(const CellClass&, const CellClass&) = default;
};

/// Skeleton of one bounded cell; node k corresponds to vertex_ids[k].
struct CellSkeleton {
  std::vector<std::size_t> vertex_ids;
  Graph graph;
};

struct FaceCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t facets = 0;
  friend bool operator==(const FaceCounts&, const FaceCounts&) = default;
};

struct CellRecord {
  CellSignature signature;
  CellSkeleton skeleton;
  FaceCounts counts;
  std::size_t diameter = 0;
  CellClass classification;
  /// Recorded for Shell cells so that shells can be compared across runs.
  std::optional<std::string> canonical_form;
};

/// Nodes are the cell's vertices; u~v iff a bounded edge joining them lies in
/// the closure of the cell. Throws ConsistencyError unless the result is
/// connected and d-regular.
CellSkeleton cell_skeleton(const BoundedCell& cell, const ArrangementComplex& complex);

std::size_t cell_diameter(const Graph& skeleton);

/// V and E from the skeleton, F = number of distinct hyperplanes that are
/// tight at some vertex of the cell.
FaceCounts cell_f_counts(const CellSkeleton& skeleton, const ArrangementComplex& complex);

/// Precedence: Simplex, Cube, SimplexProduct, Shell, Other. In the plane every
/// cell is a Polygon. `hyperplanes` is the arrangement size n used for Shell(n).
CellClass classify_cell(const CellSkeleton& skeleton, const FaceCounts& counts, std::size_t dim,
                        std::size_t hyperplanes);

/// Full record for every bounded cell, in signature order. Cells are analysed
/// in parallel (see thread_count()).
std::vector<CellRecord> analyze_cells(const ArrangementComplex& complex);

}  // namespace arrlab
