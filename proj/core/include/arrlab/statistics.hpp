#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "arrlab/cell_analysis.hpp"
#include "arrlab/constructions.hpp"
#include "arrlab/enumeration.hpp"

namespace arrlab {

/// Enumeration plus per-cell analysis of one simple arrangement; for d = 3
/// the bounded facets are enumerated as well.
class Analysis {
 public:
  explicit Analysis(Arrangement arr);

  const ArrangementComplex& complex() const { return complex_; }
  const Arrangement& arrangement() const { return complex_.arrangement(); }
  std::size_t dim() const { return complex_.dim(); }
  std::size_t size() const { return complex_.size(); }
  const std::vector<CellRecord>& cells() const { return cells_; }
  /// Throws UnsupportedDimensionError unless d = 3.
  const std::vector<BoundedFacet>& facets() const;

 private:
  ArrangementComplex complex_;
  std::vector<CellRecord> cells_;
  std::optional<std::vector<BoundedFacet>> facets_;
};

struct CensusReport {
  std::optional<ConstructionMetadata> metadata;
  std::size_t dim = 0;
  std::size_t n = 0;
  std::size_t vertex_count = 0;
  std::size_t bounded_cells = 0;
  std::map<CellClass, std::size_t> class_counts;
  Rational delta;
  Rational diameter_sum;
  std::optional<std::size_t> f_bounded;   // bounded edges (d=2) or bounded facets (d=3)
  std::optional<std::size_t> f_external;  // external edges or facets
  std::optional<std::size_t> p_odd;       // d=2 only
  std::vector<CellRecord> cells;

  std::size_t count(const CellClass& cls) const;
  /// Cells with d+1 vertices (triangles in the plane).
  std::size_t simplices() const;
  /// Cells whose skeleton is the d-cube graph (quadrilaterals in the plane).
  std::size_t cubes() const;
  /// Prisms over a (d-1)-simplex (quadrilaterals in the plane).
  std::size_t simplex_prisms() const;
};

Rational average_diameter(const Analysis& analysis);
Rational average_diameter(const Arrangement& arr);

CensusReport census(const Analysis& analysis, std::optional<ConstructionMetadata> metadata = std::nullopt);
CensusReport census(const Arrangement& arr, std::optional<ConstructionMetadata> metadata = std::nullopt);

/// Bounded (d-1)-faces lying in exactly one bounded cell. d must be 2 or 3.
std::size_t external_face_count(const Analysis& analysis);
std::size_t external_face_count(const Arrangement& arr);

/// Bounded (d-1)-faces: bounded edges for d = 2, bounded facets for d = 3.
std::size_t bounded_face_count(const Analysis& analysis);

/// Bounded cells with an odd number of vertices. d must be 2.
std::size_t p_odd_count(const Analysis& analysis);
std::size_t p_odd_count(const Arrangement& arr);

}  // namespace arrlab
