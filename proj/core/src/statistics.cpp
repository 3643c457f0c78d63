#include "arrlab/statistics.hpp"

#include "arrlab/errors.hpp"

namespace arrlab {

Analysis::Analysis(Arrangement arr) : complex_(std::move(arr)) {
  cells_ = analyze_cells(complex_);
  if (complex_.dim() == 3) facets_ = enumerate_bounded_facets(complex_.arrangement());
}

const std::vector<BoundedFacet>& Analysis::facets() const {
  if (!facets_) throw UnsupportedDimensionError("bounded facets are enumerated for d = 3 only");
  return *facets_;
}

std::size_t CensusReport::count(const CellClass& cls) const {
  auto it = class_counts.find(cls);
  return it == class_counts.end() ? 0 : it->second;
}

std::size_t CensusReport::simplices() const {
  return dim == 2 ? count(CellClass::polygon(3)) : count(CellClass::simplex(dim));
}

std::size_t CensusReport::cubes() const {
  return dim == 2 ? count(CellClass::polygon(4)) : count(CellClass::cube(dim));
}

std::size_t CensusReport::simplex_prisms() const {
  return dim == 2 ? count(CellClass::polygon(4)) : count(CellClass::simplex_product(1, dim - 1));
}

Rational average_diameter(const Analysis& analysis) {
  Rational sum;
  for (const auto& c : analysis.cells()) sum += Rational(static_cast<long>(c.diameter));
  return sum / Rational(static_cast<long>(analysis.cells().size()));
}

Rational average_diameter(const Arrangement& arr) { return average_diameter(Analysis(arr)); }

namespace {

void require_dim(const Analysis& analysis, bool ok, const char* what) {
  if (!ok) {
    throw UnsupportedDimensionError(std::string(what) + " is not defined for d = " +
                                    std::to_string(analysis.dim()));
  }
}

// Number of bounded cells among the two cells on either side of a face.
int bounded_neighbours(const ArrangementComplex& complex, const CellSignature& lo, const CellSignature& hi) {
  int k = 0;
  if (complex.find_cell(lo) < complex.cells().size()) ++k;
  if (complex.find_cell(hi) < complex.cells().size()) ++k;
  return k;
}

}  // namespace

std::size_t bounded_face_count(const Analysis& analysis) {
  require_dim(analysis, analysis.dim() == 2 || analysis.dim() == 3, "bounded face count");
  if (analysis.dim() == 2) return analysis.complex().bounded_edge_count();
  return analysis.facets().size();
}

std::size_t external_face_count(const Analysis& analysis) {
  require_dim(analysis, analysis.dim() == 2 || analysis.dim() == 3, "external face count");
  const auto& complex = analysis.complex();
  std::size_t external = 0;
  if (analysis.dim() == 2) {
    for (const auto& e : complex.edges()) {
      if (!e.bounded()) continue;
      CellSignature lo{e.sign_vector};
      CellSignature hi{e.sign_vector};
      const std::size_t line = e.line_set.front();
      lo.signs[line] = Sign::Negative;
      hi.signs[line] = Sign::Positive;
      if (bounded_neighbours(complex, lo, hi) == 1) ++external;
    }
  } else {
    for (const auto& f : analysis.facets()) {
      if (bounded_neighbours(complex, f.incident[0], f.incident[1]) == 1) ++external;
    }
  }
  return external;
}

std::size_t external_face_count(const Arrangement& arr) { return external_face_count(Analysis(arr)); }

std::size_t p_odd_count(const Analysis& analysis) {
  require_dim(analysis, analysis.dim() == 2, "p_odd");
  std::size_t odd = 0;
  for (const auto& c : analysis.cells()) {
    if (c.counts.vertices % 2 == 1) ++odd;
  }
  return odd;
}

std::size_t p_odd_count(const Arrangement& arr) { return p_odd_count(Analysis(arr)); }

CensusReport census(const Analysis& analysis, std::optional<ConstructionMetadata> metadata) {
  CensusReport r;
  r.metadata = std::move(metadata);
  r.dim = analysis.dim();
  r.n = analysis.size();
  r.vertex_count = analysis.complex().vertices().size();
  r.bounded_cells = analysis.cells().size();
  for (const auto& c : analysis.cells()) {
    ++r.class_counts[c.classification];
    r.diameter_sum += Rational(static_cast<long>(c.diameter));
  }
  r.delta = r.diameter_sum / Rational(static_cast<long>(r.bounded_cells));
  if (r.dim == 2 || r.dim == 3) {
    r.f_bounded = bounded_face_count(analysis);
    r.f_external = external_face_count(analysis);
  }
  if (r.dim == 2) r.p_odd = p_odd_count(analysis);
  r.cells = analysis.cells();
  return r;
}

CensusReport census(const Arrangement& arr, std::optional<ConstructionMetadata> metadata) {
  return census(Analysis(arr), std::move(metadata));
}

}  // namespace arrlab
