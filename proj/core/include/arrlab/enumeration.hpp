#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "arrlab/arrangement.hpp"

namespace arrlab {

struct Vertex {
  RationalVector point;
  std::vector<std::size_t> tight_set;  // sorted, exactly d entries
  SignVector sign_vector;              // zeros exactly on tight_set
};

struct Segment {
  std::size_t from;
  std::size_t to;
};

struct Ray {
  std::size_t origin;
  RationalVector direction;
};

struct ArrangementEdge {
  std::vector<std::size_t> line_set;  // sorted, d-1 entries
  std::variant<Segment, Ray> extent;
  SignVector sign_vector;  // evaluated at a relative-interior point

  bool bounded() const { return std::holds_alternative<Segment>(extent); }
  const Segment& segment() const { return std::get<Segment>(extent); }
  const Ray& ray() const { return std::get<Ray>(extent); }
};

/// Sign vector of a full-dimensional cell; contains no zeros.
struct CellSignature {
  SignVector signs;

  std::string to_string() const { return arrlab::to_string(signs); }
  friend auto operator<=>(const CellSignature&, const CellSignature&) = default;
  friend bool operator==(const CellSignature&, const CellSignature&) = default;
};

struct BoundedCell {
  CellSignature signature;
  std::vector<std::size_t> vertex_ids;  // ascending
};

/// All C(n,d) vertices sorted by tight set. Throws PreconditionError when the
/// arrangement is not simple.
std::vector<Vertex> enumerate_vertices(const Arrangement& arr);

/// Segments and rays along every line spanned by d-1 hyperplanes. Lines are
/// visited in lexicographic order of their defining sets; along a line, edges
/// follow the sort order of the line parameter (the coordinate along which the
/// direction has the largest magnitude, lowest axis on ties). Each line yields
/// its ray at the low end, its segments, then its ray at the high end.
std::vector<ArrangementEdge> enumerate_edges(const Arrangement& arr, const std::vector<Vertex>& vertices);

/// Bounded cells sorted by signature. A cell is unbounded iff some ray lies in
/// its closure. Throws ConsistencyError when the count differs from C(n-1,d).
std::vector<BoundedCell> enumerate_bounded_cells(const Arrangement& arr,
                                                 const std::vector<Vertex>& vertices,
                                                 const std::vector<ArrangementEdge>& edges);

/// Calls fn(signs) for each of the 2^z ways to replace the zeros of `base`
/// with '-' or '+'. Bit k of the mask decides the k-th zero ('+' when set).
template <typename Fn>
void for_each_sign_completion(const SignVector& base, Fn&& fn) {
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i] == Sign::Zero) zeros.push_back(i);
  }
  SignVector signs = base;
  const std::size_t total = std::size_t{1} << zeros.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    for (std::size_t k = 0; k < zeros.size(); ++k) {
      signs[zeros[k]] = (mask >> k) & 1U ? Sign::Positive : Sign::Negative;
    }
    fn(static_cast<const SignVector&>(signs));
  }
}

/// True when `face` agrees with `cell` on every coordinate where `face` is
/// nonzero, i.e. the face lies in the closure of the cell.
bool face_in_closure(const SignVector& face, const CellSignature& cell);

/// Vertices, edges and bounded cells of one simple arrangement.
class ArrangementComplex {
 public:
  explicit ArrangementComplex(Arrangement arr);

  const Arrangement& arrangement() const { return arr_; }
  std::size_t dim() const { return arr_.dim(); }
  std::size_t size() const { return arr_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<ArrangementEdge>& edges() const { return edges_; }
  const std::vector<BoundedCell>& cells() const { return cells_; }

  /// Index of the vertex with the given sorted tight set; throws InputError if absent.
  std::size_t vertex_id(const std::vector<std::size_t>& tight_set) const;
  /// Index into cells(), or cells().size() when the signature is not a bounded cell.
  std::size_t find_cell(const CellSignature& signature) const;
  std::size_t bounded_edge_count() const;

 private:
  Arrangement arr_;
  std::vector<Vertex> vertices_;
  std::vector<ArrangementEdge> edges_;
  std::vector<BoundedCell> cells_;
};

/// Affine parametrization x = base + sum_j y_j * directions[j] of a hyperplane.
struct Chart {
  RationalVector base;
  std::vector<RationalVector> directions;

  RationalVector lift(const RationalVector& y) const;
};

struct Restriction {
  std::size_t hyperplane = 0;
  Chart chart;
  /// Induced (d-1)-dimensional arrangement, in chart coordinates.
  Arrangement induced;
  /// original_index[k] is the arrangement index of induced hyperplane k.
  std::vector<std::size_t> original_index;
  std::vector<std::string> notes;
};

/// Arrangement induced on hyperplane i by the others. Requires d >= 3.
/// Hyperplanes parallel to h_i do not meet it and are left out with a note.
Restriction restrict_to_hyperplane(const Arrangement& arr, std::size_t i);

struct BoundedFacet {
  std::size_t hyperplane = 0;
  CellSignature induced_signature;  // cell of the restriction, length n-1
  SignVector face_signs;            // length n, zero at `hyperplane`
  std::array<CellSignature, 2> incident;  // coordinate set to '-', then '+'
};

/// Bounded 2-faces of a simple 3-dimensional arrangement, grouped by
/// hyperplane and then by induced signature.
std::vector<BoundedFacet> enumerate_bounded_facets(const Arrangement& arr);

}  // namespace arrlab
