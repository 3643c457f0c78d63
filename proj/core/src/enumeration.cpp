#include "arrlab/enumeration.hpp"

#include <algorithm>
#include <set>

#include "arrlab/errors.hpp"

namespace arrlab {

namespace {

std::string format_set(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

std::size_t parameter_axis(const RationalVector& direction) {
  std::size_t best = 0;
  Rational best_abs = direction[0].abs();
  for (std::size_t i = 1; i < direction.dim(); ++i) {
    Rational m = direction[i].abs();
    if (m > best_abs) {
      best = i;
      best_abs = std::move(m);
    }
  }
  return best;
}

}  // namespace

std::vector<Vertex> enumerate_vertices(const Arrangement& arr) {
  const std::size_t d = arr.dim();
  const std::size_t n = arr.size();
  if (n < d + 1) {
    throw PreconditionError("vertex enumeration needs a simple arrangement (n >= d+1)");
  }
  std::vector<Vertex> vertices;
  for_each_combination(n, d, [&](const std::vector<std::size_t>& subset) {
    RationalMatrix m(d, d);
    RationalVector rhs(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) m(r, c) = arr[subset[r]].a[c];
      rhs[r] = arr[subset[r]].b;
    }
    auto point = solve_linear_system(m, rhs);
    if (!point) {
      throw PreconditionError("arrangement is not simple: hyperplanes " + format_set(subset) +
                              " have no unique common point");
    }
    SignVector signs = arr.sign_vector(*point);
    auto zeros = static_cast<std::size_t>(std::count(signs.begin(), signs.end(), Sign::Zero));
    if (zeros != d) {
      throw PreconditionError("arrangement is not simple: the point of " + format_set(subset) +
                              " lies on more than d hyperplanes");
    }
    vertices.push_back(Vertex{std::move(*point), subset, std::move(signs)});
  });
  return vertices;
}

std::vector<ArrangementEdge> enumerate_edges(const Arrangement& arr, const std::vector<Vertex>& vertices) {
  const std::size_t d = arr.dim();
  const std::size_t n = arr.size();
  auto find_vertex = [&](const std::vector<std::size_t>& tight) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), tight,
                               [](const Vertex& v, const std::vector<std::size_t>& t) { return v.tight_set < t; });
    if (it == vertices.end() || it->tight_set != tight) {
      throw PreconditionError("edge enumeration: missing vertex " + format_set(tight));
    }
    return static_cast<std::size_t>(it - vertices.begin());
  };

  std::vector<ArrangementEdge> edges;
  for_each_combination(n, d - 1, [&](const std::vector<std::size_t>& line) {
    std::vector<RationalVector> rows;
    rows.reserve(line.size());
    for (std::size_t i : line) rows.push_back(arr[i].a);
    RationalVector direction = orthogonal_complement(rows);
    const std::size_t axis = parameter_axis(direction);
    if (direction[axis].sign() < 0) direction = Rational(-1) * direction;

    std::vector<std::size_t> on_line;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::binary_search(line.begin(), line.end(), j)) continue;
      std::vector<std::size_t> tight = line;
      tight.insert(std::upper_bound(tight.begin(), tight.end(), j), j);
      on_line.push_back(find_vertex(tight));
    }
    std::sort(on_line.begin(), on_line.end(), [&](std::size_t u, std::size_t v) {
      return vertices[u].point[axis] < vertices[v].point[axis];
    });

    auto push_ray = [&](std::size_t origin, RationalVector dir) {
      SignVector signs = arr.sign_vector(vertices[origin].point + dir);
      edges.push_back(ArrangementEdge{line, Ray{origin, std::move(dir)}, std::move(signs)});
    };

    push_ray(on_line.front(), Rational(-1) * direction);
    for (std::size_t k = 0; k + 1 < on_line.size(); ++k) {
      const auto& p = vertices[on_line[k]].point;
      const auto& q = vertices[on_line[k + 1]].point;
      SignVector signs = arr.sign_vector(Rational(1, 2) * (p + q));
      edges.push_back(ArrangementEdge{line, Segment{on_line[k], on_line[k + 1]}, std::move(signs)});
    }
    push_ray(on_line.back(), direction);
  });
  return edges;
}

bool face_in_closure(const SignVector& face, const CellSignature& cell) {
  if (face.size() != cell.signs.size()) return false;
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (face[i] != Sign::Zero && face[i] != cell.signs[i]) return false;
  }
  return true;
}

std::vector<BoundedCell> enumerate_bounded_cells(const Arrangement& arr,
                                                 const std::vector<Vertex>& vertices,
                                                 const std::vector<ArrangementEdge>& edges) {
  std::set<SignVector> candidates;
  for (const auto& v : vertices) {
    for_each_sign_completion(v.sign_vector, [&](const SignVector& s) { candidates.insert(s); });
  }
  std::set<SignVector> unbounded;
  for (const auto& e : edges) {
    if (e.bounded()) continue;
    for_each_sign_completion(e.sign_vector, [&](const SignVector& s) { unbounded.insert(s); });
  }

  std::vector<BoundedCell> cells;
  for (const auto& s : candidates) {
    if (!unbounded.contains(s)) cells.push_back(BoundedCell{CellSignature{s}, {}});
  }

  const long n = static_cast<long>(arr.size());
  const long d = static_cast<long>(arr.dim());
  BigInt expected = binomial(n - 1, d);
  if (BigInt(static_cast<unsigned long>(cells.size())) != expected) {
    throw ConsistencyError("found " + std::to_string(cells.size()) + " bounded cells, expected C(" +
                           std::to_string(n - 1) + "," + std::to_string(d) + ") = " + expected.get_str());
  }

  for (std::size_t vid = 0; vid < vertices.size(); ++vid) {
    for_each_sign_completion(vertices[vid].sign_vector, [&](const SignVector& s) {
      auto it = std::lower_bound(cells.begin(), cells.end(), s,
                                 [](const BoundedCell& c, const SignVector& t) { return c.signature.signs < t; });
      if (it != cells.end() && it->signature.signs == s) it->vertex_ids.push_back(vid);
    });
  }
  return cells;
}

ArrangementComplex::ArrangementComplex(Arrangement arr) : arr_(std::move(arr)) {
  vertices_ = enumerate_vertices(arr_);
  edges_ = enumerate_edges(arr_, vertices_);
  cells_ = enumerate_bounded_cells(arr_, vertices_, edges_);
}

std::size_t ArrangementComplex::vertex_id(const std::vector<std::size_t>& tight_set) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), tight_set,
                             [](const Vertex& v, const std::vector<std::size_t>& t) { return v.tight_set < t; });
  if (it == vertices_.end() || it->tight_set != tight_set) {
    throw InputError("no vertex with tight set " + format_set(tight_set));
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t ArrangementComplex::find_cell(const CellSignature& signature) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), signature,
                             [](const BoundedCell& c, const CellSignature& s) { return c.signature < s; });
  if (it == cells_.end() || it->signature != signature) return cells_.size();
  return static_cast<std::size_t>(it - cells_.begin());
}

std::size_t ArrangementComplex::bounded_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const ArrangementEdge& e) { return e.bounded(); }));
}

RationalVector Chart::lift(const RationalVector& y) const {
  if (y.dim() != directions.size()) throw InputError("chart lift: dimension mismatch");
  RationalVector x = base;
  for (std::size_t j = 0; j < directions.size(); ++j) {
    if (!y[j].is_zero()) x = x + y[j] * directions[j];
  }
  return x;
}

Restriction restrict_to_hyperplane(const Arrangement& arr, std::size_t i) {
  const std::size_t d = arr.dim();
  if (d < 3) throw UnsupportedDimensionError("restriction needs d >= 3");
  if (i >= arr.size()) throw InputError("hyperplane index out of range");
  const Hyperplane& h = arr[i];

  // Solve for the coordinate with the largest coefficient; the others are free.
  const std::size_t pivot = parameter_axis(h.a);
  Chart chart{RationalVector(d), {}};
  chart.base[pivot] = h.b / h.a[pivot];
  for (std::size_t j = 0; j < d; ++j) {
    if (j == pivot) continue;
    RationalVector dir(d);
    dir[j] = 1;
    dir[pivot] = -(h.a[j] / h.a[pivot]);
    chart.directions.push_back(std::move(dir));
  }

  std::vector<Hyperplane> induced;
  std::vector<std::size_t> original;
  std::vector<std::string> notes;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (k == i) continue;
    const Hyperplane& g = arr[k];
    RationalVector a(d - 1);
    for (std::size_t j = 0; j < d - 1; ++j) a[j] = dot(g.a, chart.directions[j]);
    if (a.is_zero()) {
      notes.push_back("hyperplane " + std::to_string(k + 1) + " is parallel to hyperplane " +
                      std::to_string(i + 1) + " and was excluded");
      continue;
    }
    induced.push_back(Hyperplane{std::move(a), g.b - dot(g.a, chart.base), 0});
    original.push_back(k);
  }
  return Restriction{i, std::move(chart), Arrangement(d - 1, std::move(induced)), std::move(original),
                     std::move(notes)};
}

std::vector<BoundedFacet> enumerate_bounded_facets(const Arrangement& arr) {
  if (arr.dim() != 3) throw UnsupportedDimensionError("bounded facet enumeration is defined for d = 3");
  std::vector<BoundedFacet> facets;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    Restriction r = restrict_to_hyperplane(arr, i);
    if (!r.notes.empty()) {
      throw PreconditionError("facet enumeration needs a simple arrangement: " + r.notes.front());
    }
    ArrangementComplex induced(r.induced);
    for (const auto& cell : induced.cells()) {
      SignVector face(arr.size(), Sign::Zero);
      for (std::size_t k = 0; k < r.original_index.size(); ++k) {
        face[r.original_index[k]] = cell.signature.signs[k];
      }
      BoundedFacet f{i, cell.signature, face, {}};
      f.incident[0].signs = face;
      f.incident[0].signs[i] = Sign::Negative;
      f.incident[1].signs = face;
      f.incident[1].signs[i] = Sign::Positive;
      facets.push_back(std::move(f));
    }
  }
  return facets;
}

}  // namespace arrlab
