#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "arrlab/arrangement.hpp"

namespace arrlab {

enum class Family { CyclicStar, Ao2, Ao3, Random };

std::string family_name(Family f);  // "cyclic", "ao2", "ao3", "random"
Family parse_family(const std::string& name);

struct ConstructionMetadata {
  Family family = Family::CyclicStar;
  std::size_t d = 0;
  std::size_t n = 0;
  std::optional<Rational> epsilon;      // explicit families
  std::optional<std::uint64_t> seed;    // random family
  std::optional<std::int64_t> bound;    // random family
};

struct Construction {
  Arrangement arrangement;
  ConstructionMetadata metadata;
};

/// Hyperplane sum_i x_i / p_i = 1 through the axis points p_i e_i.
Hyperplane hyperplane_through_intercepts(const std::vector<Rational>& intercepts);
/// Hyperplane x_axis = 0 (0-based axis), positive side x_axis > 0.
Hyperplane coordinate_hyperplane(std::size_t dim, std::size_t axis);

/// Cyclic-like arrangement: the d coordinate hyperplanes x_{d+1-k} = 0 for
/// k = 1..d, then for k = d+1..n the hyperplane with intercepts
/// 1 + (d-i)(k-d-1)eps on axis i < d and 1 - (k-d-1)eps on axis d, eps = 1/(n-d).
Construction build_cyclic_star(std::size_t d, std::size_t n);

/// Planar arrangement maximizing the average diameter: the two axes, lines
/// k = 3..n-1 through (1+(k-3)eps, 0) and (0, 1-(k-3)eps), and a last line
/// through (2, 0) and (0, 2+eps), eps = 1/(n-2).
Construction build_ao2(std::size_t n);

/// Three-dimensional analogue: x3 = 0, x2 = 0, x1 = 0, planes k = 4..n-1 with
/// intercepts (1+2(k-4)eps, 1+(k-4)eps, 1-(k-4)eps), and a last plane with
/// intercepts (3, 2, 3+eps), eps = 1/(n-3).
Construction build_ao3(std::size_t n);

/// SplitMix64: state += 0x9E3779B97F4A7C15, then the standard xor-shift-multiply finalizer.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Integer in [-bound, bound] as (next() mod (2*bound+1)) - bound.
  std::int64_t uniform_symmetric(std::int64_t bound);

 private:
  std::uint64_t state_;
};

/// Hyperplanes drawn one at a time, coefficients a_1..a_d then b, each from
/// uniform_symmetric(bound). A draw that would break simplicity is discarded
/// and redrawn; 1000 consecutive rejections raise GenerationError.
Construction random_simple_arrangement(std::size_t d, std::size_t n, std::uint64_t seed, std::int64_t bound);

Construction build(Family family, std::size_t d, std::size_t n, std::uint64_t seed = 0, std::int64_t bound = 100);

}  // namespace arrlab
