#pragma once

#include "arrlab/rational.hpp"

// Closed forms for the planar, spatial and cyclic-like constructions, the
// upper bounds they are compared against, and the generic counts of simple
// arrangements. All values are exact.
namespace arrlab::formulas {

Rational binom(long n, long k);

/// Bounded cells of any simple arrangement: C(n-1, d).
Rational bounded_cells(long d, long n);

/// Average diameter of the planar maximizer: 2 - 2*ceil(n/2)/((n-1)(n-2)).
Rational planar_max_delta(long n);
/// Average diameter of the 3D construction:
/// 3 - 6/(n-1) + 6*(floor(n/2)-2)/((n-1)(n-2)(n-3)).
Rational spatial_delta(long n);
/// Upper bound for 3D: 3 + 4(2n^2-16n+21)/(3(n-1)(n-2)(n-3)).
Rational spatial_upper_bound(long n);
/// 2d/(d+1), the average diameter of any simple arrangement of d+2 hyperplanes.
Rational d_plus_two_delta(long d);
/// d * C(n-d,d) / C(n-1,d).
Rational cube_lower_bound(long d, long n);
/// 1 + ((d-1) C(n-d,d) + (n-d)(n-d-1)) / C(n-1,d).
Rational cube_prism_lower_bound(long d, long n);
/// d + 2d/(n-1).
Rational hirsch_average_bound(long d, long n);

/// Bounded edges of a simple line arrangement: n(n-2).
Rational planar_bounded_edges(long n);
/// Lower bound on external edges of a simple line arrangement: 2(n-1).
Rational planar_external_edges_min(long n);
/// Bounded 2-faces of a simple plane arrangement: n * C(n-2, 2).
Rational spatial_bounded_facets(long n);
/// Lower bound on external 2-faces: n(n-2)/3 + 2.
Rational spatial_external_facets_min(long n);

}  // namespace arrlab::formulas
