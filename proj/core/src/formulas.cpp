#include "arrlab/formulas.hpp"

#include "arrlab/arrangement.hpp"

namespace arrlab::formulas {

Rational binom(long n, long k) { return Rational(binomial(n, k)); }

Rational bounded_cells(long d, long n) { return binom(n - 1, d); }

Rational planar_max_delta(long n) {
  const long half_up = (n + 1) / 2;
  return Rational(2) - Rational(2 * half_up, (n - 1) * (n - 2));
}

Rational spatial_delta(long n) {
  const long half_down = n / 2;
  return Rational(3) - Rational(6, n - 1) + Rational(6 * (half_down - 2), (n - 1) * (n - 2) * (n - 3));
}

Rational spatial_upper_bound(long n) {
  return Rational(3) + Rational(4 * (2 * n * n - 16 * n + 21), 3 * (n - 1) * (n - 2) * (n - 3));
}

Rational d_plus_two_delta(long d) { return Rational(2 * d, d + 1); }

Rational cube_lower_bound(long d, long n) { return Rational(d) * binom(n - d, d) / binom(n - 1, d); }

Rational cube_prism_lower_bound(long d, long n) {
  return Rational(1) + (Rational(d - 1) * binom(n - d, d) + Rational((n - d) * (n - d - 1))) / binom(n - 1, d);
}

Rational hirsch_average_bound(long d, long n) { return Rational(d) + Rational(2 * d, n - 1); }

Rational planar_bounded_edges(long n) { return Rational(n * (n - 2)); }

Rational planar_external_edges_min(long n) { return Rational(2 * (n - 1)); }

Rational spatial_bounded_facets(long n) { return Rational(n) * binom(n - 2, 2); }

Rational spatial_external_facets_min(long n) { return Rational(n * (n - 2), 3) + Rational(2); }

}  // namespace arrlab::formulas
