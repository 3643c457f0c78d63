#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrlab/linalg.hpp"
#include "arrlab/rational.hpp"

namespace arrlab {

enum class Sign : std::int8_t { Negative = -1, Zero = 0, Positive = 1 };

/// Lexicographic order follows the underlying value, so '-' < '0' < '+'.
using SignVector = std::vector<Sign>;

char sign_char(Sign s);
std::string to_string(const SignVector& signs);
SignVector parse_sign_vector(const std::string& text);

/// Affine functional a.x - b. Index is the 0-based position in its arrangement.
struct Hyperplane {
  RationalVector a;
  Rational b;
  std::size_t index = 0;

  std::size_t dim() const { return a.dim(); }
  Rational evaluate(const RationalVector& x) const;
};

Sign sign_of_affine_eval(const Hyperplane& h, const RationalVector& x);

class Arrangement {
 public:
  /// Throws InputError if dim < 2, a normal vector is zero, or dimensions disagree.
  Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

  SignVector sign_vector(const RationalVector& x) const;

  /// Arrangement without hyperplane `i`; remaining hyperplanes keep their order.
  Arrangement without(std::size_t i) const;
  /// First `count` hyperplanes.
  Arrangement prefix(std::size_t count) const;
  /// Hyperplanes reordered so that new position k holds old hyperplane order[k].
  Arrangement permuted(const std::vector<std::size_t>& order) const;

 private:
  std::size_t dim_;
  std::vector<Hyperplane> hyperplanes_;
};

struct SimplicityReport {
  bool is_simple = false;
  /// Hyperplane indices of the first failing subset (0-based): a singular
  /// d-subset, or every hyperplane through a point lying on more than d.
  std::optional<std::vector<std::size_t>> witness;
  std::string reason;
};

SimplicityReport check_simple(const Arrangement& arr);

/// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Binomial coefficient as an exact integer.
BigInt binomial(long n, long k);

}  // namespace arrlab
