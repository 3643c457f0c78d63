#include "arrlab/constructions.hpp"

#include "arrlab/errors.hpp"

namespace arrlab {

std::string family_name(Family f) {
  switch (f) {
    case Family::CyclicStar: return "cyclic";
    case Family::Ao2: return "ao2";
    case Family::Ao3: return "ao3";
    case Family::Random: return "random";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "cyclic") return Family::CyclicStar;
  if (name == "ao2") return Family::Ao2;
  if (name == "ao3") return Family::Ao3;
  if (name == "random") return Family::Random;
  throw InputError("unknown family \"" + name + "\" (expected cyclic, ao2, ao3 or random)");
}

Hyperplane hyperplane_through_intercepts(const std::vector<Rational>& intercepts) {
  RationalVector a(intercepts.size());
  for (std::size_t i = 0; i < intercepts.size(); ++i) {
    if (intercepts[i].sign() <= 0) throw InputError("axis intercepts must be positive");
    a[i] = intercepts[i].reciprocal();
  }
  return Hyperplane{std::move(a), Rational(1), 0};
}

Hyperplane coordinate_hyperplane(std::size_t dim, std::size_t axis) {
  RationalVector a(dim);
  a[axis] = 1;
  return Hyperplane{std::move(a), Rational(0), 0};
}

namespace {

void require_simple(const Arrangement& arr, const std::string& what) {
  auto report = check_simple(arr);
  if (!report.is_simple) throw ConsistencyError(what + " is not simple: " + report.reason);
}

}  // namespace

Construction build_cyclic_star(std::size_t d, std::size_t n) {
  if (d < 2) throw InputError("cyclic: d must be at least 2");
  if (n < d + 1) throw InputError("cyclic: n must be at least d+1");
  const Rational eps(1L, static_cast<long>(n - d));
  std::vector<Hyperplane> hs;
  for (std::size_t k = 1; k <= d; ++k) hs.push_back(coordinate_hyperplane(d, d - k));
  for (std::size_t k = d + 1; k <= n; ++k) {
    const long shift = static_cast<long>(k - d - 1);
    std::vector<Rational> intercepts;
    for (std::size_t i = 1; i < d; ++i) {
      intercepts.push_back(Rational(1) + Rational(static_cast<long>(d - i) * shift) * eps);
    }
    intercepts.push_back(Rational(1) - Rational(shift) * eps);
    hs.push_back(hyperplane_through_intercepts(intercepts));
  }
  Arrangement arr(d, std::move(hs));
  require_simple(arr, "cyclic(" + std::to_string(d) + "," + std::to_string(n) + ")");
  return Construction{std::move(arr), ConstructionMetadata{Family::CyclicStar, d, n, eps, {}, {}}};
}

Construction build_ao2(std::size_t n) {
  if (n < 4) throw InputError("ao2: n must be at least 4");
  const Rational eps(1L, static_cast<long>(n - 2));
  std::vector<Hyperplane> hs;
  hs.push_back(coordinate_hyperplane(2, 1));
  hs.push_back(coordinate_hyperplane(2, 0));
  for (std::size_t k = 3; k + 1 <= n; ++k) {
    const Rational shift = Rational(static_cast<long>(k - 3)) * eps;
    hs.push_back(hyperplane_through_intercepts({Rational(1) + shift, Rational(1) - shift}));
  }
  hs.push_back(hyperplane_through_intercepts({Rational(2), Rational(2) + eps}));
  Arrangement arr(2, std::move(hs));
  require_simple(arr, "ao2(" + std::to_string(n) + ")");
  return Construction{std::move(arr), ConstructionMetadata{Family::Ao2, 2, n, eps, {}, {}}};
}

Construction build_ao3(std::size_t n) {
  if (n < 5) throw InputError("ao3: n must be at least 5");
  const Rational eps(1L, static_cast<long>(n - 3));
  std::vector<Hyperplane> hs;
  hs.push_back(coordinate_hyperplane(3, 2));
  hs.push_back(coordinate_hyperplane(3, 1));
  hs.push_back(coordinate_hyperplane(3, 0));
  for (std::size_t k = 4; k + 1 <= n; ++k) {
    const Rational shift = Rational(static_cast<long>(k - 4)) * eps;
    hs.push_back(hyperplane_through_intercepts(
        {Rational(1) + Rational(2) * shift, Rational(1) + shift, Rational(1) - shift}));
  }
  hs.push_back(hyperplane_through_intercepts({Rational(3), Rational(2), Rational(3) + eps}));
  Arrangement arr(3, std::move(hs));
  require_simple(arr, "ao3(" + std::to_string(n) + ")");
  return Construction{std::move(arr), ConstructionMetadata{Family::Ao3, 3, n, eps, {}, {}}};
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform_symmetric(std::int64_t bound) {
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  return static_cast<std::int64_t>(next() % span) - bound;
}

namespace {

// Whether `candidate` can join `accepted` without breaking simplicity: every
// min(k, d)-subset of normals containing it stays independent, and it avoids
// every existing vertex.
bool keeps_simple(const std::vector<Hyperplane>& accepted, const Hyperplane& candidate, std::size_t d) {
  const std::size_t k = accepted.size() + 1;
  const std::size_t subset = std::min(k, d);
  bool ok = true;
  for_each_combination(accepted.size(), subset - 1, [&](const std::vector<std::size_t>& others) {
    if (!ok) return;
    RationalMatrix m(subset, d);
    for (std::size_t r = 0; r + 1 < subset; ++r) {
      for (std::size_t c = 0; c < d; ++c) m(r, c) = accepted[others[r]].a[c];
    }
    for (std::size_t c = 0; c < d; ++c) m(subset - 1, c) = candidate.a[c];
    if (rank(m) < subset) ok = false;
  });
  if (!ok || accepted.size() < d) return ok;
  for_each_combination(accepted.size(), d, [&](const std::vector<std::size_t>& tight) {
    if (!ok) return;
    RationalMatrix m(d, d);
    RationalVector rhs(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) m(r, c) = accepted[tight[r]].a[c];
      rhs[r] = accepted[tight[r]].b;
    }
    auto point = solve_linear_system(m, rhs);
    if (point && candidate.evaluate(*point).is_zero()) ok = false;
  });
  return ok;
}

}  // namespace

Construction random_simple_arrangement(std::size_t d, std::size_t n, std::uint64_t seed, std::int64_t bound) {
  if (d != 2 && d != 3) throw InputError("random: d must be 2 or 3");
  if (n < d + 1) throw InputError("random: n must be at least d+1");
  if (bound < 10) throw InputError("random: coefficient bound must be at least 10");
  SplitMix64 rng(seed);
  std::vector<Hyperplane> hs;
  while (hs.size() < n) {
    bool placed = false;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
      RationalVector a(d);
      for (std::size_t i = 0; i < d; ++i) a[i] = Rational(static_cast<long>(rng.uniform_symmetric(bound)));
      Hyperplane h{std::move(a), Rational(static_cast<long>(rng.uniform_symmetric(bound))), hs.size()};
      if (keeps_simple(hs, h, d)) {
        hs.push_back(std::move(h));
        placed = true;
      }
    }
    if (!placed) throw GenerationError("random: 1000 consecutive draws broke simplicity");
  }
  Arrangement arr(d, std::move(hs));
  require_simple(arr, "random(" + std::to_string(d) + "," + std::to_string(n) + ")");
  return Construction{std::move(arr), ConstructionMetadata{Family::Random, d, n, {}, seed, bound}};
}

Construction build(Family family, std::size_t d, std::size_t n, std::uint64_t seed, std::int64_t bound) {
  switch (family) {
    case Family::CyclicStar: return build_cyclic_star(d, n);
    case Family::Ao2:
      if (d != 2) throw InputError("ao2 is two-dimensional");
      return build_ao2(n);
    case Family::Ao3:
      if (d != 3) throw InputError("ao3 is three-dimensional");
      return build_ao3(n);
    case Family::Random: return random_simple_arrangement(d, n, seed, bound);
  }
  throw InputError("unknown family");
}

}  // namespace arrlab
