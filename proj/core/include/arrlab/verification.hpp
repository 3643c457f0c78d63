#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrlab/constructions.hpp"
#include "arrlab/statistics.hpp"

namespace arrlab {

/// Verification ids accepted by the CLI: P1..P7, H (Hirsch-type average
/// bound) and S (minimum number of simplices).
enum class PropId { P1, P2, P3, P4, P5, P6, P7, H, S };

std::string prop_name(PropId id);
PropId parse_prop(const std::string& name);
const std::vector<PropId>& all_props();

/// One arrangement to verify against: an explicit family or a seeded random draw.
struct InstanceSpec {
  Family family = Family::CyclicStar;
  std::size_t d = 2;
  std::size_t n = 3;
  std::uint64_t seed = 0;
  std::int64_t bound = 100;

  static InstanceSpec cyclic(std::size_t d, std::size_t n) { return {Family::CyclicStar, d, n, 0, 100}; }
  static InstanceSpec ao2(std::size_t n) { return {Family::Ao2, 2, n, 0, 100}; }
  static InstanceSpec ao3(std::size_t n) { return {Family::Ao3, 3, n, 0, 100}; }
  static InstanceSpec random(std::size_t d, std::size_t n, std::uint64_t seed, std::int64_t bound = 100) {
    return {Family::Random, d, n, seed, bound};
  }

  std::string label() const;
  Construction build() const;

  friend auto operator<=>(const InstanceSpec&, const InstanceSpec&) = default;
  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

enum class Relation { Equal, AtMost, AtLeast };
std::string relation_symbol(Relation r);  // "==", "<=", ">="

/// computed <relation> expected, compared exactly.
struct Check {
  std::string name;
  Relation relation = Relation::Equal;
  Rational expected;
  Rational computed;
  /// Informational checks are reported but never fail the verdict.
  bool informational = false;

  bool holds() const;
};

struct VerificationResult {
  std::string prop;
  InstanceSpec params;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool pass() const;
};

/// I * delta == (2 f1 - f1_ext - p_odd) / 2 and f1 == n(n-2). Requires d = 2.
VerificationResult verify_identity_2d(const Analysis& analysis, const InstanceSpec& params);
VerificationResult verify_identity_2d(const Arrangement& arr);

/// Throws InputError when the instance is outside the proposition's scope.
VerificationResult verify_proposition(PropId id, const InstanceSpec& params, const Analysis& analysis);
VerificationResult verify_proposition(PropId id, const InstanceSpec& params);

struct RandomInstance {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  friend bool operator==(const RandomInstance&, const RandomInstance&) = default;
};

/// Seeds of the random property instances.
struct SeedSet {
  std::int64_t bound = 100;
  std::vector<RandomInstance> planar;
  std::vector<RandomInstance> spatial;

  /// 50 planar draws: i = 0..49, n = 4 + i mod 5, seed = i + 1.
  /// 20 spatial draws: i = 0..19, n = 5 + i mod 3, seed = 101 + i. Bound 100.
  static SeedSet defaults();
};

/// Parameter grid from "n=4..12", "d=2..6", "d=3,n=6..8" or "n=7".
struct Grid {
  std::vector<std::size_t> d_values;
  std::vector<std::size_t> n_values;

  static Grid parse(const std::string& text);
};

/// Instances a proposition is checked on. Without a grid the default
/// acceptance grid is used and the seeded random draws are included; with a
/// grid, random draws are included only when `include_random` is set.
std::vector<InstanceSpec> suite_instances(PropId id, const std::optional<Grid>& grid, const SeedSet& seeds,
                                          bool include_random);

/// Runs each proposition over its instances, in the order given, sharing
/// enumeration work between propositions that use the same instance.
std::vector<VerificationResult> run_suite(const std::vector<PropId>& props, const std::optional<Grid>& grid,
                                          const SeedSet& seeds, bool include_random);

}  // namespace arrlab
