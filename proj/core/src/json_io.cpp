#include "arrlab/json_io.hpp"

#include "arrlab/errors.hpp"

namespace arrlab::json_io {

json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("expected a rational string \"p/q\" or an integer, got " + j.dump());
}

json metadata_to_json(const ConstructionMetadata& meta) {
  json j;
  j["family"] = family_name(meta.family);
  j["d"] = meta.d;
  j["n"] = meta.n;
  j["epsilon"] = meta.epsilon ? json(meta.epsilon->to_string()) : json(nullptr);
  j["seed"] = meta.seed ? json(*meta.seed) : json(nullptr);
  if (meta.bound) j["bound"] = *meta.bound;
  return j;
}

ConstructionMetadata metadata_from_json(const json& j) {
  try {
    ConstructionMetadata meta;
    meta.family = parse_family(j.at("family").get<std::string>());
    meta.d = j.at("d").get<std::size_t>();
    meta.n = j.at("n").get<std::size_t>();
    if (j.contains("epsilon") && !j["epsilon"].is_null()) meta.epsilon = rational_from_json(j["epsilon"]);
    if (j.contains("seed") && !j["seed"].is_null()) meta.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("bound") && !j["bound"].is_null()) meta.bound = j["bound"].get<std::int64_t>();
    return meta;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed metadata: ") + e.what());
  }
}

json arrangement_to_json(const Arrangement& arr, const std::optional<ConstructionMetadata>& meta) {
  json hs = json::array();
  for (const auto& h : arr.hyperplanes()) {
    json a = json::array();
    for (const auto& x : h.a) a.push_back(to_json(x));
    hs.push_back({{"a", a}, {"b", to_json(h.b)}});
  }
  json j{{"dim", arr.dim()}, {"hyperplanes", hs}};
  if (meta) j["metadata"] = metadata_to_json(*meta);
  return j;
}

LoadedArrangement arrangement_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InputError("arrangement JSON must be an object");
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<Hyperplane> hs;
    for (const auto& h : j.at("hyperplanes")) {
      const auto& a = h.at("a");
      if (!a.is_array()) throw InputError("hyperplane \"a\" must be an array");
      RationalVector normal(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) normal[i] = rational_from_json(a[i]);
      hs.push_back(Hyperplane{std::move(normal), rational_from_json(h.at("b")), hs.size()});
    }
    std::optional<ConstructionMetadata> meta;
    if (j.contains("metadata") && !j["metadata"].is_null()) meta = metadata_from_json(j["metadata"]);
    return LoadedArrangement{Arrangement(dim, std::move(hs)), std::move(meta)};
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed arrangement JSON: ") + e.what());
  }
}

json cell_record_to_json(const CellRecord& cell) {
  json j{{"signature", cell.signature.to_string()},
         {"V", cell.counts.vertices},
         {"E", cell.counts.edges},
         {"F", cell.counts.facets},
         {"diameter", cell.diameter},
         {"class", cell.classification.name()}};
  if (cell.canonical_form) j["canonical_form"] = *cell.canonical_form;
  return j;
}

namespace {

json optional_count(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json census_to_json(const CensusReport& report, bool include_cells) {
  json counts = json::object();
  for (const auto& [cls, count] : report.class_counts) counts[cls.name()] = count;
  json j{{"dim", report.dim},
         {"n", report.n},
         {"vertices", report.vertex_count},
         {"I", report.bounded_cells},
         {"class_counts", counts},
         {"delta", to_json(report.delta)},
         {"delta_display", report.delta.to_decimal(6)},
         {"diameter_sum", to_json(report.diameter_sum)},
         {"f_bounded", optional_count(report.f_bounded)},
         {"f_external", optional_count(report.f_external)},
         {"p_odd", optional_count(report.p_odd)},
         {"metadata", report.metadata ? metadata_to_json(*report.metadata) : json(nullptr)}};
  if (include_cells) {
    json cells = json::array();
    for (const auto& c : report.cells) cells.push_back(cell_record_to_json(c));
    j["cells"] = cells;
  }
  return j;
}

json instance_to_json(const InstanceSpec& spec) {
  json j{{"family", family_name(spec.family)}, {"d", spec.d}, {"n", spec.n}};
  if (spec.family == Family::Random) {
    j["seed"] = spec.seed;
    j["bound"] = spec.bound;
  }
  return j;
}

json verification_to_json(const VerificationResult& result) {
  json expected = json::object();
  json computed = json::object();
  json checks = json::array();
  for (const auto& c : result.checks) {
    expected[c.name] = to_json(c.expected);
    computed[c.name] = to_json(c.computed);
    checks.push_back({{"name", c.name},
                      {"relation", relation_symbol(c.relation)},
                      {"expected", to_json(c.expected)},
                      {"computed", to_json(c.computed)},
                      {"holds", c.holds()},
                      {"informational", c.informational}});
  }
  return json{{"prop", result.prop},
              {"params", instance_to_json(result.params)},
              {"expected", expected},
              {"computed", computed},
              {"checks", checks},
              {"verdict", result.pass() ? "pass" : "fail"},
              {"notes", result.notes}};
}

json suite_to_json(const std::vector<VerificationResult>& results, const SeedSet& seeds) {
  json items = json::array();
  json by_prop = json::object();
  std::size_t passed = 0;
  for (const auto& r : results) {
    items.push_back(verification_to_json(r));
    auto& entry = by_prop[r.prop];
    if (entry.is_null()) entry = json{{"total", 0}, {"passed", 0}, {"failed", 0}};
    entry["total"] = entry["total"].get<std::size_t>() + 1;
    if (r.pass()) {
      ++passed;
      entry["passed"] = entry["passed"].get<std::size_t>() + 1;
    } else {
      entry["failed"] = entry["failed"].get<std::size_t>() + 1;
    }
  }
  return json{{"results", items},
              {"summary",
               {{"total", results.size()},
                {"passed", passed},
                {"failed", results.size() - passed},
                {"by_prop", by_prop},
                {"verdict", passed == results.size() ? "pass" : "fail"}}},
              {"seeds", seeds_to_json(seeds)}};
}

json seeds_to_json(const SeedSet& seeds) {
  auto list = [](const std::vector<RandomInstance>& draws) {
    json a = json::array();
    for (const auto& r : draws) a.push_back({{"n", r.n}, {"seed", r.seed}});
    return a;
  };
  return json{{"bound", seeds.bound}, {"planar", list(seeds.planar)}, {"spatial", list(seeds.spatial)}};
}

SeedSet seeds_from_json(const json& j) {
  try {
    SeedSet s;
    s.bound = j.value("bound", std::int64_t{100});
    auto read = [&](const char* key, std::vector<RandomInstance>& out) {
      if (!j.contains(key)) return;
      for (const auto& r : j.at(key)) out.push_back({r.at("n").get<std::size_t>(), r.at("seed").get<std::uint64_t>()});
    };
    read("planar", s.planar);
    read("spatial", s.spatial);
    return s;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed seeds file: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace arrlab::json_io
