// arrlab: construct, analyze, verify and export simple hyperplane arrangements.
//
// Exit codes: 0 success (all checks passed), 1 verification failure,
// 2 invalid input or parameters.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "arrlab/errors.hpp"
#include "arrlab/export.hpp"
#include "arrlab/json_io.hpp"
#include "arrlab/statistics.hpp"
#include "arrlab/verification.hpp"

namespace {

namespace fs = std::filesystem;
using arrlab::json_io::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

// Writes via a temporary sibling and a rename so readers never see a partial file.
void write_atomically(const std::string& path, const std::string& content) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw arrlab::InputError("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw arrlab::InputError("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

void emit(const std::optional<std::string>& path, const std::string& content) {
  if (path) {
    write_atomically(*path, content);
  } else {
    std::cout << content;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw arrlab::InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

arrlab::json_io::LoadedArrangement load_arrangement(const std::string& path) {
  return arrlab::json_io::arrangement_from_json(arrlab::json_io::parse(read_file(path)));
}

// Loads and checks simplicity; returns nullopt after printing the witness.
std::optional<arrlab::json_io::LoadedArrangement> load_simple(const std::string& path) {
  auto loaded = load_arrangement(path);
  auto report = arrlab::check_simple(loaded.arrangement);
  if (!report.is_simple) {
    std::cerr << "error: " << path << " is not a simple arrangement: " << report.reason;
    if (report.witness) {
      std::cerr << " (hyperplanes";
      for (std::size_t i : *report.witness) std::cerr << " " << i + 1;
      std::cerr << ")";
    }
    std::cerr << "\n";
    return std::nullopt;
  }
  return loaded;
}

struct ConstructArgs {
  std::string family;
  std::optional<std::size_t> d;
  std::size_t n = 0;
  std::optional<std::string> out;
};

int run_construct(const ConstructArgs& args) {
  const arrlab::Family family = arrlab::parse_family(args.family);
  if (family == arrlab::Family::Random) {
    throw arrlab::InputError("use the random subcommand for random arrangements");
  }
  std::size_t d = 0;
  switch (family) {
    case arrlab::Family::Ao2: d = args.d.value_or(2); break;
    case arrlab::Family::Ao3: d = args.d.value_or(3); break;
    default:
      if (!args.d) throw arrlab::InputError("cyclic needs -d");
      d = *args.d;
  }
  auto c = arrlab::build(family, d, args.n);
  emit(args.out, arrlab::json_io::dump(arrlab::json_io::arrangement_to_json(c.arrangement, c.metadata)));
  std::cerr << "family=" << args.family << " n=" << c.metadata.n << " d=" << c.metadata.d
            << " epsilon=" << c.metadata.epsilon->to_string() << "\n";
  return kExitOk;
}

struct RandomArgs {
  std::size_t d = 2;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::int64_t bound = 100;
  std::optional<std::string> out;
};

int run_random(const RandomArgs& args) {
  auto c = arrlab::random_simple_arrangement(args.d, args.n, args.seed, args.bound);
  emit(args.out, arrlab::json_io::dump(arrlab::json_io::arrangement_to_json(c.arrangement, c.metadata)));
  std::cerr << "family=random n=" << args.n << " d=" << args.d << " seed=" << args.seed << "\n";
  return kExitOk;
}

struct AnalyzeArgs {
  std::string input;
  std::optional<std::string> report;
  bool cells = false;
};

int run_analyze(const AnalyzeArgs& args) {
  auto loaded = load_simple(args.input);
  if (!loaded) return kExitInvalid;
  arrlab::Analysis analysis(loaded->arrangement);
  auto report = arrlab::census(analysis, loaded->metadata);
  if (args.report) {
    write_atomically(*args.report, arrlab::json_io::dump(arrlab::json_io::census_to_json(report, args.cells)));
  }
  std::cout << "n=" << report.n << " d=" << report.dim << " I=" << report.bounded_cells
            << " delta=" << report.delta.to_string() << " (" << report.delta.to_decimal(6) << ")\n";
  for (const auto& [cls, count] : report.class_counts) std::cout << "  " << cls.name() << ": " << count << "\n";
  if (!args.report) {
    std::cout << arrlab::json_io::dump(arrlab::json_io::census_to_json(report, args.cells));
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string prop = "all";
  std::optional<std::string> range;
  std::optional<std::string> seeds;
  std::optional<std::string> out;
  bool include_random = false;
};

int run_verify(const VerifyArgs& args) {
  std::vector<arrlab::PropId> props;
  if (args.prop == "all") {
    props = arrlab::all_props();
  } else {
    props.push_back(arrlab::parse_prop(args.prop));
  }
  std::optional<arrlab::Grid> grid;
  if (args.range) grid = arrlab::Grid::parse(*args.range);
  arrlab::SeedSet seeds = arrlab::SeedSet::defaults();
  if (args.seeds) seeds = arrlab::json_io::seeds_from_json(arrlab::json_io::parse(read_file(*args.seeds)));

  auto results = arrlab::run_suite(props, grid, seeds, args.include_random || args.seeds.has_value());
  std::size_t passed = 0;
  for (const auto& r : results) {
    const bool ok = r.pass();
    passed += ok ? 1 : 0;
    std::cout << (ok ? "pass " : "FAIL ") << r.prop << " " << r.params.label() << "\n";
    for (const auto& c : r.checks) {
      if (!c.informational && c.holds()) continue;
      std::cout << "    " << (c.informational ? "info " : "fail ") << c.name << ": " << c.computed.to_string()
                << " " << arrlab::relation_symbol(c.relation) << " " << c.expected.to_string() << "\n";
    }
    for (const auto& note : r.notes) std::cout << "    note: " << note << "\n";
  }
  std::cout << passed << "/" << results.size() << " passed\n";
  if (args.out) write_atomically(*args.out, arrlab::json_io::dump(arrlab::json_io::suite_to_json(results, seeds)));
  return passed == results.size() ? kExitOk : kExitFail;
}

struct ExportArgs {
  std::string input;
  std::string format;
  std::optional<std::string> out;
  std::optional<std::string> cell;
};

int run_export(const ExportArgs& args) {
  auto loaded = load_simple(args.input);
  if (!loaded) return kExitInvalid;
  const std::size_t d = loaded->arrangement.dim();
  if (args.format == "svg") {
    if (d != 2) throw arrlab::UnsupportedDimensionError("svg export needs d = 2, got d = " + std::to_string(d));
    emit(args.out, arrlab::export_svg(arrlab::Analysis(loaded->arrangement)));
  } else if (args.format == "off") {
    if (d != 3) throw arrlab::UnsupportedDimensionError("off export needs d = 3, got d = " + std::to_string(d));
    if (!args.cell) throw arrlab::InputError("off export needs --cell SIGNATURE");
    arrlab::CellSignature sig{arrlab::parse_sign_vector(*args.cell)};
    emit(args.out, arrlab::export_off(arrlab::Analysis(loaded->arrangement), sig));
  } else {
    throw arrlab::InputError("unknown format \"" + args.format + "\" (expected svg or off)");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and average-diameter analysis of simple hyperplane arrangements"};
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build an explicit arrangement and write it as JSON");
  c->add_option("--family", construct.family, "cyclic, ao2 or ao3")->required();
  c->add_option("-d", construct.d, "Dimension (required for cyclic)");
  c->add_option("-n", construct.n, "Number of hyperplanes")->required();
  c->add_option("--out", construct.out, "Output file (stdout if omitted)");

  RandomArgs random;
  auto* r = app.add_subcommand("random", "Draw a seeded random simple arrangement");
  r->add_option("-d", random.d, "Dimension (2 or 3)")->required();
  r->add_option("-n", random.n, "Number of hyperplanes")->required();
  r->add_option("--seed", random.seed, "Seed of the SplitMix64 stream")->required();
  r->add_option("--bound", random.bound, "Coefficients are drawn from [-bound, bound]");
  r->add_option("--out", random.out, "Output file (stdout if omitted)");

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "Enumerate bounded cells and report the census");
  a->add_option("input", analyze.input, "Arrangement JSON")->required();
  a->add_option("--report", analyze.report, "Write the census report here");
  a->add_flag("--cells", analyze.cells, "Include per-cell records");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check census formulas, identities and bounds");
  v->add_option("--prop", verify.prop, "P1..P7, H, S or all");
  v->add_option("--range", verify.range, "Grid such as n=4..12, d=2..6 or d=3,n=6..8");
  v->add_option("--seeds", verify.seeds, "Seed file for random instances");
  v->add_option("--out", verify.out, "Write the suite summary JSON here");
  v->add_flag("--include-random", verify.include_random, "Also run seeded random instances with --range");

  ExportArgs exp;
  auto* e = app.add_subcommand("export", "Render a planar arrangement (svg) or one 3D cell (off)");
  e->add_option("input", exp.input, "Arrangement JSON")->required();
  e->add_option("--format", exp.format, "svg or off")->required();
  e->add_option("--out", exp.out, "Output file (stdout if omitted)");
  e->add_option("--cell", exp.cell, "Bounded-cell signature such as +-+--+ (off only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kExitInvalid;
  }

  try {
    if (*c) return run_construct(construct);
    if (*r) return run_random(random);
    if (*a) return run_analyze(analyze);
    if (*v) return run_verify(verify);
    if (*e) return run_export(exp);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
