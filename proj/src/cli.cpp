#include "zfpoly/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zfpoly/closed_forms.hpp"
#include "zfpoly/errors.hpp"
#include "zfpoly/forcing.hpp"
#include "zfpoly/forts.hpp"
#include "zfpoly/polynomial.hpp"
#include "zfpoly/sweep.hpp"
#include "zfpoly/threshold.hpp"

namespace zfp::cli {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = text.find(sep, start);
    out.emplace_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

int parse_int(const std::string& s, std::string_view context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad integer '" + s + "' in " + std::string(context));
  }
  return v;
}

struct GraphSource {
  std::string edge_list;
  std::string graph6;
  std::string family;

  void attach(CLI::App& cmd) {
    auto* e = cmd.add_option("--edge-list", edge_list, "edge-list file ('n m' header, then 'u v' lines)");
    auto* g = cmd.add_option("--graph6", graph6, "graph6 string, or a file holding one");
    auto* f = cmd.add_option("--family", family, "named family, e.g. path:7, wheel:6, multipartite:2,3, threshold:11011");
    e->excludes(g)->excludes(f);
    g->excludes(f);
  }

  Graph load() const {
    const int given = !edge_list.empty() + !graph6.empty() + !family.empty();
    if (given != 1) throw ParseError("give exactly one of --edge-list, --graph6, --family");
    if (!family.empty()) return build_family(parse_family(family));
    if (!edge_list.empty()) {
      std::ifstream in(edge_list);
      if (!in) throw ParseError("cannot open edge list '" + edge_list + "'");
      return read_edge_list(in);
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(graph6, ec)) {
      std::ifstream in(graph6);
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty() && line != "\r") return from_graph6(line);
      }
      throw ParseError("graph6 file '" + graph6 + "' is empty");
    }
    return from_graph6(graph6);
  }
};

EnumerationOptions enumeration_options(unsigned jobs) {
  EnumerationOptions options;
  options.jobs = jobs;
  if (const char* cap = std::getenv("ZFPOLY_MAX_N"); cap != nullptr && *cap != '\0') {
    options.max_n = parse_int(cap, "ZFPOLY_MAX_N");
  }
  return options;
}

ZfPolynomial closed_form(const GraphSource& source) {
  if (source.family.empty()) throw MethodMismatchError("--method closed needs a --family input");
  const FamilySpec spec = parse_family(source.family);
  build_family(spec);  // validates sizes
  const auto& a = spec.sizes;
  if (spec.name == "path") return poly_path(a[0]);
  if (spec.name == "cycle" || spec.name == "cycle-chord") return poly_cycle(a[0]);
  if (spec.name == "complete") return poly_complete(a[0]);
  if (spec.name == "wheel") return a[0] == 4 ? poly_complete(4) : poly_wheel(a[0]);
  if (spec.name == "multipartite") {
    if (a.size() < 2 || std::any_of(a.begin(), a.end(), [](int p) { return p < 2; })) {
      throw MethodMismatchError("the multipartite closed form needs at least two parts, each of size >= 2");
    }
    return poly_multipartite(a);
  }
  if (spec.name == "threshold") {
    const BlockPartition bp = block_partition(spec.binary);
    if (!bp.canonical || !bp.connected || spec.binary.size() < 2) {
      throw MethodMismatchError("the threshold closed form needs a canonical connected string of length >= 2");
    }
    return poly_threshold(spec.binary);
  }
  throw MethodMismatchError("no closed form for family '" + spec.name + "'");
}

ZfPolynomial compute(const GraphSource& source, const std::string& method, unsigned jobs) {
  if (method == "closed") return closed_form(source);
  const Graph g = source.load();
  if (method == "brute") return zf_polynomial(g, enumeration_options(jobs));
  if (method == "components") return zf_polynomial_by_components(g, enumeration_options(jobs));
  throw ParseError("unknown method '" + method + "'");
}

VertexSet parse_vertex_list(const std::string& text, int n) {
  VertexSet out;
  if (text.empty()) return out;
  for (const auto& item : split(text, ',')) {
    const int v = parse_int(item, "--set");
    if (v < 0 || v >= n) throw ParseError("vertex " + item + " out of range");
    out.insert(v);
  }
  return out;
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  const auto parts = split(text, ':');
  FamilySpec spec;
  spec.name = parts[0];
  if (parts.size() < 2 || parts[1].empty()) throw ParseError("family '" + std::string(text) + "' needs arguments");
  static const std::vector<std::string> single = {"path", "cycle", "complete", "empty", "star", "wheel"};
  if (std::find(single.begin(), single.end(), spec.name) != single.end()) {
    if (parts.size() != 2) throw ParseError("family '" + spec.name + "' takes one size");
    spec.sizes.push_back(parse_int(parts[1], text));
  } else if (spec.name == "multipartite") {
    if (parts.size() != 2) throw ParseError("multipartite takes a comma-separated part list");
    for (const auto& p : split(parts[1], ',')) spec.sizes.push_back(parse_int(p, text));
  } else if (spec.name == "threshold") {
    if (parts.size() != 2) throw ParseError("threshold takes one binary string");
    spec.binary = parts[1];
    block_partition(spec.binary);  // character check
  } else if (spec.name == "cycle-chord") {
    if (parts.size() != 4) throw ParseError("cycle-chord takes n:i:j");
    for (std::size_t i = 1; i < 4; ++i) spec.sizes.push_back(parse_int(parts[i], text));
  } else {
    throw ParseError("unknown family '" + spec.name + "'");
  }
  return spec;
}

Graph build_family(const FamilySpec& spec) {
  const auto& a = spec.sizes;
  if (spec.name == "path") return path(a[0]);
  if (spec.name == "cycle") return cycle(a[0]);
  if (spec.name == "complete") return complete(a[0]);
  if (spec.name == "empty") return empty_graph(a[0]);
  if (spec.name == "star") return star(a[0]);
  if (spec.name == "wheel") return wheel(a[0]);
  if (spec.name == "multipartite") return complete_multipartite(a);
  if (spec.name == "threshold") return threshold_from_string(spec.binary);
  if (spec.name == "cycle-chord") return cycle_plus_chord(a[0], a[1], a[2]);
  throw ParseError("unknown family '" + spec.name + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero forcing polynomials: enumeration, closed forms, forts and theorem checks", "zfpoly"};
  app.require_subcommand(1);

  unsigned jobs = 1;

  GraphSource poly_src;
  std::string method = "brute";
  bool pretty = false;
  auto* poly = app.add_subcommand("poly", "compute the zero forcing polynomial");
  poly_src.attach(*poly);
  poly->add_option("--method", method, "brute | closed | components")
      ->check(CLI::IsMember({"brute", "closed", "components"}));
  poly->add_flag("--pretty", pretty, "print 8x^3 + 5x^4 + x^5 instead of JSON");
  poly->add_option("--jobs", jobs, "worker threads (0 = all cores)");

  GraphSource forts_src;
  bool min_cover = false;
  auto* forts = app.add_subcommand("forts", "list forts, optionally solve the fort-cover program");
  forts_src.attach(*forts);
  forts->add_flag("--min-cover", min_cover, "also report a minimum fort transversal");
  forts->add_option("--jobs", jobs, "worker threads (0 = all cores)");

  std::string suite_text;
  SweepConfig sweep;
  auto* check = app.add_subcommand("check", "run a theorem / conjecture suite");
  check->add_option("--suite", suite_text, "extremal | multiplicativity | hall | forts | ip | recognizability | "
                                           "closed-forms | conjectures | all")
      ->required();
  check->add_option("--max-n", sweep.max_n, "largest order checked")->check(CLI::Range(1, 24));
  check->add_option("--seed", sweep.seed, "seed for the random corpora");
  check->add_option("--jobs", sweep.jobs, "worker threads (0 = all cores)");

  GraphSource eval_src;
  std::string at;
  std::string eval_method = "brute";
  auto* eval = app.add_subcommand("eval", "evaluate the polynomial at an exact rational");
  eval_src.attach(*eval);
  eval->add_option("--at", at, "point, e.g. 1, -3/2 or 0.25")->required();
  eval->add_option("--method", eval_method, "brute | closed | components")
      ->check(CLI::IsMember({"brute", "closed", "components"}));
  eval->add_option("--jobs", jobs, "worker threads (0 = all cores)");

  GraphSource forces_src;
  std::string initial;
  auto* forces = app.add_subcommand("forces", "chronological forces and forcing chains from an initial set");
  forces_src.attach(*forces);
  forces->add_option("--set", initial, "comma-separated initial vertices")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*poly) {
      const ZfPolynomial p = compute(poly_src, method, jobs);
      if (pretty) {
        out << to_pretty(p) << '\n';
      } else {
        out << to_json(p).dump() << '\n';
      }
    } else if (*forts) {
      const Graph g = forts_src.load();
      const EnumerationOptions options = enumeration_options(jobs);
      nlohmann::json j = to_json(enumerate_forts(g, options));
      if (min_cover) j["min_cover"] = to_json(min_fort_cover(g, options));
      out << j.dump() << '\n';
    } else if (*check) {
      const auto suite = parse_suite(suite_text);
      if (!suite) {
        err << "unknown suite '" << suite_text << "'\n";
        return kUsage;
      }
      const SweepReport report = run_suite(*suite, sweep);
      write_report(out, *suite, report);
      const bool warnings = std::any_of(report.tallies.begin(), report.tallies.end(),
                                        [](const CheckTally& t) { return t.conjecture && t.failed > 0; });
      if (warnings) err << "warning: conjecture counterexamples found (see warning records)\n";
      return report.theorem_failure() ? kCheckFailed : kOk;
    } else if (*eval) {
      const Rational x = parse_rational(at);
      out << to_string(evaluate(compute(eval_src, eval_method, jobs), x)) << '\n';
    } else if (*forces) {
      const Graph g = forces_src.load();
      const ForceRecord record = chronological_forces(g, parse_vertex_list(initial, g.order()));
      nlohmann::json pairs = nlohmann::json::array();
      for (auto [u, w] : record.forces) pairs.push_back({u, w});
      out << nlohmann::json{{"initial", record.initial.to_vector()},
                            {"forces", std::move(pairs)},
                            {"closure", record.closure.to_vector()},
                            {"chains", forcing_chains(record)},
                            {"zero_forcing", record.closure == g.vertices()}}
                 .dump()
          << '\n';
    }
  } catch (const SizeCapError& e) {
    err << "size cap: " << e.what() << '\n';
    return kSizeCap;
  } catch (const MethodMismatchError& e) {
    err << "method mismatch: " << e.what() << '\n';
    return kMethodMismatch;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace zfp::cli
