// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero if
// any theorem-level criterion fails; conjecture counterexamples only warn.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oracle.hpp"
#include "support.hpp"
#include "zfpoly/analysis.hpp"
#include "zfpoly/closed_forms.hpp"
#include "zfpoly/forts.hpp"
#include "zfpoly/kernels/kernels.hpp"
#include "zfpoly/polynomial.hpp"
#include "zfpoly/sweep.hpp"
#include "zfpoly/threshold.hpp"

using namespace zfp;

namespace {

enum class Verdict { pass, fail, warn };

struct Outcome {
  Verdict verdict = Verdict::pass;
  std::string note;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

/// Accumulates mismatches; the first few are kept for the report line.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Outcome outcome() const {
    std::ostringstream s;
    s << checked_ << " checks, " << failed_ << " failed";
    if (!notes_.empty()) s << " (" << notes_ << ")";
    return {failed_ == 0 ? Verdict::pass : Verdict::fail, s.str()};
  }

 private:
  std::uint64_t checked_ = 0;
  std::uint64_t failed_ = 0;
  std::string notes_;
};

ZfPolynomial x_power_form(int n, std::vector<std::pair<int, int>> terms) {
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
  for (auto [coefficient, power] : terms) c[static_cast<std::size_t>(power)] += coefficient;
  return ZfPolynomial(std::move(c));
}

// ---- 1 ----------------------------------------------------------------------

Outcome published_values() {
  Tally t;
  t.expect(zf_polynomial(path(4)) == x_power_form(4, {{2, 1}, {6, 2}, {4, 3}, {1, 4}}), "P4");
  const ZfPolynomial w5 = x_power_form(5, {{8, 3}, {5, 4}, {1, 5}});
  t.expect(zf_polynomial(wheel(5)) == w5, "W5");
  // K4 with the edge {0,1} replaced by the path 0-4-1
  const Graph subdivided = from_edge_list(5, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  t.expect(zf_polynomial(subdivided) == w5, "subdivided K4");
  for (int n = 2; n <= 10; ++n) {
    t.expect(zf_polynomial(complete(n)) == x_power_form(n, {{1, n}, {n, n - 1}}), "K" + std::to_string(n));
  }
  for (int a = 2; a <= 5; ++a) {
    for (int b = 2; b <= 5; ++b) {
      const std::vector<int> parts{a, b};
      t.expect(zf_polynomial(disjoint_union(complete(a), complete(b))) == zf_polynomial(complete_multipartite(parts)),
               "K" + std::to_string(a) + "+K" + std::to_string(b));
    }
  }
  return t.outcome();
}

// ---- 2 ----------------------------------------------------------------------

Outcome closed_forms_vs_enumeration(unsigned jobs) {
  constexpr int kTop = 12;
  const EnumerationOptions options{kDefaultEnumerationCap, jobs};
  Tally t;
  auto same = [&](const Graph& g, const ZfPolynomial& formula, const std::string& label) {
    t.expect(zf_polynomial(g, options) == formula, label);
  };
  for (int n = 1; n <= kTop; ++n) same(path(n), poly_path(n), "path " + std::to_string(n));
  for (int n = 3; n <= kTop; ++n) same(cycle(n), poly_cycle(n), "cycle " + std::to_string(n));
  for (int n = 1; n <= kTop; ++n) same(complete(n), poly_complete(n), "complete " + std::to_string(n));
  for (int n = 5; n <= kTop; ++n) same(wheel(n), poly_wheel(n), "wheel " + std::to_string(n));

  // every ordered list of at least two parts, each at least 2, summing to at most kTop
  std::vector<std::vector<int>> frontier{{}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& parts : frontier) {
      int used = 0;
      for (int p : parts) used += p;
      for (int p = 2; used + p <= kTop; ++p) {
        auto grown = parts;
        grown.push_back(p);
        if (grown.size() >= 2) same(complete_multipartite(grown), poly_multipartite(grown), "multipartite");
        next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }

  // canonical connected strings: first two symbols equal, last symbol 1
  for (int len = 2; len <= kTop; ++len) {
    for (std::uint64_t mid = 0; mid < (std::uint64_t{1} << (len - 2)); ++mid) {
      std::string b(static_cast<std::size_t>(len), '0');
      for (int i = 0; i + 2 < len; ++i) b[static_cast<std::size_t>(i + 1)] = ((mid >> i) & 1U) ? '1' : '0';
      b.back() = '1';
      b.front() = b[1];
      same(threshold_from_string(b), poly_threshold(b), "threshold " + b);
    }
  }
  return t.outcome();
}

// ---- 3 ----------------------------------------------------------------------

std::uint64_t runs_by_subset_scan(int n, int k, int m) {
  if (m > n) return 0;
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (__builtin_popcountll(s) != k) continue;
    bool found = false;
    for (int start = 0; start < n && !found; ++start) {
      int run = 0;
      while (run < m && ((s >> ((start + run) % n)) & 1U)) ++run;
      found = run == m;
    }
    count += found;
  }
  return count;
}

Outcome consecutive_selections() {
  Tally t;
  for (int m : {3, 4})
    for (int n = 3; n <= 14; ++n)
      for (int k = 0; k <= n; ++k)
        t.expect(count_consecutive_selections(n, k, m) == runs_by_subset_scan(n, k, m),
                 "m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
  return t.outcome();
}

// ---- 4 ----------------------------------------------------------------------

constexpr std::uint64_t kLabeledUpTo7 = 1 + 2 + 8 + 64 + 1024 + 32768 + 2097152;

Outcome exhaustive_sweep(unsigned jobs) {
  SweepConfig config;
  config.max_n = 7;
  config.jobs = jobs;
  Tally t;
  struct Expected {
    Suite suite;
    std::vector<const char*> checks;
  };
  const std::vector<Expected> plan{
      {Suite::extremal, {"coefficient-structure", "extremal-coefficients", "vanishing", "min-sets-characterization"}},
      {Suite::hall, {"hall-monotonicity"}},
      {Suite::multiplicativity, {"multiplicativity"}},
      {Suite::forts, {"fort-transversal", "fort-count-bound", "hamiltonian-bound"}},
      {Suite::ip, {"fort-cover-ip"}},
  };
  for (const auto& [suite, checks] : plan) {
    const SweepReport report = run_suite(suite, config);
    t.expect(report.graphs >= kLabeledUpTo7, std::string(suite_name(suite)) + " corpus too small");
    for (const char* name : checks) {
      const CheckTally* tally = report.tally(name);
      t.expect(tally != nullptr && tally->checked > 0 && tally->failed == 0, name);
    }
    // checks applied to every labelled graph must have seen all of them
    for (const char* name : {"extremal-coefficients", "hall-monotonicity", "fort-transversal", "fort-count-bound"}) {
      if (const CheckTally* tally = report.tally(name)) t.expect(tally->checked == kLabeledUpTo7, name);
    }
  }
  return t.outcome();
}

// ---- 5 ----------------------------------------------------------------------

Outcome recognizability(unsigned jobs) {
  Tally t;
  for (int n = 4; n <= 7; ++n) {
    std::vector<Graph> expected{cycle(n)};
    for (int d = 2; d <= n / 2; ++d) expected.push_back(cycle_plus_chord(n, 0, d));
    if (n == 4) expected.push_back(disjoint_union(path(2), path(2)));
    if (n == 6) expected.push_back(join(disjoint_union(path(4), complete(1)), complete(1)));

    const std::vector<Graph> found = cycle_polynomial_class(n, jobs);
    t.expect(found.size() == expected.size(), "class size at n=" + std::to_string(n));
    for (const Graph& e : expected) {
      t.expect(std::any_of(found.begin(), found.end(), [&](const Graph& f) { return is_isomorphic(e, f); }),
               "missing class member at n=" + std::to_string(n));
    }
  }
  SweepConfig config;
  config.max_n = 7;
  config.jobs = jobs;
  const SweepReport report = run_suite(Suite::recognizability, config);
  for (const char* name : {"recognizes-path", "recognizes-complete"}) {
    const CheckTally* tally = report.tally(name);
    t.expect(tally != nullptr && tally->checked == kLabeledUpTo7 && tally->failed == 0, name);
  }
  return t.outcome();
}

// ---- 6 ----------------------------------------------------------------------

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

Outcome threshold_invariance(unsigned jobs) {
  Tally t;
  const std::vector<std::string> strings = threshold_permutation_strings(4);
  t.expect(strings.size() == 6, "expected six strings");
  const EnumerationOptions options{kDefaultEnumerationCap, jobs};
  std::vector<Graph> graphs;
  for (const auto& s : strings) graphs.push_back(threshold_from_string(s));
  const ZfPolynomial reference = poly_threshold(strings.front());
  for (std::size_t i = 0; i < strings.size(); ++i) {
    t.expect(graphs[i].order() == 13, "order 13");
    t.expect(poly_threshold(strings[i]) == reference, "closed form differs for " + strings[i]);
    t.expect(zf_polynomial(graphs[i], options) == reference, "enumeration differs for " + strings[i]);
  }
  // a threshold graph is determined by its degree sequence, so distinct
  // sequences certify non-isomorphism
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j)
      t.expect(degree_sequence(graphs[i]) != degree_sequence(graphs[j]), strings[i] + " ~ " + strings[j]);
  return t.outcome();
}

// ---- 7 ----------------------------------------------------------------------

Outcome conjecture_probes(unsigned jobs, const std::string& artifact) {
  SweepConfig config;
  config.max_n = 7;
  config.jobs = jobs;
  config.random_graphs = 500;
  config.random_min_n = 8;
  config.random_max_n = 14;
  const SweepReport report = run_suite(Suite::conjectures, config);

  std::uint64_t counterexamples = 0;
  std::uint64_t checked = 0;
  bool complete = true;
  for (const char* name : {"unimodality", "path-bound"}) {
    const CheckTally* tally = report.tally(name);
    complete = complete && tally != nullptr && tally->checked == kLabeledUpTo7 + 500;
    if (tally != nullptr) {
      counterexamples += tally->failed;
      checked += tally->checked;
    }
  }
  std::ostringstream note;
  note << checked << " checks, " << counterexamples << " counterexamples";
  if (!complete) return {Verdict::fail, note.str() + " (corpus incomplete)"};
  if (counterexamples == 0) return {Verdict::pass, note.str()};
  std::ofstream out(artifact);
  write_report(out, Suite::conjectures, report);
  return {Verdict::warn, note.str() + ", written to " + artifact};
}

// ---- 8 ----------------------------------------------------------------------

Outcome tightness_witnesses() {
  Tally t;
  for (const oracle::Matrix& m : {oracle::path(3), oracle::complete(3)}) {
    const FortCountBound b = fort_count_bound(support::to_graph(m));
    std::uint64_t forts = 0;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << m.n); ++s) forts += oracle::is_fort(m, s);
    // the polynomial evaluated at 1 counts every zero forcing set
    std::uint64_t forcing_sets = 0;
    for (std::uint64_t c : oracle::polynomial(m)) forcing_sets += c;
    const std::uint64_t bound = (std::uint64_t{1} << m.n) - forcing_sets;
    t.expect(b.fort_count == forts && b.bound == bound, "library disagrees with oracle");
    t.expect(forts == bound && b.holds && b.fort_count == b.bound, "bound not tight");
  }
  return t.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  unsigned jobs = 0;
  std::string artifact = "conjecture_counterexamples.jsonl";
  app.add_option("--jobs", jobs, "worker threads (0 = all cores)");
  app.add_option("--artifact", artifact, "where conjecture counterexamples are written");
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-8); 0 runs all")->check(CLI::Range(0, 8));
  CLI11_PARSE(app, argc, argv);

  std::cout << "kernel: " << kernels::isa_name(kernels::active_isa()) << "\n";

  const std::vector<Criterion> criteria{
      {1, "published-value regression", 1.0, published_values},
      {2, "closed forms equal enumeration (n <= 12)", 600.0, [&] { return closed_forms_vs_enumeration(jobs); }},
      {3, "consecutive-selection count equals subset scan", 60.0, consecutive_selections},
      {4, "exhaustive n <= 7 theorem sweep", 1800.0, [&] { return exhaustive_sweep(jobs); }},
      {5, "recognizability", 1800.0, [&] { return recognizability(jobs); }},
      {6, "threshold family invariance (k = 4, n = 13)", 600.0, [&] { return threshold_invariance(jobs); }},
      {7, "conjecture probes", 1800.0, [&] { return conjecture_probes(jobs, artifact); }},
      {8, "fort count bound tight on P3 and K3", 1.0, tightness_witnesses},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {Verdict::fail, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.verdict != Verdict::fail && seconds > c.budget_seconds) {
      o.verdict = Verdict::fail;
      o.note += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget)";
    }
    const char* tag = o.verdict == Verdict::pass ? "PASS" : o.verdict == Verdict::warn ? "WARN" : "FAIL";
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.2fs", seconds);
    std::cout << tag << "  criterion " << c.id << ": " << c.title << " [" << elapsed << "] " << o.note << std::endl;
    failures += o.verdict == Verdict::fail;
  }
  std::cout << (failures == 0 ? "all criteria met" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
