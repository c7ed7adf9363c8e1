#include "zfpoly/sweep.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <random>
#include <tuple>

#include "parallel.hpp"
#include "zfpoly/analysis.hpp"
#include "zfpoly/closed_forms.hpp"
#include "zfpoly/forcing.hpp"
#include "zfpoly/forts.hpp"
#include "zfpoly/graph.hpp"
#include "zfpoly/polynomial.hpp"
#include "zfpoly/threshold.hpp"

namespace zfp {

namespace {

constexpr std::size_t kFindingsPerCheck = 25;

enum Check : int {
  kCoefficientStructure,
  kExtremal,
  kVanishing,
  kMinSets,
  kHall,
  kMultiplicativity,
  kFortTransversal,
  kFortCount,
  kSmallFortBound,
  kHamiltonianBound,
  kFortCover,
  kRecognizePath,
  kRecognizeComplete,
  kUnimodal,
  kPathBound,
  kCheckCount
};

constexpr std::array<const char*, kCheckCount> kCheckNames = {
    "coefficient-structure", "extremal-coefficients", "vanishing",       "min-sets-characterization",
    "hall-monotonicity",     "multiplicativity",      "fort-transversal", "fort-count-bound",
    "small-fort-bound",      "hamiltonian-bound",     "fort-cover-ip",    "recognizes-path",
    "recognizes-complete",   "unimodality",           "path-bound",
};

constexpr bool is_conjecture(int check) { return check == kUnimodal || check == kPathBound; }

using CheckMask = std::uint32_t;
constexpr CheckMask bit(Check c) { return CheckMask{1} << c; }

CheckMask graph_checks(Suite suite) {
  switch (suite) {
    case Suite::extremal:
      return bit(kCoefficientStructure) | bit(kExtremal) | bit(kVanishing) | bit(kMinSets);
    case Suite::multiplicativity:
      return bit(kMultiplicativity);
    case Suite::hall:
      return bit(kHall);
    case Suite::forts:
      return bit(kFortTransversal) | bit(kFortCount) | bit(kSmallFortBound) | bit(kHamiltonianBound);
    case Suite::ip:
      return bit(kFortCover);
    case Suite::recognizability:
      return bit(kRecognizePath) | bit(kRecognizeComplete);
    case Suite::conjectures:
      return bit(kUnimodal) | bit(kPathBound);
    case Suite::closed_forms:
      return 0;
    case Suite::all:
      return (CheckMask{1} << kCheckCount) - 1;
  }
  return 0;
}

/// Tallies and the first findings per named check, mergeable across workers.
class Ledger {
 public:
  void count(const std::string& check, bool conjecture, bool ok) {
    auto& t = tallies_[check];
    t.check = check;
    t.conjecture = conjecture;
    ++t.checked;
    if (!ok) ++t.failed;
  }

  void record(const std::string& check, bool conjecture, bool ok, const Graph& g, std::uint64_t order_key,
              const std::string& detail = {}) {
    count(check, conjecture, ok);
    if (ok) return;
    auto& list = findings_[check];
    if (list.size() < kFindingsPerCheck) {
      list.push_back({order_key, Finding{check, g.order(), to_graph6(g), detail, conjecture}});
    }
  }

  void merge(Ledger&& other) {
    for (auto& [name, t] : other.tallies_) {
      auto& mine = tallies_[name];
      mine.check = t.check;
      mine.conjecture = t.conjecture;
      mine.checked += t.checked;
      mine.failed += t.failed;
    }
    for (auto& [name, list] : other.findings_) {
      auto& mine = findings_[name];
      mine.insert(mine.end(), std::make_move_iterator(list.begin()), std::make_move_iterator(list.end()));
    }
  }

  void into(SweepReport& report) {
    for (auto& [name, t] : tallies_) report.tallies.push_back(t);
    for (auto& [name, list] : findings_) {
      std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
        return std::tie(a.second.n, a.first) < std::tie(b.second.n, b.first);
      });
      if (list.size() > kFindingsPerCheck) list.resize(kFindingsPerCheck);
      for (auto& [key, f] : list) report.findings.push_back(std::move(f));
    }
  }

 private:
  std::map<std::string, CheckTally> tallies_;
  std::map<std::string, std::vector<std::pair<std::uint64_t, Finding>>> findings_;
};

const EnumerationOptions kSingleThread{kDefaultEnumerationCap, 1};

void check_graph(const Graph& g, std::uint64_t key, CheckMask checks, Ledger& ledger) {
  const int n = g.order();
  auto want = [&](Check c) { return (checks & bit(c)) != 0; };
  auto record = [&](Check c, bool ok, const std::string& detail = {}) {
    ledger.record(kCheckNames[static_cast<std::size_t>(c)], is_conjecture(c), ok, g, key, detail);
  };

  const std::vector<std::uint8_t> flags = zero_forcing_flags(g, kSingleThread);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t s = 0; s < flags.size(); ++s) {
    if (flags[s]) ++counts[static_cast<std::size_t>(std::popcount(s))];
  }
  const ZfPolynomial p = ZfPolynomial::from_counts(counts);
  const int z = zero_forcing_number(p);
  const std::uint64_t full = low_mask(n);

  if (want(kCoefficientStructure)) {
    bool ok = p.coeff(0) == 0 && p.coeff(n) == 1;
    for (int i = 0; i <= n && ok; ++i) ok = p.coeff(i) <= binom(n, i);
    record(kCoefficientStructure, ok);
  }
  if (want(kExtremal)) {
    const ExtremalCoefficients e = extremal_coefficients(g);
    const ExtremalCoefficients brute{p.coeff(n), p.coeff(n - 1), p.coeff(n - 2), p.coeff(1)};
    record(kExtremal, e == brute,
           "formula (" + e.top.str() + "," + e.second.str() + "," + e.third.str() + "," + e.bottom.str() +
               ") vs enumeration (" + brute.top.str() + "," + brute.second.str() + "," + brute.third.str() + "," +
               brute.bottom.str() + ")");
  }
  if (want(kVanishing)) {
    bool ok = true;
    for (int i = 0; i <= n && ok; ++i) ok = (p.coeff(i) == 0) == (i < z);
    record(kVanishing, ok);
  }
  if (want(kMinSets)) record(kMinSets, all_min_sets_forcing(p) == (g.is_complete() || g.is_edgeless()));
  if (want(kHall)) record(kHall, hall_monotonicity_holds(p));
  if (want(kMultiplicativity) && connected_components(g).size() > 1) {
    record(kMultiplicativity, zf_polynomial_by_components(g, kSingleThread) == p);
  }

  const bool need_forts = want(kFortTransversal) || want(kFortCount) || want(kSmallFortBound) || want(kFortCover);
  if (need_forts) {
    const FortFamily forts = enumerate_forts(g, kSingleThread);
    if (want(kFortTransversal)) {
      // No zero forcing set may live inside the complement of a fort.
      bool ok = true;
      for (VertexSet f : forts.forts) {
        const std::uint64_t outside = full & ~f.bits();
        for (std::uint64_t sub = outside;; sub = (sub - 1) & outside) {
          if (flags[static_cast<std::size_t>(sub)]) ok = false;
          if (sub == 0 || !ok) break;
        }
        if (!ok) break;
      }
      record(kFortTransversal, ok);
    }
    if (want(kFortCount)) {
      std::uint64_t forcing_total = 0;
      for (std::uint64_t c : counts) forcing_total += c;
      const std::uint64_t bound = (std::uint64_t{1} << n) - forcing_total;
      record(kFortCount, forts.forts.size() <= bound,
             std::to_string(forts.forts.size()) + " forts vs bound " + std::to_string(bound));
    }
    if (want(kSmallFortBound)) {
      if (auto rows = small_fort_coefficient_bound(g, forts, p)) {
        record(kSmallFortBound, std::all_of(rows->begin(), rows->end(), [](const auto& r) { return r.holds; }));
      }
    }
    if (want(kFortCover)) {
      const FortCover cover = min_hitting_set(n, minimal_forts(forts));
      record(kFortCover, cover.size == z,
             "cover size " + std::to_string(cover.size) + " vs Z(G) " + std::to_string(z));
    }
  }

  if (want(kHamiltonianBound) && has_hamiltonian_path(g)) {
    bool within = true;
    bool tight = true;
    for (int i = 1; i <= n; ++i) {
      const BigInt bound = binom(n, i) - binom(n - i - 1, i);
      within = within && p.coeff(i) <= bound;
      tight = tight && p.coeff(i) == bound;
    }
    record(kHamiltonianBound, within && tight == is_path_graph(g));
  }
  if (want(kRecognizePath)) record(kRecognizePath, recognizes_path(p) == is_path_graph(g));
  if (want(kRecognizeComplete)) record(kRecognizeComplete, recognizes_complete(p) == g.is_complete());
  if (want(kUnimodal)) record(kUnimodal, is_unimodal(p));
  if (want(kPathBound)) record(kPathBound, path_bound_holds(p));
}

void exhaustive_sweep(int max_n, CheckMask checks, unsigned jobs, Ledger& ledger, std::uint64_t& graphs) {
  for (int n = 1; n <= std::min(max_n, kLabeledCorpusMaxVertices); ++n) {
    const LabeledGraphs corpus = all_labeled_graphs(n);
    const unsigned workers = detail::resolve_jobs(jobs);
    std::vector<Ledger> partial(workers);
    detail::parallel_strides(corpus.size(), workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
      const LabeledGraphs part = corpus.slice(begin, end);
      for (auto it = part.begin(); it != part.end(); ++it) check_graph(*it, it.code(), checks, partial[w]);
    });
    for (auto& l : partial) ledger.merge(std::move(l));
    graphs += corpus.size();
  }
}

Graph random_graph(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return from_edge_list(n, edges);
}

/// Graphs are drawn serially so the corpus only depends on the seed.
std::vector<Graph> random_corpus(std::uint64_t seed, int count, int min_n, int max_n, double min_density,
                                 double max_density) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(min_n, max_n);
  std::uniform_real_distribution<double> density(min_density, max_density);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    const int n = order(rng);
    out.push_back(random_graph(rng, n, density(rng)));
  }
  return out;
}

void random_sweep(const std::vector<Graph>& corpus, CheckMask checks, unsigned jobs, Ledger& ledger,
                  std::uint64_t& graphs) {
  const unsigned workers = detail::resolve_jobs(jobs);
  std::vector<Ledger> partial(workers);
  detail::parallel_strides(corpus.size(), workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    // key offset keeps random findings after exhaustive ones of the same order
    for (std::uint64_t i = begin; i < end; ++i) check_graph(corpus[i], (std::uint64_t{1} << 40) + i, checks, partial[w]);
  });
  for (auto& l : partial) ledger.merge(std::move(l));
  graphs += corpus.size();
}

/// k-subsets of the n-cycle containing m cyclically consecutive vertices, by direct scan.
std::uint64_t consecutive_selections_by_scan(int n, int k, int m) {
  std::uint64_t count = 0;
  if (m > n) return 0;  // a run needs m distinct vertices
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(s) != k) continue;
    bool found = false;
    for (int start = 0; start < n && !found; ++start) {
      bool run = true;
      for (int d = 0; d < m && run; ++d) run = (s >> ((start + d) % n)) & 1U;
      found = run;
    }
    count += found ? 1 : 0;
  }
  return count;
}

void closed_form_checks(const SweepConfig& config, Ledger& ledger, std::uint64_t& graphs) {
  const int top = config.max_n;
  std::uint64_t key = 0;
  auto compare = [&](const char* check, const Graph& g, const ZfPolynomial& formula) {
    const ZfPolynomial brute = zf_polynomial(g, EnumerationOptions{kDefaultEnumerationCap, config.jobs});
    ledger.record(check, false, formula == brute, g, key++, to_pretty(formula) + " vs " + to_pretty(brute));
    ++graphs;
  };

  for (int n = 1; n <= top; ++n) compare("closed-form-path", path(n), poly_path(n));
  for (int n = 3; n <= top; ++n) compare("closed-form-cycle", cycle(n), poly_cycle(n));
  for (int n = 1; n <= top; ++n) compare("closed-form-complete", complete(n), poly_complete(n));
  for (int n = 5; n <= top; ++n) compare("closed-form-wheel", wheel(n), poly_wheel(n));

  // every ordered list of parts >= 2 with at least two parts
  std::vector<std::vector<int>> pending{{}};
  while (!pending.empty()) {
    std::vector<int> parts = std::move(pending.back());
    pending.pop_back();
    int used = 0;
    for (int a : parts) used += a;
    if (parts.size() >= 2) compare("closed-form-multipartite", complete_multipartite(parts), poly_multipartite(parts));
    for (int a = 2; used + a <= top; ++a) {
      auto next = parts;
      next.push_back(a);
      pending.push_back(std::move(next));
    }
  }

  for (int len = 2; len <= top; ++len) {
    for (std::uint64_t middle = 0; middle < (std::uint64_t{1} << std::max(len - 3, 0)); ++middle) {
      for (char lead : {'0', '1'}) {
        std::string s(static_cast<std::size_t>(len), '1');
        s[0] = lead;
        s[1] = lead;
        for (int i = 2; i < len - 1; ++i) s[static_cast<std::size_t>(i)] = ((middle >> (i - 2)) & 1U) ? '1' : '0';
        if (len == 2 && lead == '0') continue;  // "00" is not connected; "11" covers length 2
        const Graph g = threshold_from_string(s);
        compare("closed-form-threshold", g, poly_threshold(s));
        if (len <= 12) {
          bool agree = true;
          for (std::uint64_t sub = 0; sub <= low_mask(len) && agree; ++sub) {
            agree = threshold_zfs_check(s, VertexSet(sub)) == is_zero_forcing_set(g, VertexSet(sub));
          }
          ledger.record("threshold-characterization", false, agree, g, key++, s);
        }
      }
    }
  }

  for (int n = 4; n <= std::min(top, 10); ++n) {
    const ZfPolynomial target = poly_cycle(n);
    for (int j = 2; j <= n - 2; ++j) compare("chord-invariance", cycle_plus_chord(n, 0, j), target);
  }

  for (int m : {3, 4}) {
    for (int n = 3; n <= std::max(top, 14); ++n) {
      for (int k = 0; k <= n; ++k) {
        const BigInt formula = count_consecutive_selections(n, k, m);
        const std::uint64_t direct = consecutive_selections_by_scan(n, k, m);
        ledger.record("consecutive-selections", false, formula == direct, cycle(n), key++,
                      "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " + formula.str() + " vs " +
                          std::to_string(direct));
      }
    }
  }

  for (int k = 3; k <= 5; ++k) {
    const int n = k * (k + 1) / 2 - 1 + 2 * (k - 2);
    if (n > top) break;
    const auto family = same_poly_threshold_family(k);
    for (const auto& [s, p] : family) compare("threshold-permutation", threshold_from_string(s), family.front().second);
  }
}

void cycle_class_checks(const SweepConfig& config, Ledger& ledger) {
  for (int n = 4; n <= std::min(config.max_n, kLabeledCorpusMaxVertices); ++n) {
    std::vector<Graph> expected{cycle(n)};
    for (int j = 2; j <= n / 2; ++j) expected.push_back(cycle_plus_chord(n, 0, j));
    if (n == 4) expected.push_back(disjoint_union(complete(2), complete(2)));
    if (n == 6) expected.push_back(join(disjoint_union(path(4), complete(1)), complete(1)));

    const std::vector<Graph> found = cycle_polynomial_class(n, config.jobs);
    bool ok = found.size() == expected.size();
    for (const Graph& e : expected) {
      ok = ok && std::any_of(found.begin(), found.end(), [&](const Graph& f) { return is_isomorphic(e, f); });
    }
    ledger.record("cycle-polynomial-class", false, ok, cycle(n), static_cast<std::uint64_t>(n),
                  std::to_string(found.size()) + " classes found, " + std::to_string(expected.size()) + " expected");
  }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  static constexpr std::array<std::pair<std::string_view, Suite>, 9> table{{
      {"extremal", Suite::extremal},
      {"multiplicativity", Suite::multiplicativity},
      {"hall", Suite::hall},
      {"forts", Suite::forts},
      {"ip", Suite::ip},
      {"recognizability", Suite::recognizability},
      {"closed-forms", Suite::closed_forms},
      {"conjectures", Suite::conjectures},
      {"all", Suite::all},
  }};
  for (auto [key, suite] : table) {
    if (key == name) return suite;
  }
  return std::nullopt;
}

const char* suite_name(Suite suite) noexcept {
  switch (suite) {
    case Suite::extremal:
      return "extremal";
    case Suite::multiplicativity:
      return "multiplicativity";
    case Suite::hall:
      return "hall";
    case Suite::forts:
      return "forts";
    case Suite::ip:
      return "ip";
    case Suite::recognizability:
      return "recognizability";
    case Suite::closed_forms:
      return "closed-forms";
    case Suite::conjectures:
      return "conjectures";
    case Suite::all:
      return "all";
  }
  return "unknown";
}

bool SweepReport::theorem_failure() const {
  return std::any_of(tallies.begin(), tallies.end(), [](const CheckTally& t) { return !t.conjecture && t.failed > 0; });
}

const CheckTally* SweepReport::tally(std::string_view check) const {
  for (const auto& t : tallies) {
    if (t.check == check) return &t;
  }
  return nullptr;
}

SweepReport run_suite(Suite suite, const SweepConfig& config) {
  Ledger ledger;
  SweepReport report;
  const CheckMask checks = graph_checks(suite);
  if (checks != 0) exhaustive_sweep(config.max_n, checks, config.jobs, ledger, report.graphs);

  const bool all = suite == Suite::all;
  if (all || suite == Suite::multiplicativity) {
    // sparse graphs so that most samples are disconnected
    random_sweep(random_corpus(config.seed, 200, 8, 12, 0.05, 0.3), bit(kMultiplicativity), config.jobs, ledger,
                 report.graphs);
  }
  if (all || suite == Suite::ip) {
    random_sweep(random_corpus(config.seed + 1, config.ip_random_graphs, 8, config.ip_random_max_n, 0.2, 0.8),
                 bit(kFortCover), config.jobs, ledger, report.graphs);
  }
  if (all || suite == Suite::conjectures) {
    random_sweep(random_corpus(config.seed + 2, config.random_graphs, config.random_min_n, config.random_max_n, 0.1, 0.9),
                 bit(kUnimodal) | bit(kPathBound), config.jobs, ledger, report.graphs);
  }
  if (all || suite == Suite::closed_forms) closed_form_checks(config, ledger, report.graphs);
  if (all || suite == Suite::recognizability) cycle_class_checks(config, ledger);

  ledger.into(report);
  return report;
}

void write_report(std::ostream& out, Suite suite, const SweepReport& report) {
  for (const Finding& f : report.findings) {
    nlohmann::json rec = {{"type", f.conjecture ? "warning" : "failure"},
                          {"check", f.check},
                          {"n", f.n},
                          {"graph6", f.graph6}};
    if (!f.detail.empty()) rec["detail"] = f.detail;
    out << rec.dump() << '\n';
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckTally& t : report.tallies) {
    checks.push_back({{"check", t.check}, {"checked", t.checked}, {"failed", t.failed}, {"conjecture", t.conjecture}});
  }
  nlohmann::json summary = {{"type", "summary"},
                            {"suite", suite_name(suite)},
                            {"graphs", report.graphs},
                            {"checks", std::move(checks)},
                            {"passed", !report.theorem_failure()}};
  out << summary.dump() << '\n';
}

}  // namespace zfp
