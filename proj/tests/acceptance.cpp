// Acceptance suite: end-to-end checks of the library and CLI, one test case
// per criterion, each printing a [PASS] line with the measured numbers.
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

#include "mast/counting.hpp"
#include "mast/dirichlet.hpp"
#include "mast/experiment.hpp"
#include "mast/gamma.hpp"
#include "mast/generate.hpp"
#include "mast/mast_exact.hpp"
#include "mast/newick.hpp"
#include "mast/rng.hpp"
#include "mast/split_pmf.hpp"
#include "mast/splitting.hpp"

using namespace mast;
using namespace mast_tests;

namespace {

constexpr const char* kCliPath = MAST_CLI_PATH;
constexpr const char* kWorkDir = MAST_WORK_DIR;

std::string run_cli(const std::string& args, const std::string& tag) {
  const std::string out = std::string(kWorkDir) + "/cli_" + tag + ".out";
  const std::string cmd = std::string(kCliPath) + " " + args + " > " + out;
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream in(out, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double chi2_p(double stat, double df) {
  boost::math::chi_squared dist(df);
  return boost::math::cdf(boost::math::complement(dist, stat));
}

void pass(const std::string& line) {
  std::cout << "[PASS] " << line << std::endl;
}

}  // namespace

TEST_CASE("criterion 1: beta subcommand hits the fixed point under a minute") {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = run_cli("beta", "beta");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const auto j = nlohmann::json::parse(text);
  const double beta = j["beta"], alpha = j["alpha"];
  CHECK(beta > 0.4464);
  CHECK(beta < 0.4465);
  CHECK(alpha > 0.854);
  CHECK(alpha < 0.864);
  CHECK(seconds < 60.0);
  pass("criterion 1: beta=" + std::to_string(beta) +
       " alpha=" + std::to_string(alpha) + " in " + std::to_string(seconds) +
       "s");
}

TEST_CASE("criterion 2: quadrature moments match the n=5000 pmf oracle") {
  const double beta = 0.4464;
  const std::array<double, 3> oracle_u = pmf_moments_rooted(5000, beta);
  const std::array<double, 3> oracle_v = pmf_moments_doubly(5000, beta);
  const auto rooted = ConstrainedDirichlet::rooted_split_law();
  const auto doubly = ConstrainedDirichlet::doubly_split_law();
  double worst = 0;
  for (int i = 0; i < 3; ++i) {
    const double du = std::abs(moment(rooted, i, beta) - oracle_u[i]);
    const double dv = std::abs(moment(doubly, i, beta) - oracle_v[i]);
    CHECK(du < 5e-3);
    CHECK(dv < 5e-3);
    worst = std::max({worst, du, dv});
  }
  pass("criterion 2: moment vs finite-n oracle, worst |diff|=" +
       std::to_string(worst));
}

TEST_CASE("criterion 3: pmfs are normalized and match sampled splits") {
  // Exact rational sums below the threshold, 1e-12 above it.
  for (long n : {1L, 10L, 150L, 300L}) {
    BigRational s = 0;
    for (const auto& e : split_pmf_doubly_exact(n)) s += e.probability;
    CHECK(s == 1);
  }
  for (long n : {2L, 10L, 150L, 300L}) {
    BigRational s = 0;
    for (const auto& e : split_pmf_rooted_exact(n)) s += e.probability;
    CHECK(s == 1);
  }
  for (long n : {301L, 1000L}) {
    double sd = 0, sr = 0;
    for (const auto& e : split_pmf_doubly(n)) sd += e.probability;
    for (const auto& e : split_pmf_rooted(n)) sr += e.probability;
    CHECK(std::abs(sd - 1.0) < 1e-12);
    CHECK(std::abs(sr - 1.0) < 1e-12);
  }

  // 1e5 sampled splits at n = 10 against the pmf, both kinds.
  const long samples = 100000;
  RngStream rng(20250809);
  double worst_p = 1.0;
  for (int which = 0; which < 2; ++which) {
    const bool is_doubly = which == 0;
    std::map<std::array<long, 3>, long> counts;
    for (long s = 0; s < samples; ++s) {
      const BinaryTree t = generate_uniform(
          10, is_doubly ? RootKind::DoublyRooted : RootKind::Rooted, rng);
      counts[split_tree(t, rng).sizes]++;
    }
    const auto pmf = is_doubly ? split_pmf_doubly(10) : split_pmf_rooted(10);
    double stat = 0, tail_obs = 0, tail_exp = 0;
    long cells = 0;
    for (const auto& e : pmf) {
      const double expect = e.probability * samples;
      const double obs = static_cast<double>(counts[e.sizes]);
      if (expect < 5.0) {
        tail_obs += obs;
        tail_exp += expect;
        continue;
      }
      stat += (obs - expect) * (obs - expect) / expect;
      ++cells;
    }
    if (tail_exp > 0) {
      stat += (tail_obs - tail_exp) * (tail_obs - tail_exp) / tail_exp;
      ++cells;
    }
    const double p = chi2_p(stat, static_cast<double>(cells - 1));
    CHECK(p > 0.001);
    worst_p = std::min(worst_p, p);
  }
  pass("criterion 3: pmf sums exact/1e-12, sampled chi-square worst p=" +
       std::to_string(worst_p));
}

TEST_CASE("criterion 4: counting formula and asymptotics") {
  const long expected[] = {1, 1, 1, 1, 3, 15, 105, 945};
  for (long m = 0; m <= 7; ++m) CHECK(count_trees(m) == expected[m]);
  const auto [r1, r2] = asymptotic_ratio_check(1000);
  CHECK(std::abs(r1 - 1.0) < 0.01);
  CHECK(std::abs(r2 - 1.0) < 0.01);
  pass("criterion 4: c_0..c_7 exact, n=1000 ratios " + std::to_string(r1) +
       ", " + std::to_string(r2));
}

TEST_CASE("criterion 5: algorithm validity on 10^4 pairs, n in 1..12") {
  const int pairs_per_cell = 417;  // 417 * 12 * 2 = 10008 pairs
  long total = 0, worst_gap = 0;
  for (long n = 1; n <= 12; ++n) {
    for (int which = 0; which < 2; ++which) {
      const RootKind kind =
          which == 0 ? RootKind::Rooted : RootKind::DoublyRooted;
      for (int rep = 0; rep < pairs_per_cell; ++rep) {
        RngStream rng(RngStream::derive_seed(
            42, static_cast<std::uint64_t>(n * 2 + which),
            static_cast<std::uint64_t>(rep)));
        const BinaryTree t = generate_uniform(n, kind, rng);
        const BinaryTree u = generate_uniform(n, kind, rng);
        // The decomposition identity is asserted inside every recursion
        // node; a violation would throw here.
        const GammaResult g = gamma(t, u, rng);
        std::vector<LeafLabel> keep;
        for (std::int64_t k : g.leafset)
          keep.push_back(LeafLabel::original(k));
        keep.push_back(LeafLabel::star());
        if (kind == RootKind::DoublyRooted)
          keep.push_back(LeafLabel::bullet());
        REQUIRE(is_equivalent(restrict_to(t, keep), g.witness));
        REQUIRE(is_equivalent(restrict_to(u, keep), g.witness));
        const long kappa = mast_exact(t, u).kappa;
        REQUIRE(g.size <= kappa);
        worst_gap = std::max(worst_gap, kappa - g.size);
        ++total;
      }
    }
  }
  pass("criterion 5: " + std::to_string(total) +
       " pairs valid, gamma <= kappa throughout (max gap " +
       std::to_string(worst_gap) + ")");
}

TEST_CASE("criterion 6: uniformity, consistency and conditional uniformity") {
  // Lemma 1: restriction of uniform n=5 trees to {1,2,3,4} is uniform over
  // the 3 quartet classes.
  {
    RngStream rng(66001);
    std::map<std::string, long> counts;
    const auto sub = original_labels(4);
    for (long s = 0; s < 100000; ++s) {
      const BinaryTree t = generate_uniform(5, RootKind::NonRooted, rng);
      counts[canon(restrict_to(t, sub))]++;
    }
    REQUIRE(counts.size() == 3);
    std::vector<long> v;
    for (auto& [k, c] : counts) v.push_back(c);
    const double p = chi_square_uniform_p(v);
    CHECK(p > 0.001);
    pass("criterion 6a: Lemma-1 restriction uniformity p=" +
         std::to_string(p));
  }

  // Conditional uniformity of the split decomposition at n <= 6: given the
  // size triple, (ordered partition, shape triple) is uniform over all
  // multinomial(n; sizes) * prod c_* cells. This is the joint form of the
  // (ii) and (iii) parts of the two split lemmas.
  double worst_p = 1.0;
  for (int which = 0; which < 2; ++which) {
    const bool is_doubly = which == 0;
    for (long n = 5; n <= 6; ++n) {
      RngStream rng(7000 + 10 * n + which);
      const long samples = 100000;
      std::map<std::array<long, 3>, std::map<std::string, long>> by_triple;
      for (long s = 0; s < samples; ++s) {
        const BinaryTree t = generate_uniform(
            n, is_doubly ? RootKind::DoublyRooted : RootKind::Rooted, rng);
        const SplitOutcome so = split_tree(t, rng);
        std::string key;
        for (int i = 0; i < 3; ++i) {
          for (std::int64_t l : so.leaf_sets[i]) key += std::to_string(l) + ".";
          key += "|";
        }
        key += "#";
        for (int i = 0; i < 3; ++i) key += canon(so.subtrees[i]);
        by_triple[so.sizes][key]++;
      }
      const auto pmf = is_doubly ? split_pmf_doubly(n) : split_pmf_rooted(n);
      for (const auto& e : pmf) {
        const auto& observed = by_triple[e.sizes];
        double obs_total = 0;
        for (const auto& [k, c] : observed) obs_total += c;
        if (obs_total < 4000) continue;  // only well-populated triples
        // Total number of equally likely cells for this size triple.
        BigInt cells_big = count_trees(e.sizes[0] + (is_doubly ? 2 : 1)) *
                           count_trees(e.sizes[1] + (is_doubly ? 2 : 1)) *
                           count_trees(e.sizes[2] + (is_doubly ? 1 : 2));
        BigInt multinom = 1;
        for (long v = n; v > 0; --v) multinom *= v;
        for (int i = 0; i < 3; ++i)
          for (long v = e.sizes[i]; v > 0; --v) multinom /= v;
        cells_big *= multinom;
        const double cells = cells_big.convert_to<double>();
        // Condition on the triple's sample count: uniform over the cells.
        const double expect = obs_total / cells;
        if (expect < 5.0) continue;
        double stat = 0;
        for (const auto& [k, c] : observed)
          stat += (c - expect) * (c - expect) / expect;
        stat += (cells - static_cast<double>(observed.size())) * expect;
        const double p = chi2_p(stat, cells - 1);
        CHECK(p > 0.001);
        worst_p = std::min(worst_p, p);
      }
    }
  }
  pass("criterion 6b: conditional uniformity at n in {5,6}, worst p=" +
       std::to_string(worst_p));
}

TEST_CASE("criterion 7: coupling inequality on 500 rooted pairs at n = 8") {
  RngStream rng(777);
  for (int rep = 0; rep < 500; ++rep) {
    const BinaryTree t = generate_uniform(8, RootKind::Rooted, rng);
    const BinaryTree u = generate_uniform(8, RootKind::Rooted, rng);
    REQUIRE(kappa_lower_bound_check(t, u));
  }
  pass("criterion 7: kappa(T0) >= kappa(T1) on 500 pairs");
}

TEST_CASE("criterion 8: growth exponent over n = 2^10..2^16") {
  ExperimentConfig config;
  for (int k = 10; k <= 16; ++k) config.n_values.push_back(1L << k);
  config.kind = RootKind::Rooted;
  config.replicates = 200;
  config.master_seed = 8888;
  config.workers = 2;

  const auto start = std::chrono::steady_clock::now();
  const auto records = run_experiment(config);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  const ExponentEstimate est = estimate_exponent(records);
  boost::math::students_t tdist(static_cast<double>(config.n_values.size() - 2));
  const double tq = boost::math::quantile(tdist, 0.975);
  const double ci_low = est.slope - tq * est.stderr_slope;
  CHECK(est.slope >= 0.40);
  CHECK(est.slope <= 0.47);
  CHECK(est.slope > 0.366);
  CHECK(ci_low > 0.366);

  // Near-linear runtime scaling: total wall time per pair, 2^16 vs 2^10,
  // should grow by no more than n ratio x log factor x slack.
  auto total_ms = [&](long n) {
    double ms = 0;
    for (const auto& r : records)
      if (r.n == n) ms += static_cast<double>(r.wall_time_ms);
    return std::max(ms, 1.0);
  };
  const double ratio = total_ms(1L << 16) / total_ms(1L << 10);
  CHECK(ratio < 64.0 * 16.0);

  // Report only: the doubly/rooted mean-gamma ratio approximates alpha.
  ExperimentConfig doubly = config;
  doubly.n_values = {1L << 16};
  doubly.kind = RootKind::DoublyRooted;
  doubly.replicates = 50;
  const auto drecords = run_experiment(doubly);
  double dmean = 0, rmean = 0;
  long dcount = 0, rcount = 0;
  for (const auto& r : drecords) { dmean += r.gamma; ++dcount; }
  for (const auto& r : records)
    if (r.n == (1L << 16)) { rmean += r.gamma; ++rcount; }
  dmean /= dcount;
  rmean /= rcount;

  pass("criterion 8: slope=" + std::to_string(est.slope) + " (stderr " +
       std::to_string(est.stderr_slope) + ", 95% CI low " +
       std::to_string(ci_low) + ") in " + std::to_string(seconds) +
       "s; doubly/rooted mean ratio at 2^16 = " +
       std::to_string(dmean / rmean) + " (alpha ~ 0.859, report only)");
}

TEST_CASE("criterion 9: byte-identical experiment output across workers") {
  const std::string base = std::string(kWorkDir) + "/det_";
  const std::string common =
      " experiment --n 2,4,8 --kind doubly --reps 50 --kappa --seed 424242 ";
  run_cli(common + "--workers 1 --format csv --out " + base + "w1.csv", "d1");
  run_cli(common + "--workers 4 --format csv --out " + base + "w4.csv", "d2");
  run_cli(common + "--workers 1 --format csv --out " + base + "again.csv",
          "d3");
  run_cli(common + "--workers 3 --format json --out " + base + "w3.json",
          "d4");
  run_cli(common + "--workers 1 --format json --out " + base + "w1.json",
          "d5");
  const std::string w1 = slurp(base + "w1.csv");
  CHECK(w1 == slurp(base + "w4.csv"));
  CHECK(w1 == slurp(base + "again.csv"));
  CHECK(slurp(base + "w1.json") == slurp(base + "w3.json"));
  CHECK(w1.find("n,kind,replicate,seed,gamma,kappa,wall_time_ms") == 0);
  pass("criterion 9: workers 1/3/4 and reruns byte-identical, csv and json");
}
