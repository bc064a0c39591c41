// Command-line front end: generate trees, split at (semi-)centroids, run the
// recursive common-subtree algorithm and the exact oracle, solve the growth
// exponent fixed point, and drive Monte Carlo experiments.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "mast/counting.hpp"
#include "mast/dirichlet.hpp"
#include "mast/experiment.hpp"
#include "mast/gamma.hpp"
#include "mast/generate.hpp"
#include "mast/mast_exact.hpp"
#include "mast/newick.hpp"
#include "mast/rng.hpp"
#include "mast/splitting.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_tree_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

mast::BinaryTree load_tree(const std::string& path) {
  return mast::from_newick(read_tree_text(path));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + out_path);
  out << text;
}

void validate_witness(const mast::BinaryTree& t, const mast::BinaryTree& u,
                      const mast::GammaResult& g) {
  if (g.size == 0) return;
  std::vector<mast::LeafLabel> keep;
  for (std::int64_t k : g.leafset) keep.push_back(mast::LeafLabel::original(k));
  if (t.kind() != mast::RootKind::NonRooted)
    keep.push_back(mast::LeafLabel::star());
  if (t.kind() == mast::RootKind::DoublyRooted)
    keep.push_back(mast::LeafLabel::bullet());
  if (!mast::is_equivalent(mast::restrict_to(t, keep), g.witness) ||
      !mast::is_equivalent(mast::restrict_to(u, keep), g.witness))
    throw std::runtime_error("witness failed validation");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Common subtrees of random leaf-labeled binary trees"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out_path;
  bool validate = false;
  app.add_option("--seed", seed, "Master random seed");
  app.add_option("--format", format, "Record format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "Output file (default stdout)");
  app.add_flag("--validate", validate,
               "Re-check witnesses against both input trees");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a uniform random tree");
  long gen_n = 0;
  std::string gen_kind = "nonrooted";
  gen->add_option("--n", gen_n, "Number of original leaves")->required();
  gen->add_option("--kind", gen_kind, "rooted|doubly|nonrooted")
      ->check(CLI::IsMember({"rooted", "doubly", "nonrooted"}));

  // split
  auto* split = app.add_subcommand(
      "split", "Split a tree at its semi-centroid (doubly) or centroid (rooted)");
  std::string split_file;
  split->add_option("tree", split_file, "Serialized tree file, - for stdin")
      ->required();

  // gamma
  auto* gam = app.add_subcommand(
      "gamma", "Run the recursive common-subtree algorithm on two trees");
  std::string gamma_a, gamma_b;
  gam->add_option("tree1", gamma_a)->required();
  gam->add_option("tree2", gamma_b)->required();

  // mast
  auto* mst = app.add_subcommand("mast", "Exact largest common subtree");
  std::string mast_a, mast_b;
  long mast_limit = 16;
  mst->add_option("tree1", mast_a)->required();
  mst->add_option("tree2", mast_b)->required();
  mst->add_option("--limit", mast_limit, "Maximum size for the exact search");

  // beta
  auto* beta = app.add_subcommand(
      "beta", "Solve the fixed point for the growth exponent");
  double beta_tol = 1e-6, quad_err = 1e-7;
  beta->add_option("--tolerance", beta_tol, "Fixed-point residual tolerance");
  beta->add_option("--quad-error", quad_err, "Quadrature absolute error");

  // experiment
  auto* exp = app.add_subcommand("experiment", "Monte Carlo gamma experiment");
  std::string exp_n = "1024";
  std::string exp_kind = "rooted";
  int exp_reps = 10, exp_workers = 1;
  bool exp_kappa = false;
  exp->add_option("--n", exp_n, "Comma-separated list of sizes")->required();
  exp->add_option("--kind", exp_kind, "rooted|doubly|nonrooted")
      ->check(CLI::IsMember({"rooted", "doubly", "nonrooted"}));
  exp->add_option("--reps", exp_reps, "Replicates per size");
  exp->add_option("--workers", exp_workers, "Worker threads");
  exp->add_flag("--kappa", exp_kappa, "Also compute exact kappa (n <= 16)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      mast::RngStream rng(seed);
      mast::BinaryTree t = mast::generate_uniform(
          gen_n, mast::root_kind_from_string(gen_kind), rng);
      emit(mast::to_newick(t) + "\n", out_path);
    } else if (*split) {
      mast::BinaryTree t = load_tree(split_file);
      mast::RngStream rng(seed);
      mast::SplitOutcome so = mast::split_tree(t, rng);
      ordered_json j;
      j["branch_point"] = so.branch_point;
      j["subtrees"] = {mast::to_newick(so.subtrees[0]),
                       mast::to_newick(so.subtrees[1]),
                       mast::to_newick(so.subtrees[2])};
      j["sizes"] = so.sizes;
      emit(j.dump(2) + "\n", out_path);
    } else if (*gam) {
      mast::BinaryTree t = load_tree(gamma_a);
      mast::BinaryTree u = load_tree(gamma_b);
      mast::RngStream rng(seed);
      mast::GammaResult g = t.kind() == mast::RootKind::NonRooted
                                ? mast::gamma_nonrooted(t, u, rng)
                                : mast::gamma(t, u, rng);
      if (validate) validate_witness(t, u, g);
      ordered_json j;
      j["size"] = g.size;
      j["leafset"] = g.leafset;
      j["witness"] = g.witness.empty() ? "" : mast::to_newick(g.witness);
      emit(j.dump(2) + "\n", out_path);
    } else if (*mst) {
      mast::BinaryTree t = load_tree(mast_a);
      mast::BinaryTree u = load_tree(mast_b);
      mast::MastResult r = mast::mast_exact(t, u, mast_limit);
      ordered_json j;
      j["kappa"] = r.kappa;
      j["witness"] = r.witness;
      emit(j.dump(2) + "\n", out_path);
    } else if (*beta) {
      mast::SolverResult r = mast::solve_beta(beta_tol, quad_err);
      ordered_json j;
      j["beta"] = r.beta;
      j["alpha"] = r.alpha;
      j["residual"] = r.residual;
      j["moments"]["u"] = r.moments.eu;
      j["moments"]["v"] = r.moments.ev;
      j["quadrature_error"] = r.moments.error_estimate;
      emit(j.dump(2) + "\n", out_path);
    } else if (*exp) {
      mast::ExperimentConfig config;
      for (auto part : CLI::detail::split(exp_n, ','))
        config.n_values.push_back(std::stol(part));
      config.kind = mast::root_kind_from_string(exp_kind);
      config.replicates = exp_reps;
      config.master_seed = seed;
      config.workers = exp_workers;
      config.compute_kappa = exp_kappa;
      config.validate = validate;
      auto records = mast::run_experiment(config);
      const mast::RecordFormat rf = format == "csv" ? mast::RecordFormat::Csv
                                                    : mast::RecordFormat::Json;
      if (out_path.empty()) {
        mast::write_records(records, std::cout, rf);
      } else {
        mast::write_records_file(records, out_path, rf);
      }
      // Per-size summary and, with enough sizes, the exponent fit.
      std::ostream& log = out_path.empty() ? std::cerr : std::cout;
      for (long n : config.n_values) {
        double sum = 0;
        long count = 0;
        for (const auto& r : records)
          if (r.n == n) { sum += r.gamma; ++count; }
        log << "n=" << n << " mean_gamma=" << (sum / count) << "\n";
      }
      if (config.n_values.size() >= 3) {
        try {
          mast::ExponentEstimate est = mast::estimate_exponent(records);
          log << "slope=" << est.slope << " stderr=" << est.stderr_slope
              << " intercept=" << est.intercept << "\n";
        } catch (const std::exception& e) {
          log << "exponent fit unavailable: " << e.what() << "\n";
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
