#include "mast/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "mast/gamma.hpp"
#include "mast/generate.hpp"
#include "mast/mast_exact.hpp"
#include "mast/rng.hpp"

namespace mast {

namespace {

constexpr long kKappaLimit = 16;

ExperimentRecord run_replicate(long n, RootKind kind, int replicate,
                               std::uint64_t master_seed, bool compute_kappa,
                               bool validate) {
  ExperimentRecord rec;
  rec.n = n;
  rec.kind = kind;
  rec.replicate = replicate;
  rec.seed = RngStream::derive_seed(master_seed, static_cast<std::uint64_t>(n),
                                    static_cast<std::uint64_t>(replicate));
  RngStream task(rec.seed);
  RngStream rng_t = task.fork(0), rng_u = task.fork(1), rng_g = task.fork(2);

  const auto start = std::chrono::steady_clock::now();
  BinaryTree t = generate_uniform(n, kind, rng_t);
  BinaryTree u = generate_uniform(n, kind, rng_u);
  GammaResult g = kind == RootKind::NonRooted ? gamma_nonrooted(t, u, rng_g)
                                              : gamma(t, u, rng_g);
  rec.gamma = g.size;
  if (compute_kappa && n <= kKappaLimit)
    rec.kappa = mast_exact(t, u, kKappaLimit).kappa;
  const auto stop = std::chrono::steady_clock::now();
  rec.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
          .count();

  if (validate && g.size > 0) {
    std::vector<LeafLabel> keep;
    for (std::int64_t k : g.leafset) keep.push_back(LeafLabel::original(k));
    if (kind != RootKind::NonRooted) keep.push_back(LeafLabel::star());
    if (kind == RootKind::DoublyRooted) keep.push_back(LeafLabel::bullet());
    if (!is_equivalent(restrict_to(t, keep), g.witness) ||
        !is_equivalent(restrict_to(u, keep), g.witness))
      throw std::logic_error("run_experiment: witness failed validation");
  }
  if (rec.kappa && rec.gamma > *rec.kappa)
    throw std::logic_error("run_experiment: gamma exceeds exact kappa");
  return rec;
}

}  // namespace

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
  if (config.n_values.empty())
    throw std::invalid_argument("run_experiment: n_values empty");
  if (!std::is_sorted(config.n_values.begin(), config.n_values.end()))
    throw std::invalid_argument("run_experiment: n_values must be sorted");
  if (config.replicates < 1)
    throw std::invalid_argument("run_experiment: replicates must be >= 1");
  for (long n : config.n_values)
    if (n < 0 || (n == 0 && config.kind == RootKind::NonRooted))
      throw std::invalid_argument("run_experiment: invalid n for kind");

  struct Task {
    long n;
    int replicate;
  };
  std::vector<Task> tasks;
  tasks.reserve(config.n_values.size() * config.replicates);
  for (long n : config.n_values)
    for (int r = 0; r < config.replicates; ++r) tasks.push_back({n, r});

  std::vector<ExperimentRecord> records(tasks.size());
  const int workers = std::max(
      1, std::min<int>(config.workers, static_cast<int>(tasks.size())));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || failed.load()) return;
      try {
        records[i] = run_replicate(tasks[i].n, config.kind, tasks[i].replicate,
                                   config.master_seed, config.compute_kappa,
                                   config.validate);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        failed = true;
        failure = e.what();
        return;
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (failed) throw std::runtime_error("run_experiment: " + failure);
  return records;
}

ExponentEstimate estimate_exponent(const std::vector<ExperimentRecord>& records) {
  // Mean gamma per n.
  std::vector<std::pair<long, std::pair<double, long>>> acc;  // n -> (sum, count)
  for (const ExperimentRecord& r : records) {
    auto it = std::find_if(acc.begin(), acc.end(),
                           [&](const auto& p) { return p.first == r.n; });
    if (it == acc.end())
      acc.push_back({r.n, {static_cast<double>(r.gamma), 1}});
    else {
      it->second.first += r.gamma;
      it->second.second += 1;
    }
  }
  if (acc.size() < 3)
    throw std::invalid_argument("estimate_exponent: need >= 3 distinct sizes");
  std::vector<double> xs, ys;
  long n_min = acc.front().first, n_max = acc.front().first;
  for (const auto& [n, sums] : acc) {
    const double mean = sums.first / sums.second;
    if (mean <= 0.0)
      throw std::invalid_argument("estimate_exponent: mean gamma is 0 at some n");
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(mean));
    n_min = std::min(n_min, n);
    n_max = std::max(n_max, n);
  }
  const std::size_t m = xs.size();
  double xbar = 0, ybar = 0;
  for (std::size_t i = 0; i < m; ++i) { xbar += xs[i]; ybar += ys[i]; }
  xbar /= m;
  ybar /= m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (xs[i] - xbar) * (xs[i] - xbar);
    sxy += (xs[i] - xbar) * (ys[i] - ybar);
  }
  ExponentEstimate est;
  est.slope = sxy / sxx;
  est.intercept = ybar - est.slope * xbar;
  double rss = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = ys[i] - est.intercept - est.slope * xs[i];
    rss += r * r;
  }
  est.stderr_slope = m > 2 ? std::sqrt(rss / (m - 2) / sxx) : 0.0;
  est.n_range = {n_min, n_max};
  return est;
}

namespace {

void write_csv(const std::vector<ExperimentRecord>& records,
               std::ostream& out) {
  out << "n,kind,replicate,seed,gamma,kappa,wall_time_ms\n";
  for (const ExperimentRecord& r : records) {
    out << r.n << ',' << to_string(r.kind) << ',' << r.replicate << ','
        << r.seed << ',' << r.gamma << ',';
    if (r.kappa) out << *r.kappa;
    out << ',' << r.wall_time_ms << '\n';
  }
}

void write_json(const std::vector<ExperimentRecord>& records,
                std::ostream& out) {
  out << "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const ExperimentRecord& r = records[i];
    out << "  {\"n\": " << r.n << ", \"kind\": \"" << to_string(r.kind)
        << "\", \"replicate\": " << r.replicate << ", \"seed\": " << r.seed
        << ", \"gamma\": " << r.gamma << ", \"kappa\": ";
    if (r.kappa)
      out << *r.kappa;
    else
      out << "null";
    out << ", \"wall_time_ms\": " << r.wall_time_ms << "}"
        << (i + 1 < records.size() ? ",\n" : "\n");
  }
  out << "]\n";
}

}  // namespace

void write_records(const std::vector<ExperimentRecord>& records,
                   std::ostream& out, RecordFormat format) {
  if (format == RecordFormat::Csv)
    write_csv(records, out);
  else
    write_json(records, out);
}

void write_records_file(const std::vector<ExperimentRecord>& records,
                        const std::string& path, RecordFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("write_records_file: cannot open " + path);
  write_records(records, out, format);
  out.flush();
  if (!out)
    throw std::runtime_error("write_records_file: write failed for " + path);
}

}  // namespace mast
