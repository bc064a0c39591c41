// Monte Carlo experiment runner and growth-exponent regression. Each
// replicate gets an independent stream derived from (master_seed, n,
// replicate), so the records are identical for identical configs no matter
// how many workers run them or in what order.
#ifndef MAST_EXPERIMENT_HPP
#define MAST_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mast/binary_tree.hpp"

namespace mast {

enum class RecordFormat { Csv, Json };

struct ExperimentConfig {
  std::vector<long> n_values;  // non-empty, sorted ascending
  RootKind kind = RootKind::Rooted;
  int replicates = 1;
  std::uint64_t master_seed = 0;
  int workers = 1;
  bool compute_kappa = false;  // honored only for n <= 16
  bool validate = false;       // re-check every witness against both trees
};

struct ExperimentRecord {
  long n = 0;
  RootKind kind = RootKind::Rooted;
  int replicate = 0;
  std::uint64_t seed = 0;
  long gamma = 0;
  std::optional<long> kappa;
  long wall_time_ms = 0;
};

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);

struct ExponentEstimate {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
  std::pair<long, long> n_range{0, 0};
};

/// OLS of log(mean gamma per n) against log n. Needs >= 3 distinct sizes,
/// every one of them with mean gamma > 0.
ExponentEstimate estimate_exponent(const std::vector<ExperimentRecord>& records);

/// Fixed column order: n,kind,replicate,seed,gamma,kappa,wall_time_ms.
/// JSON is an array of objects with the same keys (kappa null when absent).
void write_records(const std::vector<ExperimentRecord>& records,
                   std::ostream& out, RecordFormat format);
void write_records_file(const std::vector<ExperimentRecord>& records,
                        const std::string& path, RecordFormat format);

}  // namespace mast

#endif
