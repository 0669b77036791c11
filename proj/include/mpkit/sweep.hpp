#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mpkit {

// Monte Carlo sweep over (p, rho) cells at fixed n. Every (cell,
// replication) pair draws from its own derived stream, so results do not
// depend on execution order or parallelism; rows come out sorted by
// (c, rho, t).
struct SweepSpec {
  int n = 500;
  std::vector<int> p_values;
  std::vector<double> rho_values;
  std::optional<double> t;  // CPV threshold, required by run_cpv_sweep
  int replications = 1;
  uint64_t seed = 0;
};

struct GkSweepRow {
  double c = 0;
  double rho = 0;
  int p = 0;
  int n = 0;
  int replications = 0;
  double gk_mean = 0;
  double gk_limit = 0;
  double normalized_retention = 0;  // p * gk_mean / min(n, p)
  std::string error;                // empty on success; cells never vanish
};

struct CpvSweepRow {
  double c = 0;
  double rho = 0;
  double t = 0;
  int p = 0;
  int n = 0;
  int replications = 0;
  double cpv_mean = 0;
  double cpv_limit = 0;
  std::string error;
};

// Guttman-Kaiser fractions of sample-correlation spectra per cell, averaged
// over replications, next to the law limit gk_limit(p/n, rho).
std::vector<GkSweepRow> run_gk_sweep(const SweepSpec& spec);

// CPV fractions of centered-covariance spectra at threshold t, next to
// cpv_limit(p/n, rho, t) (0 whenever t < rho).
std::vector<CpvSweepRow> run_cpv_sweep(const SweepSpec& spec);

}  // namespace mpkit
