#include "mpkit/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <thread>

#include "mpkit/enp.hpp"
#include "mpkit/matrix_stats.hpp"
#include "mpkit/mp_law.hpp"
#include "mpkit/rng.hpp"
#include "mpkit/spectrum.hpp"

namespace mpkit {
namespace {

struct Cell {
  int p;
  double rho;
};

void validate(const SweepSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("sweep: n must be at least 2");
  if (spec.p_values.empty() || spec.rho_values.empty())
    throw std::invalid_argument("sweep: p and rho lists must be nonempty");
  if (spec.replications < 1) throw std::invalid_argument("sweep: replications must be at least 1");
  for (int p : spec.p_values)
    if (p < 1) throw std::invalid_argument("sweep: p values must be positive");
  for (double r : spec.rho_values)
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("sweep: rho values must lie in [0, 1)");
}

// Canonical cell order: by c (= p/n), then rho. Stream derivation keys off
// this index, so identical specs map to identical draws.
std::vector<Cell> canonical_cells(const SweepSpec& spec) {
  std::vector<Cell> cells;
  for (int p : spec.p_values)
    for (double rho : spec.rho_values) cells.push_back({p, rho});
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.rho < b.rho;
  });
  cells.erase(std::unique(cells.begin(), cells.end(),
                          [](const Cell& a, const Cell& b) { return a.p == b.p && a.rho == b.rho; }),
              cells.end());
  return cells;
}

// Deterministic parallel map over cells: results land by index, worker
// count never influences values.
template <typename Row, typename Fn>
std::vector<Row> map_cells(const std::vector<Cell>& cells, const Fn& fn) {
  std::vector<Row> rows(cells.size());
  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(cells.size()));
  if (workers <= 1) {
    for (size_t i = 0; i < cells.size(); ++i) rows[i] = fn(cells[i], i);
    return rows;
  }
  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  std::atomic<size_t> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&] {
      for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
        rows[i] = fn(cells[i], i);
    }));
  }
  for (auto& f : futures) f.get();
  return rows;
}

}  // namespace

std::vector<GkSweepRow> run_gk_sweep(const SweepSpec& spec) {
  validate(spec);
  const auto cells = canonical_cells(spec);
  return map_cells<GkSweepRow>(cells, [&](const Cell& cell, size_t index) {
    GkSweepRow row;
    row.p = cell.p;
    row.n = spec.n;
    row.rho = cell.rho;
    row.c = static_cast<double>(cell.p) / spec.n;
    row.replications = spec.replications;
    try {
      double sum = 0.0;
      for (int rep = 0; rep < spec.replications; ++rep) {
        EnpParams params;
        params.p = cell.p;
        params.n = spec.n;
        params.rho = cell.rho;
        params.seed = derive_stream(spec.seed, index, static_cast<uint64_t>(rep));
        const Spectrum spectrum = symmetric_eigenvalues(sample_correlation(sample_enp(params)));
        sum += gk_fraction(spectrum);
      }
      row.gk_mean = sum / spec.replications;
      row.gk_limit = gk_limit(row.c, cell.rho);
      row.normalized_retention = cell.p * row.gk_mean / std::min(spec.n, cell.p);
    } catch (const std::exception& e) {
      row.error = std::string("cell(p=") + std::to_string(cell.p) +
                  ",rho=" + std::to_string(cell.rho) + "): " + e.what();
    }
    return row;
  });
}

std::vector<CpvSweepRow> run_cpv_sweep(const SweepSpec& spec) {
  validate(spec);
  if (!spec.t) throw std::invalid_argument("run_cpv_sweep: spec.t is required");
  const double t = *spec.t;
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("run_cpv_sweep: t must lie in (0, 1)");
  const auto cells = canonical_cells(spec);
  return map_cells<CpvSweepRow>(cells, [&](const Cell& cell, size_t index) {
    CpvSweepRow row;
    row.p = cell.p;
    row.n = spec.n;
    row.rho = cell.rho;
    row.t = t;
    row.c = static_cast<double>(cell.p) / spec.n;
    row.replications = spec.replications;
    try {
      double sum = 0.0;
      for (int rep = 0; rep < spec.replications; ++rep) {
        EnpParams params;
        params.p = cell.p;
        params.n = spec.n;
        params.rho = cell.rho;
        params.seed = derive_stream(spec.seed, index, static_cast<uint64_t>(rep));
        const Spectrum spectrum = symmetric_eigenvalues(centered_covariance(sample_enp(params)));
        sum += cpv_fraction(spectrum, t);
      }
      row.cpv_mean = sum / spec.replications;
      row.cpv_limit = cpv_limit(row.c, cell.rho, t);  // 0 whenever t < rho
    } catch (const std::exception& e) {
      row.error = std::string("cell(p=") + std::to_string(cell.p) +
                  ",rho=" + std::to_string(cell.rho) + "): " + e.what();
    }
    return row;
  });
}

}  // namespace mpkit
