#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <vector>

#include "covsum/concepts.hpp"
#include "covsum/error.hpp"
#include "covsum/linalg.hpp"

namespace covsum {

struct CompletionConfig {
  double lambda = 1.0;      // trace-norm weight
  double step_size = 1.0;   // rho_k; the smooth part is 1-Lipschitz, so 1 is safe
  int max_iters = 200;
  double tol = 1e-5;        // relative objective change
  bool clamp_output = true; // truncate the final iterate into [0, 1]
};

struct CompletedMatrix {
  Matrix a_hat;
  int iterations_run = 0;
  bool converged = false;
  std::vector<double> objective_trace;  // objective at iterate 0, 1, ...
  std::vector<int> rank_trace;          // numerical rank per iterate
  int rank_estimate = 0;                // singular values > 1e-10 at the final prox
  double nuclear_norm = 0.0;            // of the pre-clamp solution
};

/// Keeps the entries at positions in omega, zeroes everything else.
inline Matrix project_omega(const Matrix& m, const std::vector<std::pair<int, int>>& omega) {
  Matrix out(m.rows(), m.cols());
  for (const auto& [i, j] : omega) {
    if (i < 0 || i >= m.rows() || j < 0 || j >= m.cols())
      throw ValidationError("project_omega: position out of bounds");
    out(i, j) = m(i, j);
  }
  return out;
}

/// Singular value soft-thresholding: U * diag((sigma_i - t)_+) * V^T.
inline Matrix soft_threshold(const Matrix& m, double t) {
  if (t < 0.0) throw ValidationError("soft_threshold: negative threshold");
  SvdResult f = svd(m);
  for (double& s : f.sigma) s = std::max(s - t, 0.0);
  return reconstruct(f);
}

/// Completion objective: 1/2 sum_{(i,j) in omega} (A_ij - Ahat_ij)^2
/// + lambda * ||Ahat||_*.
inline double objective(const CoocMatrix& a, const Matrix& a_hat, double lambda) {
  if (a.n_concepts != a_hat.rows() || a.n_sentences != a_hat.cols())
    throw ValidationError("objective: dimension mismatch");
  double data = 0.0;
  for (const auto& [i, j] : a.omega) {
    const double d = a.at(i, j) - a_hat(i, j);
    data += d * d;
  }
  double nuclear = 0.0;
  if (lambda != 0.0)
    for (double s : svd(a_hat).sigma) nuclear += s;
  return 0.5 * data + lambda * nuclear;
}

/// Proximal gradient descent from Ahat = 0:
///   Ahat <- prox_{lambda*rho}( Ahat + rho * (P_omega(A) - P_omega(Ahat)) )
/// until the relative objective change drops below tol or max_iters is hit.
inline CompletedMatrix complete(const CoocMatrix& a, const CompletionConfig& cfg = {}) {
  if (a.n_concepts <= 0 || a.n_sentences <= 0)
    throw ValidationError("complete: empty matrix");
  if (cfg.lambda < 0.0) throw ValidationError("complete: lambda must be >= 0");
  if (cfg.step_size <= 0.0) throw ValidationError("complete: step_size must be > 0");
  const int n = a.n_concepts;
  const int m = a.n_sentences;

  std::vector<double> observed(a.omega.size());
  for (std::size_t k = 0; k < a.omega.size(); ++k) {
    const auto& [i, j] = a.omega[k];
    if (i < 0 || i >= n || j < 0 || j >= m)
      throw ValidationError("complete: omega position out of bounds");
    observed[k] = a.at(i, j);
  }

  const double shrink = cfg.lambda * cfg.step_size;

  auto data_term = [&](const Matrix& x) {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.omega.size(); ++k) {
      const double d = observed[k] - x(a.omega[k].first, a.omega[k].second);
      sum += d * d;
    }
    return 0.5 * sum;
  };

  CompletedMatrix out;
  Matrix a_hat(n, m);
  out.objective_trace.push_back(data_term(a_hat));  // iterate 0 has no spectrum
  out.rank_trace.push_back(0);

  std::vector<double> final_sigma;
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    Matrix g = a_hat;
    for (std::size_t k = 0; k < a.omega.size(); ++k) {
      const auto& [i, j] = a.omega[k];
      g(i, j) += cfg.step_size * (observed[k] - a_hat(i, j));
    }
    double nuclear = 0.0;
    if (shrink == 0.0) {
      a_hat = std::move(g);
    } else {
      SvdResult f = svd(g);
      for (double& s : f.sigma) s = std::max(s - shrink, 0.0);
      a_hat = reconstruct(f);
      final_sigma = f.sigma;
      for (double s : final_sigma) nuclear += s;
    }
    out.iterations_run = iter + 1;

    const double obj = data_term(a_hat) + cfg.lambda * nuclear;
    if (!std::isfinite(obj))
      throw ValidationError("complete: objective diverged (check lambda/step_size)");
    const double prev = out.objective_trace.back();
    out.objective_trace.push_back(obj);
    int rank = 0;
    for (double s : final_sigma)
      if (s > 1e-10) ++rank;
    out.rank_trace.push_back(rank);

    const double rel = std::abs(obj - prev) / std::max(std::abs(prev), 1e-12);
    if (rel < cfg.tol) {
      out.converged = true;
      break;
    }
  }

  if (shrink == 0.0) {
    final_sigma = svd(a_hat).sigma;
    int rank = 0;
    for (double s : final_sigma)
      if (s > 1e-10) ++rank;
    if (!out.rank_trace.empty()) out.rank_trace.back() = rank;
  }
  out.rank_estimate = 0;
  out.nuclear_norm = 0.0;
  for (double s : final_sigma) {
    if (s > 1e-10) ++out.rank_estimate;
    out.nuclear_norm += s;
  }

  if (cfg.clamp_output)
    for (double& v : a_hat.data()) v = std::min(1.0, std::max(0.0, v));
  out.a_hat = std::move(a_hat);
  return out;
}

/// Per-iteration diagnostics as CSV.
inline void write_completion_trace(const CompletedMatrix& cm, std::ostream& out) {
  out << "iter,objective,rank_estimate\n";
  for (std::size_t k = 0; k < cm.objective_trace.size(); ++k)
    out << k << ',' << cm.objective_trace[k] << ',' << cm.rank_trace[k] << '\n';
}

}  // namespace covsum
