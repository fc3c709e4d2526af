#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "covsum/error.hpp"

namespace covsum {

// Dense row-major matrix of doubles. Sized for the dense SVD work here,
// not for general numerics.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

inline Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

inline double frobenius_norm(const Matrix& m) {
  double sum = 0.0;
  for (double v : m.data()) sum += v * v;
  return std::sqrt(sum);
}

inline Matrix subtract(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] -= b.data()[i];
  return out;
}

struct SvdResult {
  Matrix u;                   // rows x k, orthonormal columns (zero where sigma is 0)
  std::vector<double> sigma;  // k = min(rows, cols), nonincreasing
  Matrix v;                   // cols x k
};

namespace detail {

// Orthogonalizes the columns of w in place by cyclic Jacobi rotations,
// accumulating the rotations in v. On return w = U * diag(sigma).
inline void one_sided_jacobi(Matrix& w, Matrix& v, double tol) {
  const int n = w.rows();
  const int p = w.cols();
  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (int q = 1; q < p; ++q) {
      for (int pc = 0; pc < q; ++pc) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (int i = 0; i < n; ++i) {
          const double wp = w(i, pc), wq = w(i, q);
          alpha += wp * wp;
          beta += wq * wq;
          gamma += wp * wq;
        }
        if (alpha == 0.0 || beta == 0.0) continue;
        if (std::abs(gamma) <= tol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int i = 0; i < n; ++i) {
          const double wp = w(i, pc), wq = w(i, q);
          w(i, pc) = c * wp - s * wq;
          w(i, q) = s * wp + c * wq;
        }
        for (int i = 0; i < p; ++i) {
          const double vp = v(i, pc), vq = v(i, q);
          v(i, pc) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }
}

}  // namespace detail

/// Thin SVD via one-sided Jacobi applied on the smaller dimension.
/// Singular values are sorted descending; the sign convention makes the
/// first nonzero component of each left singular vector nonnegative, so
/// the factorization is deterministic.
inline SvdResult svd(const Matrix& m) {
  for (double x : m.data())
    if (!std::isfinite(x)) throw ValidationError("svd: non-finite entry in input");

  const bool transposed = m.rows() < m.cols();
  Matrix w = transposed ? transpose(m) : m;
  const int p = w.cols();
  Matrix rot = Matrix::identity(p);
  detail::one_sided_jacobi(w, rot, 1e-12);

  std::vector<double> norms(p, 0.0);
  for (int j = 0; j < p; ++j) {
    double sum = 0.0;
    for (int i = 0; i < w.rows(); ++i) sum += w(i, j) * w(i, j);
    norms[j] = std::sqrt(sum);
  }
  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return norms[a] > norms[b]; });

  Matrix u_side(w.rows(), p);   // normalized columns of w
  Matrix v_side(p, p);          // accumulated rotations
  std::vector<double> sigma(p);
  for (int k = 0; k < p; ++k) {
    const int j = order[k];
    sigma[k] = norms[j];
    if (norms[j] > 0.0)
      for (int i = 0; i < w.rows(); ++i) u_side(i, k) = w(i, j) / norms[j];
    for (int i = 0; i < p; ++i) v_side(i, k) = rot(i, j);
  }

  SvdResult result;
  if (transposed) {
    result.u = std::move(v_side);
    result.v = std::move(u_side);
  } else {
    result.u = std::move(u_side);
    result.v = std::move(v_side);
  }
  result.sigma = std::move(sigma);

  // Sign fix on the left factor.
  for (int k = 0; k < static_cast<int>(result.sigma.size()); ++k) {
    double lead = 0.0;
    for (int i = 0; i < result.u.rows(); ++i) {
      if (result.u(i, k) != 0.0) {
        lead = result.u(i, k);
        break;
      }
    }
    if (lead < 0.0) {
      for (int i = 0; i < result.u.rows(); ++i) result.u(i, k) = -result.u(i, k);
      for (int i = 0; i < result.v.rows(); ++i) result.v(i, k) = -result.v(i, k);
    }
  }
  return result;
}

/// U * diag(sigma) * V^T.
inline Matrix reconstruct(const SvdResult& f) {
  Matrix out(f.u.rows(), f.v.rows());
  for (std::size_t k = 0; k < f.sigma.size(); ++k) {
    if (f.sigma[k] == 0.0) continue;
    for (int i = 0; i < out.rows(); ++i) {
      const double scaled = f.u(i, static_cast<int>(k)) * f.sigma[k];
      if (scaled == 0.0) continue;
      for (int j = 0; j < out.cols(); ++j) out(i, j) += scaled * f.v(j, static_cast<int>(k));
    }
  }
  return out;
}

}  // namespace covsum
