#include "ofic/matcore.hpp"

#include <cmath>
#include <stdexcept>

namespace ofic {

cx_mat sample_gaussian(std::size_t rows, std::size_t cols, double variance, SplitRng& rng) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("sample_gaussian: rows and cols must be >= 1");
  }
  if (variance <= 0.0) {
    throw std::invalid_argument("sample_gaussian: variance must be positive");
  }
  cx_mat m(rows, cols);
  // Column-major fill so the draw order matches the storage order.
  for (arma::uword c = 0; c < cols; ++c) {
    for (arma::uword r = 0; r < rows; ++r) {
      m(r, c) = rng.cgaussian(variance);
    }
  }
  return m;
}

cx_mat block_diagonal(const std::vector<cx_mat>& blocks) {
  if (blocks.empty()) {
    throw std::invalid_argument("block_diagonal: empty block list");
  }
  arma::uword rows = 0;
  arma::uword cols = 0;
  for (const auto& b : blocks) {
    rows += b.n_rows;
    cols += b.n_cols;
  }
  cx_mat out(rows, cols, arma::fill::zeros);
  arma::uword r0 = 0;
  arma::uword c0 = 0;
  for (const auto& b : blocks) {
    if (b.n_rows > 0 && b.n_cols > 0) {
      out.submat(r0, c0, r0 + b.n_rows - 1, c0 + b.n_cols - 1) = b;
    }
    r0 += b.n_rows;
    c0 += b.n_cols;
  }
  return out;
}

std::size_t numeric_rank(const cx_mat& m, double tol) {
  if (tol <= 0.0 || tol >= 1.0) {
    throw std::invalid_argument("numeric_rank: tol must lie in (0, 1)");
  }
  if (m.n_rows == 0 || m.n_cols == 0) return 0;
  arma::vec sv;
  if (!arma::svd(sv, m)) {
    throw std::runtime_error("numeric_rank: SVD failed to converge");
  }
  if (sv.is_empty() || sv(0) <= 0.0) return 0;
  const double cutoff = tol * sv(0);
  return static_cast<std::size_t>(arma::sum(sv > cutoff));
}

double logdet_capacity(const cx_mat& h, double snr) {
  if (snr < 0.0) {
    throw std::invalid_argument("logdet_capacity: snr must be nonnegative");
  }
  if (snr == 0.0 || h.n_rows == 0 || h.n_cols == 0) return 0.0;
  arma::vec sv;
  if (!arma::svd(sv, h)) {
    throw std::runtime_error("logdet_capacity: SVD failed to converge");
  }
  // det(I + snr h h^H) = prod_i (1 + snr sigma_i^2)
  double bits = 0.0;
  for (const double s : sv) {
    bits += std::log2(1.0 + snr * s * s);
  }
  return bits;
}

}  // namespace ofic
