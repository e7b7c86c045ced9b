/**
 * @file matcore.hpp
 * @brief Complex dense matrix utilities shared by the rank and rate chains.
 */
#ifndef OFIC_MATCORE_HPP
#define OFIC_MATCORE_HPP

#include <armadillo>
#include <cstddef>
#include <vector>

#include "ofic/rng.hpp"

namespace ofic {

using cx = std::complex<double>;
using cx_mat = arma::cx_mat;
using cx_vec = arma::cx_vec;

/// Default relative singular-value threshold for numeric_rank.
inline constexpr double kRankTol = 1e-9;

/**
 * i.i.d. circularly symmetric complex Gaussian matrix with per-entry
 * variance `variance` (real and imaginary parts each carry half).
 */
cx_mat sample_gaussian(std::size_t rows, std::size_t cols, double variance, SplitRng& rng);

/// bd{X1, ..., Xk}: block-diagonal assembly, off-block entries exactly zero.
cx_mat block_diagonal(const std::vector<cx_mat>& blocks);

/**
 * Count of singular values above tol * (largest singular value).
 * The zero matrix has rank 0.
 */
std::size_t numeric_rank(const cx_mat& m, double tol = kRankTol);

/// log2 det(I + snr * h * h^H) in bits; 0 when snr == 0.
double logdet_capacity(const cx_mat& h, double snr);

}  // namespace ofic

#endif  // OFIC_MATCORE_HPP
