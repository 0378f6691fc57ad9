#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spectral/spectral_inequalities.hpp"

namespace spectral {

using CMatrix = Eigen::MatrixXcd;

bool is_hermitian(const CMatrix& m, double tol = 1e-12);

/// (rho_A)_{ij} = sum_k M_{(i,k),(j,k)}, product index (i,k) -> i*d_B + k.
/// Throws std::invalid_argument on a dimension mismatch or non-Hermitian input.
CMatrix partial_trace(const CMatrix& m, int d_A, int d_B);

struct EigenDecomposition {
  /// Non-increasing.
  std::vector<double> values;
  /// Column i is a unit eigenvector for values[i].
  CMatrix vectors;
};

/// Cyclic complex Jacobi. Sweeps until the off-diagonal Frobenius mass drops
/// below 1e-14 ||M||_F. Throws std::invalid_argument on non-Hermitian input.
EigenDecomposition hermitian_eigen(const CMatrix& m);

Spectrum hermitian_eigenvalues(const CMatrix& m);

/// splitmix64 finalizer applied to seed + (index + 1) * golden ratio: an
/// independent 64-bit seed per trial.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases of
/// R's diagonal moved into Q.
CMatrix haar_unitary(int n, std::mt19937_64& rng);

/// U diag(lambda) U^dagger with U Haar, deterministic in seed.
CMatrix random_state(const Spectrum& lambda, std::uint64_t seed);

enum class SpectrumKind {
  /// Sorted standard Gaussians shifted to unit trace (general Hermitian).
  gaussian,
  /// Uniform on the probability simplex (density matrices).
  density,
};

/// Random spectrum of length n with unit trace.
Spectrum random_spectrum(int n, SpectrumKind kind, std::mt19937_64& rng);

struct TrialRecord {
  std::uint64_t seed = 0;
  int index = 0;
  int d_A = 0;
  int d_B = 0;
  Spectrum lambda;
  Spectrum lambda_tilde;
  /// One per member of the system, in system order.
  std::vector<double> slacks;
  double trace_gap = 0.0;
  std::vector<Violation> violations;
};

struct TrialOptions {
  SpectrumKind kind = SpectrumKind::gaussian;
  double tol = 1e-9;
  /// 0 picks hardware concurrency.
  int threads = 1;
};

/// Runs `trials` independent trials; record i depends only on (seed, i). The
/// returned records are in index order whatever the thread count.
std::vector<TrialRecord> necessity_trials(int d_A, int d_B, int trials, std::uint64_t seed,
                                          const InequalitySystem& S, const TrialOptions& options = {});

/// U(t) sigma U(t)^dagger for sigma = diag(lambda) on C^2 (x) C^{d_B}, where
/// U(t) = cos t I + sin t (S - S^dagger), S = sum_j |0, j-1><1, j| (indices mod d_B).
CMatrix dim2_rotated_state(const Spectrum& lambda, double t);

struct Dim2Result {
  bool feasible = false;
  std::string reason;
  double t = 0.0;
  /// Block sums alpha_1 >= alpha_2.
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  CMatrix rho;
};

/// A state on C^2 (x) C^{d_B} with spectrum lambda whose partial trace has
/// spectrum lambda_tilde, or an infeasible result (never an exception) when
/// lambda_tilde is not majorized by the block sums or the traces differ.
Dim2Result dim2_realize(const Spectrum& lambda, const Spectrum& lambda_tilde, double tol = 1e-12);

}  // namespace spectral
