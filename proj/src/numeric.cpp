#include "spectral/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <boost/random/exponential_distribution.hpp>
#include <boost/random/normal_distribution.hpp>

namespace spectral {

bool is_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    }
  }
  return true;
}

CMatrix partial_trace(const CMatrix& m, int d_A, int d_B) {
  if (d_A < 1 || d_B < 1 || m.rows() != d_A * d_B || m.cols() != d_A * d_B) {
    throw std::invalid_argument("partial_trace: matrix is not (d_A d_B) x (d_A d_B)");
  }
  if (!is_hermitian(m)) throw std::invalid_argument("partial_trace: matrix is not Hermitian");
  CMatrix out = CMatrix::Zero(d_A, d_A);
  for (int i = 0; i < d_A; ++i) {
    for (int j = 0; j < d_A; ++j) {
      for (int k = 0; k < d_B; ++k) out(i, j) += m(i * d_B + k, j * d_B + k);
    }
  }
  return out;
}

EigenDecomposition hermitian_eigen(const CMatrix& m) {
  if (!is_hermitian(m)) throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");
  const Eigen::Index n = m.rows();
  CMatrix a = m;
  CMatrix v = CMatrix::Identity(n, n);
  const double scale = m.norm();
  auto off_mass = [&] {
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (i != j) s += std::norm(a(i, j));
      }
    }
    return std::sqrt(s);
  };

  constexpr int max_sweeps = 100;
  int sweep = 0;
  for (; sweep < max_sweeps && off_mass() > 1e-14 * scale; ++sweep) {
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const std::complex<double> apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const std::complex<double> phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G = diag(1, conj(phase)) * [[c, s], [-s, c]] zeroes a(p, q) under G^† a G.
        const std::complex<double> g_pp = c, g_pq = s;
        const std::complex<double> g_qp = -s * std::conj(phase), g_qq = c * std::conj(phase);
        for (Eigen::Index k = 0; k < n; ++k) {
          const auto akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * g_pp + akq * g_qp;
          a(k, q) = akp * g_pq + akq * g_qq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const auto apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
          a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (Eigen::Index k = 0; k < n; ++k) {
          const auto vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * g_pp + vkq * g_qp;
          v(k, q) = vkp * g_pq + vkq * g_qq;
        }
      }
    }
  }
  if (off_mass() > 1e-14 * scale) throw InternalError("hermitian_eigen: Jacobi sweeps did not converge");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() > a(y, y).real(); });
  EigenDecomposition out;
  out.vectors = CMatrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values.push_back(a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]).real());
    out.vectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
  }
  return out;
}

Spectrum hermitian_eigenvalues(const CMatrix& m) { return Spectrum(hermitian_eigen(m).values); }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CMatrix haar_unitary(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("haar_unitary: dimension must be positive");
  boost::random::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  CMatrix z(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(i, j) = {re, im};
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

CMatrix random_state(const Spectrum& lambda, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const CMatrix u = haar_unitary(lambda.size(), rng);
  Eigen::VectorXcd d(lambda.size());
  for (int i = 0; i < lambda.size(); ++i) d(i) = lambda[i];
  CMatrix rho = u * d.asDiagonal() * u.adjoint();
  // Symmetrize away rounding so downstream Hermitian checks see exact symmetry.
  return (0.5 * (rho + rho.adjoint())).eval();
}

Spectrum random_spectrum(int n, SpectrumKind kind, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_spectrum: length must be positive");
  std::vector<double> v(static_cast<std::size_t>(n));
  if (kind == SpectrumKind::gaussian) {
    boost::random::normal_distribution<double> normal(0.0, 1.0);
    for (auto& x : v) x = normal(rng);
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    for (auto& x : v) x = x - mean + 1.0 / n;
  } else {
    boost::random::exponential_distribution<double> expo(1.0);
    for (auto& x : v) x = expo(rng);
    const double total = std::accumulate(v.begin(), v.end(), 0.0);
    for (auto& x : v) x /= total;
  }
  return Spectrum::from_unsorted(std::move(v));
}

namespace {

TrialRecord run_trial(int d_A, int d_B, std::uint64_t seed, int index, const InequalitySystem& S,
                      const TrialOptions& options) {
  TrialRecord rec;
  rec.seed = derive_seed(seed, static_cast<std::uint64_t>(index));
  rec.index = index;
  rec.d_A = d_A;
  rec.d_B = d_B;
  std::mt19937_64 rng(rec.seed);
  rec.lambda = random_spectrum(d_A * d_B, options.kind, rng);
  const CMatrix rho = random_state(rec.lambda, rng());
  rec.lambda_tilde = hermitian_eigenvalues(partial_trace(rho, d_A, d_B));
  for (const auto& q : S.inequalities()) rec.slacks.push_back(inequality_slack(q, rec.lambda, rec.lambda_tilde));
  const CheckReport report = check_spectra(rec.lambda, rec.lambda_tilde, S, options.tol);
  rec.trace_gap = report.trace_gap;
  rec.violations = report.violations;
  return rec;
}

}  // namespace

std::vector<TrialRecord> necessity_trials(int d_A, int d_B, int trials, std::uint64_t seed,
                                          const InequalitySystem& S, const TrialOptions& options) {
  if (S.d_A() != d_A || S.d_B() != d_B) throw std::invalid_argument("necessity_trials: system dimensions differ");
  if (trials < 0) throw std::invalid_argument("necessity_trials: trial count must be nonnegative");
  std::vector<TrialRecord> out(static_cast<std::size_t>(trials));
  int workers = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(1, trials));
  if (workers == 1) {
    for (int i = 0; i < trials; ++i) out[static_cast<std::size_t>(i)] = run_trial(d_A, d_B, seed, i, S, options);
    return out;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < trials; i = next++) {
        try {
          out[static_cast<std::size_t>(i)] = run_trial(d_A, d_B, seed, i, S, options);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

CMatrix dim2_rotated_state(const Spectrum& lambda, double t) {
  if (lambda.size() < 2 || lambda.size() % 2 != 0) {
    throw std::invalid_argument("dim2_rotated_state: spectrum length must be 2 d_B");
  }
  const int d_B = lambda.size() / 2;
  const int n = 2 * d_B;
  CMatrix sigma = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) sigma(i, i) = lambda[i];
  CMatrix shift = CMatrix::Zero(n, n);
  for (int j = 0; j < d_B; ++j) {
    const int prev = (j + d_B - 1) % d_B;
    shift(prev, d_B + j) += 1.0;  // |0, j-1><1, j|
  }
  const CMatrix u = std::cos(t) * CMatrix::Identity(n, n) + std::sin(t) * (shift - shift.adjoint());
  CMatrix rho = u * sigma * u.adjoint();
  return (0.5 * (rho + rho.adjoint())).eval();
}

Dim2Result dim2_realize(const Spectrum& lambda, const Spectrum& lambda_tilde, double tol) {
  Dim2Result out;
  if (lambda.size() < 2 || lambda.size() % 2 != 0 || lambda_tilde.size() != 2) {
    out.reason = "expected spectra of lengths 2 d_B and 2";
    return out;
  }
  const int d_B = lambda.size() / 2;
  for (int i = 0; i < d_B; ++i) {
    out.alpha1 += lambda[i];
    out.alpha2 += lambda[d_B + i];
  }
  const double l1 = lambda_tilde[0];
  const double l2 = lambda_tilde[1];
  if (std::abs(l1 + l2 - out.alpha1 - out.alpha2) > tol) {
    out.reason = "trace mismatch";
    return out;
  }
  if (l1 > out.alpha1 + tol) {
    out.reason = "reduced spectrum is not majorized by the block sums";
    return out;
  }
  if (d_B == 1 && std::abs(l1 - lambda[0]) > tol) {
    // Without an environment the reduced state is the state itself.
    out.reason = "d_B = 1 forces the reduced spectrum to equal the joint spectrum";
    return out;
  }
  const double gap = out.alpha1 - out.alpha2;
  if (gap > tol) {
    const double c2 = std::clamp((l1 - out.alpha2) / gap, 0.0, 1.0);
    out.t = std::acos(std::sqrt(c2));
  }
  out.rho = dim2_rotated_state(lambda, out.t);
  out.feasible = true;
  return out;
}

}  // namespace spectral
