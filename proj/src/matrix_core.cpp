#include "nrad/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "nrad/errors.hpp"

namespace nrad {

namespace {

// Relative threshold below which a negative eigenvalue counts as roundoff.
constexpr double kClampThreshold = 1e-8;

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

// H(θ) = cosθ·re − sinθ·im, where re and im are the Hermitian parts of M.
class AngleSweep {
 public:
  explicit AngleSweep(const ComplexMatrix& m)
      : re_((m + m.adjoint()) * 0.5),
        im_((m - m.adjoint()) * Complex(0.0, -0.5)),
        work_(m.rows(), m.cols()),
        solver_(m.rows()) {}

  // Smallest and largest eigenvalue of H(θ).
  std::pair<double, double> extremes(double theta) {
    work_.noalias() = std::cos(theta) * re_;
    work_.noalias() -= std::sin(theta) * im_;
    solver_.compute(work_, Eigen::EigenvaluesOnly);
    if (solver_.info() != Eigen::Success)
      throw Error(ErrorCode::NoConvergence, "eigenvalue iteration cap exceeded in angle sweep");
    const auto& ev = solver_.eigenvalues();
    return {ev(0), ev(ev.size() - 1)};
  }

  double top(double theta) { return extremes(theta).second; }

  // Lipschitz constant of θ ↦ λ_max(H(θ)).
  double slope_bound() const { return re_.norm() + im_.norm(); }

 private:
  ComplexMatrix re_;
  ComplexMatrix im_;
  ComplexMatrix work_;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver_;
};

template <typename F>
double golden_section_max(F&& fn, double lo, double hi, double tol, double best) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = fn(c);
  double fd = fn(d);
  best = std::max({best, fc, fd});
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = fn(c);
      best = std::max(best, fc);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = fn(d);
      best = std::max(best, fd);
    }
  }
  return best;
}

// Grid indices worth refining: one per run of near-equal samples that is not
// lower than the samples bordering it.
std::vector<int> local_maxima(const std::vector<double>& f, double eps) {
  const int n = static_cast<int>(f.size());
  auto at = [&](int k) { return f[static_cast<std::size_t>((k % n + n) % n)]; };
  auto flat = [&](int k) { return std::abs(at(k + 1) - at(k)) <= eps; };  // edge k → k+1

  int start = -1;
  for (int k = 0; k < n; ++k) {
    if (!flat(k - 1)) {
      start = k;
      break;
    }
  }
  if (start < 0) {
    return {static_cast<int>(std::max_element(f.begin(), f.end()) - f.begin())};
  }

  std::vector<int> out;
  int k = start;
  while (k < start + n) {
    int end = k;
    int best = k;
    while (end + 1 < start + n && flat(end)) {
      ++end;
      if (at(end) > at(best)) best = end;
    }
    if (at(best) >= at(k - 1) && at(best) >= at(end + 1)) out.push_back(((best % n) + n) % n);
    k = end + 1;
  }
  return out;
}

}  // namespace

void check_square(const ComplexMatrix& m) {
  if (m.rows() < 1 || m.rows() != m.cols())
    throw Error(ErrorCode::InvalidArgument,
                "matrix must be square with dim >= 1 (got " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ")");
  if (!all_finite(m)) throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
}

void check_vector(const ComplexVector& v) {
  if (v.size() < 1) throw Error(ErrorCode::InvalidArgument, "vector must have dim >= 1");
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag()))
      throw Error(ErrorCode::InvalidArgument, "vector has non-finite entries");
}

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix dimensions differ");
}

void check_unit(const ComplexVector& v, double tol) {
  check_vector(v);
  if (std::abs(v.norm() - 1.0) > tol)
    throw Error(ErrorCode::NotUnitVector, "expected a unit vector, norm = " + std::to_string(v.norm()));
}

Complex inner(const ComplexVector& x, const ComplexVector& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "vector dimensions differ");
  return y.dot(x);  // Eigen conjugates the left operand
}

ComplexMatrix identity(Eigen::Index dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix shift_matrix(Eigen::Index dim) {
  ComplexMatrix j = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i + 1 < dim; ++i) j(i, i + 1) = 1.0;
  return j;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  check_square(m);
  return m.adjoint();
}

double hermitian_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).norm() / std::max(1.0, m.norm());
}

EigenDecomposition hermitian_eigen(const ComplexMatrix& m) {
  check_square(m);
  if (hermitian_defect(m) > 1e-12)
    throw Error(ErrorCode::NotHermitian,
                "relative Hermitian defect " + std::to_string(hermitian_defect(m)) + " exceeds 1e-12");
  const ComplexMatrix sym = (m + m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::NoConvergence, "Hermitian eigensolver exceeded its iteration cap");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix matrix_power_psd(const ComplexMatrix& a, double p) {
  check_square(a);
  if (!(p >= 0.0) || !std::isfinite(p))
    throw Error(ErrorCode::InvalidArgument, "exponent must be finite and >= 0");
  if (hermitian_defect(a) > 1e-10)
    throw Error(ErrorCode::NotPSD, "matrix is not Hermitian within 1e-10");
  const ComplexMatrix sym = (a + a.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::NoConvergence, "Hermitian eigensolver exceeded its iteration cap");

  RealVector ev = solver.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -kClampThreshold * scale)
      throw Error(ErrorCode::NotPSD, "eigenvalue " + std::to_string(ev(i)) + " is genuinely negative");
    ev(i) = std::pow(std::max(ev(i), 0.0), p);
  }
  const ComplexMatrix& v = solver.eigenvectors();
  return v * ev.cast<Complex>().asDiagonal() * v.adjoint();
}

ComplexMatrix abs_value(const ComplexMatrix& m) {
  check_square(m);
  return AbsoluteSpectrum(m).abs_power(1.0);
}

double operator_norm(const ComplexMatrix& m) {
  check_square(m);
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double numerical_radius(const ComplexMatrix& m, double tol) {
  check_square(m);
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (m.rows() == 1) return std::abs(m(0, 0));

  AngleSweep sweep(m);
  constexpr int half = kRadiusGridSize / 2;
  const double step = 2.0 * std::numbers::pi / kRadiusGridSize;

  // λ_max(H(θ + π)) = −λ_min(H(θ)), so half a turn of solves covers the circle.
  std::vector<double> grid(kRadiusGridSize);
  for (int k = 0; k < half; ++k) {
    const auto [lo, hi] = sweep.extremes(k * step);
    grid[static_cast<std::size_t>(k)] = hi;
    grid[static_cast<std::size_t>(k + half)] = -lo;
  }

  double best = *std::max_element(grid.begin(), grid.end());
  const double scale = std::max(1.0, std::abs(best));
  std::vector<int> candidates = local_maxima(grid, 1e-13 * scale);
  std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    return grid[static_cast<std::size_t>(a)] > grid[static_cast<std::size_t>(b)];
  });

  const double slope = sweep.slope_bound();
  for (int k : candidates) {
    const double fk = grid[static_cast<std::size_t>(k)];
    if (fk + slope * step <= best) continue;  // cannot beat the current best inside its bracket
    const double centre = k * step;
    best = golden_section_max([&](double t) { return sweep.top(t); }, centre - step, centre + step, tol,
                              best);
  }
  return std::max(best, 0.0);
}

double numerical_radius_oracle(const ComplexMatrix& m, int samples, std::uint64_t seed) {
  check_square(m);
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be >= 1");

  const Eigen::Index n = m.rows();
  const ComplexMatrix mh = m.adjoint();
  const double fro = m.norm();
  if (fro == 0.0) return 0.0;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  auto value = [&](const ComplexVector& x) { return std::abs(x.dot(m * x)); };

  double best = 0.0;
  ComplexVector x(n);
  for (int s = 0; s < samples; ++s) {
    for (Eigen::Index i = 0; i < n; ++i) x(i) = Complex(gauss(rng), gauss(rng));
    x.normalize();

    double current = value(x);
    double eta = 1.0 / (fro * fro);
    for (int it = 0; it < 100; ++it) {
      const ComplexVector mx = m * x;
      const Complex q = x.dot(mx);
      // ∂|q|²/∂x̄, projected onto the tangent space of the sphere at x.
      ComplexVector g = std::conj(q) * mx + q * (mh * x);
      g -= x.dot(g) * x;
      if (g.norm() <= 1e-15 * fro * fro) break;

      bool improved = false;
      for (int tries = 0; tries < 30; ++tries) {
        ComplexVector trial = (x + eta * g).normalized();
        const double v = value(trial);
        if (v > current) {
          x = trial;
          current = v;
          eta *= 1.5;
          improved = true;
          break;
        }
        eta *= 0.5;
      }
      if (!improved) break;
    }
    best = std::max(best, current);
  }
  return best;
}

AbsoluteSpectrum::AbsoluteSpectrum(const ComplexMatrix& t) {
  check_square(t);
  Eigen::JacobiSVD<ComplexMatrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  sigma_ = svd.singularValues();
  u_ = svd.matrixU();
  v_ = svd.matrixV();
}

ComplexMatrix AbsoluteSpectrum::apply(const ComplexMatrix& basis, const RealVector& sigma, double p) {
  RealVector powered(sigma.size());
  for (Eigen::Index i = 0; i < sigma.size(); ++i) powered(i) = std::pow(sigma(i), p);
  ComplexMatrix out = basis * powered.cast<Complex>().asDiagonal() * basis.adjoint();
  return (out + out.adjoint()) * 0.5;
}

ComplexMatrix AbsoluteSpectrum::abs_power(double p) const { return apply(v_, sigma_, p); }

ComplexMatrix AbsoluteSpectrum::adjoint_abs_power(double p) const { return apply(u_, sigma_, p); }

}  // namespace nrad
