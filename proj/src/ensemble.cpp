#include "nrad/ensemble.hpp"

#include <array>
#include <cmath>
#include <random>
#include <string>

#include "nrad/errors.hpp"

namespace nrad {

namespace {

constexpr std::array kAllEnsembles = {Ensemble::Ginibre, Ensemble::Gue,     Ensemble::Nilpotent,
                                      Ensemble::Normal,  Ensemble::RankOne, Ensemble::Jordan};

Complex complex_gaussian(SplitMix64& rng) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  const double re = gauss(rng);
  const double im = gauss(rng);
  return {re, im};
}

// Haar unitary: QR of a Ginibre draw with the phases of diag(R) moved into Q.
ComplexMatrix haar_unitary(SplitMix64& rng, Eigen::Index dim) {
  const ComplexMatrix g = ginibre_matrix(rng, dim);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

}  // namespace

std::string_view to_string(Ensemble e) {
  switch (e) {
    case Ensemble::Ginibre: return "ginibre";
    case Ensemble::Gue: return "gue";
    case Ensemble::Nilpotent: return "nilpotent";
    case Ensemble::Normal: return "normal";
    case Ensemble::RankOne: return "rank_one";
    case Ensemble::Jordan: return "jordan";
  }
  return "?";
}

Ensemble ensemble_from_name(std::string_view name) {
  for (Ensemble e : kAllEnsembles)
    if (to_string(e) == name) return e;
  throw Error(ErrorCode::InvalidConfig, "no ensemble named '" + std::string(name) + "'");
}

std::span<const Ensemble> all_ensembles() { return kAllEnsembles; }

void EnsembleConfig::validate() const {
  if (dim < 2) throw Error(ErrorCode::InvalidConfig, "dim must be >= 2");
  if (trials < 1) throw Error(ErrorCode::InvalidConfig, "trials must be >= 1");
}

ComplexVector gaussian_vector(SplitMix64& rng, Eigen::Index dim) {
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = complex_gaussian(rng);
  return v;
}

ComplexMatrix ginibre_matrix(SplitMix64& rng, Eigen::Index dim) {
  ComplexMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = complex_gaussian(rng);
  return m;
}

ComplexMatrix generate_matrix(const EnsembleConfig& config, int trial) {
  config.validate();
  if (trial < 0 || trial >= config.trials) throw Error(ErrorCode::InvalidConfig, "trial index out of range");
  SplitMix64 rng(config.seed ^ static_cast<std::uint64_t>(trial));
  const Eigen::Index n = config.dim;

  switch (config.ensemble) {
    case Ensemble::Ginibre:
      return ginibre_matrix(rng, n);
    case Ensemble::Gue: {
      const ComplexMatrix g = ginibre_matrix(rng, n);
      return (g + g.adjoint()) * 0.5;
    }
    case Ensemble::Nilpotent: {
      ComplexMatrix m = ComplexMatrix::Zero(n, n);
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) m(i, j) = complex_gaussian(rng);
      return m;
    }
    case Ensemble::Normal: {
      const ComplexMatrix u = haar_unitary(rng, n);
      const ComplexVector z = gaussian_vector(rng, n);
      return u * z.asDiagonal() * u.adjoint();
    }
    case Ensemble::RankOne: {
      const ComplexVector x = gaussian_vector(rng, n);
      const ComplexVector y = gaussian_vector(rng, n);
      return x * y.adjoint();
    }
    case Ensemble::Jordan:
      return shift_matrix(n);
  }
  throw Error(ErrorCode::InvalidConfig, "unhandled ensemble");
}

std::vector<ComplexMatrix> generate_ensemble(const EnsembleConfig& config) {
  config.validate();
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(config.trials));
  for (int t = 0; t < config.trials; ++t) out.push_back(generate_matrix(config, t));
  return out;
}

}  // namespace nrad
