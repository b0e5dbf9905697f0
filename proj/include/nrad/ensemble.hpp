#pragma once

// Seeded random-matrix ensembles. Each trial draws from its own generator
// seeded with seed ⊕ trial, so any trial can be regenerated in isolation and
// the stream does not depend on evaluation order.

#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "nrad/matrix_core.hpp"

namespace nrad {

enum class Ensemble { Ginibre, Gue, Nilpotent, Normal, RankOne, Jordan };

std::string_view to_string(Ensemble e);
/// ginibre, gue, nilpotent, normal, rank_one, jordan. Throws InvalidConfig.
Ensemble ensemble_from_name(std::string_view name);
std::span<const Ensemble> all_ensembles();

struct EnsembleConfig {
  Ensemble ensemble = Ensemble::Ginibre;
  int dim = 4;
  int trials = 1;
  std::uint64_t seed = 0;

  void validate() const;
  bool operator==(const EnsembleConfig&) const = default;
};

/// SplitMix64: a counter-based 64-bit generator usable with <random>.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

ComplexMatrix generate_matrix(const EnsembleConfig& config, int trial);
std::vector<ComplexMatrix> generate_ensemble(const EnsembleConfig& config);

/// Standard complex Gaussian vector: real and imaginary parts N(0, 1/2).
ComplexVector gaussian_vector(SplitMix64& rng, Eigen::Index dim);
ComplexMatrix ginibre_matrix(SplitMix64& rng, Eigen::Index dim);

}  // namespace nrad
