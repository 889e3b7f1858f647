#ifndef SWIPT_TESTS_HELPERS_HPP
#define SWIPT_TESTS_HELPERS_HPP

#include <random>

#include "swipt/experiments.hpp"
#include "swipt/model.hpp"

namespace swipt::testing {

inline CMat random_complex(int rows, int cols, std::mt19937_64& rng,
                           double scale = 1.0) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      m(r, c) = scale * Complex(g(rng), g(rng));
    }
  }
  return m;
}

inline HermitianMatrix random_hermitian(int n, std::mt19937_64& rng,
                                        double scale = 1.0) {
  const CMat a = random_complex(n, n, rng, scale);
  return HermitianMatrix(0.5 * (a + CMat(a.adjoint())));
}

inline HermitianMatrix random_psd(int n, std::mt19937_64& rng,
                                  double scale = 1.0) {
  const CMat a = random_complex(n, n, rng, scale);
  return HermitianMatrix(a * a.adjoint() / n);
}

// Default study corpus instance: M=4, K_I=2, K_E=2, survey parameters.
inline Scenario corpus_scenario(int trial, double gamma_db = 10.0,
                                int k_i = 2, int m = 4, int k_e = 2,
                                std::uint64_t seed = 7) {
  ExperimentConfig cfg;
  cfg.M = m;
  cfg.K_I = k_i;
  cfg.K_E = k_e;
  cfg.trials = trial + 1;
  cfg.seed = seed;
  cfg.gamma_grid_db = {gamma_db};
  Scenario s = gen_scenario(cfg, trial);
  return s;
}

}  // namespace swipt::testing

#endif  // SWIPT_TESTS_HELPERS_HPP
