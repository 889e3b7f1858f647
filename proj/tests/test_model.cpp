#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "swipt/model.hpp"

using namespace swipt;
using swipt::testing::corpus_scenario;
using swipt::testing::random_complex;

namespace {

Scenario tiny_scenario() {
  Scenario s;
  s.M = 2;
  s.K_I = 1;
  s.K_E = 1;
  s.H = CMat(1, 2);
  s.H << Complex(1, 0), Complex(0, 0);
  s.Gch = CMat(1, 2);
  s.Gch << Complex(1, 0), Complex(0, 0);
  s.sigma2 = RVec::Constant(1, 1e-2);
  s.gamma = RVec::Constant(1, 1.0);
  s.alpha = RVec::Constant(1, 1.0);
  s.zeta = 0.5;
  s.P = 1.0;
  return s;
}

BeamSolution random_solution(const Scenario& s, std::mt19937_64& rng,
                             ReceiverType type) {
  BeamSolution sol;
  sol.receiver_type = type;
  for (int i = 0; i < s.K_I; ++i) {
    sol.info_beams.push_back(random_complex(s.M, 1, rng, 0.3));
  }
  sol.energy_beams.push_back(random_complex(s.M, 1, rng, 0.3));
  return sol;
}

}  // namespace

TEST_CASE("scenario validation") {
  Scenario s = tiny_scenario();
  CHECK_NOTHROW(s.validate());
  s.P = 0.0;
  CHECK_THROWS_AS(s.validate(), Error);
  s = tiny_scenario();
  s.gamma[0] = -1.0;
  CHECK_THROWS_AS(s.validate(), Error);
  s = tiny_scenario();
  s.H = CMat(1, 3);
  CHECK_THROWS_AS(s.validate(), Error);
  s = tiny_scenario();
  s.zeta = 1.5;
  CHECK_THROWS_AS(s.validate(), Error);
}

TEST_CASE("energy_matrix rank-one case") {
  const Scenario s = tiny_scenario();
  const EnergyProfile e = energy_matrix(s);
  CHECK(e.xi_E == doctest::Approx(0.5));
  CHECK(std::abs(e.G.mat()(0, 0) - Complex(0.5, 0)) <= 1e-15);
  CHECK(std::abs(e.v_E[0]) == doctest::Approx(1.0));
}

TEST_CASE("energy_matrix trace identity and PSD on random scenarios") {
  for (int t = 0; t < 10; ++t) {
    const Scenario s = corpus_scenario(t);
    const EnergyProfile e = energy_matrix(s);
    CHECK(is_psd(e.G, 1e-12 * std::max(1.0, e.G.frobenius_norm())));
    double tr = 0.0;
    for (int j = 0; j < s.K_E; ++j) {
      tr += s.zeta * s.alpha[j] * s.Gch.row(j).squaredNorm();
    }
    CHECK(std::real(e.G.mat().trace()) == doctest::Approx(tr).epsilon(1e-10));
    // Survey default: uniform energy weights.
    CHECK(s.alpha[0] == doctest::Approx(1.0 / s.K_E));
  }
}

TEST_CASE("sinr interference-free closed form") {
  const Scenario s = tiny_scenario();
  BeamSolution sol;
  sol.receiver_type = ReceiverType::kTypeI;
  CVec w = CVec::Zero(2);
  w[0] = 0.4;
  sol.info_beams.push_back(w);
  CHECK(sinr(sol, s, 0) == doctest::Approx(0.16 / 1e-2));
  CHECK_THROWS_AS(sinr(sol, s, 1), Error);
}

TEST_CASE("type II SINR ignores energy beams, type I counts them") {
  std::mt19937_64 rng(21);
  const Scenario s = corpus_scenario(0);
  BeamSolution sol = random_solution(s, rng, ReceiverType::kTypeII);
  BeamSolution no_energy = sol;
  no_energy.energy_beams.clear();
  for (int i = 0; i < s.K_I; ++i) {
    CHECK(sinr(sol, s, i) == sinr(no_energy, s, i));
  }
  sol.receiver_type = ReceiverType::kTypeI;
  no_energy.receiver_type = ReceiverType::kTypeI;
  for (int i = 0; i < s.K_I; ++i) {
    CHECK(sinr(sol, s, i) < sinr(no_energy, s, i));
  }
}

TEST_CASE("type I with null-space energy beam equals type II value") {
  std::mt19937_64 rng(22);
  const Scenario s = corpus_scenario(1);
  BeamSolution sol;
  sol.receiver_type = ReceiverType::kTypeI;
  for (int i = 0; i < s.K_I; ++i) {
    sol.info_beams.push_back(random_complex(s.M, 1, rng, 0.3));
  }
  const CMat basis = null_space_basis(s.H);
  sol.energy_beams.push_back(0.7 * basis.col(0));
  BeamSolution type2 = sol;
  type2.receiver_type = ReceiverType::kTypeII;
  for (int i = 0; i < s.K_I; ++i) {
    CHECK(sinr(sol, s, i) == doctest::Approx(sinr(type2, s, i)).epsilon(1e-9));
  }
}

TEST_CASE("harvested_power aligned and zero cases") {
  Scenario s = tiny_scenario();
  s.zeta = 1.0;
  BeamSolution sol;
  sol.receiver_type = ReceiverType::kTypeII;
  sol.info_beams.push_back(0.6 * s.Gch.row(0).adjoint() /
                           s.Gch.row(0).norm());
  CHECK(harvested_power(sol, s, 0) ==
        doctest::Approx(s.Gch.row(0).squaredNorm() * 0.36));

  BeamSolution empty;
  empty.info_beams.assign(1, CVec::Zero(2));
  CHECK(harvested_power(empty, s, 0) == doctest::Approx(0.0));
}

TEST_CASE("harvested_power matches term-by-term oracle") {
  std::mt19937_64 rng(23);
  const Scenario s = corpus_scenario(2);
  const BeamSolution sol = random_solution(s, rng, ReceiverType::kTypeI);
  for (int j = 0; j < s.K_E; ++j) {
    double expect = 0.0;
    for (const CVec& w : sol.info_beams) {
      expect += std::norm((s.Gch.row(j) * w)(0));
    }
    for (const CVec& v : sol.energy_beams) {
      expect += std::norm((s.Gch.row(j) * v)(0));
    }
    expect *= s.zeta;
    CHECK(harvested_power(sol, s, j) ==
          doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("objective_value forms agree") {
  std::mt19937_64 rng(24);
  const Scenario s = corpus_scenario(3);
  const BeamSolution zero{std::vector<CVec>(s.K_I, CVec::Zero(s.M)), {},
                          ReceiverType::kTypeI};
  CHECK(objective_value(zero, s) == doctest::Approx(0.0));

  const EnergyProfile e = energy_matrix(s);
  BeamSolution oebf;
  oebf.receiver_type = ReceiverType::kTypeII;
  oebf.info_beams.assign(s.K_I, CVec::Zero(s.M));
  oebf.energy_beams.push_back(std::sqrt(s.P) * e.v_E);
  CHECK(objective_value(oebf, s) ==
        doctest::Approx(e.xi_E * s.P).epsilon(1e-10));

  const BeamSolution sol = random_solution(s, rng, ReceiverType::kTypeI);
  double qsum = 0.0;
  for (int j = 0; j < s.K_E; ++j) {
    qsum += s.alpha[j] * harvested_power(sol, s, j);
  }
  CHECK(objective_value(sol, s) == doctest::Approx(qsum).epsilon(1e-10));
}

TEST_CASE("validate_solution catches violations") {
  Scenario s = tiny_scenario();
  BeamSolution sol;
  sol.receiver_type = ReceiverType::kTypeI;
  CVec w = CVec::Zero(2);
  w[0] = 0.5;  // SINR = 25 >= 1, power 0.25 <= 1
  sol.info_beams.push_back(w);
  CHECK(validate_solution(sol, s, 1e-6).empty());

  s.gamma[0] = 50.0;
  CHECK(validate_solution(sol, s, 1e-6).size() == 1);

  s = tiny_scenario();
  sol.info_beams[0][0] = std::sqrt(2.0 * s.P);
  CHECK(validate_solution(sol, s, 1e-6).size() == 1);
}

TEST_CASE("scenario JSON round trip and unit conversion") {
  const Scenario s = corpus_scenario(4);
  const std::string text = scenario_to_json(s);
  const Scenario back = scenario_from_json(text);
  CHECK(back.M == s.M);
  CHECK((back.H - s.H).norm() <= 1e-12 * (1.0 + s.H.norm()));
  CHECK((back.Gch - s.Gch).norm() <= 1e-12 * (1.0 + s.Gch.norm()));
  CHECK((back.gamma - s.gamma).norm() <= 1e-12);
  CHECK((back.sigma2 - s.sigma2).norm() <= 1e-18);

  const std::string db_form = R"({
    "M": 2, "K_I": 1, "K_E": 1,
    "channels_h": [[1.0, 0.0, 0.0, 0.0]],
    "channels_g": [[0.0, 0.0, 1.0, 0.0]],
    "sigma2_dbm": [-50.0],
    "gamma_db": [10.0],
    "alpha": [1.0],
    "zeta": 0.5,
    "power_w": 1.0
  })";
  const Scenario parsed = scenario_from_json(db_form);
  CHECK(parsed.gamma[0] == doctest::Approx(10.0));
  CHECK(parsed.sigma2[0] == doctest::Approx(1e-8));

  CHECK_THROWS_AS(scenario_from_json("{not json"), Error);
  CHECK_THROWS_AS(scenario_from_json("{}"), Error);
}
