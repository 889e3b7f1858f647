#include "swipt/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace swipt {

using nlohmann::json;

void Scenario::validate() const {
  if (M <= 1) throw Error(ErrorCode::kInvalidInput, "scenario: need M > 1");
  if (K_I < 0 || K_E < 0 || (K_I == 0 && K_E == 0)) {
    throw Error(ErrorCode::kInvalidInput, "scenario: need K_I or K_E > 0");
  }
  if (H.rows() != K_I || (K_I > 0 && H.cols() != M)) {
    throw Error(ErrorCode::kDimensionMismatch, "scenario: channels_h shape");
  }
  if (Gch.rows() != K_E || (K_E > 0 && Gch.cols() != M)) {
    throw Error(ErrorCode::kDimensionMismatch, "scenario: channels_g shape");
  }
  if (sigma2.size() != K_I || gamma.size() != K_I || alpha.size() != K_E) {
    throw Error(ErrorCode::kDimensionMismatch, "scenario: vector lengths");
  }
  if (P <= 0.0) throw Error(ErrorCode::kInvalidInput, "scenario: P <= 0");
  if (!(zeta > 0.0 && zeta <= 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "scenario: zeta outside (0,1]");
  }
  for (int i = 0; i < K_I; ++i) {
    if (sigma2[i] <= 0.0 || gamma[i] <= 0.0) {
      throw Error(ErrorCode::kInvalidInput,
                  "scenario: sigma2 and gamma must be positive");
    }
  }
  for (int j = 0; j < K_E; ++j) {
    if (alpha[j] < 0.0) {
      throw Error(ErrorCode::kInvalidInput, "scenario: alpha < 0");
    }
  }
  if (!H.allFinite() || !Gch.allFinite()) {
    throw Error(ErrorCode::kInvalidInput, "scenario: non-finite channel");
  }
}

EnergyProfile energy_matrix(const Scenario& s) {
  s.validate();
  CMat g = CMat::Zero(s.M, s.M);
  for (int j = 0; j < s.K_E; ++j) {
    g += s.alpha[j] * s.Gch.row(j).adjoint() * s.Gch.row(j);
  }
  EnergyProfile p;
  p.G = HermitianMatrix(s.zeta * g);
  DominantEigpair dom = dominant_eigpair(p.G);
  p.xi_E = dom.value;
  p.v_E = dom.vector;
  return p;
}

double BeamSolution::total_power() const {
  double pw = 0.0;
  for (const CVec& w : info_beams) pw += w.squaredNorm();
  for (const CVec& v : energy_beams) pw += v.squaredNorm();
  return pw;
}

const char* region_name(Region r) {
  switch (r) {
    case Region::kR1: return "R1";
    case Region::kR2: return "R2";
    case Region::kR3: return "R3";
    default: return "NA";
  }
}

double sinr(const BeamSolution& sol, const Scenario& s, int i) {
  if (i < 0 || i >= s.K_I) {
    throw Error(ErrorCode::kInvalidInput, "sinr: index out of range");
  }
  const auto h = s.H.row(i);
  double signal = 0.0;
  double interference = 0.0;
  for (int k = 0; k < static_cast<int>(sol.info_beams.size()); ++k) {
    const double p = std::norm((h * sol.info_beams[k])(0));
    if (k == i) {
      signal = p;
    } else {
      interference += p;
    }
  }
  if (sol.receiver_type == ReceiverType::kTypeI) {
    for (const CVec& v : sol.energy_beams) {
      interference += std::norm((h * v)(0));
    }
  }
  return signal / (interference + s.sigma2[i]);
}

double harvested_power(const BeamSolution& sol, const Scenario& s, int j) {
  if (j < 0 || j >= s.K_E) {
    throw Error(ErrorCode::kInvalidInput, "harvested_power: index");
  }
  const auto g = s.Gch.row(j);
  double total = 0.0;
  for (const CVec& w : sol.info_beams) total += std::norm((g * w)(0));
  for (const CVec& v : sol.energy_beams) total += std::norm((g * v)(0));
  return s.zeta * total;
}

double objective_value(const BeamSolution& sol, const Scenario& s) {
  const EnergyProfile e = energy_matrix(s);
  double obj = 0.0;
  for (const CVec& w : sol.info_beams) {
    obj += std::real(w.dot(e.G.mat() * w));
  }
  for (const CVec& v : sol.energy_beams) {
    obj += std::real(v.dot(e.G.mat() * v));
  }
  return obj;
}

std::vector<std::string> validate_solution(const BeamSolution& sol,
                                           const Scenario& s, double tol) {
  std::vector<std::string> violations;
  if (static_cast<int>(sol.info_beams.size()) != s.K_I) {
    violations.push_back("info beam count mismatch");
    return violations;
  }
  for (int i = 0; i < s.K_I; ++i) {
    const double v = sinr(sol, s, i);
    if (v < s.gamma[i] * (1.0 - tol)) {
      std::ostringstream os;
      os << "SINR[" << i << "] = " << v << " below target " << s.gamma[i];
      violations.push_back(os.str());
    }
  }
  const double pw = sol.total_power();
  if (pw > s.P * (1.0 + tol)) {
    std::ostringstream os;
    os << "total power " << pw << " exceeds budget " << s.P;
    violations.push_back(os.str());
  }
  return violations;
}

void finalize_report(SolveReport& r, const Scenario& s) {
  r.per_id_sinr.resize(s.K_I);
  r.per_eh_power.resize(s.K_E);
  for (int i = 0; i < s.K_I; ++i) r.per_id_sinr[i] = sinr(r.solution, s, i);
  for (int j = 0; j < s.K_E; ++j) {
    r.per_eh_power[j] = harvested_power(r.solution, s, j);
  }
  r.total_power = r.solution.total_power();
  r.objective = objective_value(r.solution, s);
  r.energy_beam_power = 0.0;
  for (const CVec& v : r.solution.energy_beams) {
    r.energy_beam_power += v.squaredNorm();
  }
}

namespace {

CMat channels_from_json(const json& rows, int expect_cols,
                        const std::string& key) {
  if (!rows.is_array()) {
    throw Error(ErrorCode::kIoError, "scenario: " + key + " must be an array");
  }
  const int r = static_cast<int>(rows.size());
  CMat out(r, expect_cols);
  for (int i = 0; i < r; ++i) {
    const json& row = rows[i];
    if (!row.is_array() ||
        static_cast<int>(row.size()) != 2 * expect_cols) {
      throw Error(ErrorCode::kIoError,
                  "scenario: " + key + " rows need 2*M reals (re,im pairs)");
    }
    for (int c = 0; c < expect_cols; ++c) {
      out(i, c) = Complex(row[2 * c].get<double>(),
                          row[2 * c + 1].get<double>());
    }
  }
  return out;
}

RVec vec_from_json(const json& arr, const std::string& key) {
  if (!arr.is_array()) {
    throw Error(ErrorCode::kIoError, "scenario: " + key + " must be an array");
  }
  RVec v(arr.size());
  for (size_t i = 0; i < arr.size(); ++i) v[i] = arr[i].get<double>();
  return v;
}

}  // namespace

Scenario scenario_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kIoError, std::string("scenario parse: ") + e.what());
  }
  try {
    Scenario s;
    s.M = j.at("M").get<int>();
    s.K_I = j.at("K_I").get<int>();
    s.K_E = j.at("K_E").get<int>();
    s.H = s.K_I > 0 ? channels_from_json(j.at("channels_h"), s.M, "channels_h")
                    : CMat(0, s.M);
    s.Gch = s.K_E > 0
                ? channels_from_json(j.at("channels_g"), s.M, "channels_g")
                : CMat(0, s.M);
    if (j.contains("sigma2_w")) {
      s.sigma2 = vec_from_json(j["sigma2_w"], "sigma2_w");
    } else {
      s.sigma2 = vec_from_json(j.at("sigma2_dbm"), "sigma2_dbm");
      for (int i = 0; i < s.sigma2.size(); ++i) {
        s.sigma2[i] = dbm_to_watt(s.sigma2[i]);
      }
    }
    if (j.contains("gamma_linear")) {
      s.gamma = vec_from_json(j["gamma_linear"], "gamma_linear");
    } else {
      s.gamma = vec_from_json(j.at("gamma_db"), "gamma_db");
      for (int i = 0; i < s.gamma.size(); ++i) {
        s.gamma[i] = db_to_linear(s.gamma[i]);
      }
    }
    s.alpha = s.K_E > 0 ? vec_from_json(j.at("alpha"), "alpha") : RVec(0);
    s.zeta = j.at("zeta").get<double>();
    s.P = j.at("power_w").get<double>();
    s.validate();
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kIoError, std::string("scenario fields: ") + e.what());
  }
}

Scenario scenario_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open scenario file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_json(buf.str());
}

std::string scenario_to_json(const Scenario& s) {
  json j;
  j["M"] = s.M;
  j["K_I"] = s.K_I;
  j["K_E"] = s.K_E;
  auto channels = [](const CMat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        row.push_back(m(i, c).real());
        row.push_back(m(i, c).imag());
      }
      rows.push_back(row);
    }
    return rows;
  };
  j["channels_h"] = channels(s.H);
  j["channels_g"] = channels(s.Gch);
  j["sigma2_w"] = std::vector<double>(s.sigma2.data(), s.sigma2.data() + s.sigma2.size());
  j["gamma_linear"] = std::vector<double>(s.gamma.data(), s.gamma.data() + s.gamma.size());
  j["alpha"] = std::vector<double>(s.alpha.data(), s.alpha.data() + s.alpha.size());
  j["zeta"] = s.zeta;
  j["power_w"] = s.P;
  return j.dump(2);
}

std::string report_to_json(const SolveReport& r) {
  json j;
  j["objective_w"] = r.objective;
  j["per_id_sinr"] = r.per_id_sinr;
  j["per_eh_power_w"] = r.per_eh_power;
  j["total_power_w"] = r.total_power;
  j["dual_beta"] = r.dual_beta;
  j["uplink_lambdas"] = r.uplink_lambdas;
  j["energy_beam_power_w"] = r.energy_beam_power;
  j["region"] = region_name(r.region);
  j["iterations"] = r.iterations;
  auto beams = [](const std::vector<CVec>& bs) {
    json rows = json::array();
    for (const CVec& b : bs) {
      json row = json::array();
      for (Eigen::Index c = 0; c < b.size(); ++c) {
        row.push_back(b[c].real());
        row.push_back(b[c].imag());
      }
      rows.push_back(row);
    }
    return rows;
  };
  j["info_beams"] = beams(r.solution.info_beams);
  j["energy_beams"] = beams(r.solution.energy_beams);
  j["receiver_type"] =
      r.solution.receiver_type == ReceiverType::kTypeI ? 1 : 2;
  return j.dump(2);
}

}  // namespace swipt
