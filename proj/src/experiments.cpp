#include "swipt/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "swipt/baselines.hpp"
#include "swipt/duality.hpp"
#include "swipt/feasibility.hpp"

namespace swipt {

using nlohmann::json;

namespace {

std::vector<double> default_grid() {
  std::vector<double> g;
  for (double v = -10.0; v <= 30.0 + 1e-9; v += 2.5) g.push_back(v);
  return g;
}

bool known_design(const std::string& d) {
  return d == kJointType1 || d == kJointType2 || d == kSeparateType1 ||
         d == kSeparateType2;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (M <= 1 || K_I < 0 || K_E <= 0 || trials < 1) {
    throw Error(ErrorCode::kInvalidInput, "config: M/K_I/K_E/trials");
  }
  if (P <= 0.0 || !(zeta > 0.0 && zeta <= 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "config: P or zeta");
  }
  if (alpha_policy != "uniform") {
    throw Error(ErrorCode::kInvalidInput, "config: unknown alpha policy");
  }
  if (designs.empty()) {
    throw Error(ErrorCode::kInvalidInput, "config: no designs requested");
  }
  for (const std::string& d : designs) {
    if (!known_design(d)) {
      throw Error(ErrorCode::kInvalidInput, "config: unknown design " + d);
    }
  }
}

Scenario gen_scenario(const ExperimentConfig& cfg, int trial) {
  cfg.validate();
  if (trial < 0 || trial >= cfg.trials) {
    throw Error(ErrorCode::kInvalidInput, "gen_scenario: trial out of range");
  }
  std::mt19937_64 rng(cfg.seed * 0x9E3779B97F4A7C15ULL +
                      static_cast<std::uint64_t>(trial) + 1);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto draw = [&](int rows, double attenuation_db) {
    const double power = std::pow(10.0, -attenuation_db / 10.0);
    const double sigma = std::sqrt(power / 2.0);
    CMat m(rows, cfg.M);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cfg.M; ++c) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        m(r, c) = Complex(sigma * re, sigma * im);
      }
    }
    return m;
  };
  Scenario s;
  s.M = cfg.M;
  s.K_I = cfg.K_I;
  s.K_E = cfg.K_E;
  s.H = draw(cfg.K_I, cfg.id_attenuation_db);
  s.Gch = draw(cfg.K_E, cfg.eh_attenuation_db);
  const std::vector<double> grid =
      cfg.gamma_grid_db.empty() ? default_grid() : cfg.gamma_grid_db;
  s.gamma = RVec::Constant(cfg.K_I, db_to_linear(grid.front()));
  s.sigma2 = RVec::Constant(cfg.K_I, dbm_to_watt(cfg.sigma2_dbm));
  s.alpha = RVec::Constant(cfg.K_E, 1.0 / cfg.K_E);
  s.zeta = cfg.zeta;
  s.P = cfg.P;
  s.validate();
  return s;
}

int experiment_threads(int trials) {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("SWIPT_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return std::min(n, std::max(trials, 1));
}

namespace {

TrialRecord run_design(const Scenario& s, const std::string& design,
                       bool feasible) {
  TrialRecord rec;
  rec.design = design;
  rec.feasible = feasible;
  if (!feasible) return rec;
  try {
    if (design == kJointType1) {
      const SolveReport r = solve_p1(s);
      rec.objective_w = r.objective;
      rec.q_w = r.energy_beam_power;
      rec.region = r.region;
    } else if (design == kJointType2) {
      const SolveReport r = solve_p2(s);
      rec.objective_w = r.objective;
      rec.q_w = r.energy_beam_power;
      rec.region = r.region;
    } else if (design == kSeparateType1) {
      const BaselineResult r = separate_design_type1(s);
      rec.objective_w = r.objective;
      rec.q_w = r.residual_power;
    } else {
      const BaselineResult r = separate_design_type2(s);
      rec.objective_w = r.objective;
      rec.q_w = r.residual_power;
    }
  } catch (const Error&) {
    rec.feasible = false;  // solver breakdown counted like an infeasible draw
  }
  return rec;
}

SweepTable run_sweep(const ExperimentConfig& cfg,
                     const std::vector<std::string>& designs) {
  cfg.validate();
  const std::vector<double> grid =
      cfg.gamma_grid_db.empty() ? default_grid() : cfg.gamma_grid_db;
  const int ng = static_cast<int>(grid.size());
  const int nd = static_cast<int>(designs.size());
  const bool sep1_ok = cfg.K_I <= cfg.M - 1;

  SweepTable table;
  table.records.resize(static_cast<size_t>(cfg.trials) * ng * nd);

  std::atomic<int> next_trial{0};
  auto worker = [&]() {
    for (;;) {
      const int t = next_trial.fetch_add(1);
      if (t >= cfg.trials) return;
      Scenario s = gen_scenario(cfg, t);
      for (int g = 0; g < ng; ++g) {
        s.gamma = RVec::Constant(cfg.K_I, db_to_linear(grid[g]));
        bool feasible = false;
        try {
          feasible = is_feasible(s);
        } catch (const Error&) {
          feasible = false;
        }
        for (int d = 0; d < nd; ++d) {
          const bool applicable = designs[d] != kSeparateType1 || sep1_ok;
          TrialRecord rec =
              applicable ? run_design(s, designs[d], feasible)
                         : TrialRecord{.design = designs[d], .feasible = false};
          rec.gamma_index = g;
          rec.trial = t;
          rec.design = designs[d];
          table.records[(static_cast<size_t>(t) * ng + g) * nd + d] =
              std::move(rec);
        }
      }
    }
  };
  const int nthreads = experiment_threads(cfg.trials);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  // Deterministic trial-ordered aggregation.
  for (int g = 0; g < ng; ++g) {
    for (int d = 0; d < nd; ++d) {
      SweepRow row;
      row.gamma_db = grid[g];
      row.design = designs[d];
      std::vector<double> values;
      std::vector<double> qs;
      for (int t = 0; t < cfg.trials; ++t) {
        const TrialRecord& rec =
            table.records[(static_cast<size_t>(t) * ng + g) * nd + d];
        if (!rec.feasible) continue;
        values.push_back(rec.objective_w);
        qs.push_back(rec.q_w);
        switch (rec.region) {
          case Region::kR1: ++row.region_counts[0]; break;
          case Region::kR2: ++row.region_counts[1]; break;
          case Region::kR3: ++row.region_counts[2]; break;
          default: ++row.region_counts[3]; break;
        }
      }
      const size_t n = values.size();
      row.feasible_rate = static_cast<double>(n) / cfg.trials;
      if (n == 0) {
        row.flagged = true;
        row.mean_mw = std::numeric_limits<double>::quiet_NaN();
        row.std_mw = std::numeric_limits<double>::quiet_NaN();
        row.mean_q_w = std::numeric_limits<double>::quiet_NaN();
      } else {
        double sum = 0.0;
        for (double v : values) sum += v;
        const double mean = sum / n;
        double var = 0.0;
        for (double v : values) var += (v - mean) * (v - mean);
        double qsum = 0.0;
        for (double q : qs) qsum += q;
        row.mean_mw = mean * 1e3;
        row.std_mw = std::sqrt(var / n) * 1e3;
        row.mean_q_w = qsum / n;
      }
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

}  // namespace

SweepTable sweep_gamma(const ExperimentConfig& cfg) {
  return run_sweep(cfg, cfg.designs);
}

SweepTable compare_designs(const ExperimentConfig& cfg) {
  return run_sweep(cfg, {kJointType1, kJointType2, kSeparateType1,
                         kSeparateType2});
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string region_counts_field(const std::array<int, 4>& c) {
  std::ostringstream os;
  os << "R1:" << c[0] << ";R2:" << c[1] << ";R3:" << c[2] << ";NA:" << c[3];
  return os.str();
}

}  // namespace

void write_csv(const SweepTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "write_csv: cannot open " + path);
  out << "gamma_db,design,mean_mw,std_mw,feasible_rate,mean_q_w,"
         "region_counts\n";
  for (const SweepRow& r : table.rows) {
    out << fmt(r.gamma_db) << ',' << r.design << ',' << fmt(r.mean_mw) << ','
        << fmt(r.std_mw) << ',' << fmt(r.feasible_rate) << ','
        << fmt(r.mean_q_w) << ',' << region_counts_field(r.region_counts)
        << '\n';
  }
  if (!out) throw Error(ErrorCode::kIoError, "write_csv: write failed");
  out.close();

  std::ofstream plot(path + ".plot", std::ios::binary);
  if (!plot) {
    throw Error(ErrorCode::kIoError, "write_csv: cannot open companion file");
  }
  std::vector<std::string> designs;
  for (const SweepRow& r : table.rows) {
    if (std::find(designs.begin(), designs.end(), r.design) == designs.end()) {
      designs.push_back(r.design);
    }
  }
  for (const std::string& d : designs) {
    plot << "# " << d << '\n';
    for (const SweepRow& r : table.rows) {
      if (r.design != d || r.flagged) continue;
      plot << fmt(r.gamma_db) << ' ' << fmt(r.mean_mw) << '\n';
    }
    plot << "\n\n";
  }
}

SweepTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "read_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) ||
      line != "gamma_db,design,mean_mw,std_mw,feasible_rate,mean_q_w,"
              "region_counts") {
    throw Error(ErrorCode::kIoError, "read_csv: bad header");
  }
  SweepTable table;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream is(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(is, field, ',')) fields.push_back(field);
    if (fields.size() != 7) {
      throw Error(ErrorCode::kIoError, "read_csv: wrong column count");
    }
    SweepRow r;
    r.gamma_db = std::strtod(fields[0].c_str(), nullptr);
    r.design = fields[1];
    r.mean_mw = std::strtod(fields[2].c_str(), nullptr);
    r.std_mw = std::strtod(fields[3].c_str(), nullptr);
    r.feasible_rate = std::strtod(fields[4].c_str(), nullptr);
    r.mean_q_w = std::strtod(fields[5].c_str(), nullptr);
    r.flagged = std::isnan(r.mean_mw);
    if (std::sscanf(fields[6].c_str(), "R1:%d;R2:%d;R3:%d;NA:%d",
                    &r.region_counts[0], &r.region_counts[1],
                    &r.region_counts[2], &r.region_counts[3]) != 4) {
      throw Error(ErrorCode::kIoError, "read_csv: bad region counts");
    }
    table.rows.push_back(std::move(r));
  }
  return table;
}

ExperimentConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kIoError, std::string("config parse: ") + e.what());
  }
  try {
    ExperimentConfig cfg;
    if (j.contains("M")) cfg.M = j["M"].get<int>();
    if (j.contains("K_I")) cfg.K_I = j["K_I"].get<int>();
    if (j.contains("K_E")) cfg.K_E = j["K_E"].get<int>();
    if (j.contains("gamma_grid_db")) {
      cfg.gamma_grid_db = j["gamma_grid_db"].get<std::vector<double>>();
    }
    if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("eh_attenuation_db")) {
      cfg.eh_attenuation_db = j["eh_attenuation_db"].get<double>();
    }
    if (j.contains("id_attenuation_db")) {
      cfg.id_attenuation_db = j["id_attenuation_db"].get<double>();
    }
    if (j.contains("power_w")) cfg.P = j["power_w"].get<double>();
    if (j.contains("zeta")) cfg.zeta = j["zeta"].get<double>();
    if (j.contains("sigma2_dbm")) cfg.sigma2_dbm = j["sigma2_dbm"].get<double>();
    if (j.contains("alpha_policy")) {
      cfg.alpha_policy = j["alpha_policy"].get<std::string>();
    }
    if (j.contains("designs")) {
      cfg.designs = j["designs"].get<std::vector<std::string>>();
    }
    cfg.validate();
    return cfg;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kIoError, std::string("config fields: ") + e.what());
  }
}

ExperimentConfig config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json(buf.str());
}

}  // namespace swipt
