#ifndef SWIPT_SDR_HPP
#define SWIPT_SDR_HPP

#include <string>
#include <vector>

#include "swipt/model.hpp"

namespace swipt {

enum class ConstraintSense { kLe, kGe, kEq };

// Symmetric block-diagonal matrix; one dense block per PSD variable.
struct BlockMatrix {
  std::vector<RMat> blocks;

  static BlockMatrix Zero(const std::vector<int>& sizes);
  static BlockMatrix Identity(const std::vector<int>& sizes);
  double dot(const BlockMatrix& other) const;
  double norm() const;
  double trace() const;
  BlockMatrix& operator+=(const BlockMatrix& other);
  BlockMatrix& operator-=(const BlockMatrix& other);
  BlockMatrix& operator*=(double t);
};

// maximize <C, X> subject to <A_m, X> sense_m b_m, X block-PSD.
struct RealSdp {
  std::vector<int> block_sizes;
  BlockMatrix objective;
  std::vector<BlockMatrix> constraints;
  std::vector<ConstraintSense> senses;
  RVec rhs;

  void validate() const;
  // <A_m, X> for a candidate block matrix.
  double constraint_value(int m, const BlockMatrix& x) const;
};

struct SdpTermination {
  bool optimal = false;
  int iterations = 0;
  double gap = 0.0;         // relative duality gap
  double primal_res = 0.0;  // relative primal infeasibility
  double dual_res = 0.0;    // relative dual infeasibility
};

// Raw solver output in the real block space (slack blocks stripped).
struct RealSdpSolution {
  BlockMatrix X;
  RVec y;  // one multiplier per constraint row, sign matching the sense
  BlockMatrix Z;
  double value = 0.0;
  SdpTermination term;
};

// Dense infeasible-start primal-dual interior-point method (HKM direction,
// Mehrotra centering). Desk scale: total dimension <= 64, rows <= 16.
// Throws kNoConvergence / kSolverFailure when the certificates cannot be
// produced.
RealSdpSolution solve_real_sdp(const RealSdp& p, double tol = 1e-8,
                               int max_iters = 200);

// Standard real embedding [[Re, -Im], [Im, Re]] of a Hermitian matrix.
RMat embed_complex(const HermitianMatrix& h);

// Covariance-lifted relaxations of the two beamforming problems over
// embedded real blocks W_1..W_{K_I}, W_E (W_E block always last). The
// embedded data is halved so that every trace product matches its complex
// counterpart exactly.
RealSdp build_sdr1(const Scenario& s);
RealSdp build_sdr2(const Scenario& s);

struct SdrSolution {
  std::vector<CMat> W;  // K_I Hermitian PSD covariances
  CMat W_E;
  double value = 0.0;
  RVec lambdas;  // SINR-row duals, >= 0
  double beta = 0.0;  // power-row dual, >= 0
  SdpTermination term;
};

// Solves an SDP built by build_sdr1/build_sdr2 and maps the solution back
// to complex covariances and the (lambda, beta) dual pair.
SdrSolution solve_sdp(const RealSdp& p, double tol = 1e-8);

// w = sqrt(lambda_1) v_1 when the dominant-eigenvalue ratio
// lambda_1 / trace >= 1 - tol; otherwise throws kRankDeficient.
CVec extract_rank_one(const HermitianMatrix& w, double tol);

struct KktMatrices {
  std::vector<HermitianMatrix> A;  // one per ID receiver
  HermitianMatrix C;               // energy-covariance block
};

KktMatrices kkt_matrices(const RVec& lambdas, double beta, const Scenario& s,
                         ReceiverType type);

struct StructureReport {
  bool pass = false;
  std::vector<std::string> failures;
  double trace_we = 0.0;
  std::vector<double> dominant_ratios;
  double max_kkt_eigenvalue = 0.0;   // over all A_i and C
  double max_slack_residual = 0.0;   // ||A_i W_i||, ||C W_E|| scaled
};

// Checks the optimality structure of a solved relaxation: energy-covariance
// shape per receiver type, KKT matrices negative semidefinite, and
// complementary slackness residuals.
StructureReport verify_structure(const SdrSolution& sol, const Scenario& s,
                                 ReceiverType type, double tol);

// True iff Z_i = beta I - G + sum_{k!=i} lambda_k h_k^H h_k dominates
// (lambda_i/gamma_i) h_i^H h_i for every i.
bool dual_feasibility_check(const RVec& lambdas, double beta,
                            const Scenario& s, double tol);

// One record per matrix in a plain text format: "block row col value"
// entries of the upper triangle, blank-line separated.
void export_sdp(const RealSdp& p, const std::string& path);

}  // namespace swipt

#endif  // SWIPT_SDR_HPP
