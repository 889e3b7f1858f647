/* C interface to the SWIPT beamforming library.
 *
 * All functions return swipt_status; every out parameter is written only on
 * SWIPT_OK unless stated otherwise. Strings returned through char** are
 * heap-allocated and must be released with swipt_string_free. The last
 * error message is kept per thread and readable at any time.
 */
#ifndef SWIPT_CAPI_H
#define SWIPT_CAPI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum swipt_status {
  SWIPT_OK = 0,
  SWIPT_ERR_INVALID_INPUT = 1,
  SWIPT_ERR_DIMENSION_MISMATCH = 2,
  SWIPT_ERR_RANK_DEFICIENT = 3,
  SWIPT_ERR_NON_PSD_NOISE = 4,
  SWIPT_ERR_INFEASIBLE = 5,
  SWIPT_ERR_NO_CONVERGENCE = 6,
  SWIPT_ERR_UNBOUNDED = 7,
  SWIPT_ERR_SOLVER_FAILURE = 8,
  SWIPT_ERR_IO = 9,
  SWIPT_ERR_UNKNOWN = 10
} swipt_status;

typedef struct swipt_scenario swipt_scenario;

/* Scenario lifecycle. JSON schema: M, K_I, K_E, channels_h, channels_g
 * (row-major re/im pairs), sigma2_dbm|sigma2_w, gamma_db|gamma_linear,
 * alpha, zeta, power_w. */
swipt_status swipt_scenario_from_json(const char* json_text,
                                      swipt_scenario** out);
swipt_status swipt_scenario_from_file(const char* path, swipt_scenario** out);
swipt_status swipt_scenario_to_json(const swipt_scenario* s, char** out_json);
void swipt_scenario_free(swipt_scenario* s);

/* Solves the harvested-power maximization for receiver_type 1 or 2.
 * tol <= 0 selects solver defaults. out_report_json and out_summary_text
 * may each be NULL when not wanted. Returns SWIPT_ERR_INFEASIBLE when the
 * SINR targets exceed the budget. */
swipt_status swipt_solve(const swipt_scenario* s, int receiver_type,
                         double tol, char** out_report_json,
                         char** out_summary_text);

/* Feasibility probe. JSON fields: feasible, min_power_w, oebf_feasible.
 * Returns SWIPT_OK for both outcomes; the payload carries the verdict. */
swipt_status swipt_check_feasibility(const swipt_scenario* s, char** out_json);

/* Cross-checks the duality solver against the semidefinite relaxation for
 * one receiver type. JSON fields: v_dual, v_sdr, rel_gap, rank_ratios,
 * trace_we, beta_dual, beta_sdr, structure_pass, failures, pass. Returns
 * SWIPT_OK even when pass is false; solver breakdowns map to error codes. */
swipt_status swipt_verify(const swipt_scenario* s, int receiver_type,
                          double tol, char** out_json);

/* Monte-Carlo sweep driven by a JSON experiment config. compare != 0 adds
 * the separate-design baselines. seed_override >= 0 replaces the config
 * seed. Writes the CSV (and its .plot companion) to csv_path and returns a
 * one-line-per-design summary. */
swipt_status swipt_sweep(const char* config_json, long long seed_override,
                         const char* csv_path, int compare,
                         char** out_summary_text);

void swipt_string_free(char* s);

/* Message describing the most recent failure on this thread; never NULL. */
const char* swipt_last_error_message(void);

/* Library interface version. */
int swipt_api_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SWIPT_CAPI_H */
