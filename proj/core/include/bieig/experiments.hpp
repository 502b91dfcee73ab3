#ifndef BIEIG_EXPERIMENTS_HPP
#define BIEIG_EXPERIMENTS_HPP

#include <cstdint>
#include <string>

#include "bieig/types.hpp"

namespace bieig {

/// One eigenvalue record in an experiment report: the method result, the
/// independent oracle value (or a skip reason), the declared target with its
/// tolerance, and both ordering ranks (real-part and modulus conventions).
struct EigRecord {
  std::string method;
  std::string label;
  cplx lambda{0.0, 0.0};
  double residual = 0.0;
  double iterations_or_time = 0.0;

  bool has_oracle = false;
  cplx oracle_lambda{0.0, 0.0};
  double oracle_delta = 0.0;
  std::string oracle_skip_reason;

  bool has_target = false;
  cplx target{0.0, 0.0};
  double tolerance = 0.0;
  bool tolerance_relative = false;

  bool pass = false;
  int rank_by_real = 0;     // 1-based within the oracle spectrum, Re descending
  int rank_by_modulus = 0;  // 1-based within the oracle spectrum, |.| descending
  std::string note;
};

struct ExperimentReport {
  std::string experiment_id;  // e1 | e2 | e3
  std::string matrix_description;
  std::uint64_t seed = 0;
  std::vector<EigRecord> records;
  std::vector<std::string> notes;

  bool all_passed() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }
};

/// Runs one of the scripted experiments. When out_dir is non-empty, writes the
/// matrix, per-run traces, result files, and the report JSON there.
ExperimentReport run_experiment(const std::string& id, const std::string& out_dir,
                                std::uint64_t seed, bool deterministic = false);

std::string report_to_json(const ExperimentReport& rep, bool deterministic);

/// The 7x7 reference Swanson Hamiltonian at N=7, theta=0.4 (entrywise data the
/// generator must reproduce to 3 significant figures).
CMatrix swanson_printed_reference();

}  // namespace bieig

#endif
