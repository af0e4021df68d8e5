#pragma once

#include <stdexcept>
#include <string>

namespace riccati {

enum class ErrorCode {
  dimension_mismatch,
  partition_mismatch,
  ambient_mismatch,
  not_symmetric,
  not_psd,
  convergence_failure,
  spectra_overlap,
  empty_solution_set,
  singular_x,
  not_in_omega,
  not_complementary,
  not_enumerable,
  r_not_positive_definite,
  necessary_condition_failed,
  direct_sum_violation,
  residual_too_large,
  not_are_solution,
  not_attainable,
  precondition_q_not_psd,
  invalid_input,
  internal,
};

const char* to_string(ErrorCode code);

/// Library-wide exception. `stage()` identifies the pipeline stage for
/// errors surfaced through lq_solver::solve; empty elsewhere.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Error(ErrorCode code, std::string stage, std::string message)
      : std::runtime_error(std::string(to_string(code)) + " [" + stage + "]: " + message),
        code_(code),
        stage_(std::move(stage)) {}

  ErrorCode code() const { return code_; }
  const std::string& stage() const { return stage_; }

 private:
  ErrorCode code_;
  std::string stage_;
};

}  // namespace riccati
