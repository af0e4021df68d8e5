#pragma once

#include <stdexcept>

namespace riccati {

/// Numerical tolerance bundle threaded through every operation.
///
/// rank  — relative singular-value cutoff for rank decisions
/// sym   — permitted asymmetry when ingesting a symmetric matrix
/// psd   — eigenvalue slack for semidefiniteness verdicts
/// resid — scaled residual bound for equation solutions (ARE, Sylvester)
/// spec  — real-part slack splitting eigenvalues into C- / C0 / C+
struct Tolerances {
  double rank = 1e-10;
  double sym = 1e-10;
  double psd = 1e-8;
  double resid = 1e-8;
  double spec = 1e-8;

  void validate() const {
    if (!(rank > 0 && sym > 0 && psd > 0 && resid > 0 && spec > 0)) {
      throw std::invalid_argument("Tolerances: all fields must be strictly positive");
    }
  }
};

}  // namespace riccati
