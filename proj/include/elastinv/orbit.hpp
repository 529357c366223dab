// orbit.hpp
// SO(3)-orbit equivalence of elasticity tensors by fingerprint comparison.

#pragma once

#include "elastinv/fingerprint.hpp"

#include <string>
#include <utility>

namespace elastinv {

inline constexpr double kDefaultOrbitTol = 1e-6;

struct OrbitVerdict {
  bool equivalent = false;
  double max_relative_deviation = 0.0;
  std::string worst_slot;
};

/// Compares the fingerprints of e1 and e2 slot-wise. For the deviation
/// metric both tensors are first divided by the common scale
/// s = (||e1|| + ||e2||) / 2, which makes the metric scale-free without
/// collapsing genuinely different tensors; per slot the deviation is
/// |u - w| / (1 + |u|). Ties at exactly `tol` count as equivalent.
OrbitVerdict same_orbit(const ElasticityTensor& e1, const ElasticityTensor& e2,
                        double tol = kDefaultOrbitTol);

/// (E / ||E||_F, ||E||_F). Throws std::domain_error for the zero tensor.
std::pair<ElasticityTensor, double> normalize(const ElasticityTensor& e);

}  // namespace elastinv
