#include "elastinv/orbit.hpp"

#include <cmath>
#include <stdexcept>

namespace elastinv {

std::pair<ElasticityTensor, double> normalize(const ElasticityTensor& e) {
  const double n = e.norm();
  if (n == 0.0) throw std::domain_error("normalize: zero tensor");
  return {e * (1.0 / n), n};
}

OrbitVerdict same_orbit(const ElasticityTensor& e1, const ElasticityTensor& e2, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("same_orbit: tol must be positive");
  OrbitVerdict v;
  const double s = 0.5 * (e1.norm() + e2.norm());
  if (s == 0.0) {  // both zero
    v.equivalent = true;
    return v;
  }
  const Fingerprint f1 = evaluate_fingerprint(e1 * (1.0 / s));
  const Fingerprint f2 = evaluate_fingerprint(e2 * (1.0 / s));
  const auto& cat = catalog251();
  for (int i = 0; i < kFingerprintSize; ++i) {
    // symmetric in the two tensors so the verdict is order-independent
    const double mag = std::max(std::abs(f1.values[i]), std::abs(f2.values[i]));
    const double dev = std::abs(f1.values[i] - f2.values[i]) / (1.0 + mag);
    if (dev > v.max_relative_deviation) {
      v.max_relative_deviation = dev;
      v.worst_slot = cat[i].name;
    }
  }
  v.equivalent = v.max_relative_deviation <= tol;
  return v;
}

}  // namespace elastinv
