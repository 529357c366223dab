#include "elastinv/fingerprint.hpp"

#include <cstddef>

namespace elastinv {

Fingerprint evaluate_fingerprint(const HarmonicParts& parts) {
  IntermediateSet t;
  JInvariants j;
  compute_intermediates_and_j(parts, t, j);
  Fingerprint f;
  f.norm = compose(parts).norm();
  const auto& cat = catalog251();
  for (std::size_t i = 0; i < cat.size(); ++i)
    f.values[i] = evaluate_descriptor(cat[i], t, parts.lambda, parts.mu, j);
  return f;
}

Fingerprint evaluate_fingerprint(const ElasticityTensor& e) {
  Fingerprint f = evaluate_fingerprint(decompose(e));
  f.norm = e.norm();
  return f;
}

std::vector<Fingerprint> evaluate_fingerprints_serial(std::span<const ElasticityTensor> es) {
  std::vector<Fingerprint> out(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) out[i] = evaluate_fingerprint(es[i]);
  return out;
}

std::vector<Fingerprint> evaluate_fingerprints(std::span<const ElasticityTensor> es) {
  std::vector<Fingerprint> out(es.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(es.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = evaluate_fingerprint(es[i]);
  return out;
}

}  // namespace elastinv
