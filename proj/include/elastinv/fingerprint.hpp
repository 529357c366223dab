// fingerprint.hpp
// The 251-value orbit fingerprint: every catalog invariant evaluated on the
// harmonic parts of an elasticity tensor, in catalog order. Batch evaluation
// has an OpenMP kernel with the single-tensor path as its serial reference.

#pragma once

#include "elastinv/catalog.hpp"
#include "elastinv/harmonic.hpp"

#include <array>
#include <span>
#include <vector>

namespace elastinv {

inline constexpr int kFingerprintSize = 251;
inline constexpr const char* kCatalogVersion = "table1-v1";

struct Fingerprint {
  std::array<double, kFingerprintSize> values{};
  double norm = 0.0;  // Frobenius norm of the source tensor
};

Fingerprint evaluate_fingerprint(const ElasticityTensor& e);
Fingerprint evaluate_fingerprint(const HarmonicParts& parts);

/// Serial reference: evaluates tensors one by one.
std::vector<Fingerprint> evaluate_fingerprints_serial(std::span<const ElasticityTensor> es);

/// OpenMP-parallel across tensors; identical results to the serial reference.
std::vector<Fingerprint> evaluate_fingerprints(std::span<const ElasticityTensor> es);

}  // namespace elastinv
