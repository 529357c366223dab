// The OpenMP kernels must reproduce their serial references: bitwise for the
// double-precision fingerprint batch (same per-item code), exact equality for
// the rational sample rows.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elastinv/fingerprint.hpp"
#include "elastinv/relations.hpp"

#include <random>

using namespace elastinv;

namespace {

std::vector<ElasticityTensor> seeded_batch(int n) {
  std::vector<ElasticityTensor> out;
  out.reserve(n);
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < n; ++i) {
    ElasticityTensor e;
    for (auto& x : e.c) x = u(rng);
    out.push_back(e);
  }
  return out;
}

}  // namespace

TEST_CASE("fingerprint batch: parallel kernel equals serial reference bitwise") {
  const auto es = seeded_batch(64);
  const auto s = evaluate_fingerprints_serial(es);
  const auto p = evaluate_fingerprints(es);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].norm == p[i].norm);
    for (int k = 0; k < kFingerprintSize; ++k) CHECK(s[i].values[k] == p[i].values[k]);
  }
}

TEST_CASE("rational sample rows: parallel kernel equals serial reference exactly") {
  const Target target = target_trace(Tens::B);
  const auto joints = build_joints(2);
  const auto s = evaluate_samples_serial(target, joints, 24, 7);
  const auto p = evaluate_samples(target, joints, 24, 7);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    REQUIRE(s[i].size() == p[i].size());
    for (std::size_t k = 0; k < s[i].size(); ++k) CHECK(s[i][k] == p[i][k]);
  }
}
