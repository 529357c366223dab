#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elastinv/orbit.hpp"

#include <random>

using namespace elastinv;

namespace {

ElasticityTensor seeded_elasticity(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ElasticityTensor e;
  for (auto& x : e.c) x = u(rng);
  return e;
}

}  // namespace

TEST_CASE("reflexivity: a tensor is on its own orbit with zero deviation") {
  const ElasticityTensor e = seeded_elasticity(1);
  const OrbitVerdict v = same_orbit(e, e);
  CHECK(v.equivalent);
  CHECK(v.max_relative_deviation == 0.0);
}

TEST_CASE("verdict is symmetric") {
  const ElasticityTensor e1 = seeded_elasticity(2), e2 = seeded_elasticity(3);
  const OrbitVerdict v12 = same_orbit(e1, e2);
  const OrbitVerdict v21 = same_orbit(e2, e1);
  CHECK(v12.equivalent == v21.equivalent);
  CHECK(std::abs(v12.max_relative_deviation - v21.max_relative_deviation) <
        1e-14 * (1 + v12.max_relative_deviation));
}

TEST_CASE("rotated pairs are equivalent") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ElasticityTensor e = seeded_elasticity(seed);
    const ElasticityTensor r = rotate_elast(random_rotation(seed + 500), e);
    CHECK(same_orbit(e, r).equivalent);
  }
}

TEST_CASE("independently seeded tensors are not equivalent") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ElasticityTensor e1 = seeded_elasticity(seed);
    const ElasticityTensor e2 = seeded_elasticity(seed + 10000);
    CHECK(!same_orbit(e1, e2).equivalent);
  }
}

TEST_CASE("isotropic pairs differing in mu report worst slot mu") {
  const OrbitVerdict v =
      same_orbit(ElasticityTensor::isotropic(1, 1), ElasticityTensor::isotropic(1, 2));
  CHECK(!v.equivalent);
  CHECK(v.worst_slot == "mu");
}

TEST_CASE("scaling a tensor changes its orbit") {
  const ElasticityTensor e = seeded_elasticity(7);
  CHECK(!same_orbit(e, e * 2.0).equivalent);
}

TEST_CASE("normalize") {
  const ElasticityTensor e = ElasticityTensor::isotropic(2, 3);
  const auto [unit, scale] = normalize(e);
  CHECK(scale == doctest::Approx(e.norm()));
  CHECK(unit.norm() == doctest::Approx(1.0).epsilon(1e-14));

  const auto [unit2, scale2] = normalize(unit);
  CHECK(scale2 == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(normalize(ElasticityTensor::zero()), std::domain_error);
}

TEST_CASE("ties at exactly the tolerance count as equivalent") {
  const ElasticityTensor e = seeded_elasticity(9);
  const OrbitVerdict v = same_orbit(e, e, 1e-6);
  CHECK(v.max_relative_deviation <= 1e-6);
  CHECK(v.equivalent);
}
