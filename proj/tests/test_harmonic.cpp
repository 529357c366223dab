#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elastinv/harmonic.hpp"

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

double parts_distance(const HarmonicParts& a, const HarmonicParts& b) {
  double d = std::abs(a.lambda - b.lambda) + std::abs(a.mu - b.mu);
  d += (a.d1 - b.d1).norm() + (a.d2 - b.d2).norm() + (a.a - b.a).norm();
  return d;
}

}  // namespace

TEST_CASE("compose: single-part examples") {
  HarmonicParts p;
  p.lambda = 1.0;
  ElasticityTensor e = compose(p);
  CHECK(e.component(0, 0, 0, 0) == doctest::Approx(1.0));
  CHECK(e.component(0, 0, 1, 1) == doctest::Approx(1.0));
  CHECK(e.component(0, 1, 0, 1) == doctest::Approx(0.0));

  HarmonicParts pa;
  pa.a.c = {0.3, -0.1, 0.2, 0.5, 0.7, -0.4, 0.1, 0.6, -0.2};
  e = compose(pa);
  const Tensor4 full = expand(pa.a);
  for (int vi = 0; vi < 6; ++vi)
    for (int vj = vi; vj < 6; ++vj) {
      const auto [i, j] = ElasticityTensor::voigt_pair(vi);
      const auto [k, l] = ElasticityTensor::voigt_pair(vj);
      CHECK(e.voigt(vi, vj) == doctest::Approx(full(i, j, k, l)).epsilon(1e-15));
    }
}

TEST_CASE("compose: d2 term lands in the shear slots") {
  HarmonicParts p;
  p.d2 = Sym2::diag(1, 1, -2);
  const ElasticityTensor e = compose(p);
  CHECK(e.component(0, 0, 0, 0) == doctest::Approx(2.0));    // 2 d2_11
  CHECK(e.component(0, 2, 0, 2) == doctest::Approx(-0.5));   // (d2_11 + d2_33)/2
  CHECK(e.component(0, 0, 2, 2) == doctest::Approx(0.0));    // no d2 content here
}

TEST_CASE("decompose: isotropic pair recovers exactly") {
  const HarmonicParts p = decompose(ElasticityTensor::isotropic(2.0, 3.0));
  CHECK(p.lambda == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(p.mu == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(p.d1.norm() < 1e-13);
  CHECK(p.d2.norm() < 1e-13);
  CHECK(p.a.norm() < 1e-13);
}

TEST_CASE("decompose: pure d1 part round-trips exactly") {
  HarmonicParts src;
  src.d1 = Sym2::diag(1, 0, -1);
  const HarmonicParts got = decompose(compose(src));
  CHECK(parts_distance(src, got) < 1e-13);
}

TEST_CASE("round-trips both ways on random tensors") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ElasticityTensor e = seeded_elasticity(seed);
    const ElasticityTensor back = compose(decompose(e));
    CHECK((back - e).norm() < 1e-12 * (1 + e.norm()));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed + 777);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    HarmonicParts p;
    p.lambda = u(rng);
    p.mu = u(rng);
    for (auto& x : p.a.c) x = u(rng);
    Sym2 s1, s2;
    for (auto& x : s1.v) x = u(rng);
    for (auto& x : s2.v) x = u(rng);
    p.d1 = s1.deviator();
    p.d2 = s2.deviator();
    const HarmonicParts got = decompose(compose(p));
    CHECK(parts_distance(p, got) < 1e-12);
  }
}

TEST_CASE("decomposed deviators are traceless, a is harmonic") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const HarmonicParts p = decompose(seeded_elasticity(seed));
    CHECK(std::abs(p.d1.trace()) < 1e-12 * (1 + p.d1.norm()));
    CHECK(std::abs(p.d2.trace()) < 1e-12 * (1 + p.d2.norm()));
    CHECK(is_harmonic4(expand(p.a), 1e-12).ok);
  }
}

TEST_CASE("linearity of decompose") {
  const ElasticityTensor e1 = seeded_elasticity(1), e2 = seeded_elasticity(2);
  const double a = 0.7, b = -1.3;
  const HarmonicParts lhs = decompose(e1 * a + e2 * b);
  const HarmonicParts rhs = decompose(e1) * a + decompose(e2) * b;
  CHECK(parts_distance(lhs, rhs) < 1e-12);
}

TEST_CASE("equivariance of decompose") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ElasticityTensor e = seeded_elasticity(seed);
    const Rotation q = random_rotation(seed + 31);
    const HarmonicParts rot_then = decompose(rotate_elast(q, e));
    const HarmonicParts then_rot = rotate_parts(q, decompose(e));
    CHECK(std::abs(rot_then.lambda - then_rot.lambda) < 1e-12);
    CHECK(std::abs(rot_then.mu - then_rot.mu) < 1e-12);
    CHECK((rot_then.d1 - then_rot.d1).norm() < 1e-10);
    CHECK((rot_then.d2 - then_rot.d2).norm() < 1e-10);
    CHECK((rot_then.a - then_rot.a).norm() < 1e-10);
  }
}

TEST_CASE("composed-term geometry: isotypic blocks orthogonal, exact cross terms inside") {
  // The three isotypic components (isotropic {lambda, mu}, deviatoric
  // {D1, D2}, harmonic A) are mutually L2-orthogonal. The two terms inside
  // each non-harmonic block are not: their cross products are 6 lambda mu
  // and 8 <D1, D2> exactly, so a naive five-term Pythagoras fails by
  // 12 lambda mu + 16 <D1, D2>.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ElasticityTensor e = seeded_elasticity(seed);
    const HarmonicParts p = decompose(e);
    HarmonicParts iso = {}, dev = {}, harm = {};
    iso.lambda = p.lambda;
    iso.mu = p.mu;
    dev.d1 = p.d1;
    dev.d2 = p.d2;
    harm.a = p.a;
    const double n_iso = compose(iso).norm();
    const double n_dev = compose(dev).norm();
    const double n_harm = compose(harm).norm();
    const double total = e.norm() * e.norm();
    const double sum3 = n_iso * n_iso + n_dev * n_dev + n_harm * n_harm;
    CHECK(std::abs(total - sum3) < 1e-10 * (1 + total));

    HarmonicParts lam = {}, mu = {}, dd1 = {}, dd2 = {};
    lam.lambda = p.lambda;
    mu.mu = p.mu;
    dd1.d1 = p.d1;
    dd2.d2 = p.d2;
    const double nl = compose(lam).norm(), nm = compose(mu).norm();
    const double cross_iso = n_iso * n_iso - nl * nl - nm * nm;
    CHECK(cross_iso == doctest::Approx(12 * p.lambda * p.mu).epsilon(1e-10));

    double d1_dot_d2 = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) d1_dot_d2 += p.d1(i, j) * p.d2(i, j);
    const double n1 = compose(dd1).norm(), n2 = compose(dd2).norm();
    const double cross_dev = n_dev * n_dev - n1 * n1 - n2 * n2;
    CHECK(cross_dev == doctest::Approx(8 * d1_dot_d2).epsilon(1e-10));
  }
}
