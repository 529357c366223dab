#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elastinv/core.hpp"

#include <cmath>
#include <random>

using namespace elastinv;

namespace {

Sym2 seeded_sym2(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Sym2 s;
  for (auto& x : s.v) x = u(rng);
  return s;
}

Harm4 seeded_harm4(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Harm4 a;
  for (auto& x : a.c) x = u(rng);
  return a;
}

std::array<double, 3> sorted_eigenvalues(const Sym2& s) {
  Eigen::SelfAdjointEigenSolver<Mat3> es(s.to_matrix());
  return {es.eigenvalues()(0), es.eigenvalues()(1), es.eigenvalues()(2)};
}

}  // namespace

TEST_CASE("rotate_sym2 basics") {
  const Sym2 t = Sym2::diag(1, 2, 3);
  const Sym2 same = rotate_sym2(Rotation::identity(), t);
  for (int i = 0; i < 6; ++i) CHECK(same.v[i] == doctest::Approx(t.v[i]).epsilon(1e-15));

  // pi about axis 3 fixes any diagonal tensor
  const Sym2 r = rotate_sym2(Rotation::about_axis(2, M_PI), t);
  for (int i = 0; i < 6; ++i) CHECK(r.v[i] == doctest::Approx(t.v[i]).epsilon(1e-12));
}

TEST_CASE("rotate_sym2 preserves eigenvalues") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    const Sym2 t = seeded_sym2(seed);
    const Sym2 r = rotate_sym2(random_rotation(seed + 100), t);
    const auto e1 = sorted_eigenvalues(t);
    const auto e2 = sorted_eigenvalues(r);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(e1[i] - e2[i]) < 1e-10);
  }
}

TEST_CASE("rotate_harm4 identity and zero") {
  const Harm4 a = seeded_harm4(7);
  const Harm4 same = rotate_harm4(Rotation::identity(), a);
  for (int i = 0; i < 9; ++i) CHECK(same.c[i] == doctest::Approx(a.c[i]).epsilon(1e-15));

  const Harm4 z = rotate_harm4(random_rotation(3), Harm4::zero());
  for (double x : z.c) CHECK(x == 0.0);
}

TEST_CASE("rotate_harm4 follows the in-plane law on the A1122/A2222 family") {
  // family A1122 = alpha, A2222 = -2 alpha, A1111 = beta, A1113 = gamma;
  // a 1-3-plane rotation by theta maps
  //   A1111 -> (beta + 3a/4) cos 4t - gamma sin 4t - 3a/4
  //   A1113 -> gamma cos 4t + (beta + 3a/4) sin 4t
  const double alpha = 0.9, beta = -0.3, gamma = 0.7;
  Harm4 a;
  a.c = {beta, 0, gamma, alpha, 0, 0, 0, -2 * alpha, 0};
  for (double theta : {0.17, 0.5, 1.2, -0.8}) {
    const Harm4 r = rotate_harm4(rotation_in_plane_13(theta), a);
    const double c4 = std::cos(4 * theta), s4 = std::sin(4 * theta);
    const double want1111 = (beta + 0.75 * alpha) * c4 - gamma * s4 - 0.75 * alpha;
    const double want1113 = gamma * c4 + (beta + 0.75 * alpha) * s4;
    CHECK(r.c[0] == doctest::Approx(want1111).epsilon(1e-12));
    CHECK(r.c[2] == doctest::Approx(want1113).epsilon(1e-12));
    CHECK(r.c[3] == doctest::Approx(alpha).epsilon(1e-12));   // A1122 fixed
    CHECK(r.c[7] == doctest::Approx(-2 * alpha).epsilon(1e-12));
    CHECK(std::abs(r.c[1]) < 1e-12);  // A1112 stays zero
    CHECK(std::abs(r.c[4]) < 1e-12);  // A1123 stays zero
  }
}

TEST_CASE("rotation group action and inverse action") {
  const Sym2 t = seeded_sym2(11);
  const Harm4 a = seeded_harm4(12);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Rotation q1 = random_rotation(seed);
    const Rotation q2 = random_rotation(seed + 50);
    const Sym2 lhs = rotate_sym2(q1, rotate_sym2(q2, t));
    const Sym2 rhs = rotate_sym2(q1 * q2, t);
    CHECK((lhs - rhs).norm() < 1e-10);

    const Harm4 la = rotate_harm4(q1, rotate_harm4(q2, a));
    const Harm4 ra = rotate_harm4(q1 * q2, a);
    CHECK((la - ra).norm() < 1e-10);

    const Sym2 back = rotate_sym2(q1.transposed(), rotate_sym2(q1, t));
    CHECK((back - t).norm() < 1e-10);
  }
}

TEST_CASE("rotated harmonic tensors stay harmonic") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Harm4 a = seeded_harm4(seed);
    const Harm4 r = rotate_harm4(random_rotation(seed + 9), a);
    const auto check = is_harmonic4(expand(r), 1e-12);
    CHECK(check.ok);
  }
}

TEST_CASE("trace_product") {
  const Sym2 d = Sym2::diag(1, 2, 3);
  CHECK(trace_product({{d, 1}}) == doctest::Approx(6.0));
  CHECK(trace_product({{d, 2}}) == doctest::Approx(14.0));
  CHECK_THROWS_AS(trace_product({}), std::invalid_argument);

  // index-summation oracle for tr(T1 T2 T3)
  const Sym2 t1 = seeded_sym2(21), t2 = seeded_sym2(22), t3 = seeded_sym2(23);
  double want = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) want += t1(i, j) * t2(j, k) * t3(k, i);
  CHECK(trace_product({{t1, 1}, {t2, 1}, {t3, 1}}) == doctest::Approx(want).epsilon(1e-12));

  // cyclic invariance
  const double v1 = trace_product({{t1, 1}, {t2, 1}, {t3, 1}});
  const double v2 = trace_product({{t2, 1}, {t3, 1}, {t1, 1}});
  const double v3 = trace_product({{t3, 1}, {t1, 1}, {t2, 1}});
  CHECK(v1 == doctest::Approx(v2).epsilon(1e-12));
  CHECK(v1 == doctest::Approx(v3).epsilon(1e-12));
}

TEST_CASE("random_rotation determinism and orthogonality") {
  for (std::uint64_t seed : {0u, 1u, 42u, 1234567u}) {
    const Rotation q1 = random_rotation(seed);
    const Rotation q2 = random_rotation(seed);
    CHECK((q1.m - q2.m).cwiseAbs().maxCoeff() == 0.0);
    CHECK(q1.orthogonality_defect() < 1e-12);
    CHECK(std::abs(q1.m.determinant() - 1.0) < 1e-12);
  }
}

TEST_CASE("random_rotation is Haar-like: mean of Q11 near zero") {
  double sum = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) sum += random_rotation(i).m(0, 0);
  CHECK(std::abs(sum / n) < 0.05);
}

TEST_CASE("is_harmonic4") {
  CHECK(is_harmonic4(expand(Harm4::zero()), 1e-12).ok);

  Harm4 a;
  a.c[0] = 1.0;  // closure supplies the traceless completion
  CHECK(is_harmonic4(expand(a), 1e-12).ok);

  // closure holds for random independent components
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    CHECK(is_harmonic4(expand(seeded_harm4(seed)), 1e-12).ok);

  // perturbing the A1122 multiset value after closure (all six permutation
  // slots together) keeps full symmetry but breaks a trace, and the report
  // names the violated trace
  Tensor4 t = expand(seeded_harm4(3));
  const double tol = 1e-10;
  const double bump = 10 * tol * t.norm();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          int idx[4] = {i, j, k, l};
          std::sort(idx, idx + 4);
          if (idx[0] == 0 && idx[1] == 0 && idx[2] == 1 && idx[3] == 1)
            t.at(i, j, k, l) += bump;
        }
  const auto chk = is_harmonic4(t, tol);
  CHECK(!chk.ok);
  CHECK(chk.worst.find("trace") != std::string::npos);
}

TEST_CASE("elasticity tensor symmetry and isotropic entries") {
  const ElasticityTensor e = ElasticityTensor::isotropic(2.0, 3.0);
  CHECK(e.voigt(0, 0) == doctest::Approx(8.0));   // lambda + 2 mu
  CHECK(e.voigt(0, 1) == doctest::Approx(2.0));   // lambda
  CHECK(e.voigt(3, 3) == doctest::Approx(3.0));   // mu
  CHECK(e.component(0, 0, 0, 0) == doctest::Approx(8.0));
  CHECK(e.component(1, 2, 1, 2) == doctest::Approx(3.0));
  CHECK(e.component(1, 2, 2, 1) == doctest::Approx(3.0));  // minor symmetry

  const Rotation q = random_rotation(5);
  const ElasticityTensor r = rotate_elast(q, e);
  CHECK((r - e).norm() < 1e-12 * e.norm());  // isotropic tensors are fixed points
}

TEST_CASE("rotate_elast identity") {
  ElasticityTensor e;
  for (int i = 0; i < 21; ++i) e.c[i] = 0.1 * (i + 1);
  const ElasticityTensor r = rotate_elast(Rotation::identity(), e);
  CHECK((r - e).norm() < 1e-14);
}
