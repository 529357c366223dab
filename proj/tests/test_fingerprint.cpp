#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elastinv/fingerprint.hpp"

#include <cmath>
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

// ---- brute-force oracle, independent of the library contraction path ----

using Full4 = std::array<std::array<std::array<std::array<double, 3>, 3>, 3>, 3>;
using M3 = std::array<std::array<double, 3>, 3>;

Full4 full_from_harm4(const std::array<double, 9>& c) {
  // independent closure: assign the 9 slots, complete by tracelessness,
  // then spread by full symmetry
  double ms[3][3][3][3] = {};
  auto set = [&](int i, int j, int k, int l, double v) {
    int idx[4] = {i, j, k, l};
    std::sort(idx, idx + 4);
    ms[idx[0]][idx[1]][idx[2]][idx[3]] = v;
  };
  set(0, 0, 0, 0, c[0]);
  set(0, 0, 0, 1, c[1]);
  set(0, 0, 0, 2, c[2]);
  set(0, 0, 1, 1, c[3]);
  set(0, 0, 1, 2, c[4]);
  set(0, 1, 1, 1, c[5]);
  set(0, 1, 1, 2, c[6]);
  set(1, 1, 1, 1, c[7]);
  set(1, 1, 1, 2, c[8]);
  set(0, 0, 2, 2, -c[0] - c[3]);
  set(1, 1, 2, 2, -c[3] - c[7]);
  set(2, 2, 2, 2, c[0] + 2 * c[3] + c[7]);
  set(0, 1, 2, 2, -c[1] - c[5]);
  set(0, 2, 2, 2, -c[2] - c[6]);
  set(1, 2, 2, 2, -c[4] - c[8]);
  Full4 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          int idx[4] = {i, j, k, l};
          std::sort(idx, idx + 4);
          out[i][j][k][l] = ms[idx[0]][idx[1]][idx[2]][idx[3]];
        }
  return out;
}

struct OracleData {
  M3 t[11];        // D1 D2 B C D F G H K M N
  double j[9];     // J2..J10
  double lambda, mu;
};

OracleData oracle_intermediates(const HarmonicParts& p) {
  OracleData o{};
  o.lambda = p.lambda;
  o.mu = p.mu;
  const Full4 A = full_from_harm4(p.a.c);
  M3 d1{}, d2{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      d1[i][j] = p.d1(i, j);
      d2[i][j] = p.d2(i, j);
    }
  M3 B{}, C{}, D{}, F{}, G{}, H{}, K{}, M{}, N{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          for (int m = 0; m < 3; ++m) B[i][j] += A[i][k][l][m] * A[j][k][l][m];
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          F[i][j] += A[i][j][k][l] * d1[k][l];
          G[i][j] += A[i][j][k][l] * d2[k][l];
          for (int m = 0; m < 3; ++m) {
            M[i][j] += A[i][j][k][l] * d1[k][m] * d1[l][m];
            N[i][j] += A[i][j][k][l] * d2[k][m] * d2[l][m];
          }
        }
      for (int pq = 0; pq < 9; ++pq) {
        const int pp = pq / 3, qq = pq % 3;
        for (int l = 0; l < 3; ++l)
          for (int m = 0; m < 3; ++m) {
            H[i][j] += A[i][pp][qq][l] * A[j][pp][qq][m] * d1[l][m];
            K[i][j] += A[i][pp][qq][l] * A[j][pp][qq][m] * d2[l][m];
          }
      }
    }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          C[i][j] += A[i][j][k][l] * B[k][l];
          for (int m = 0; m < 3; ++m) D[i][j] += A[i][j][k][l] * B[k][m] * B[l][m];
        }
  M3 B2{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) B2[i][j] += B[i][k] * B[j][k];
  auto P = [&](int i, int j, int k, int l) {
    double s = 0;
    for (int m = 0; m < 3; ++m)
      for (int n = 0; n < 3; ++n) s += A[i][j][m][n] * A[k][l][m][n];
    return s;
  };
  double J[9] = {};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      J[0] += A[i][j][0][0] * A[i][j][0][0];  // recomputed fully below
    }
  J[0] = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          J[0] += A[i][j][k][l] * A[i][j][k][l];
          J[1] += P(i, j, k, l) * A[i][j][k][l];
          J[3] += B[i][j] * A[i][j][k][l] * B[k][l];
          J[4] += B[i][j] * P(i, j, k, l) * B[k][l];
          J[5] += B2[i][j] * A[i][j][k][l] * B[k][l];
          J[6] += B2[i][j] * P(i, j, k, l) * B[k][l];
          J[7] += B2[i][j] * A[i][j][k][l] * B2[k][l];
          J[8] += B2[i][j] * P(i, j, k, l) * B2[k][l];
        }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) J[2] += B[i][j] * B[i][j];
  o.t[0] = d1;
  o.t[1] = d2;
  o.t[2] = B;
  o.t[3] = C;
  o.t[4] = D;
  o.t[5] = F;
  o.t[6] = G;
  o.t[7] = H;
  o.t[8] = K;
  o.t[9] = M;
  o.t[10] = N;
  std::copy(J, J + 9, o.j);
  return o;
}

double oracle_entry(const OracleData& o, const InvariantDescriptor& d) {
  if (d.is_scalar) {
    if (d.scalar == Scal::Lambda) return o.lambda;
    if (d.scalar == Scal::Mu) return o.mu;
    return o.j[static_cast<int>(d.scalar) - static_cast<int>(Scal::J2)];
  }
  M3 acc{};
  for (int i = 0; i < 3; ++i) acc[i][i] = 1.0;
  for (const auto& f : d.word)
    for (int p = 0; p < f.pow; ++p) {
      M3 next{};
      const M3& m = o.t[static_cast<int>(f.t)];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) next[i][j] += acc[i][k] * m[k][j];
      acc = next;
    }
  return acc[0][0] + acc[1][1] + acc[2][2];
}

}  // namespace

TEST_CASE("isotropic fingerprint: only the two degree-1 slots are nonzero") {
  const Fingerprint f = evaluate_fingerprint(ElasticityTensor::isotropic(2, 3));
  CHECK(f.values[0] == doctest::Approx(2.0));
  CHECK(f.values[1] == doctest::Approx(3.0));
  for (int i = 2; i < kFingerprintSize; ++i) CHECK(std::abs(f.values[i]) < 1e-12);
}

TEST_CASE("rotation invariance of every slot (sampled)") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ElasticityTensor e = seeded_elasticity(seed);
    e = e * (1.0 / e.norm());
    const ElasticityTensor r = rotate_elast(random_rotation(seed + 1000), e);
    const Fingerprint f1 = evaluate_fingerprint(e);
    const Fingerprint f2 = evaluate_fingerprint(r);
    for (int i = 0; i < kFingerprintSize; ++i) {
      const double dev = std::abs(f1.values[i] - f2.values[i]) / (1 + std::abs(f1.values[i]));
      CHECK(dev < 1e-8);
    }
  }
}

TEST_CASE("scaling the tensor scales slot d by t^d") {
  const ElasticityTensor e = seeded_elasticity(5);
  const double t = 1.7;
  const Fingerprint f1 = evaluate_fingerprint(e);
  const Fingerprint f2 = evaluate_fingerprint(e * t);
  const auto& cat = catalog251();
  for (int i = 0; i < kFingerprintSize; ++i) {
    const double want = f1.values[i] * std::pow(t, cat[i].degree);
    CHECK(std::abs(f2.values[i] - want) < 1e-10 * (1 + std::abs(want)));
  }
}

TEST_CASE("every catalog slot matches the brute-force oracle on 5 random tensors") {
  const auto& cat = catalog251();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const ElasticityTensor e = seeded_elasticity(seed + 40);
    const HarmonicParts p = decompose(e);
    const Fingerprint f = evaluate_fingerprint(e);
    const OracleData o = oracle_intermediates(p);
    for (int i = 0; i < kFingerprintSize; ++i) {
      const double want = oracle_entry(o, cat[i]);
      CHECK(std::abs(f.values[i] - want) < 1e-10 * (1 + std::abs(want)));
    }
  }
}
