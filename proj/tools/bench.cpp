// Benchmark comparing the OpenMP kernels against their serial references:
// batch fingerprint evaluation and exact-rational sample evaluation.

#include "elastinv/fingerprint.hpp"
#include "elastinv/relations.hpp"

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace elastinv;
using clk = std::chrono::steady_clock;

namespace {

double seconds_since(clk::time_point t0) {
  return std::chrono::duration<double>(clk::now() - t0).count();
}

ElasticityTensor seeded_tensor(std::uint64_t seed) {
  HarmonicParts p;
  p.lambda = 1.0 + 0.1 * static_cast<double>(seed % 7);
  p.mu = 0.5 + 0.05 * static_cast<double>(seed % 5);
  const Rotation q = random_rotation(seed);
  for (int i = 0; i < 9; ++i) p.a.c[i] = q.m((i * 2) % 3, (i * 5) % 3) * 0.8 + 0.1 * i;
  for (int i = 0; i < 6; ++i) {
    p.d1.v[i] = q.m(i % 3, (i + 1) % 3) * 0.6;
    p.d2.v[i] = q.m((i + 2) % 3, i % 3) * 0.4;
  }
  p.d1 = p.d1.deviator();
  p.d2 = p.d2.deviator();
  return compose(p);
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 2000;
  int m = argc > 2 ? std::atoi(argv[2]) : 200;

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  std::vector<ElasticityTensor> es;
  es.reserve(n);
  for (int i = 0; i < n; ++i) es.push_back(seeded_tensor(i));

  std::printf("\nfingerprint batch, %d tensors x 251 invariants\n", n);
  auto t0 = clk::now();
  const auto serial = evaluate_fingerprints_serial(es);
  const double ts = seconds_since(t0);
  t0 = clk::now();
  const auto parallel = evaluate_fingerprints(es);
  const double tp = seconds_since(t0);
  double max_diff = 0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < kFingerprintSize; ++k)
      max_diff = std::max(max_diff, std::abs(serial[i].values[k] - parallel[i].values[k]));
  std::printf("  serial   %8.3f s  (%.1f us/tensor)\n", ts, 1e6 * ts / n);
  std::printf("  parallel %8.3f s  (%.1f us/tensor)  speedup %.2fx  max|diff| %g\n", tp,
              1e6 * tp / n, ts / tp, max_diff);

  std::printf("\nexact-rational sample rows, %d samples (degree-3 joints)\n", m);
  const Target target = target_trace(Tens::B);
  const auto joints = build_joints(3);
  t0 = clk::now();
  const auto rows_s = evaluate_samples_serial(target, joints, m, 42);
  const double rs = seconds_since(t0);
  t0 = clk::now();
  const auto rows_p = evaluate_samples(target, joints, m, 42);
  const double rp = seconds_since(t0);
  bool equal = rows_s == rows_p;
  std::printf("  serial   %8.3f s  (%.2f ms/sample)\n", rs, 1e3 * rs / m);
  std::printf("  parallel %8.3f s  (%.2f ms/sample)  speedup %.2fx  exact match: %s\n", rp,
              1e3 * rp / m, rs / rp, equal ? "yes" : "NO");
  return equal ? 0 : 1;
}
