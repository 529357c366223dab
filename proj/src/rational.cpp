#include "elastinv/rational.hpp"

#include <random>

namespace elastinv {

namespace {

detail::Mat3T<Rat> deviator_from5(const std::array<Rat, 5>& d) {
  // order [t11, t22, t23, t13, t12], t33 = -t11 - t22
  detail::Mat3T<Rat> m = detail::mat_zero<Rat>();
  m[0][0] = d[0];
  m[1][1] = d[1];
  m[2][2] = -d[0] - d[1];
  m[1][2] = m[2][1] = d[2];
  m[0][2] = m[2][0] = d[3];
  m[0][1] = m[1][0] = d[4];
  return m;
}

}  // namespace

RationalAssignment sample_point(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545F4914F6CDD1DULL);
  std::uniform_int_distribution<int> num(-9999, 9999);
  std::uniform_int_distribution<int> den(1, 9999);
  auto draw = [&]() {
    Rat q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  RationalAssignment p;
  for (auto& x : p.a) x = draw();
  for (auto& x : p.d1) x = draw();
  for (auto& x : p.d2) x = draw();
  return p;
}

RatInters compute_intermediates_exact(const RationalAssignment& p) {
  return detail::compute_all<Rat>(p.a, deviator_from5(p.d1), deviator_from5(p.d2));
}

Rat evaluate_descriptor_exact(const InvariantDescriptor& d, const RatInters& t) {
  if (d.is_scalar) {
    switch (d.scalar) {
      case Scal::Lambda:
      case Scal::Mu:
        return Rat(0);  // fixed to zero in the 19-parameter sample space
      default:
        return t.j[static_cast<int>(d.scalar) - static_cast<int>(Scal::J2)];
    }
  }
  const std::array<const detail::Mat3T<Rat>*, 11> tensors = {
      &t.d1, &t.d2, &t.b, &t.c, &t.d, &t.f, &t.g, &t.h, &t.k, &t.m, &t.n};
  detail::Mat3T<Rat> acc = detail::mat_zero<Rat>();
  acc[0][0] = acc[1][1] = acc[2][2] = Rat(1);
  for (const auto& f : d.word) {
    const auto& m = *tensors[static_cast<int>(f.t)];
    for (int pw = 0; pw < f.pow; ++pw) acc = detail::mat_mul(acc, m);
  }
  return detail::mat_trace(acc);
}

HarmonicParts to_parts(const RationalAssignment& p) {
  HarmonicParts out;
  for (int i = 0; i < 9; ++i) out.a.c[i] = p.a[i].get_d();
  auto fill = [](const std::array<Rat, 5>& d, Sym2& s) {
    s.v[0] = d[0].get_d();
    s.v[1] = d[1].get_d();
    s.v[2] = Rat(-d[0] - d[1]).get_d();
    s.v[3] = d[2].get_d();
    s.v[4] = d[3].get_d();
    s.v[5] = d[4].get_d();
  };
  fill(p.d1, out.d1);
  fill(p.d2, out.d2);
  return out;
}

}  // namespace elastinv
