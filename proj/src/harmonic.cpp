#include "elastinv/harmonic.hpp"

#include "elastinv/detail/contract.hpp"

namespace elastinv {

namespace {
double kron(int i, int j) { return i == j ? 1.0 : 0.0; }
}  // namespace

HarmonicParts HarmonicParts::operator*(double s) const {
  return {lambda * s, mu * s, d1 * s, d2 * s, a * s};
}

HarmonicParts HarmonicParts::operator+(const HarmonicParts& o) const {
  return {lambda + o.lambda, mu + o.mu, d1 + o.d1, d2 + o.d2, a + o.a};
}

ElasticityTensor compose(const HarmonicParts& p) {
  const auto am = p.a.multiset_values();
  ElasticityTensor e;
  for (int vi = 0; vi < 6; ++vi)
    for (int vj = vi; vj < 6; ++vj) {
      const auto [i, j] = ElasticityTensor::voigt_pair(vi);
      const auto [k, l] = ElasticityTensor::voigt_pair(vj);
      double s = p.lambda * kron(i, j) * kron(k, l);
      s += p.mu * (kron(i, k) * kron(l, j) + kron(i, l) * kron(k, j));
      s += kron(i, j) * p.d1(k, l) + kron(k, l) * p.d1(i, j);
      s += 0.5 * (kron(k, i) * p.d2(j, l) + kron(k, j) * p.d2(i, l) + kron(l, i) * p.d2(j, k) +
                  kron(l, j) * p.d2(i, k));
      s += am[detail::multiset_index(i, j, k, l)];
      e.voigt_at(vi, vj) = s;
    }
  return e;
}

HarmonicParts decompose(const ElasticityTensor& e) {
  // dilatational trace d_ij = E_ijkk and Voigt trace v_ij = E_ikjk
  Sym2 dil, voi;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      double sd = 0, sv = 0;
      for (int k = 0; k < 3; ++k) {
        sd += e.component(i, j, k, k);
        sv += e.component(i, k, j, k);
      }
      dil.at(i, j) = sd;
      voi.at(i, j) = sv;
    }

  HarmonicParts p;
  const double trd = dil.trace();  // 3 (3 lambda + 2 mu)
  const double trv = voi.trace();  // 3 (lambda + 4 mu)
  p.lambda = (2.0 * trd - trv) / 15.0;
  p.mu = (3.0 * trv - trd) / 30.0;

  // dev d = 3 D1 + 2 D2, dev v = 2 D1 + 5/2 D2 (determinant 7/2)
  const Sym2 devd = dil.deviator();
  const Sym2 devv = voi.deviator();
  p.d1 = (devd * 5.0 - devv * 4.0) * (1.0 / 7.0);
  p.d2 = (devv * 6.0 - devd * 4.0) * (1.0 / 7.0);

  HarmonicParts lower = p;
  lower.a = Harm4::zero();
  const ElasticityTensor rem = e - compose(lower);
  p.a.c = {rem.component(0, 0, 0, 0), rem.component(0, 0, 0, 1), rem.component(0, 0, 0, 2),
           rem.component(0, 0, 1, 1), rem.component(0, 0, 1, 2), rem.component(0, 1, 1, 1),
           rem.component(0, 1, 1, 2), rem.component(1, 1, 1, 1), rem.component(1, 1, 1, 2)};
  return p;
}

HarmonicParts rotate_parts(const Rotation& q, const HarmonicParts& p) {
  return {p.lambda, p.mu, rotate_sym2(q, p.d1), rotate_sym2(q, p.d2), rotate_harm4(q, p.a)};
}

}  // namespace elastinv
