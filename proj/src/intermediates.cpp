#include "elastinv/intermediates.hpp"

#include "elastinv/detail/contract.hpp"

namespace elastinv {

namespace {

detail::Mat3T<double> to_mat(const Sym2& s) {
  detail::Mat3T<double> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = s(i, j);
  return m;
}

Sym2 from_mat(const detail::Mat3T<double>& m) {
  return Sym2{{m[0][0], m[1][1], m[2][2], m[1][2], m[0][2], m[0][1]}};
}

}  // namespace

void compute_intermediates_and_j(const HarmonicParts& parts, IntermediateSet& out_t,
                                 JInvariants& out_j) {
  const auto r = detail::compute_all<double>(parts.a.c, to_mat(parts.d1), to_mat(parts.d2));
  out_t.d1 = from_mat(r.d1);
  out_t.d2 = from_mat(r.d2);
  out_t.b = from_mat(r.b);
  out_t.c = from_mat(r.c);
  out_t.d = from_mat(r.d);
  out_t.f = from_mat(r.f);
  out_t.g = from_mat(r.g);
  out_t.h = from_mat(r.h);
  out_t.k = from_mat(r.k);
  out_t.m = from_mat(r.m);
  out_t.n = from_mat(r.n);
  out_j.j = r.j;
}

IntermediateSet compute_intermediates(const HarmonicParts& parts) {
  IntermediateSet t;
  JInvariants j;
  compute_intermediates_and_j(parts, t, j);
  return t;
}

JInvariants compute_j(const Harm4& a) {
  HarmonicParts p;
  p.a = a;
  IntermediateSet t;
  JInvariants j;
  compute_intermediates_and_j(p, t, j);
  return j;
}

}  // namespace elastinv
