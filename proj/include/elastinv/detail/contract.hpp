// detail/contract.hpp
// Scalar-generic contraction engine shared by the double-precision invariant
// evaluator and the exact-rational relations module. A harmonic fourth-order
// tensor enters as its 15 multiset values (expanded once from the 9 stored
// components); every contraction then runs over the full 81-component
// representation, which keeps symmetry bookkeeping out of the formulas.

#pragma once

#include <array>
#include <cstddef>

namespace elastinv::detail {

// Multiset order for the 15 independent values of a fully symmetric tensor:
//   0:1111 1:1112 2:1113 3:1122 4:1123 5:1133 6:1222 7:1223
//   8:1233 9:1333 10:2222 11:2223 12:2233 13:2333 14:3333
constexpr int multiset_index(int i, int j, int k, int l) {
  int n1 = (i == 0) + (j == 0) + (k == 0) + (l == 0);
  int n2 = (i == 1) + (j == 1) + (k == 1) + (l == 1);
  // lexicographic rank of the sorted multiset
  constexpr int tab[5][5] = {
      // n1 = 0: multisets of {2,3} only: 2222, 2223, 2233, 2333, 3333
      {14, 13, 12, 11, 10},
      // n1 = 1: 1333, 1233, 1223, 1222
      {9, 8, 7, 6, -1},
      // n1 = 2: 1133, 1123, 1122
      {5, 4, 3, -1, -1},
      // n1 = 3: 1113, 1112
      {2, 1, -1, -1, -1},
      // n1 = 4: 1111
      {0, -1, -1, -1, -1}};
  return tab[n1][n2];
}

/// Expand the 9 stored harmonic components
/// [A1111,A1112,A1113,A1122,A1123,A1222,A1223,A2222,A2223] to all 15
/// multiset values using the trace-closure identities.
template <class T>
std::array<T, 15> expand9(const std::array<T, 9>& a) {
  std::array<T, 15> m{};
  m[0] = a[0];
  m[1] = a[1];
  m[2] = a[2];
  m[3] = a[3];
  m[4] = a[4];
  m[5] = -a[0] - a[3];        // 1133
  m[6] = a[5];
  m[7] = a[6];
  m[8] = -a[1] - a[5];        // 1233
  m[9] = -a[2] - a[6];        // 1333
  m[10] = a[7];
  m[11] = a[8];
  m[12] = -a[3] - a[7];       // 2233
  m[13] = -a[4] - a[8];       // 2333
  m[14] = a[0] + T(2) * a[3] + a[7];  // 3333
  return m;
}

template <class T>
using Mat3T = std::array<std::array<T, 3>, 3>;

template <class T>
struct Harm4T {
  std::array<T, 15> m{};
  const T& operator()(int i, int j, int k, int l) const { return m[multiset_index(i, j, k, l)]; }
};

template <class T>
Mat3T<T> mat_zero() {
  return Mat3T<T>{{{T(0), T(0), T(0)}, {T(0), T(0), T(0)}, {T(0), T(0), T(0)}}};
}

template <class T>
Mat3T<T> mat_mul(const Mat3T<T>& x, const Mat3T<T>& y) {
  Mat3T<T> r = mat_zero<T>();
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) r[i][j] += x[i][k] * y[k][j];
  return r;
}

template <class T>
T mat_trace(const Mat3T<T>& x) {
  return x[0][0] + x[1][1] + x[2][2];
}

template <class T>
T mat_dot(const Mat3T<T>& x, const Mat3T<T>& y) {
  T s(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += x[i][j] * y[i][j];
  return s;
}

/// B_ij = A_iklm A_jklm
template <class T>
Mat3T<T> contract_bb(const Harm4T<T>& a) {
  Mat3T<T> r = mat_zero<T>();
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      T s(0);
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          for (int m = 0; m < 3; ++m) s += a(i, k, l, m) * a(j, k, l, m);
      r[i][j] = s;
      r[j][i] = s;
    }
  return r;
}

/// A_ijkl S_kl
template <class T>
Mat3T<T> contract_2(const Harm4T<T>& a, const Mat3T<T>& s) {
  Mat3T<T> r = mat_zero<T>();
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      T acc(0);
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) acc += a(i, j, k, l) * s[k][l];
      r[i][j] = acc;
      r[j][i] = acc;
    }
  return r;
}

/// A_ipql A_jpqm S_lm
template <class T>
Mat3T<T> contract_hh(const Harm4T<T>& a, const Mat3T<T>& s) {
  Mat3T<T> r = mat_zero<T>();
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      T acc(0);
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
          for (int l = 0; l < 3; ++l)
            for (int m = 0; m < 3; ++m) acc += a(i, p, q, l) * a(j, p, q, m) * s[l][m];
      r[i][j] = acc;
      r[j][i] = acc;
    }
  return r;
}

/// X_ik X_jk (Gram square of a symmetric matrix)
template <class T>
Mat3T<T> gram_square(const Mat3T<T>& x) {
  return mat_mul(x, x);
}

/// The 11 intermediate tensors of the recovery construction plus the nine
/// scalars J2..J10, for any scalar type.
template <class T>
struct IntersT {
  Mat3T<T> d1, d2, b, c, d, f, g, h, k, m, n;
  std::array<T, 9> j{};  // J2..J10
};

/// S_ij P_ijkl T_kl with P_ijkl = A_ijmn A_klmn, evaluated without forming P.
template <class T>
T sandwich_p(const Harm4T<T>& a, const Mat3T<T>& s, const Mat3T<T>& t) {
  // S : A = contract, T : A = contract, then dot of the two A-legs:
  // S_ij A_ijmn A_klmn T_kl = (A:S)_mn (A:T)_mn
  return mat_dot(contract_2(a, s), contract_2(a, t));
}

template <class T>
IntersT<T> compute_all(const std::array<T, 9>& a9, const Mat3T<T>& d1, const Mat3T<T>& d2) {
  Harm4T<T> a{expand9(a9)};
  IntersT<T> r;
  r.d1 = d1;
  r.d2 = d2;
  r.b = contract_bb(a);
  r.c = contract_2(a, r.b);
  r.d = contract_2(a, gram_square(r.b));
  r.f = contract_2(a, d1);
  r.g = contract_2(a, d2);
  r.h = contract_hh(a, d1);
  r.k = contract_hh(a, d2);
  r.m = contract_2(a, gram_square(d1));
  r.n = contract_2(a, gram_square(d2));

  const Mat3T<T> b2 = gram_square(r.b);

  // J2 is literally tr B (same contraction object), which keeps the
  // definitional identity tr B = J2 exact in every arithmetic.
  r.j[0] = mat_trace(r.b);                 // J2
  // J3 = P_ijkl A_ijkl with P_ijkl = A_ijmn A_klmn
  {
    T acc(0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) {
            T p(0);
            for (int m = 0; m < 3; ++m)
              for (int n = 0; n < 3; ++n) p += a(i, j, m, n) * a(k, l, m, n);
            acc += p * a(i, j, k, l);
          }
    r.j[1] = acc;
  }
  r.j[2] = mat_dot(r.b, r.b);              // J4
  r.j[3] = mat_dot(r.b, contract_2(a, r.b));        // J5 = B_ij A_ijkl B_kl
  r.j[4] = sandwich_p(a, r.b, r.b);                 // J6 = B P B
  r.j[5] = mat_dot(b2, contract_2(a, r.b));         // J7 = B2 A B
  r.j[6] = sandwich_p(a, b2, r.b);                  // J8 = B2 P B
  r.j[7] = mat_dot(b2, contract_2(a, b2));          // J9 = B2 A B2
  r.j[8] = sandwich_p(a, b2, b2);                   // J10 = B2 P B2
  return r;
}

}  // namespace elastinv::detail
