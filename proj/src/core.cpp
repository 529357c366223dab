#include "elastinv/core.hpp"

#include "elastinv/detail/contract.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace elastinv {

int Sym2::index(int i, int j) {
  if (i == j) return i;
  const int s = i + j;     // (1,2)->3, (0,2)->2, (0,1)->1
  return s == 3 ? 3 : (s == 2 ? 4 : 5);
}

Sym2 Sym2::from_matrix(const Mat3& m) {
  return Sym2{{m(0, 0), m(1, 1), m(2, 2), m(1, 2), m(0, 2), m(0, 1)}};
}

Mat3 Sym2::to_matrix() const {
  Mat3 m;
  m << v[0], v[5], v[4], v[5], v[1], v[3], v[4], v[3], v[2];
  return m;
}

Sym2 Sym2::deviator() const {
  const double t = trace() / 3.0;
  Sym2 r = *this;
  r.v[0] -= t;
  r.v[1] -= t;
  r.v[2] -= t;
  return r;
}

double Sym2::norm() const {
  double s = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  s += 2.0 * (v[3] * v[3] + v[4] * v[4] + v[5] * v[5]);
  return std::sqrt(s);
}

Sym2 Sym2::operator+(const Sym2& o) const {
  Sym2 r;
  for (int i = 0; i < 6; ++i) r.v[i] = v[i] + o.v[i];
  return r;
}
Sym2 Sym2::operator-(const Sym2& o) const {
  Sym2 r;
  for (int i = 0; i < 6; ++i) r.v[i] = v[i] - o.v[i];
  return r;
}
Sym2 Sym2::operator*(double s) const {
  Sym2 r;
  for (int i = 0; i < 6; ++i) r.v[i] = v[i] * s;
  return r;
}

double Harm4::operator()(int i, int j, int k, int l) const {
  return multiset_values()[detail::multiset_index(i, j, k, l)];
}

std::array<double, 15> Harm4::multiset_values() const { return detail::expand9(c); }

Harm4 Harm4::operator+(const Harm4& o) const {
  Harm4 r;
  for (int i = 0; i < 9; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}
Harm4 Harm4::operator-(const Harm4& o) const {
  Harm4 r;
  for (int i = 0; i < 9; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}
Harm4 Harm4::operator*(double s) const {
  Harm4 r;
  for (int i = 0; i < 9; ++i) r.c[i] = c[i] * s;
  return r;
}

double Harm4::norm() const { return expand(*this).norm(); }

double Tensor4::norm() const {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

Tensor4 expand(const Harm4& a) {
  const auto m = a.multiset_values();
  Tensor4 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) t.at(i, j, k, l) = m[detail::multiset_index(i, j, k, l)];
  return t;
}

Harm4Check is_harmonic4(const Tensor4& t, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("is_harmonic4: tol must be positive");
  Harm4Check r;
  r.ok = true;
  const double scale = t.norm();
  auto note = [&](double viol, const std::string& what) {
    if (viol > r.max_violation) {
      r.max_violation = viol;
      r.worst = what;
    }
  };
  // full symmetry: every component equals its sorted-multiset representative
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          int s[4] = {i, j, k, l};
          std::sort(s, s + 4);
          const double rep = t(s[0], s[1], s[2], s[3]);
          const double viol = std::abs(t(i, j, k, l) - rep);
          if (viol > 0)
            note(viol, "symmetry at (" + std::to_string(i + 1) + std::to_string(j + 1) +
                           std::to_string(k + 1) + std::to_string(l + 1) + ")");
        }
  // traces: T_iikl = 0
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      double tr = 0;
      for (int i = 0; i < 3; ++i) tr += t(i, i, k, l);
      note(std::abs(tr), "trace (" + std::to_string(k + 1) + "," + std::to_string(l + 1) + ")");
    }
  r.ok = r.max_violation <= tol * scale;
  return r;
}

Rotation Rotation::about_axis(int axis, double angle) {
  Rotation r;
  r.m = Eigen::AngleAxisd(angle, Mat3::Identity().col(axis)).toRotationMatrix();
  return r;
}

double Rotation::orthogonality_defect() const {
  return (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff();
}

Rotation rotation_in_plane_13(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Rotation r;
  r.m << c, 0, -s, 0, 1, 0, s, 0, c;
  return r;
}

Rotation random_rotation(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double q[4];
  double n2 = 0;
  do {
    n2 = 0;
    for (double& x : q) {
      x = gauss(rng);
      n2 += x * x;
    }
  } while (n2 < 1e-12);
  const double inv = 1.0 / std::sqrt(n2);
  const double w = q[0] * inv, x = q[1] * inv, y = q[2] * inv, z = q[3] * inv;
  Rotation r;
  r.m << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return r;
}

Sym2 rotate_sym2(const Rotation& q, const Sym2& t) {
  return Sym2::from_matrix(q.m * t.to_matrix() * q.m.transpose());
}

Harm4 rotate_harm4(const Rotation& q, const Harm4& a) {
  const Tensor4 t = expand(a);
  // two-index slots suffice: the independent components all have indices in
  // {1,2} for the first three slots, so rotate fully and read them off
  auto rot = [&](int i, int j, int k, int l) {
    double s = 0;
    for (int p = 0; p < 3; ++p)
      for (int r = 0; r < 3; ++r)
        for (int u = 0; u < 3; ++u)
          for (int w = 0; w < 3; ++w)
            s += q.m(i, p) * q.m(j, r) * q.m(k, u) * q.m(l, w) * t(p, r, u, w);
    return s;
  };
  Harm4 out;
  out.c = {rot(0, 0, 0, 0), rot(0, 0, 0, 1), rot(0, 0, 0, 2), rot(0, 0, 1, 1), rot(0, 0, 1, 2),
           rot(0, 1, 1, 1), rot(0, 1, 1, 2), rot(1, 1, 1, 1), rot(1, 1, 1, 2)};
  return out;
}

ElasticityTensor ElasticityTensor::isotropic(double lambda, double mu) {
  ElasticityTensor e;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) e.voigt_at(i, j) = (i == j) ? lambda + 2 * mu : lambda;
  for (int i = 3; i < 6; ++i) e.voigt_at(i, i) = mu;
  return e;
}

int ElasticityTensor::voigt_index(int i, int j) {
  if (i > j) std::swap(i, j);
  // row-major upper triangle of 6x6
  return i * 6 - i * (i + 1) / 2 + j;
}

std::pair<int, int> ElasticityTensor::voigt_pair(int i) {
  static constexpr std::pair<int, int> p[6] = {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}};
  return p[i];
}

namespace {
int pair_to_voigt(int i, int j) {
  if (i == j) return i;
  const int s = i + j;
  return s == 3 ? 3 : (s == 2 ? 4 : 5);
}
}  // namespace

double ElasticityTensor::component(int i, int j, int k, int l) const {
  return voigt(pair_to_voigt(i, j), pair_to_voigt(k, l));
}

ElasticityTensor ElasticityTensor::operator+(const ElasticityTensor& o) const {
  ElasticityTensor r;
  for (int i = 0; i < 21; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}
ElasticityTensor ElasticityTensor::operator-(const ElasticityTensor& o) const {
  ElasticityTensor r;
  for (int i = 0; i < 21; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}
ElasticityTensor ElasticityTensor::operator*(double s) const {
  ElasticityTensor r;
  for (int i = 0; i < 21; ++i) r.c[i] = c[i] * s;
  return r;
}

double ElasticityTensor::norm() const {
  // multiplicity of the 81 full-tensor slots behind each Voigt entry
  double s = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) {
      const double mi = i < 3 ? 1.0 : 2.0;
      const double mj = j < 3 ? 1.0 : 2.0;
      const double w = mi * mj * (i == j ? 1.0 : 2.0);
      s += w * voigt(i, j) * voigt(i, j);
    }
  return std::sqrt(s);
}

ElasticityTensor rotate_elast(const Rotation& q, const ElasticityTensor& e) {
  ElasticityTensor out;
  for (int vi = 0; vi < 6; ++vi)
    for (int vj = vi; vj < 6; ++vj) {
      const auto [i, j] = ElasticityTensor::voigt_pair(vi);
      const auto [k, l] = ElasticityTensor::voigt_pair(vj);
      double s = 0;
      for (int p = 0; p < 3; ++p)
        for (int r = 0; r < 3; ++r)
          for (int u = 0; u < 3; ++u)
            for (int w = 0; w < 3; ++w)
              s += q.m(i, p) * q.m(j, r) * q.m(k, u) * q.m(l, w) * e.component(p, r, u, w);
      out.voigt_at(vi, vj) = s;
    }
  return out;
}

double trace_product(const std::vector<std::pair<Sym2, int>>& factors) {
  if (factors.empty()) throw std::invalid_argument("trace_product: empty factor list");
  if (factors.size() > 3) throw std::invalid_argument("trace_product: more than 3 factors");
  Mat3 acc = Mat3::Identity();
  for (const auto& [t, pow] : factors) {
    if (pow < 1 || pow > 3) throw std::invalid_argument("trace_product: power out of range");
    const Mat3 m = t.to_matrix();
    for (int p = 0; p < pow; ++p) acc = acc * m;
  }
  return acc.trace();
}

}  // namespace elastinv
