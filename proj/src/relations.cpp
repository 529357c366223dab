#include "elastinv/relations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace elastinv {

namespace {

constexpr std::uint64_t kVerifySeedOffset = 0x5eed0ff5eULL;

std::string monomial_name(const std::vector<int>& factors) {
  const auto& cat = catalog251();
  std::map<int, int> pow;
  for (int f : factors) ++pow[f];
  std::string s;
  for (const auto& [idx, p] : pow) {
    if (!s.empty()) s += " * ";
    s += "(" + cat[idx].name + ")";
    if (p > 1) s += "^" + std::to_string(p);
  }
  return s;
}

/// Exact solve of the augmented system [A | b] over Q. Rows are cleared of
/// denominators, reduced by fraction-free Bareiss elimination (integer
/// arithmetic, no per-step gcd), and the pivot system is back-substituted
/// exactly. Returns rank(A); fills `solution` (free variables zero) when the
/// system is consistent.
int solve_exact(std::vector<std::vector<Rat>>& rows, int ncols, std::vector<Rat>& solution,
                bool& consistent) {
  const int m = static_cast<int>(rows.size());
  std::vector<std::vector<mpz_class>> z(m, std::vector<mpz_class>(ncols + 1));
  for (int i = 0; i < m; ++i) {
    mpz_class lcm(1);
    for (int j = 0; j <= ncols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                             rows[i][j].get_den().get_mpz_t());
    for (int j = 0; j <= ncols; ++j) {
      const Rat v = rows[i][j] * Rat(lcm);
      z[i][j] = v.get_num();  // denominator is 1 after scaling
    }
  }

  std::vector<int> pivot_col;
  mpz_class prev(1);
  int r = 0;
  for (int col = 0; col < ncols && r < m; ++col) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (z[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(z[r], z[piv]);
    for (int i = r + 1; i < m; ++i) {
      for (int j = col + 1; j <= ncols; ++j) {
        z[i][j] = (z[r][col] * z[i][j] - z[i][col] * z[r][j]) / prev;  // exact
      }
      z[i][col] = 0;
    }
    prev = z[r][col];
    pivot_col.push_back(col);
    ++r;
  }

  consistent = true;
  for (int i = r; i < m && consistent; ++i)
    if (z[i][ncols] != 0) consistent = false;

  solution.assign(ncols, Rat(0));
  if (consistent) {
    // back-substitute the upper-triangular pivot system exactly
    for (int i = r - 1; i >= 0; --i) {
      Rat acc(z[i][ncols]);
      for (int k = i + 1; k < r; ++k) acc -= Rat(z[i][pivot_col[k]]) * solution[pivot_col[k]];
      acc /= Rat(z[i][pivot_col[i]]);
      acc.canonicalize();
      solution[pivot_col[i]] = acc;
    }
  }
  return r;
}

Rat eval_monomial(const Monomial& mono, const std::vector<Rat>& catalog_values) {
  Rat v(1);
  for (int f : mono.factors) v *= catalog_values[f];
  return v;
}

std::vector<int> needed_indices(const std::vector<Monomial>& joints) {
  std::vector<int> idx;
  for (const auto& m : joints)
    for (int f : m.factors) idx.push_back(f);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

std::vector<Rat> catalog_values_at(const RatInters& t, const std::vector<int>& needed) {
  const auto& cat = catalog251();
  std::vector<Rat> vals(cat.size(), Rat(0));
  for (int idx : needed) vals[idx] = evaluate_descriptor_exact(cat[idx], t);
  return vals;
}

RelationReport run_relation(const Target& target, std::vector<Monomial> joints, int num_samples,
                            std::uint64_t seed, bool truncated) {
  RelationReport rep;
  rep.target = target.name;
  rep.degree = target.degree;
  rep.num_joints = static_cast<int>(joints.size());
  rep.samples = num_samples;
  rep.truncated = truncated;
  if (num_samples < static_cast<int>(joints.size()))
    throw std::invalid_argument("find_relation: num_samples below number of joints for " +
                                target.name);

  auto rows = evaluate_samples(target, joints, num_samples, seed);
  std::vector<Rat> x;
  bool consistent = false;
  rep.rank = solve_exact(rows, static_cast<int>(joints.size()), x, consistent);
  if (!consistent) return rep;

  const auto fresh = evaluate_samples(target, joints, 10, seed + kVerifySeedOffset + num_samples);
  for (const auto& row : fresh) {
    Rat lhs(0);
    for (std::size_t k = 0; k < joints.size(); ++k) lhs += x[k] * row[k];
    if (lhs != row.back()) return rep;  // spurious fit, fresh points reject it
  }
  rep.relation_found = true;
  rep.verified_points = 10;
  for (std::size_t k = 0; k < joints.size(); ++k)
    if (x[k] != 0) rep.coefficients.emplace_back(joints[k], x[k]);
  return rep;
}

}  // namespace

Target target_from_catalog(int catalog_index) {
  const auto& cat = catalog251();
  const auto& d = cat.at(catalog_index);
  return Target{d.name, d.degree, [catalog_index](const RatInters& t) {
                  return evaluate_descriptor_exact(catalog251()[catalog_index], t);
                }};
}

Target target_trace(Tens t) {
  static constexpr const char* names[11] = {"D1", "D2", "B", "C", "D", "F",
                                            "G",  "H",  "K", "M", "N"};
  const int deg = IntermediateSet::degrees()[static_cast<int>(t)];
  return Target{std::string("tr ") + names[static_cast<int>(t)], deg, [t](const RatInters& it) {
                  const std::array<const detail::Mat3T<Rat>*, 11> tensors = {
                      &it.d1, &it.d2, &it.b, &it.c, &it.d, &it.f,
                      &it.g,  &it.h,  &it.k, &it.m, &it.n};
                  return detail::mat_trace(*tensors[static_cast<int>(t)]);
                }};
}

std::vector<Monomial> build_joints(int target_degree, int exclude_index, std::size_t max_joints) {
  if (target_degree < 2) throw std::invalid_argument("build_joints: target_degree must be >= 2");
  const auto& cat = catalog251();

  // candidate factors: catalog entries of degree in [2, target_degree - 1];
  // the degree-1 entries are lambda and mu, which the sample space fixes at 0
  std::vector<int> factors;
  for (int i = 0; i < static_cast<int>(cat.size()); ++i)
    if (cat[i].degree >= 2 && cat[i].degree < target_degree) factors.push_back(i);

  std::vector<Monomial> out;
  // same-degree catalog entries first: under a joint cap these are the most
  // informative candidate columns
  for (int i = 0; i < static_cast<int>(cat.size()); ++i) {
    if (max_joints && out.size() >= max_joints) break;
    if (i != exclude_index && cat[i].degree == target_degree) {
      Monomial m;
      m.factors = {i};
      m.degree = target_degree;
      m.name = monomial_name(m.factors);
      out.push_back(std::move(m));
    }
  }
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (max_joints && out.size() >= max_joints) return;
    if (remaining == 0) {
      Monomial m;
      m.factors = cur;
      m.degree = target_degree;
      m.name = monomial_name(cur);
      out.push_back(std::move(m));
      return;
    }
    for (int i = start; i < static_cast<int>(factors.size()); ++i) {
      const int d = cat[factors[i]].degree;
      if (d > remaining) continue;
      cur.push_back(factors[i]);
      self(self, i, remaining - d);
      cur.pop_back();
    }
  };
  rec(rec, 0, target_degree);
  return out;
}

std::vector<std::vector<Rat>> evaluate_samples_serial(const Target& target,
                                                      const std::vector<Monomial>& joints,
                                                      int num_samples, std::uint64_t seed) {
  const auto needed = needed_indices(joints);
  std::vector<std::vector<Rat>> rows(num_samples);
  for (int s = 0; s < num_samples; ++s) {
    const RatInters t = compute_intermediates_exact(sample_point(seed + s));
    const auto vals = catalog_values_at(t, needed);
    auto& row = rows[s];
    row.reserve(joints.size() + 1);
    for (const auto& m : joints) row.push_back(eval_monomial(m, vals));
    row.push_back(target.eval(t));
  }
  return rows;
}

std::vector<std::vector<Rat>> evaluate_samples(const Target& target,
                                               const std::vector<Monomial>& joints,
                                               int num_samples, std::uint64_t seed) {
  const auto needed = needed_indices(joints);
  std::vector<std::vector<Rat>> rows(num_samples);
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < num_samples; ++s) {
    const RatInters t = compute_intermediates_exact(sample_point(seed + s));
    const auto vals = catalog_values_at(t, needed);
    auto& row = rows[s];
    row.reserve(joints.size() + 1);
    for (const auto& m : joints) row.push_back(eval_monomial(m, vals));
    row.push_back(target.eval(t));
  }
  return rows;
}

RelationReport find_relation(const Target& target, int num_samples, std::uint64_t seed,
                             std::size_t max_joints) {
  auto joints = build_joints(target.degree, -1, max_joints);
  // a custom target may coincide by name with a catalog entry; drop it
  joints.erase(std::remove_if(joints.begin(), joints.end(),
                              [&](const Monomial& m) {
                                return m.factors.size() == 1 &&
                                       catalog251()[m.factors[0]].name == target.name;
                              }),
               joints.end());
  const bool trunc = max_joints && joints.size() >= max_joints;
  return run_relation(target, std::move(joints), num_samples, seed, trunc);
}

RelationReport find_relation(int catalog_index, int num_samples, std::uint64_t seed,
                             std::size_t max_joints) {
  auto joints = build_joints(catalog251().at(catalog_index).degree, catalog_index, max_joints);
  const bool trunc = max_joints && joints.size() >= max_joints;
  return run_relation(target_from_catalog(catalog_index), std::move(joints), num_samples, seed,
                      trunc);
}

std::vector<RelationReport> certify_table1_degree(int d, int num_samples, std::uint64_t seed,
                                                  std::size_t max_joints) {
  if (d < 1 || d > 11) throw std::invalid_argument("certify_table1_degree: degree out of range");
  const auto& cat = catalog251();
  std::vector<RelationReport> out;
  for (int i = 0; i < static_cast<int>(cat.size()); ++i) {
    if (cat[i].table_degree != d) continue;
    if (cat[i].degree == 1) {
      // lambda and mu: no joints exist at degree 1
      RelationReport rep;
      rep.target = cat[i].name;
      rep.degree = 1;
      rep.samples = num_samples;
      out.push_back(std::move(rep));
      continue;
    }
    out.push_back(find_relation(i, num_samples, seed, max_joints));
  }
  return out;
}

}  // namespace elastinv
