// elastinv: harmonic decomposition, isotropic-invariant fingerprints, orbit
// comparison, canonical reconstruction and exact relation search for 3D
// elasticity tensors. JSON on stdout; exit 0 success / equivalent,
// 1 not-equivalent (compare), 2 input error.

#include "elastinv/io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

using namespace elastinv;
using nlohmann::json;

namespace {

std::uint64_t env_seed_fallback() {
  if (const char* s = std::getenv("ELASTINV_SEED")) return std::strtoull(s, nullptr, 10);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isotropic-invariant toolbox for 3D elasticity tensors"};
  app.require_subcommand(1);

  std::string file1, file2, target_name;
  double tol = kDefaultOrbitTol;
  double tie_tol = kDefaultTieTol;
  int degree = 2;
  int samples = 50;
  std::size_t max_joints = 0;
  std::uint64_t seed = env_seed_fallback();

  auto* cmd_decompose = app.add_subcommand("decompose", "harmonic parts of a tensor");
  cmd_decompose->add_option("file", file1, "Voigt JSON or CSV file")->required();

  auto* cmd_invariants = app.add_subcommand("invariants", "251-value invariant fingerprint");
  cmd_invariants->add_option("file", file1, "Voigt JSON or CSV file")->required();

  auto* cmd_compare = app.add_subcommand("compare", "decide SO(3)-orbit equivalence");
  cmd_compare->add_option("file1", file1)->required();
  cmd_compare->add_option("file2", file2)->required();
  cmd_compare->add_option("--tol", tol, "per-slot relative tolerance");

  auto* cmd_reconstruct = app.add_subcommand("reconstruct", "canonical orbit representative");
  cmd_reconstruct->add_option("file", file1)->required();
  cmd_reconstruct->add_option("--tie-tol", tie_tol, "eigenvalue/guard dead zone");

  auto* cmd_relations = app.add_subcommand("relations", "exact-rational relation search");
  cmd_relations->add_option("--degree", degree, "certify this catalog degree");
  cmd_relations->add_option("--target", target_name, "single catalog entry by name");
  cmd_relations->add_option("--samples", samples, "number of rational sample points");
  cmd_relations->add_option("--max-joints", max_joints, "cap on joint monomials (0 = none)");
  cmd_relations->add_option("--seed", seed, "sample seed (env ELASTINV_SEED fallback)");

  auto* cmd_catalog = app.add_subcommand("catalog", "list the 251 invariant descriptors");
  bool counts_only = false;
  cmd_catalog->add_flag("--counts", counts_only, "per-degree counts only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad flags/usage are input errors
  }

  try {
    if (cmd_decompose->parsed()) {
      std::cout << to_json(decompose(read_elasticity_file(file1))).dump(2) << "\n";
    } else if (cmd_invariants->parsed()) {
      const ElasticityTensor e = read_elasticity_file(file1);
      json out = to_json(evaluate_fingerprint(e));
      const JInvariants j = compute_j(decompose(e).a);
      json js;
      for (int i = 0; i < 9; ++i) js["J" + std::to_string(i + 2)] = j.j[i];
      out["j"] = js;
      std::cout << out.dump(2) << "\n";
    } else if (cmd_compare->parsed()) {
      const OrbitVerdict v =
          same_orbit(read_elasticity_file(file1), read_elasticity_file(file2), tol);
      std::cout << to_json(v).dump(2) << "\n";
      return v.equivalent ? 0 : 1;
    } else if (cmd_reconstruct->parsed()) {
      std::cout << to_json(reconstruct(read_elasticity_file(file1), tie_tol)).dump(2) << "\n";
    } else if (cmd_relations->parsed()) {
      if (!target_name.empty()) {
        const auto& cat = catalog251();
        int idx = -1;
        for (int i = 0; i < static_cast<int>(cat.size()); ++i)
          if (cat[i].name == target_name) {
            idx = i;
            break;
          }
        if (idx < 0) throw format_error("unknown catalog entry: " + target_name);
        std::cout << to_json(find_relation(idx, samples, seed, max_joints)).dump(2) << "\n";
      } else {
        json out = json::array();
        for (const auto& r : certify_table1_degree(degree, samples, seed, max_joints))
          out.push_back(to_json(r));
        std::cout << out.dump(2) << "\n";
      }
    } else if (cmd_catalog->parsed()) {
      std::cout << catalog_to_json(counts_only).dump(2) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
