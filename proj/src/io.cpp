#include "elastinv/io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace elastinv {

using nlohmann::json;

ElasticityTensor from_voigt_matrix(const VoigtMatrix& m) {
  double scale = 0;
  for (const auto& row : m)
    for (double x : row) scale = std::max(scale, std::abs(x));
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (std::abs(m[i][j] - m[j][i]) > 1e-12 * (scale > 0 ? scale : 1.0))
        throw format_error("voigt matrix not symmetric at (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")");
  ElasticityTensor e;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) e.voigt_at(i, j) = m[i][j];
  return e;
}

VoigtMatrix to_voigt_matrix(const ElasticityTensor& e) {
  VoigtMatrix m{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m[i][j] = e.voigt(i, j);
  return m;
}

ElasticityTensor read_voigt_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw format_error(std::string("invalid JSON: ") + err.what());
  }
  if (!j.contains("voigt")) throw format_error("missing \"voigt\" key");
  const auto& v = j["voigt"];
  if (!v.is_array() || v.size() != 6) throw format_error("\"voigt\" must be a 6x6 array");
  VoigtMatrix m{};
  for (int i = 0; i < 6; ++i) {
    if (!v[i].is_array() || v[i].size() != 6)
      throw format_error("voigt row " + std::to_string(i + 1) + " must have 6 entries");
    for (int jj = 0; jj < 6; ++jj) {
      if (!v[i][jj].is_number())
        throw format_error("voigt entry (" + std::to_string(i + 1) + "," +
                           std::to_string(jj + 1) + ") is not a number");
      m[i][jj] = v[i][jj].get<double>();
    }
  }
  return from_voigt_matrix(m);
}

ElasticityTensor read_voigt_csv(const std::string& text) {
  VoigtMatrix m{};
  std::istringstream in(text);
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (row >= 6) throw format_error("csv has more than 6 rows");
    std::istringstream ls(line);
    std::string cell;
    int col = 0;
    while (std::getline(ls, cell, ',')) {
      if (col >= 6) throw format_error("csv row " + std::to_string(row + 1) + " has more than 6 columns");
      try {
        m[row][col] = std::stod(cell);
      } catch (const std::exception&) {
        throw format_error("csv entry (" + std::to_string(row + 1) + "," +
                           std::to_string(col + 1) + ") is not a number");
      }
      ++col;
    }
    if (col != 6) throw format_error("csv row " + std::to_string(row + 1) + " has " +
                                     std::to_string(col) + " columns, expected 6");
    ++row;
  }
  if (row != 6) throw format_error("csv has " + std::to_string(row) + " rows, expected 6");
  return from_voigt_matrix(m);
}

ElasticityTensor read_elasticity_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw format_error("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return read_voigt_csv(ss.str());
  return read_voigt_json(ss.str());
}

std::string write_voigt_json(const ElasticityTensor& e) {
  json rows = json::array();
  for (int i = 0; i < 6; ++i) {
    json row = json::array();
    for (int j = 0; j < 6; ++j) row.push_back(e.voigt(i, j));
    rows.push_back(row);
  }
  return json{{"voigt", rows}}.dump(2);
}

std::string write_voigt_csv(const ElasticityTensor& e) {
  std::ostringstream out;
  out.precision(17);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) out << (j ? "," : "") << e.voigt(i, j);
    out << "\n";
  }
  return out.str();
}

json to_json(const HarmonicParts& p) {
  return json{{"lambda", p.lambda},
              {"mu", p.mu},
              {"d1", p.d1.v},
              {"d2", p.d2.v},
              {"a", p.a.c}};
}

HarmonicParts parts_from_json(const json& j) {
  HarmonicParts p;
  p.lambda = j.at("lambda").get<double>();
  p.mu = j.at("mu").get<double>();
  const auto d1 = j.at("d1").get<std::vector<double>>();
  const auto d2 = j.at("d2").get<std::vector<double>>();
  const auto a = j.at("a").get<std::vector<double>>();
  if (d1.size() != 6 || d2.size() != 6 || a.size() != 9)
    throw format_error("parts: d1/d2 need 6 entries, a needs 9");
  std::copy(d1.begin(), d1.end(), p.d1.v.begin());
  std::copy(d2.begin(), d2.end(), p.d2.v.begin());
  std::copy(a.begin(), a.end(), p.a.c.begin());
  return p;
}

json to_json(const Fingerprint& f) {
  return json{{"norm", f.norm}, {"values", f.values}, {"catalog_version", kCatalogVersion}};
}

json to_json(const OrbitVerdict& v) {
  return json{{"equivalent", v.equivalent},
              {"max_relative_deviation", v.max_relative_deviation},
              {"worst_slot", v.worst_slot}};
}

json to_json(const CanonicalRepresentative& r) {
  json frame = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(r.frame.m(i, j));
    frame.push_back(row);
  }
  return json{{"frame", frame}, {"parts", to_json(r.parts)}, {"branch_trace", r.branch_trace}};
}

json to_json(const RelationReport& r) {
  json coeffs = json::array();
  for (const auto& [mono, coef] : r.coefficients)
    coeffs.push_back(json{{"joint", mono.name},
                          {"num", coef.get_num().get_str()},
                          {"den", coef.get_den().get_str()}});
  return json{{"target", r.target},
              {"degree", r.degree},
              {"status", r.relation_found ? "relation-found" : "independent"},
              {"rank", r.rank},
              {"samples", r.samples},
              {"num_joints", r.num_joints},
              {"truncated", r.truncated},
              {"verified_points", r.verified_points},
              {"coefficients", coeffs}};
}

json catalog_to_json(bool counts_only) {
  if (counts_only) {
    json out;
    const auto counts = catalog_counts();
    int total = 0;
    for (int d = 0; d < 11; ++d) {
      out[std::to_string(d + 1)] = counts[d];
      total += counts[d];
    }
    out["total"] = total;
    return out;
  }
  json out = json::array();
  for (const auto& d : catalog251()) {
    json flags = json::array();
    if (d.duplicate_suspect) flags.push_back("duplicate-suspect");
    out.push_back(json{{"name", d.name},
                       {"degree", d.degree},
                       {"table_degree", d.table_degree},
                       {"flags", flags}});
  }
  return out;
}

}  // namespace elastinv
