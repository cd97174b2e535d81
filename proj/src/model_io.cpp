#include "finsler/model_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace finsler {

namespace {

using nlohmann::json;

Rational rational_from(const json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) return Rational(j.get<double>());  // exact dyadic
  throw std::runtime_error(std::string("model file: ") + what +
                           " must be a number or a \"p/q\" string");
}

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

PhiSpec phi_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family"))
    throw std::runtime_error("phi spec: expected an object with a \"family\" key");
  const std::string family = j.at("family").get<std::string>();
  if (family == "custom") {
    if (!j.contains("coeffs"))
      throw std::runtime_error("phi spec: custom family needs \"coeffs\"");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from(c, "phi coeff"));
    try {
      return PhiSpec::custom(std::move(coeffs));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(std::string("phi spec: ") + e.what());
    }
  }
  try {
    return PhiSpec::named(family);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("phi spec: ") + e.what());
  }
}

}  // namespace

ModelFile load_model_file(const std::string& path) {
  const json j = parse_json_file(path);
  try {
    const int dim = j.at("dim").get<int>();
    std::vector<int> h, k;
    for (const auto& idx : j.value("h", json::array())) h.push_back(idx.get<int>());
    for (const auto& idx : j.at("k")) k.push_back(idx.get<int>());

    std::vector<BracketTerm> structure;
    std::set<std::array<int, 3>> present;
    if (j.contains("brackets")) {
      for (const auto& entry : j.at("brackets")) {
        if (!entry.is_array() || entry.size() != 4)
          throw std::runtime_error("bracket entries must be [i, j, l, c]");
        BracketTerm t{entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>(),
                      rational_from(entry[3], "bracket coefficient")};
        present.insert({t.i, t.j, t.l});
        structure.push_back(std::move(t));
      }
      // implicit antisymmetric completion for missing mirror entries
      const std::size_t n_given = structure.size();
      for (std::size_t idx = 0; idx < n_given; ++idx) {
        const BracketTerm& t = structure[idx];
        if (t.i != t.j && !present.count({t.j, t.i, t.l}))
          structure.push_back({t.j, t.i, t.l, -t.c});
      }
    }

    const auto& inner_j = j.at("inner");
    const int dk = static_cast<int>(k.size());
    Eigen::MatrixXd inner(dk, dk);
    if (static_cast<int>(inner_j.size()) != dk)
      throw std::runtime_error("inner must be dim_k x dim_k");
    for (int r = 0; r < dk; ++r) {
      if (static_cast<int>(inner_j[r].size()) != dk)
        throw std::runtime_error("inner must be dim_k x dim_k");
      for (int c = 0; c < dk; ++c)
        inner(r, c) = rational_from(inner_j[r][c], "inner entry").get_d();
    }

    const auto& v_j = j.at("v");
    KVector v = KVector::Zero(dk);
    if (static_cast<int>(v_j.size()) == dk) {
      for (int p = 0; p < dk; ++p) v[p] = rational_from(v_j[p], "v entry").get_d();
    } else if (static_cast<int>(v_j.size()) == dim) {
      std::vector<int> pos(dim, -1);
      for (int p = 0; p < dk; ++p) pos[k[p]] = p;
      for (int g = 0; g < dim; ++g) {
        const double val = rational_from(v_j[g], "v entry").get_d();
        if (pos[g] >= 0) {
          v[pos[g]] = val;
        } else if (val != 0.0) {
          throw std::runtime_error("v has a nonzero component outside k");
        }
      }
    } else {
      throw std::runtime_error("v must have dim_k or dim entries");
    }

    ModelFile out{LieModel(dim, std::move(h), std::move(k), std::move(structure),
                           std::move(inner), std::move(v)),
                  std::nullopt};
    if (j.contains("phi")) out.phi = phi_from_json(j.at("phi"));
    return out;
  } catch (const json::exception& e) {
    throw std::runtime_error("model file " + path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error("model file " + path + ": " + e.what());
  }
}

PhiSpec parse_phi_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("phi spec parse error: ") + e.what());
  }
  return phi_from_json(j);
}

PhiSpec load_phi_file(const std::string& path) { return phi_from_json(parse_json_file(path)); }

}  // namespace finsler
