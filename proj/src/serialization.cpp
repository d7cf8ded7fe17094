#include "modlie/serialization.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace modlie {

using nlohmann::json;
using nlohmann::ordered_json;

std::string algebra_to_json(const LieAlgebra& L) {
  ordered_json doc;
  doc["p"] = L.F.p;
  doc["dim"] = L.dim;
  doc["labels"] = L.labels;
  ordered_json sc = ordered_json::array();
  for (u32 i = 0; i < L.dim; ++i)
    for (u32 j = i + 1; j < L.dim; ++j) {
      const ScRow& row = L.sc_at(i, j);
      if (row.empty()) continue;
      ordered_json terms = ordered_json::array();
      for (const BracketTerm& t : row) terms.push_back({t.k, t.c});
      sc.push_back({i, j, terms});
    }
  doc["sc"] = std::move(sc);
  if (L.has_pmap) {
    ordered_json pm = ordered_json::array();
    for (u32 i = 0; i < L.dim; ++i) pm.push_back(L.pmap.row(i));
    doc["pmap"] = std::move(pm);
  } else {
    doc["pmap"] = nullptr;
  }
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : L.params) params[k] = v;
  doc["meta"] = {{"family", L.family}, {"params", std::move(params)}};
  return doc.dump(2) + "\n";
}

LieAlgebra algebra_from_json(const std::string& text, bool validate) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("algebra_from_json: parse error: ") + e.what());
  }
  try {
    PrimeField F(doc.at("p").get<u32>());
    u32 dim = doc.at("dim").get<u32>();
    LieAlgebra L(F, dim);
    L.labels = doc.at("labels").get<std::vector<std::string>>();
    if (L.labels.size() != dim) throw std::runtime_error("label count != dim");
    for (const auto& entry : doc.at("sc")) {
      u32 i = entry.at(0).get<u32>(), j = entry.at(1).get<u32>();
      if (i >= j || j >= dim) throw std::runtime_error("sc index out of order");
      ScRow row;
      for (const auto& term : entry.at(2)) {
        u32 k = term.at(0).get<u32>(), c = term.at(1).get<u32>();
        if (k >= dim || c == 0 || c >= F.p) throw std::runtime_error("sc term out of range");
        if (!row.empty() && row.back().k >= k) throw std::runtime_error("sc terms unsorted");
        row.push_back({k, c});
      }
      L.set_bracket(i, j, row);
    }
    if (!doc.at("pmap").is_null()) {
      L.has_pmap = true;
      L.pmap = FpMat(F, dim, dim);
      const auto& pm = doc.at("pmap");
      if (pm.size() != dim) throw std::runtime_error("pmap row count != dim");
      for (u32 i = 0; i < dim; ++i) {
        FpVec r = pm.at(i).get<FpVec>();
        if (r.size() != dim) throw std::runtime_error("pmap row size != dim");
        for (u32 c : r)
          if (c >= F.p) throw std::runtime_error("pmap entry out of range");
        L.pmap.set_row(i, r);
      }
    }
    const auto& meta = doc.at("meta");
    L.family = meta.at("family").get<std::string>();
    for (const auto& [k, v] : meta.at("params").items())
      L.params[k] = v.get<std::vector<long long>>();
    if (validate) {
      ValidationReport rep = validate_algebra(L);
      if (!rep.ok)
        throw std::runtime_error("algebra_from_json: loaded algebra fails validation: " +
                                 (rep.violations.empty() ? std::string("(no witness)")
                                                         : rep.violations.front()));
    }
    return L;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("algebra_from_json: schema error: ") + e.what());
  }
}

void save_algebra_file(const LieAlgebra& L, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_algebra_file: cannot open " + path);
  out << algebra_to_json(L);
}

LieAlgebra load_algebra_file(const std::string& path, bool validate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_algebra_file: cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return algebra_from_json(text, validate);
}

}  // namespace modlie
