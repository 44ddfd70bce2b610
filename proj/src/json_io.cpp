#include "torcomb/json_io.hpp"

#include <fstream>
#include <sstream>

namespace torcomb {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw input_error(path + ": " + e.what());
  }
  return doc;
}

namespace {

std::vector<std::vector<int>> int_lists(const Json& j, const std::string& what) {
  if (!j.is_array()) throw input_error(what + " must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw input_error(what + " must be an array of arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw input_error(what + " entries must be integers");
      r.push_back(x.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

SimplicialComplex complex_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("facets"))
    throw input_error("complex document needs \"m\" and \"facets\"");
  if (!doc["m"].is_number_integer())
    throw input_error("\"m\" must be an integer");
  int m = doc["m"].get<int>();
  try {
    return SimplicialComplex::from_generators(m, int_lists(doc["facets"], "facets"));
  } catch (const domain_error& e) {
    throw input_error(std::string("invalid complex: ") + e.what());
  }
}

Json complex_to_json(const SimplicialComplex& k, const std::string& name) {
  Json doc;
  if (!name.empty()) doc["name"] = name;
  doc["m"] = k.m();
  Json facets = Json::array();
  for (Vset f : k.facets()) facets.push_back(vset_elems(f));
  doc["facets"] = std::move(facets);
  return doc;
}

CharacteristicPair pair_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("complex") || !doc.contains("lambda"))
    throw input_error("pair document needs \"complex\" and \"lambda\"");
  SimplicialComplex k = complex_from_json(doc["complex"]);
  auto rows = int_lists(doc["lambda"], "lambda");
  if (rows.empty()) throw input_error("lambda must be non-empty");
  IntMatrix lambda(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw input_error("lambda rows have unequal lengths");
    for (std::size_t j = 0; j < rows[i].size(); ++j) lambda(i, j) = rows[i][j];
  }
  try {
    OrientedSphereComplex sphere =
        doc.contains("orientation")
            ? orient_with(k, int_lists(doc["orientation"], "orientation"))
            : orient_sphere(k);
    return validate_pair(std::move(sphere), std::move(lambda));
  } catch (const domain_error& e) {
    throw input_error(std::string("invalid pair: ") + e.what());
  }
}

Json pair_to_json(const CharacteristicPair& pair, const std::string& name) {
  Json doc;
  if (!name.empty()) doc["name"] = name;
  doc["complex"] = complex_to_json(pair.sphere.base);
  Json lam = Json::array();
  for (std::size_t i = 0; i < pair.lambda.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < pair.lambda.cols(); ++j)
      row.push_back(static_cast<long>(pair.lambda(i, j).get_si()));
    lam.push_back(std::move(row));
  }
  doc["lambda"] = std::move(lam);
  doc["orientation"] = pair.sphere.oriented_facets();
  return doc;
}

CoordinateArrangement arrangement_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("generators"))
    throw input_error("arrangement document needs \"m\" and \"generators\"");
  try {
    return make_arrangement(doc["m"].get<int>(),
                            int_lists(doc["generators"], "generators"));
  } catch (const domain_error& e) {
    throw input_error(std::string("invalid arrangement: ") + e.what());
  }
}

Json arrangement_to_json(const CoordinateArrangement& a,
                         const std::string& name) {
  Json doc;
  if (!name.empty()) doc["name"] = name;
  doc["m"] = a.m;
  Json gens = Json::array();
  for (Vset g : a.generators) gens.push_back(vset_elems(g));
  doc["generators"] = std::move(gens);
  return doc;
}

Json betti_table_to_json(const BettiTable& t) {
  Json arr = Json::array();
  for (const auto& [qp, v] : t.entries) {
    Json e;
    e["i"] = -qp.first;
    e["j"] = 2 * qp.second;
    e["rank"] = v;
    arr.push_back(std::move(e));
  }
  return arr;
}

std::string betti_table_grid(const BettiTable& t) {
  int qmax = 0, pmax = 0;
  for (const auto& [qp, v] : t.entries) {
    qmax = std::max(qmax, qp.first);
    pmax = std::max(pmax, qp.second);
  }
  std::size_t w = 1;
  for (const auto& [qp, v] : t.entries)
    w = std::max(w, std::to_string(v).size());
  std::ostringstream out;
  for (int p = pmax; p >= 0; --p) {
    out << (p < 5 ? " " : "") << 2 * p << " |";
    for (int q = 0; q <= qmax; ++q) {
      long v = t.at(q, p);
      std::string cell = v ? std::to_string(v) : ".";
      out << " " << std::string(w - cell.size(), ' ') << cell;
    }
    out << "\n";
  }
  out << "---+" << std::string((w + 1) * (qmax + 1), '-') << "\n    ";
  for (int q = 0; q <= qmax; ++q) {
    std::string lbl = std::to_string(-q);
    out << " " << std::string(w > lbl.size() ? w - lbl.size() : 0, ' ') << lbl;
  }
  out << "\n";
  return out.str();
}

std::string doc_kind(const Json& doc) {
  if (!doc.is_object()) return "";
  if (doc.contains("lambda")) return "pair";
  if (doc.contains("generators")) return "arrangement";
  if (doc.contains("facets")) return "complex";
  return "";
}

}  // namespace torcomb
