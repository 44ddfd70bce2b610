#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "torcomb/facevec.hpp"
#include "torcomb/json_io.hpp"
#include "torcomb/quasitoric.hpp"
#include "torcomb/reproduce.hpp"
#include "torcomb/tor.hpp"

namespace {

using namespace torcomb;

#ifndef TORCOMB_DATA_DIR
#define TORCOMB_DATA_DIR "data"
#endif

Json json_int(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json json_ints(const std::vector<Int>& v) {
  Json arr = Json::array();
  for (const Int& x : v) arr.push_back(json_int(x));
  return arr;
}

std::string ints_str(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

struct Options {
  bool json = false;
  int jobs = 1;
};

int cmd_info(const std::string& path, const Options& opt) {
  Json doc = load_json_file(path);
  SimplicialComplex k = complex_from_json(doc);
  std::vector<Int> f = k.f_vector();
  std::vector<Int> h = h_vector(k);
  std::vector<Int> g = g_vector(h);
  DefectReport ds = dehn_sommerville_defect(h);
  CmReport cm = cm_gorenstein_classify(k);

  Json out;
  out["name"] = doc.contains("name") ? doc["name"].get<std::string>() : "";
  out["m"] = k.m();
  out["dim"] = k.dim();
  out["f"] = json_ints(f);
  out["h"] = json_ints(h);
  out["g"] = json_ints(g);
  out["euler"] = json_int(euler_characteristic(k));
  out["neighbourliness"] = neighbourliness(k);
  out["min_missing_face"] = min_missing_face(k);
  out["cohen_macaulay"] = cm.cohen_macaulay;
  out["gorenstein_star"] = cm.gorenstein_star;
  if (cm.cm_witness) out["cm_failing_link"] = vset_elems(*cm.cm_witness);
  if (cm.gor_witness) out["gorenstein_failing_link"] = vset_elems(*cm.gor_witness);
  out["ds_defect"] = json_ints(ds.defect);
  out["ds_manifold_prediction"] = json_ints(ds.predicted);
  GTheoremVerdict gt = g_theorem_verdict(h);
  Json jgt;
  jgt["symmetric"] = gt.symmetric;
  jgt["nonneg_g"] = gt.nonneg_g;
  jgt["g_is_m_vector"] = gt.g_is_m;
  if (!gt.symmetric) jgt["fail_symmetric_at"] = gt.fail_symmetric;
  if (!gt.nonneg_g) jgt["fail_nonneg_at"] = gt.fail_nonneg;
  if (!gt.g_is_m) jgt["fail_m_at"] = gt.fail_m;
  out["g_theorem"] = std::move(jgt);
  UbtReport ubt = ubt_check(h, k.m(), k.dim() + 1);
  Json jubt;
  jubt["holds"] = ubt.ok;
  jubt["equality_through"] = ubt.equality_through;
  if (!ubt.ok) jubt["fail_at"] = ubt.fail_index;
  out["upper_bound"] = std::move(jubt);
  PoincareSeries ps = face_ring_poincare_series(k);
  out["poincare_numerator"] = poly_str(ps.numerator, "t", 2);
  out["poincare_denominator_exponent"] = ps.denominator_exponent;

  if (opt.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "complex " << out["name"].get<std::string>() << "  (m=" << k.m()
              << ", dim=" << k.dim() << ")\n"
              << "  f = " << ints_str(f) << "\n"
              << "  h = " << ints_str(h) << "\n"
              << "  g = " << ints_str(g) << "\n"
              << "  euler characteristic = "
              << euler_characteristic(k).get_str() << "\n"
              << "  neighbourliness = " << neighbourliness(k)
              << "  (smallest non-face size " << min_missing_face(k) << ")\n"
              << "  Cohen-Macaulay: " << (cm.cohen_macaulay ? "yes" : "no");
    if (cm.cm_witness) std::cout << "  (link of " << vset_str(*cm.cm_witness) << " fails)";
    std::cout << "\n  Gorenstein*: " << (cm.gorenstein_star ? "yes" : "no");
    if (cm.gor_witness)
      std::cout << "  (link of " << vset_str(*cm.gor_witness) << " fails)";
    std::cout << "\n  Dehn-Sommerville defect = " << ints_str(ds.defect)
              << ", manifold prediction " << ints_str(ds.predicted) << "\n"
              << "  g-theorem: symmetric " << (gt.symmetric ? "yes" : "no")
              << ", g >= 0 " << (gt.nonneg_g ? "yes" : "no") << ", g M-vector "
              << (gt.g_is_m ? "yes" : "no") << "\n"
              << "  upper bound: " << (ubt.ok ? "holds" : "VIOLATED")
              << ", equality through k=" << ubt.equality_through << "\n"
              << "  face ring Poincare series = (" << poly_str(ps.numerator, "t", 2)
              << ") / (1-t^2)^" << ps.denominator_exponent << "\n";
  }
  return 0;
}

int cmd_betti(const std::string& path, const std::string& method,
              const Options& opt) {
  SimplicialComplex k = complex_from_json(load_json_file(path));
  BettiTable table;
  bool mismatch = false;
  if (method == "koszul") {
    table = bigraded_betti(k, opt.jobs);
  } else if (method == "hochster") {
    table = hochster_betti(k, opt.jobs);
  } else if (method == "both") {
    table = bigraded_betti(k, opt.jobs);
    BettiTable other = hochster_betti(k, opt.jobs);
    mismatch = !(table == other);
  } else {
    throw input_error("unknown --method " + method);
  }

  if (opt.json) {
    Json out;
    out["m"] = table.m;
    out["n"] = table.n;
    out["entries"] = betti_table_to_json(table);
    Json tot = Json::array();
    for (long b : table.totals()) tot.push_back(b);
    out["totals"] = std::move(tot);
    if (method == "both") out["methods_agree"] = !mismatch;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << betti_table_grid(table);
    std::cout << "totals:";
    for (long b : table.totals()) std::cout << " " << b;
    std::cout << "\n";
    if (method == "both")
      std::cout << "strand/subcomplex methods "
                << (mismatch ? "DISAGREE" : "agree") << "\n";
  }
  if (mismatch) {
    std::cerr << "error: the two computation paths disagree\n";
    return 1;
  }
  return 0;
}

int cmd_genus(const std::string& path, const std::string& nu_arg,
              const Options& opt) {
  CharacteristicPair pair = pair_from_json(load_json_file(path));
  std::vector<Int> nu;
  if (!nu_arg.empty()) {
    std::string cur;
    for (char c : nu_arg + ",") {
      if (c == ',') {
        if (!cur.empty()) nu.push_back(Int(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (static_cast<int>(nu.size()) != pair.n())
      throw input_error("--nu needs " + std::to_string(pair.n()) + " entries");
    if (!is_generic(pair, nu))
      throw input_error("--nu is not generic for this pair");
  } else {
    nu = find_generic_vector(pair);
  }
  GenusReport rep = genus_report(pair, nu);

  if (opt.json) {
    Json out;
    out["nu"] = json_ints(nu);
    out["chi_y"] = poly_str(rep.chi_y, "y");
    out["signature"] = json_int(rep.signature);
    out["todd"] = json_int(rep.todd);
    out["top_chern"] = json_int(rep.top_chern);
    Json verts = Json::array();
    for (const auto& v : rep.vertices) {
      Json jv;
      jv["facet"] = v.facet;
      jv["sigma"] = v.sigma;
      jv["index"] = v.index;
      verts.push_back(std::move(jv));
    }
    out["vertices"] = std::move(verts);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "nu = " << ints_str(nu) << "\n"
              << "chi_y = " << poly_str(rep.chi_y, "y") << "\n"
              << "signature = " << rep.signature.get_str()
              << ", todd = " << rep.todd.get_str()
              << ", c_n = " << rep.top_chern.get_str() << "\n"
              << "vertex  sigma  index\n";
    for (const auto& v : rep.vertices) {
      std::string facet = "(";
      for (std::size_t i = 0; i < v.facet.size(); ++i)
        facet += (i ? "," : "") + std::to_string(v.facet[i]);
      facet += ")";
      std::printf("%-8s %+d      %d\n", facet.c_str(), v.sigma, v.index);
    }
  }
  return 0;
}

int cmd_arrangement(const std::string& path, const std::string& kind,
                    const Options& opt) {
  Json doc = load_json_file(path);
  SimplicialComplex k;
  std::string kinddoc = doc_kind(doc);
  if (kinddoc == "arrangement")
    k = complex_from_arrangement(arrangement_from_json(doc));
  else if (kinddoc == "complex")
    k = complex_from_json(doc);
  else
    throw input_error(path + ": expected a complex or arrangement document");

  std::vector<long> ranks;
  if (kind == "coord")
    ranks = coord_complement_betti(k, opt.jobs);
  else if (kind == "real")
    ranks = real_coord_complement_betti(k, opt.jobs);
  else if (kind == "diag")
    ranks = diagonal_complement_betti(k);
  else
    throw input_error("unknown --kind " + kind);
  while (ranks.size() > 1 && ranks.back() == 0) ranks.pop_back();

  if (opt.json) {
    Json out;
    out["kind"] = kind;
    Json arr = Json::array();
    for (long r : ranks) arr.push_back(r);
    out["betti"] = std::move(arr);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "complement cohomology ranks (H^0, H^1, ...):";
    for (long r : ranks) std::cout << " " << r;
    std::cout << "\n";
  }
  return 0;
}

int cmd_reproduce(const std::string& data_dir, const std::string& filter,
                  const Options& opt) {
  Corpus corpus = load_corpus(data_dir);
  std::vector<CheckResult> results = run_reproduction(corpus, filter, opt.jobs);
  bool all_pass = true;
  if (opt.json) {
    Json out = Json::array();
    for (const auto& r : results) {
      Json jr;
      jr["name"] = r.name;
      jr["pass"] = r.pass;
      jr["detail"] = r.detail;
      jr["seconds"] = r.seconds;
      out.push_back(std::move(jr));
      all_pass = all_pass && r.pass;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::printf("[%s] %-30s (%6.2fs)  %s\n", r.pass ? "pass" : "FAIL",
                  r.name.c_str(), r.seconds, r.detail.c_str());
      all_pass = all_pass && r.pass;
    }
  }
  if (results.empty()) {
    std::cerr << "no checks match filter \"" << filter << "\"\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for face vectors, Stanley-Reisner Tor tables, "
               "quasitoric genera and subspace arrangements"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json,!--text", opt.json, "emit JSON instead of text");
  app.add_option("--jobs", opt.jobs, "worker threads for strand computations")
      ->check(CLI::PositiveNumber);

  std::string path, method = "koszul", nu, kind = "coord";
  std::string data_dir = TORCOMB_DATA_DIR, filter;

  auto* info = app.add_subcommand("info", "f/h/g-vectors, classifiers, defects");
  info->add_option("path", path, "complex JSON file")->required();

  auto* betti = app.add_subcommand("betti", "bigraded Betti table");
  betti->add_option("path", path, "complex JSON file")->required();
  betti->add_option("--method", method, "koszul | hochster | both");

  auto* genus = app.add_subcommand("genus", "chi_y genus data of a pair");
  genus->add_option("path", path, "pair JSON file")->required();
  genus->add_option("--nu", nu, "comma-separated generic vector");

  auto* arr = app.add_subcommand("arrangement", "complement cohomology ranks");
  arr->add_option("path", path, "arrangement or complex JSON file")->required();
  arr->add_option("--kind", kind, "coord | real | diag");

  auto* rep = app.add_subcommand("reproduce", "run the bundled check suite");
  rep->add_option("--data", data_dir, "corpus directory");
  rep->add_option("--filter", filter, "only checks whose name contains this");

  // let --json / --jobs appear after the subcommand as well
  for (auto* sub : {info, betti, genus, arr, rep}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(path, opt);
    if (betti->parsed()) return cmd_betti(path, method, opt);
    if (genus->parsed()) return cmd_genus(path, nu, opt);
    if (arr->parsed()) return cmd_arrangement(path, kind, opt);
    if (rep->parsed()) return cmd_reproduce(data_dir, filter, opt);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
