#include "gendem/io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace gendem {

namespace {

Json path_json(const LSPath& pi) {
  Json segs = Json::array();
  for (const auto& s : pi.segments()) {
    Json seg = Json::array();
    seg.push_back(s.dir);
    seg.push_back(s.dur.num());
    seg.push_back(s.dur.den());
    segs.push_back(std::move(seg));
  }
  return segs;
}

Json point_pairs(const RationalPoint& p) {
  Json out = Json::array();
  for (const Rat& x : p)
    out.push_back(Json::array({rat_num(x).str(), rat_den(x).str()}));
  return out;
}

}  // namespace

Json crystal_json(const GenDemCrystal& crystal) {
  Json j;
  j["schema"] = "gendem/1";
  j["kind"] = "crystal";
  j["word"] = crystal.word;
  j["m"] = crystal.mdeg;
  j["count"] = crystal.size();
  Json elems = Json::array();
  for (std::size_t p = 0; p < crystal.size(); ++p) {
    Json e;
    e["id"] = p;
    e["wt"] = tensor_wt(crystal.elements[p]);
    e["omega"] = crystal.omega[p];
    e["omega_prime"] = crystal.omega_prime[p];
    Json factors = Json::array();
    for (int k = 0; k < crystal.ctx->arity(); ++k)
      factors.push_back(path_json(crystal.elements[p].factor(k)));
    e["factors"] = std::move(factors);
    elems.push_back(std::move(e));
  }
  j["elements"] = std::move(elems);
  return j;
}

Json transform_json(const CartanData& cd, const Word& word) {
  auto [A, B] = transform_matrices(cd, word);
  Json j;
  j["schema"] = "gendem/1";
  j["kind"] = "transform";
  j["word"] = word;
  j["A"] = A;
  j["B"] = B;
  return j;
}

Json points_json(const Word& word, const Multidegree& m,
                 const std::vector<StringVector>& pts) {
  Json j;
  j["schema"] = "gendem/1";
  j["kind"] = "points";
  j["word"] = word;
  j["m"] = m;
  j["count"] = pts.size();
  j["points"] = pts;
  return j;
}

Json pl_report_json(const Word& word, const RationalPoint& a,
                    const PLReport& rep) {
  Json j;
  j["schema"] = "gendem/1";
  j["kind"] = "pl_report";
  j["word"] = word;
  Json av = Json::array();
  for (const Rat& x : a) av.push_back(rat_str(x));
  j["a"] = std::move(av);
  Json psi;
  for (const auto& [jk, val] : rep.psi)
    psi[std::to_string(jk.first) + "," + std::to_string(jk.second)] =
        rat_str(val);
  j["psi"] = std::move(psi);
  Json levels = Json::array();
  for (const auto& lvl : rep.a_levels) {
    Json row = Json::array();
    for (const Rat& x : lvl) row.push_back(rat_str(x));
    levels.push_back(std::move(row));
  }
  j["a_levels"] = std::move(levels);
  j["verdict_S"] = rep.verdict_S;
  if (rep.verdict_ii) j["verdict_ii"] = *rep.verdict_ii;
  if (rep.verdict_Delta) j["verdict_Delta"] = *rep.verdict_Delta;
  return j;
}

Json hull_json(const HullResult& hull) {
  Json j;
  j["schema"] = "gendem/1";
  j["kind"] = "hull";
  j["ambient_dim"] = hull.ambient_dim;
  j["affine_dim"] = hull.affine_dim;
  Json verts = Json::array();
  for (const auto& v : hull.vertices) verts.push_back(point_pairs(v));
  j["vertices"] = std::move(verts);
  Json facets = Json::array();
  for (const auto& f : hull.facets) {
    Json fj;
    fj["normal"] = f.normal;
    fj["offset"] = rat_str(f.offset);
    facets.push_back(std::move(fj));
  }
  j["facets"] = std::move(facets);
  Json eqs = Json::array();
  for (const auto& e : hull.equations) {
    Json ej;
    ej["normal"] = e.normal;
    ej["value"] = rat_str(e.value);
    eqs.push_back(std::move(ej));
  }
  j["equations"] = std::move(eqs);
  return j;
}

Json verify_json(const VerifyReport& rep) {
  Json j;
  j["schema"] = "gendem/1";
  j["kind"] = "verify";
  j["word"] = rep.word;
  j["m"] = rep.mdeg;
  j["depth"] = rep.depth;
  j["pass"] = rep.all_pass();
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["details"] = c.details;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string points_csv(const std::vector<StringVector>& pts) {
  std::ostringstream os;
  if (!pts.empty()) {
    for (std::size_t i = 0; i < pts[0].size(); ++i)
      os << (i ? "," : "") << "a" << (i + 1);
    os << "\n";
  }
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << "\n";
  }
  return os.str();
}

std::string points_text(const std::vector<StringVector>& pts) {
  std::ostringstream os;
  for (const auto& p : pts) {
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
    os << ")\n";
  }
  return os.str();
}

std::string verify_text(const VerifyReport& rep) {
  std::ostringstream os;
  for (const auto& c : rep.checks)
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << c.details
       << "\n";
  os << (rep.all_pass() ? "all checks passed" : "verification FAILED") << "\n";
  return os.str();
}

}  // namespace gendem
