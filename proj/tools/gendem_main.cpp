#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "gendem/io.hpp"

namespace {

using namespace gendem;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitCapExceeded = 3;

std::vector<long long> parse_ints(const std::string& s, const char* what) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("bad ") + what + " entry '" +
                                  item + "'");
    }
  }
  if (out.empty())
    throw std::invalid_argument(std::string(what) + " must be nonempty");
  return out;
}

CartanData parse_type(const std::string& spec) {
  if (spec.size() < 2)
    throw std::invalid_argument("type must look like A2, C2, G2, ...");
  char family = static_cast<char>(std::toupper(spec[0]));
  int rank = 0;
  try {
    rank = std::stoi(spec.substr(1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rank in type '" + spec + "'");
  }
  return cartan_from_type(family, rank);
}

CartanData parse_cartan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open cartan file " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw std::invalid_argument("bad JSON in " + path + ": " + ex.what());
  }
  if (j.contains("cartan")) {
    std::vector<std::vector<long long>> c =
        j["cartan"].get<std::vector<std::vector<long long>>>();
    return make_cartan(c);
  }
  if (j.contains("type") && j.contains("rank")) {
    std::string fam = j["type"].get<std::string>();
    if (fam.size() != 1) throw std::invalid_argument("type must be one letter");
    return cartan_from_type(static_cast<char>(std::toupper(fam[0])),
                            j["rank"].get<int>());
  }
  throw std::invalid_argument(
      "cartan file needs either {\"type\",\"rank\"} or {\"cartan\": [[..]]}");
}

struct Job {
  std::string type_spec;
  std::string cartan_file;
  std::string word_spec;
  std::string m_spec;
  std::string a_spec;
  long long depth = 2;
  long long level = 1;
  std::string format = "json";
  std::string out_path;
  std::size_t cap = kDefaultCap;

  CartanData cartan() const {
    if (!type_spec.empty() && !cartan_file.empty())
      throw std::invalid_argument("give either --type or --cartan-file, not both");
    if (!type_spec.empty()) return parse_type(type_spec);
    if (!cartan_file.empty()) return parse_cartan_file(cartan_file);
    throw std::invalid_argument("a root system is required (--type or --cartan-file)");
  }
  Word word(const CartanData& cd) const {
    auto v = parse_ints(word_spec, "word");
    Word w(v.begin(), v.end());
    check_word(cd, w);
    return w;
  }
  Multidegree mdeg(const Word& w) const {
    Multidegree m = parse_ints(m_spec, "multidegree");
    if (m.size() != w.size())
      throw std::invalid_argument("word and multidegree lengths differ");
    for (long long x : m)
      if (x < 0) throw std::invalid_argument("multidegree entries must be >= 0");
    return m;
  }
  RationalPoint point(std::size_t want) const {
    if (a_spec.empty())
      throw std::invalid_argument("this command needs --a (comma-separated rationals)");
    RationalPoint p;
    std::stringstream ss(a_spec);
    std::string item;
    while (std::getline(ss, item, ',')) p.push_back(rat_parse(item));
    if (p.size() != want)
      throw std::invalid_argument("--a must have " + std::to_string(want) +
                                  " entries");
    return p;
  }

  void emit(const std::string& payload) const {
    if (out_path.empty()) {
      std::cout << payload;
      if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
      return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file " + out_path);
    out << payload;
  }
  void emit_json(const Json& j) const { emit(j.dump(2) + "\n"); }
};

int run(const std::string& command, const Job& job) {
  CartanData cd = job.cartan();
  if (command == "enumerate" || command == "omega") {
    Word w = job.word(cd);
    Multidegree m = job.mdeg(w);
    GenDemCrystal crystal = enumerate_gendem(cd, w, m, job.cap);
    if (job.format != "json")
      throw std::invalid_argument("command supports --format json only");
    if (command == "enumerate") {
      job.emit_json(crystal_json(crystal));
    } else {
      Json j = transform_json(cd, w);
      j["m"] = m;
      Json table = Json::array();
      for (std::size_t p = 0; p < crystal.size(); ++p) {
        Json row;
        row["id"] = p;
        row["omega"] = crystal.omega[p];
        row["omega_prime"] = crystal.omega_prime[p];
        table.push_back(std::move(row));
      }
      j["parameterizations"] = std::move(table);
      job.emit_json(j);
    }
    return kExitOk;
  }
  if (command == "points") {
    Word w = job.word(cd);
    Multidegree m = job.mdeg(w);
    auto pts = lattice_points(cd, w, m);
    if (job.format == "json")
      job.emit_json(points_json(w, m, pts));
    else if (job.format == "csv")
      job.emit(points_csv(pts));
    else if (job.format == "text")
      job.emit(points_text(pts));
    else
      throw std::invalid_argument("unknown format " + job.format);
    return kExitOk;
  }
  if (command == "polytope") {
    Word w = job.word(cd);
    Multidegree m = job.mdeg(w);
    if (job.level < 1) throw std::invalid_argument("--k must be >= 1");
    RationalPoint a = job.point(w.size());
    // The level-k report is the level-1 report against k*m.
    RationalPoint mr;
    for (long long x : m) mr.emplace_back(x * job.level);
    PLReport rep = pl_report(cd, w, mr, a);
    if (job.format != "json")
      throw std::invalid_argument("command supports --format json only");
    job.emit_json(pl_report_json(w, a, rep));
    return kExitOk;
  }
  if (command == "hull") {
    Word w = job.word(cd);
    Multidegree m = job.mdeg(w);
    std::vector<RationalPoint> sample;
    for (long long k = 1; k <= job.depth; ++k) {
      Multidegree km = m;
      for (auto& x : km) x *= k;
      for (const auto& p : lattice_points(cd, w, km)) {
        RationalPoint q;
        for (long long v : p) q.emplace_back(v, k);
        sample.push_back(std::move(q));
      }
    }
    HullResult hull = convex_hull(sample);
    if (job.format != "json")
      throw std::invalid_argument("command supports --format json only");
    Json j = hull_json(hull);
    j["word"] = w;
    j["m"] = m;
    j["dilations"] = job.depth;
    job.emit_json(j);
    return kExitOk;
  }
  if (command == "verify") {
    Word w = job.word(cd);
    Multidegree m = job.mdeg(w);
    VerifyReport rep = verify(cd, w, m, job.depth, job.cap);
    if (job.format == "json")
      job.emit_json(verify_json(rep));
    else if (job.format == "text")
      job.emit(verify_text(rep));
    else
      throw std::invalid_argument("unknown format " + job.format);
    return rep.all_pass() ? kExitOk : kExitVerifyFailed;
  }
  throw std::invalid_argument("unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "generalized Demazure crystals, string parameterizations, and "
      "generalized string polytopes"};
  app.require_subcommand(1);

  Job job;
  if (const char* env_cap = std::getenv("GENDEM_CAP")) {
    try {
      job.cap = static_cast<std::size_t>(std::stoull(env_cap));
    } catch (const std::exception&) {
      std::cerr << "error: bad GENDEM_CAP value '" << env_cap << "'\n";
      return kExitValidation;
    }
  }

  std::vector<std::string> names = {"enumerate", "omega",  "polytope",
                                    "points",    "hull",   "verify"};
  std::vector<CLI::App*> subs;
  for (const auto& name : names) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--type", job.type_spec, "root system type, e.g. A2");
    sub->add_option("--cartan-file", job.cartan_file,
                    "JSON file with {\"type\",\"rank\"} or {\"cartan\"}");
    sub->add_option("--word", job.word_spec, "comma-separated letters, 1-based")
        ->required();
    sub->add_option("--m", job.m_spec, "comma-separated multidegree")->required();
    sub->add_option("--format", job.format, "json, csv, or text");
    sub->add_option("--out", job.out_path, "output path (default stdout)");
    sub->add_option("--cap", job.cap, "element cap for enumerations");
    if (name == "verify" || name == "hull")
      sub->add_option("--depth", job.depth, "dilation depth (default 2)");
    if (name == "polytope") {
      sub->add_option("--a", job.a_spec, "comma-separated rational point");
      sub->add_option("--k", job.level, "dilation level (default 1)");
    }
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), job);
  } catch (const CapExceeded& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return kExitValidation;
  }
}
