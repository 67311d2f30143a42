// qlat: command-line front end over the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "qlat/qlat.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Thrown to unwind with a specific exit code after printing a message.
struct Exit {
  int code;
};

void check(qlat_status s) {
  if (s == QLAT_OK) return;
  std::cerr << "qlat: " << qlat_last_error() << "\n";
  throw Exit{s == QLAT_ERR_PARSE || s == QLAT_ERR_ARGUMENT ? kExitUsage : kExitFailure};
}

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { qlat_free_string(p); }
  std::string str() const { return p ? p : ""; }
};

Json json_call(qlat_status (*fn)(char**)) {
  OwnedString s;
  check(fn(&s.p));
  return Json::parse(s.str());
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os || !(os << text)) {
    std::cerr << "qlat: cannot write " << path << "\n";
    throw Exit{kExitFailure};
  }
}

struct GroupHandle {
  qlat_group* g = nullptr;
  ~GroupHandle() { qlat_group_free(g); }
};

struct PatchHandle {
  qlat_patch* p = nullptr;
  ~PatchHandle() { qlat_patch_free(p); }
};

std::string exact_text_list(const Json& list) {
  std::string out;
  for (const auto& v : list) {
    std::string row;
    for (const auto& c : v) {
      if (!row.empty()) row += ",";
      row += "[" + c[0].dump() + "," + c[1].dump() + "," + c[2].dump() + "]";
    }
    out += row + "\n";
  }
  return out;
}

// --- verbs ----------------------------------------------------------------------

struct Options {
  std::string format = "text";
  std::string out;
  std::string system;
  std::string ql;
  std::string vector;
  std::string factor;
  std::string target;
  std::string window = "cell";
  std::string in;
  std::string k_list;
  std::string emit_path;
  std::string orbit;
  std::string quaternion;
  long long power = 1;
  double radius = 8;
  double window_scale = 1;
  bool count = false;
  bool table1 = false;
  bool e8 = false;
  bool closure = false;
};

int run_roots(const Options& o) {
  if (o.count) {
    size_t n = 0;
    check(qlat_root_count(o.system.c_str(), &n));
    emit(o.out, std::to_string(n) + "\n");
    return kExitOk;
  }
  OwnedString s;
  check(qlat_roots_json(o.system.c_str(), &s.p));
  const Json j = Json::parse(s.str());
  std::string text;
  if (o.format == "json") {
    text = j.dump(2) + "\n";
  } else if (o.format == "csv") {
    const std::size_t d = j["roots"].empty() ? 0 : j["roots"][0]["float"].size();
    for (std::size_t i = 0; i < d; ++i) text += (i ? "," : "") + std::string("x") + std::to_string(i + 1);
    for (std::size_t i = 0; i < d; ++i) text += ",exact" + std::to_string(i + 1);
    text += "\n";
    for (const auto& r : j["roots"]) {
      std::string row;
      for (const auto& x : r["float"]) row += (row.empty() ? "" : ",") + fmt(x.get<double>());
      std::stringstream ss(r["text"].get<std::string>());
      std::string c;
      while (std::getline(ss, c, ',')) row += "," + c;
      text += row + "\n";
    }
  } else {
    for (const auto& r : j["roots"]) text += r["text"].get<std::string>() + "\n";
  }
  emit(o.out, text);
  return kExitOk;
}

int run_group(const Options& o) {
  GroupHandle g;
  check(qlat_group_generate(o.system.c_str(), &g.g));
  size_t order = 0;
  check(qlat_group_order(g.g, &order));
  if (!o.emit_path.empty()) {
    OwnedString s;
    check(qlat_group_json(g.g, &s.p));
    emit(o.emit_path, s.str() + "\n");
  }
  if (!o.orbit.empty()) {
    OwnedString s;
    check(qlat_group_orbit_json(g.g, o.orbit.c_str(), &s.p));
    const Json j = Json::parse(s.str());
    emit(o.out, o.format == "json" ? j.dump(2) + "\n"
                                   : std::to_string(j["size"].get<std::size_t>()) + "\n" +
                                         (o.count ? "" : exact_text_list(j["orbit"])));
    return kExitOk;
  }
  if (o.format == "json") {
    emit(o.out, Json{{"system", o.system}, {"order", order}}.dump(2) + "\n");
  } else {
    emit(o.out, std::to_string(order) + "\n");
  }
  return kExitOk;
}

int run_icosians(const Options& o) {
  if (!o.quaternion.empty()) {
    int member = 0;
    check(qlat_icosian_ring_member(o.quaternion.c_str(), &member));
    emit(o.out, member ? "member\n" : "non-member\n");
    return member ? kExitOk : kExitFailure;
  }
  if (!o.closure) {
    std::cerr << "qlat icosians: nothing to do (use --check-closure or --member)\n";
    return kExitUsage;
  }
  size_t products = 0, failures = 0;
  check(qlat_icosian_closure(&products, &failures));
  if (o.format == "json") {
    emit(o.out, Json{{"products", products}, {"failures", failures}, {"closed", failures == 0}}.dump(2) + "\n");
  } else {
    emit(o.out, std::to_string(products - failures) + "/" + std::to_string(products) +
                    " products are unit icosians\n");
  }
  return failures == 0 ? kExitOk : kExitFailure;
}

int run_member(const Options& o) {
  int member = 0;
  check(qlat_ql_member(o.ql.c_str(), o.vector.c_str(), &member));
  if (o.format == "json") {
    emit(o.out, Json{{"ql", o.ql}, {"vector", o.vector}, {"member", member != 0}}.dump(2) + "\n");
  } else {
    emit(o.out, member ? "member\n" : "non-member\n");
  }
  return member ? kExitOk : kExitFailure;
}

int run_residues(const Options& o) {
  const Json j = json_call(qlat_residues_json);
  if (o.format == "json") {
    emit(o.out, j.dump(2) + "\n");
    return kExitOk;
  }
  std::string text;
  if (o.format == "csv") text = "m1,m2,m3,m4,n1,n2,n3,n4,vector\n";
  for (const auto& r : j["residues"]) {
    std::string row;
    for (const auto& x : r["m"]) row += (row.empty() ? "" : ",") + x.dump();
    for (const auto& x : r["n"]) row += "," + x.dump();
    if (o.format == "csv") {
      text += row + ",\"" + r["vector"].get<std::string>() + "\"\n";
    } else {
      text += "m=(" + row.substr(0, 7) + ") n=(" + row.substr(8) + ")  " + r["vector"].get<std::string>() + "\n";
    }
  }
  if (o.format != "csv") text += std::to_string(j["count"].get<std::size_t>()) + " allowed residues\n";
  emit(o.out, text);
  return kExitOk;
}

int run_scale(const Options& o) {
  OwnedString verdict;
  check(qlat_ql_scale(o.ql.c_str(), o.factor.c_str(), o.power, &verdict.p));
  if (o.format == "json") {
    emit(o.out, Json{{"ql", o.ql}, {"factor", o.factor}, {"power", o.power}, {"verdict", verdict.str()}}.dump(2) +
                    "\n");
  } else {
    emit(o.out, verdict.str() + "\n");
  }
  return kExitOk;
}

int run_verify(const Options& o) {
  if (!o.table1 && !o.e8) {
    std::cerr << "qlat verify: choose --table1 and/or --e8\n";
    return kExitUsage;
  }
  bool ok = true;
  Json report = Json::object();
  std::string text;
  if (o.table1) {
    OwnedString s;
    size_t passed = 0, total = 0;
    check(qlat_verify_table1_json(&s.p, &passed, &total));
    const Json j = Json::parse(s.str());
    report["table1"] = j;
    ok = ok && passed == total;
    for (const auto& r : j["rows"]) {
      char line[160];
      std::snprintf(line, sizeof line, "%-13s expected %-5s derived %-5s power %d  %s\n",
                    r["ql"].get<std::string>().c_str(), r["expected_factor"].get<std::string>().c_str(),
                    r["derived_factor"].get<std::string>().c_str(), r["minimal_power"].get<int>(),
                    r["pass"].get<bool>() ? "pass" : "FAIL");
      text += line;
    }
    text += std::to_string(passed) + "/" + std::to_string(total) + " pass\n";
  }
  if (o.e8) {
    const Json j = json_call(qlat_e8_report_json);
    report["e8"] = j;
    const bool e8_ok = j["root_count"] == 240 && j["gram_even"] == true && j["gram_determinant"] == "1" &&
                       j["isometry_bijective"] == true && j["outer_shell"] == 120 && j["inner_shell"] == 120 &&
                       j["outer_shell_is_unit_icosians"] == true;
    ok = ok && e8_ok;
    text += "E8: " + j["root_count"].dump() + " roots, shells " + j["outer_shell"].dump() + "+" +
            j["inner_shell"].dump() + ", Gram det " + j["gram_determinant"].get<std::string>() +
            (j["gram_even"] == true ? " even" : " odd") + ", " + (e8_ok ? "pass" : "FAIL") + "\n";
  }
  emit(o.out, o.format == "json" ? report.dump(2) + "\n" : text);
  return ok ? kExitOk : kExitFailure;
}

int run_project(const Options& o) {
  if (o.out.empty()) {
    std::cerr << "qlat project: --out is required\n";
    return kExitUsage;
  }
  PatchHandle p;
  check(qlat_patch_generate(o.target.c_str(), o.window.c_str(), o.window_scale, o.radius, &p.p));
  size_t n = 0, d = 0;
  check(qlat_patch_size(p.p, &n, &d));
  if (o.format == "json") {
    std::vector<double> buf(n * d);
    if (n) check(qlat_patch_positions(p.p, buf.data(), buf.size()));
    Json pts = Json::array();
    for (std::size_t i = 0; i < n; ++i) pts.push_back(std::vector<double>(buf.begin() + i * d, buf.begin() + (i + 1) * d));
    emit(o.out, Json{{"target", o.target}, {"radius", o.radius}, {"window", o.window}, {"points", pts}}.dump() + "\n");
  } else {
    check(qlat_patch_write_csv(p.p, o.out.c_str()));
  }
  std::cout << n << " points\n";
  return kExitOk;
}

std::vector<std::vector<double>> load_k_list(const std::string& path, std::size_t dim) {
  std::ifstream is(path);
  if (!is) {
    std::cerr << "qlat: cannot open " << path << "\n";
    throw Exit{kExitFailure};
  }
  Json j;
  try {
    j = Json::parse(is);
  } catch (const Json::exception& e) {
    std::cerr << "qlat: " << path << ": " << e.what() << "\n";
    throw Exit{kExitUsage};
  }
  std::vector<std::vector<double>> ks;
  auto add_k = [&](const Json& k) {
    if (!k.is_array() || k.size() != dim) {
      std::cerr << "qlat: k vector " << k.dump() << " must have " << dim << " numbers\n";
      throw Exit{kExitUsage};
    }
    ks.push_back(k.get<std::vector<double>>());
  };
  if (j.is_array()) {
    for (const auto& k : j) add_k(k);
    return ks;
  }
  if (!j.is_object()) {
    std::cerr << "qlat: " << path << ": expected an array of k vectors or an object\n";
    throw Exit{kExitUsage};
  }
  if (j.contains("k"))
    for (const auto& k : j["k"]) add_k(k);
  if (j.contains("dual")) {
    if (!j.contains("target")) {
      std::cerr << "qlat: " << path << ": \"dual\" entries need a \"target\"\n";
      throw Exit{kExitUsage};
    }
    const std::string target = j["target"].get<std::string>();
    for (const auto& n : j["dual"]) {
      const auto dual = n.get<std::vector<long long>>();
      std::vector<double> k(dim);
      check(qlat_reciprocal_point(target.c_str(), dual.data(), dual.size(), k.data(), dim));
      ks.push_back(std::move(k));
    }
  }
  return ks;
}

int run_diffract(const Options& o) {
  double* raw = nullptr;
  size_t n = 0, d = 0;
  check(qlat_read_patch_positions(o.in.c_str(), &raw, &n, &d));
  std::unique_ptr<double, void (*)(double*)> points(raw, qlat_free_doubles);
  const auto ks = load_k_list(o.k_list, d);
  std::vector<double> flat;
  for (const auto& k : ks) flat.insert(flat.end(), k.begin(), k.end());
  std::vector<double> intensity(ks.size());
  check(qlat_structure_factors(points.get(), n, d, flat.data(), ks.size(), intensity.data()));
  std::string text;
  if (o.format == "json") {
    Json rows = Json::array();
    for (std::size_t i = 0; i < ks.size(); ++i) rows.push_back({{"k", ks[i]}, {"intensity", intensity[i]}});
    text = Json{{"points", n}, {"peaks", rows}}.dump(2) + "\n";
  } else {
    text = "index";
    for (std::size_t i = 0; i < d; ++i) text += ",k" + std::to_string(i + 1);
    text += ",intensity\n";
    for (std::size_t i = 0; i < ks.size(); ++i) {
      text += std::to_string(i);
      for (double x : ks[i]) text += "," + fmt(x);
      text += "," + fmt(intensity[i]) + "\n";
    }
  }
  emit(o.out, text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact root systems, reflection groups and quasilattices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qlat_version());
  Options o;
  const std::vector<std::string> formats = {"json", "csv", "text"};
  auto add_common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    c->add_option("-o,--out", o.out, "Output file (default: stdout)");
  };

  auto* roots = app.add_subcommand("roots", "List the roots of a system");
  roots->add_option("--system", o.system, "H3, H4 or I2-n")->required();
  roots->add_flag("--count", o.count, "Print only the number of roots");
  add_common(roots);

  auto* group = app.add_subcommand("group", "Generate the reflection group");
  group->add_option("--system", o.system, "H3, H4 or I2-n")->required();
  group->add_flag("--count", o.count, "Print only the order");
  group->add_option("--emit", o.emit_path, "Write all matrices as JSON");
  group->add_option("--orbit", o.orbit, "Orbit of a vector, e.g. \"1,0,0,0\"");
  add_common(group);

  auto* icos = app.add_subcommand("icosians", "Unit icosians and the icosian ring");
  icos->add_flag("--check-closure", o.closure, "Check that the 120 unit icosians form a group");
  icos->add_option("--member", o.quaternion, "Test icosian-ring membership of w,x,y,z");
  add_common(icos);

  auto* member = app.add_subcommand("member", "Quasilattice membership");
  member->add_option("--ql", o.ql, "Quasilattice, e.g. H4 or H3-bcc")->required();
  member->add_option("--vector", o.vector, "Comma-separated coordinates, e.g. \"1/2,t/2,(t-1)/2,0\"")->required();
  add_common(member);

  auto* residues = app.add_subcommand("residues", "Allowed mod-2 residues of the H4 quasilattice");
  add_common(residues);

  auto* scale = app.add_subcommand("scale", "Classify factor^power * QL against QL");
  scale->add_option("--ql", o.ql, "Quasilattice")->required();
  scale->add_option("--factor", o.factor, "Unit of the ring, e.g. t or 1+t")->required();
  scale->add_option("--power", o.power, "Exponent (may be negative)");
  add_common(scale);

  auto* verify = app.add_subcommand("verify", "Reproduce the classification table / E8 projection");
  verify->add_flag("--table1", o.table1, "Scale-invariance table");
  verify->add_flag("--e8", o.e8, "E8 to icosian projection checks");
  add_common(verify);

  auto* project = app.add_subcommand("project", "Cut-and-project patch");
  project->add_option("--target", o.target, "H3-primitive, H3-fcc, H3-bcc or H4")->required();
  project->add_option("--radius", o.radius, "Parallel-space radius")->check(CLI::PositiveNumber);
  project->add_option("--window", o.window, "cell or ball")->check(CLI::IsMember({"cell", "ball"}));
  project->add_option("--window-scale", o.window_scale, "Window scale")->check(CLI::PositiveNumber);
  add_common(project);

  auto* diffract = app.add_subcommand("diffract", "Structure factors of a patch");
  diffract->add_option("--in", o.in, "Patch CSV")->required();
  diffract->add_option("--k-list", o.k_list, "JSON list of k vectors")->required();
  add_common(diffract);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*roots) return run_roots(o);
    if (*group) return run_group(o);
    if (*icos) return run_icosians(o);
    if (*member) return run_member(o);
    if (*residues) return run_residues(o);
    if (*scale) return run_scale(o);
    if (*verify) return run_verify(o);
    if (*project) return run_project(o);
    if (*diffract) return run_diffract(o);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "qlat: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
