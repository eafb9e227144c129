// Copyright 2026 The latknot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// latknot command-line driver. Talks to the library only through latknot.h.
#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "latknot/latknot.h"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kInvalid = 3,
  kBudget = 4,
  kInconclusive = 5,
  kIo = 6,
  kInternal = 7,
};

struct CliError : std::runtime_error {
  CliError(int code, const std::string& msg) : std::runtime_error(msg), code(code) {}
  int code;
};

int exit_code(lk_status s) {
  switch (s) {
    case LK_OK: return kOk;
    case LK_ERR_PARSE: return kParse;
    case LK_ERR_INVALID_ARGUMENT:
    case LK_ERR_OUT_OF_RANGE: return kInvalid;
    case LK_ERR_BUDGET: return kBudget;
    case LK_ERR_INCONCLUSIVE: return kInconclusive;
    default: return kInternal;
  }
}

void check(lk_status s, const std::string& context) {
  if (s != LK_OK) throw CliError(exit_code(s), context + ": " + lk_last_error());
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Polygon = std::unique_ptr<lk_polygon, Deleter<lk_polygon, lk_polygon_free>>;
using Levels = std::unique_ptr<lk_levels, Deleter<lk_levels, lk_levels_free>>;
using Profile = std::unique_ptr<lk_profile, Deleter<lk_profile, lk_profile_free>>;
using Graph = std::unique_ptr<lk_graph, Deleter<lk_graph, lk_graph_free>>;
using Path = std::unique_ptr<lk_path, Deleter<lk_path, lk_path_free>>;
using Curve = std::unique_ptr<lk_curve, Deleter<lk_curve, lk_curve_free>>;

std::string take(char* s) {
  std::string out = s ? s : "";
  lk_string_free(s);
  return out;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw CliError(kIo, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out || !(out << text)) throw CliError(kIo, "cannot write " + p.string());
}

std::string sha256(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) {
    throw CliError(kInternal, "SHA-256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

struct Input {
  std::string path;
  std::string text;
};

Polygon load_polygon(const Input& in) {
  lk_polygon* p = nullptr;
  check(lk_polygon_parse(in.text.c_str(), &p), in.path);
  return Polygon(p);
}

Input read_input(const std::string& path) { return {path, read_file(path)}; }

json input_record(const Input& in) { return {{"path", in.path}, {"sha256", sha256(in.text)}}; }

class Fmt {
 public:
  explicit Fmt(bool full) : full_(full) {}
  std::string operator()(double v) const {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, full_ ? "%.17g" : "%.4f", v);
    return buf;
  }

 private:
  bool full_;
};

std::string raw_header() { return "length,d2_squared,d2,d_inf,rho2,rho_inf,crad2_sc,crad_inf_sc\n"; }

std::string raw_line(const lk_raw_row& r, const Fmt& f) {
  std::string frac = std::to_string(r.d2_squared_num);
  if (r.d2_squared_den != 1) frac += "/" + std::to_string(r.d2_squared_den);
  return std::to_string(r.length) + "," + frac + "," + f(r.d2) + "," + f(r.d_inf) + "," + f(r.rho2) + "," +
         f(r.rho_inf) + "," + f(r.crad2_sc) + "," + f(r.crad_inf_sc) + "\n";
}

json base_record(const std::string& command, const std::string& label) {
  json r;
  r["tool"] = "latknot";
  r["version"] = lk_version();
  r["command"] = command;
  r["knot_label"] = label;
  r["random_seed"] = nullptr;
  return r;
}

void write_record(const fs::path& dir, const json& record) { write_file(dir / "run_record.json", record.dump(2) + "\n"); }

// ---- eval ----

int cmd_eval(const std::string& seed, const std::string& out, bool full) {
  const Input in = read_input(seed);
  const Polygon p = load_polygon(in);
  lk_raw_row row{};
  check(lk_raw_row_eval(p.get(), &row), "eval");
  const std::string csv = raw_header() + raw_line(row, Fmt(full));
  std::cout << csv;
  if (!out.empty()) write_file(out, csv);
  return kOk;
}

// ---- detour-profile ----

struct DetourArgs {
  std::string seed;
  std::string out;
  std::string label = "unlabelled";
  std::string dedup = "point-set";
  int nmax = 0;
  unsigned workers = 1;
  std::size_t max_members = 0;
  bool full = false;
};

std::string profile_csv(const lk_profile* prof, int filtered, const Fmt& f) {
  std::string s = "N,exact_count,cumulative_count,best_rho2,best_rho_inf,best_crad2,best_crad_inf\n";
  for (std::size_t i = 0; i < lk_profile_row_count(prof); ++i) {
    lk_profile_row r{};
    check(lk_profile_get_row(prof, filtered, i, &r), "profile");
    s += std::to_string(r.level) + "," + std::to_string(r.exact_count) + "," + std::to_string(r.cumulative_count) +
         "," + f(r.best_rho2) + "," + f(r.best_rho_inf) + "," + f(r.best_crad2) + "," + f(r.best_crad_inf) + "\n";
  }
  return s;
}

int cmd_detour(const DetourArgs& a) {
  const Input in = read_input(a.seed);
  const Polygon seed = load_polygon(in);
  lk_levels* lv = nullptr;
  const lk_dedup dedup = a.dedup == "isometry" ? LK_DEDUP_ISOMETRY : LK_DEDUP_POINT_SET;
  check(lk_detour_levels(seed.get(), a.nmax, dedup, a.workers, a.max_members, &lv), "detour levels");
  const Levels levels(lv);
  lk_profile* pr = nullptr;
  check(lk_profile_compute(levels.get(), LK_LABEL_POSITIVE_DETOUR, a.workers, &pr), "profile");
  const Profile prof(pr);

  const Fmt f(a.full);
  const fs::path dir(a.out);
  const std::string exact = profile_csv(prof.get(), 0, f);
  const std::string filtered = profile_csv(prof.get(), 1, f);
  write_file(dir / "exact_profile.csv", exact);
  write_file(dir / "filtered_profile.csv", filtered);
  std::cout << "exact\n" << exact << "filtered\n" << filtered;

  const bool complete = lk_levels_complete(levels.get()) != 0;
  json rec = base_record("detour-profile", a.label);
  rec["inputs"] = json::array({input_record(in)});
  rec["length_cap"] = a.nmax;
  rec["dedup"] = a.dedup;
  std::uint64_t explored = 0;
  for (std::size_t i = 0; i < lk_levels_count(levels.get()); ++i) {
    std::size_t m = 0;
    check(lk_levels_info(levels.get(), i, nullptr, &m), "levels");
    explored += m;
  }
  rec["vertices_explored"] = explored;
  rec["smoothing_radii"] = json::array();
  rec["certification"] = nullptr;
  rec["search_label"] = lk_search_label_name(complete ? LK_LABEL_POSITIVE_DETOUR : LK_LABEL_CAPPED);
  rec["complete"] = complete;
  json best = json::array();
  static const char* kCols[4] = {"rho2", "rho_inf", "crad2", "crad_inf"};
  for (std::size_t i = 0; i < lk_profile_row_count(prof.get()); ++i) {
    lk_profile_row r{};
    check(lk_profile_get_row(prof.get(), 1, i, &r), "profile");
    const double vals[4] = {r.best_rho2, r.best_rho_inf, r.best_crad2, r.best_crad_inf};
    for (int k = 0; k < 4; ++k) {
      char* key = nullptr;
      check(lk_profile_argbest(prof.get(), 1, i, k, &key), "argbest");
      best.push_back({{"N", r.level}, {"column", kCols[k]}, {"value", vals[k]}, {"key", take(key)}});
    }
  }
  rec["best"] = best;
  rec["outputs"] = {"exact_profile.csv", "filtered_profile.csv"};
  write_record(dir, rec);
  if (!complete) {
    std::cerr << "level generation stopped at the member cap; tables are partial\n";
    return kBudget;
  }
  return kOk;
}

// ---- bfacf ----

struct BfacfArgs {
  std::vector<std::string> seeds;
  std::string out;
  std::string label = "unlabelled";
  int cap = 0;
  std::size_t budget = 0;
  double seconds = 0.0;
  bool full = false;
};

int cmd_bfacf(const BfacfArgs& a) {
  std::vector<Input> inputs;
  std::vector<Polygon> polys;
  for (const auto& s : a.seeds) {
    inputs.push_back(read_input(s));
    polys.push_back(load_polygon(inputs.back()));
  }
  std::vector<const lk_polygon*> raw;
  for (const auto& p : polys) raw.push_back(p.get());
  lk_graph* g = nullptr;
  check(lk_bfacf(raw.data(), raw.size(), a.cap, a.budget, a.seconds, &g), "bfacf");
  const Graph graph(g);
  const bool complete = lk_graph_complete(graph.get()) != 0;
  const std::size_t nv = lk_graph_vertex_count(graph.get());
  const std::size_t ne = lk_graph_edge_count(graph.get());
  const std::size_t nc = lk_graph_component_count(graph.get());

  std::cout << "cap " << a.cap << ": " << nv << " vertices, " << ne << " edges, " << nc << " components"
            << (complete ? "" : " (budget exhausted)") << "\n";
  const Fmt f(a.full);
  std::string csv = "component,vertices,seeds,min_rho2,min_rho_inf,min_crad2,min_crad_inf\n";
  for (std::size_t c = 0; c < nc; ++c) {
    lk_component comp{};
    check(lk_graph_component(graph.get(), c, &comp), "component");
    csv += std::to_string(c) + "," + std::to_string(comp.vertices) + "," + std::to_string(comp.seeds) + "," +
           f(comp.min_rho2) + "," + f(comp.min_rho_inf) + "," + f(comp.min_crad2) + "," + f(comp.min_crad_inf) + "\n";
  }
  std::string seeds_csv = "seed,path,component\n";
  json assignment = json::array();
  for (std::size_t s = 0; s < polys.size(); ++s) {
    std::size_t c = 0;
    check(lk_graph_seed_component(graph.get(), s, &c), "seed component");
    seeds_csv += std::to_string(s) + "," + a.seeds[s] + "," + std::to_string(c) + "\n";
    std::cout << "seed " << s << " (" << a.seeds[s] << ") -> component " << c << "\n";
    assignment.push_back({{"seed", a.seeds[s]}, {"component", c}});
  }
  std::cout << csv;

  if (!a.out.empty()) {
    const fs::path dir(a.out);
    write_file(dir / "components.csv", csv);
    write_file(dir / "seed_components.csv", seeds_csv);
    json rec = base_record("bfacf", a.label);
    json ins = json::array();
    for (const auto& in : inputs) ins.push_back(input_record(in));
    rec["inputs"] = ins;
    rec["length_cap"] = a.cap;
    rec["vertices_explored"] = nv;
    rec["edges"] = ne;
    rec["components"] = nc;
    rec["budget"] = {{"max_vertices", a.budget}, {"max_seconds", a.seconds}};
    rec["smoothing_radii"] = json::array();
    rec["certification"] = nullptr;
    rec["search_label"] = lk_search_label_name(complete ? LK_LABEL_SEED_GENERATED : LK_LABEL_CAPPED);
    rec["seed_components"] = assignment;
    rec["outputs"] = {"components.csv", "seed_components.csv"};
    write_record(dir, rec);
  }
  return complete ? kOk : kBudget;
}

// ---- merge ----

struct MergeArgs {
  std::string a, b;
  std::string certificate;
  std::string out;
  std::string label = "unlabelled";
  int nmax = 0;
  std::size_t budget = 0;
  double seconds = 0.0;
};

int cmd_merge(const MergeArgs& m) {
  const Input ia = read_input(m.a), ib = read_input(m.b);
  const Polygon pa = load_polygon(ia), pb = load_polygon(ib);
  lk_merge_status status{};
  int level = 0;
  lk_path* path = nullptr;
  check(lk_merge_scale(pa.get(), pb.get(), m.nmax, m.budget, m.seconds, &status, &level,
                       m.certificate.empty() ? nullptr : &path),
        "merge");
  const Path owned(path);
  std::string verdict;
  switch (status) {
    case LK_MERGED: verdict = "merged at N=" + std::to_string(level); break;
    case LK_NOT_MERGED: verdict = "not merged <= " + std::to_string(m.nmax); break;
    case LK_MERGE_INCONCLUSIVE: verdict = "inconclusive (budget) after N=" + std::to_string(level); break;
  }
  std::cout << verdict << "\n";
  if (owned) {
    char* text = nullptr;
    check(lk_path_serialize(owned.get(), &text), "path");
    write_file(m.certificate, take(text));
    std::cout << "path with " << lk_path_state_count(owned.get()) << " states written to " << m.certificate << "\n";
  }
  if (!m.out.empty()) {
    json rec = base_record("merge", m.label);
    rec["inputs"] = {input_record(ia), input_record(ib)};
    rec["length_cap"] = m.nmax;
    rec["vertices_explored"] = nullptr;
    rec["budget"] = {{"max_vertices", m.budget}, {"max_seconds", m.seconds}};
    rec["smoothing_radii"] = json::array();
    rec["certification"] = nullptr;
    rec["search_label"] =
        lk_search_label_name(status == LK_MERGE_INCONCLUSIVE ? LK_LABEL_CAPPED : LK_LABEL_SEED_GENERATED);
    rec["verdict"] = verdict;
    rec["merge_level"] = status == LK_MERGED ? json(level) : json(nullptr);
    rec["outputs"] = owned ? json::array({m.certificate}) : json::array();
    write_record(m.out, rec);
  }
  return status == LK_MERGE_INCONCLUSIVE ? kBudget : kOk;
}

// ---- eval-path ----

std::string svg_plot(const std::vector<lk_raw_row>& rows) {
  const double w = 640, h = 360, pad = 48;
  double lo = rows[0].rho2, hi = rows[0].rho2;
  for (const auto& r : rows) {
    lo = std::min({lo, r.rho2, r.crad2_sc});
    hi = std::max({hi, r.rho2, r.crad2_sc});
  }
  if (hi - lo < 1e-9) hi = lo + 1.0;
  const double n = std::max<double>(1.0, double(rows.size() - 1));
  auto x = [&](std::size_t i) { return pad + (w - 2 * pad) * double(i) / n; };
  auto y = [&](double v) { return h - pad - (h - 2 * pad) * (v - lo) / (hi - lo); };
  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << w - pad << "\" y2=\"" << h - pad
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << h - pad
     << "\" stroke=\"black\"/>\n";
  auto series = [&](auto get, const char* color, const char* name, double ly) {
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
    for (std::size_t i = 0; i < rows.size(); ++i) os << x(i) << "," << y(get(rows[i])) << " ";
    os << "\"/>\n<text x=\"" << w - pad - 80 << "\" y=\"" << ly << "\" fill=\"" << color
       << "\" font-size=\"12\">" << name << "</text>\n";
  };
  series([](const lk_raw_row& r) { return r.rho2; }, "steelblue", "rho2", pad);
  series([](const lk_raw_row& r) { return r.crad2_sc; }, "firebrick", "crad2_sc", pad + 16);
  os << "<text x=\"" << w / 2 << "\" y=\"" << h - 12 << "\" font-size=\"12\">state</text>\n";
  os << "<text x=\"4\" y=\"" << pad - 8 << "\" font-size=\"12\">" << hi << "</text>\n";
  os << "<text x=\"4\" y=\"" << h - pad << "\" font-size=\"12\">" << lo << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

int cmd_eval_path(const std::string& file, const std::string& out, const std::string& plot, bool full) {
  const Input in = read_input(file);
  lk_path* p = nullptr;
  check(lk_path_parse(in.text.c_str(), &p), in.path);
  const Path path(p);
  check(lk_path_validate(path.get()), "path validation");
  std::vector<lk_raw_row> rows(lk_path_state_count(path.get()));
  check(lk_path_eval(path.get(), rows.data(), rows.size()), "path evaluation");
  const Fmt f(full);
  std::string csv = "state_index,edges,D2,Dinf,rho2,rhoinf,crad2_sc,cradinf_sc\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    csv += std::to_string(i) + "," + std::to_string(r.length) + "," + f(r.d2) + "," + f(r.d_inf) + "," + f(r.rho2) +
           "," + f(r.rho_inf) + "," + f(r.crad2_sc) + "," + f(r.crad_inf_sc) + "\n";
  }
  std::cout << csv;
  if (!out.empty()) write_file(out, csv);
  if (!plot.empty()) write_file(plot, svg_plot(rows));
  return kOk;
}

// ---- smooth ----

struct SmoothArgs {
  std::string input;
  std::string out;
  std::string label = "unlabelled";
  std::vector<double> radii{0.25};
  double tol = 1e-6;
  int max_depth = 48;
  int nmax = 0;
  unsigned workers = 1;
  bool full = false;
};

std::vector<Input> smooth_inputs(const std::string& path) {
  std::vector<Input> out;
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(path)) {
      if (e.is_regular_file() && e.path().extension() == ".txt") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back(read_input(f.string()));
    if (out.empty()) throw CliError(kIo, "no .txt polygon files in " + path);
  } else {
    out.push_back(read_input(path));
  }
  return out;
}

int cmd_smooth(const SmoothArgs& a) {
  const auto inputs = smooth_inputs(a.input);
  const lk_certify_options opts{a.tol, a.max_depth};
  const Fmt f(a.full);
  const fs::path dir(a.out);
  bool inconclusive = false;

  std::string csv = "polygon,radius,status,tau_cert,length,d2,d_inf,rho2,rho_inf,crad2,crad_inf\n";
  json certs = json::array();
  for (const auto& in : inputs) {
    const Polygon poly = load_polygon(in);
    for (const double r : a.radii) {
      lk_curve* c = nullptr;
      check(lk_round_corners(poly.get(), r, &c), "rounding");
      const Curve curve(c);
      const std::string name = fs::path(in.path).stem().string();
      char rbuf[32];
      std::snprintf(rbuf, sizeof rbuf, "%g", r);

      int pass = 0;
      char* reason = nullptr;
      check(lk_curve_embedded(curve.get(), &opts, &pass, &reason), "embeddedness");
      if (!pass) {
        const std::string why = take(reason);
        std::cerr << "discarded " << in.path << " r=" << rbuf << ": " << why << "\n";
        csv += name + "," + rbuf + ",discarded,,,,,,,,\n";
        certs.push_back({{"polygon", in.path}, {"radius", r}, {"status", "discarded"}, {"reason", why}});
        continue;
      }
      lk_certificate cert{};
      check(lk_curve_certify(curve.get(), &opts, &cert), "certification");
      json cj = {{"polygon", in.path},
                 {"radius", r},
                 {"status", cert.certified ? "certified" : "inconclusive"},
                 {"tau_cert", cert.tau_cert},
                 {"min_arc_radius", cert.min_arc_radius},
                 {"min_nonadjacent_halfdist", cert.min_nonadjacent_halfdist},
                 {"max_curvature", cert.max_curvature},
                 {"max_tangent_mismatch", cert.max_tangent_mismatch},
                 {"exclusion_arclength", cert.exclusion_arclength},
                 {"pairs_checked", cert.pairs_checked},
                 {"boxes_explored", cert.boxes_explored},
                 {"tol", cert.tol},
                 {"max_depth", cert.max_depth}};
      if (!a.out.empty()) {
        char* text = nullptr;
        check(lk_curve_serialize(curve.get(), &text), "curve");
        const std::string curve_file = "curves/" + name + "_r" + rbuf + ".txt";
        write_file(dir / curve_file, take(text));
        cj["curve_file"] = curve_file;
      }
      if (!cert.certified) {
        inconclusive = true;
        cj["note"] = lk_last_error();
        std::cerr << "inconclusive " << in.path << " r=" << rbuf << ": " << lk_last_error() << "\n";
        csv += name + "," + rbuf + ",inconclusive,,,,,,,,\n";
        certs.push_back(cj);
        continue;
      }
      certs.push_back(cj);
      lk_smoothed_row row{};
      check(lk_curve_smoothed_row(curve.get(), &cert, &row), "smoothed row");
      csv += name + "," + rbuf + ",certified," + f(row.tau_cert) + "," + f(row.length) + "," + f(row.d2) + "," +
             f(row.d_inf) + "," + f(row.rho2) + "," + f(row.rho_inf) + "," + f(row.crad2) + "," + f(row.crad_inf) +
             "\n";
    }
  }
  std::cout << csv;

  json outputs = json::array();
  std::string exact_csv, filtered_csv;
  if (a.nmax > 0) {
    if (inputs.size() != 1) throw CliError(kUsage, "--nmax needs a single seed file");
    const Polygon seed = load_polygon(inputs[0]);
    lk_levels* lv = nullptr;
    check(lk_detour_levels(seed.get(), a.nmax, LK_DEDUP_POINT_SET, a.workers, 0, &lv), "detour levels");
    const Levels levels(lv);
    const std::size_t n = lk_levels_count(levels.get());
    std::vector<lk_smoothed_profile_row> ex(n), fi(n);
    check(lk_smoothed_profile(levels.get(), a.radii.data(), a.radii.size(), &opts, a.workers, ex.data(), fi.data(), n),
          "smoothed profile");
    auto table = [&](const std::vector<lk_smoothed_profile_row>& rows) {
      std::string s = "N,members,curves,skipped,best_rho2,best_rho_inf,best_crad2,best_crad_inf\n";
      for (const auto& r : rows) {
        s += std::to_string(r.level) + "," + std::to_string(r.members) + "," + std::to_string(r.curves) + "," +
             std::to_string(r.skipped) + "," + f(r.best_rho2) + "," + f(r.best_rho_inf) + "," + f(r.best_crad2) +
             "," + f(r.best_crad_inf) + "\n";
        if (r.skipped > 0) inconclusive = true;
      }
      return s;
    };
    exact_csv = table(ex);
    filtered_csv = table(fi);
    std::cout << "smoothed exact\n" << exact_csv << "smoothed filtered\n" << filtered_csv;
  }

  if (!a.out.empty()) {
    write_file(dir / "smoothed_rows.csv", csv);
    write_file(dir / "certificates.json", certs.dump(2) + "\n");
    outputs = {"smoothed_rows.csv", "certificates.json"};
    if (a.nmax > 0) {
      write_file(dir / "smoothed_exact_profile.csv", exact_csv);
      write_file(dir / "smoothed_filtered_profile.csv", filtered_csv);
      outputs.push_back("smoothed_exact_profile.csv");
      outputs.push_back("smoothed_filtered_profile.csv");
    }
    json rec = base_record("smooth", a.label);
    json ins = json::array();
    for (const auto& in : inputs) ins.push_back(input_record(in));
    rec["inputs"] = ins;
    rec["length_cap"] = a.nmax > 0 ? json(a.nmax) : json(nullptr);
    rec["vertices_explored"] = nullptr;
    rec["smoothing_radii"] = a.radii;
    rec["certification"] = {{"tol", a.tol}, {"max_depth", a.max_depth}};
    rec["search_label"] = lk_search_label_name(a.nmax > 0 ? LK_LABEL_POSITIVE_DETOUR : LK_LABEL_SEED_GENERATED);
    rec["outputs"] = outputs;
    write_record(dir, rec);
  }
  return inconclusive ? kInconclusive : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice knot density and compression tools"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lk_version()));

  std::string eval_seed, eval_out;
  bool eval_full = false;
  auto* eval = app.add_subcommand("eval", "Raw lattice functionals of one polygon");
  eval->add_option("seed", eval_seed, "Polygon file")->required()->check(CLI::ExistingFile);
  eval->add_option("--out", eval_out, "CSV output file");
  eval->add_flag("--full-precision", eval_full, "17 significant digits");

  DetourArgs da;
  auto* detour = app.add_subcommand("detour-profile", "Positive-detour level profile from a seed");
  detour->add_option("seed", da.seed, "Seed polygon file")->required()->check(CLI::ExistingFile);
  detour->add_option("--nmax", da.nmax, "Largest level")->required();
  detour->add_option("--out", da.out, "Output directory")->required();
  detour->add_option("--dedup", da.dedup, "point-set or isometry")
      ->check(CLI::IsMember({"point-set", "isometry"}))
      ->capture_default_str();
  detour->add_option("--workers", da.workers, "Worker threads")->check(CLI::PositiveNumber);
  detour->add_option("--max-members", da.max_members, "Stop before a level larger than this");
  detour->add_option("--label", da.label, "Knot label for the run record");
  detour->add_flag("--full-precision", da.full, "17 significant digits");

  BfacfArgs ba;
  auto* bfacf = app.add_subcommand("bfacf", "Seed-generated BFACF move graph");
  bfacf->add_option("seeds", ba.seeds, "Seed polygon files")->required()->check(CLI::ExistingFile);
  bfacf->add_option("--cap", ba.cap, "Length cap")->required();
  bfacf->add_option("--budget", ba.budget, "Vertex budget (0 = default)");
  bfacf->add_option("--seconds", ba.seconds, "Wall-clock budget (0 = none)");
  bfacf->add_option("--out", ba.out, "Output directory");
  bfacf->add_option("--label", ba.label, "Knot label for the run record");
  bfacf->add_flag("--full-precision", ba.full, "17 significant digits");

  MergeArgs ma;
  auto* merge = app.add_subcommand("merge", "Smallest cap at which two seeds share a component");
  merge->add_option("seed_a", ma.a, "First seed")->required()->check(CLI::ExistingFile);
  merge->add_option("seed_b", ma.b, "Second seed")->required()->check(CLI::ExistingFile);
  merge->add_option("--nmax", ma.nmax, "Largest cap tried")->required();
  merge->add_option("--budget", ma.budget, "Vertex budget per cap (0 = default)");
  merge->add_option("--seconds", ma.seconds, "Wall-clock budget per cap (0 = none)");
  merge->add_option("--certificate", ma.certificate, "Write a move path file");
  merge->add_option("--out", ma.out, "Directory for the run record");
  merge->add_option("--label", ma.label, "Knot label for the run record");

  std::string path_file, path_out, path_plot;
  bool path_full = false;
  auto* evp = app.add_subcommand("eval-path", "Replay and evaluate a move path file");
  evp->add_option("path", path_file, "Path file")->required()->check(CLI::ExistingFile);
  evp->add_option("--out", path_out, "CSV output file");
  evp->add_option("--plot", path_plot, "SVG chart of rho2 and crad2 along the path");
  evp->add_flag("--full-precision", path_full, "17 significant digits");

  SmoothArgs sa;
  auto* smooth = app.add_subcommand("smooth", "Corner rounding, certification and smoothed functionals");
  smooth->add_option("input", sa.input, "Polygon file or directory of .txt polygon files")
      ->required()
      ->check(CLI::ExistingPath);
  smooth->add_option("--radii", sa.radii, "Rounding radii in (0, 1/2)")
      ->delimiter(',')
      ->check(CLI::Validator(
          [](std::string& s) -> std::string {
            const double r = std::stod(s);
            return r > 0.0 && r < 0.5 ? "" : "radius " + s + " outside (0, 1/2)";
          },
          "in (0, 1/2)"));
  smooth->add_option("--tol", sa.tol, "Certification tolerance")->check(CLI::PositiveNumber);
  smooth->add_option("--max-depth", sa.max_depth, "Subdivision depth budget")->check(CLI::PositiveNumber);
  smooth->add_option("--nmax", sa.nmax, "Also build the smoothed detour profile up to this level");
  smooth->add_option("--workers", sa.workers, "Worker threads")->check(CLI::PositiveNumber);
  smooth->add_option("--out", sa.out, "Output directory");
  smooth->add_option("--label", sa.label, "Knot label for the run record");
  smooth->add_flag("--full-precision", sa.full, "17 significant digits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(eval_seed, eval_out, eval_full);
    if (*detour) return cmd_detour(da);
    if (*bfacf) return cmd_bfacf(ba);
    if (*merge) return cmd_merge(ma);
    if (*evp) return cmd_eval_path(path_file, path_out, path_plot, path_full);
    if (*smooth) return cmd_smooth(sa);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
