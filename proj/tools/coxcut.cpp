#include <coxcut/coxcut.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace coxcut;

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2, budget = 3 };

struct Options {
  int rank = 0;
  std::string weight;
  std::string frame = "coxeter";
  std::string window;  // empty: per-rank default
  std::string shift;   // empty: per-rank default
  std::optional<double> radius;
  double budget = default_budget;
  std::string format;  // empty: every format the subcommand produces
  std::string out;
  unsigned seed = 0;   // reserved
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

// "0,0,0,1" or the compact "0001".
std::vector<int> parse_weight(const std::string& s, int rank) {
  std::vector<int> a;
  try {
    if (s.find(',') != std::string::npos) {
      for (const auto& t : split(s, ',')) {
        std::size_t used = 0;
        a.push_back(std::stoi(t, &used));
        if (used != t.size()) throw UsageError("");
      }
    } else {
      for (char c : s) {
        if (c < '0' || c > '9') throw UsageError("");
        a.push_back(c - '0');
      }
    }
  } catch (const std::exception&) {
    throw UsageError("weight '" + s + "' is not a list of integers");
  }
  if (static_cast<int>(a.size()) != rank)
    throw UsageError("weight needs " + std::to_string(rank) + " entries, got " + std::to_string(a.size()));
  for (int x : a)
    if (x < 0) throw UsageError("weight entries must be non-negative");
  return a;
}

Shift parse_shift(const std::string& s, int rank) {
  if (s == "omega") return Shift::omega(rank);
  if (s == "zero") return Shift::zero(rank);
  const auto parts = split(s, ',');
  Eigen::VectorXd v(static_cast<Eigen::Index>(parts.size()));
  try {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::size_t used = 0;
      v(static_cast<Eigen::Index>(i)) = std::stod(parts[i], &used);
      if (used != parts[i].size()) throw UsageError("");
    }
  } catch (const std::exception&) {
    throw UsageError("shift '" + s + "' is neither omega, zero nor a comma separated vector");
  }
  return Shift::custom(v);
}

void require_rank(const Options& o) {
  if (o.rank == 0) throw UsageError("--rank is required");
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  if (o.format.empty()) return;
  for (const char* a : allowed)
    if (o.format == a) return;
  throw UsageError("format '" + o.format + "' is not available for this command");
}

// Writes to `path`, or stdout for an empty path or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream os(p, std::ios::binary);
  if (!os) throw Error("cannot write " + path);
  os << text;
}

fs::path output_dir(const Options& o) {
  if (o.out.empty() || o.out == "-") throw UsageError("--out DIR is required unless --format selects a single output");
  fs::create_directories(o.out);
  return o.out;
}

template <class Fn>
std::string render(Fn&& fn) {
  std::ostringstream os;
  fn(os);
  return os.str();
}

json vector_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (double x : v) a.push_back(x == 0.0 ? 0.0 : x);
  return a;
}

int cmd_orbit(const Options& o) {
  require_rank(o);
  require_format(o, {"csv", "json"});
  if (o.weight.empty()) throw UsageError("--weight is required");
  const RootDatum d = build_root_datum(o.rank);
  const auto set = orbit(d, parse_weight(o.weight, o.rank));
  if (o.format == "json") {
    json j{{"label", set.label()}, {"size", set.points.size()}, {"points", json::array()}};
    for (const auto& p : set.points) j["points"].push_back(vector_json(p.to_real()));
    emit(o.out, j.dump(2) + "\n");
  } else {
    emit(o.out, render([&](std::ostream& os) { write_orbit_csv(os, set); }));
  }
  return ok;
}

json solid_json(const NamedSolid& s) {
  json classes = json::array();
  for (const auto& c : s.report.norm_classes) classes.push_back({{"norm", c.norm}, {"count", c.count}});
  return {{"name", s.name},           {"label", s.report.label},        {"vertex_count", s.report.vertex_count},
          {"hull_vertices", s.shape.vertices.size()}, {"faces", s.shape.faces.size()}, {"norm_classes", classes},
          {"suborbits", s.report.suborbits}};
}

int cmd_solids(const Options& o) {
  require_rank(o);
  require_format(o, {"json", "off"});
  const auto solids = named_solids(o.rank);
  json report{{"rank", o.rank}, {"solids", json::array()}};
  for (const auto& s : solids) report["solids"].push_back(solid_json(s));
  if (o.format == "json") {
    emit(o.out, report.dump(2) + "\n");
    return ok;
  }
  const fs::path dir = output_dir(o);
  if (o.format.empty()) emit((dir / "solids.json").string(), report.dump(2) + "\n");
  for (const auto& s : solids)
    emit((dir / (s.name + ".off")).string(), render([&](std::ostream& os) { write_off(os, s.shape); }));
  return ok;
}

json pattern_json(const Pattern& p, const Window& w) {
  json j;
  j["rank"] = p.meta.rank;
  j["frame"] = p.meta.frame_id;
  j["window"] = {{"mode", to_string(w.mode)},
                 {"shift", {{"label", w.shift.label}, {"vector", vector_json(w.shift.vector)}}},
                 {"dimension", w.dim()},
                 {"centre", vector_json(w.centre)},
                 {"radius", w.radius},
                 {"vertices", w.vertices.size()},
                 {"facets", w.facets.size()}};
  j["par_radius"] = p.meta.par_radius;
  j["search_radius"] = p.meta.search_radius;
  j["candidates"] = p.meta.candidates;
  j["counts"] = {{"points", p.points.size()}, {"edges", p.edges.size()}};
  std::vector<long> by_axis(static_cast<std::size_t>(p.meta.rank), 0);
  for (const auto& e : p.edges) ++by_axis[static_cast<std::size_t>(e.axis - 1)];
  j["edges_by_axis"] = by_axis;
  if (p.par_dim() == 2) {
    json dirs = json::array();
    for (double a : edge_directions(p)) dirs.push_back(std::round(a * 180.0 / pi * 1e6) / 1e6);
    j["edge_directions_deg"] = dirs;
    j["tiles"] = tile_census(p);
    if (p.meta.frame_id == "coxeter") {
      const int h = 2 * p.meta.rank;
      j["symmetry"] = {{"order", h}, {"deviation", symmetry_deviation(p, h)}};
    }
  }
  return j;
}

int run_patch(const Options& o, const RootDatum& d, const Frame& f, const Window& w, double radius) {
  Pattern p = generate_patch(d, f, w, radius, o.budget);
  attach_edges(p);
  const bool planar = p.par_dim() == 2;
  auto csv = [&] { return render([&](std::ostream& os) { write_pattern_csv(os, p); }); };
  auto meta = [&] { return pattern_json(p, w).dump(2) + "\n"; };
  auto picture = [&] {
    return render([&](std::ostream& os) { planar ? write_pattern_svg(os, p) : write_points_off(os, p); });
  };
  if (o.format == "csv") emit(o.out, csv());
  else if (o.format == "json") emit(o.out, meta());
  else if (o.format == "svg" || o.format == "off") {
    if ((o.format == "svg") != planar) throw UsageError(planar ? "planar patches export as svg" : "3D patches export as off");
    emit(o.out, picture());
  } else {
    const fs::path dir = output_dir(o);
    emit((dir / "patch.csv").string(), csv());
    emit((dir / "patch.json").string(), meta());
    emit((dir / (planar ? "patch.svg" : "patch.off")).string(), picture());
  }
  return ok;
}

int cmd_patch(const Options& o) {
  require_rank(o);
  require_format(o, {"csv", "json", "svg", "off"});
  const RootDatum d = build_root_datum(o.rank);
  const Frame f = frame_by_name(o.frame, o.rank);
  // B_4 uses the disc around V(omega_4); higher ranks the zero-shift hull
  const std::string mode = o.window.empty() ? (o.rank == 4 ? "disc" : "hull") : o.window;
  const std::string shift = o.shift.empty() ? (o.rank == 4 ? "omega" : "zero") : o.shift;
  const Window w = build_window(d, f, window_mode_from(mode), parse_shift(shift, o.rank));
  return run_patch(o, d, f, w, o.radius.value_or(8.0));
}

int cmd_icosa_patch(const Options& o) {
  require_format(o, {"csv", "json", "off"});
  if (o.rank != 0 && o.rank != 6) throw UsageError("icosa-patch is defined for rank 6 only");
  if (!o.window.empty() && o.window != "hull") throw UsageError("icosa-patch uses the hull window");
  const RootDatum d = build_root_datum(6);
  const Frame f = b6_h3_frame().frame;
  const Window w = build_window(d, f, WindowMode::hull, parse_shift(o.shift.empty() ? "zero" : o.shift, 6));
  return run_patch(o, d, f, w, o.radius.value_or(3.0));
}

int cmd_check(const Options& o) {
  require_format(o, {"json"});
  const auto results = run_checks();
  bool all = true;
  json list = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    list.push_back({{"name", r.name}, {"passed", r.passed}, {"value", r.value}, {"expected", r.expected}, {"delta", r.delta}});
    if (!r.passed) std::cerr << "check failed: " << r.name << " (value " << fmt(r.value) << ", expected " << fmt(r.expected) << ")\n";
  }
  emit(o.out, json{{"passed", all}, {"checks", list}}.dump(2) + "\n");
  return all ? ok : check_failed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter-Weyl orbits, projected polytopes and cut-and-project quasicrystals of the B_n lattices"};
  app.set_config("--config", "", "TOML file supplying option values; command-line flags take precedence");
  app.require_subcommand(1);

  Options o;
  app.add_option("--rank", o.rank, "Lattice rank n")->check(CLI::Range(min_rank, max_rank));
  app.add_option("--weight", o.weight, "Highest weight in Dynkin labels, e.g. 0001 or 0,0,0,1");
  app.add_option("--frame", o.frame, "Projection frame")->check(CLI::IsMember({"coxeter", "fivefold", "h3", "tbasis"}));
  app.add_option("--window", o.window, "Acceptance window (default: disc for rank 4, hull otherwise)")
      ->check(CLI::IsMember({"hull", "disc"}));
  app.add_option("--shift", o.shift, "Window shift: omega, zero or x1,...,xn (default: omega for rank 4, zero otherwise)");
  app.add_option("--radius", o.radius, "Radius of the patch in parallel space")->check(CLI::PositiveNumber);
  app.add_option("--budget", o.budget, "Largest number of candidate lattice points to scan")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "Single output format (default: all formats into --out DIR)")
      ->check(CLI::IsMember({"csv", "json", "svg", "off"}));
  app.add_option("--out", o.out, "Output file, or directory when every format is written; - for stdout");
  app.add_option("--seed", o.seed, "Reserved; generation is deterministic");

  const std::pair<const char*, const char*> commands[] = {
      {"orbit", "W(B_n) orbit of a highest weight as CSV"},
      {"solids", "OFF files and a report for the projected 3D solids"},
      {"patch", "Planar (or 3D) cut-and-project patch as CSV, JSON and SVG"},
      {"icosa-patch", "Icosahedral 3D patch from the 6D cubic lattice"},
      {"check", "Run the invariant suite and report as JSON"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "orbit") return cmd_orbit(o);
    if (cmd == "solids") return cmd_solids(o);
    if (cmd == "patch") return cmd_patch(o);
    if (cmd == "icosa-patch") return cmd_icosa_patch(o);
    return cmd_check(o);
  } catch (const BudgetError& e) {
    std::cerr << "coxcut: " << e.what() << '\n';
    return budget;
  } catch (const std::exception& e) {
    std::cerr << "coxcut: " << e.what() << '\n';
    return usage;
  }
}
