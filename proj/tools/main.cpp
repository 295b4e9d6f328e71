#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "langmuir/diagnostics.hpp"
#include "langmuir/errors.hpp"
#include "langmuir/initcurves.hpp"
#include "langmuir/scheme.hpp"
#include "langmuir/verify.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string snapshot_name(int step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "curve_%06d.csv", step);
  return buf;
}

// "key = value" per line; blank lines and #-comments allowed.
std::map<std::string, std::string> read_config_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw langmuir::Error("cannot open config file: " + path.string());
  std::map<std::string, std::string> entries;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw langmuir::ParseError(path.string() + ":" + std::to_string(lineno) +
                                 ": expected key = value");
    }
    entries[trim(stripped.substr(0, eq))] = trim(stripped.substr(eq + 1));
  }
  return entries;
}

int run_simulation(const langmuir::SimConfig& config) {
  using namespace langmuir;
  const fs::path out_dir(config.output_dir);
  fs::create_directories(out_dir);

  DiagnosticsWriter diag(out_dir / "diagnostics.csv");
  RunCallbacks callbacks;
  callbacks.on_step = [&](const SimulationState& state, const StepReport& report) {
    diag.write(record(state, report));
  };
  callbacks.on_snapshot = [&](const SimulationState& state) {
    write_curve_csv(out_dir / snapshot_name(state.step), state.curve, state.curvature);
  };

  double initial_length = 0.0;
  double initial_area = 0.0;
  {
    const PolygonalCurve initial = initial_polygon(config.initial, config.n);
    initial_length = total_length(initial);
    initial_area = enclosed_area(initial);
  }

  const auto t0 = std::chrono::steady_clock::now();
  const RunResult result = run(config, callbacks);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const DiagnosticsRecord final_record =
      record(result.final_state, StepReport{0.0, 0.0, 0.0});
  json summary = {
      {"status", result.status == RunStatus::completed       ? "completed"
                 : result.status == RunStatus::mesh_degenerate ? "mesh_degenerate"
                                                               : "solve_failed"},
      {"halt_reason", result.message},
      {"halt_step", result.halt_step},
      {"steps_completed", result.final_state.step},
      {"final_time", result.final_state.time},
      {"initial", descriptor_name(config.initial)},
      {"n", result.final_state.curve.size()},
      {"tau", config.tau},
      {"initial_length", initial_length},
      {"initial_area", initial_area},
      {"final_length", final_record.length},
      {"final_area", final_record.area},
      {"final_isoperimetric_ratio", final_record.isoperimetric_ratio},
      {"area_drift_rel", std::abs(final_record.area - initial_area) / initial_area},
      {"wall_seconds", wall},
  };
  std::ofstream summary_out(out_dir / "run.json");
  summary_out << summary.dump(2) << "\n";

  if (result.status != RunStatus::completed) {
    std::cerr << "halted: " << result.message << "\n";
    return result.status == RunStatus::mesh_degenerate ? 2 : 3;
  }
  std::cout << "completed " << result.final_state.step << " steps; final length "
            << final_record.length << ", area " << final_record.area
            << ", isoperimetric ratio " << final_record.isoperimetric_ratio << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary-integral evolution of a closed planar curve under the "
               "Langmuir-monolayer velocity law"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "Run a time evolution and write snapshots");
  std::string initial = "bola";
  std::string config_path;
  langmuir::SimConfig config;
  auto* opt_initial =
      sim->add_option("--initial", initial,
                      "Initial curve: bola[:eps,rho] | circle[:R[,cx,cy]] | "
                      "ellipse[:a,b] | file:PATH");
  auto* opt_n = sim->add_option("--n", config.n, "Number of vertices");
  auto* opt_tau = sim->add_option("--tau", config.tau, "Time step");
  auto* opt_steps = sim->add_option("--steps", config.steps, "Number of steps");
  auto* opt_snap =
      sim->add_option("--snapshot-every", config.snapshot_every, "Snapshot cadence");
  auto* opt_out = sim->add_option("--out", config.output_dir, "Output directory");
  auto* opt_min_edge = sim->add_option("--min-edge-factor", config.min_edge_factor,
                                       "Abort when min edge < factor * initial mean edge");
  auto* opt_chord_arc =
      sim->add_option("--chord-arc-min", config.chord_arc_min,
                      "Abort when the chord-arc constant falls below this");
  sim->add_option("--config", config_path, "key = value file; flags take precedence");

  // verify
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  ver->add_option("suite", suite, "kernel | scheme | convergence | all");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      if (!config_path.empty()) {
        const auto file = read_config_file(config_path);
        auto apply = [&](const char* key, const CLI::Option* opt, auto setter) {
          const auto it = file.find(key);
          if (it != file.end() && opt->count() == 0) setter(it->second);
        };
        apply("initial", opt_initial, [&](const std::string& v) { initial = v; });
        apply("n", opt_n, [&](const std::string& v) { config.n = std::stoi(v); });
        apply("tau", opt_tau, [&](const std::string& v) { config.tau = std::stod(v); });
        apply("steps", opt_steps,
              [&](const std::string& v) { config.steps = std::stoi(v); });
        apply("snapshot_every", opt_snap,
              [&](const std::string& v) { config.snapshot_every = std::stoi(v); });
        apply("out", opt_out, [&](const std::string& v) { config.output_dir = v; });
        apply("min_edge_factor", opt_min_edge,
              [&](const std::string& v) { config.min_edge_factor = std::stod(v); });
        apply("chord_arc_min", opt_chord_arc,
              [&](const std::string& v) { config.chord_arc_min = std::stod(v); });
      }
      config.initial = langmuir::parse_descriptor(initial);
      config.validate();
      return run_simulation(config);
    }
    const auto results = langmuir::run_suite(langmuir::parse_suite(suite), &std::cout);
    return langmuir::all_passed(results) ? 0 : 1;
  } catch (const langmuir::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
