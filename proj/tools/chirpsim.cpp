// chirpsim: stroboscopic dynamics of a frequency-chirped two-level system.
//
//   chirpsim simulate      --preset fig3 --out fig3.csv
//   chirpsim lz-sweep      --delta0 6 --eta 0.027 --alphas 0.0011,0.0023
//   chirpsim bloch-siegert --delta0 6 --eta 0.3
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include "ctls/analysis.hpp"
#include "ctls/config.hpp"
#include "ctls/csv.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonOptions {
  std::string preset;
  std::string config_path;
  std::string out;
  std::string dump_path;
  bool dump = false;
  std::map<std::string, std::string> overrides;
};

std::string option_name(const std::string& key) {
  std::string s = "--" + key;
  for (char& c : s) {
    if (c == '_') c = '-';
  }
  return s;
}

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--preset", opts.preset, "Start from a named preset")->check(CLI::IsMember({"fig3", "shalibo"}));
  cmd->add_option("--config", opts.config_path, "Flat key = value config file");
  cmd->add_option("--out", opts.out, "Output CSV path (default: stdout)");
  cmd->add_option("--dump-config", opts.dump_path, "Write the resolved config to PATH ('-' for stdout) and exit")
      ->expected(0, 1)
      ->default_str("-");
  for (const auto& key : ctls::config_keys()) {
    if (key == "output") continue;
    cmd->add_option_function<std::string>(
        option_name(key), [&opts, key](const std::string& v) { opts.overrides[key] = v; }, "Override '" + key + "'");
  }
}

ctls::RunConfig resolve_config(const CommonOptions& opts) {
  ctls::RunConfig cfg = opts.preset.empty() ? ctls::RunConfig{} : ctls::preset_config(opts.preset);
  if (!opts.config_path.empty()) cfg = ctls::load_config_file(opts.config_path, cfg);
  ctls::apply_settings(cfg, opts.overrides);
  if (!opts.out.empty()) cfg.output_path = opts.out;
  return cfg;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  std::ostream& log() { return file_ ? std::cout : std::cerr; }
  void close() {
    if (!file_) return;
    file_->close();
    if (!*file_) throw std::runtime_error("write to output file failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int cmd_simulate(const ctls::RunConfig& cfg) {
  const ctls::Simulation sim = ctls::resolve_simulation(cfg);
  const ctls::PeriodGrid grid = [&] {
    try {
      return ctls::build_grid(sim.drive);
    } catch (const std::exception& e) {
      throw ctls::ConfigError("alpha", e.what());
    }
  }();
  for (const auto& w : ctls::validity(sim.drive, grid).warnings()) std::cerr << "warning: " << w << '\n';

  std::vector<ctls::StroboscopicTrace> traces;
  for (ctls::Method m : sim.backends) {
    traces.push_back(ctls::run(m, sim.tls, sim.drive, grid, sim.initial, sim.integrator));
  }

  Output out(cfg.output_path);
  ctls::write_comment_block(out.stream(), ctls::dump_config(cfg));
  out.stream() << "# resolved n_periods = " << grid.n_periods() << '\n';
  ctls::write_trace_csv(out.stream(), traces, sim.tls, sim.drive);
  out.close();

  std::ostream& log = out.log();
  log << "periods: " << grid.n_periods() << ", t_N = " << grid.times().back() << " ns\n";
  for (std::size_t a = 0; a < traces.size(); ++a) {
    for (std::size_t b = a + 1; b < traces.size(); ++b) {
      const auto rep = ctls::compare(traces[a], traces[b]);
      log << ctls::method_name(rep.first) << " vs " << ctls::method_name(rep.second)
          << ": max |dP_x| = " << ctls::format_number(rep.max_abs_px_error)
          << ", mean |dP_x| = " << ctls::format_number(rep.mean_abs_px_error) << '\n';
    }
  }
  return 0;
}

int cmd_lz_sweep(const ctls::RunConfig& cfg) {
  const ctls::LzSweepSetup setup = ctls::resolve_lz_sweep(cfg);
  const auto points = ctls::lz_sweep(setup.tls, setup.eta, setup.alphas, setup.integrator, setup.window);

  Output out(cfg.output_path);
  ctls::write_comment_block(out.stream(), ctls::dump_config(cfg));
  ctls::write_lz_csv(out.stream(), points);
  out.close();

  double worst = 0.0;
  for (const auto& p : points) worst = std::max(worst, p.abs_err);
  out.log() << "Landau-Zener sweep: " << points.size() << " chirp rates, max |p_exact - p_formula| = "
            << ctls::format_number(worst) << '\n';
  return 0;
}

int cmd_bloch_siegert(const ctls::RunConfig& cfg) {
  const ctls::ResonanceScanSetup setup = ctls::resolve_bloch_siegert(cfg);
  const auto scan = ctls::bloch_siegert_scan(setup.tls, setup.eta, setup.omega0s, setup.integrator, setup.backends);

  Output out(cfg.output_path);
  ctls::write_comment_block(out.stream(), ctls::dump_config(cfg));
  ctls::write_resonance_csv(out.stream(), scan, setup.tls);
  out.close();

  out.log() << "predicted second-order shift 3 eta^2/(4 Delta) = "
            << ctls::format_number(scan.predicted_shift / ctls::kTwoPi) << " GHz\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stroboscopic dynamics of a frequency-chirped two-level system"};
  app.require_subcommand(1);

  CommonOptions sim_opts, lz_opts, bs_opts;
  auto* simulate = app.add_subcommand("simulate", "Run the selected backends on one chirp and write the traces");
  auto* lz = app.add_subcommand("lz-sweep", "Compare exact Landau-Zener transfer with the closed form");
  auto* bs = app.add_subcommand("bloch-siegert", "Locate the harmonic resonance peak for each backend");
  add_common(simulate, sim_opts);
  add_common(lz, lz_opts);
  add_common(bs, bs_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  const CommonOptions& opts = simulate->parsed() ? sim_opts : lz->parsed() ? lz_opts : bs_opts;
  try {
    const ctls::RunConfig cfg = resolve_config(opts);
    const CLI::Option* dump = (simulate->parsed() ? simulate : lz->parsed() ? lz : bs)->get_option("--dump-config");
    if (dump->count() > 0) {
      Output out(opts.dump_path);
      out.stream() << ctls::dump_config(cfg);
      out.close();
      return 0;
    }
    if (simulate->parsed()) return cmd_simulate(cfg);
    if (lz->parsed()) return cmd_lz_sweep(cfg);
    return cmd_bloch_siegert(cfg);
  } catch (const ctls::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ctls::IntegrationError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
