#include "symwork/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>

#include "symwork/dicke.hpp"
#include "symwork/errors.hpp"
#include "symwork/regime.hpp"
#include "symwork/table.hpp"
#include "symwork/thermal.hpp"
#include "symwork/work.hpp"

namespace symwork::cli {

double beta_tilde_from_si(double omega_eg, double temperature) {
  if (!(omega_eg > 0.0)) throw UsageError("--omega-eg must be > 0 in SI mode");
  if (!(temperature > 0.0)) throw UsageError("--temperature must be > 0 kelvin");
  return kHbar * omega_eg / (kBoltzmann * temperature);
}

namespace {

struct OutputOptions {
  std::string format = "csv";
  std::string output;
  std::string config;
};

// Either beta_tilde directly, or (T, omega_eg) in SI units with --si.
struct TemperatureOptions {
  std::optional<double> beta_tilde;
  bool si = false;
  std::optional<double> temperature;
  double omega_eg = 1.0;
  int k_max = 1;

  struct Resolved {
    ThermalParams params;
    double energy_unit;  // multiplies energies in units of omega_eg on output
  };

  Resolved resolve() const {
    if (si) {
      if (beta_tilde) throw UsageError("give either --beta-tilde or --si with --temperature, not both");
      if (!temperature) throw UsageError("--si needs --temperature (kelvin) and --omega-eg (rad/s)");
      ThermalParams p{beta_tilde_from_si(omega_eg, *temperature), 1.0, k_max};
      p.validate();
      return {p, kHbar * omega_eg};
    }
    if (temperature) throw UsageError("--temperature is only meaningful with --si");
    if (!beta_tilde) throw UsageError("missing --beta-tilde (or --si with --temperature)");
    ThermalParams p{*beta_tilde, omega_eg, k_max};
    p.validate();
    return {p, 1.0};
  }
};

void add_output_options(CLI::App& sub, OutputOptions& o) {
  sub.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("-o,--output", o.output, "Output file (default: stdout)");
  sub.add_option("--config", o.config, "Flat key=value file; flags on the command line win");
}

void add_temperature_options(CLI::App& sub, TemperatureOptions& t) {
  sub.add_option("--beta-tilde", t.beta_tilde, "hbar*omega_eg / (k_B T)");
  sub.add_flag("--si", t.si, "Read --temperature in K and --omega-eg in rad/s; energies in J");
  sub.add_option("--temperature", t.temperature, "Bath temperature in kelvin (with --si)");
  sub.add_option("--omega-eg", t.omega_eg, "Level spacing (natural units, or rad/s with --si)");
  sub.add_option("--k-max", t.k_max, "Ladder truncation level")->check(CLI::PositiveNumber);
}

std::uint64_t parse_seed(const std::string& text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("invalid --seed '" + text + "': expected a non-negative 64-bit integer");
  }
  return v;
}

void emit(const Table& table, const OutputOptions& o, std::ostream& out, bool flat_json = false) {
  auto write = [&](std::ostream& os) {
    if (o.format == "json") {
      write_json(os, table, flat_json);
    } else {
      write_csv(os, table);
    }
  };
  if (o.output.empty()) {
    write(out);
    return;
  }
  std::filesystem::path path(o.output);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / path;
    }
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + path.string() + "'");
  write(file);
}

// --- work-sweep -----------------------------------------------------------

struct SweepOptions {
  std::optional<double> beta_tilde;
  std::optional<double> beta_min;
  std::optional<double> beta_max;
  double beta_step = 1.0;
  std::int64_t n = 1000000;
  int k_max = 1;
  double omega_eg = 1.0;
};

std::vector<double> sweep_points(const SweepOptions& s) {
  if (s.beta_tilde) {
    if (s.beta_min || s.beta_max) throw UsageError("give either --beta-tilde or a --beta-min/--beta-max range");
    return {*s.beta_tilde};
  }
  if (!s.beta_min || !s.beta_max) throw UsageError("work-sweep needs --beta-min and --beta-max (or --beta-tilde)");
  if (!(s.beta_step > 0.0)) throw UsageError("--beta-step must be > 0");
  if (*s.beta_max < *s.beta_min) throw UsageError("empty range: --beta-max < --beta-min");
  const double width = *s.beta_max - *s.beta_min;
  const auto count = static_cast<std::int64_t>(std::floor(width / s.beta_step * (1.0 + 1e-12) + 1e-12)) + 1;
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) pts.push_back(*s.beta_min + static_cast<double>(i) * s.beta_step);
  return pts;
}

Table work_sweep(const SweepOptions& s) {
  Table t{"work-sweep", {"beta_tilde", "x", "s_exact", "s_approx", "w_exact", "w_approx", "relative_error"}, {}};
  for (double beta : sweep_points(s)) {
    if (!(beta > 0.0)) throw UsageError("beta_tilde must be > 0 in a work sweep");
    const ThermalParams p{beta, s.omega_eg, s.k_max};
    const double x = occupation_x(p).x;
    const double s_exact = von_neumann_entropy(rethermalize(s.n - 1, p));
    const double s_approx = entropy_lowT_approx(x, beta);
    const double w_exact = condensate_work(s.n, p);
    const double w_approx = x * s.omega_eg;
    t.add_row({beta, x, s_exact, s_approx, w_exact, w_approx, (w_exact - w_approx) / w_approx});
  }
  return t;
}

// --- cycle ----------------------------------------------------------------

struct CycleOptions {
  std::int64_t n = 1000000;
  int cycles = 1;
  std::string seed = std::to_string(kDefaultSeed);
  bool post_select_e = false;
};

Table cycle_table(const WorkLedger& ledger, double unit) {
  Table t{"cycle",
          {"cycle", "n_before", "n_after", "outcome", "outcome_probability", "s_meas", "s_ther",
           "work_extracted", "heat_from_bath", "internal_energy_change", "energy_removed_by_recoil",
           "finite_size_correction", "cumulative_work"},
          {}};
  double cumulative = 0.0;
  for (const auto& e : ledger.entries) {
    cumulative += e.work_extracted;
    t.add_row({std::int64_t{e.index}, e.n_before, e.n_after, std::string(to_string(e.outcome)),
               e.outcome_probability, e.s_meas, e.s_ther, unit * e.work_extracted,
               unit * e.heat_from_bath, unit * e.internal_energy_change,
               unit * e.energy_removed_by_recoil, unit * e.finite_size_correction,
               unit * cumulative});
  }
  return t;
}

// --- regime ---------------------------------------------------------------

struct RegimeOptions {
  std::string density;
  double omega_r = 0.0;
  std::int64_t n = 1;
  double coupling = 1.0;
  double tolerance = DensityGrid::kDefaultNormTolerance;
};

Table regime_table(const RegimeOptions& r) {
  const DensityGrid grid = load_density_csv(r.density);
  const double u = u_int_from_density(grid, r.n, r.coupling, r.tolerance);
  const RegimeVerdict v = recoil_gate(r.omega_r, u);
  Table t{"regime", {"u_int", "omega_r", "regime"}, {}};
  t.add_row({v.u_int, v.omega_r, std::string(to_string(v.regime))});
  return t;
}

// --- schmidt --------------------------------------------------------------

Table schmidt_table(std::int64_t n, std::int64_t k) {
  if (n < 2) throw UsageError("schmidt needs n >= 2");
  if (k < 0 || k > n) throw UsageError("schmidt needs 0 <= k <= n");
  const ParticleSplit s = split_one_particle(make_dicke(n, k));
  Table t{"schmidt", {"n", "k", "c_ground", "c_excited", "c_ground_sq", "c_excited_sq"}, {}};
  t.add_row({n, k, s.c_ground, s.c_excited, s.c_ground * s.c_ground, s.c_excited * s.c_excited});
  return t;
}

// --- compare-eiwe ---------------------------------------------------------

struct EiweOptions {
  double xi = 1.0;
  std::optional<double> nbar;
  double omega_a = 1.0;
  std::int64_t n = 1000000;
};

Table compare_table(const EiweOptions& o, const TemperatureOptions::Resolved& temp) {
  const ThermalParams& p = temp.params;
  const double x = occupation_x(p).x;
  const double nbar = o.nbar ? *o.nbar : photon_nbar(p.beta_tilde);
  const double unit = temp.energy_unit;
  Table t{"compare-eiwe",
          {"beta_tilde", "x", "nbar", "xi", "eiwe_work", "bell_work", "condensate_work", "w_approx"},
          {}};
  t.add_row({p.beta_tilde, x, nbar, o.xi, unit * eiwe_work({o.xi, nbar, o.omega_a}),
             unit * two_mode_bell_work(p), unit * condensate_work(o.n, p), unit * x * p.omega_eg});
  return t;
}

// Appends `--key=value` for every config entry the command line did not set.
void merge_config(std::vector<std::string>& args, CLI::App& app) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return;
  CLI::App* sub = nullptr;
  for (const auto& a : args) {
    if (auto* s = app.get_subcommand_no_throw(a)) {
      sub = s;
      break;
    }
  }
  if (sub == nullptr) throw UsageError("--config needs a subcommand");

  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line.erase(0, line.find_first_not_of(" \t"));
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(line_no) + ": expected key=value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    key.erase(key.find_last_not_of(" \t") + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    if (key == "config") continue;
    const std::string flag = "--" + key;
    if (sub->get_option_no_throw(flag) == nullptr) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": unknown key '" + key + "' for " + sub->get_name());
    }
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (!given) args.push_back(flag + "=" + value);
  }
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Work extraction from the symmetrization entanglement of a boson condensate", "symwork"};
  app.require_subcommand(1);

  OutputOptions io;
  TemperatureOptions temp;
  std::function<void()> action;

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("work-sweep", "Exact vs low-temperature work over a beta_tilde range");
  sweep_cmd->add_option("--beta-tilde", sweep.beta_tilde, "Single sweep point");
  sweep_cmd->add_option("--beta-min", sweep.beta_min, "Range start");
  sweep_cmd->add_option("--beta-max", sweep.beta_max, "Range end (inclusive)");
  sweep_cmd->add_option("--beta-step", sweep.beta_step, "Range step");
  sweep_cmd->add_option("--n", sweep.n, "Particle count N+1 before the measurement")->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max()));
  sweep_cmd->add_option("--k-max", sweep.k_max, "Ladder truncation level")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--omega-eg", sweep.omega_eg, "Level spacing (natural units)");
  add_output_options(*sweep_cmd, io);
  sweep_cmd->callback([&] { action = [&] { emit(work_sweep(sweep), io, out); }; });

  CycleOptions cyc;
  auto* cycle_cmd = app.add_subcommand("cycle", "Run measure/rethermalize cycles and write the work ledger");
  add_temperature_options(*cycle_cmd, temp);
  cycle_cmd->add_option("--n", cyc.n, "Initial particle count");
  cycle_cmd->add_option("--cycles", cyc.cycles, "Number of cycles")->check(CLI::NonNegativeNumber);
  cycle_cmd->add_option("--seed", cyc.seed, "Generator seed for sampled outcomes");
  cycle_cmd->add_flag("--post-select-e", cyc.post_select_e, "Condition every cycle on outcome e");
  add_output_options(*cycle_cmd, io);
  cycle_cmd->callback([&] {
    action = [&] {
      const auto seed = parse_seed(cyc.seed);
      const auto resolved = temp.resolve();
      const WorkLedger ledger = run_cycles(cyc.n, resolved.params, cyc.cycles, seed, cyc.post_select_e);
      ledger.check_invariants();
      emit(cycle_table(ledger, resolved.energy_unit), io, out);
    };
  });

  RegimeOptions reg;
  auto* regime_cmd = app.add_subcommand("regime", "Collective vs individual recoil verdict for a density grid");
  regime_cmd->add_option("--density", reg.density, "Density grid CSV")->required();
  regime_cmd->add_option("--omega-r", reg.omega_r, "Recoil frequency")->required();
  regime_cmd->add_option("--n", reg.n, "Particle count")->check(CLI::PositiveNumber);
  regime_cmd->add_option("--coupling", reg.coupling, "Interaction scale multiplying the |psi|^4 integral");
  regime_cmd->add_option("--tolerance", reg.tolerance, "Normalization tolerance");
  add_output_options(*regime_cmd, io);
  regime_cmd->callback([&] { action = [&] { emit(regime_table(reg), io, out, true); }; });

  std::int64_t schmidt_n = 2;
  std::int64_t schmidt_k = 1;
  auto* schmidt_cmd = app.add_subcommand("schmidt", "Split of |n,k> over one boson");
  schmidt_cmd->add_option("--n", schmidt_n, "Particle count")->required();
  schmidt_cmd->add_option("--k", schmidt_k, "Excitations")->required();
  add_output_options(*schmidt_cmd, io);
  schmidt_cmd->callback([&] { action = [&] { emit(schmidt_table(schmidt_n, schmidt_k), io, out, true); }; });

  EiweOptions eiwe;
  auto* eiwe_cmd = app.add_subcommand("compare-eiwe", "Condensate, two-mode Bell and EIWE work side by side");
  add_temperature_options(*eiwe_cmd, temp);
  eiwe_cmd->add_option("--xi", eiwe.xi, "Entanglement degree in [0, 1]");
  eiwe_cmd->add_option("--nbar", eiwe.nbar, "Mean occupation (default: Bose-Einstein at beta_tilde)");
  eiwe_cmd->add_option("--omega-a", eiwe.omega_a, "Mode energy quantum");
  eiwe_cmd->add_option("--n", eiwe.n, "Condensate particle count N+1");
  add_output_options(*eiwe_cmd, io);
  eiwe_cmd->callback([&] { action = [&] { emit(compare_table(eiwe, temp.resolve()), io, out, true); }; });

  try {
    std::vector<std::string> args = raw_args;
    merge_config(args, app);
    std::reverse(args.begin(), args.end());
    app.parse(args);
    if (action) action();
    return kOk;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kValidation;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const InvariantError& e) {
    err << "invariant failure: " << e.what() << '\n';
    return kInvariant;
  }
}

}  // namespace symwork::cli
