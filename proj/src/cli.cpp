#include "recip/cli.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>

#include "recip/errors.hpp"
#include "recip/format.hpp"
#include "recip/radiation.hpp"
#include "recip/scalar_algebra.hpp"
#include "recip/symmetric_difference.hpp"
#include "recip/vector_algebra.hpp"
#include "recip/verify.hpp"

namespace recip {

namespace {

double parse_real(std::string_view text) {
  double value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw DomainError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_real(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Vector3<double> parse_vector(std::string_view text) {
  const auto values = parse_list(text);
  if (values.size() != 3) throw DomainError("expected three comma-separated components: '" + std::string(text) + "'");
  return {values[0], values[1], values[2]};
}

struct ComposeArgs {
  std::string space = "velocity";
  std::string mode = "sum";
  std::optional<double> phi;
  std::optional<std::string> axis;
  std::vector<std::string> operands;
};

void run_compose(const ComposeArgs& args, const LightSpeed<double>& light, std::ostream& out) {
  if (args.operands.size() != 2) throw DomainError("compose takes exactly two operands");
  const bool vector = args.operands[0].find(',') != std::string::npos || args.operands[1].find(',') != std::string::npos;
  const Composition mode = args.mode == "relative" ? Composition::relative : Composition::sum;

  if (!vector) {
    if (args.phi || args.axis) throw DomainError("--phi/--axis apply to vector operands only");
    double a = parse_real(args.operands[0]);
    double b = parse_real(args.operands[1]);
    if (mode == Composition::relative) b = -b;
    if (args.space == "slowness") {
      out << format_number(add_slowness(Slowness<double>(a, light), Slowness<double>(b, light)).value()) << '\n';
    } else {
      out << format_number(add_velocity(Velocity<double>(a, light), Velocity<double>(b, light)).value()) << '\n';
    }
    return;
  }

  if (args.space != "velocity") throw DomainError("--space slowness applies to scalar operands only");
  const ComplexVector3<double> u = complexify(parse_vector(args.operands[0]));
  const ComplexVector3<double> v = complexify(parse_vector(args.operands[1]));
  ComplexVector3<double> w;
  if (args.phi || args.axis) {
    if (!args.phi || !args.axis) throw DomainError("--phi and --axis must be given together");
    const ReciprocityRotation<double> rot(parse_vector(*args.axis), *args.phi);
    w = general_compose(u, v, rot, mode, light);
  } else {
    w = compose(u, v, mode, light);
  }
  out << format_complex(w(0)) << ',' << format_complex(w(1)) << ',' << format_complex(w(2)) << '\n';
}

struct SpectrumArgs {
  std::string stats = "planck";
  double kT = 1;
  std::optional<double> bound;
  std::size_t points = 100;
  double omega_min = 0.01;
  double omega_max = 20;
  double hbar = 1;
  double exponent = 2;
};

void run_spectrum(const SpectrumArgs& args, const LightSpeed<double>& light, std::ostream& out) {
  SpectrumRequest<double> req{args.omega_min, args.omega_max, args.points, args.kT, parse_statistics(args.stats),
                              args.bound, light, args.hbar, {args.exponent}};
  write_csv(out, spectrum_table(req));
}

struct LevelsArgs {
  std::string mode;
  std::optional<int> n;
  int n_min = 1;
  int n_max = 5;
  double delta = 1;
  double w = 0;
  double mass = 1;
  double halfwidth = 1;
};

void run_levels(const LevelsArgs& args, std::ostream& out) {
  const int lo = args.n ? *args.n : args.n_min;
  const int hi = args.n ? *args.n : args.n_max;
  if (lo > hi) throw DomainError("--n-min must not exceed --n-max");
  if (!(args.delta > 0)) throw DomainError("--delta must be positive");
  if (args.mode == "well") {
    out << "n,energy\n";
    for (int n = lo; n <= hi; ++n) {
      out << n << ',' << format_number(well_energy(n, args.mass, args.halfwidth, args.delta)) << '\n';
    }
    return;
  }
  out << "n,y2,cross,w2,total\n";
  for (int n = lo; n <= hi; ++n) {
    const auto t = oscillator_energy_terms(n, args.delta, args.w);
    out << n << ',' << format_number(t.level) << ',' << format_number(t.cross) << ',' << format_number(t.square)
        << ',' << format_number(t.total()) << '\n';
  }
}

struct RateArgs {
  double energy = 0;
  double elapsed = 1;
  double scale = 1;
};

void run_rate(const RateArgs& args, const LightSpeed<double>& light, std::ostream& out) {
  const TransferRate<double> rate(args.energy, args.elapsed, args.scale, light);
  const double mean = std::abs(rate.mean_rate());
  out << "y=" << (mean < light.value() ? format_number(rate_of_transfer(rate)) : "undefined") << '\n';
  out << "y_star=" << (mean > light.value() ? format_number(reciprocal_rate(rate).value) : "undefined") << '\n';
  out << "heisenberg=" << (heisenberg_holds(rate) ? "true" : "false") << '\n';
}

struct VerifyArgs {
  std::uint64_t seed = 42;
  std::size_t trials = 100000;
  bool json = false;
  std::vector<std::string> tolerances;
};

int run_verify(const VerifyArgs& args, double c, std::ostream& out) {
  RunConfig config;
  config.c = c;
  config.seed = args.seed;
  config.trials = args.trials;
  for (const auto& item : args.tolerances) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("--tol expects ID=VALUE, got '" + item + "'");
    config.tolerance_overrides[item.substr(0, eq)] = parse_real(std::string_view(item).substr(eq + 1));
  }
  const VerificationReport report = run_verification(config);
  if (args.json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << to_text(report);
  }
  return report.has_failures() ? kVerificationFailed : kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reciprocal-symmetric kinematics, spectra and identity verification", "recip"};
  app.require_subcommand(1);
  app.fallthrough();

  double c = 1;
  app.add_option("--c", c, "Light speed (natural units by default)")->check(CLI::PositiveNumber);

  ComposeArgs compose_args;
  auto* compose_cmd = app.add_subcommand("compose", "Compose two velocities, slownesses or 3-vectors");
  compose_cmd->add_option("--space", compose_args.space, "Scalar law to apply")
      ->check(CLI::IsMember({"velocity", "slowness"}));
  compose_cmd->add_option("--mode", compose_args.mode, "sum (U + V) or relative (U - V)")
      ->check(CLI::IsMember({"sum", "relative"}));
  compose_cmd->add_option("--phi", compose_args.phi, "Reciprocity rotation angle (vectors)");
  compose_cmd->add_option("--axis", compose_args.axis, "Rotation axis x,y,z (unit vector)");
  compose_cmd->add_option("operands", compose_args.operands, "Two scalars, or two vectors written x,y,z")
      ->required()
      ->expected(2);

  SpectrumArgs spectrum_args;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Emit a spectral intensity table as CSV");
  spectrum_cmd->add_option("--stats", spectrum_args.stats, "Statistics")
      ->check(CLI::IsMember({"planck", "bounded", "fermi-odd", "fermi-even"}));
  spectrum_cmd->add_option("--kT", spectrum_args.kT, "Thermal energy");
  spectrum_cmd->add_option("--W", spectrum_args.bound, "Energy bound (bounded statistics)");
  spectrum_cmd->add_option("--points", spectrum_args.points, "Number of rows");
  spectrum_cmd->add_option("--omega-min", spectrum_args.omega_min, "Lowest angular frequency");
  spectrum_cmd->add_option("--omega-max", spectrum_args.omega_max, "Highest angular frequency");
  spectrum_cmd->add_option("--hbar", spectrum_args.hbar, "Quantum of action");
  spectrum_cmd->add_option("--prefactor-exponent", spectrum_args.exponent, "Power of c in the intensity prefactor");

  LevelsArgs levels_args;
  auto* levels_cmd = app.add_subcommand("levels", "Tabulate oscillator or well energy levels");
  levels_cmd->add_option("--mode", levels_args.mode, "oscillator or well")
      ->required()
      ->check(CLI::IsMember({"oscillator", "well"}));
  levels_cmd->add_option("--n", levels_args.n, "Single level index");
  levels_cmd->add_option("--n-min", levels_args.n_min, "First level index");
  levels_cmd->add_option("--n-max", levels_args.n_max, "Last level index");
  levels_cmd->add_option("--delta", levels_args.delta, "Difference step");
  levels_cmd->add_option("--w", levels_args.w, "Oscillator angular frequency");
  levels_cmd->add_option("--mass", levels_args.mass, "Particle mass (well)");
  levels_cmd->add_option("--halfwidth", levels_args.halfwidth, "Half the well width");

  RateArgs rate_args;
  auto* rate_cmd = app.add_subcommand("rate", "Rate of energy transfer and its reciprocal image");
  rate_cmd->add_option("--E", rate_args.energy, "Energy transferred")->required();
  rate_cmd->add_option("--t", rate_args.elapsed, "Elapsed time")->required();
  rate_cmd->add_option("--T", rate_args.scale, "Reference time")->required();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Fuzz every identity and report residuals");
  verify_cmd->add_option("--seed", verify_args.seed, "Random seed");
  verify_cmd->add_option("--trials", verify_args.trials, "Trials for the large suites")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify_args.json, "Emit the report as JSON");
  verify_cmd->add_option("--tol", verify_args.tolerances, "Tolerance override ID=VALUE (repeatable)");

  std::vector<const char*> argv{"recip"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    const LightSpeed<double> light(c);
    if (compose_cmd->parsed()) run_compose(compose_args, light, out);
    if (spectrum_cmd->parsed()) run_spectrum(spectrum_args, light, out);
    if (levels_cmd->parsed()) run_levels(levels_args, out);
    if (rate_cmd->parsed()) run_rate(rate_args, light, out);
    if (verify_cmd->parsed()) return run_verify(verify_args, c, out);
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << '\n';
    return kUsageError;
  }
  return kSuccess;
}

}  // namespace recip
