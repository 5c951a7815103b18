#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "cplanes/coords.hpp"
#include "cplanes/errors.hpp"
#include "cplanes/hydrogen.hpp"
#include "cplanes/suites.hpp"
#include "cplanes/units.hpp"

namespace cplanes::cli {
namespace {

constexpr const char* kVersion = CPLANES_VERSION;
constexpr const char* kConvention = "CondonShortley,expPlusIkPhi";

std::string format_real(double v) { return fmt::format("{:.16g}", v + 0.0); }

std::string format_complex(cplx z) {
  return fmt::format("{:.16g}{:+.16g}i", z.real() + 0.0, z.imag() + 0.0);
}

UnitSystem parse_units(const std::string& s) {
  return s == "si" ? UnitSystem::si : UnitSystem::atomic;
}

const char* units_name(UnitSystem u) { return u == UnitSystem::si ? "si" : "au"; }

// ---------------------------------------------------------------- transform

struct TransformArgs {
  std::vector<double> x;
  double t = 0.0;
  std::optional<int> n;
  std::optional<double> energy;
  std::string units = "au";
};

int cmd_transform(const TransformArgs& a, std::ostream& out) {
  const UnitSystem units = parse_units(a.units);
  const double len = length_scale(units), tim = time_scale(units), en = energy_scale(units);
  const PhysicalParams p =
      a.n ? PhysicalParams::for_level(*a.n, units) : PhysicalParams::bound(*a.energy / en, units);
  const RealEvent ev{a.x[0] / len, a.x[1] / len, a.x[2] / len, a.t / tim};
  const ComplexEvent cev = to_complex(ev, p);

  out << "z1 = " << format_complex(cev.z1 * len) << '\n';
  out << "z2 = " << format_complex(cev.z2 * len) << '\n';
  out << "z3 = " << format_complex(cev.z3 * len) << '\n';
  out << "tau = " << format_complex(cev.tau * tim) << '\n';
  out << "energy = " << format_real(p.energy() * en) << '\n';
  out << "alpha = " << format_real(p.alpha() * len) << '\n';
  const ResidualReport residuals = identity_residuals(ev, p);
  for (const auto& e : residuals.entries()) {
    out << "residual." << e.name << " = ";
    if (e.status == ResidualStatus::skipped)
      out << "skipped (" << e.note << ")\n";
    else
      out << format_real(e.value) << " " << to_string(e.status) << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  int n_max = 3;
  bool csv = false;
  std::string units = "au";
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
  if (a.n_max < 1) throw DomainError("n_max must be >= 1");
  const UnitSystem units = parse_units(a.units);
  const bool si = units == UnitSystem::si;
  const double en = energy_scale(units), len = length_scale(units);
  if (a.csv) {
    out << (si ? "n,E_J,E_eV,alpha_m\n" : "n,E_hartree,E_eV,alpha_a0\n");
  } else {
    out << fmt::format("{:>4}  {:>24}  {:>20}  {:>20}\n", "n", si ? "E_n [J]" : "E_n [Ha]",
                       "E_n [eV]", si ? "alpha_n [m]" : "alpha_n [a0]");
  }
  for (int n = 1; n <= a.n_max; ++n) {
    const EnergyLevel lv = energy(n);
    const double alpha = alpha_of(lv.energy);
    if (a.csv) {
      out << n << ',' << format_real(lv.energy * en) << ',' << format_real(hartree_to_ev(lv.energy))
          << ',' << format_real(alpha * len) << '\n';
    } else {
      out << fmt::format("{:>4}  {:>24.16g}  {:>20.10f}  {:>20.12g}\n", n, lv.energy * en,
                         hartree_to_ev(lv.energy), alpha * len);
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------- wavefunction

struct WavefunctionArgs {
  std::vector<int> qn;
  std::string grid = "spherical";
  std::vector<double> r, theta, phi, x1, x2, x3;
  double t = 0.0;
  std::string output = "-";
  std::string format = "csv";
  bool compare = false;
  std::string units = "au";
};

// A fixed value or an inclusive range "lo hi count" with count >= 2.
std::vector<double> axis_values(const std::vector<double>& spec, const char* name) {
  if (spec.size() == 1) {
    if (!std::isfinite(spec[0])) throw DomainError(std::string(name) + ": value must be finite");
    return spec;
  }
  const double lo = spec[0], hi = spec[1], count = spec[2];
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw DomainError(std::string(name) + ": range must be finite");
  if (count != std::floor(count) || count < 2)
    throw DomainError(std::string(name) + ": step count must be an integer >= 2");
  const auto steps = static_cast<std::size_t>(count);
  std::vector<double> v(steps);
  for (std::size_t i = 0; i < steps; ++i)
    v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  return v;
}

struct GridPoint {
  RealEvent event;   // atomic units
  RealSpherical sph;
};

std::vector<GridPoint> build_grid(const WavefunctionArgs& a, double len, double tim) {
  std::vector<GridPoint> pts;
  const double t = a.t / tim;
  auto scaled = [&](const std::vector<double>& spec, const char* name, double s) {
    auto v = axis_values(spec, name);
    for (double& x : v) x /= s;
    return v;
  };
  if (a.grid == "spherical") {
    if (a.r.empty()) throw DomainError("spherical grid requires --r");
    const auto rs = scaled(a.r, "r", len);
    const auto ths = axis_values(a.theta.empty() ? std::vector{std::numbers::pi / 2} : a.theta, "theta");
    const auto phs = axis_values(a.phi.empty() ? std::vector{0.0} : a.phi, "phi");
    for (double r : rs) {
      if (r < 0.0) throw DomainError("r must be >= 0");
      for (double th : ths) {
        if (th < 0.0 || th > std::numbers::pi) throw DomainError("theta must lie in [0, pi]");
        for (double ph : phs) {
          const RealSpherical sph{r, th, ph};
          pts.push_back({from_spherical(sph, t), sph});
        }
      }
    }
  } else {
    const std::vector<double> zero{0.0};
    const auto xs = scaled(a.x1.empty() ? zero : a.x1, "x1", len);
    const auto ys = scaled(a.x2.empty() ? zero : a.x2, "x2", len);
    const auto zs = scaled(a.x3.empty() ? zero : a.x3, "x3", len);
    for (double x : xs)
      for (double y : ys)
        for (double z : zs) {
          const RealEvent ev{x, y, z, t};
          pts.push_back({ev, real_spherical(ev)});
        }
  }
  if (pts.empty()) throw DomainError("grid has no points");
  return pts;
}

using Cell = std::optional<double>;

int cmd_wavefunction(const WavefunctionArgs& a, std::ostream& out) {
  const QuantumNumbers qn(a.qn[0], a.qn[1], a.qn[2]);
  const UnitSystem units = parse_units(a.units);
  const double len = length_scale(units), tim = time_scale(units);
  const double amp = std::pow(len, -1.5);
  const Eigensolution sol(qn);
  const std::vector<GridPoint> grid = build_grid(a, len, tim);

  std::vector<std::string> columns{"x1", "x2", "x3", "r", "theta", "phi", "t",
                                   "re_psi", "im_psi", "abs2_psi"};
  if (a.compare) columns.insert(columns.end(), {"re_textbook", "im_textbook", "abs_delta"});
  columns.emplace_back("flag");

  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> flags;
  double max_delta = 0.0, max_psi = 0.0;
  for (const auto& gp : grid) {
    const RealEvent& ev = gp.event;
    std::vector<Cell> row{ev.x1 * len, ev.x2 * len, ev.x3 * len, gp.sph.r * len,
                          gp.sph.theta, gp.sph.phi, ev.t * tim};
    std::string flag;
    std::optional<cplx> psi;
    const ComplexEvent cev = to_complex(ev, sol.params());
    try {
      psi = psi_complex(sol, to_complex_spherical(cev), cev.tau);
    } catch (const SingularPointError& e) {
      flag = e.tag();
    }
    if (psi) {
      row.insert(row.end(), {psi->real() * amp, psi->imag() * amp, std::norm(*psi) * amp * amp});
      max_psi = std::max(max_psi, std::abs(*psi));
    } else {
      row.insert(row.end(), {Cell{}, Cell{}, Cell{}});
    }
    if (a.compare) {
      const cplx tb = psi_real_textbook(qn, gp.sph, ev.t);
      row.insert(row.end(), {tb.real() * amp, tb.imag() * amp});
      if (psi) {
        const double d = std::abs(*psi - tb);
        max_delta = std::max(max_delta, d);
        row.emplace_back(d * amp);
      } else {
        row.emplace_back();
      }
    }
    rows.push_back(std::move(row));
    flags.push_back(flag);
  }

  const std::string qn_text = fmt::format("{},{},{}", qn.n(), qn.l(), qn.k());
  std::ostringstream body;
  if (a.format == "json") {
    nlohmann::ordered_json j;
    j["meta"] = {{"version", kVersion}, {"qn", qn_text}, {"units", units_name(units)},
                 {"convention", kConvention}};
    j["columns"] = columns;
    nlohmann::ordered_json data = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (const Cell& c : rows[i]) row.push_back(c ? nlohmann::ordered_json(*c) : nullptr);
      row.push_back(flags[i]);
      data.push_back(std::move(row));
    }
    j["rows"] = std::move(data);
    if (a.compare) j["max_abs_delta"] = max_delta * amp;
    body << j.dump() << '\n';
  } else {
    body << "# cplanes v" << kVersion << " qn=" << qn_text << " units=" << units_name(units)
         << " convention=" << kConvention << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) body << (i ? "," : "") << columns[i];
    body << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (const Cell& c : rows[i]) body << (c ? format_real(*c) : "") << ',';
      body << flags[i] << '\n';
    }
  }

  const std::string summary =
      fmt::format("# max_abs_delta={:.6e} max_abs_psi={:.6e}", max_delta * amp, max_psi * amp);
  if (a.output == "-") {
    out << body.str();
    if (a.compare && a.format == "csv") out << summary << '\n';
  } else {
    std::ofstream file(a.output);
    if (!file) throw DomainError("cannot open output file '" + a.output + "'");
    file << body.str();
    if (a.compare && a.format == "csv") file << summary << '\n';
    if (!file.good()) throw DomainError("write failed for '" + a.output + "'");
    out << "wrote " << rows.size() << " rows to " << a.output << '\n';
    if (a.compare) out << summary << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------- check

int cmd_check(const std::string& suite, std::uint64_t seed, std::ostream& out) {
  bool all_pass = true;
  for (const auto& report : run_suite(suite, seed)) {
    out << to_json(report) << '\n';
    all_pass = all_pass && report.verdict;
  }
  return all_pass ? kSuccess : kFailure;
}

std::optional<std::uint64_t> env_seed() {
  const char* v = std::getenv("CPLANES_SEED");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const unsigned long long s = std::strtoull(v, &end, 10);
  if (*end != '\0') throw CLI::ValidationError("CPLANES_SEED", "not an unsigned integer");
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complex-plane coordinates and hydrogenic eigensolutions", "cplanes"};
  app.set_version_flag("--version", std::string("cplanes ") + kVersion);
  app.require_subcommand(1);
  const auto unit_choice = CLI::IsMember({"au", "si"});

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Map a real event into the complex planes");
  transform->add_option("--x", ta.x, "x1 x2 x3")->expected(3)->required();
  transform->add_option("--t", ta.t, "time");
  auto* opt_n = transform->add_option("--n", ta.n, "principal quantum number (E = E_n)");
  auto* opt_e = transform->add_option("--E", ta.energy, "bound-state energy");
  opt_n->excludes(opt_e);
  transform->add_option("--units", ta.units)->check(unit_choice);

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "Bound-state energies E_n and alpha_n");
  spectrum->add_option("--n-max", sa.n_max, "largest n")->capture_default_str();
  spectrum->add_flag("--csv", sa.csv, "comma-separated output");
  spectrum->add_option("--units", sa.units)->check(unit_choice);

  WavefunctionArgs wa;
  auto* wave = app.add_subcommand("wavefunction", "Evaluate Psi_nlk on a grid");
  wave->add_option("--qn", wa.qn, "n l k")->expected(3)->required();
  wave->add_option("--grid", wa.grid)->check(CLI::IsMember({"spherical", "cartesian-slice"}));
  for (auto [name, vec] : {std::pair{"--r", &wa.r}, {"--theta", &wa.theta}, {"--phi", &wa.phi},
                           {"--x1", &wa.x1}, {"--x2", &wa.x2}, {"--x3", &wa.x3}})
    wave->add_option(name, *vec, "value, or lo hi count")->expected(1, 3);
  wave->add_option("--t", wa.t, "time");
  wave->add_option("--output,-o", wa.output, "output path, - for stdout");
  wave->add_option("--format", wa.format)->check(CLI::IsMember({"csv", "json"}));
  wave->add_flag("--compare", wa.compare, "also evaluate the textbook form");
  wave->add_option("--units", wa.units)->check(unit_choice);

  std::string suite;
  std::uint64_t seed = 42;
  auto* check = app.add_subcommand("check", "Run a verification suite, one JSON report per line");
  std::vector<std::string> suites(std::begin(kSuiteNames), std::end(kSuiteNames));
  check->add_option("suite", suite, "identities|holomorphy|operators|eigen|all")
      ->required()
      ->check(CLI::IsMember(suites));
  auto* seed_opt = check->add_option("--seed", seed, "RNG seed (default: $CPLANES_SEED or 42)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    for (auto [name, vec] : {std::pair{"r", &wa.r}, {"theta", &wa.theta}, {"phi", &wa.phi},
                             {"x1", &wa.x1}, {"x2", &wa.x2}, {"x3", &wa.x3}})
      if (vec->size() == 2)
        throw CLI::ValidationError(std::string("--") + name, "expects 1 value or lo hi count");
    if (*transform && !ta.n && !ta.energy)
      throw CLI::RequiredError("transform needs --n or --E");
    if (*check && seed_opt->count() == 0) {
      if (auto s = env_seed()) seed = *s;
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << "cplanes " << kVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*transform) return cmd_transform(ta, out);
    if (*spectrum) return cmd_spectrum(sa, out);
    if (*wave) return cmd_wavefunction(wa, out);
    if (*check) return cmd_check(suite, seed, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace cplanes::cli
