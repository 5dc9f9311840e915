// zeromodes: spectra, wavefunctions and cross-verification for zero-energy
// states bound by the well V(x) = -lambda sech x + mu tanh x.

#include <CLI11.hpp>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "zeromodes/analytic.hpp"
#include "zeromodes/io.hpp"
#include "zeromodes/model.hpp"
#include "zeromodes/numeric.hpp"
#include "zeromodes/units.hpp"
#include "zeromodes/verify.hpp"

namespace {

using zeromodes::Complex;
using zeromodes::io::Cell;
using zeromodes::io::format_real;
using zeromodes::io::OutputRecord;
namespace analytic = zeromodes::analytic;
namespace model = zeromodes::model;
namespace numeric = zeromodes::numeric;
namespace verify = zeromodes::verify;

constexpr const char* kGridEnvVar = "ZEROMODES_GRID_HALF_WIDTH";

double env_half_width() {
  const char* raw = std::getenv(kGridEnvVar);
  if (!raw) return 0.0;
  const double v = std::strtod(raw, nullptr);
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::invalid_argument(std::string(kGridEnvVar) +
                                " must be a positive number");
  return v;
}

void emit(const OutputRecord& rec, const std::string& out_path,
          zeromodes::io::Format fmt) {
  if (out_path.empty()) {
    zeromodes::io::write(std::cout, rec, fmt);
    return;
  }
  std::ofstream ofs(out_path);
  if (!ofs) throw std::invalid_argument("cannot open output file " + out_path);
  zeromodes::io::write(ofs, rec, fmt);
}

struct CommonOpts {
  std::string format = "csv";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--format", c.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", c.out_path,
                  "Output file (default: stdout; not part of the echoed args)");
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(double lambda, double mu, const CommonOpts& c) {
  const model::PotentialParams p{lambda, mu};
  const auto modes = analytic::zero_mode_spectrum(p);  // throws for lambda=0
  OutputRecord rec;
  rec.command = "spectrum";
  rec.args = "spectrum --lambda " + format_real(lambda) + " --mu " +
             format_real(mu) + " --format " + c.format;
  rec.params = {{"lambda", format_real(lambda)}, {"mu", format_real(mu)}};
  rec.columns = {"n", "k_y", "kappa", "regime"};
  for (const auto& m : modes)
    rec.rows.push_back({Cell{(long long)m.n}, Cell{m.ky}, Cell{m.kappa},
                        Cell{std::string(model::to_string(m.regime))}});
  emit(rec, c.out_path, zeromodes::io::parse_format(c.format));
  return 0;
}

// ------------------------------------------------------------ wavefunction

int cmd_wavefunction(double lambda, double mu, int n, const std::string& sign,
                     double x_min, double x_max, int points, bool normalize,
                     const CommonOpts& c) {
  const model::PotentialParams p{lambda, mu};
  const analytic::ZeroMode mode = analytic::zero_mode(p, n);
  const analytic::KySign ks = (sign == "-" || sign == "minus")
                                  ? analytic::KySign::Minus
                                  : analytic::KySign::Plus;
  const numeric::Grid grid = numeric::Grid::make(x_min, x_max, points);

  double scale = 1.0;
  if (normalize) {
    double half = std::max(30.0, std::ceil(11.0 / mode.kappa));
    if (const double w = env_half_width(); w > 0.0) half = w;
    const int wide_n = int(std::lround(2.0 * half / 0.005)) + 1;
    const numeric::Grid wide = numeric::Grid::make(-half, half, wide_n);
    auto samples = numeric::sample_spinor(p, mode, ks, wide);
    scale = 1.0 / numeric::l2_normalize(samples, wide);
  }

  OutputRecord rec;
  rec.command = "wavefunction";
  {
    std::ostringstream a;
    a << "wavefunction --lambda " << format_real(lambda) << " --mu "
      << format_real(mu) << " --n " << n << " --ky-sign="
      << (ks == analytic::KySign::Minus ? "-" : "+") << " --x-min "
      << format_real(x_min) << " --x-max " << format_real(x_max)
      << " --points " << points << (normalize ? " --normalize" : "")
      << " --format " << c.format;
    rec.args = a.str();
  }
  rec.params = {{"lambda", format_real(lambda)},
                {"mu", format_real(mu)},
                {"n", std::to_string(n)},
                {"ky_sign", ks == analytic::KySign::Minus ? "-" : "+"},
                {"x_min", format_real(x_min)},
                {"x_max", format_real(x_max)},
                {"points", std::to_string(points)},
                {"normalize", normalize ? "true" : "false"},
                {"k_y", format_real(mode.ky)},
                {"kappa", format_real(mode.kappa)}};
  rec.columns = {"x", "re_psi_A", "im_psi_A", "re_psi_B", "im_psi_B"};
  for (int i = 0; i < grid.n_points; ++i) {
    const auto s = analytic::spinor_value(p, mode, ks, grid.point(i));
    rec.rows.push_back({Cell{s.x}, Cell{scale * s.psiA.real()},
                        Cell{scale * s.psiA.imag()},
                        Cell{scale * s.psiB.real()},
                        Cell{scale * s.psiB.imag()}});
  }
  emit(rec, c.out_path, zeromodes::io::parse_format(c.format));
  return 0;
}

// --------------------------------------------------------------- potential

int cmd_potential(double lambda, double mu, double x_min, double x_max,
                  int points, const CommonOpts& c) {
  const model::PotentialParams p{lambda, mu};
  model::validate(p);
  const numeric::Grid grid = numeric::Grid::make(x_min, x_max, points);
  OutputRecord rec;
  rec.command = "potential";
  rec.args = "potential --lambda " + format_real(lambda) + " --mu " +
             format_real(mu) + " --x-min " + format_real(x_min) + " --x-max " +
             format_real(x_max) + " --points " + std::to_string(points) +
             " --format " + c.format;
  rec.params = {{"lambda", format_real(lambda)},
                {"mu", format_real(mu)},
                {"x_min", format_real(x_min)},
                {"x_max", format_real(x_max)},
                {"points", std::to_string(points)}};
  rec.columns = {"x", "V", "V_tilde"};
  for (int i = 0; i < grid.n_points; ++i) {
    const double x = grid.point(i);
    rec.rows.push_back({Cell{x}, Cell{model::potential_value(p, x)},
                        Cell{model::potential_tilde_value(p, x)}});
  }
  emit(rec, c.out_path, zeromodes::io::parse_format(c.format));
  return 0;
}

// ------------------------------------------------------------------ verify

int cmd_verify(double lambda, double mu, const std::string& profile_name,
               double residual_tol, double oracle_tol, const CommonOpts& c) {
  verify::Profile prof = profile_name == "fast" ? verify::Profile::fast()
                                                : verify::Profile::strict();
  if (residual_tol > 0.0) {
    prof.residual_tol = residual_tol;
    prof.schrodinger_tol = residual_tol * 100.0;
  }
  if (oracle_tol > 0.0) prof.oracle_tol = oracle_tol;

  const verify::Report rep =
      verify::run_verification({lambda, mu}, prof, env_half_width());

  OutputRecord rec;
  rec.command = "verify";
  {
    std::ostringstream a;
    a << "verify --lambda " << format_real(lambda) << " --mu "
      << format_real(mu) << " --profile " << profile_name;
    if (residual_tol > 0.0) a << " --residual-tol " << format_real(residual_tol);
    if (oracle_tol > 0.0) a << " --oracle-tol " << format_real(oracle_tol);
    a << " --format " << c.format;
    rec.args = a.str();
  }
  rec.params = {{"lambda", format_real(lambda)},
                {"mu", format_real(mu)},
                {"profile", profile_name},
                {"modes", std::to_string(rep.modes)}};
  rec.columns = {"check", "measured", "tolerance", "status"};
  for (const auto& ch : rep.checks)
    rec.rows.push_back({Cell{ch.name}, Cell{ch.measured}, Cell{ch.tolerance},
                        Cell{std::string(ch.passed ? "pass" : "fail")}});
  emit(rec, c.out_path, zeromodes::io::parse_format(c.format));
  return rep.all_passed() ? 0 : 2;
}

// -------------------------------------------------------------------- scan

int cmd_scan(double l_min, double l_max, int l_steps, double m_min,
             double m_max, int m_steps, const CommonOpts& c) {
  if (l_steps < 1 || m_steps < 1)
    throw std::invalid_argument("scan: step counts must be >= 1");
  if (l_max < l_min || m_max < m_min)
    throw std::invalid_argument("scan: ranges must be ordered");

  struct Row {
    double lambda, mu;
    model::Regime regime;
    int count;
    double ky_min, ky_max;
  };
  const int cells = l_steps * m_steps;
  std::vector<Row> rows(cells);
  std::atomic<int> next{0};
  const auto work = [&] {
    for (int idx = next++; idx < cells; idx = next++) {
      const int i = idx / m_steps;
      const int j = idx % m_steps;
      const double lam =
          l_steps == 1 ? l_min : l_min + (l_max - l_min) * i / (l_steps - 1);
      const double mu =
          m_steps == 1 ? m_min : m_min + (m_max - m_min) * j / (m_steps - 1);
      Row r{lam, mu, model::classify_regime({lam, mu}), 0,
            std::nan(""), std::nan("")};
      if (r.regime == model::Regime::ElectronBound ||
          r.regime == model::Regime::HoleBound) {
        const auto modes = analytic::zero_mode_spectrum({lam, mu});
        r.count = int(modes.size());
        r.ky_min = modes.back().ky;   // n ascending => ky descending
        r.ky_max = modes.front().ky;
      }
      rows[idx] = r;
    }
  };
  const int workers =
      std::max(1, std::min<int>(std::thread::hardware_concurrency(), cells));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  OutputRecord rec;
  rec.command = "scan";
  {
    std::ostringstream a;
    a << "scan --lambda-min " << format_real(l_min) << " --lambda-max "
      << format_real(l_max) << " --lambda-steps " << l_steps << " --mu-min "
      << format_real(m_min) << " --mu-max " << format_real(m_max)
      << " --mu-steps " << m_steps << " --format " << c.format;
    rec.args = a.str();
  }
  rec.params = {{"lambda_min", format_real(l_min)},
                {"lambda_max", format_real(l_max)},
                {"lambda_steps", std::to_string(l_steps)},
                {"mu_min", format_real(m_min)},
                {"mu_max", format_real(m_max)},
                {"mu_steps", std::to_string(m_steps)}};
  rec.columns = {"lambda", "mu", "regime", "mode_count", "ky_min", "ky_max"};
  for (const Row& r : rows)
    rec.rows.push_back({Cell{r.lambda}, Cell{r.mu},
                        Cell{std::string(model::to_string(r.regime))},
                        Cell{(long long)r.count}, Cell{r.ky_min},
                        Cell{r.ky_max}});
  emit(rec, c.out_path, zeromodes::io::parse_format(c.format));
  return 0;
}

// ----------------------------------------------------------------- convert

int cmd_convert(double ky, double scale_nm, const CommonOpts& c) {
  const auto phys = zeromodes::units::convert_units(ky, scale_nm);
  OutputRecord rec;
  rec.command = "convert";
  rec.args = "convert --ky " + format_real(ky) + " --length-scale-nm " +
             format_real(scale_nm) + " --format " + c.format;
  rec.params = {{"ky", format_real(ky)},
                {"length_scale_nm", format_real(scale_nm)}};
  rec.columns = {"k_y", "k_y_per_nm", "E_meV"};
  rec.rows.push_back({Cell{ky}, Cell{phys.ky_per_nm}, Cell{phys.energy_mev}});
  emit(rec, c.out_path, zeromodes::io::parse_format(c.format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "zero-energy states of graphene carriers in the well "
      "V(x) = -lambda sech x + mu tanh x.\n"
      "Exit codes: 0 success, 1 validation error, 2 verification failure.\n"
      "Environment: " +
      std::string(kGridEnvVar) +
      " overrides the default half-width of the internal verification/"
      "normalization grids."};
  app.require_subcommand(1);

  double lambda = 0.0, mu = 0.0;
  int n = 0, points = 1001;
  double x_min = -10.0, x_max = 10.0;
  bool normalize = false;
  std::string ky_sign = "+";
  std::string profile = "strict";
  double residual_tol = 0.0, oracle_tol = 0.0;
  double l_min = 0.0, l_max = 0.0, m_min = 0.0, m_max = 0.0;
  int l_steps = 1, m_steps = 1;
  double ky = 0.0, scale_nm = 1.0;
  CommonOpts cs, cw, cp, cv, csc, cc;

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Closed-form zero-mode spectrum: columns n,k_y,kappa,regime");
  spectrum->add_option("--lambda", lambda, "well depth (nonzero)")->required();
  spectrum->add_option("--mu", mu, "asymmetry")->capture_default_str();
  add_common(spectrum, cs);

  CLI::App* wavefunction = app.add_subcommand(
      "wavefunction",
      "Spinor components of one mode: columns x,re_psi_A,im_psi_A,re_psi_B,"
      "im_psi_B");
  wavefunction->add_option("--lambda", lambda)->required();
  wavefunction->add_option("--mu", mu)->capture_default_str();
  wavefunction->add_option("--n", n, "quantum number")->required();
  wavefunction
      ->add_option("--ky-sign", ky_sign,
                   "sign of the transverse momentum: + or - (minus swaps the "
                   "components)")
      ->check(CLI::IsMember({"+", "-", "plus", "minus"}))
      ->capture_default_str();
  wavefunction->add_option("--x-min", x_min)->capture_default_str();
  wavefunction->add_option("--x-max", x_max)->capture_default_str();
  wavefunction->add_option("--points", points)->capture_default_str();
  wavefunction->add_flag("--normalize", normalize,
                         "scale so integral(|psi_A|^2+|psi_B|^2)dx = 1");
  add_common(wavefunction, cw);

  CLI::App* potential = app.add_subcommand(
      "potential",
      "Well profile and its symmetric mu=0 reduction: columns x,V,V_tilde");
  potential->add_option("--lambda", lambda)->required();
  potential->add_option("--mu", mu)->capture_default_str();
  potential->add_option("--x-min", x_min)->capture_default_str();
  potential->add_option("--x-max", x_max)->capture_default_str();
  potential->add_option("--points", points)->capture_default_str();
  add_common(potential, cp);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify",
      "Run the full invariant suite for one (lambda, mu); exit 2 if any check "
      "fails. Profiles: fast (first-order residuals 1e-8, second-order 1e-6, "
      "oracle 1e-6, spacings 0.01), strict (1e-10, 1e-8, 1e-7, 0.002)");
  verify_cmd->add_option("--lambda", lambda)->required();
  verify_cmd->add_option("--mu", mu)->capture_default_str();
  verify_cmd->add_option("--profile", profile)
      ->check(CLI::IsMember({"fast", "strict"}))
      ->capture_default_str();
  verify_cmd->add_option("--residual-tol", residual_tol,
                         "override the first-order residual tolerance "
                         "(second-order follows at 100x)");
  verify_cmd->add_option("--oracle-tol", oracle_tol,
                         "override the spectrum-agreement tolerance");
  add_common(verify_cmd, cv);

  CLI::App* scan = app.add_subcommand(
      "scan",
      "Regime/mode-count map over a (lambda, mu) rectangle: columns "
      "lambda,mu,regime,mode_count,ky_min,ky_max (ky columns nan when empty)");
  scan->add_option("--lambda-min", l_min)->required();
  scan->add_option("--lambda-max", l_max)->required();
  scan->add_option("--lambda-steps", l_steps)->required();
  scan->add_option("--mu-min", m_min)->required();
  scan->add_option("--mu-max", m_max)->required();
  scan->add_option("--mu-steps", m_steps)->required();
  add_common(scan, csc);

  CLI::App* convert = app.add_subcommand(
      "convert",
      "Dimensionless k_y -> physical units for a well of given length scale "
      "(hbar v_F = 658.2 meV nm)");
  convert->add_option("--ky", ky)->required();
  convert->add_option("--length-scale-nm", scale_nm)->required();
  add_common(convert, cc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(lambda, mu, cs);
    if (wavefunction->parsed())
      return cmd_wavefunction(lambda, mu, n, ky_sign, x_min, x_max, points,
                              normalize, cw);
    if (potential->parsed())
      return cmd_potential(lambda, mu, x_min, x_max, points, cp);
    if (verify_cmd->parsed())
      return cmd_verify(lambda, mu, profile, residual_tol, oracle_tol, cv);
    if (scan->parsed())
      return cmd_scan(l_min, l_max, l_steps, m_min, m_max, m_steps, csc);
    if (convert->parsed()) return cmd_convert(ky, scale_nm, cc);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
