// catlab.cpp — command-line surface: reproduces the threshold-time table and
// figure data as CSV/JSON, runs parameter sweeps, and cross-checks the
// analytic path against the Fock-space master-equation oracle.

#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "catlab/artifact.hpp"
#include "catlab/criteria.hpp"
#include "catlab/fock.hpp"
#include "catlab/numerics.hpp"
#include "catlab/phase_space.hpp"

namespace {

using namespace catlab;
namespace crit = catlab::criteria;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitOracleFail = 4;

std::vector<double> parse_values(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(std::stod(item));
  }
  return out;
}

std::vector<double> parse_range(const std::string& spec) {
  // lo:hi:n inclusive
  double lo, hi;
  int n;
  char c1, c2;
  std::stringstream ss(spec);
  if (!(ss >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' || n < 2) {
    throw std::invalid_argument("range must be lo:hi:n with n >= 2");
  }
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

int cmd_table(const io::RunConfig& cfg) {
  cfg.validate();
  io::Artifact art({"criterion", "tau", "bracket_lo", "bracket_hi", "note"});
  art.add_meta_config(cfg);
  const CatState state(cfg.alpha);

  if (cfg.nbar == 0.0) {
    art.add_meta("note", "zero-temperature channel: no criterion ever fires");
    for (const char* row : {"klyshko", "vogel1", "wigner_neg", "depth",
                            "fringe"}) {
      art.add_row({row, "inf", "inf", "inf", "nbar=0"});
    }
    art.write(cfg);
    return kExitOk;
  }
  const ThermalChannel channel(cfg.gamma, cfg.nbar);

  const auto threshold_row = [&](const crit::ThresholdResult& r,
                                 const std::string& note) {
    art.add_row({crit::to_string(r.criterion_id), io::format_value(r.tau_star),
                 io::format_value(r.bracket_lo),
                 io::format_value(r.bracket_hi),
                 r.never_nonclassical ? "never nonclassical" : note});
  };

  threshold_row(crit::tau_klyshko(state, channel, cfg.tol, 1), "B(1) root");
  threshold_row(crit::tau_vogel(state, channel, cfg.tol), "sup Phi = 1");
  const double tw = crit::tau_wigner_negativity(channel);
  art.add_row({"wigner_neg", io::format_value(tw), io::format_value(tw),
               io::format_value(tw), "closed form s_t = 0 (alpha-independent)"});
  const double tp = crit::tau_nonclassical_depth(channel);
  art.add_row({"depth", io::format_value(tp), io::format_value(tp),
               io::format_value(tp), "closed form s_t = -1 (alpha-independent)"});
  art.add_row({"fringe", "inf", "inf", "inf", "asymptotic decay only"});
  art.write(cfg);
  return kExitOk;
}

int cmd_sweep(const io::RunConfig& cfg, const std::string& criterion,
              const std::string& variable, const std::vector<double>& points) {
  cfg.validate();
  if (points.empty()) throw std::invalid_argument("sweep: empty point list");
  io::Artifact art({variable, "tau_star", "bracket_lo", "bracket_hi", "reason"});
  art.add_meta_config(cfg);
  art.add_meta("criterion", criterion);

  std::vector<std::vector<std::string>> rows(points.size());
  io::parallel_for(cfg.effective_jobs(), static_cast<int>(points.size()),
                   [&](int i) {
    const double value = points[i];
    const double alpha = variable == "alpha" ? value : cfg.alpha;
    const double nbar = variable == "nbar" ? value : cfg.nbar;
    try {
      const CatState state(alpha);
      const ThermalChannel channel(cfg.gamma, nbar);
      crit::ThresholdResult r;
      if (criterion == "vogel1") {
        r = crit::tau_vogel(state, channel, cfg.tol);
      } else if (criterion == "klyshko") {
        r = crit::tau_klyshko(state, channel, cfg.tol, 1);
      } else if (criterion == "depth") {
        const double tp = crit::tau_nonclassical_depth(channel);
        r = {tp, tp, tp, 0, crit::CriterionId::depth};
      } else if (criterion == "wigner_neg") {
        const double tw = crit::tau_wigner_negativity(channel);
        r = {tw, tw, tw, 0, crit::CriterionId::wigner_neg};
      } else {
        throw std::invalid_argument("unknown sweep criterion " + criterion);
      }
      rows[i] = {io::format_value(value), io::format_value(r.tau_star),
                 io::format_value(r.bracket_lo),
                 io::format_value(r.bracket_hi), ""};
    } catch (const std::exception& e) {
      rows[i] = {io::format_value(value), "nan", "nan", "nan", e.what()};
    }
  });
  for (auto& row : rows) art.add_row(std::move(row));
  art.write(cfg);
  return kExitOk;
}

int cmd_contour(const io::RunConfig& cfg) {
  cfg.validate();
  io::Artifact art({"tau", "u"});
  art.add_meta_config(cfg);
  const CatState state(cfg.alpha);
  if (cfg.alpha == 0.0 || cfg.nbar == 0.0) {
    art.add_meta("tau_v", cfg.alpha == 0.0 ? "0" : "inf");
    art.write(cfg);
    return kExitOk;
  }
  const ThermalChannel channel(cfg.gamma, cfg.nbar);
  const auto tv = crit::tau_vogel(state, channel, cfg.tol);
  art.add_meta("tau_v", io::format_value(tv.tau_star));

  const double tau_hi = std::min(cfg.effective_tau_max(), tv.tau_star * 1.02);
  for (int j = 1; j <= cfg.grid_tau; ++j) {
    const double tau = tau_hi * j / cfg.grid_tau;
    const auto co = coefficients(channel, tau);
    const double ca = co.c * state.alpha;
    const double umax = (co.d > 1e-12)
                            ? ca / co.d + 5.0 / std::sqrt(1.0 + co.d)
                            : 2.0 * state.alpha + 10.0;
    const auto f = [&](double u) {
      return char_normal(state, co, PhasePoint{u, 0.0}) - 1.0;
    };
    const double step = umax / cfg.grid_u;
    double prev_u = step * 1e-3;
    double prev_f = f(prev_u);
    for (double u = step; u <= umax; u += step) {
      const double fu = f(u);
      if ((prev_f < 0.0) != (fu < 0.0)) {
        const auto root = num::bisect(f, num::Bracket{prev_u, u}, 1e-10);
        art.add_row({io::format_value(tau), io::format_value(root.root)});
      }
      prev_u = u;
      prev_f = fu;
    }
  }
  art.write(cfg);
  return kExitOk;
}

int cmd_klyshko(const io::RunConfig& cfg, int n) {
  cfg.validate();
  if (n < 0) throw std::invalid_argument("klyshko: n must be >= 0");
  io::Artifact art({"tau", "B", "reason"});
  art.add_meta_config(cfg);
  art.add_meta("n", std::to_string(n));
  const CatState state(cfg.alpha);
  const double tau_hi = cfg.effective_tau_max();

  std::vector<std::vector<std::string>> rows(cfg.grid_tau + 1);
  io::parallel_for(cfg.effective_jobs(), cfg.grid_tau + 1, [&](int j) {
    const double tau = tau_hi * j / cfg.grid_tau;
    try {
      const auto co = coefficients(ThermalChannel(cfg.gamma, cfg.nbar), tau);
      const double b = crit::klyshko_B(state, co, n);
      rows[j] = {io::format_value(tau), io::format_value(b), ""};
    } catch (const std::exception& e) {
      rows[j] = {io::format_value(tau), "nan", e.what()};
    }
  });
  for (auto& row : rows) art.add_row(std::move(row));

  if (cfg.nbar > 0.0) {
    const ThermalChannel channel(cfg.gamma, cfg.nbar);
    const auto res = crit::tau_klyshko(state, channel, cfg.tol, n);
    std::string crossings;
    for (double c : res.sign_changes) {
      if (!crossings.empty()) crossings += " ";
      crossings += io::format_value(c);
    }
    art.add_meta("zero_crossings", crossings.empty() ? "none" : crossings);
    art.add_meta("tau_k", io::format_value(res.never_nonclassical
                                               ? 0.0
                                               : res.tau_star));
  }
  art.write(cfg);
  return kExitOk;
}

int cmd_oracle_check(const io::RunConfig& cfg, std::vector<double> alphas,
                     std::vector<double> nbars, std::vector<double> taus) {
  cfg.validate();
  if (alphas.empty()) alphas = {1.0, 2.0, 3.0};
  if (nbars.empty()) nbars = {1.0, 10.0, 100.0};
  if (taus.empty()) taus = {0.0, 0.001, 0.01};

  io::Artifact art({"alpha", "nbar", "tau", "cutoff", "max_dev_probs",
                    "max_dev_char", "status"});
  art.add_meta_config(cfg);
  art.add_meta("tolerance", "1e-6");

  struct Point {
    double alpha, nbar, tau;
  };
  std::vector<Point> grid;
  for (double a : alphas) {
    for (double nb : nbars) {
      for (double t : taus) grid.push_back({a, nb, t});
    }
  }
  const double tau_top = *std::max_element(taus.begin(), taus.end());

  bool all_pass = true;
  std::mutex pass_mutex;
  std::vector<std::vector<std::string>> rows(grid.size());
  io::parallel_for(cfg.effective_jobs(), static_cast<int>(grid.size()),
                   [&](int i) {
    const auto& pt = grid[i];
    const CatState state(pt.alpha);
    const ThermalChannel channel(cfg.gamma, pt.nbar);
    const int dim = fock::suggested_cutoff(state, channel, tau_top);
    if (dim > 1500) {
      throw std::invalid_argument(
          "oracle-check: Fock cutoff " + std::to_string(dim) +
          " exceeds the memory bound; reduce alpha, nbar or tau");
    }
    const auto rho0 = fock::cat_density_matrix(state, dim);
    const auto rho = fock::evolve(rho0, channel, pt.tau);
    const auto co = coefficients(channel, pt.tau);

    const auto probs = fock::oracle_photon_probs(rho);
    double dev_probs = 0.0;
    for (int n = 0; n <= std::min(20, dim - 1); ++n) {
      dev_probs = std::max(
          dev_probs, std::abs(probs[n] - crit::photon_prob(state, co, n)));
    }
    double dev_char = 0.0;
    for (double u : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      for (double v : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        const auto chi = fock::oracle_char_normal(rho, PhasePoint{u, v});
        const double analytic = char_normal(state, co, PhasePoint{u, v});
        dev_char = std::max(dev_char, std::abs(chi - std::complex<double>(
                                                         analytic, 0.0)));
      }
    }
    const bool pass = dev_probs < 1e-6 && dev_char < 1e-6;
    {
      std::lock_guard<std::mutex> lock(pass_mutex);
      all_pass = all_pass && pass;
    }
    rows[i] = {io::format_value(pt.alpha), io::format_value(pt.nbar),
               io::format_value(pt.tau), std::to_string(dim),
               io::format_value(dev_probs), io::format_value(dev_char),
               pass ? "pass" : "fail"};
  });
  for (auto& row : rows) art.add_row(std::move(row));
  art.add_meta("result", all_pass ? "pass" : "fail");
  art.write(cfg);
  return all_pass ? kExitOk : kExitOracleFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catlab: decoherence of a Schrodinger-cat state in a thermal "
               "channel and its nonclassicality threshold times"};
  app.require_subcommand(1);

  io::RunConfig cfg;
  std::string config_path;
  std::string format_str = "csv";
  bool tau_max_set = false;
  double tau_max_value = 0.0;

  std::vector<std::string> cli_set;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha, "cat amplitude")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--nbar", cfg.nbar, "mean thermal occupation")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--gamma", cfg.gamma, "damping rate (times are gamma*t)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tau-max", tau_max_value,
                    "largest physical time t; rescaled internally to gamma*t")
        ->each([&](const std::string&) { tau_max_set = true; });
    sub->add_option("--tol", cfg.tol, "threshold bisection tolerance");
    sub->add_option("--grid-tau", cfg.grid_tau, "tau sample count");
    sub->add_option("--grid-u", cfg.grid_u, "phase-space sample count");
    sub->add_option("--out", cfg.out, "output path ('-' = stdout)");
    sub->add_option("--format", format_str, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--config", config_path, "flat key-value JSON config file");
    sub->add_option("--jobs", cfg.jobs,
                    "worker count (default: cores, or CATLAB_JOBS)");
  };

  auto* table = app.add_subcommand("table", "threshold-time comparison table");
  add_common(table);

  auto* sweep = app.add_subcommand("sweep", "threshold sweep over alpha or nbar");
  add_common(sweep);
  std::string sweep_criterion = "vogel1";
  std::string sweep_variable = "alpha";
  std::string sweep_range;
  std::string sweep_values;
  sweep->add_option("--criterion", sweep_criterion, "criterion id")
      ->check(CLI::IsMember({"vogel1", "klyshko", "depth", "wigner_neg"}));
  sweep->add_option("--variable", sweep_variable, "swept variable")
      ->check(CLI::IsMember({"alpha", "nbar"}));
  sweep->add_option("--range", sweep_range, "lo:hi:n inclusive");
  sweep->add_option("--values", sweep_values, "comma-separated values");

  auto* contour = app.add_subcommand(
      "contour", "Phi_t(u,0) = 1 contour in the (tau, u) plane");
  add_common(contour);

  auto* klyshko = app.add_subcommand("klyshko", "B(n) versus rescaled time");
  add_common(klyshko);
  int klyshko_n = 1;
  klyshko->add_option("-n,--order", klyshko_n, "photon-number order n");

  auto* oracle = app.add_subcommand(
      "oracle-check", "analytic path versus Fock master-equation integration");
  add_common(oracle);
  std::string oc_alphas, oc_nbars, oc_taus;
  oracle->add_option("--alphas", oc_alphas, "comma list (default 1,2,3)");
  oracle->add_option("--nbars", oc_nbars, "comma list (default 1,10,100)");
  oracle->add_option("--taus", oc_taus, "comma list (default 0,0.001,0.01)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    // Record which fields came from flags so the config file cannot
    // override them.
    for (const auto* sub : app.get_subcommands()) {
      for (const auto* opt : sub->get_options()) {
        if (opt->count() > 0) {
          std::string name = opt->get_name();
          if (name.rfind("--", 0) == 0) name = name.substr(2);
          for (auto& ch : name) {
            if (ch == '-') ch = '_';
          }
          cli_set.push_back(name);
        }
      }
    }
    if (!config_path.empty()) {
      cfg = io::load_config_file(config_path, cfg, cli_set);
    }
    if (format_str == "json") cfg.format = io::OutputFormat::json;
    if (tau_max_set) cfg.tau_max = cfg.gamma * tau_max_value;

    if (app.got_subcommand(table)) return cmd_table(cfg);
    if (app.got_subcommand(sweep)) {
      std::vector<double> points;
      if (!sweep_values.empty()) points = parse_values(sweep_values);
      if (!sweep_range.empty()) {
        const auto more = parse_range(sweep_range);
        points.insert(points.end(), more.begin(), more.end());
      }
      return cmd_sweep(cfg, sweep_criterion, sweep_variable, points);
    }
    if (app.got_subcommand(contour)) return cmd_contour(cfg);
    if (app.got_subcommand(klyshko)) return cmd_klyshko(cfg, klyshko_n);
    if (app.got_subcommand(oracle)) {
      return cmd_oracle_check(
          cfg, oc_alphas.empty() ? std::vector<double>{} : parse_values(oc_alphas),
          oc_nbars.empty() ? std::vector<double>{} : parse_values(oc_nbars),
          oc_taus.empty() ? std::vector<double>{} : parse_values(oc_taus));
    }
    return kExitUsage;
  } catch (const num::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
