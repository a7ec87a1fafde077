#include "tailfrac/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "tailfrac/errors.hpp"
#include "tailfrac/estimation.hpp"
#include "tailfrac/second_order.hpp"
#include "tailfrac/simulation.hpp"

namespace tailfrac::cli {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

enum class Kind { None, Gpd, Burr, Frechet, StudentT };

// Family selection flags shared by expansion, figure and simulate.
struct FamilyFlags {
  bool gpd = false;
  bool burr = false;
  bool frechet = false;
  bool student_t = false;
  double sigma = 0.0;
  double alpha = 0.0;
  double lambda = 0.0;
  double tau = 0.0;
  double nu = 0.0;
  CLI::Option* sigma_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* lambda_opt = nullptr;
  CLI::Option* tau_opt = nullptr;
  CLI::Option* nu_opt = nullptr;

  void attach(CLI::App* sub) {
    sub->add_flag("--gpd", gpd, "generalized Pareto (needs --sigma, --alpha)");
    sub->add_flag("--burr", burr, "Burr (needs --lambda, --tau, --alpha)");
    sub->add_flag("--frechet", frechet, "standard Frechet (needs --alpha)");
    sub->add_flag("--student-t", student_t, "Student t (needs --nu)");
    sigma_opt = sub->add_option("--sigma", sigma, "GPD scale");
    alpha_opt = sub->add_option("--alpha", alpha, "tail index");
    lambda_opt = sub->add_option("--lambda", lambda, "Burr lambda");
    tau_opt = sub->add_option("--tau", tau, "Burr tau");
    nu_opt = sub->add_option("--nu", nu, "degrees of freedom");
  }

  Kind selected() const {
    const int count = int(gpd) + int(burr) + int(frechet) + int(student_t);
    if (count > 1) throw UsageError("choose at most one of --gpd, --burr, --frechet, --student-t");
    if (gpd) return Kind::Gpd;
    if (burr) return Kind::Burr;
    if (frechet) return Kind::Frechet;
    if (student_t) return Kind::StudentT;
    return Kind::None;
  }

  bool any_parameter() const {
    return sigma_opt->count() || alpha_opt->count() || lambda_opt->count() ||
           tau_opt->count() || nu_opt->count();
  }

  // Builds the family. Parameters not given on the command line are taken
  // from `fallback` when it is of the same kind.
  Family build(const std::optional<Family>& fallback) const {
    Kind kind = selected();
    if (kind == Kind::None) {
      if (!fallback) throw UsageError("a family flag is required (--gpd, --burr, --frechet or --student-t)");
      kind = std::visit(Overloaded{[](const Gpd&) { return Kind::Gpd; },
                                   [](const Burr&) { return Kind::Burr; },
                                   [](const Frechet&) { return Kind::Frechet; },
                                   [](const StudentT&) { return Kind::StudentT; }},
                        *fallback);
    }
    const auto* gpd_fb = fallback ? std::get_if<Gpd>(&*fallback) : nullptr;
    const auto* burr_fb = fallback ? std::get_if<Burr>(&*fallback) : nullptr;
    const auto* frechet_fb = fallback ? std::get_if<Frechet>(&*fallback) : nullptr;
    const auto* t_fb = fallback ? std::get_if<StudentT>(&*fallback) : nullptr;

    auto value = [](const CLI::Option* opt, double v, const char* flag,
                    std::optional<double> fb) -> double {
      if (opt->count()) return v;
      if (fb) return *fb;
      throw UsageError(std::string("missing required value ") + flag);
    };
    auto reject = [](const CLI::Option* opt, const char* flag, const char* fam) {
      if (opt->count()) {
        throw UsageError(std::string(flag) + " does not apply to " + fam);
      }
    };
    auto opt_of = [](auto const* p, auto getter) -> std::optional<double> {
      if (p) return getter(*p);
      return std::nullopt;
    };

    try {
      switch (kind) {
        case Kind::Gpd:
          reject(lambda_opt, "--lambda", "gpd");
          reject(tau_opt, "--tau", "gpd");
          reject(nu_opt, "--nu", "gpd");
          return Gpd(value(sigma_opt, sigma, "--sigma", opt_of(gpd_fb, [](const Gpd& g) { return g.sigma(); })),
                     value(alpha_opt, alpha, "--alpha", opt_of(gpd_fb, [](const Gpd& g) { return g.alpha(); })));
        case Kind::Burr:
          reject(sigma_opt, "--sigma", "burr");
          reject(nu_opt, "--nu", "burr");
          return Burr(value(lambda_opt, lambda, "--lambda", opt_of(burr_fb, [](const Burr& b) { return b.lambda(); })),
                      value(tau_opt, tau, "--tau", opt_of(burr_fb, [](const Burr& b) { return b.tau(); })),
                      value(alpha_opt, alpha, "--alpha", opt_of(burr_fb, [](const Burr& b) { return b.alpha(); })));
        case Kind::Frechet:
          reject(sigma_opt, "--sigma", "frechet");
          reject(lambda_opt, "--lambda", "frechet");
          reject(tau_opt, "--tau", "frechet");
          reject(nu_opt, "--nu", "frechet");
          return Frechet(value(alpha_opt, alpha, "--alpha", opt_of(frechet_fb, [](const Frechet& f) { return f.alpha(); })));
        case Kind::StudentT:
          reject(sigma_opt, "--sigma", "student_t");
          reject(alpha_opt, "--alpha", "student_t");
          reject(lambda_opt, "--lambda", "student_t");
          reject(tau_opt, "--tau", "student_t");
          return StudentT(value(nu_opt, nu, "--nu", opt_of(t_fb, [](const StudentT& t) { return t.nu(); })));
        case Kind::None:
          break;
      }
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    throw UsageError("no family selected");
  }
};

std::size_t positive_count(long long v, const char* flag) {
  if (v < 1) throw UsageError(std::string(flag) + " must be at least 1");
  return static_cast<std::size_t>(v);
}

struct FigureDefaults {
  Family family;
  std::size_t n;
  double fraction;
};

// Caption parameters of the four reference figures.
FigureDefaults figure_defaults(int id) {
  switch (id) {
    case 1: return {Gpd(0.5, 2.0), 0, 0.0};
    case 2: return {Gpd(0.5, 1.0), 250, 0.25};
    case 3: return {Gpd(2.0, 2.0), 250, 0.25};
    default: return {StudentT(2.0), 1000, 0.20};
  }
}

void write_key(std::ostream& out, std::string_view key, std::string_view value) {
  out << key << '=' << value << '\n';
}

void write_rows_csv(std::ostream& out, const std::vector<TailRow>& rows) {
  out << "x,ecdf,exact_tail,approx_tail\n";
  for (const auto& r : rows) {
    out << format_number(r.x) << ',' << format_number(r.ecdf) << ','
        << format_number(r.exact_tail) << ',' << format_number(r.approx_tail)
        << '\n';
  }
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v,
                                 std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

Command parse_args(std::span<const std::string> argv) {
  CLI::App app{"tailfrac: second-order tail expansions and the usable sample fraction"};
  app.require_subcommand(1);
  std::string out_path;
  auto attach_out = [&out_path](CLI::App* sub) {
    sub->add_option("--out", out_path, "write output to this file instead of stdout");
  };

  auto* table1_cmd = app.add_subcommand("table1", "one-sided P(T > sqrt(nu)) for Student t");
  std::vector<double> nu_list;
  table1_cmd->add_option("--nu", nu_list, "comma separated degrees of freedom (default 1..10)")
      ->delimiter(',');
  attach_out(table1_cmd);

  auto* expansion_cmd = app.add_subcommand("expansion", "print the second-order expansion constants");
  FamilyFlags expansion_flags;
  expansion_flags.attach(expansion_cmd);
  attach_out(expansion_cmd);

  auto* figure_cmd = app.add_subcommand("figure", "exact vs approximate tail data as CSV");
  int figure_id = 0;
  long long figure_n = 0;
  double figure_fraction = 0.0;
  std::uint64_t figure_seed = kDefaultSeed;
  double x_min = 0.5;
  double x_max = 50.0;
  long long points = 100;
  FamilyFlags figure_flags;
  figure_cmd->add_option("id", figure_id, "figure number 1-4")->required();
  figure_flags.attach(figure_cmd);
  auto* fig_n_opt = figure_cmd->add_option("--n", figure_n, "sample size (figures 2-4)");
  auto* fig_frac_opt = figure_cmd->add_option("--fraction", figure_fraction, "top fraction kept (figures 2-4)");
  auto* fig_seed_opt = figure_cmd->add_option("--seed", figure_seed, "seed (figures 2-4)");
  auto* xmin_opt = figure_cmd->add_option("--xmin", x_min, "grid start (figure 1)");
  auto* xmax_opt = figure_cmd->add_option("--xmax", x_max, "grid end (figure 1)");
  auto* points_opt = figure_cmd->add_option("--points", points, "grid size (figure 1)");
  attach_out(figure_cmd);

  auto* simulate_cmd = app.add_subcommand("simulate", "seeded draws or Monte Carlo exceedance");
  FamilyFlags simulate_flags;
  simulate_flags.attach(simulate_cmd);
  double x0 = 0.0;
  long long sim_n = 0;
  std::uint64_t sim_seed = kDefaultSeed;
  auto* x0_opt = simulate_cmd->add_option("--x0", x0, "report the fraction of draws above x0");
  simulate_cmd->add_option("--n", sim_n, "number of draws")->required();
  simulate_cmd->add_option("--seed", sim_seed, "seed");
  attach_out(simulate_cmd);

  auto* analyze_cmd = app.add_subcommand("analyze", "estimate the usable fraction from a data file");
  std::string path;
  double mu = 0.0;
  long long k = 0;
  analyze_cmd->add_option("path", path, "data file, one number per line")->required();
  analyze_cmd->add_option("--mu", mu, "threshold")->required();
  auto* k_opt = analyze_cmd->add_option("--k", k, "order statistics used by Hill");
  attach_out(analyze_cmd);

  auto* fraction_cmd = app.add_subcommand("fraction", "tail index whose usable fraction is p");
  double p = 0.0;
  fraction_cmd->add_option("--p", p, "fraction in (0, 1)")->required();
  attach_out(fraction_cmd);

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& s : argv) raw.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) throw;
    std::ostringstream help;
    std::ostringstream ignored;
    app.exit(e, help, ignored);
    throw HelpRequested(help.str());
  }

  Command cmd;
  if (*table1_cmd) {
    if (nu_list.empty()) nu_list = table1_default_nu();
    for (double v : nu_list) {
      if (!(v > 0.0) || !std::isfinite(v)) throw UsageError("--nu values must be positive");
    }
    cmd.action = Table1Cmd{nu_list};
  } else if (*expansion_cmd) {
    cmd.action = ExpansionCmd{expansion_flags.build(std::nullopt)};
  } else if (*figure_cmd) {
    if (figure_id < 1 || figure_id > 4) throw UsageError("figure id must be 1, 2, 3 or 4");
    const FigureDefaults def = figure_defaults(figure_id);
    FigureCmd fig{figure_id, figure_flags.build(def.family)};
    if (figure_id == 1) {
      if (fig_n_opt->count() || fig_frac_opt->count() || fig_seed_opt->count()) {
        throw UsageError("--n, --fraction and --seed do not apply to figure 1");
      }
      if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max) || !(x_max > 0.0)) {
        throw UsageError("--xmin/--xmax must be finite with xmin < xmax and xmax > 0");
      }
      if (points < 2) throw UsageError("--points must be at least 2");
      fig.x_min = x_min;
      fig.x_max = x_max;
      fig.points = static_cast<std::size_t>(points);
    } else {
      if (xmin_opt->count() || xmax_opt->count() || points_opt->count()) {
        throw UsageError("--xmin, --xmax and --points only apply to figure 1");
      }
      fig.n = fig_n_opt->count() ? positive_count(figure_n, "--n") : def.n;
      fig.fraction = fig_frac_opt->count() ? figure_fraction : def.fraction;
      fig.seed = Seed{figure_seed};
      if (fig.n < 4) throw UsageError("--n must be at least 4");
      if (!(fig.fraction > 0.0 && fig.fraction <= 1.0)) {
        throw UsageError("--fraction must lie in (0, 1]");
      }
      if (top_count(fig.n, fig.fraction) < 1) {
        throw UsageError("--fraction selects no observations for this --n");
      }
    }
    cmd.action = std::move(fig);
  } else if (*simulate_cmd) {
    SimulateCmd sim{simulate_flags.build(std::nullopt), std::nullopt};
    if (x0_opt->count()) {
      if (std::isnan(x0)) throw UsageError("--x0 must be a number");
      sim.x0 = x0;
    }
    sim.n = positive_count(sim_n, "--n");
    sim.seed = Seed{sim_seed};
    cmd.action = std::move(sim);
  } else if (*analyze_cmd) {
    AnalyzeCmd an{path, mu, std::nullopt};
    if (!std::isfinite(mu)) throw UsageError("--mu must be finite");
    if (k_opt->count()) an.k = positive_count(k, "--k");
    cmd.action = std::move(an);
  } else if (*fraction_cmd) {
    if (!(p > 0.0 && p < 1.0)) throw UsageError("--p must lie in (0, 1)");
    cmd.action = FractionCmd{p};
  }
  if (!out_path.empty()) cmd.out_path = out_path;
  return cmd;
}

int run(const Command& cmd, std::ostream& out) {
  std::visit(
      Overloaded{
          [&](const Table1Cmd& c) {
            out << "nu,prob_one_sided,prob_two_sided\n";
            for (const auto& row : table1(c.nu)) {
              out << format_number(row.nu) << ',' << format_number(row.prob)
                  << ',' << format_number(row.two_sided()) << '\n';
            }
            out << "# " << kTable1Note << '\n';
          },
          [&](const ExpansionCmd& c) {
            const SecondOrder so = expansion(c.family);
            const std::pair<const char*, std::string> lines[] = {
                {"family", describe(c.family)},
                {"c", format_number(so.c)},
                {"a", format_number(so.a)},
                {"d", format_number(so.d)},
                {"b", format_number(so.b)},
                {"x_valid", format_number(so.x_valid)},
                {"p_valid", format_number(so.p_valid)},
                {"usable_fraction", format_number(1.0 - so.p_valid)},
                {"A", format_number(so.leading_A())},
                {"B", format_number(so.relative_B())},
                {"beta", format_number(so.second_order_beta())},
            };
            for (const auto& [key, value] : lines) {
              out << std::left << std::setw(16) << key << value << '\n';
            }
          },
          [&](const FigureCmd& c) {
            if (c.id == 1) {
              write_rows_csv(out, curve_data(c.family, c.x_min, c.x_max, c.points));
            } else {
              write_rows_csv(out, figure_data(c.family, c.n, c.fraction, c.seed));
            }
          },
          [&](const SimulateCmd& c) {
            if (c.x0) {
              write_key(out, "family", describe(c.family));
              write_key(out, "x0", format_number(*c.x0));
              write_key(out, "n", std::to_string(c.n));
              write_key(out, "seed", std::to_string(c.seed.value));
              write_key(out, "exceedance", format_number(mc_exceedance(c.family, *c.x0, c.n, c.seed)));
              write_key(out, "exact_tail", format_number(tail(c.family, *c.x0)));
            } else {
              for (double v : sample(c.family, c.n, c.seed)) {
                out << format_number(v) << '\n';
              }
            }
          },
          [&](const AnalyzeCmd& c) {
            const std::vector<double> data = read_data_file(c.path);
            FractionReport r;
            try {
              r = analyze(data, c.mu, c.k);
            } catch (const DomainError& e) {
              throw DataError(c.path + ": " + e.what());
            }
            write_key(out, "alpha_hat", format_number(r.alpha_hat));
            write_key(out, "k_used", std::to_string(r.k_used));
            write_key(out, "n", std::to_string(r.n));
            write_key(out, "N", std::to_string(r.below));
            write_key(out, "mu", format_number(r.mu));
            write_key(out, "sigma_hat", format_number(r.sigma_hat));
            write_key(out, "sigma_method", to_string(r.sigma_method));
            write_key(out, "usable_fraction", format_number(r.usable_fraction));
            write_key(out, "adjusted_percentile", format_number(r.adjusted_percentile));
            write_key(out, "threshold_lower_bound", format_number(r.threshold_lower_bound));
          },
          [&](const FractionCmd& c) {
            const FractionIndex fi = fraction_index(c.p);
            write_key(out, "p", format_number(fi.p));
            write_key(out, "alpha", format_number(fi.alpha));
            write_key(out, "natural_log_alpha", format_number(fi.natural_log_alpha));
            write_key(out, "note", fi.note);
          },
      },
      cmd.action);
  out.flush();
  return kOk;
}

int main_entry(std::span<const std::string> argv, std::ostream& out,
               std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_args(argv);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (cmd.out_path) {
      std::ofstream file(*cmd.out_path);
      if (!file) throw DataError("cannot open output file: " + *cmd.out_path);
      return run(cmd, file);
    }
    return run(cmd, out);
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kNumeric;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kData;
  } catch (const DomainError& e) {
    err << "data error: " << e.what() << '\n';
    return kData;
  }
}

}  // namespace tailfrac::cli
