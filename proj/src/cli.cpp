#include "qfisep/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qfisep/observables.hpp"
#include "qfisep/qfi.hpp"
#include "qfisep/states.hpp"

namespace qfisep::cli {

namespace {

ObsKind parse_obs_kind(const std::string& s) {
  if (s == "loo") return ObsKind::Loo;
  if (s == "sic") return ObsKind::Sic;
  throw UsageError("unknown observable kind '" + s + "' (expected loo or sic)");
}

FamilyKind parse_family(const std::string& s) {
  if (s == "isotropic") return FamilyKind::Isotropic;
  if (s == "werner") return FamilyKind::Werner;
  throw UsageError("unknown family '" + s + "' (expected isotropic or werner)");
}

void parse_mode(const std::string& s, bool& unopt, bool& opt) {
  if (s == "unopt") {
    unopt = true, opt = false;
  } else if (s == "opt") {
    unopt = false, opt = true;
  } else if (s == "both") {
    unopt = opt = true;
  } else {
    throw UsageError("unknown mode '" + s + "' (expected unopt, opt or both)");
  }
}

std::string fixed5(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  return buf;
}

void print_certification(std::ostream& out, const CertificationReport& report) {
  for (const auto& c : report.checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " (deviation "
        << format_number(c.deviation) << ", tolerance " << format_number(c.tolerance) << ")\n";
  }
}

// Options shared by evaluate/sweep/threshold.
struct CommonOptions {
  std::string family = "isotropic";
  int dim = 3;
  std::string obs;
  std::string obs_a = "sic";
  std::string obs_b = "sic";
  std::string mode = "both";
  std::string grid = "0:1:101";
  std::string fiducial;
  std::string out_path;
  std::uint64_t seed = 0;
  int jobs = 1;

  void add_state_flags(CLI::App* app) {
    app->add_option("--family", family, "State family: isotropic | werner");
    app->add_option("--dim", dim, "Local dimension d");
  }
  void add_obs_flags(CLI::App* app) {
    app->add_option("--obs", obs, "Observable kind for both sides: loo | sic");
    app->add_option("--obs-a", obs_a, "Observable kind on side A: loo | sic");
    app->add_option("--obs-b", obs_b, "Observable kind on side B: loo | sic");
    app->add_option("--fiducial", fiducial, "Fiducial vector file for SIC at other dimensions");
    app->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  }

  SweepConfig config() const {
    SweepConfig c;
    c.family = parse_family(family);
    c.local_dim = dim;
    c.obs_a = parse_obs_kind(obs.empty() ? obs_a : obs);
    c.obs_b = parse_obs_kind(obs.empty() ? obs_b : obs);
    parse_mode(mode, c.unoptimized, c.optimized);
    c.grid = parse_grid(grid);
    if (!fiducial.empty()) c.fiducial_path = fiducial;
    if (!out_path.empty()) c.out_path = out_path;
    c.seed = seed;
    c.jobs = jobs;
    c.validate();
    return c;
  }
};

int cmd_validate(const std::string& kind_text, int dim, const std::string& fiducial,
                 std::ostream& out) {
  const ObsKind kind = parse_obs_kind(kind_text);
  if (dim < 2) throw UsageError("--dim must be >= 2");

  if (kind == ObsKind::Loo) {
    const auto members = loo_basis(dim).members();
    out << "kind: LOO\ndim: " << dim << "\nelements: " << members.size()
        << "\nbound s: " << format_number(dim - 1.0) << '\n';
    const auto report = certify_loo(members, dim);
    print_certification(out, report);
    out << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
    return report.passed() ? kExitOk : kExitCertification;
  }

  std::vector<Observable> members;
  double tolerance = tol::kConstruction;
  if (!fiducial.empty()) {
    const auto f = read_fiducial_file(fiducial);
    if (f.dim != dim) {
      throw UsageError("fiducial file has dimension " + std::to_string(f.dim) +
                       ", --dim is " + std::to_string(dim));
    }
    if (std::abs(f.amplitudes.norm() - 1.0) > 1e-9) {
      out << "[FAIL] fiducial norm = 1 (norm " << format_number(f.amplitudes.norm()) << ")\n"
          << "result: FAIL\n";
      return kExitCertification;
    }
    for (const auto& v : weyl_heisenberg_orbit(f.amplitudes)) {
      members.emplace_back(v * v.adjoint() / static_cast<double>(dim));
    }
    tolerance = tol::kSicCertify;
  } else {
    if (dim != 2 && dim != 3) {
      throw UsageError("no built-in SIC-POVM for d = " + std::to_string(dim) +
                       "; pass --fiducial PATH");
    }
    members = sic_povm(dim).members();
  }

  const double d = dim;
  out << "kind: SIC\ndim: " << dim << "\nelements: " << members.size()
      << "\nbound s: " << format_number((d - 1.0) / (d * (d + 1.0))) << '\n';
  const auto report = certify_sic(members, dim, tolerance);
  print_certification(out, report);
  if (members.size() > 1) {
    // |<psi_0|psi_1>|^2 = d^2 Tr[E_0 E_1].
    const double overlap = d * d * (members[0].matrix() * members[1].matrix()).trace().real();
    out << "off-diagonal overlap |<psi_mu|psi_nu>|^2: " << format_number(overlap)
        << " (expected " << format_number(1.0 / (d + 1.0)) << ")\n";
  }
  if (report.passed()) {
    const auto sic = ObservableSet::sic(dim, members, tolerance);
    for (const auto sign : {SicSign::Minus, SicSign::Plus}) {
      const auto loo = sic_to_loo(sic, sign);
      const auto loo_report = certify_loo(loo.members(), dim);
      out << (loo_report.passed() ? "[PASS] " : "[FAIL] ") << "derived LOO ("
          << (sign == SicSign::Minus ? "minus" : "plus") << " sign) orthonormal\n";
    }
  }
  out << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  return report.passed() ? kExitOk : kExitCertification;
}

void print_report(std::ostream& out, const CriterionReport& r) {
  if (r.eta) out << "eta: " << format_number(*r.eta) << '\n';
  if (!r.state_id.empty()) out << "state: " << r.state_id << '\n';
  out << "F_A: " << format_number(r.f_a) << '\n'
      << "F_B: " << format_number(r.f_b) << '\n'
      << "unopt_total: " << format_number(r.unopt_total) << '\n'
      << "opt_total: " << format_number(r.opt_total) << '\n'
      << "bound: " << format_number(r.bound) << '\n'
      << "xi_trace_norm: " << format_number(r.xi_trace_norm) << '\n'
      << "unopt_violated: " << (r.unopt_violated ? "true" : "false") << '\n'
      << "opt_violated: " << (r.opt_violated ? "true" : "false") << '\n'
      << "entangled: " << (r.opt_violated ? "detected" : "not detected") << '\n';
}

int cmd_evaluate(const CommonOptions& opts, double eta, int terms, std::ostream& out) {
  const bool separable = opts.family == "separable";
  CommonOptions copy = opts;
  if (separable) copy.family = "isotropic";
  const auto cfg = copy.config();
  const auto a = make_observable_set(cfg.obs_a, cfg.local_dim, cfg.fiducial_path);
  const auto b = make_observable_set(cfg.obs_b, cfg.local_dim, cfg.fiducial_path);

  CriterionReport report;
  if (separable) {
    if (terms < 1) throw UsageError("--terms must be >= 1");
    report = evaluate(random_separable(cfg.local_dim, cfg.local_dim, terms, cfg.seed), a, b);
    report.state_id = "random-separable seed=" + std::to_string(cfg.seed) +
                      " terms=" + std::to_string(terms);
  } else {
    if (!(eta >= 0.0 && eta <= 1.0)) throw UsageError("--eta must lie in [0, 1]");
    const StateFamily family{cfg.family, cfg.local_dim};
    report = evaluate(family.at(eta), a, b);
    report.eta = eta;
    report.state_id = std::string(to_string(cfg.family));
  }
  print_report(out, report);
  return kExitOk;
}

int cmd_sweep(const SweepConfig& cfg, std::ostream& out) {
  const auto a = make_observable_set(cfg.obs_a, cfg.local_dim, cfg.fiducial_path);
  const auto b = make_observable_set(cfg.obs_b, cfg.local_dim, cfg.fiducial_path);
  const StateFamily family{cfg.family, cfg.local_dim};
  const auto rows = sweep(family, a, b, linear_grid(cfg.grid.start, cfg.grid.stop, cfg.grid.count),
                          cfg.jobs);
  if (cfg.out_path) {
    std::ofstream file(*cfg.out_path, std::ios::binary);
    if (!file) throw Error("cannot open " + *cfg.out_path + " for writing");
    write_sweep_csv(file, rows);
    if (!file) throw Error("write to " + *cfg.out_path + " failed");
    out << "wrote " << rows.size() << " rows to " << *cfg.out_path << '\n';
  } else {
    write_sweep_csv(out, rows);
  }
  return kExitOk;
}

std::optional<double> run_threshold(const SweepConfig& cfg, CriterionMode mode) {
  const auto a = make_observable_set(cfg.obs_a, cfg.local_dim, cfg.fiducial_path);
  const auto b = make_observable_set(cfg.obs_b, cfg.local_dim, cfg.fiducial_path);
  ThresholdOptions options;
  options.jobs = cfg.jobs;
  return threshold(StateFamily{cfg.family, cfg.local_dim}, a, b, mode, options);
}

int cmd_threshold(const SweepConfig& cfg, std::ostream& out) {
  const auto show = [](const std::optional<double>& t) {
    return t ? fixed5(*t) : std::string("none");
  };
  if (cfg.unoptimized && cfg.optimized) {
    out << "unopt: " << show(run_threshold(cfg, CriterionMode::Unoptimized)) << '\n';
    out << "opt: " << show(run_threshold(cfg, CriterionMode::Optimized)) << '\n';
  } else {
    const auto mode = cfg.optimized ? CriterionMode::Optimized : CriterionMode::Unoptimized;
    out << show(run_threshold(cfg, mode)) << '\n';
  }
  return kExitOk;
}

struct PublishedThreshold {
  const char* label;
  FamilyKind family;
  ObsKind obs;
  CriterionMode mode;
  double published;
  double tolerance;
};

int cmd_reproduce_fig2(const std::string& out_dir, int jobs, std::ostream& out) {
  const std::filesystem::path dir = out_dir.empty() ? "." : out_dir;
  std::filesystem::create_directories(dir);
  const auto loo = loo_basis(3);
  const auto sic = sic_povm(3);
  const auto grid = linear_grid(0.0, 1.0, 201);

  const std::pair<FamilyKind, const char*> files[] = {
      {FamilyKind::Isotropic, "fig2a_isotropic.csv"},
      {FamilyKind::Werner, "fig2b_werner.csv"},
  };
  for (const auto& [kind, name] : files) {
    const StateFamily family{kind, 3};
    const auto loo_rows = sweep(family, loo, loo, grid, jobs);
    const auto sic_rows = sweep(family, sic, sic, grid, jobs);
    const auto path = dir / name;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open " + path.string() + " for writing");
    write_comparison_csv(file, loo_rows, sic_rows);
    if (!file) throw Error("write to " + path.string() + " failed");
    out << "wrote " << path.string() << " (" << grid.size() << " rows)\n";
  }

  const PublishedThreshold rows[] = {
      {"isotropic LOO unoptimized", FamilyKind::Isotropic, ObsKind::Loo,
       CriterionMode::Unoptimized, 2.0 / 3.0, 1e-4},
      {"isotropic SIC optimized", FamilyKind::Isotropic, ObsKind::Sic, CriterionMode::Optimized,
       0.4617, 5e-4},
      {"isotropic LOO optimized", FamilyKind::Isotropic, ObsKind::Loo, CriterionMode::Optimized,
       0.4666, 5e-4},
      {"werner SIC optimized", FamilyKind::Werner, ObsKind::Sic, CriterionMode::Optimized,
       0.6667, 1e-3},
  };
  out << std::left << std::setw(28) << "criterion" << std::setw(11) << "published"
      << std::setw(11) << "computed" << std::setw(8) << "tol" << "status\n";
  for (const auto& row : rows) {
    const auto& set = row.obs == ObsKind::Loo ? loo : sic;
    ThresholdOptions options;
    options.jobs = jobs;
    const auto t = threshold(StateFamily{row.family, 3}, set, set, row.mode, options);
    const bool pass = t && std::abs(*t - row.published) <= row.tolerance;
    char tol_text[16];
    std::snprintf(tol_text, sizeof tol_text, "%.0e", row.tolerance);
    out << std::setw(28) << row.label << std::setw(11) << fixed5(row.published) << std::setw(11)
        << (t ? fixed5(*t) : std::string("none")) << std::setw(8) << tol_text
        << (pass ? "PASS" : "FAIL") << '\n';
  }
  return kExitOk;
}

}  // namespace

Grid parse_grid(const std::string& text) {
  std::istringstream in(text);
  Grid g;
  char c1 = 0, c2 = 0;
  if (!(in >> g.start >> c1 >> g.stop >> c2 >> g.count) || c1 != ':' || c2 != ':' ||
      !(in >> std::ws).eof()) {
    throw UsageError("grid must be START:STOP:COUNT, got '" + text + "'");
  }
  if (g.count < 2) throw UsageError("grid count must be >= 2");
  if (!(0.0 <= g.start && g.start < g.stop && g.stop <= 1.0)) {
    throw UsageError("grid needs 0 <= START < STOP <= 1");
  }
  return g;
}

Fiducial read_fiducial(std::istream& in) {
  Fiducial f;
  std::string line;
  if (!std::getline(in, line)) throw InvalidVector("empty fiducial file");
  {
    std::istringstream header(line);
    if (!(header >> f.dim) || f.dim < 2 || !(header >> std::ws).eof()) {
      throw InvalidVector("first line must hold the dimension d >= 2");
    }
  }
  f.amplitudes.resize(f.dim);
  for (int j = 0; j < f.dim; ++j) {
    if (!std::getline(in, line)) {
      throw InvalidVector("expected " + std::to_string(f.dim) + " amplitude lines, got " +
                          std::to_string(j));
    }
    std::istringstream row(line);
    double re = 0.0, im = 0.0;
    if (!(row >> re >> im) || !(row >> std::ws).eof()) {
      throw InvalidVector("amplitude line " + std::to_string(j + 1) + " must be 're im'");
    }
    f.amplitudes(j) = Complex(re, im);
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw InvalidVector("trailing content after " + std::to_string(f.dim) + " amplitudes");
    }
  }
  return f;
}

Fiducial read_fiducial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open fiducial file " + path);
  return read_fiducial(in);
}

ObservableSet make_observable_set(ObsKind kind, int dim,
                                  const std::optional<std::string>& fiducial_path) {
  if (dim < 2) throw UsageError("--dim must be >= 2");
  if (kind == ObsKind::Loo) return loo_basis(dim);
  if (fiducial_path) {
    const auto f = read_fiducial_file(*fiducial_path);
    if (f.dim != dim) {
      throw UsageError("fiducial file has dimension " + std::to_string(f.dim) + ", --dim is " +
                       std::to_string(dim));
    }
    return sic_from_fiducial(dim, f.amplitudes);
  }
  if (dim != 2 && dim != 3) {
    throw UsageError("no built-in SIC-POVM for d = " + std::to_string(dim) +
                     "; pass --fiducial PATH");
  }
  return sic_povm(dim);
}

void SweepConfig::validate() const {
  if (local_dim < 2) throw UsageError("--dim must be >= 2");
  if (grid.count < 2) throw UsageError("grid count must be >= 2");
  if (!(0.0 <= grid.start && grid.start < grid.stop && grid.stop <= 1.0)) {
    throw UsageError("grid needs 0 <= START < STOP <= 1");
  }
  if (!unoptimized && !optimized) throw UsageError("at least one mode required");
  if (jobs < 1) throw UsageError("--jobs must be >= 1");
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<CriterionReport>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.eta.value_or(std::nan(""))) << ',' << format_number(r.unopt_total)
        << ',' << format_number(r.opt_total) << ',' << format_number(r.bound) << ','
        << format_number(r.xi_trace_norm) << ',' << (r.unopt_violated ? 1 : 0) << ','
        << (r.opt_violated ? 1 : 0) << '\n';
  }
}

void write_comparison_csv(std::ostream& out, const std::vector<CriterionReport>& loo,
                          const std::vector<CriterionReport>& sic) {
  if (loo.size() != sic.size()) throw SizeMismatch("LOO and SIC sweeps differ in length");
  out << "eta";
  for (const char* prefix : {"loo_", "sic_"}) {
    for (const char* col : {"unopt_total", "opt_total", "bound", "xi_trace_norm",
                            "unopt_violated", "opt_violated"}) {
      out << ',' << prefix << col;
    }
  }
  out << '\n';
  for (std::size_t i = 0; i < loo.size(); ++i) {
    out << format_number(loo[i].eta.value_or(std::nan("")));
    for (const auto* r : {&loo[i], &sic[i]}) {
      out << ',' << format_number(r->unopt_total) << ',' << format_number(r->opt_total) << ','
          << format_number(r->bound) << ',' << format_number(r->xi_trace_norm) << ','
          << (r->unopt_violated ? 1 : 0) << ',' << (r->opt_violated ? 1 : 0);
    }
    out << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"QFI-based bipartite entanglement criteria"};
  app.require_subcommand(1);

  std::string kind;
  int validate_dim = 0;
  std::string validate_fiducial;
  auto* validate = app.add_subcommand("validate", "Certify an LOO basis or SIC-POVM");
  validate->add_option("--kind", kind, "loo | sic")->required();
  validate->add_option("--dim", validate_dim, "Dimension d")->required();
  validate->add_option("--fiducial", validate_fiducial, "Fiducial vector file");

  CommonOptions eval_opts;
  double eta = -1.0;
  int terms = 4;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Evaluate both criteria on one state");
  evaluate_cmd->add_option("--family", eval_opts.family, "isotropic | werner | separable");
  evaluate_cmd->add_option("--dim", eval_opts.dim, "Local dimension d");
  evaluate_cmd->add_option("--eta", eta, "Family parameter in [0, 1]");
  evaluate_cmd->add_option("--seed", eval_opts.seed, "Seed for --family separable");
  evaluate_cmd->add_option("--terms", terms, "Product terms for --family separable");
  eval_opts.add_obs_flags(evaluate_cmd);

  CommonOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a state family on a grid, write CSV");
  sweep_opts.add_state_flags(sweep_cmd);
  sweep_opts.add_obs_flags(sweep_cmd);
  sweep_cmd->add_option("--mode", sweep_opts.mode, "unopt | opt | both");
  sweep_cmd->add_option("--grid", sweep_opts.grid, "START:STOP:COUNT");
  sweep_cmd->add_option("--out", sweep_opts.out_path, "CSV output path (stdout if omitted)");
  sweep_cmd->add_option("--seed", sweep_opts.seed, "Recorded seed (sweeps are deterministic)");

  CommonOptions thr_opts;
  auto* threshold_cmd = app.add_subcommand("threshold", "Locate the detection threshold in eta");
  thr_opts.add_state_flags(threshold_cmd);
  thr_opts.add_obs_flags(threshold_cmd);
  threshold_cmd->add_option("--mode", thr_opts.mode, "unopt | opt | both");
  threshold_cmd->add_option("--seed", thr_opts.seed, "Unused; accepted for config symmetry");

  std::string fig_out;
  int fig_jobs = 1;
  auto* fig = app.add_subcommand("reproduce-fig2",
                                 "Write the 3x3 isotropic/Werner sweeps and threshold summary");
  fig->add_option("--out", fig_out, "Output directory");
  fig->add_option("--jobs", fig_jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("qfisep");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(kind, validate_dim, validate_fiducial, out);
    if (*evaluate_cmd) return cmd_evaluate(eval_opts, eta, terms, out);
    if (*sweep_cmd) return cmd_sweep(sweep_opts.config(), out);
    if (*threshold_cmd) return cmd_threshold(thr_opts.config(), out);
    if (*fig) return cmd_reproduce_fig2(fig_out, fig_jobs, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NonMonotoneViolation& e) {
    err << "non-monotone violation between eta = " << e.segment_start()
        << " and eta = " << e.segment_end() << '\n';
    return kExitNonMonotone;
  } catch (const NotAFiducial& e) {
    err << e.what() << '\n';
    return kExitCertification;
  } catch (const NotSIC& e) {
    err << e.what() << '\n';
    return kExitCertification;
  } catch (const InvalidVector& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterOutOfRange& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidDimension& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qfisep::cli
