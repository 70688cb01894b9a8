#include "commands.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "CLI11.hpp"
#include "function_spec.hpp"
#include "phin/error.hpp"
#include "phin/format.hpp"
#include "phin/kernel.hpp"
#include "phin/quadrature.hpp"
#include "phin/stft.hpp"
#include "phin/subspace.hpp"
#include "phin/transform.hpp"
#include "verify.hpp"

namespace phin::cli {

namespace {

using json = nlohmann::json;

// Inclusive grid lo, lo + step, ..., up to hi within a relative 1e-9 of step.
std::vector<double> grid_points(double lo, double hi, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("step must be positive");
  if (!(hi >= lo)) throw DomainError("range is empty");
  const UniformAxis a = UniformAxis::from_range(lo, hi, step);
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i];
  return v;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_atomic(path, content);
  }
}

std::string json_scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_double(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  throw std::invalid_argument("config values must be scalars, got " + v.dump());
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

// Expands --config <file.json>: every key absent from the command line is
// appended as --key value, so explicit flags win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
      break;
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    throw std::invalid_argument("config file '" + path + "': " + e.what());
  }
  if (!cfg.is_object()) throw std::invalid_argument("config file '" + path + "' must hold a JSON object");
  for (const auto& [key, value] : cfg.items()) {
    const std::string flag = "--" + key;
    if (has_flag(args, flag)) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
      continue;
    }
    args.push_back(flag);
    args.push_back(json_scalar(value));
  }
  return args;
}

long atoms_for(const FunctionExpr& f, int level, double reach) {
  if (!(reach > 0.0)) {
    reach = f.tail() == TailClass::algebraic ? 64.0 : std::min(64.0, f.decay_radius(1e-12));
  }
  return std::max(0L, static_cast<long>(std::ceil(std::ldexp(reach, level))) - 1);
}

struct KernelTableArgs {
  int n = 1;
  double eta_min = 0.0;
  double eta_max = 0.0;
  double step = 0.0;
  std::string out;
};

std::string kernel_table(const KernelTableArgs& a) {
  const Order n(a.n);
  std::string csv = "eta,c,s,asym\n";
  for (double eta : grid_points(a.eta_min, a.eta_max, a.step)) {
    const double asym = std::fabs(eta) >= 1.0 ? kernel_asymptotic(n, eta) : std::nan("");
    csv += format_double(eta) + ',' + format_double(kernel_even(n, eta)) + ',' + format_double(kernel_odd(n, eta)) +
           ',' + format_double(asym) + '\n';
  }
  return csv;
}

struct TransformArgs {
  int n = 1;
  std::string f;
  int j = 6;
  double omega_min = -4.0;
  double omega_max = 4.0;
  double omega_step = 0.125;
  std::string mode = "engine";
  double reach = 0.0;
  std::string out;
};

std::string transform(const TransformArgs& a) {
  const Order n(a.n);
  const FunctionExpr f = parse_function_spec(a.f);
  const std::vector<double> omegas = grid_points(a.omega_min, a.omega_max, a.omega_step);
  std::vector<std::complex<double>> values;
  if (a.mode == "oracle") {
    // Algebraic tails (odd atoms, sampled odd parts) converge only to about 1e-7.
    QuadOpts opts;
    if (f.tail() == TailClass::algebraic) opts.abs_tol = opts.rel_tol = 1e-7;
    for (double w : omegas) values.push_back(phi_integral(n, f, w, opts).value);
  } else {
    const long kmax = atoms_for(f, a.j, a.reach);
    const HaarCoeffs c = project(f, a.j, kmax);
    values = AtomImageTable(n, a.j, kmax, omegas).apply(c, Direction::forward);
  }
  std::string csv = "omega,re,im\n";
  for (std::size_t i = 0; i < omegas.size(); ++i)
    csv += format_double(omegas[i]) + ',' + format_double(values[i].real()) + ',' + format_double(values[i].imag()) +
           '\n';
  return csv;
}

struct EigenArgs {
  int n = 1;
  int m = 0;
  double x_min = -2.0;
  double x_max = 2.0;
  double step = 0.5;
  std::string out;
};

std::string eigen(const EigenArgs& a) {
  const EigenSpec spec(Order(a.n), a.m);
  std::string csv = "x,value\n";
  for (double x : grid_points(a.x_min, a.x_max, a.step))
    csv += format_double(x) + ',' + format_double(eigenfunction_eval(spec, x)) + '\n';
  return csv;
}

struct StftArgs {
  int n = 1;
  std::string window;
  std::string signal;
  double omega_min = -8.0;
  double omega_max = 8.0;
  double omega_step = 0.0625;
  double t_min = -6.0;
  double t_max = 6.0;
  double t_step = 0.0625;
  int level = 6;
  std::string mode = "engine";
  std::string format = "csv";
  unsigned threads = 0;
  std::string out;
};

Spectrogram stft(const StftArgs& a) {
  StftOptions opts;
  opts.level = a.level;
  opts.mode = a.mode == "quadrature" ? StftMode::quadrature : StftMode::engine;
  opts.threads = a.threads;
  if (!(a.omega_step > 0.0) || !(a.t_step > 0.0)) throw DomainError("grid steps must be positive");
  return stft_compute(Order(a.n), parse_function_spec(a.window), parse_function_spec(a.signal),
                      UniformAxis::from_range(a.omega_min, a.omega_max, a.omega_step),
                      UniformAxis::from_range(a.t_min, a.t_max, a.t_step), opts);
}

int verify_suite(const std::string& name, std::ostream& out) {
  const auto names = verify::suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown suite '" + name + "'");
  bool all = true;
  for (const auto& check : verify::suite(name)) {
    const auto r = verify::run_check(check);
    out << verify::format_line(r) << '\n' << std::flush;
    all = all && r.pass;
  }
  return all ? kOk : kVerifyFailed;
}

}  // namespace

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    o << content;
    o.flush();
    if (!o) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot rename onto '" + path + "'");
  }
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"phin: the generalized Fourier transform family Phi_n"};
  app.name("phin");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");
  app.add_option("--config", "JSON object of option values; explicit flags win");

  const auto steps = CLI::PositiveNumber;
  const auto order = CLI::Range(1, 8);

  KernelTableArgs kt;
  auto* kcmd = app.add_subcommand("kernel-table", "Tabulate c_n, s_n and the asymptotic form (CSV eta,c,s,asym)");
  kcmd->add_option("--n", kt.n, "Order n")->required()->check(order);
  kcmd->add_option("--eta-min", kt.eta_min, "First eta")->required();
  kcmd->add_option("--eta-max", kt.eta_max, "Last eta")->required();
  kcmd->add_option("--step", kt.step, "Grid step")->required()->check(steps);
  kcmd->add_option("--out", kt.out, "Output path (stdout when omitted)");

  TransformArgs tr;
  auto* tcmd = app.add_subcommand("transform", "Phi_n of a function on an omega grid (CSV omega,re,im)");
  tcmd->add_option("--n", tr.n, "Order n")->required()->check(order);
  tcmd->add_option("--f", tr.f, "Function spec, e.g. ngauss:2 or haar+:0:1")->required();
  tcmd->add_option("--j", tr.j, "Projection level (engine mode)")->capture_default_str()->check(CLI::Range(-30, 30));
  tcmd->add_option("--omega-min", tr.omega_min)->capture_default_str();
  tcmd->add_option("--omega-max", tr.omega_max)->capture_default_str();
  tcmd->add_option("--omega-step", tr.omega_step)->capture_default_str()->check(steps);
  tcmd->add_option("--mode", tr.mode, "engine (projection) or oracle (quadrature)")
      ->capture_default_str()
      ->check(CLI::IsMember({"engine", "oracle"}));
  tcmd->add_option("--reach", tr.reach, "Projection radius in t; 0 picks one from the decay of f")
      ->capture_default_str();
  tcmd->add_option("--out", tr.out, "Output path (stdout when omitted)");

  EigenArgs eg;
  auto* ecmd = app.add_subcommand("eigen", "Even eigenfunction samples (CSV x,value)");
  ecmd->add_option("--n", eg.n, "Order n")->required()->check(order);
  ecmd->add_option("--m", eg.m, "Derivative order m")->required()->check(CLI::NonNegativeNumber);
  ecmd->add_option("--x-min", eg.x_min)->capture_default_str();
  ecmd->add_option("--x-max", eg.x_max)->capture_default_str();
  ecmd->add_option("--step", eg.step)->capture_default_str()->check(steps);
  ecmd->add_option("--out", eg.out, "Output path (stdout when omitted)");

  StftArgs st;
  auto* scmd = app.add_subcommand("stft", "Short-time transform (CSV omega,t,re,im or JSON)");
  scmd->add_option("--n", st.n, "Order n")->required()->check(order);
  scmd->add_option("--window", st.window, "Window function spec")->required();
  scmd->add_option("--signal", st.signal, "Signal function spec")->required();
  scmd->add_option("--omega-min", st.omega_min)->capture_default_str();
  scmd->add_option("--omega-max", st.omega_max)->capture_default_str();
  scmd->add_option("--omega-step", st.omega_step)->capture_default_str()->check(steps);
  scmd->add_option("--t-min", st.t_min)->capture_default_str();
  scmd->add_option("--t-max", st.t_max)->capture_default_str();
  scmd->add_option("--t-step", st.t_step)->capture_default_str()->check(steps);
  scmd->add_option("--level", st.level, "Projection level")->capture_default_str()->check(CLI::Range(-30, 30));
  scmd->add_option("--mode", st.mode)->capture_default_str()->check(CLI::IsMember({"engine", "quadrature"}));
  scmd->add_option("--format", st.format)->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  scmd->add_option("--threads", st.threads, "Worker threads (0 = all cores)")->capture_default_str();
  scmd->add_option("--out", st.out, "Output path (stdout when omitted)");

  std::string suite_name;
  auto* vcmd = app.add_subcommand("verify", "Run a named check suite; exit 0 iff all pass");
  vcmd->add_option("suite,--suite", suite_name, "kernel, hilbert, subspace, transform, quadrature, stft or criteria")
      ->required();

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const std::invalid_argument& e) {
    err << "phin: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*kcmd) {
      emit(kt.out, kernel_table(kt), out);
    } else if (*tcmd) {
      emit(tr.out, transform(tr), out);
    } else if (*ecmd) {
      emit(eg.out, eigen(eg), out);
    } else if (*scmd) {
      const Spectrogram s = stft(st);
      emit(st.out, st.format == "json" ? to_json(s) : to_csv(s), out);
      const std::string summary =
          "energy=" + format_double(stft_energy(s)) + " window_norm_sq=" + format_double(s.window_norm_sq()) + '\n';
      (st.out.empty() || st.out == "-" ? err : out) << summary;
    } else if (*vcmd) {
      return verify_suite(suite_name, out);
    }
  } catch (const AccuracyError& e) {
    err << "phin: accuracy: " << e.what() << " (estimate re=" << format_double(e.estimate().real())
        << " im=" << format_double(e.estimate().imag()) << ", indicator " << format_double(e.indicator()) << ")\n";
    return kAccuracy;
  } catch (const RangeError& e) {
    err << "phin: range: " << e.what() << '\n';
    return kRange;
  } catch (const SpecError& e) {
    err << "phin: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "phin: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "phin: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "phin: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace phin::cli
