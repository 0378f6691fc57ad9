// spectral-cone: command-line front end for the spectral inequality toolkit.
//
// Exit codes: 0 success, 1 violations found, 2 usage error, 3 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spectral/horn.hpp"
#include "spectral/json_io.hpp"
#include "spectral/majorization.hpp"
#include "spectral/numeric.hpp"
#include "spectral/pullback.hpp"
#include "spectral/spectral_inequalities.hpp"

using namespace spectral;

namespace {

enum Exit { ok = 0, violated = 1, usage = 2, internal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

bool looks_inline(const std::string& arg) {
  return !arg.empty() && arg.find_first_not_of("0123456789+-.eE, ") == std::string::npos;
}

/// Inline comma list or JSON file. Unsorted input is sorted with a warning.
Spectrum read_spectrum(const std::string& arg, const std::string& what) {
  std::vector<double> values;
  if (looks_inline(arg)) {
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(item, &used));
        if (item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageError(what + ": cannot parse '" + item + "'");
      }
    }
  } else {
    try {
      values = values_from_json(read_json_file(arg));
    } catch (const Json::exception& e) {
      throw UsageError(what + ": " + e.what());
    }
  }
  if (!std::is_sorted(values.begin(), values.end(), std::greater<>())) {
    std::cerr << "warning: " << what << " was not sorted non-increasing; sorting it\n";
  }
  try {
    return Spectrum::from_unsorted(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw UsageError(what + ": " + e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int threads_from_env() {
  const char* env = std::getenv("SPECTRAL_CONE_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    const int n = std::stoi(env);
    if (n < 1) throw std::invalid_argument(env);
    return n;
  } catch (const std::exception&) {
    throw UsageError("SPECTRAL_CONE_THREADS must be a positive integer");
  }
}

std::string format_text(const InequalitySystem& S) {
  std::string out;
  for (const auto& q : S.inequalities()) out += to_string(q) + "\n";
  out += "trace\n";
  return out;
}

struct Options {
  int d_A = 0;
  int d_B = 0;
  int k = 0;
  int n = 0;
  int trials = 100;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  bool raw = false;
  bool pruned = false;
  bool density = false;
  bool redundancy = false;
  std::string format = "json";
  std::string pi;
  std::string spectrum;
  std::string reduced;
  std::string target;
  std::string system;
  std::string check_file;
};

int cmd_inequalities(const Options& o) {
  if (o.raw) {
    Json out;
    out["d_A"] = o.d_A;
    out["d_B"] = o.d_B;
    out["trace"] = true;
    Json list = Json::array();
    for (int k = 1; k < o.d_A; ++k) {
      Candidate c{basic_inequality(o.d_A, o.d_B, k), Provenance{Origin::basic, k, {}, {}, 1}};
      list.push_back(to_json(c));
    }
    if (o.d_A >= 2) {
      for (const auto& c : generate_candidates(o.d_A, o.d_B)) list.push_back(to_json(c));
    }
    out["inequalities"] = std::move(list);
    if (o.format == "text") {
      for (const auto& item : out["inequalities"]) {
        std::cout << item["text"].get<std::string>() << "  # " << item["origin"].get<std::string>() << " k="
                  << item["k"] << " nu=" << item["nu"].dump() << " pi=" << item["pi"].dump() << "\n";
      }
      std::cout << "trace\n";
    } else {
      emit(out);
    }
    return ok;
  }
  const InequalitySystem S = pruned_system(o.d_A, o.d_B);
  if (o.format == "text") {
    std::cout << format_text(S);
  } else {
    emit(to_json(S));
  }
  return ok;
}

int cmd_phi_star(const Options& o) {
  Partition pi;
  try {
    pi = parse_partition(o.pi);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--pi: ") + e.what());
  }
  const PhiContext pc(o.d_A, o.d_B, o.k);
  const SymExpansion full = phi_star_expansion(pi, o.d_B);
  const CohomologyClass cls = phi_star_schur(pi, pc);
  if (o.format == "text") {
    std::cout << "expansion: " << to_string(full) << "\n" << "class: " << to_string(cls) << "\n";
    return ok;
  }
  Json out;
  out["pi"] = pi.parts();
  out["d_A"] = o.d_A;
  out["d_B"] = o.d_B;
  out["k"] = o.k;
  out["expansion"] = to_json(full);
  out["class"] = to_json(cls);
  emit(out);
  return ok;
}

int cmd_horn(const Options& o) {
  if (!o.check_file.empty()) {
    const Json in = read_json_file(o.check_file);
    Spectrum a, b, c;
    try {
      a = Spectrum::from_unsorted(values_from_json(in.at("alpha")));
      b = Spectrum::from_unsorted(values_from_json(in.at("beta")));
      c = Spectrum::from_unsorted(values_from_json(in.at("gamma")));
    } catch (const Json::exception& e) {
      throw UsageError(o.check_file + ": " + e.what());
    }
    if (a.size() != o.n || b.size() != o.n || c.size() != o.n) {
      throw UsageError("spectra in " + o.check_file + " must have length --n");
    }
    const HornReport r = check_horn(a, b, c, o.tol);
    Json out;
    out["n"] = o.n;
    out["ok"] = r.ok();
    out["trace_gap"] = r.trace_gap;
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back(Json{{"constraint", x.constraint}, {"slack", x.slack}});
    out["violations"] = std::move(v);
    emit(out);
    return r.ok() ? ok : violated;
  }
  const auto list = horn_inequalities(o.n);
  if (o.format == "text") {
    for (const auto& t : list) std::cout << to_string(t) << "\n";
    std::cout << "trace\n";
    return ok;
  }
  Json out;
  out["n"] = o.n;
  out["count"] = list.size();
  Json triples = Json::array();
  for (const auto& t : list) triples.push_back(to_json(t));
  out["triples"] = std::move(triples);
  if (o.redundancy) {
    Json red = Json::array();
    for (auto i : redundant_horn_inequalities(o.n)) red.push_back(to_json(list[i]));
    out["redundant"] = std::move(red);
  }
  emit(out);
  return ok;
}

InequalitySystem system_for(const Options& o) {
  if (o.system.empty()) return pruned_system(o.d_A, o.d_B);
  try {
    InequalitySystem S = system_from_json(read_json_file(o.system));
    if (S.d_A() != o.d_A || S.d_B() != o.d_B) throw UsageError("--system dimensions differ from --da/--db");
    return S;
  } catch (const Json::exception& e) {
    throw UsageError(o.system + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(o.system + ": " + e.what());
  }
}

int cmd_check(const Options& o) {
  const Spectrum lambda = read_spectrum(o.spectrum, "--spectrum");
  const Spectrum lambda_tilde = read_spectrum(o.reduced, "--reduced");
  if (lambda.size() != o.d_A * o.d_B || lambda_tilde.size() != o.d_A) {
    throw UsageError("--spectrum needs d_A*d_B entries and --reduced needs d_A entries");
  }
  const InequalitySystem S = system_for(o);
  const CheckReport r = check_spectra(lambda, lambda_tilde, S, o.tol);
  Json out;
  out["d_A"] = o.d_A;
  out["d_B"] = o.d_B;
  out["ok"] = r.ok();
  out["trace_gap"] = r.trace_gap;
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(Json{{"constraint", x.constraint}, {"slack", x.slack}});
  out["violations"] = std::move(v);
  emit(out);
  return r.ok() ? ok : violated;
}

int cmd_verify(const Options& o) {
  const InequalitySystem S = system_for(o);
  TrialOptions opts;
  opts.kind = o.density ? SpectrumKind::density : SpectrumKind::gaussian;
  opts.tol = o.tol;
  opts.threads = threads_from_env();
  const auto records = necessity_trials(o.d_A, o.d_B, o.trials, o.seed, S, opts);
  std::vector<double> min_slack(static_cast<std::size_t>(S.size()), std::numeric_limits<double>::infinity());
  std::size_t failing = 0;
  for (const auto& r : records) {
    std::cout << to_json(r).dump() << "\n";
    for (std::size_t i = 0; i < r.slacks.size(); ++i) min_slack[i] = std::min(min_slack[i], r.slacks[i]);
    if (!r.violations.empty()) ++failing;
  }
  Json summary;
  summary["trials"] = o.trials;
  summary["seed"] = o.seed;
  summary["failing_trials"] = failing;
  Json per = Json::array();
  for (int i = 0; i < S.size(); ++i) {
    per.push_back(Json{{"inequality", to_string(S.inequalities()[static_cast<std::size_t>(i)])},
                       {"min_slack", records.empty() ? 0.0 : min_slack[static_cast<std::size_t>(i)]}});
  }
  summary["min_slack"] = std::move(per);
  std::cout << Json{{"summary", summary}}.dump() << "\n";
  return failing == 0 ? ok : violated;
}

int cmd_dim2(const Options& o) {
  const Spectrum lambda = read_spectrum(o.spectrum, "--spectrum");
  const Spectrum lambda_tilde = read_spectrum(o.target, "--target");
  if (lambda.size() != 2 * o.d_B || lambda_tilde.size() != 2) {
    throw UsageError("--spectrum needs 2*d_B entries and --target needs 2 entries");
  }
  const Dim2Result r = dim2_realize(lambda, lambda_tilde, o.tol);
  Json out;
  out["feasible"] = r.feasible;
  if (!r.feasible) {
    out["reason"] = r.reason;
    emit(out);
    return violated;
  }
  out["t"] = r.t;
  out["alpha"] = {r.alpha1, r.alpha2};
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < r.rho.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < r.rho.cols(); ++j) row.push_back({r.rho(i, j).real(), r.rho(i, j).imag()});
    rows.push_back(std::move(row));
  }
  out["rho"] = std::move(rows);
  out["spectrum"] = hermitian_eigenvalues(r.rho).values();
  out["reduced_spectrum"] = hermitian_eigenvalues(partial_trace(r.rho, 2, o.d_B)).values();
  emit(out);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral inequalities for partial traces, Horn's problem and LOCC majorization."};
  app.require_subcommand(1);
  Options o;

  auto dims = [&](CLI::App* sub) {
    sub->add_option("--da", o.d_A, "Dimension of A")->required()->check(CLI::PositiveNumber);
    sub->add_option("--db", o.d_B, "Dimension of B")->required()->check(CLI::PositiveNumber);
  };
  auto format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* ineq = app.add_subcommand("inequalities", "Generate the inequality system");
  dims(ineq);
  format(ineq);
  auto* raw = ineq->add_flag("--raw", o.raw, "Unpruned candidates with (nu, pi) provenance");
  auto* pruned = ineq->add_flag("--pruned", o.pruned, "Irredundant system (default)");
  raw->excludes(pruned);

  auto* phi = app.add_subcommand("phi-star", "Pull back a Schubert class");
  dims(phi);
  format(phi);
  phi->add_option("--k", o.k, "Rank of the target Grassmannian")->required()->check(CLI::PositiveNumber);
  phi->add_option("--pi", o.pi, "Source partition, e.g. \"[2,1]\"")->required();

  auto* horn = app.add_subcommand("horn", "Horn inequalities for X + Y");
  horn->add_option("--n", o.n, "Matrix size")->required()->check(CLI::PositiveNumber);
  horn->add_option("--check", o.check_file, "JSON file with alpha, beta, gamma spectra");
  horn->add_option("--tol", o.tol, "Violation tolerance");
  horn->add_flag("--redundancy", o.redundancy, "Also list members implied by the others (exact LP)");
  format(horn);

  auto* check = app.add_subcommand("check", "Check a pair of spectra");
  dims(check);
  check->add_option("--spectrum", o.spectrum, "Joint spectrum: comma list or JSON file")->required();
  check->add_option("--reduced", o.reduced, "Reduced spectrum: comma list or JSON file")->required();
  check->add_option("--system", o.system, "System JSON (default: pruned system)");
  check->add_option("--tol", o.tol, "Violation tolerance");

  auto* verify = app.add_subcommand("verify", "Monte Carlo necessity trials");
  dims(verify);
  verify->add_option("--trials", o.trials, "Number of trials")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", o.seed, "64-bit seed");
  verify->add_option("--tol", o.tol, "Violation tolerance");
  verify->add_option("--system", o.system, "System JSON (default: pruned system)");
  verify->add_flag("--density", o.density, "Sample positive unit-trace spectra");

  auto* dim2 = app.add_subcommand("dim2", "Realize a d_A = 2 instance");
  dim2->add_option("--db", o.d_B, "Dimension of B")->required()->check(CLI::PositiveNumber);
  dim2->add_option("--spectrum", o.spectrum, "Joint spectrum (2*d_B entries)")->required();
  dim2->add_option("--target", o.target, "Reduced spectrum (2 entries)")->required();
  dim2->add_option("--tol", o.tol, "Feasibility tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return usage;
  }

  try {
    if (*ineq) return cmd_inequalities(o);
    if (*phi) return cmd_phi_star(o);
    if (*horn) return cmd_horn(o);
    if (*check) return cmd_check(o);
    if (*verify) return cmd_verify(o);
    if (*dim2) return cmd_dim2(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
  return usage;
}
