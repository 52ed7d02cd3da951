#include "mbraid/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <functional>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "mbraid/serialize.hpp"

namespace mbraid::cli {

namespace {

/// Bad input detected after flag parsing (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kFamilies = {"ivanov",         "ivanov-circular", "extraspecial-bell",
                                            "temperley-lieb", "jones",           "quaternion-triple",
                                            "fibonacci"};

const std::vector<std::string> kMatrices = {
    "r-gate", "b-ii", "bell-m", "bell-a", "bell-b", "swap", "cnot",
    "r-breve", "two-site-hamiltonian", "chain-hamiltonian", "parity"};

struct Sink {
  std::ostream& out;
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + path + "'");
    f << text;
    out << "wrote " << path << "\n";
  }
};

Json header(const std::string& command) {
  return {{"tool_version", kToolVersion}, {"command", command}};
}

int default_n(const std::string& family) {
  if (family == "extraspecial-bell") return 2;
  if (family == "quaternion-triple" || family == "fibonacci") return 3;
  return 4;
}

UnitaryRep build_family(const std::string& family, int n, double jones_phase) {
  if (family == "ivanov") return ivanov(n, false);
  if (family == "ivanov-circular") return ivanov(n, true);
  if (family == "extraspecial-bell") return extraspecial_rep(bell_basis_string(n));
  if (family == "jones") return jones_from_tl(temperley_lieb(n), std::polar(1.0, jones_phase));
  if (family == "quaternion-triple") return quaternion_triple();
  if (family == "fibonacci") return fibonacci();
  throw UsageError("family '" + family + "' has no unitary representation");
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> parse_grid(const std::string& spec) {
  const auto fail = [&] {
    return UsageError("malformed grid '" + spec + "' (expected start:stop:steps or a number)");
  };
  const auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != s.size() || !std::isfinite(v)) throw fail();
    return v;
  };
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (!spec.empty() && spec.back() == ':') throw fail();
  if (parts.size() == 1) return {number(parts[0])};
  if (parts.size() != 3) throw fail();
  const double start = number(parts[0]);
  const double stop = number(parts[1]);
  std::size_t used = 0;
  long steps = 0;
  try {
    steps = std::stol(parts[2], &used);
  } catch (const std::exception&) {
    throw fail();
  }
  if (used != parts[2].size() || steps < 1) throw fail();
  if (steps == 1) return {start};
  std::vector<double> out(steps);
  for (long i = 0; i < steps; ++i) out[i] = start + (stop - start) * static_cast<double>(i) / (steps - 1);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read '" + path + "'");
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

CMatrix read_matrix_file(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    return matrix_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
}

CMatrix named_matrix(const std::string& name, double theta, int k, int n, int N, double t1,
                     double t2, const std::string& boundary) {
  if (name == "r-gate") {
    CMatrix r(4, 4);
    r << 1, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
    return r;
  }
  if (name == "b-ii") return bell::B_II();
  if (name == "bell-m") return bell::M();
  if (name == "bell-a") return bell::A();
  if (name == "bell-b") return bell::B();
  if (name == "swap") {
    CMatrix s(4, 4);
    s << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
    return s;
  }
  if (name == "cnot") {
    CMatrix c(4, 4);
    c << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
    return c;
  }
  if (name == "r-breve") return r_breve(theta, k, n);
  if (name == "two-site-hamiltonian") return two_site_hamiltonian(theta, k, n);
  if (name == "chain-hamiltonian") return chain_hamiltonian({N, t1, t2, parse_boundary(boundary)});
  if (name == "parity") return parity_operator(N);
  throw UsageError("unknown matrix '" + name + "'");
}

// ---------------------------------------------------------------------------

struct BuildOpts {
  std::string family;
  std::optional<int> n;
  double tol = kMatrixTolerance;
  double jones_phase = 3.0 * std::numbers::pi / 8.0;
  std::string out;
};

int cmd_build_rep(const BuildOpts& o, std::ostream& out) {
  const int n = o.n.value_or(default_n(o.family));
  Json j = header("build-rep");
  j["family"] = o.family;
  j["params"] = {{"n", n}};
  j["tolerance"] = o.tol;
  if (o.family == "temperley-lieb") {
    const auto tl = temperley_lieb(n);
    const auto check = check_tl_relations(tl.generators, tl.loop_value, o.tol);
    Json gens = Json::array();
    for (const auto& g : tl.generators) gens.push_back(matrix_to_json(g));
    Json forms = Json::array();
    for (const auto& f : tl.clifford_forms) forms.push_back(f.to_string());
    j["strands"] = n;
    j["dim"] = tl.generators.front().rows();
    j["loop_value"] = tl.loop_value;
    j["generators"] = std::move(gens);
    j["clifford_forms"] = std::move(forms);
    j["tl_residual"] = check.max_residual;
  } else {
    if (o.family == "jones") j["params"]["jones_phase"] = o.jones_phase;
    const auto rep = build_family(o.family, n, o.jones_phase);
    const auto check = check_braid_relations(rep, o.tol);
    j.update(to_json(rep));
    j["braid_residual"] = check.max_residual;
    j["braid_pass"] = check.pass;
  }
  Sink{out, o.out}.write(dump(j));
  return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyOpts {
  std::string family;
  std::string matrix_path;
  std::optional<int> n;
  std::string checks = "braid";
  double tol = kMatrixTolerance;
  double threshold = 1e-6;
  int cap = 16;
  std::string out;
};

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  if (o.family.empty() == o.matrix_path.empty()) {
    throw UsageError("verify needs exactly one of --family or --matrix");
  }
  const auto checks = split_csv(o.checks);
  if (checks.empty()) throw UsageError("--checks is empty");

  Json j = header("verify");
  j["tolerance"] = o.tol;
  Json reports = Json::array();
  bool all_pass = true;
  const auto add = [&](const VerificationReport& r) {
    all_pass = all_pass && r.pass;
    reports.push_back(to_json(r));
  };

  if (!o.matrix_path.empty()) {
    const CMatrix m = read_matrix_file(o.matrix_path);
    j["source"] = {{"matrix", o.matrix_path}};
    j["family"] = "matrix";
    j["params"] = {{"rows", m.rows()}, {"cols", m.cols()}};
    for (const auto& c : checks) {
      if (c != "ybe" && c != "entangling" && c != "unitary" && c != "order") {
        throw UsageError("check '" + c + "' does not apply to a matrix file");
      }
    }
    for (const auto& c : checks) {
      if (c == "ybe") {
        try {
          add(check_ybe(m, o.tol));
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      } else if (c == "entangling") {
        if (m.rows() != 4 || m.cols() != 4) throw UsageError("entangling check needs a 4x4 matrix");
        add(check_entangling(m, o.threshold));
      } else {
        if (m.rows() != m.cols()) throw UsageError("matrix must be square");
        UnitaryRep single{"matrix", 2, static_cast<int>(m.rows()), {m}, std::nullopt, false};
        add(c == "unitary" ? check_unitarity(single, o.tol)
                           : check_generator_order(single, o.cap, o.tol));
      }
    }
  } else {
    const int n = o.n.value_or(default_n(o.family));
    j["source"] = {{"family", o.family}};
    j["family"] = o.family;
    j["params"] = {{"n", n}};
    for (const auto& c : checks) {
      static const std::vector<std::string> known = {
          "braid", "order", "unitary", "tl", "extraspecial", "majorana-string", "conjugation"};
      if (std::find(known.begin(), known.end(), c) == known.end()) {
        throw UsageError("unknown check '" + c + "' for a family (ybe and entangling need --matrix)");
      }
    }
    const bool tl_family = o.family == "temperley-lieb";
    for (const auto& c : checks) {
      if (c == "tl") {
        if (!tl_family) throw UsageError("tl check applies to --family temperley-lieb");
        const auto tl = temperley_lieb(n);
        add(check_tl_relations(tl.generators, tl.loop_value, o.tol));
      } else if (c == "majorana-string") {
        if (o.family != "extraspecial-bell") {
          throw UsageError("majorana-string check applies to --family extraspecial-bell");
        }
        add(check_majorana_string(bell_basis_string(n), o.tol));
      } else if (c == "extraspecial") {
        std::vector<CMatrix> M;
        if (o.family == "extraspecial-bell") {
          const auto ms = bell_basis_string(n);
          for (int i = 0; i < ms.size(); ++i) M.push_back(ms.A[i] * ms.B[i]);
        } else if (o.family == "ivanov") {
          const auto basis = jordan_wigner(n);
          for (int i = 0; i + 1 < n; ++i) M.push_back(basis[i + 1] * basis[i]);
        } else {
          throw UsageError("extraspecial check applies to ivanov or extraspecial-bell");
        }
        auto r = check_extraspecial(M, o.tol);
        r.family = o.family;
        add(r);
      } else if (c == "conjugation") {
        if (o.family != "ivanov" && o.family != "ivanov-circular") {
          throw UsageError("conjugation check applies to the ivanov families");
        }
        add(check_conjugation_rep(n));
      } else {
        if (tl_family) throw UsageError("temperley-lieb generators are not a braid representation");
        const auto rep = build_family(o.family, n, 3.0 * std::numbers::pi / 8.0);
        if (c == "braid") add(check_braid_relations(rep, o.tol));
        if (c == "order") add(check_generator_order(rep, o.cap, o.tol));
        if (c == "unitary") add(check_unitarity(rep, o.tol));
      }
    }
  }
  j["checks"] = std::move(reports);
  j["pass"] = all_pass;
  Sink{out, o.out}.write(dump(j));
  return all_pass ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct EvolveOpts {
  std::string schedule = "linear";
  std::string schedule_file;
  double rate = std::numbers::pi / 4;
  double t0 = 0.0;
  double dt = 1e-4;
  int samples = 101;
  int k = 0;
  int n = 4;
  double tol = 1e-6;
  std::string out;
};

int cmd_evolve(const EvolveOpts& o, std::ostream& out) {
  Json j = header("evolve");
  std::optional<ThetaSchedule> schedule;
  if (!o.schedule_file.empty()) {
    const Json s = read_json_file(o.schedule_file);
    try {
      schedule.emplace(s.at("times").get<std::vector<double>>(),
                       s.at("thetas").get<std::vector<double>>());
    } catch (const Json::exception& e) {
      throw UsageError("schedule file needs numeric arrays 'times' and 'thetas': " +
                       std::string(e.what()));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    j["schedule"] = {{"file", o.schedule_file}};
  } else {
    std::function<double(double)> theta;
    const double rate = o.rate;
    if (o.schedule == "linear") {
      theta = [rate](double t) { return rate * t; };
    } else if (o.schedule == "sine") {
      theta = [rate](double t) { return rate * std::sin(t); };
    } else if (o.schedule == "constant") {
      theta = [rate](double) { return rate; };
    } else {
      throw UsageError("schedule must be linear, sine or constant");
    }
    if (!(o.dt > 0.0) || o.samples < 3) throw UsageError("need dt > 0 and at least 3 samples");
    schedule = ThetaSchedule::sample(theta, o.t0, o.dt, o.samples);
    j["schedule"] = {{"kind", o.schedule}, {"rate", o.rate}, {"t0", o.t0}, {"dt", o.dt},
                     {"samples", o.samples}};
  }
  if (schedule->size() < 3) throw UsageError("schedule needs at least 3 samples");
  const double residual = schrodinger_residual(*schedule, o.k, o.n);
  const double herm = hermiticity_residual(two_site_hamiltonian(1.0, o.k, o.n));
  j["params"] = {{"k", o.k}, {"n", o.n}};
  j["tolerance"] = o.tol;
  j["schrodinger_residual"] = residual;
  j["hamiltonian_hermiticity_residual"] = herm;
  j["pass"] = residual <= o.tol;
  Sink{out, o.out}.write(dump(j));
  return residual <= o.tol ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct ScanOpts {
  int N = 4;
  std::string boundary = "periodic";
  std::string t1;
  std::string t2;
  std::string format = "json";
  unsigned threads = 0;
  std::string out;
};

int cmd_scan_gap(const ScanOpts& o, std::ostream& out) {
  const auto t1 = parse_grid(o.t1);
  const auto t2 = parse_grid(o.t2);
  Boundary boundary;
  try {
    boundary = parse_boundary(o.boundary);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<std::pair<double, double>> grid;
  for (double a : t1) {
    for (double b : t2) grid.emplace_back(a, b);
  }
  const auto records = gap_scan(o.N, boundary, grid, o.threads);
  if (o.format == "csv") {
    Sink{out, o.out}.write(gap_records_csv(records));
    return kOk;
  }
  Json j = header("scan-gap");
  j["params"] = {{"N", o.N}, {"boundary", o.boundary}, {"t1", o.t1}, {"t2", o.t2}};
  Json recs = Json::array();
  std::size_t best = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    recs.push_back(to_json(records[i]));
    if (records[i].gap < records[best].gap) best = i;
  }
  j["records"] = std::move(recs);
  j["minimum"] = to_json(records[best]);
  j["minimum"]["closed"] = records[best].closed();
  Sink{out, o.out}.write(dump(j));
  return kOk;
}

// ---------------------------------------------------------------------------

struct ExportOpts {
  std::string matrix;
  double theta = std::numbers::pi / 4;
  int k = 0;
  int n = 4;
  int N = 2;
  double t1 = 1.0;
  double t2 = 1.0;
  std::string boundary = "periodic";
  std::string out;
};

int cmd_export(const ExportOpts& o, std::ostream& out) {
  const CMatrix m = named_matrix(o.matrix, o.theta, o.k, o.n, o.N, o.t1, o.t2, o.boundary);
  Sink{out, o.out}.write(dump(matrix_to_json(m)));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braid-group representations from Majorana operators: build, verify, simulate."};
  app.name(args.empty() ? "mbraid" : args.front());
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  BuildOpts build;
  auto* b = app.add_subcommand("build-rep", "Construct a representation and write it as JSON");
  b->add_option("--family", build.family, "Representation family")
      ->required()
      ->check(CLI::IsMember(kFamilies));
  b->add_option("--n", build.n, "Majorana count (ivanov, temperley-lieb, jones) or pair count "
                                "(extraspecial-bell)");
  b->add_option("--tol", build.tol, "Tolerance for the embedded relation check")
      ->check(CLI::PositiveNumber);
  b->add_option("--jones-phase", build.jones_phase, "arg(A) for the Jones lift, radians");
  b->add_option("--out", build.out, "Output file (default stdout)");

  VerifyOpts verify;
  auto* v = app.add_subcommand("verify", "Run relation checks; exit 0 iff all pass");
  auto* vf = v->add_option("--family", verify.family, "Representation family")
                 ->check(CLI::IsMember(kFamilies));
  auto* vm = v->add_option("--matrix", verify.matrix_path, "Matrix JSON file");
  vf->excludes(vm);
  v->add_option("--n", verify.n, "Size parameter for --family");
  v->add_option("--checks", verify.checks,
                "Comma list: braid, order, unitary, tl, extraspecial, majorana-string, "
                "conjugation (families); ybe, entangling, unitary, order (matrices)");
  v->add_option("--tol", verify.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  v->add_option("--threshold", verify.threshold, "Entangling threshold on |ad - bc|")
      ->check(CLI::PositiveNumber);
  v->add_option("--cap", verify.cap, "Largest power tried by the order check")
      ->check(CLI::Range(1, 1024));
  v->add_option("--out", verify.out, "Report file (default stdout)");

  EvolveOpts evolve;
  auto* e = app.add_subcommand("evolve", "Schroedinger consistency of R_k(theta(t)) = exp(theta c_k+1 c_k)");
  e->add_option("--schedule", evolve.schedule, "linear (rate*t), sine (rate*sin t) or constant (rate)")
      ->check(CLI::IsMember({"linear", "sine", "constant"}));
  e->add_option("--schedule-file", evolve.schedule_file,
                "JSON file {\"times\": [...], \"thetas\": [...]} with uniform times");
  e->add_option("--rate", evolve.rate, "Schedule coefficient");
  e->add_option("--t0", evolve.t0, "First sample time");
  e->add_option("--dt", evolve.dt, "Sample spacing")->check(CLI::PositiveNumber);
  e->add_option("--samples", evolve.samples, "Number of samples")->check(CLI::Range(3, 10000000));
  e->add_option("--k", evolve.k, "Pair index (0-based, couples c_k and c_k+1)");
  e->add_option("--n", evolve.n, "Majorana count");
  e->add_option("--tol", evolve.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  e->add_option("--out", evolve.out, "Report file (default stdout)");

  ScanOpts scan;
  auto* s = app.add_subcommand("scan-gap", "Excitation gap of the 2N-site chain over a coupling grid");
  s->add_option("--N", scan.N, "Pair count (2N Majorana sites)")->required();
  s->add_option("--boundary", scan.boundary, "open or periodic");
  s->add_option("--t1", scan.t1, "theta1_dot grid: start:stop:steps or a number")->required();
  s->add_option("--t2", scan.t2, "theta2_dot grid: start:stop:steps or a number")->required();
  s->add_option("--format", scan.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  s->add_option("--threads", scan.threads, "Worker threads (0 = all cores)");
  s->add_option("--out", scan.out, "Output file (default stdout)");
  s->footer("CSV columns: theta1_dot,theta2_dot,gap,N,boundary (one row per grid point, t1 outer).");

  ExportOpts exp;
  auto* x = app.add_subcommand("export", "Write a named matrix as JSON");
  x->add_option("--matrix", exp.matrix, "Matrix name")->required()->check(CLI::IsMember(kMatrices));
  x->add_option("--theta", exp.theta, "Angle for r-breve / rate for two-site-hamiltonian");
  x->add_option("--k", exp.k, "Pair index (0-based)");
  x->add_option("--n", exp.n, "Majorana count");
  x->add_option("--N", exp.N, "Chain pair count");
  x->add_option("--t1", exp.t1, "theta1_dot for chain-hamiltonian");
  x->add_option("--t2", exp.t2, "theta2_dot for chain-hamiltonian");
  x->add_option("--boundary", exp.boundary, "open or periodic")
      ->check(CLI::IsMember({"open", "periodic"}));
  x->add_option("--out", exp.out, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (b->parsed()) return cmd_build_rep(build, out);
    if (v->parsed()) return cmd_verify(verify, out);
    if (e->parsed()) return cmd_evolve(evolve, out);
    if (s->parsed()) return cmd_scan_gap(scan, out);
    if (x->parsed()) return cmd_export(exp, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace mbraid::cli
