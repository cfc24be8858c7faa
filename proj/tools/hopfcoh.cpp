#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "hopfcoh/acceptance.hpp"
#include "hopfcoh/parallel.hpp"

using namespace hopfcoh;

namespace {

constexpr int kMaxBound = 6;

enum Exit { kOk = 0, kVerification = 1, kGuard = 2, kInput = 3 };

struct JobSpec {
  std::string command;
  std::string algebra = "kZ2";
  std::optional<std::uint64_t> field;
  std::string m = "regular", n = "regular";
  std::string engine = "a4";
  int bound = 2;
  std::uint64_t seed = kDefaultSeed;
  std::optional<Index> memory_guard;
  unsigned jobs = 0;
  bool json = false, timings = true;
  std::string output;
  int samples = 20;
};

Json job_json(const JobSpec& s) {
  Json j;
  j["command"] = s.command;
  j["algebra"] = s.algebra;
  j["field"] = s.field ? Json(*s.field) : Json(nullptr);
  j["M"] = s.m;
  j["N"] = s.n;
  j["engine"] = s.engine;
  j["bound"] = s.bound;
  j["seed"] = s.seed;
  j["memory_guard"] = memory_guard();
  j["samples"] = s.samples;
  return j;
}

std::optional<PrimeField> field_of(const JobSpec& s) {
  if (!s.field) return std::nullopt;
  if (!is_prime(*s.field) || *s.field > 0xffffffffu) throw ParseError("--field: " + std::to_string(*s.field) + " is not a supported prime");
  return PrimeField(static_cast<Elem>(*s.field));
}

struct Outcome {
  Json body;
  std::string text;
  int code = kOk;
};

Json violations_json(const std::vector<std::string>& v) { return Json(v); }

std::string violations_text(const std::vector<std::string>& v) {
  if (v.empty()) return "ok\n";
  std::string out = std::to_string(v.size()) + " violation(s)\n";
  for (const auto& s : v) out += "  " + s + "\n";
  return out;
}

Outcome verify_hopf_cmd(const JobSpec& s) {
  auto h = resolve_algebra(s.algebra, field_of(s));
  auto v = verify_hopf(*h);
  Outcome o;
  o.body["dim"] = h->dim();
  o.body["field"] = h->field().p();
  o.body["violations"] = violations_json(v);
  o.text = "algebra " + s.algebra + " (dim " + std::to_string(h->dim()) + ", F" + std::to_string(h->field().p()) +
           "): " + violations_text(v);
  o.code = v.empty() ? kOk : kVerification;
  return o;
}

Outcome verify_bimodule_cmd(const JobSpec& s) {
  auto h = resolve_algebra(s.algebra, field_of(s));
  HopfBimodule m = select_bimodule(s.m, h);
  auto v = verify_hopf_bimodule(m);
  Outcome o;
  o.body["dim"] = m.dim;
  o.body["violations"] = violations_json(v);
  o.text = "bimodule " + s.m + " (dim " + std::to_string(m.dim) + "): " + violations_text(v);
  o.code = v.empty() ? kOk : kVerification;
  return o;
}

Outcome build_x_cmd(const JobSpec& s) {
  auto h = resolve_algebra(s.algebra, field_of(s));
  HopfBimodule m = select_bimodule(s.m, h);
  XAlgebra x(h);
  const bool exhaustive = x.dim() <= 16;
  std::vector<std::string> v;
  for (auto& e : verify_x_associativity(x, exhaustive ? -1 : 1000, s.seed)) v.push_back("X: " + e);
  XModule xm = bimodule_to_xmodule(m, x);
  for (auto& e : verify_xmodule(x, xm, s.seed)) v.push_back("module: " + e);
  HopfBimodule back = xmodule_to_bimodule(xm, x);
  if (back.act_left != m.act_left || back.act_right != m.act_right || back.coact_left != m.coact_left ||
      back.coact_right != m.coact_right)
    v.push_back("round trip: reconstructed structure differs");
  Outcome o;
  o.body["x_dim"] = x.dim();
  o.body["associativity"] = exhaustive ? "exhaustive" : "1000 sampled triples";
  o.body["module_dim"] = xm.dim;
  o.body["violations"] = violations_json(v);
  o.text = "X has dimension " + std::to_string(x.dim()) + "; " + (exhaustive ? "exhaustive" : "sampled") +
           " associativity, round trip of " + s.m + ": " + violations_text(v);
  o.code = v.empty() ? kOk : kVerification;
  return o;
}

std::string dims_table(const CohomologyReport& r, bool timings) {
  std::ostringstream out;
  out << "engine " << engine_name(r.engine) << "\n\n";
  out << "degree  dim H\n";
  for (std::size_t k = 0; k < r.dims.size(); ++k) out << std::setw(6) << k << "  " << r.dims[k] << "\n";
  out << "\ncell    p  q       dim";
  if (timings && !r.cell_seconds.empty()) out << "   seconds";
  out << "\n";
  for (std::size_t i = 0; i < r.cell_dims.size(); ++i) {
    const auto& c = r.cell_dims[i];
    out << std::setw(8) << c[0] << std::setw(3) << c[1] << std::setw(10) << c[2];
    if (timings && i < r.cell_seconds.size()) out << std::setw(10) << std::fixed << std::setprecision(3) << r.cell_seconds[i];
    out << "\n";
  }
  out << "\n" << violations_text(r.violations);
  return out.str();
}

Outcome cohomology_cmd(const JobSpec& s) {
  auto e = parse_engine(s.engine);
  if (!e) throw ParseError("--engine: unknown engine '" + s.engine + "'");
  auto h = resolve_algebra(s.algebra, field_of(s));
  HopfBimodule m = select_bimodule(s.m, h), n = select_bimodule(s.n, h);
  CohomologyReport r = compute_cohomology(*e, m, n, s.bound);
  Outcome o;
  o.body = report_to_json(r, s.timings);
  o.text = dims_table(r, s.timings);
  o.code = r.violations.empty() ? kOk : kVerification;
  return o;
}

Outcome cup_demo_cmd(const JobSpec& s) {
  auto h = resolve_algebra(s.algebra, field_of(s));
  HopfBimodule m = select_bimodule(s.m, h);
  A4CochainSpace c1(m, m, 1), c2(m, m, 2);
  std::vector<std::string> v;
  Json products = Json::array();
  std::string text;
  auto basis = c1.cohomology_basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      A4Cochain p = cup(basis[i], basis[j]);
      const bool cocycle = is_cocycle(p);
      const bool zero = cocycle && c2.is_coboundary(p);
      if (!cocycle) v.push_back("product " + std::to_string(i) + "," + std::to_string(j) + " is not a cocycle");
      products.push_back({{"f", i}, {"g", j}, {"cocycle", cocycle}, {"class_zero", zero}});
      text += "  [" + std::to_string(i) + "] ⌣ [" + std::to_string(j) + "]: " +
              (cocycle ? (zero ? "zero class" : "nonzero class") : "not a cocycle") + "\n";
    }
  std::mt19937_64 rng(s.seed);
  int derivation = 0;
  for (int k = 0; k < s.samples; ++k) {
    A4Cochain f = random_cochain(m, m, 1, rng), g = random_cochain(m, m, 1, rng);
    if (cup_is_derivation_check(f, g))
      ++derivation;
    else
      v.push_back("derivation law fails on sample " + std::to_string(k));
  }
  Outcome o;
  o.body["h1_dim"] = basis.size();
  o.body["products"] = products;
  o.body["derivation"] = {{"samples", s.samples}, {"passed", derivation}};
  o.body["violations"] = violations_json(v);
  o.text = "dim H^1(" + s.m + ", " + s.m + ") = " + std::to_string(basis.size()) + "\n" + text + "derivation law: " +
           std::to_string(derivation) + "/" + std::to_string(s.samples) + " random pairs\n" + violations_text(v);
  o.code = v.empty() ? kOk : kVerification;
  return o;
}

Outcome yoneda_cmd(const JobSpec& s) {
  auto h = resolve_algebra(s.algebra, field_of(s));
  HopfBimodule m = select_bimodule(s.m, h), n = select_bimodule(s.n, h);
  A4CochainSpace c1(m, n, 1), c0(n, n, 0);
  std::vector<std::string> v;
  int pairs = 0;
  for (const auto& f : c1.cocycle_basis())
    for (const auto& g : c0.cocycle_basis()) {
      if (!yoneda_degree10_check(f, g)) v.push_back("pair " + std::to_string(pairs) + " disagrees");
      ++pairs;
    }
  Outcome o;
  o.body["pairs"] = pairs;
  o.body["violations"] = violations_json(v);
  o.text = std::to_string(pairs) + " basis pairs: " + violations_text(v);
  o.code = v.empty() ? kOk : kVerification;
  return o;
}

Outcome acceptance_cmd(const JobSpec& s) {
  auto results = run_acceptance(s.seed);
  Outcome o;
  o.body = acceptance_to_json(results, s.timings);
  o.text = format_acceptance(results, s.timings);
  for (const auto& r : results)
    if (!r.passed) o.code = kVerification;
  return o;
}

Outcome dispatch(const JobSpec& s) {
  if (s.command == "verify-hopf") return verify_hopf_cmd(s);
  if (s.command == "verify-bimodule") return verify_bimodule_cmd(s);
  if (s.command == "build-x") return build_x_cmd(s);
  if (s.command == "cohomology") return cohomology_cmd(s);
  if (s.command == "cup-demo") return cup_demo_cmd(s);
  if (s.command == "yoneda-check") return yoneda_cmd(s);
  return acceptance_cmd(s);
}

void emit(const JobSpec& s, const std::string& content) {
  if (s.output.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(s.output, std::ios::binary);
  if (!f) throw ParseError("cannot write " + s.output);
  f << content;
}

int run(const JobSpec& s) {
  if (s.bound < 0 || s.bound > kMaxBound)
    throw ParseError("--bound must lie in 0.." + std::to_string(kMaxBound) + ", got " + std::to_string(s.bound));
  if (s.memory_guard) set_memory_guard(*s.memory_guard);
  set_jobs(s.jobs ? s.jobs : std::max(1u, std::thread::hardware_concurrency()));
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = dispatch(s);
  } catch (const ResourceGuardError& e) {
    o.code = kGuard;
    o.body["error"] = std::string("memory guard: ") + e.what();
    o.text = std::string("stopped by the memory guard: ") + e.what() + "\n";
    std::cerr << "hopfcoh: " << o.body["error"].get<std::string>() << '\n';
  } catch (const VerificationError& e) {
    o.code = kVerification;
    o.body["violations"] = Json::array({e.what()});
    o.text = violations_text({e.what()});
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s.json) {
    Json report;
    report["version"] = library_version();
    report["job"] = job_json(s);
    report["exit_code"] = o.code;
    report["result"] = o.body;
    if (s.timings) report["seconds"] = seconds;
    emit(s, report.dump(2) + "\n");
  } else {
    std::string head = "hopfcoh " + library_version() + " " + s.command + " --algebra " + s.algebra +
                       (s.field ? " --field " + std::to_string(*s.field) : "") + " --seed " + std::to_string(s.seed) + "\n";
    emit(s, head + o.text + (s.timings ? "elapsed " + std::to_string(seconds) + " s\n" : ""));
  }
  return o.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of Hopf bimodules over finite fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", library_version());
  JobSpec spec;
  const std::pair<const char*, const char*> commands[] = {
      {"verify-hopf", "check the Hopf algebra axioms"},
      {"verify-bimodule", "check the Hopf bimodule axioms of M"},
      {"build-x", "build X, check associativity and the round trip of M"},
      {"cohomology", "cohomology dimensions of (M, N) with one engine"},
      {"cup-demo", "cup products of degree-1 classes of (M, M) and the derivation law"},
      {"yoneda-check", "pushout against cup product for degree (1, 0) basis pairs"},
      {"acceptance", "run the acceptance suite"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--algebra", spec.algebra, "built-in name or structure-constants file")->capture_default_str();
    sub->add_option("--field", spec.field, "prime field override");
    sub->add_option("--M", spec.m, "bimodule selector for M")->capture_default_str();
    sub->add_option("--N", spec.n, "bimodule selector for N")->capture_default_str();
    sub->add_option("--engine", spec.engine, "gs, gs-reduced, a4, a4-unreduced, hb, hb-truncated, ext-x")
        ->capture_default_str();
    sub->add_option("--bound", spec.bound, "top degree (at most 6)")->capture_default_str();
    sub->add_option("--seed", spec.seed, "RNG seed")->capture_default_str();
    sub->add_option("--samples", spec.samples, "random samples for cup-demo")->capture_default_str();
    sub->add_option("--memory-guard", spec.memory_guard, "largest ambient dimension allowed");
    sub->add_option("--jobs", spec.jobs, "worker threads (default: all cores)");
    sub->add_flag("--json", spec.json, "JSON report");
    sub->add_option("-o,--output", spec.output, "write the report here");
    sub->add_flag("!--no-timings", spec.timings, "omit wall-clock times");
    sub->callback([&spec, name] { spec.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  try {
    return run(spec);
  } catch (const ResourceGuardError& e) {
    std::cerr << "hopfcoh: memory guard: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "hopfcoh: " << e.what() << '\n';
    return kInput;
  }
}
