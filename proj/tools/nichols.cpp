#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nichols/nichols.hpp"
#include "nichols/report.hpp"

using namespace nichols;

namespace {

constexpr int exit_decided = 0;
constexpr int exit_undecided = 2;
constexpr int exit_usage = 64;
constexpr int exit_internal = 70;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int k = 0, n = 0;
  std::string rep;
  std::string format = "text";
  std::string subrack = "auto";
  bool no_symmetry = false;
  unsigned threads = 1;
  std::size_t max_class = 0, max_subracks = 0;
  bool timing = true;

  DecideConfig decide() const {
    DecideConfig c;
    c.symmetry = !no_symmetry;
    c.threads = threads;
    c.caps.max_class = max_class;
    c.caps.max_subracks = max_subracks;
    return c;
  }
};

std::size_t env_cap(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return static_cast<std::size_t>(std::stoull(v));
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + " must be a non-negative integer");
  }
}

void check_class(const RunConfig& cfg) {
  if (cfg.k < 2) throw UsageError("--k must be >= 2");
  if (cfg.n < 1) throw UsageError("--n must be >= 1");
  if (cfg.k * cfg.n > 64) throw UsageError("k*n above 64 is outside the supported range");
}

IrrepLabel parse_label(const RunConfig& cfg) {
  check_class(cfg);
  try {
    return parse_rep_spec(cfg.rep, cfg.k, cfg.n);
  } catch (const RepSpecError& e) {
    throw UsageError(e.what());
  }
}

class Timer {
 public:
  explicit Timer(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    if (!on_) return;
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    std::cerr << "time: " << ms << " ms\n";
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point start_;
};

int cmd_classify(const RunConfig& cfg) {
  const IrrepLabel lab = parse_label(cfg);
  Timer t(cfg.timing);
  const Verdict v = decide(lab, cfg.decide());
  if (cfg.format == "json") {
    std::cout << verdict_json(v).dump(2) << "\n";
  } else if (cfg.format == "dot") {
    std::cout << diagram_dot(v.witness ? v.witness->diagram : DynkinDiagram{});
  } else {
    std::cout << verdict_text(v);
  }
  return v.outcome == Outcome::Undecided ? exit_undecided : exit_decided;
}

int cmd_table(const RunConfig& cfg) {
  check_class(cfg);
  if (cfg.format == "dot") throw UsageError("table supports --format text or json");
  Timer t(cfg.timing);
  const auto rows = classify_all(cfg.k, cfg.n, cfg.decide());
  if (cfg.format == "json")
    std::cout << table_json(cfg.k, cfg.n, rows).dump(2) << "\n";
  else
    std::cout << table_text(cfg.k, cfg.n, rows);
  for (const auto& r : rows)
    if (!r.agrees()) {
      std::cerr << "error: " << r.label.spec() << " disagrees with the closed form\n";
      return exit_internal;
    }
  return exit_decided;
}

Subrack select_subrack(const UnmixedClass& cls, const std::string& sel) {
  try {
    if (sel == "triple") return last_pair_triple(cls);
    if (sel == "canonical") return canonical_subrack(cls);
    if (sel == "inversion") return inversion_quadruple(cls);
    if (sel == "basepoint") return make_subrack(cls, {cls.basepoint()}, {0});
    if (sel.rfind("quadruple:", 0) == 0) {
      const auto rest = sel.substr(10);
      const auto comma = rest.find(',');
      if (comma == std::string::npos) throw UsageError("--subrack quadruple:<i>,<j>");
      return quadruple_subrack(cls, std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1)));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--subrack ") + sel + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(std::string("--subrack ") + sel + ": " + e.what());
  }
  throw UsageError("--subrack must be auto, basepoint, triple, canonical, inversion or quadruple:<i>,<j>");
}

int cmd_diagram(const RunConfig& cfg) {
  const IrrepLabel lab = parse_label(cfg);
  if (lab.catalog_gap) throw UsageError("diagram: " + lab.spec() + " is outside the built-in catalog");
  Timer t(cfg.timing);
  const UnmixedClass cls(cfg.k, cfg.n);
  const YDModule yd(cls, build_rep(lab));
  DiagonalSubspace D;
  std::string origin = cfg.subrack;
  if (cfg.subrack == "auto") {
    const Verdict v = decide(lab, cfg.decide());
    if (v.witness) {
      D = v.witness->subspace;
      origin = v.witness->origin;
    } else {
      auto cands = explicit_candidates(cls);
      if (cands.empty()) {
        D = diagonal_subspace(yd, select_subrack(cls, "basepoint"));
        origin = "basepoint";
      } else {
        D = diagonal_subspace(yd, cands.front().subrack);
        origin = cands.front().origin;
      }
    }
  } else {
    D = diagonal_subspace(yd, select_subrack(cls, cfg.subrack));
  }
  const QMatrix Q = D.matrix();
  const DynkinDiagram G = dynkin_diagram(Q);
  if (cfg.format == "json") {
    Json j;
    j["schema"] = diagram_schema;
    j["k"] = cfg.k;
    j["n"] = cfg.n;
    j["rep"] = lab.spec();
    j["origin"] = origin;
    j["subrack"] = subrack_json(D.subrack);
    j["Q"] = q_matrix_json(Q);
    Json comps = Json::array();
    for (const auto& c : G.components()) comps.push_back(c);
    j["components"] = comps;
    j["dot"] = G.to_dot();
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "text") {
    std::cout << "schema: " << diagram_schema << "\n"
              << "origin: " << origin << "\n"
              << "vertices: " << Q.size() << "\n"
              << "Q:\n"
              << q_matrix_string(Q);
    for (const auto& c : G.components()) {
      std::cout << "component:";
      for (auto a : c) std::cout << " " << a;
      std::cout << "\n";
    }
  } else {
    std::cout << diagram_dot(G);
  }
  return exit_decided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide finite dimensionality of Nichols algebras over unmixed classes of S_kn"};
  app.require_subcommand(1);

  RunConfig cfg;
  try {
    cfg.max_class = env_cap("NICHOLS_MAX_CLASS", SubrackCaps{}.max_class);
    cfg.max_subracks = env_cap("NICHOLS_MAX_SUBRACKS", SubrackCaps{}.max_subracks);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }

  auto common = [&](CLI::App* sub, bool with_rep, std::vector<std::string> formats) {
    sub->add_option("--k", cfg.k, "cycle length")->required();
    sub->add_option("--n", cfg.n, "number of cycles")->required();
    if (with_rep) sub->add_option("--rep", cfg.rep, "representation, e.g. \"chi=(1,1);mu=sign\"")->required();
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
    sub->add_flag("--no-symmetry", cfg.no_symmetry, "disable symmetry reduction");
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--max-class", cfg.max_class, "largest class to enumerate (env NICHOLS_MAX_CLASS)");
    sub->add_option("--max-subracks", cfg.max_subracks, "subrack orbit cap (env NICHOLS_MAX_SUBRACKS)");
    sub->add_flag("!--no-timing", cfg.timing, "do not print timing to stderr");
  };

  auto* classify = app.add_subcommand("classify", "decide one representation");
  common(classify, true, {"text", "json", "dot"});
  auto* table = app.add_subcommand("table", "decide every irrep of the centralizer");
  common(table, false, {"text", "json"});
  auto* diagram = app.add_subcommand("diagram", "diagram of a diagonal sub-braiding");
  common(diagram, true, {"text", "json", "dot"});
  diagram->add_option("--subrack", cfg.subrack, "auto, basepoint, triple, canonical, inversion or quadruple:<i>,<j>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }
  if (diagram->parsed() && !diagram->count("--format")) cfg.format = "dot";

  try {
    if (classify->parsed()) return cmd_classify(cfg);
    if (table->parsed()) return cmd_table(cfg);
    return cmd_diagram(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_undecided;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}
