// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <random>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "naive_homology.hpp"
#include "singular/pipeline.hpp"

using namespace singular;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_script(const std::string& name) {
  std::ifstream in(std::string(SINGULAR_SCRIPTS_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing script " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Criterion 3 bookkeeping: every complex the suite touches goes through here.
struct EngineAudit {
  std::size_t checked = 0;
  std::size_t naive_checked = 0;
  std::vector<std::string> failures;

  void check(const CellComplex& c, const char* where) {
    ++checked;
    HomologyProfile p = betti_numbers(c);
    long chi = euler_count(c);
    std::size_t parts = component_count(c);
    if (chi != p.chi || p.beta0 != static_cast<long>(parts)) {
      std::ostringstream msg;
      msg << where << ": chi " << chi << " vs " << p.chi << ", b0 " << p.beta0 << " vs " << parts;
      failures.push_back(msg.str());
    }
    // Independent elimination on a sample keeps the run short.
    if (c.live_edge_count() <= 700 && checked % 3 == 0) {
      ++naive_checked;
      naive::Betti b = naive::betti(c);
      if (b.b0 != p.beta0 || b.b1 != p.beta1 || b.b2 != p.beta2 || naive::components(c) != b.b0)
        failures.push_back(std::string(where) + ": naive elimination disagrees");
    }
  }

  void check_run(const RunResult& r, const char* where) {
    for (const CellComplex& c : r.snapshots) check(c, where);
    for (const CellComplex& c : connected_components(r.result.carrier())) check(c, where);
  }
};

EngineAudit audit;

RunResult run_audited(const std::string& text, const char* where, std::optional<std::uint64_t> seed = {}) {
  RunOptions options;
  options.seed = seed;
  options.keep_snapshots = true;
  RunResult r = run(parse_script(text), options);
  audit.check_run(r, where);
  r.snapshots.clear();
  return r;
}

struct Verdict {
  bool ok = true;
  std::string detail;
};

std::map<int, std::string> lines;

void report(int number, const char* title, const Verdict& v) {
  std::ostringstream out;
  out << "criterion " << number << " [" << (v.ok ? "PASS" : "FAIL") << "] " << title;
  if (!v.detail.empty()) out << ": " << v.detail;
  lines[number] = out.str();
  std::cerr << out.str() << std::endl;
}

template <class... Args>
std::string concat(const Args&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

Verdict chi_regression() {
  const std::vector<std::pair<std::string, long>> expected = {
      {"eight_surface.sing", 3}, {"horn_torus.sing", 1},  {"tori_chain.sing", 0},   {"sine_torus_1.sing", 1},
      {"sine_torus_2.sing", 2},  {"sine_torus_3.sing", 3}, {"sine_torus_4.sing", 4}};
  Verdict v;
  auto t0 = Clock::now();
  std::vector<RunResult> results;
  for (const auto& [name, chi] : expected) results.push_back(run(parse_script(read_script(name))));
  double elapsed = seconds_since(t0);
  std::ostringstream got;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const SingularizationReport& r = results[i].report;
    got << (i ? " " : "") << r.chi_total;
    if (r.chi_total != expected[i].second || !r.all_ok()) v.ok = false;
  }
  if (elapsed >= 5.0) v.ok = false;
  v.detail = concat("chi = ", got.str(), " (want 3 1 0 1 2 3 4), ", elapsed, " s");
  for (const auto& [name, chi] : expected) run_audited(read_script(name), "reference plan");
  return v;
}

Verdict worked_examples() {
  Verdict v;
  RunResult tied = run_audited(read_script("bitori_torus.sing"), "worked example");
  RunResult spheres = run_audited(read_script("three_spheres.sing"), "worked example");
  RunResult five = run_audited(read_script("genus_five.sing"), "worked example");

  bool a = tied.report.chi_total == -4 && tied.report.theorem1_ok;
  std::vector<long> comps;
  for (const ComponentSummary& c : spheres.report.components) comps.push_back(c.betti.chi);
  std::sort(comps.begin(), comps.end());
  bool b = comps == std::vector<long>{5, 7} && spheres.report.theorem1_ok;
  bool c = five.report.connected && five.report.genus_formula == 5 && five.report.theorem2_ok == true &&
           five.report.chi_total == -2;
  v.ok = a && b && c;
  v.detail = concat("two bitori + torus chi ", tied.report.chi_total, "; three spheres components chi ",
                    comps.size() > 0 ? comps[0] : 0, " and ", comps.size() > 1 ? comps[1] : 0,
                    "; sphere + torus + 3-torus g = ", five.report.genus_formula.value_or(-1), ", chi ",
                    five.report.chi_total, ", theorem2 ", five.report.theorem2_ok.value_or(false) ? "ok" : "failed");
  return v;
}

// Random plans over canonical loops (plus star boundaries on spheres).
struct PlanGenerator {
  std::mt19937_64 rng;

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  struct Candidate {
    std::string decl;   // right-hand side of the loop statement
    std::string surface;
    int conflict_key;   // handle(i) and tunnel(i) of one surface share a vertex
    std::vector<int> vertices;
  };

  std::string next() {
    static const std::array<std::array<int, 4>, 6> stars = {{{18, 20, 28, 35},
                                                             {46, 48, 58, 53},
                                                             {21, 45, 52, 22},
                                                             {25, 49, 29, 26},
                                                             {32, 55, 36, 33},
                                                             {39, 60, 42, 40}}};
    std::ostringstream out;
    std::vector<Candidate> pool;
    int n = pick(1, 3);
    int key = 0;
    for (int s = 0; s < n; ++s) {
      std::string name = concat("M", s + 1);
      int g = pick(0, 3);
      if (g == 0) {
        out << "surface " << name << " genus 0 res 2\n";
        for (const auto& st : stars)
          pool.push_back({concat("cycle(", name, ", ", st[0], ", ", st[1], ", ", st[2], ", ", st[3], ")"), name,
                          key++, {st.begin(), st.end()}});
        continue;
      }
      int res = pick(4, 5);
      out << "surface " << name << " genus " << g << " res " << res << "\n";
      auto grid = [&](int t, int i, int j) { return t * res * res + i * res + j; };
      for (int i = 1; i <= g; ++i) {
        std::vector<int> row, column;
        for (int j = 0; j < res; ++j) {
          row.push_back(grid(i - 1, 0, j));
          column.push_back(grid(i - 1, j, 0));
        }
        pool.push_back({concat("handle(", name, ", ", i, ")"), name, key, row});
        pool.push_back({concat("tunnel(", name, ", ", i, ")"), name, key, column});
        ++key;
      }
      for (int k = 1; k < g; ++k)
        pool.push_back({concat("separating(", name, ", ", k, ")"), name, key++,
                        {grid(k - 1, 1, 1), grid(k - 1, 2, 1), grid(k - 1, 2, 2)}});
    }

    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Candidate> chosen;
    std::set<int> keys;
    for (const Candidate& c : pool)
      if (keys.insert(c.conflict_key).second) chosen.push_back(c);

    std::ostringstream loops;
    std::ostringstream ops;
    std::size_t next_loop = 0;
    int budget = pick(0, 6);
    for (int op = 0; op < budget && next_loop < chosen.size(); ++op) {
      int kind = pick(0, 2);
      if (kind == 2 && next_loop + 1 >= chosen.size()) kind = 0;
      auto declare = [&](const Candidate& c) {
        std::string name = concat("l", next_loop);
        loops << "loop " << name << " = " << c.decl << "\n";
        return name;
      };
      const Candidate& first = chosen[next_loop];
      std::string a = declare(first);
      ++next_loop;
      if (kind == 0) {
        ops << "collapse " << a << "\n";
      } else if (kind == 1) {
        ops << "zip " << a;
        // Half the zips name their endpoints; uneven arcs get balanced.
        if (pick(0, 1) == 1) {
          int k = static_cast<int>(first.vertices.size());
          int i = pick(0, k - 1);
          int j = (i + pick(1, k - 1)) % k;
          ops << " at " << first.vertices[i] << " " << first.vertices[j];
        }
        ops << "\n";
      } else {
        const Candidate& second = chosen[next_loop];
        std::string b = declare(second);
        ++next_loop;
        ops << "identify " << a << " " << b << " offset " << pick(0, 11);
        if (pick(0, 1) == 1) ops << " reverse";
        ops << "\n";
      }
    }
    return out.str() + loops.str() + ops.str();
  }
};

struct RandomStats {
  std::size_t plans = 0;
  std::size_t theorem1_failures = 0;
  std::size_t theorem2_failures = 0;
  std::size_t ops[3] = {0, 0, 0};
  std::size_t delta_failures = 0;
  std::vector<std::string> examples;
  double seconds = 0;
};

RandomStats random_plans() {
  RandomStats st;
  PlanGenerator gen{std::mt19937_64(20261018)};
  auto t0 = Clock::now();
  for (int i = 0; i < 500; ++i) {
    std::string text = gen.next();
    RunResult r;
    try {
      r = run_audited(text, "random plan", static_cast<std::uint64_t>(i + 1));
    } catch (const std::exception& e) {
      ++st.theorem1_failures;
      if (st.examples.size() < 3) st.examples.push_back(concat(e.what(), "\n", text));
      continue;
    }
    ++st.plans;
    const SingularizationReport& rep = r.report;
    long sum = 0;
    for (const ComponentSummary& c : rep.components) sum += c.betti.chi;
    if (sum != predict_chi(rep.n, rep.G, rep.C, rep.Z) || !rep.theorem1_ok) {
      ++st.theorem1_failures;
      if (st.examples.size() < 3) st.examples.push_back(text);
    }
    if (rep.connected && rep.theorem2_ok != true) ++st.theorem2_failures;
    for (const OperationRecord& op : r.result.op_log()) {
      long want = op.kind == OperationKind::Identify ? 0 : 1;
      ++st.ops[static_cast<int>(op.kind)];
      if (op.after.chi - op.before.chi != want) ++st.delta_failures;
    }
  }
  st.seconds = seconds_since(t0);
  return st;
}

Verdict zip_versus_collapse() {
  std::mt19937_64 rng(7);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Verdict v;
  int agree = 0;
  int tried = 0;
  while (tried < 50) {
    int g = pick(0, 3);
    LoopMarking loop;
    CellComplex carrier;
    if (g == 0) {
      carrier = build_sphere(2);
      loop = star_boundary(carrier, VertexId(pick(0, 5)));
    } else {
      int res = 2 * pick(2, 3);
      GenusChain chain = build_genus_chain(g, res, res);
      carrier = chain.complex;
      int which = pick(0, g > 1 ? 2 : 1);
      if (which == 2) {
        // Separating rims are triangles; pad to even length first.
        RefinedLoop r = refine_loop_to_length(carrier, canonical_loop(chain, CanonicalKind::Separating, pick(1, g - 1)), 4);
        carrier = r.complex;
        loop = r.loop;
      } else {
        loop = canonical_loop(chain, which == 0 ? CanonicalKind::Handle : CanonicalKind::Tunnel, pick(1, g));
      }
    }
    std::size_t k = loop.length();
    std::size_t ip = static_cast<std::size_t>(pick(0, static_cast<int>(k) - 1));
    SingularComplex s(carrier);
    SingularComplex z = zip(s, loop, loop.cycle[ip], loop.cycle[(ip + k / 2) % k]);
    SingularComplex c = collapse(s, loop);
    audit.check(carrier, "zip/collapse carrier");
    audit.check(z.carrier(), "zip result");
    audit.check(c.carrier(), "collapse result");
    ++tried;
    if (betti_numbers(z.carrier()) == betti_numbers(c.carrier())) ++agree;
  }
  v.ok = agree == 50;
  v.detail = concat(agree, "/50 loops give equal Betti triples");
  return v;
}

Verdict betti_deltas() {
  Verdict v;
  std::ostringstream d;
  auto delta = [](const OperationRecord& op) {
    return std::array<long, 3>{op.after.beta0 - op.before.beta0, op.after.beta1 - op.before.beta1,
                               op.after.beta2 - op.before.beta2};
  };

  GenusChain g2 = build_genus_chain(2);
  SingularComplex sep = collapse(SingularComplex(g2.complex), canonical_loop(g2, CanonicalKind::Separating, 1));
  CellComplex s1 = build_sphere(1);
  SingularComplex eq = collapse(SingularComplex(s1), star_boundary(s1, VertexId(0)));
  bool sep_ok = delta(sep.op_log()[0]) == std::array<long, 3>{0, 0, 1} &&
                delta(eq.op_log()[0]) == std::array<long, 3>{0, 0, 1};

  CellComplex t = build_torus(4, 4);
  std::vector<VertexId> r0, r2;
  for (int j = 0; j < 4; ++j) {
    r0.emplace_back(j);
    r2.emplace_back(8 + j);
  }
  SingularComplex one = collapse(SingularComplex(t), validate_simple_cycle(t, r0));
  bool nonsep_ok = delta(one.op_log()[0]) == std::array<long, 3>{0, -1, 0};

  SingularComplex two = collapse(one, validate_simple_cycle(t, r2));
  const HomologyProfile& start = two.op_log()[0].before;
  const HomologyProfile& end = two.op_log()[1].after;
  naive::Betti ref = naive::betti(two.carrier());
  bool cob_ok = end.beta0 - start.beta0 == 0 && end.beta1 - start.beta1 == -1 && end.beta2 - start.beta2 == 1 &&
                end == HomologyProfile(1, 1, 2) && ref.b0 == 1 && ref.b1 == 1 && ref.b2 == 2;

  for (const CellComplex& c : {sep.carrier(), eq.carrier(), one.carrier(), two.carrier()}) audit.check(c, "betti deltas");
  v.ok = sep_ok && nonsep_ok && cob_ok;
  v.detail = concat("separating ", sep_ok ? "(0,0,+1)" : "wrong", ", non-separating ", nonsep_ok ? "(0,-1,0)" : "wrong",
                    ", two meridians ", cob_ok ? "(0,-1,+1) ending at (1,1,2)" : "wrong");
  return v;
}

std::size_t nonsingular_vertex_count(const CellComplex& c) {
  std::size_t n = 0;
  SingularSet s = singular_set(c);
  for (const auto& [v, p] : c.vertices())
    if (!s.vertices.contains(v)) ++n;
  return n;
}

Verdict oracle_agreement() {
  Verdict v;
  auto t0 = Clock::now();
  std::ostringstream d;

  // Cycle-length bound = number of nonsingular vertices, so every simple
  // cycle of the nonsingular graph is enumerated.
  auto check = [&](const char* label, const CellComplex& c, int formula) {
    std::size_t bound = nonsingular_vertex_count(c);
    int g = -1;
    try {
      g = genus_oracle(c, OracleOptions{bound, 50'000'000});
    } catch (const TopologyError& e) {
      d << label << " oracle failed (" << e.what() << "); ";
      v.ok = false;
      return;
    }
    audit.check(c, "oracle instance");
    if (g != formula) v.ok = false;
    d << label << " " << g << " vs " << formula << " (length <= " << bound << "); ";
  };

  check("sphere", build_sphere(0), predict_genus(0, 0, 1));
  check("3x3 torus", build_torus(3, 3), predict_genus(1, 0, 1));
  RunResult two = run_audited(
      "surface A genus 0\nsurface B genus 0\n"
      "loop a0 = cycle(A, 6, 8, 10, 12)\nloop a1 = cycle(A, 14, 15, 17, 16)\n"
      "loop b0 = cycle(B, 6, 8, 10, 12)\nloop b1 = cycle(B, 14, 15, 17, 16)\n"
      "identify a0 b0\nidentify a1 b1\n",
      "oracle instance");
  check("two spheres, D=2", two.result.carrier(), two.report.genus_formula.value_or(-1));

  double elapsed = seconds_since(t0);
  if (elapsed >= 120.0) v.ok = false;
  d << elapsed << " s";
  v.detail = d.str();
  return v;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Invocation {
  int exit_code;
  std::string err;
};

Invocation invoke(const std::string& args, const fs::path& tmp) {
  fs::path err = tmp / "stderr.txt";
  std::string cmd = std::string(SINGULARIZE_BIN) + " " + args + " > " + (tmp / "stdout.txt").string() + " 2> " + err.string();
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(err)};
}

Verdict dsl_robustness() {
  Verdict v;
  fs::path tmp = fs::temp_directory_path() / concat("singularize_acceptance_", ::getpid());
  fs::create_directories(tmp);
  const std::string head = "surface T genus 1\nloop h = handle(T, 1)\nloop t = tunnel(T, 1)\n";
  struct Case {
    std::string label;
    std::string text;
    int line;
    int column;
  };
  const std::vector<Case> cases = {
      {"syntax", "colapse a\n", 1, 1},
      {"syntax (missing token)", "surface T genus\n", 1, 16},
      {"unknown surface", "loop a = handle(X, 1)\n", 1, 17},
      {"unknown loop", head + "collapse q\n", 4, 10},
      {"loop reuse", head + "collapse h\nzip h\n", 5, 5},
      {"disjointness", head + "collapse h\ncollapse t\n", 5, 10},
  };
  int located = 0;
  for (const Case& c : cases) {
    fs::path file = tmp / "case.sing";
    std::ofstream(file) << c.text;
    bool all = true;
    for (const char* sub : {"check", "run"}) {
      Invocation r = invoke(concat(sub, " ", file.string()), tmp);
      std::string where = concat(file.string(), ":", c.line, ":", c.column, ": error:");
      if (r.exit_code == 0 || r.err.find(where) == std::string::npos) {
        all = false;
        v.detail += concat(c.label, " via ", sub, " gave exit ", r.exit_code, " and '", r.err, "'; ");
      }
    }
    located += all;
  }

  // Byte stability, in process and through the CLI.
  std::string script = std::string(SINGULAR_SCRIPTS_DIR) + "/three_spheres.sing";
  Invocation a = invoke(concat("run ", script, " --report ", (tmp / "a.json").string()), tmp);
  Invocation b = invoke(concat("run ", script, " --report ", (tmp / "b.json").string()), tmp);
  std::string ja = slurp(tmp / "a.json");
  bool cli_stable = a.exit_code == 0 && b.exit_code == 0 && !ja.empty() && ja == slurp(tmp / "b.json");
  SingularizationPlan plan = parse_script(read_script("genus_five.sing"));
  bool lib_stable = report_json(run(plan).report) == report_json(run(plan).report);

  fs::remove_all(tmp);
  v.ok = located == static_cast<int>(cases.size()) && cli_stable && lib_stable;
  v.detail = concat(located, "/", cases.size(), " malformed scripts located with nonzero exit; report bytes ",
                    cli_stable && lib_stable ? "stable" : "unstable", v.detail.empty() ? "" : "; ", v.detail);
  return v;
}

}  // namespace

int main() {
  bool all = true;
  auto record = [&](int n, const char* title, const std::function<Verdict()>& fn) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v = {false, concat("threw: ", e.what())};
    }
    all = all && v.ok;
    report(n, title, v);
  };

  record(1, "chi of seven reference plans", chi_regression);
  record(2, "worked examples", worked_examples);

  RandomStats stats;
  bool random_threw = false;
  try {
    stats = random_plans();
  } catch (const std::exception& e) {
    random_threw = true;
    stats.examples.push_back(e.what());
  }
  record(4, "random plans satisfy the chi sum formula", [&] {
    Verdict v;
    v.ok = !random_threw && stats.plans == 500 && stats.theorem1_failures == 0 && stats.theorem2_failures == 0 &&
           stats.seconds < 60.0;
    v.detail = concat(stats.plans, " plans, ", stats.theorem1_failures, " sum failures, ", stats.theorem2_failures,
                      " connected-genus failures, ", stats.seconds, " s");
    for (const std::string& e : stats.examples) v.detail += "\n  " + e;
    return v;
  });
  record(5, "per-operation chi deltas", [&] {
    Verdict v;
    std::size_t total = stats.ops[0] + stats.ops[1] + stats.ops[2];
    v.ok = !random_threw && stats.delta_failures == 0 && stats.ops[0] > 0 && stats.ops[1] > 0 && stats.ops[2] > 0;
    v.detail = concat(total, " operations (", stats.ops[0], " collapse, ", stats.ops[1], " zip, ", stats.ops[2],
                      " identify), ", stats.delta_failures, " wrong deltas");
    return v;
  });
  record(6, "zip and collapse give equal homology", zip_versus_collapse);
  record(7, "collapse Betti deltas", betti_deltas);
  record(8, "genus oracle agrees with the formula", oracle_agreement);
  record(9, "script diagnostics and byte-stable reports", dsl_robustness);

  record(3, "euler count equals Z2 homology chi on every complex", [&] {
    Verdict v;
    v.ok = audit.failures.empty() && audit.checked >= 1000;
    v.detail = concat(audit.checked, " complexes (", audit.naive_checked, " also by independent elimination), ",
                      audit.failures.size(), " mismatches");
    for (std::size_t i = 0; i < std::min<std::size_t>(3, audit.failures.size()); ++i)
      v.detail += "\n  " + audit.failures[i];
    return v;
  });

  for (const auto& [n, line] : lines) std::cout << line << '\n';
  std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
  return all ? 0 : 1;
}
