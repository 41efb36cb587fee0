#include "ldl/harness.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>

#include "ldl/checks.hpp"
#include "ldl/generators.hpp"
#include "ldl/meta_lift.hpp"
#include "ldl/parallel.hpp"
#include "ldl/planar_mds.hpp"

namespace ldl {

namespace {

const std::set<std::string> kRunKeys = {"gen", "algo", "T", "rho", "delta_cap", "problem", "beta",
                                        "eps", "mode", "seed", "timeout_ms", "timing", "out"};

std::string get(const Params& p, const std::string& key, const std::string& fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

long long integer(const Params& p, const std::string& key, long long fallback) {
  const auto it = p.find(key);
  if (it == p.end()) return fallback;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(it->second, &used);
    if (used == it->second.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw UsageError("bad integer for " + key + ": '" + it->second + "'");
}

// Accepts "2", "1/2", "0.25" and milli notation "250m".
Ratio parse_ratio(const std::string& key, const std::string& text) {
  auto whole = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used == s.size() && v >= 0) return static_cast<std::int64_t>(v);
    } catch (const std::logic_error&) {
    }
    throw UsageError("bad ratio for " + key + ": '" + text + "'");
  };
  if (!text.empty() && text.back() == 'm') return {whole(text.substr(0, text.size() - 1)), 1000};
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const Ratio r{whole(text.substr(0, slash)), whole(text.substr(slash + 1))};
    if (r.den == 0) throw UsageError("zero denominator for " + key);
    return r;
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string frac = text.substr(dot + 1);
    if (frac.size() > 9) throw UsageError("too many decimals for " + key);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return {whole(text.substr(0, dot)) * den + (frac.empty() ? 0 : whole(frac)), den};
  }
  return {whole(text), 1};
}

LocalProblem parse_problem(const std::string& text) {
  if (text == "mds") return mds_problem();
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  if (colon != std::string::npos) {
    int k = 0;
    try {
      k = std::stoi(text.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw UsageError("bad problem '" + text + "'");
    }
    if (k >= 1 && kind == "ktuple") return ktuple_problem(k);
    if (k >= 1 && kind == "distance") return distance_ds_problem(k);
  }
  throw UsageError("unknown problem '" + text + "' (mds, ktuple:k, distance:d)");
}

void check_algorithm_name(const std::string& algo) {
  if (algo == "planar_mds" || algo == "genus_mds" || algo == "meta_b:planar_mds" || algo == "wrapped:planar_mds") return;
  throw UsageError("unknown algorithm '" + algo + "' (planar_mds, genus_mds, meta_b:planar_mds, wrapped:planar_mds)");
}

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

const char* status_word(RunStatus s) {
  switch (s) {
    case RunStatus::kOk:
      return "ok";
    case RunStatus::kInfeasible:
      return "infeasible";
    case RunStatus::kNicenessAbort:
      return "niceness_abort";
    case RunStatus::kFailed:
      return "failed";
  }
  return "failed";
}

}  // namespace

Params parse_params(const std::vector<std::string>& words) {
  Params out;
  for (const auto& w : words) {
    const auto eq = w.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + w + "'");
    out[w.substr(0, eq)] = w.substr(eq + 1);
  }
  return out;
}

std::string csv_header() {
  return "instance,n,m,algorithm,rounds,solution_size,opt_size,ratio,error_set_size,brute_component_max_diam,seed,wall_ms";
}

std::string csv_row(const RunRecord& r) {
  const bool ok = r.status == RunStatus::kOk || r.status == RunStatus::kInfeasible;
  std::string ratio = "n/a";
  if (ok && r.opt_size && *r.opt_size > 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(r.solution_size) / static_cast<double>(*r.opt_size));
    ratio = buf;
  }
  std::string row = quote(r.instance) + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + quote(r.algorithm) + ',' +
                    std::to_string(r.rounds) + ',';
  row += r.status == RunStatus::kOk ? std::to_string(r.solution_size) : std::string(status_word(r.status));
  row += ',';
  row += r.opt_size ? std::to_string(*r.opt_size) : std::string("timeout");
  row += ',' + ratio + ',' + std::to_string(r.error_set_size) + ',' + std::to_string(r.brute_component_max_diam) + ',' +
         std::to_string(r.seed) + ',' + std::to_string(r.wall_ms);
  return row;
}

RunRecord execute(const Params& params) {
  for (const auto& [key, value] : params) {
    if (!kRunKeys.count(key)) throw UsageError("unknown key '" + key + "'");
  }
  RunRecord rec;
  rec.instance = get(params, "gen", "");
  rec.algorithm = get(params, "algo", "");
  if (rec.instance.empty()) throw UsageError("missing gen=<generator spec>");
  if (rec.algorithm.empty()) throw UsageError("missing algo=<algorithm>");
  check_algorithm_name(rec.algorithm);
  const LocalProblem problem = parse_problem(get(params, "problem", "mds"));
  if (rec.algorithm != "meta_b:planar_mds" && rec.algorithm != "wrapped:planar_mds" && problem.name != "mds") {
    throw UsageError(rec.algorithm + " only solves mds");
  }
  const int t = static_cast<int>(integer(params, "T", 6));
  const int rho = static_cast<int>(integer(params, "rho", problem.rho));
  const int delta_cap = static_cast<int>(integer(params, "delta_cap", 64));
  const int beta = static_cast<int>(integer(params, "beta", 1));
  const Ratio eps = parse_ratio("eps", get(params, "eps", "1"));
  const std::string mode_name = get(params, "mode", "masked");
  if (mode_name != "masked" && mode_name != "local") throw UsageError("mode must be masked or local");
  const long long timeout_ms = integer(params, "timeout_ms", 30000);
  const std::string timing = get(params, "timing", "off");
  if (timing != "on" && timing != "off") throw UsageError("timing must be on or off");
  rec.seed = static_cast<std::uint64_t>(integer(params, "seed", 0));

  Graph g;
  try {
    g = generate(rec.instance);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  rec.n = g.order();
  rec.m = g.edge_count();

  const auto start = std::chrono::steady_clock::now();
  VertexSet solution;
  try {
    if (rec.algorithm == "planar_mds") {
      const LocalAlgorithm a = planar_mds();
      rec.rounds = a.rounds;
      solution = run(g, a);
    } else if (rec.algorithm == "genus_mds") {
      const auto trace = genus_mds_trace(g, t, mode_name == "local" ? GenusMode::kLocalBall : GenusMode::kMaskedGlobal);
      solution = trace.solution;
      int widest = 0;
      for (const auto& part : trace.hop_components) widest = std::max(widest, weak_diameter(g, ball(g, part, 1)));
      rec.brute_component_max_diam = widest;
      rec.error_set_size = error_set(g, t, planar_class()).size();
      rec.rounds = std::max(t, 6) + widest + 2;
    } else if (rec.algorithm == "meta_b:planar_mds") {
      LiftConfig cfg;
      cfg.T = t;
      cfg.rho = rho;
      cfg.r = 6;
      cfg.delta_cap = delta_cap;
      try {
        validate(cfg);
      } catch (const InvalidInput& e) {
        throw UsageError(e.what());
      }
      const MetaResult m = meta_b(g, planar_mds(), problem, cfg);
      solution = m.solution;
      rec.rounds = m.report.rounds;
      rec.error_set_size = m.report.error_set.size();
      rec.brute_component_max_diam = m.report.delta;
    } else {
      const LocalAlgorithm a = wrap_additive(planar_mds(), problem, Ratio{1, 1}, beta, eps);
      rec.rounds = a.rounds;
      solution = run(g, a);
    }
  } catch (const NicenessViolated& e) {
    rec.status = RunStatus::kNicenessAbort;
    rec.message = e.what();
  }

  if (rec.status == RunStatus::kOk) {
    rec.solution_size = solution.size();
    if (!problem.is_feasible(g, solution, g.vertex_set())) {
      rec.status = RunStatus::kInfeasible;
      rec.message = "output is not feasible";
    }
  }
  try {
    rec.opt_size = opt(g, problem, std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms)).size;
  } catch (const OracleTimeout&) {
  }
  if (timing == "on") {
    rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return rec;
}

int exit_code(const RunRecord& r) {
  switch (r.status) {
    case RunStatus::kOk:
      return 0;
    case RunStatus::kInfeasible:
      return 2;
    case RunStatus::kNicenessAbort:
      return 3;
    case RunStatus::kFailed:
      return 1;
  }
  return 1;
}

namespace {

void emit(const Params& params, const std::vector<RunRecord>& rows, std::ostream& out, bool append) {
  const auto it = params.find("out");
  if (it == params.end()) {
    out << csv_header() << '\n';
    for (const auto& r : rows) out << csv_row(r) << '\n';
    return;
  }
  bool fresh = true;
  if (append) {
    std::ifstream probe(it->second);
    fresh = !probe || probe.peek() == std::ifstream::traits_type::eof();
  }
  std::ofstream file(it->second, append ? std::ios::app : std::ios::trunc);
  if (!file) throw UsageError("cannot write '" + it->second + "'");
  if (fresh) file << csv_header() << '\n';
  for (const auto& r : rows) file << csv_row(r) << '\n';
}

}  // namespace

int cmd_run(const Params& params, std::ostream& out) {
  const RunRecord rec = execute(params);
  emit(params, {rec}, out, true);
  return exit_code(rec);
}

int cmd_sweep(const Params& params, std::ostream& out) {
  const std::string family = get(params, "family", "");
  const std::string algos = get(params, "algos", "");
  if (family.empty()) throw UsageError("missing family=<generator spec, {k} marks the swept value>");
  if (algos.empty()) throw UsageError("missing algos=<comma separated algorithms>");

  std::vector<std::string> specs;
  const auto mark = family.find("{k}");
  if (mark == std::string::npos) {
    specs.push_back(family);
  } else {
    const std::string range = get(params, "k", "");
    const auto dots = range.find("..");
    if (dots == std::string::npos) throw UsageError("family uses {k}; give k=a..b");
    Params bounds{{"lo", range.substr(0, dots)}, {"hi", range.substr(dots + 2)}};
    const long long lo = integer(bounds, "lo", 0);
    const long long hi = integer(bounds, "hi", 0);
    for (long long k = lo; k <= hi; ++k) {
      std::string s = family;
      for (auto at = s.find("{k}"); at != std::string::npos; at = s.find("{k}")) s.replace(at, 3, std::to_string(k));
      specs.push_back(s);
    }
  }
  std::vector<std::string> names;
  for (std::size_t start = 0;;) {
    const auto comma = algos.find(',', start);
    names.push_back(algos.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  for (const auto& a : names) check_algorithm_name(a);

  Params base = params;
  base.erase("family");
  base.erase("algos");
  base.erase("k");
  base.erase("out");
  std::vector<RunRecord> rows(specs.size() * names.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    Params p = base;
    p["gen"] = specs[i / names.size()];
    p["algo"] = names[i % names.size()];
    try {
      rows[i] = execute(p);
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      rows[i].instance = p["gen"];
      rows[i].algorithm = p["algo"];
      rows[i].status = RunStatus::kFailed;
      rows[i].message = e.what();
    }
  });
  emit(params, rows, out, false);
  return 0;
}

std::vector<std::string> suite_names() {
  return {"planar_ratio", "cutting", "uniformity", "balance", "colorings", "oracles", "niceness"};
}

int cmd_verify(const std::string& suite, std::ostream& out) {
  using checks::Outcome;
  std::vector<std::pair<std::string, std::function<Outcome()>>> props;
  if (suite == "planar_ratio") {
    props = {
        {"ratio on small planar graphs", [] { return checks::planar_ratio(checks::small_planar_instances(800, 5, 7)); }},
        {"ratio on grids, paths, stars", [] { return checks::planar_ratio(checks::structured_planar(12)); }},
        {"domination on random planar graphs", [] { return checks::planar_feasibility(20, 80, 1); }},
        {"order invariance",
         [] { return checks::order_invariance(checks::small_planar_instances(200, 4, 7), 20, 1); }},
    };
  } else if (suite == "cutting") {
    props = {
        {"view equality, toy algorithm", [] { return checks::cut_view_toy(300, 16, 1); }},
        {"view equality, planar_mds", [] { return checks::cut_view_planar(10, 1); }},
        {"cut size", [] { return checks::cut_size(checks::small_connected_instances(5, 100, 7)); }},
    };
  } else if (suite == "uniformity") {
    props = {
        {"T_alpha violation", [] { return checks::non_uniformity({1, 2}); }},
        {"planar_mds on P6, k=7, alpha=205",
         [] {
           const auto found = uniformity_check(path(6), planar_mds(), mds_problem(), 7, Ratio{205, 1});
           return Outcome{found.empty(), std::to_string(found.size()) + " violations over all 64 subsets"};
         }},
    };
  } else if (suite == "balance") {
    props = {{"balanced cover postconditions", [] { return checks::balance(12, 40, {1, 2, 3}); }}};
  } else if (suite == "colorings") {
    props = {
        {"path colorings", [] { return checks::path_colorings(6, 60); }},
        {"grid colorings", [] { return checks::grid_colorings(4, 20); }},
    };
  } else if (suite == "oracles") {
    props = {
        {"branch and bound equals enumeration", [] { return checks::oracle_equivalence(12, 150, 1); }},
        {"is_planar equals Kuratowski search", [] { return checks::planarity_vs_kuratowski(500, 8, 1); }},
    };
  } else if (suite == "niceness") {
    props = {
        {"error-set diameter within genus bound", [] { return checks::niceness({1, 2, 3, 4}); }},
        {"meta_b contract", [] { return checks::meta_b_contract(checks::nonplanar_family(), {6}); }},
        {"genus_mds domination", [] { return checks::genus_contract(checks::nonplanar_family(), {2, 4}, 16); }},
    };
  } else {
    std::string known;
    for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
    throw UsageError("unknown suite '" + suite + "' (" + known + ")");
  }
  bool all = true;
  for (const auto& [name, check] : props) {
    const Outcome o = check();
    all = all && o.pass;
    out << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}

}  // namespace ldl
