#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumsetlab/codes.hpp"
#include "sumsetlab/common.hpp"
#include "sumsetlab/constructive.hpp"
#include "sumsetlab/critical.hpp"
#include "sumsetlab/element_set.hpp"
#include "sumsetlab/elliptic.hpp"
#include "sumsetlab/group.hpp"
#include "sumsetlab/obstructions.hpp"
#include "sumsetlab/serialize.hpp"
#include "sumsetlab/subgroup.hpp"
#include "sumsetlab/sumset.hpp"
#include "sumsetlab/verify.hpp"

namespace sumsetlab {

/// Everything a subcommand needs, validated before dispatch.
struct ExperimentConfig {
  std::string command;
  std::string group;
  std::string curve;
  std::vector<std::uint64_t> set;
  std::string points;  // semicolon-separated curve points
  std::string qpoint;  // divisor point
  std::uint64_t k = 0;
  std::uint64_t kmax = 0;
  std::uint64_t t = 0;
  std::uint64_t target = 0;
  bool has_target = false;
  std::string method = "pair";  // represent: pair | fiber
  std::uint64_t qprime = 0;     // represent fiber: quotient prime
  std::uint64_t seed = 0;
  std::uint64_t budget = 4'000'000;
  std::string out;
  std::string format = "json";  // json | csv
  std::string tier = "fast";    // verify
  bool orders = false;          // curve: include per-point orders
  std::uint64_t min_order = 0;  // dichotomy
  std::uint64_t max_order = 0;
  std::uint64_t kmin = 3;
  std::uint64_t p_lo = 5;  // mds-search
  std::uint64_t p_hi = 31;
  std::uint32_t curves_per_prime = 2;
  std::uint32_t sets_count = 20;  // spot-theorem-a
};

struct ExperimentResult {
  int exit_code = 0;
  std::string artifact;  // JSON or CSV payload
  std::string human;     // short console summary
};

namespace detail {

inline GroupSpec need_group(const ExperimentConfig& cfg) {
  if (cfg.group.empty()) throw ConfigError(cfg.command + ": --group is required");
  return GroupSpec::parse(cfg.group);
}

inline ElementSet need_set(const ExperimentConfig& cfg, const GroupSpec& G) {
  if (cfg.set.empty()) throw ConfigError(cfg.command + ": --set is required");
  ElementSet A(G.order);
  for (std::uint64_t e : cfg.set) {
    if (e >= G.order) throw ConfigError(cfg.command + ": set element out of range");
    if (A.test(e)) throw ConfigError(cfg.command + ": duplicate set element");
    A.set(e);
  }
  return A;
}

inline Curve need_curve(const ExperimentConfig& cfg) {
  if (cfg.curve.empty()) throw ConfigError(cfg.command + ": --curve is required");
  return parse_curve(cfg.curve);
}

inline std::vector<CurvePoint> parse_point_list(const Curve& c, const std::string& s) {
  std::vector<CurvePoint> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t semi = s.find(';', pos);
    if (semi == std::string::npos) semi = s.size();
    const std::string part = s.substr(pos, semi - pos);
    if (!part.empty()) out.push_back(parse_point(c, part));
    pos = semi + 1;
  }
  return out;
}

inline void require_json(const ExperimentConfig& cfg) {
  if (cfg.format != "json")
    throw ConfigError(cfg.command + ": only json output is available for this command");
}

}  // namespace detail

inline ExperimentResult run_sumset(const ExperimentConfig& cfg) {
  detail::require_json(cfg);
  const GroupSpec G = detail::need_group(cfg);
  const ElementSet A = detail::need_set(cfg, G);
  const std::uint64_t kmax = cfg.kmax ? cfg.kmax : A.count();
  const auto table = restricted_sumset_table(G, A, static_cast<std::uint32_t>(kmax));
  ordered_json j = make_artifact("sumset", cfg.seed);
  j["group"] = G.name();
  j["g"] = G.order;
  j["set"] = json_element_set(A);
  j["kmax"] = kmax;
  ordered_json layers = ordered_json::array();
  for (std::uint32_t k = 0; k <= kmax; ++k) {
    const ElementSet& layer = table.layer(k);
    ordered_json lj;
    lj["k"] = k;
    lj["size"] = layer.count();
    lj["full"] = layer.count() == G.order;
    lj["gamma"] = json_element_set(layer);
    layers.push_back(lj);
  }
  j["layers"] = layers;
  j["hypothesis_flags"] = ordered_json::array();
  ExperimentResult res;
  res.artifact = dump_artifact(j);
  res.human = "sumset: " + G.name() + ", |A|=" + std::to_string(A.count()) +
              ", kmax=" + std::to_string(kmax);
  return res;
}

inline ExperimentResult run_mu(const ExperimentConfig& cfg) {
  const GroupSpec G = detail::need_group(cfg);
  if (cfg.k < 1) throw ConfigError("mu: --k is required and must be >= 1");
  const auto rec = mu_k_exact(G, static_cast<std::uint32_t>(cfg.k), cfg.budget);
  ExperimentResult res;
  // partial answers are still emitted, but the exit code flags the truncation
  if (!rec.certified) res.exit_code = 3;
  if (cfg.format == "csv") {
    res.artifact = critical_csv_header() + "\n" + critical_csv_row(rec) + "\n";
  } else {
    ordered_json j = make_artifact("mu", cfg.seed);
    j["record"] = json_critical_record(rec);
    res.artifact = dump_artifact(j);
  }
  res.human = "mu_" + std::to_string(cfg.k) + "(" + G.name() + ") " +
              (rec.mu_exact ? "= " + std::to_string(*rec.mu_exact)
                            : "in [" + std::to_string(rec.mu_lower) + ", " +
                                  std::to_string(rec.mu_upper) + "]");
  return res;
}

inline ExperimentResult run_dichotomy(const ExperimentConfig& cfg) {
  if (cfg.min_order < 2 || cfg.max_order < cfg.min_order)
    throw ConfigError("dichotomy: need --min-order and --max-order with 2 <= min <= max");
  const std::uint64_t kmax = cfg.kmax ? cfg.kmax : cfg.kmin;
  const auto records = dichotomy_table(cfg.min_order, cfg.max_order, cfg.kmin, kmax, cfg.budget);
  ExperimentResult res;
  if (cfg.format == "csv") {
    std::string csv = critical_csv_header() + "\n";
    for (const auto& rec : records) csv += critical_csv_row(rec) + "\n";
    res.artifact = csv;
  } else {
    ordered_json j = make_artifact("dichotomy", cfg.seed);
    j["min_order"] = cfg.min_order;
    j["max_order"] = cfg.max_order;
    j["k_min"] = cfg.kmin;
    j["k_max"] = kmax;
    ordered_json arr = ordered_json::array();
    for (const auto& rec : records) arr.push_back(json_critical_record(rec));
    j["records"] = arr;
    res.artifact = dump_artifact(j);
  }
  res.human = "dichotomy: " + std::to_string(records.size()) + " records";
  return res;
}

inline ExperimentResult run_obstruct(const ExperimentConfig& cfg) {
  detail::require_json(cfg);
  const GroupSpec G = detail::need_group(cfg);
  const ElementSet A = detail::need_set(cfg, G);
  const auto rep = obstruction_scan(G, A, cfg.t);
  ordered_json j = make_artifact("obstruct", cfg.seed);
  j["group"] = G.name();
  j["set"] = json_element_set(A);
  j["report"] = json_obstruction_report(G, rep);
  ExperimentResult res;
  res.artifact = dump_artifact(j);
  const bool any = rep.density_low || !rep.index2.empty() || !rep.index5.empty();
  res.human = std::string("obstruct: ") + (any ? "structured" : "unstructured") +
              (rep.gamma3_full ? ", gamma3 full" : "");
  return res;
}

inline ExperimentResult run_represent(const ExperimentConfig& cfg) {
  detail::require_json(cfg);
  const GroupSpec G = detail::need_group(cfg);
  const ElementSet A = detail::need_set(cfg, G);
  if (cfg.k < 3) throw ConfigError("represent: --k is required and must be >= 3");
  if (!cfg.has_target) throw ConfigError("represent: --target is required");
  if (cfg.target >= G.order) throw ConfigError("represent: target out of range");
  const std::uint32_t k = static_cast<std::uint32_t>(cfg.k);

  ordered_json j = make_artifact("represent", cfg.seed);
  j["group"] = G.name();
  j["set"] = json_element_set(A);
  j["k"] = cfg.k;
  j["target"] = cfg.target;
  j["method"] = cfg.method;

  RepresentResult r;
  if (cfg.method == "pair") {
    r = pair_padding_represent(G, A, k, cfg.target);
  } else if (cfg.method == "fiber") {
    if (cfg.qprime == 0) throw ConfigError("represent: --qprime is required for the fiber method");
    if (!is_prime_u64(cfg.qprime) || G.order % cfg.qprime != 0)
      throw ConfigError("represent: --qprime must be a prime dividing the group order");
    const auto quots = prime_index_subgroups(G, cfg.qprime);
    const auto& pi = quots.front().map;
    const auto dec = normalize_translate(G, pi, A);
    // targets translate along with the set: sum shifts by k * shift
    const std::uint64_t shifted_target =
        G.sub(cfg.target, G.smul(static_cast<std::int64_t>(k), dec.shift));
    r = fiber_lift_represent(G, pi, dec.translated, k, shifted_target);
    if (r.ok)
      for (auto& e : r.witness) e = G.add(e, dec.shift);
    j["normalization_shift"] = dec.shift;
  } else {
    throw ConfigError("represent: --method must be 'pair' or 'fiber'");
  }

  if (r.ok) {
    // revalidate in the original coordinates
    std::uint64_t sum = 0;
    ElementSet used(G.order);
    SUMSETLAB_CHECK(r.witness.size() == k, "witness has wrong length");
    for (std::uint64_t e : r.witness) {
      SUMSETLAB_CHECK(A.test(e) && !used.test(e), "witness reuses or escapes the set");
      used.set(e);
      sum = G.add(sum, e);
    }
    SUMSETLAB_CHECK(sum == cfg.target, "witness sums to the wrong target");
  }
  j["result"] = json_represent_result(r);
  ExperimentResult res;
  res.artifact = dump_artifact(j);
  res.human = r.ok ? "represent: witness of length " + std::to_string(cfg.k)
                   : "represent: no witness (" + r.failed_hypothesis + ")";
  return res;
}

inline ExperimentResult run_curve(const ExperimentConfig& cfg) {
  detail::require_json(cfg);
  const Curve c = detail::need_curve(cfg);
  const auto en = enumerate_points(c);
  const GroupIso iso = group_structure_iso(c);
  ordered_json j = make_artifact("curve", cfg.seed);
  j["p"] = c.p;
  j["a"] = c.a;
  j["b"] = c.b;
  j["N"] = en.count;
  j["group"] = iso.abstract_group.name();
  j["m"] = iso.m;
  j["n"] = iso.n;
  j["gen_n"] = iso.gen_n.to_string();
  if (iso.m > 1) j["gen_m"] = iso.gen_m.to_string();
  ordered_json pts = ordered_json::array();
  for (const auto& pt : en.points) pts.push_back(pt.to_string());
  j["points"] = pts;
  if (cfg.orders) {
    ordered_json ords = ordered_json::array();
    for (const auto& pt : en.points)
      ords.push_back(detail::point_order(c, pt, en.count));
    j["orders"] = ords;
  }
  ExperimentResult res;
  res.artifact = dump_artifact(j);
  res.human = "curve: N=" + std::to_string(en.count) + ", E = " + iso.abstract_group.name();
  return res;
}

inline ExperimentResult run_mds_check(const ExperimentConfig& cfg) {
  detail::require_json(cfg);
  const Curve c = detail::need_curve(cfg);
  if (cfg.points.empty()) throw ConfigError("mds-check: --points is required");
  if (cfg.qpoint.empty()) throw ConfigError("mds-check: --qpoint is required");
  if (cfg.k < 1) throw ConfigError("mds-check: --k is required and must be >= 1");
  const auto pts = detail::parse_point_list(c, cfg.points);
  const CurvePoint q = parse_point(c, cfg.qpoint);
  const CodeInstance code = build_code(c, pts, q, static_cast<std::uint32_t>(cfg.k));
  const GroupIso iso = group_structure_iso(c);
  const MdsVerdict v = mds_check_dual(code, iso);
  SUMSETLAB_CHECK(v.agree, "MDS checkers disagree");
  ordered_json j = make_artifact("mds-check", cfg.seed);
  j["q"] = c.p;
  j["a"] = c.a;
  j["b"] = c.b;
  j["N"] = iso.back_table.size();
  j["group"] = iso.abstract_group.name();
  ordered_json pj = ordered_json::array();
  for (const auto& pt : pts) pj.push_back(pt.to_string());
  j["P"] = pj;
  j["Q"] = q.to_string();
  j["k"] = cfg.k;
  j["mds"] = v.rank_mds;
  j["method"] = "both";
  j["methods_agree"] = v.agree;
  ExperimentResult res;
  res.artifact = dump_artifact(j);
  res.human = std::string("mds-check: ") + (v.rank_mds ? "MDS" : "not MDS") + ", methods agree";
  return res;
}

inline ExperimentResult run_mds_search(const ExperimentConfig& cfg) {
  MdsSearchConfig sc;
  sc.p_lo = cfg.p_lo;
  sc.p_hi = cfg.p_hi;
  sc.curves_per_prime = cfg.curves_per_prime;
  sc.seed = cfg.seed;
  sc.per_curve_budget = cfg.budget;
  const auto records = mds_search(sc);
  ExperimentResult res;
  if (cfg.format == "csv") {
    std::string csv = mds_csv_header() + "\n";
    for (const auto& rec : records) csv += mds_csv_row(rec) + "\n";
    res.artifact = csv;
  } else {
    ordered_json j = make_artifact("mds-search", cfg.seed);
    j["p_lo"] = cfg.p_lo;
    j["p_hi"] = cfg.p_hi;
    j["curves_per_prime"] = cfg.curves_per_prime;
    j["per_curve_budget"] = cfg.budget;
    ordered_json arr = ordered_json::array();
    for (const auto& rec : records) arr.push_back(json_mds_record(rec, nullptr));
    j["records"] = arr;
    res.artifact = dump_artifact(j);
  }
  res.human = "mds-search: " + std::to_string(records.size()) + " curves";
  return res;
}

inline ExperimentResult run_spot_theorem_a(const ExperimentConfig& cfg) {
  detail::require_json(cfg);
  const auto check = acceptance_theorem_a_spot(cfg.seed, cfg.sets_count);
  ordered_json j = make_artifact("spot-theorem-a", cfg.seed);
  j["g"] = 46320;
  j["torsion2"] = 2;
  j["sets"] = cfg.sets_count;
  ordered_json flags;
  flags["even_g_ge_624t2_1846"] = true;  // 46320 >= 624*2 + 1846
  j["hypothesis_flags"] = flags;
  j["passed"] = check.passed;
  j["instances"] = check.instances;
  if (!check.passed) j["counterexample"] = check.detail;
  ExperimentResult res;
  res.exit_code = check.passed ? 0 : 1;
  res.artifact = dump_artifact(j);
  res.human = std::string("spot-theorem-a: ") + (check.passed ? "passed" : "FAILED");
  return res;
}

inline ExperimentResult run_verify(const ExperimentConfig& cfg) {
  detail::require_json(cfg);
  const auto rep = verify_suite(VerifyOptions{cfg.tier, cfg.seed});
  ordered_json j = make_artifact("verify", cfg.seed);
  j["tier"] = rep.tier;
  j["all_passed"] = rep.all_passed;
  ordered_json arr = ordered_json::array();
  for (const auto& c : rep.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["instances"] = c.instances;
    if (!c.passed) cj["counterexample"] = c.detail;
    arr.push_back(cj);
  }
  j["checks"] = arr;
  ExperimentResult res;
  res.exit_code = rep.all_passed ? 0 : 1;
  res.artifact = dump_artifact(j);
  res.human = verify_report_text(rep);
  return res;
}

/// Dispatch; throws ConfigError / BudgetExhausted / InternalError for the
/// CLI to map onto exit codes 2 / 3 / 4.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  ExperimentResult res;
  if (cfg.command == "sumset")
    res = run_sumset(cfg);
  else if (cfg.command == "mu")
    res = run_mu(cfg);
  else if (cfg.command == "dichotomy")
    res = run_dichotomy(cfg);
  else if (cfg.command == "obstruct")
    res = run_obstruct(cfg);
  else if (cfg.command == "represent")
    res = run_represent(cfg);
  else if (cfg.command == "curve")
    res = run_curve(cfg);
  else if (cfg.command == "mds-check")
    res = run_mds_check(cfg);
  else if (cfg.command == "mds-search")
    res = run_mds_search(cfg);
  else if (cfg.command == "spot-theorem-a")
    res = run_spot_theorem_a(cfg);
  else if (cfg.command == "verify")
    res = run_verify(cfg);
  else
    throw ConfigError("unknown command: " + cfg.command);
  if (!cfg.out.empty()) write_text_file(cfg.out, res.artifact);
  return res;
}

}  // namespace sumsetlab
