#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sumsetlab/codes.hpp"
#include "sumsetlab/common.hpp"
#include "sumsetlab/critical.hpp"
#include "sumsetlab/element_set.hpp"
#include "sumsetlab/elliptic.hpp"
#include "sumsetlab/group.hpp"
#include "sumsetlab/obstructions.hpp"
#include "sumsetlab/constructive.hpp"

namespace sumsetlab {

using ordered_json = nlohmann::ordered_json;

/// Small sets serialize as sorted index arrays; larger ones as a hex bitmap
/// (little-endian bytes, two lowercase digits each).
inline ordered_json json_element_set(const ElementSet& s) {
  if (s.count() <= 64) {
    ordered_json arr = ordered_json::array();
    for (std::uint64_t e : s.to_indices()) arr.push_back(e);
    return arr;
  }
  static const char* hex = "0123456789abcdef";
  std::string bits;
  const std::uint64_t nbytes = (s.universe() + 7) / 8;
  bits.reserve(2 * nbytes);
  for (std::uint64_t byte = 0; byte < nbytes; ++byte) {
    std::uint8_t v = 0;
    for (std::uint64_t b = 0; b < 8; ++b) {
      const std::uint64_t idx = byte * 8 + b;
      if (idx < s.universe() && s.test(idx)) v |= static_cast<std::uint8_t>(1u << b);
    }
    bits.push_back(hex[v >> 4]);
    bits.push_back(hex[v & 0xf]);
  }
  ordered_json obj;
  obj["encoding"] = "hex";
  obj["universe"] = s.universe();
  obj["bits"] = bits;
  return obj;
}

inline ElementSet element_set_from_json(const ordered_json& j, std::uint64_t universe) {
  ElementSet s(universe);
  if (j.is_array()) {
    for (const auto& e : j) s.set(e.get<std::uint64_t>());
    return s;
  }
  if (!j.is_object() || j.value("encoding", "") != "hex")
    throw ConfigError("element set JSON: expected array or hex object");
  if (j.at("universe").get<std::uint64_t>() != universe)
    throw ConfigError("element set JSON: universe mismatch");
  const std::string bits = j.at("bits").get<std::string>();
  auto nib = [](char c) -> std::uint8_t {
    if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
    throw ConfigError("element set JSON: bad hex digit");
  };
  for (std::size_t i = 0; i + 1 < bits.size(); i += 2) {
    const std::uint8_t v = static_cast<std::uint8_t>((nib(bits[i]) << 4) | nib(bits[i + 1]));
    for (std::uint64_t b = 0; b < 8; ++b) {
      const std::uint64_t idx = (i / 2) * 8 + b;
      if (idx < universe && (v & (1u << b))) s.set(idx);
    }
  }
  return s;
}

/// Envelope shared by all artifacts: version, command, seed first.
inline ordered_json make_artifact(const std::string& command, std::uint64_t seed) {
  ordered_json j;
  j["engine_version"] = std::string(kEngineVersion);
  j["command"] = command;
  j["seed"] = seed;
  return j;
}

inline ordered_json json_prediction(const TheoremPrediction& pr) {
  ordered_json j;
  j["g"] = pr.g;
  j["k"] = pr.k;
  j["p_min"] = pr.p_min;
  j["torsion2"] = pr.torsion2;
  j["k_in_range"] = pr.k_in_range;
  ordered_json flags;
  for (const auto& [name, ok] : pr.thresholds) flags[name] = ok;
  j["hypothesis_flags"] = flags;
  j["branch"] = pr.branch;
  if (pr.formula_value) j["formula_value"] = *pr.formula_value;
  j["exact"] = pr.exact;
  j["asserted"] = pr.asserted;
  if (pr.predicted)
    j["predicted"] = *pr.predicted;
  else
    j["reason"] = pr.reason;
  return j;
}

inline ordered_json json_critical_record(const CriticalRecord& rec) {
  ordered_json j;
  j["group"] = rec.group.name();
  j["g"] = rec.group.order;
  j["torsion2"] = rec.group.torsion2();
  j["p_min"] = rec.group.smallest_prime();
  j["k"] = rec.k;
  if (rec.mu_exact) j["mu_exact"] = *rec.mu_exact;
  j["mu_lower"] = rec.mu_lower;
  j["mu_upper"] = rec.mu_upper;
  j["certified"] = rec.certified;
  j["nodes"] = rec.nodes;
  if (rec.witness) j["witness"] = json_element_set(*rec.witness);
  if (rec.missed) j["missed"] = *rec.missed;
  if (rec.index2_lower) j["index2_lower"] = *rec.index2_lower;
  j["prediction"] = json_prediction(rec.prediction);
  return j;
}

inline ordered_json json_obstruction_report(const GroupSpec& G, const ObstructionReport& rep) {
  ordered_json j;
  j["t"] = rep.t;
  j["density_low"] = rep.density_low;
  ordered_json i2 = ordered_json::array();
  for (const auto& hit : rep.index2) {
    ordered_json h;
    h["subgroup"] = json_element_set(hit.subgroup);
    h["coset"] = json_element_set(hit.coset);
    h["excess"] = hit.excess;
    i2.push_back(h);
  }
  j["index2_hits"] = i2;
  ordered_json i5 = ordered_json::array();
  for (const auto& hit : rep.index5) {
    ordered_json h;
    h["subgroup"] = json_element_set(hit.subgroup);
    h["coset_a"] = json_element_set(hit.coset_a);
    h["coset_b"] = json_element_set(hit.coset_b);
    h["excess"] = hit.excess;
    i5.push_back(h);
  }
  j["index5_pair_hits"] = i5;
  j["gamma3_full"] = rep.gamma3_full;
  (void)G;
  return j;
}

inline ordered_json json_represent_result(const RepresentResult& res) {
  ordered_json j;
  j["ok"] = res.ok;
  if (res.ok) {
    ordered_json w = ordered_json::array();
    for (std::uint64_t e : res.witness) w.push_back(e);
    j["witness"] = w;
    j["hypothesis_flags"] = ordered_json::array({"all_hypotheses_met"});
  } else {
    j["failed_hypothesis"] = res.failed_hypothesis;
  }
  return j;
}

inline ordered_json json_mds_record(const MdsSearchRecord& rec, const GroupIso* iso) {
  ordered_json j;
  j["q"] = rec.q;
  j["a"] = rec.a;
  j["b"] = rec.b;
  j["N"] = rec.N;
  j["N_parity"] = (rec.N % 2 == 0) ? "even" : "odd";
  j["group"] = rec.group_name;
  ordered_json pts = ordered_json::array();
  for (std::uint64_t idx : rec.best) {
    if (iso)
      pts.push_back(iso->back(idx).to_string());
    else
      pts.push_back(idx);
  }
  j["P"] = pts;
  j["best_size"] = rec.best.size();
  j["k"] = rec.k;
  if (iso && !rec.best.empty()) j["Q"] = iso->back(rec.q_index).to_string();
  j["mds"] = !rec.best.empty();
  j["method"] = rec.method;
  j["certified"] = rec.certified;
  j["budget_exhausted"] = rec.budget_exhausted;
  j["gap_half_x2"] = rec.gap_half_x2;
  j["gap_conj_x2"] = rec.gap_conj_x2;
  return j;
}

// ---------------------------------------------------------------------------
// CSV

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string critical_csv_header() {
  return "group,g,torsion2,p_min,k,mu_exact,mu_lower,mu_upper,witness,hypothesis_flags";
}

inline std::string critical_csv_row(const CriticalRecord& rec) {
  std::string row = csv_escape(rec.group.name());
  row += ',' + std::to_string(rec.group.order);
  row += ',' + std::to_string(rec.group.torsion2());
  row += ',' + std::to_string(rec.group.smallest_prime());
  row += ',' + std::to_string(rec.k);
  row += ',';
  if (rec.mu_exact) row += std::to_string(*rec.mu_exact);
  row += ',' + std::to_string(rec.mu_lower);
  row += ',' + std::to_string(rec.mu_upper);
  row += ',';
  std::string wit;
  if (rec.witness)
    for (std::uint64_t e : rec.witness->to_indices()) {
      if (!wit.empty()) wit += ' ';
      wit += std::to_string(e);
    }
  row += csv_escape(wit);
  row += ',';
  std::string flags;
  for (const auto& [name, ok] : rec.prediction.thresholds)
    if (ok) {
      if (!flags.empty()) flags += '|';
      flags += name;
    }
  row += csv_escape(flags.empty() ? "none" : flags);
  return row;
}

inline std::string mds_csv_header() {
  return "q,a,b,N,group,best_size,k,method,certified,gap_half_x2,gap_conj_x2";
}

inline std::string mds_csv_row(const MdsSearchRecord& rec) {
  std::string row = std::to_string(rec.q);
  row += ',' + std::to_string(rec.a);
  row += ',' + std::to_string(rec.b);
  row += ',' + std::to_string(rec.N);
  row += ',' + csv_escape(rec.group_name);
  row += ',' + std::to_string(rec.best.size());
  row += ',' + std::to_string(rec.k);
  row += ',' + rec.method;
  row += ',' + std::string(rec.certified ? "true" : "false");
  row += ',' + std::to_string(rec.gap_half_x2);
  row += ',' + std::to_string(rec.gap_conj_x2);
  return row;
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << content;
  if (!out) throw ConfigError("write failed: " + path);
}

inline std::string dump_artifact(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace sumsetlab
