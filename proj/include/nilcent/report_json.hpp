#pragma once

#include <json.hpp>

#include "nilcent/adjoint.hpp"
#include "nilcent/matrix_io.hpp"
#include "nilcent/verifier.hpp"

namespace nilcent {

inline nlohmann::json to_json(const Partition& p) { return p.parts(); }

inline nlohmann::json to_json(const MembershipVerdict& v) {
  return {{"commutes", v.commutes},
          {"in_parabolic", v.in_parabolic},
          {"in_levi_part", v.in_levi_part},
          {"in_radical_lie", v.in_radical_lie}};
}

inline nlohmann::json to_json(const TheoremReport& r) {
  return {{"characteristic", r.characteristic},
          {"hypothesis_ok", r.hypothesis_ok},
          {"hypothesis_reason", r.hypothesis_reason},
          {"pencil_nilpotency_index", r.pencil_nilpotency_index},
          {"partition_generic", to_json(r.partition_generic)},
          {"x_verdict", to_json(r.x_verdict)},
          {"y_verdict", to_json(r.y_verdict)},
          {"conclusion_holds", r.conclusion_holds}};
}

inline nlohmann::json weight_dims_to_json(const std::map<int, std::size_t>& dims) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [m, d] : dims) out[std::to_string(m)] = d;
  return out;
}

/// Coefficients in ascending degree, as strings.
template <class K>
nlohmann::json to_json(const Polynomial<K>& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

template <class K>
nlohmann::json to_json(const LocusReport<K>& l) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : l.roots) roots.push_back(r.to_string());
  nlohmann::json unresolved = nlohmann::json::array();
  for (const auto& f : l.unresolved) unresolved.push_back(to_json(f));
  return {{"polynomial", to_json(l.polynomial)},
          {"polynomial_text", l.polynomial.to_string()},
          {"roots", roots},
          {"unresolved_factors", unresolved}};
}

template <class K>
nlohmann::json to_json(const ScanReport<K>& s) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& pt : s.samples) {
    nlohmann::json point = pt.at_infinity ? nlohmann::json::array({"0", "1"})
                                          : nlohmann::json::array({"1", pt.s->to_string()});
    samples.push_back({{"point", point}, {"partition", to_json(pt.partition)}, {"is_generic", pt.is_generic}});
  }
  nlohmann::json exceptional = nlohmann::json::array();
  for (const auto& e : s.exceptional_points) exceptional.push_back(e.to_string());
  return {{"generic_partition", to_json(s.generic_partition)},
          {"samples", samples},
          {"exceptional_points", exceptional},
          {"infinity_exceptional", s.infinity_exceptional},
          {"locus", to_json(s.locus)},
          {"infinity_multiplicity", s.infinity_multiplicity},
          {"projective_degree", s.projective_degree()},
          {"dominance_violations", s.dominance_violations},
          {"locus_violations", s.locus_violations}};
}

inline nlohmann::json to_json(const StressSummary& s) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : s.partitions) parts.push_back(to_json(p));
  return {{"pairs", s.pairs},
          {"hypothesis_ok", s.hypothesis_ok},
          {"concluded_true", s.concluded_true},
          {"hypothesis_failed", s.hypothesis_failed},
          {"failed_but_concluded", s.failed_but_concluded},
          {"rejected", s.rejected},
          {"dominance_failures", s.dominance_failures},
          {"theorem_violations", s.theorem_violations},
          {"generic_partitions", parts},
          {"notes", s.notes}};
}

inline nlohmann::json to_json(const LVerdict& v) {
  nlohmann::json out = {{"associated", v.associated},
                        {"consistent", v.consistent},
                        {"adjoint_weight_dims", weight_dims_to_json(v.adjoint_weight_dims)},
                        {"ad_nilpotency_index", v.ad_nilpotency_index},
                        {"first_failing_weight", v.first_failing_weight}};
  out["ad_power_vanishes"] = v.ad_power_vanishes ? nlohmann::json(*v.ad_power_vanishes) : nlohmann::json(nullptr);
  return out;
}

template <class K>
nlohmann::json to_json(const ChainBasis<K>& b) {
  nlohmann::json tops = nlohmann::json::array();
  for (const auto& v : b.tops()) tops.push_back(vector_to_json<K>(v));
  return {{"partition", to_json(b.exponents())}, {"tops", tops}, {"chain_matrix", matrix_to_json(b.chain_matrix())}};
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace nilcent
