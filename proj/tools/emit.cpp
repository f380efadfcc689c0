#include "emit.hpp"

#include <sstream>

#include "degree_forge/family_io.hpp"

namespace degree_forge::cli {

namespace {

std::string grid_point_string(const GridPoint& p) {
  std::string out;
  for (const auto& [var, value] : p) {
    if (!out.empty()) out += ' ';
    out += var + "=" + std::to_string(value);
  }
  return out;
}

Json grid_point_json(const GridPoint& p) {
  Json j = Json::object();
  for (const auto& [var, value] : p) j[var] = value;
  return j;
}

std::string_view condition_name(FamilyCondition c) {
  switch (c) {
    case FamilyCondition::none: return "none";
    case FamilyCondition::non_trivial: return "non_trivial";
    case FamilyCondition::max_degree_cap: return "max_degree_cap";
    case FamilyCondition::shifted: return "shifted";
    case FamilyCondition::tau_two: return "tau_two";
    case FamilyCondition::tau_at_least_t2: return "tau_at_least_t_plus_2";
  }
  return "?";
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

std::string witness_block(const CanonicalForm& form) { return format_family(form.family()); }

Json sets_to_json(std::span<const VertexSet> sets) {
  Json j = Json::array();
  for (VertexSet s : sets) j.push_back(to_string(s));
  return j;
}

Json degrees_to_json(const UniformFamily& family) {
  const auto deg = degree_sequence(family);
  Json j;
  j["n"] = family.n();
  j["k"] = family.k();
  j["size"] = family.size();
  j["per_vertex"] = deg.per_vertex;
  j["sorted"] = deg.sorted;
  j["order"] = deg.order;
  j["diversity"] = diversity(family);
  return j;
}

Json transversal_to_json(const TransversalReport& report) {
  Json j;
  j["t"] = report.t;
  j["tau"] = optional_json(report.tau);
  j["basis"] = sets_to_json(report.basis);
  j["transversals"] = sets_to_json(report.transversals);
  return j;
}

Json basis_lemmas_to_json(const BasisLemmaReport& report) {
  Json j;
  j["saturated"] = report.saturated;
  j["shifted"] = report.shifted;
  j["lemma31"] = optional_json(report.lemma31);
  j["lemma32"] = optional_json(report.lemma32);
  j["claim54"] = optional_json(report.claim54);
  return j;
}

Json crosscheck_to_json(const CrossCheckReport& report, const std::vector<InequalityResult>& ineq) {
  Json j;
  j["cross"] = report.cross;
  j["daykin_ok"] = optional_json(report.daykin_ok);
  j["daykin_equality"] = report.daykin_equality;
  j["lex_transfer_ok"] = optional_json(report.lex_transfer_ok);
  Json list = Json::array();
  for (const auto& r : ineq) {
    Json e;
    e["id"] = r.id;
    e["params"] = r.params;
    e["applicable"] = r.applicable;
    e["lhs"] = r.lhs;
    e["rhs"] = r.rhs;
    e["strict"] = r.strict;
    e["pass"] = r.pass;
    list.push_back(std::move(e));
  }
  j["inequalities"] = std::move(list);
  return j;
}

Json bound_to_json(const BoundEvaluation& ev) {
  Json j;
  j["id"] = std::string(to_string(ev.id));
  j["n"] = ev.params.n;
  j["k"] = ev.params.k;
  j["t"] = optional_json(ev.params.t);
  j["ell"] = optional_json(ev.params.ell);
  j["applicable"] = ev.applicable;
  j["bound"] = to_string(ev.bound);
  j["strict"] = ev.strict;
  j["quantity"] = ev.quantity == BoundedQuantity::size ? "size" : "degree";
  j["index"] = optional_json(ev.index);
  j["condition"] = std::string(condition_name(ev.condition));
  j["condition_threshold"] =
      ev.condition_threshold ? Json(to_string(*ev.condition_threshold)) : Json(nullptr);
  j["hypothesis"] = ev.hypothesis;
  return j;
}

Json sweep_to_json(const SweepReport& report) {
  Json j;
  j["id"] = std::string(to_string(report.id));
  j["grid"] = report.grid;
  j["relation"] = report.relation;
  j["points_evaluated"] = report.points_evaluated;
  j["points_out_of_hypothesis"] = report.points_out_of_hypothesis;
  Json out = Json::array();
  for (const auto& p : report.out_of_hypothesis) out.push_back(grid_point_json(p));
  j["out_of_hypothesis"] = std::move(out);
  Json v = Json::array();
  for (const auto& violation : report.violations) {
    Json e;
    e["point"] = grid_point_json(violation.point);
    e["lhs"] = violation.lhs;
    e["rhs"] = violation.rhs;
    v.push_back(std::move(e));
  }
  j["violations"] = std::move(v);
  j["pass"] = report.pass;
  return j;
}

Json search_to_json(const SearchReport& report, bool timing) {
  Json j;
  j["n"] = report.n;
  j["k"] = report.k;
  j["t"] = report.t;
  j["restrict"] = std::string(to_string(report.restrict));
  Json rows = Json::array();
  for (const auto& m : report.per_index_max) {
    Json e;
    e["index"] = m.index;
    e["max"] = m.max;
    e["witness"] = witness_block(m.witness);
    rows.push_back(std::move(e));
  }
  j["per_index_max"] = std::move(rows);
  j["families_enumerated"] = report.families_enumerated;
  j["families_matched"] = report.families_matched;
  j["isomorphism_classes"] = optional_json(report.isomorphism_classes);
  j["exhaustive"] = report.exhaustive;
  if (timing) j["wall_time_ms"] = static_cast<std::int64_t>(report.wall_time_seconds * 1000.0);
  return j;
}

Json verification_to_json(const TheoremVerification& v) {
  Json j;
  j["bound"] = bound_to_json(v.bound);
  j["verdict"] = std::string(to_string(v.verdict));
  j["observed"] = optional_json(v.observed);
  j["families_enumerated"] = v.families_enumerated;
  j["families_qualifying"] = v.families_qualifying;
  Json w = Json::array();
  for (const auto& f : v.extremal_witnesses) w.push_back(witness_block(f));
  j["extremal_witnesses"] = std::move(w);
  j["equality_classification"] = optional_json(v.equality_classification);
  j["reason"] = v.reason;
  return j;
}

Json probe_to_json(const ProbeReport& report) {
  Json j;
  j["id"] = std::string(to_string(report.id));
  j["n"] = report.n;
  j["k"] = report.k;
  j["t"] = report.t;
  j["ell"] = optional_json(report.ell);
  j["families_enumerated"] = report.families_enumerated;
  j["metric"] = report.metric;
  j["observed"] = report.observed;
  j["index"] = optional_json(report.index);
  j["threshold"] = report.threshold ? Json(to_string(*report.threshold)) : Json(nullptr);
  j["reference"] = to_string(report.reference);
  j["consistent"] = report.consistent;
  j["witness"] = witness_block(report.witness);
  return j;
}

std::string degrees_csv(const UniformFamily& family) {
  const auto deg = degree_sequence(family);
  std::ostringstream out;
  out << "i,vertex,degree\n";
  for (std::size_t i = 0; i < deg.sorted.size(); ++i) {
    out << i + 1 << ',' << deg.order[i] << ',' << deg.sorted[i] << '\n';
  }
  return out.str();
}

std::string sweep_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "point,lhs,rhs\n";
  for (const auto& v : report.violations) {
    out << '"' << grid_point_string(v.point) << "\",\"" << v.lhs << "\",\"" << v.rhs << "\"\n";
  }
  return out.str();
}

std::string search_csv(const SearchReport& report) {
  std::ostringstream out;
  out << "index,max\n";
  for (const auto& m : report.per_index_max) out << m.index << ',' << m.max << '\n';
  return out.str();
}

std::string degrees_text(const UniformFamily& family) {
  const auto deg = degree_sequence(family);
  std::ostringstream out;
  out << "size " << family.size() << ", diversity " << diversity(family) << "\nsorted degrees:";
  for (auto d : deg.sorted) out << ' ' << d;
  out << '\n';
  return out.str();
}

std::string sweep_text(const SweepReport& report) {
  std::ostringstream out;
  out << to_string(report.id) << ": " << report.relation << '\n'
      << "grid " << report.grid << '\n'
      << report.points_evaluated << " points evaluated, " << report.points_out_of_hypothesis
      << " outside the hypothesis, " << report.violations.size() << " violations\n";
  for (const auto& v : report.violations) {
    out << "  " << grid_point_string(v.point) << ": " << v.lhs << " vs " << v.rhs << '\n';
  }
  out << (report.pass ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string search_text(const SearchReport& report) {
  std::ostringstream out;
  out << "maximal " << report.t << "-intersecting families, n=" << report.n << " k=" << report.k
      << " restrict=" << to_string(report.restrict) << '\n'
      << report.families_enumerated << " enumerated, " << report.families_matched << " matched"
      << (report.exhaustive ? "" : ", stopped early (not exhaustive)") << '\n';
  if (report.isomorphism_classes) out << *report.isomorphism_classes << " isomorphism classes\n";
  for (const auto& m : report.per_index_max) out << "  max d_" << m.index << " = " << m.max << '\n';
  return out.str();
}

std::string verification_text(const TheoremVerification& v) {
  std::ostringstream out;
  out << to_string(v.bound.id) << " at n=" << v.bound.params.n << " k=" << v.bound.params.k << ": "
      << to_string(v.verdict);
  if (v.observed) out << ", observed " << *v.observed << " vs bound " << to_string(v.bound.bound);
  if (!v.reason.empty()) out << " (" << v.reason << ")";
  out << '\n' << v.extremal_witnesses.size() << " extremal classes\n";
  for (const auto& w : v.extremal_witnesses) out << witness_block(w) << '\n';
  return out.str();
}

std::string probe_text(const ProbeReport& report) {
  std::ostringstream out;
  out << to_string(report.id) << " at n=" << report.n << " k=" << report.k << " t=" << report.t
      << ": " << report.metric << " = " << report.observed << ", reference "
      << to_string(report.reference) << (report.consistent ? " (consistent)" : " (not consistent)")
      << '\n'
      << report.families_enumerated << " families\n"
      << witness_block(report.witness);
  return out.str();
}

}  // namespace degree_forge::cli
