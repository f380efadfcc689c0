#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "degree_forge/bounds.hpp"
#include "degree_forge/canonical.hpp"
#include "degree_forge/family.hpp"
#include "degree_forge/search.hpp"
#include "degree_forge/shadows.hpp"
#include "degree_forge/sweep.hpp"
#include "degree_forge/transversal.hpp"

namespace degree_forge::cli {

enum class Format { json, csv, text };

// JSON objects use std::map ordering, so keys are emitted sorted. Big
// integers and rationals are decimal strings; no floating-point values.
using Json = nlohmann::json;

Json sets_to_json(std::span<const VertexSet> sets);
Json degrees_to_json(const UniformFamily& family);
Json transversal_to_json(const TransversalReport& report);
Json basis_lemmas_to_json(const BasisLemmaReport& report);
Json crosscheck_to_json(const CrossCheckReport& report, const std::vector<InequalityResult>& ineq);
Json bound_to_json(const BoundEvaluation& ev);
Json sweep_to_json(const SweepReport& report);
// wall_time_ms is included only when `timing` is set.
Json search_to_json(const SearchReport& report, bool timing);
Json verification_to_json(const TheoremVerification& v);
Json probe_to_json(const ProbeReport& report);

std::string degrees_csv(const UniformFamily& family);
std::string sweep_csv(const SweepReport& report);
std::string search_csv(const SearchReport& report);

std::string degrees_text(const UniformFamily& family);
std::string sweep_text(const SweepReport& report);
std::string search_text(const SearchReport& report);
std::string verification_text(const TheoremVerification& v);
std::string probe_text(const ProbeReport& report);

// One line per member in the family text format, header included.
std::string witness_block(const CanonicalForm& form);

}  // namespace degree_forge::cli
