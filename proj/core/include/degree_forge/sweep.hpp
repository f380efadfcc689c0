#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace degree_forge {

enum class SweepId { I41, I47, I53, LvsH4, LvsH5 };

std::string_view to_string(SweepId id);
std::optional<SweepId> parse_sweep_id(std::string_view name);
const std::vector<SweepId>& all_sweep_ids();

// Variables the sweep reads, e.g. {"k", "n"}.
const std::vector<std::string>& sweep_variables(SweepId id);

// Grid covering the inequality's hypothesis range.
std::string default_grid(SweepId id);

using GridPoint = std::map<std::string, std::int64_t>;

// "k=3..12,n=6k-9..6k+30": ranges are inclusive, bounds are integer
// expressions over + - * / ^ and parentheses, with implicit multiplication
// ("6k") and variables bound by earlier ranges. Division truncates and must
// be exact. Throws ParameterError on malformed input.
std::vector<GridPoint> expand_grid(std::string_view spec);

struct SweepViolation {
  GridPoint point;
  // Exact sides, decimal or p/q.
  std::string lhs;
  std::string rhs;
  std::string relation;
};

struct SweepReport {
  SweepId id = SweepId::I41;
  std::string grid;
  std::string relation;
  std::uint64_t points_evaluated = 0;
  std::uint64_t points_out_of_hypothesis = 0;
  std::vector<GridPoint> out_of_hypothesis;
  std::vector<SweepViolation> violations;
  bool pass = true;
};

// Evaluates the inequality at every grid point in exact arithmetic. Points
// outside the hypothesis are listed but never count as violations.
SweepReport inequality_sweep(SweepId id, std::string_view grid);

}  // namespace degree_forge
