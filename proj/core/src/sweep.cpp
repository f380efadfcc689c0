#include "degree_forge/sweep.hpp"

#include <cctype>
#include <functional>
#include <string>

#include "degree_forge/bigint.hpp"
#include "degree_forge/constructions.hpp"
#include "degree_forge/errors.hpp"

namespace degree_forge {

std::string_view to_string(SweepId id) {
  switch (id) {
    case SweepId::I41: return "I41";
    case SweepId::I47: return "I47";
    case SweepId::I53: return "I53";
    case SweepId::LvsH4: return "LvsH4";
    case SweepId::LvsH5: return "LvsH5";
  }
  return "?";
}

const std::vector<SweepId>& all_sweep_ids() {
  static const std::vector<SweepId> ids{SweepId::I41, SweepId::I47, SweepId::I53, SweepId::LvsH4,
                                        SweepId::LvsH5};
  return ids;
}

std::optional<SweepId> parse_sweep_id(std::string_view name) {
  for (SweepId id : all_sweep_ids()) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

const std::vector<std::string>& sweep_variables(SweepId id) {
  static const std::vector<std::string> kn{"k", "n"};
  static const std::vector<std::string> trkn{"t", "r", "k", "n"};
  return id == SweepId::I53 ? trkn : kn;
}

std::string default_grid(SweepId id) {
  switch (id) {
    case SweepId::I41: return "k=3..12,n=6k-9..6k+30";
    case SweepId::I47: return "k=3..12,n=2k+1..6k-10";
    case SweepId::I53: return "t=1..3,r=t+2..t+4,k=t+1..t+8,n=(t+2)(t+1)/2*k^2..(t+2)(t+1)/2*k^2+20";
    case SweepId::LvsH4: return "k=3..20,n=2k+1..3k-3";
    case SweepId::LvsH5: return "k=4..16,n=2k+1..4k-5";
  }
  return {};
}

namespace {

// Recursive-descent evaluator for range bounds.
class ExprParser {
 public:
  ExprParser(std::string_view text, const GridPoint& env) : text_(text), env_(env) {}

  std::int64_t parse() {
    const std::int64_t v = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  std::int64_t sum() {
    std::int64_t v = product();
    while (true) {
      skip_space();
      if (eat('+')) {
        v += product();
      } else if (eat('-')) {
        v -= product();
      } else {
        return v;
      }
    }
  }

  std::int64_t product() {
    std::int64_t v = unary();
    while (true) {
      skip_space();
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        const std::int64_t d = unary();
        if (d == 0 || v % d != 0) fail("inexact division");
        v /= d;
      } else if (pos_ < text_.size() &&
                 (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')) {
        v *= unary();  // implicit multiplication
      } else {
        return v;
      }
    }
  }

  std::int64_t unary() {
    skip_space();
    if (eat('-')) return -unary();
    return power();
  }

  std::int64_t power() {
    const std::int64_t base = atom();
    skip_space();
    if (!eat('^')) return base;
    const std::int64_t e = unary();
    if (e < 0) fail("negative exponent");
    std::int64_t v = 1;
    for (std::int64_t i = 0; i < e; ++i) v *= base;
    return v;
  }

  std::int64_t atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (eat('(')) {
      const std::int64_t v = sum();
      skip_space();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_++] - '0');
      }
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name(1, c);
      ++pos_;
      const auto it = env_.find(name);
      if (it == env_.end()) fail("unbound variable '" + name + "'");
      return it->second;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParameterError("grid expression '" + std::string(text_) + "': " + what);
  }

  std::string_view text_;
  const GridPoint& env_;
  std::size_t pos_ = 0;
};

struct RangeSpec {
  std::string var;
  std::string lo;
  std::string hi;
};

std::vector<RangeSpec> split_ranges(std::string_view spec) {
  std::vector<RangeSpec> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = spec.find(',', start);
    const std::string_view part =
        spec.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const std::size_t eq = part.find('=');
    const std::size_t dots = part.find("..");
    if (eq == std::string_view::npos || dots == std::string_view::npos || dots < eq) {
      throw ParameterError("grid range '" + std::string(part) + "' is not var=lo..hi");
    }
    std::string var;
    for (char c : part.substr(0, eq)) {
      if (!std::isspace(static_cast<unsigned char>(c))) var.push_back(c);
    }
    if (var.size() != 1 || !std::isalpha(static_cast<unsigned char>(var[0]))) {
      throw ParameterError("grid variable '" + var + "' must be a single letter");
    }
    for (const auto& r : out) {
      if (r.var == var) throw ParameterError("grid variable '" + var + "' repeated");
    }
    out.push_back({var, std::string(part.substr(eq + 1, dots - eq - 1)),
                   std::string(part.substr(dots + 2))});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

constexpr std::uint64_t kMaxGridPoints = 1000000;

void expand(const std::vector<RangeSpec>& ranges, std::size_t depth, GridPoint& point,
            std::vector<GridPoint>& out) {
  if (depth == ranges.size()) {
    if (out.size() >= kMaxGridPoints) throw ParameterError("grid exceeds 10^6 points");
    out.push_back(point);
    return;
  }
  const auto& r = ranges[depth];
  const std::int64_t lo = ExprParser(r.lo, point).parse();
  const std::int64_t hi = ExprParser(r.hi, point).parse();
  for (std::int64_t v = lo; v <= hi; ++v) {
    point[r.var] = v;
    expand(ranges, depth + 1, point, out);
  }
  point.erase(r.var);
}

struct PointResult {
  bool in_hypothesis = false;
  bool holds = true;
  std::string lhs;
  std::string rhs;
};

std::int64_t get(const GridPoint& p, const char* name) { return p.at(name); }

PointResult eval_i41(const GridPoint& p) {
  const std::int64_t k = get(p, "k");
  const std::int64_t n = get(p, "n");
  PointResult r;
  r.in_hypothesis = k >= 3 && n >= 6 * k - 9;
  if (!r.in_hypothesis) return r;
  // 5C(n-4,k-3) <= 5(k-2)/(n-k-1) C(n-4,k-2) <= C(n-4,k-2)
  const Rational left(5 * binom(n - 4, k - 3));
  const Rational middle = Rational(5 * (k - 2), n - k - 1) * Rational(binom(n - 4, k - 2));
  const Rational right(binom(n - 4, k - 2));
  r.holds = left <= middle && middle <= right;
  r.lhs = to_string(left) + " <= " + to_string(middle);
  r.rhs = to_string(right);
  return r;
}

PointResult eval_i47(const GridPoint& p) {
  const std::int64_t k = get(p, "k");
  const std::int64_t n = get(p, "n");
  PointResult r;
  r.in_hypothesis = k >= 3 && n > 2 * k && n <= 6 * k - 10;
  if (!r.in_hypothesis) return r;
  // C(n-2,k-2) + 2C(n-3,k-2) = (3 - 2(k-2)/(n-2)) C(n-2,k-2) <= 8/3 C(n-2,k-2)
  const Rational sum(binom(n - 2, k - 2) + 2 * binom(n - 3, k - 2));
  const Rational factored = (Rational(3) - Rational(2 * (k - 2), n - 2)) * Rational(binom(n - 2, k - 2));
  const Rational cap = Rational(8, 3) * Rational(binom(n - 2, k - 2));
  r.holds = sum == factored && factored <= cap;
  r.lhs = to_string(sum) + " = " + to_string(factored);
  r.rhs = to_string(cap);
  return r;
}

PointResult eval_i53(const GridPoint& p) {
  const std::int64_t t = get(p, "t");
  const std::int64_t rr = get(p, "r");
  const std::int64_t k = get(p, "k");
  const std::int64_t n = get(p, "n");
  PointResult r;
  r.in_hypothesis = t >= 1 && k > t && rr >= t + 2 && BigInt(n) >= binom(t + 2, 2) * k * k;
  if (!r.in_hypothesis) return r;
  BigInt kpow = 1;
  for (std::int64_t i = 0; i < rr - 1 - t; ++i) kpow *= k;
  const BigInt left = binom(rr, t) * kpow * binom(n - rr, k - rr);
  const BigInt right = binom(n - t - 1, k - t - 1);
  r.holds = left < right;
  r.lhs = to_string(left);
  r.rhs = to_string(right);
  return r;
}

// d_{l+1}(L_3) against d_{l+1}(H_l) from the closed forms, with the
// difference re-derived as m C(n-5,k-3) - C(n-5,k-2), m = l - 1.
PointResult eval_l_vs_h(const GridPoint& p, int ell) {
  const std::int64_t k = get(p, "k");
  const std::int64_t n = get(p, "n");
  PointResult r;
  r.in_hypothesis = k >= ell && n > 2 * k && n < ell * k - 2 * (ell - 2) && n <= 64;
  if (!r.in_hypothesis) return r;
  const int index = ell + 1;
  const auto l3 = closed_form({ConstructionKind::l_r, static_cast<int>(n), static_cast<int>(k), 3});
  const auto hl = closed_form({ConstructionKind::h_ell, static_cast<int>(n), static_cast<int>(k), ell});
  const BigInt left = l3.degree_profile.at(index);
  const BigInt right = hl.degree_profile.at(index);
  const BigInt diff = (ell - 1) * binom(n - 5, k - 3) - binom(n - 5, k - 2);
  r.holds = left > right && left - right == diff;
  r.lhs = to_string(left);
  r.rhs = to_string(right);
  return r;
}

std::string relation_of(SweepId id) {
  switch (id) {
    case SweepId::I41: return "5C(n-4,k-3) <= 5(k-2)/(n-k-1)*C(n-4,k-2) <= C(n-4,k-2)";
    case SweepId::I47: return "C(n-2,k-2)+2C(n-3,k-2) = (3-2(k-2)/(n-2))C(n-2,k-2) <= 8/3*C(n-2,k-2)";
    case SweepId::I53: return "C(r,t)*k^(r-1-t)*C(n-r,k-r) < C(n-t-1,k-t-1)";
    case SweepId::LvsH4: return "d_4(L_3) > d_4(H_3), difference 2C(n-5,k-3)-C(n-5,k-2)";
    case SweepId::LvsH5: return "d_5(L_3) > d_5(H_4), difference 3C(n-5,k-3)-C(n-5,k-2)";
  }
  return {};
}

}  // namespace

std::vector<GridPoint> expand_grid(std::string_view spec) {
  const auto ranges = split_ranges(spec);
  std::vector<GridPoint> out;
  GridPoint point;
  expand(ranges, 0, point, out);
  return out;
}

SweepReport inequality_sweep(SweepId id, std::string_view grid) {
  SweepReport report;
  report.id = id;
  report.grid = std::string(grid);
  report.relation = relation_of(id);
  const auto points = expand_grid(grid);
  for (const auto& point : points) {
    for (const auto& var : sweep_variables(id)) {
      if (point.count(var) == 0) {
        throw ParameterError("grid for " + std::string(to_string(id)) + " must bind '" + var + "'");
      }
    }
    PointResult r;
    switch (id) {
      case SweepId::I41: r = eval_i41(point); break;
      case SweepId::I47: r = eval_i47(point); break;
      case SweepId::I53: r = eval_i53(point); break;
      case SweepId::LvsH4: r = eval_l_vs_h(point, 3); break;
      case SweepId::LvsH5: r = eval_l_vs_h(point, 4); break;
    }
    if (!r.in_hypothesis) {
      ++report.points_out_of_hypothesis;
      report.out_of_hypothesis.push_back(point);
      continue;
    }
    ++report.points_evaluated;
    if (!r.holds) report.violations.push_back({point, r.lhs, r.rhs, report.relation});
  }
  report.pass = report.violations.empty();
  return report;
}

}  // namespace degree_forge
