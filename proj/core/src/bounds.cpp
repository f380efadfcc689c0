#include "degree_forge/bounds.hpp"

#include <array>
#include <string>

#include "degree_forge/errors.hpp"

namespace degree_forge {

BigInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt acc = 1;
  // acc = C(n-k+i, i) after step i; each division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

struct IdName {
  BoundId id;
  std::string_view name;
};

constexpr std::array kNames{
    IdName{BoundId::EKR, "EKR"},         IdName{BoundId::HM, "HM"},
    IdName{BoundId::COR12, "COR12"},     IdName{BoundId::HZ, "HZ"},
    IdName{BoundId::D2, "D2"},           IdName{BoundId::D2K1, "D2K1"},
    IdName{BoundId::D8K3, "D8K3"},       IdName{BoundId::TINT, "TINT"},
    IdName{BoundId::D4, "D4"},           IdName{BoundId::DLL, "DLL"},
    IdName{BoundId::F87, "F87"},         IdName{BoundId::SHIFTED, "SHIFTED"},
    IdName{BoundId::PROP51, "PROP51"},   IdName{BoundId::PROP45, "PROP45"},
};

int require(const std::optional<int>& v, BoundId id, const char* name) {
  if (!v) {
    throw ParameterError(std::string(to_string(id)) + " requires parameter " + name);
  }
  return *v;
}

}  // namespace

std::string_view to_string(BoundId id) {
  for (const auto& entry : kNames) {
    if (entry.id == id) return entry.name;
  }
  return "?";
}

std::optional<BoundId> parse_bound_id(std::string_view name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

const std::vector<BoundId>& all_bound_ids() {
  static const std::vector<BoundId> ids = [] {
    std::vector<BoundId> out;
    for (const auto& entry : kNames) out.push_back(entry.id);
    return out;
  }();
  return ids;
}

BoundEvaluation evaluate(BoundId id, const BoundParams& params) {
  const std::int64_t n = params.n;
  const std::int64_t k = params.k;
  if (k < 1 || k > n) {
    throw ParameterError("bounds need 1 <= k <= n, got n=" + std::to_string(n) +
                         ", k=" + std::to_string(k));
  }

  BoundEvaluation ev;
  ev.id = id;
  ev.params = params;
  // Degree indices beyond n are never satisfiable hypotheses.
  auto degree_at = [&](std::int64_t index) {
    ev.quantity = BoundedQuantity::degree;
    ev.index = static_cast<int>(index);
    return index >= 1 && index <= n;
  };

  switch (id) {
    case BoundId::EKR: {
      const int t = require(params.t, id, "t");
      ev.t = t;
      ev.quantity = BoundedQuantity::size;
      ev.hypothesis = "1 <= t <= k, n >= (t+1)(k-t+1)";
      ev.applicable = t >= 1 && t <= k && n >= (t + 1) * (k - t + 1);
      ev.bound = binom(n - t, k - t);
      break;
    }
    case BoundId::HM:
      ev.quantity = BoundedQuantity::size;
      ev.condition = FamilyCondition::non_trivial;
      ev.hypothesis = "n > 2k";
      ev.applicable = n > 2 * k;
      ev.bound = binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1;
      break;
    case BoundId::COR12:
      ev.condition = FamilyCondition::non_trivial;
      ev.hypothesis = "n > 2k";
      ev.applicable = degree_at(1) && n > 2 * k;
      ev.bound = binom(n - 1, k - 1) - binom(n - k - 1, k - 1);
      break;
    case BoundId::HZ:
      ev.hypothesis = "n > 2k";
      ev.applicable = degree_at(n) && n > 2 * k;
      ev.bound = binom(n - 2, k - 2);
      break;
    case BoundId::D2:
      ev.hypothesis = "n > 2k";
      ev.applicable = degree_at(2) && n > 2 * k;
      ev.bound = binom(n - 2, k - 2) + binom(n - 3, k - 2);
      break;
    case BoundId::D2K1:
      ev.hypothesis = "n >= 6k-9, 2k+1 <= n";
      ev.applicable = degree_at(2 * k + 1) && n >= 6 * k - 9;
      ev.bound = binom(n - 2, k - 2);
      break;
    case BoundId::D8K3: {
      const auto index = ceil_div(8 * k, 3);
      ev.hypothesis = "n >= ceil(8k/3)";
      ev.applicable = degree_at(index) && n >= index;
      ev.bound = binom(n - 2, k - 2);
      break;
    }
    case BoundId::TINT: {
      const int t = require(params.t, id, "t");
      ev.t = t;
      ev.hypothesis = "k > t >= 1, n >= C(t+2,2) k^2";
      const bool in_range = k > t && t >= 1;
      ev.applicable = degree_at(k + 2) && in_range &&
                      BigInt(n) >= binom(t + 2, 2) * BigInt(k) * BigInt(k);
      ev.bound = binom(n - t - 1, k - t - 1);
      break;
    }
    case BoundId::D4:
      ev.hypothesis = "n >= 6k";
      ev.applicable = degree_at(4) && n >= 6 * k;
      ev.bound = binom(n - 2, k - 2) + binom(n - 4, k - 3);
      break;
    case BoundId::DLL: {
      const int ell = require(params.ell, id, "ell");
      ev.hypothesis = "4 <= ell <= k, n > 2 ell^2 k";
      ev.applicable = degree_at(ell + 1) && ell >= 4 && ell <= k &&
                      n > 2 * static_cast<std::int64_t>(ell) * ell * k;
      ev.bound = binom(n - 2, k - 2) + binom(n - ell - 1, k - ell);
      break;
    }
    case BoundId::F87: {
      const int ell = require(params.ell, id, "ell");
      ev.quantity = BoundedQuantity::size;
      ev.condition = FamilyCondition::max_degree_cap;
      ev.hypothesis = "n > 2k, 2 <= ell <= k";
      ev.applicable = n > 2 * k && ell >= 2 && ell <= k;
      ev.condition_threshold = binom(n - 1, k - 1) - binom(n - ell - 1, k - 1);
      ev.bound = binom(n - 1, k - 1) - binom(n - ell - 1, k - 1) + binom(n - ell - 1, k - ell);
      break;
    }
    case BoundId::SHIFTED: {
      const int t = require(params.t, id, "t");
      ev.t = t;
      ev.condition = FamilyCondition::shifted;
      ev.hypothesis = "1 <= t <= k, n > (t+1)(k-t)";
      ev.applicable = degree_at(2 * k - t + 1) && t >= 1 && t <= k && n > (t + 1) * (k - t);
      ev.bound = binom(n - t - 1, k - t - 1);
      break;
    }
    case BoundId::PROP51: {
      const int t = require(params.t, id, "t");
      ev.t = t;
      ev.strict = true;
      ev.quantity = BoundedQuantity::degree;
      ev.condition = FamilyCondition::tau_at_least_t2;
      ev.hypothesis = "k > t >= 1, n >= C(t+2,2) k^2";
      ev.applicable =
          k > t && t >= 1 && BigInt(n) >= binom(t + 2, 2) * BigInt(k) * BigInt(k);
      ev.bound = binom(n - t - 1, k - t - 1);
      break;
    }
    case BoundId::PROP45:
      ev.strict = true;
      ev.condition = FamilyCondition::tau_two;
      ev.hypothesis = "n > 2k";
      ev.applicable = degree_at(2 * k + 1) && n > 2 * k;
      ev.bound = binom(n - 2, k - 2);
      break;
  }
  return ev;
}

}  // namespace degree_forge
