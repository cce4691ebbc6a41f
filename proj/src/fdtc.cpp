#include "braidcert/fdtc.hpp"

#include <numeric>

#include "braidcert/error.hpp"

namespace braidcert {

FdtcValue::FdtcValue(Kind kind, Rational lo, Rational hi, std::string provenance)
    : kind_(kind), lo_(std::move(lo)), hi_(std::move(hi)), provenance_(std::move(provenance)) {}

FdtcValue FdtcValue::exact(Rational value, std::string provenance) {
  Rational hi = value;
  return FdtcValue(Kind::kExact, std::move(value), std::move(hi), std::move(provenance));
}

FdtcValue FdtcValue::interval(Rational lo, Rational hi, std::string provenance) {
  if (hi < lo) {
    throw BraidError(ErrorCode::kBadParameters,
                     "interval lower end " + lo.str() + " exceeds upper end " + hi.str());
  }
  return FdtcValue(Kind::kInterval, std::move(lo), std::move(hi), std::move(provenance));
}

Rational FdtcValue::min_abs() const {
  if (lo_.sign() > 0) return lo_;
  if (hi_.sign() < 0) return -hi_;
  return Rational(0);
}

std::string FdtcValue::str() const {
  if (is_exact()) return lo_.str();
  return "[" + lo_.str() + ", " + hi_.str() + "]";
}

FdtcValue fdtc_floor_interval(const BraidWord& b, std::int64_t power, ReductionBudget budget) {
  if (power < 1) {
    throw BraidError(ErrorCode::kBadParameters, "power must be positive");
  }
  const OrderSign sign = sigma_sign(b, budget);
  if (sign == OrderSign::kTrivial) return FdtcValue::exact(0, "identity braid");

  // floor_D(b^k) <= |c(b^k)| = k |c(b)| <= floor_D(b^k) + 1, and c(b) has the
  // sign of b in the Dehornoy order.
  const std::int64_t f = dehornoy_floor(b.pow(power), budget);
  const Rational lo{BigInt(f), BigInt(power)};
  const Rational hi{BigInt(f + 1), BigInt(power)};
  const std::string why = "Dehornoy floor of b^" + std::to_string(power) + " is " + std::to_string(f);
  if (sign == OrderSign::kPositive) return FdtcValue::interval(lo, hi, why);
  return FdtcValue::interval(-hi, -lo, why);
}

FdtcValue fdtc_interval(const BraidWord& b, const Rational& tol, ReductionBudget budget) {
  if (tol.sign() <= 0) {
    throw BraidError(ErrorCode::kBadParameters, "tolerance must be positive");
  }
  if (b.strands() == 3) {
    const auto nf = normal_form(b);
    return FdtcValue::exact(fdtc_exact_b3(nf), "3-braid class " + to_string(nf));
  }
  const BigInt k = (Rational(1) / tol).ceil();
  if (k > BigInt(kMaxWordLength)) {
    throw BraidError(ErrorCode::kReductionBudgetExceeded, "tolerance " + tol.str() + " needs too large a power");
  }
  return fdtc_floor_interval(b, static_cast<std::int64_t>(k), budget);
}

Rational fdtc_exact_b3(const ThreeBraidNormalForm& nf) {
  // Pseudo-Anosov: the s1 s2^-a part is conjugate (by Delta) to a braid of
  // the opposite Dehornoy sign, so its coefficient is 0, and C^d adds d.
  // Reducible: floor_D(s2^(mk)) = 0 for all k forces c(s2^m) = 0.
  // Periodic: w1^3 = C^-1, w2^2 = C^-1, w3^3 = C^-2 with w_j = s1^-j s2^-1.
  const Rational d(nf.d());
  if (const auto* p = std::get_if<PeriodicForm>(&nf.form)) {
    switch (p->m) {
      case -1: return d - Rational(1, 3);
      case -2: return d - Rational(1, 2);
      default: return d - Rational(2, 3);
    }
  }
  return d;
}

Rational fdtc_exact_b3(const BraidWord& b) { return fdtc_exact_b3(normal_form(b)); }

Rational fdtc_lift(const Rational& c, std::int64_t strands, std::int64_t n) {
  if (strands < 2 || n < 1) {
    throw BraidError(ErrorCode::kBadParameters, "fdtc_lift needs m >= 2 and n >= 1");
  }
  return c * Rational(BigInt(std::gcd(strands, n)), BigInt(n));
}

Rational fdtc_lower_bound(std::int64_t genus) {
  if (genus < 1) {
    throw BraidError(ErrorCode::kBadGenus, "genus must be at least 1, got " + std::to_string(genus));
  }
  return Rational(BigInt(1), BigInt(2 * (2 * genus - 1)));
}

}  // namespace braidcert
