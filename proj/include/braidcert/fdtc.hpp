#pragma once

#include <cstdint>
#include <string>

#include "braidcert/braid.hpp"
#include "braidcert/dehornoy.hpp"
#include "braidcert/rational.hpp"
#include "braidcert/three_braid.hpp"

namespace braidcert {

// Fractional Dehn twist coefficient, either known exactly or enclosed in a
// closed rational interval that contains the true value.
class FdtcValue {
 public:
  enum class Kind { kExact, kInterval };

  static FdtcValue exact(Rational value, std::string provenance = {});
  static FdtcValue interval(Rational lo, Rational hi, std::string provenance = {});

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::kExact; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  const std::string& provenance() const { return provenance_; }

  Rational width() const { return hi_ - lo_; }
  bool contains(const Rational& r) const { return lo_ <= r && r <= hi_; }
  // Smallest |c| over the enclosure; zero when the enclosure straddles 0.
  Rational min_abs() const;
  bool certainly_nonzero() const { return lo_.sign() > 0 || hi_.sign() < 0; }
  bool certainly_nonnegative() const { return lo_.sign() >= 0; }

  // "p/q" for exact values, "[lo, hi]" otherwise.
  std::string str() const;

 private:
  FdtcValue(Kind kind, Rational lo, Rational hi, std::string provenance);

  Kind kind_;
  Rational lo_;
  Rational hi_;
  std::string provenance_;
};

// Enclosure of c(b) with width <= tol. 3-braids are answered exactly by
// fdtc_exact_b3; other braids go through fdtc_floor_interval with
// k = ceil(1/tol).
FdtcValue fdtc_interval(const BraidWord& b, const Rational& tol, ReductionBudget budget = {});

// Power-floor enclosure for any strand count: with f = floor_D(b^k) and s the
// Dehornoy sign of b, c(b) lies in s*[f/k, (f+1)/k].
FdtcValue fdtc_floor_interval(const BraidWord& b, std::int64_t power, ReductionBudget budget = {});

// Exact c(b) for b in B_3 from its conjugacy class: d for pseudo-Anosov and
// reducible classes, d - 1/3, d - 1/2, d - 2/3 for the periodic m = -1, -2, -3.
Rational fdtc_exact_b3(const BraidWord& b);
Rational fdtc_exact_b3(const ThreeBraidNormalForm& nf);

// c of the boundary-fixing lift of b to the n-fold cyclic branched cover of
// the m-punctured disk: gcd(m, n)/n * c.
Rational fdtc_lift(const Rational& c, std::int64_t strands, std::int64_t n);

// Lower bound 1/(-2 chi(S)) = 1/(2(2g-1)) on a nonzero |c| for a genus g
// surface with one boundary component.
Rational fdtc_lower_bound(std::int64_t genus);

}  // namespace braidcert
