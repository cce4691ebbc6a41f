#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braidcert/braid.hpp"
#include "braidcert/certificate.hpp"
#include "braidcert/dehornoy.hpp"
#include "braidcert/fdtc.hpp"
#include "braidcert/rational.hpp"

namespace braidcert {

// Geometric hypotheses the certifier cannot check itself. Each one consumed
// by a rule is echoed into Certificate::assumptions; a missing one makes the
// verdict Unknown.
struct Assertions {
  bool hyperbolic = false;     // knot (or satellite companion) is hyperbolic and fibred in a ZHS^3
  bool irreducible = false;    // ambient 3-manifold is irreducible
  bool pseudo_anosov = false;  // braid is pseudo-Anosov (proved internally for 3 strands)
  bool fdtc_nonzero = false;   // c(h) != 0 is known by other means
};

// Slope n mu + q lambda on a knot exterior.
struct SurgerySlope {
  BigInt n;
  BigInt q;
};

// delta = b mu + a lambda for c(h) = a/b in lowest terms, b > 0.
struct DegeneracySlope {
  BigInt b;
  BigInt a;
  static DegeneracySlope from_fdtc(const Rational& c);
};

// |n a - q b|, the algebraic intersection number of the two slopes.
BigInt slope_distance(const SurgerySlope& s, const DegeneracySlope& delta);

// X_n(K)(mu_n + q lambda_n) for a fibred knot with monodromy h. Excellent
// when |n c - q| >= 1 holds on the whole enclosure of c(h), or (given a
// genus and c(h) != 0) when q = 0 and n >= 2(2g-1).
Certificate certify_fibred_cover(const FdtcValue& c_h, std::optional<std::int64_t> genus,
                                 std::int64_t n, std::int64_t q, const Assertions& assertions);

// Values of q for which the universal abelian cover of X(K)(n mu + q lambda)
// is not certified: {nc} if nc is an integer, else {floor(nc), floor(nc)+1}.
std::vector<BigInt> excluded_q(const Rational& c_h, std::int64_t n);

// Universal abelian cover of the Z/m orbifold on X(K)(p mu + q lambda).
Certificate certify_orbifold_cover(const FdtcValue& c_h, std::int64_t p, std::int64_t q,
                                   std::int64_t m, const Assertions& assertions);

inline Rational default_tolerance() { return Rational(1, 12); }

// t-fold cyclic branched cover of the closure of b in B_m.
Certificate certify_closed_braid_cover(const BraidWord& b, std::int64_t cover_order,
                                       const Assertions& assertions,
                                       const Rational& tol = default_tolerance(),
                                       ReductionBudget budget = {});

// n-fold cyclic branched cover of a genus one fibred knot whose monodromy is
// h, written in the twists T_c1 -> s1, T_c2 -> s2.
Certificate certify_genus1_cover(const BraidWord& h, std::int64_t n, const Assertions& assertions);

// n-fold cyclic branched cover of a satellite whose pattern is the closure
// of `pattern` and whose companion has monodromy FDTC c_companion.
Certificate certify_satellite(const BraidWord& pattern, const FdtcValue& c_companion,
                              bool companion_exact_zero, std::int64_t n,
                              const Assertions& assertions, ReductionBudget budget = {});

}  // namespace braidcert
