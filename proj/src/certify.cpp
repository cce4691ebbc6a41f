#include "braidcert/certify.hpp"

#include <numeric>
#include <stdexcept>

#include "braidcert/error.hpp"
#include "braidcert/three_braid.hpp"

namespace braidcert {

namespace {

constexpr const char* kHyperbolicKnot =
    "knot is hyperbolic and fibred in an integer homology sphere";
constexpr const char* kHyperbolicCompanion =
    "companion is a hyperbolic fibred knot in an integer homology sphere";
constexpr const char* kIrreducible = "ambient 3-manifold is irreducible";
constexpr const char* kPseudoAnosov = "braid is pseudo-Anosov";
constexpr const char* kFdtcNonzero = "c(h) is nonzero";

Justification rule(std::string id, std::string citation, std::string inequality, Bindings bindings) {
  return {std::move(id), std::move(citation), std::move(inequality), std::move(bindings)};
}

void bad(const std::string& why) { throw BraidError(ErrorCode::kBadParameters, why); }

Certificate unknown(std::string note) {
  Certificate cert;
  cert.notes.push_back(std::move(note));
  return cert;
}

// Every emitted verdict is replayed before it leaves the certifier; a
// disagreement is an internal bug, never a user error.
Certificate checked(Certificate cert) {
  const auto report = replay(cert);
  if (!report.ok) {
    throw std::logic_error("certificate failed self-replay: " + report.failures.front());
  }
  return cert;
}

Bindings interval_bindings(const FdtcValue& c) { return {{"c_lo", c.lo()}, {"c_hi", c.hi()}}; }

// Pseudo-Anosov status of a braid: proved for 3 strands, asserted otherwise.
// Returns an explanation when it cannot be established.
std::optional<std::string> pseudo_anosov_status(const BraidWord& b, const Assertions& assertions,
                                                Certificate& cert) {
  if (b.strands() == 3) {
    const auto nf = normal_form(b);
    if (nt_type(nf) != NtType::kPseudoAnosov) {
      return "braid is " + std::string(to_string(nt_type(nf))) + " (" + to_string(nf) +
             "), not pseudo-Anosov";
    }
    cert.notes.push_back("pseudo-Anosov by 3-braid classification: " + to_string(nf));
    return std::nullopt;
  }
  if (!assertions.pseudo_anosov) return "pseudo-Anosov status not asserted (use --assert-pa)";
  cert.assumptions.push_back(kPseudoAnosov);
  return std::nullopt;
}

}  // namespace

DegeneracySlope DegeneracySlope::from_fdtc(const Rational& c) {
  return {c.denominator(), c.numerator()};
}

BigInt slope_distance(const SurgerySlope& s, const DegeneracySlope& delta) {
  return boost::multiprecision::abs(s.n * delta.a - s.q * delta.b);
}

Certificate certify_fibred_cover(const FdtcValue& c_h, std::optional<std::int64_t> genus,
                                 std::int64_t n, std::int64_t q, const Assertions& assertions) {
  if (n < 1) bad("cover order n must be at least 1");
  if (genus && *genus < 1) throw BraidError(ErrorCode::kBadGenus, "genus must be at least 1");
  if (!assertions.hyperbolic) return unknown("knot hyperbolicity not asserted (use --assert-hyperbolic)");

  Certificate cert;
  cert.assumptions.push_back(kHyperbolicKnot);

  // |n c - q| >= 1 on all of [lo, hi] iff the whole of n[lo, hi] - q lies
  // outside (-1, 1).
  const Rational nr(n);
  const Rational qr(q);
  const bool clears = nr * c_h.lo() - qr >= 1 || nr * c_h.hi() - qr <= -1;
  if (clears) {
    Bindings b{{"n", nr}, {"q", qr}};
    for (auto& kv : interval_bindings(c_h)) b.push_back(kv);
    cert.justifications.push_back(rule(
        "fibred-cover",
        "hyperbolic fibred knot with monodromy h: X_n(K)(mu_n + q lambda_n) is excellent when "
        "|n c(h) - q| >= 1",
        "n*c_lo - q >= 1 || n*c_hi - q <= -1", std::move(b)));

    if (c_h.is_exact()) {
      const auto delta = DegeneracySlope::from_fdtc(c_h.lo());
      const BigInt dist = slope_distance({BigInt(n), BigInt(q)}, delta);
      if (dist < delta.b) throw std::logic_error("degeneracy slope distance disagrees with |nc - q|");
      cert.justifications.push_back(rule(
          "fibred-cover-degeneracy",
          "degeneracy slope delta = b mu + a lambda for c(h) = a/b: excellent when "
          "Delta(n mu + q lambda, delta) >= Delta(lambda, delta) = b",
          "abs(n*a - q*b) >= b && a/b == c",
          {{"n", nr}, {"q", qr}, {"a", Rational(delta.a)}, {"b", Rational(delta.b)}, {"c", c_h.lo()}}));
    }
  }

  const bool nonzero_known = c_h.certainly_nonzero();
  if (genus && q == 0 && (nonzero_known || assertions.fdtc_nonzero)) {
    const Rational bound = fdtc_lower_bound(*genus);
    if (nr * bound >= 1) {
      if (!nonzero_known) cert.assumptions.push_back(kFdtcNonzero);
      cert.justifications.push_back(rule(
          "fibred-cover-genus-bound",
          "nonzero c(h) on a genus g fibre satisfies |c(h)| >= 1/(2(2g-1)), so Sigma_n(K) is "
          "excellent for n >= 2(2g-1)",
          "q == 0 && lb == 1/(2*(2*g - 1)) && n*lb >= 1 && n >= 2*(2*g - 1)",
          {{"n", nr}, {"q", qr}, {"g", Rational(*genus)}, {"lb", bound}}));
    }
  }

  if (cert.justifications.empty()) {
    cert.notes.push_back("|n c(h) - q| >= 1 not guaranteed for c(h) in " + c_h.str());
    return cert;
  }
  cert.verdict = Verdict::kExcellent;
  return checked(std::move(cert));
}

std::vector<BigInt> excluded_q(const Rational& c_h, std::int64_t n) {
  const Rational nc = Rational(n) * c_h;
  if (nc.is_integer()) return {nc.numerator()};
  const BigInt f = nc.floor();
  return {f, f + 1};
}

Certificate certify_orbifold_cover(const FdtcValue& c_h, std::int64_t p, std::int64_t q,
                                   std::int64_t m, const Assertions& assertions) {
  if (p <= 0) bad("p must be positive");
  if (m < 1) bad("orbifold order m must be at least 1");
  if (std::gcd(p, q) != 1) bad("p and q must be coprime");
  if (!assertions.hyperbolic) return unknown("knot hyperbolicity not asserted (use --assert-hyperbolic)");

  Certificate cert;
  cert.assumptions.push_back(kHyperbolicKnot);
  const Rational pr(p), qr(q), mr(m);
  if (mr * (pr * c_h.lo() - qr) >= 1 || mr * (pr * c_h.hi() - qr) <= -1) {
    Bindings b{{"m", mr}, {"p", pr}, {"q", qr}};
    for (auto& kv : interval_bindings(c_h)) b.push_back(kv);
    cert.justifications.push_back(rule(
        "orbifold-cover",
        "universal abelian cover of the Z/m orbifold on X(K)(p mu + q lambda) is excellent when "
        "m |p c(h) - q| >= 1",
        "gcd(p, q) == 1 && (m*(p*c_lo - q) >= 1 || m*(p*c_hi - q) <= -1)", std::move(b)));
    cert.verdict = Verdict::kExcellent;
    return checked(std::move(cert));
  }
  cert.notes.push_back("m |p c(h) - q| >= 1 not guaranteed for c(h) in " + c_h.str());
  return cert;
}

Certificate certify_closed_braid_cover(const BraidWord& b, std::int64_t cover_order,
                                       const Assertions& assertions, const Rational& tol,
                                       ReductionBudget budget) {
  if (cover_order < 2) bad("cover order must be at least 2");
  Certificate cert;
  if (auto why = pseudo_anosov_status(b, assertions, cert)) return unknown(*why);

  const FdtcValue c = fdtc_interval(b, tol, budget);
  cert.notes.push_back("c(b) in " + c.str() + " (" + c.provenance() + ")");
  const std::int64_t m = b.strands();
  const std::int64_t t = cover_order;
  const Rational abs_lo = c.min_abs();

  // Largest N with N <= |c(b)| on the whole enclosure.
  const BigInt big_n = abs_lo.floor();
  for (std::int64_t n = 2; n <= t && BigInt(n) <= big_n; ++n) {
    if (t % n != 0 || std::gcd(m, n) != 1) continue;
    Bindings bind{{"t", Rational(t)}, {"n", Rational(n)}, {"k", Rational(t / n)}, {"m", Rational(m)}};
    for (auto& kv : interval_bindings(c)) bind.push_back(kv);
    cert.justifications.push_back(rule(
        "braid-cover-nk",
        "pseudo-Anosov b in B_m with |c(b)| >= N: the nk-fold cyclic branched cover of the closure "
        "is excellent for 2 <= n <= N, gcd(m, n) = 1, k >= 1",
        "n*k == t && k >= 1 && n >= 2 && gcd(m, n) == 1 && n <= max(c_lo, -c_hi)", std::move(bind)));
    break;
  }

  if (m % 2 == 1 && t % 2 == 0 && abs_lo >= 2) {
    Bindings bind{{"m", Rational(m)}, {"t", Rational(t)}};
    for (auto& kv : interval_bindings(c)) bind.push_back(kv);
    cert.justifications.push_back(rule(
        "braid-cover-even",
        "odd-strand pseudo-Anosov b with |c(b)| >= 2: every even order cyclic branched cover of "
        "the closure is excellent",
        "m - 2*floor(m/2) == 1 && t - 2*floor(t/2) == 0 && max(c_lo, -c_hi) >= 2", std::move(bind)));
  }

  if (cert.justifications.empty()) {
    cert.notes.push_back("no factorization t = n k with 2 <= n <= " + big_n.str() +
                         " and gcd(m, n) = 1");
    return cert;
  }
  cert.verdict = Verdict::kExcellent;
  return checked(std::move(cert));
}

namespace {

struct PeriodicWindow {
  std::int64_t period;  // n = period * k + r
  std::int64_t k;
  std::int64_t r;
  std::string condition;  // L-space condition in terms of n, d, k
};

// b(h) = C^d w_j with w_j = s1^-j s2^-1. Using w1^3 = C^-1, w2^2 = C^-1 and
// w3^3 = C^-2, b(h)^n is C^e, C^e w_j or (C^e w_j)^-1, and
// (C^e w1)^-1 ~ C^(1-e) w3, (C^e w3)^-1 ~ C^(1-e) w1. Baldwin's list then
// gives these windows for n d.
PeriodicWindow periodic_window(int j, std::int64_t n) {
  const std::int64_t period = j == 2 ? 2 : 3;
  const std::int64_t k = n / period;
  const std::int64_t r = n % period;
  std::string cond;
  if (j == 3) {
    if (r == 0) cond = "(n*d == 2*k + 1 || n*d == 2*k - 1)";
    else if (r == 1) cond = "(2*k - 1 <= n*d && n*d <= 2*k + 2)";
    else cond = "(2*k <= n*d && n*d <= 2*k + 3)";
  } else {
    if (r == 0) cond = "(n*d == k + 1 || n*d == k - 1)";
    else cond = "(k - 1 <= n*d && n*d <= k + 2)";
  }
  return {period, k, r, cond};
}

}  // namespace

Certificate certify_genus1_cover(const BraidWord& h, std::int64_t n, const Assertions& assertions) {
  require_three_strands(h);
  if (n < 2) bad("cover order n must be at least 2");
  const auto nf = normal_form(h);
  const std::int64_t d = nf.d();
  if (nt_type(nf) == NtType::kReducible && d == 0) {
    throw BraidError(ErrorCode::kSplitBinding,
                     "b(h) = " + to_string(nf) + " closes to a split link (d = 0)");
  }
  if (!assertions.irreducible) {
    return unknown("ambient irreducibility not asserted (use --assert-irreducible)");
  }

  Certificate cert;
  cert.assumptions.push_back(kIrreducible);
  cert.notes.push_back("b(h) ~ " + to_string(nf));
  const Rational nr(n), dr(d);

  switch (nt_type(nf)) {
    case NtType::kPseudoAnosov:
      if (d == 0) {
        cert.verdict = Verdict::kTotalLSpace;
        cert.justifications.push_back(rule(
            "genus1-pseudo-anosov-zero",
            "pseudo-Anosov genus one monodromy with c(h) = 0: b(h)^n = (s1 s2^-a1 ... s1 s2^-ak)^n "
            "lies in Baldwin's list, so Sigma_n(K) is a total L-space for n >= 2",
            "d == 0 && n >= 2", {{"d", dr}, {"n", nr}}));
      } else {
        cert.verdict = Verdict::kExcellent;
        const Rational c_h = fdtc_lift(dr, 3, 2);
        cert.justifications.push_back(rule(
            "genus1-pseudo-anosov",
            "pseudo-Anosov genus one monodromy: c(h) = c(b(h))/2 = d/2, and |n c(h)| >= 1 makes "
            "Sigma_n(K) excellent",
            "c_h == d/2 && abs(n*c_h) >= 1", {{"d", dr}, {"n", nr}, {"c_h", c_h}}));
      }
      break;
    case NtType::kReducible:
      cert.verdict = Verdict::kExcellent;
      cert.justifications.push_back(rule(
          "genus1-reducible",
          "reducible genus one monodromy: b(h)^n = C^(nd) s2^(nm) with nd != +-1 is outside "
          "Baldwin's list, so Sigma_n(K) is not an L-space and hence excellent",
          "d != 0 && abs(n*d) >= 2", {{"d", dr}, {"n", nr}}));
      break;
    case NtType::kPeriodic: {
      const int j = -std::get<PeriodicForm>(nf.form).m;
      const auto w = periodic_window(j, n);
      const std::string shape = "j == " + std::to_string(j) + " && k == floor(n/" +
                                std::to_string(w.period) + ") && r == n - " +
                                std::to_string(w.period) + "*k && r == " + std::to_string(w.r);
      const Bindings bind{{"j", Rational(j)}, {"d", dr}, {"n", nr}, {"k", Rational(w.k)}, {"r", Rational(w.r)}};
      const bool lspace = holds(w.condition, bind);
      cert.verdict = lspace ? Verdict::kTotalLSpace : Verdict::kExcellent;
      cert.justifications.push_back(rule(
          "genus1-periodic",
          "periodic genus one monodromy b(h) = C^d w_j: w1^3 = C^-1, w2^2 = C^-1, w3^3 = C^-2 "
          "reduce b(h)^n, and Sigma_n(K) is a total L-space exactly when the result is in "
          "Baldwin's list, otherwise excellent",
          shape + (lspace ? " && " + w.condition : " && !" + w.condition), bind));
      break;
    }
  }
  cert.justifications.front().citation +=
      "; genus one open books with connected binding on irreducible manifolds are excellent or "
      "total L-spaces";
  return checked(std::move(cert));
}

Certificate certify_satellite(const BraidWord& pattern, const FdtcValue& c_companion,
                              bool companion_exact_zero, std::int64_t n,
                              const Assertions& assertions, ReductionBudget budget) {
  if (n < 2) bad("cover order n must be at least 2");
  if (!assertions.hyperbolic) {
    return unknown("companion hyperbolicity not asserted (use --assert-hyperbolic)");
  }
  Certificate cert;
  if (auto why = pseudo_anosov_status(pattern, assertions, cert)) return unknown(*why);
  cert.assumptions.insert(cert.assumptions.begin(), kHyperbolicCompanion);

  const std::int64_t m = pattern.strands();
  if (std::gcd(m, n) != 1) {
    cert.notes.push_back("gcd(m, n) = " + std::to_string(std::gcd(m, n)) + " != 1");
    return cert;
  }
  const Rational mr(m), nr(n);
  const auto& c = c_companion;

  const bool exact_zero = c.is_exact() && c.lo().sign() == 0;
  if (companion_exact_zero || exact_zero) {
    if (companion_exact_zero) cert.assumptions.push_back("companion c(h) is exactly 0");
    Bindings bind{{"m", mr}, {"n", nr}};
    std::string ineq = "gcd(m, n) == 1";
    if (exact_zero) {
      for (auto& kv : interval_bindings(c)) bind.push_back(kv);
      ineq += " && c_lo == 0 && c_hi == 0";
    }
    cert.justifications.push_back(rule(
        "satellite-companion-zero",
        "braided pseudo-Anosov pattern, fibred hyperbolic companion with c(h) = 0: Sigma_n(L) is "
        "excellent whenever gcd(m, n) = 1",
        ineq, std::move(bind)));
  }

  if (c.certainly_nonzero() && nr * c.min_abs() >= 2) {
    Bindings bind{{"m", mr}, {"n", nr}};
    for (auto& kv : interval_bindings(c)) bind.push_back(kv);
    cert.justifications.push_back(rule(
        "satellite-companion-nonzero",
        "braided pseudo-Anosov pattern, fibred hyperbolic companion with c(h) != 0: Sigma_n(L) is "
        "excellent when gcd(m, n) = 1 and n >= 2/|c(h)|",
        "gcd(m, n) == 1 && n*max(c_lo, -c_hi) >= 2", std::move(bind)));
  }

  const OrderSign pattern_sign = sigma_sign(pattern, budget);
  if (pattern_sign != OrderSign::kNegative && c.certainly_nonnegative()) {
    Bindings bind{{"m", mr}, {"n", nr}, {"pattern_sign", Rational(static_cast<int>(pattern_sign))}};
    for (auto& kv : interval_bindings(c)) bind.push_back(kv);
    cert.justifications.push_back(rule(
        "satellite-nonnegative",
        "pattern with b >=_D 1 has c(b) >= 0; with c(h) >= 0 as well, Sigma_n(L) is excellent for "
        "n >= 2 coprime to m",
        "gcd(m, n) == 1 && n >= 2 && pattern_sign >= 0 && c_lo >= 0", std::move(bind)));
  }

  if (cert.justifications.empty()) {
    cert.notes.push_back("no satellite rule applies for c(h) in " + c.str());
    return cert;
  }
  cert.verdict = Verdict::kExcellent;
  return checked(std::move(cert));
}

}  // namespace braidcert
