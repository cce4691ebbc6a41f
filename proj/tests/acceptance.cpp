// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "braidcert/certify.hpp"
#include "braidcert/dehornoy.hpp"
#include "braidcert/error.hpp"
#include "braidcert/fdtc.hpp"
#include "braidcert/three_braid.hpp"
#include "oracles.hpp"

using namespace braidcert;

namespace {

const BraidWord kC = delta(3).pow(2);

// Certificates emitted by criteria 1-6, replayed by criterion 7.
std::vector<Certificate> emitted;

void keep(const Certificate& cert) {
  if (cert.verdict == Verdict::kExcellent || cert.verdict == Verdict::kTotalLSpace) {
    emitted.push_back(cert);
  }
}

struct Outcome {
  bool ok;
  std::string detail;
};

bool report(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = o.ok;
  if (limit_s > 0 && secs > limit_s) {
    ok = false;
    o.detail += "; over the " + std::to_string(static_cast<int>(limit_s)) + " s limit";
  }
  std::printf("%s %d %s: %s (%.2f s)\n", ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  std::fflush(stdout);
  return ok;
}

BraidWord w(int j) { return BraidWord::generator(3, 1, -j) * BraidWord(3, {-2}); }

Assertions irreducible() {
  Assertions a;
  a.irreducible = true;
  return a;
}

Outcome genus_one_table() {
  // (j, d) -> largest n with a total L-space cover; any n in [2, max] qualifies.
  const auto expected_total = [](int j, int d, int n) {
    if (j == 1) return (d == 0 && n <= 5) || (d == 1 && n == 2);
    if (j == 2) return (d == 0 && n <= 3) || (d == 1 && n <= 3);
    return (d == 0 && n == 2) || (d == 1 && n <= 5);
  };
  int mismatches = 0, total = 0, cases = 0;
  std::string first;
  for (int j = 1; j <= 3; ++j) {
    for (int d = -6; d <= 6; ++d) {
      const BraidWord h = kC.pow(d) * w(j);
      for (int n = 2; n <= 12; ++n) {
        const auto cert = certify_genus1_cover(h, n, irreducible());
        keep(cert);
        ++cases;
        const bool got = cert.verdict == Verdict::kTotalLSpace;
        total += got;
        if (got != expected_total(j, d, n) || cert.verdict == Verdict::kUnknown) {
          if (!mismatches++) {
            first = " first at w" + std::to_string(j) + " d=" + std::to_string(d) + " n=" + std::to_string(n);
          }
        }
      }
    }
  }
  return {mismatches == 0, std::to_string(cases) + " cases, " + std::to_string(total) +
                               " TotalLSpace, " + std::to_string(mismatches) + " mismatches" + first};
}

Outcome baldwin_consistency() {
  std::mt19937_64 rng(2024);
  int checked = 0, skipped = 0, mismatches = 0, lspace = 0;
  while (checked < 600) {
    const auto h = oracle::random_word(rng, 3, 30, 10);
    Certificate cert;
    try {
      cert = certify_genus1_cover(h, 2, irreducible());
    } catch (const BraidError& e) {
      if (e.code() != ErrorCode::kSplitBinding) throw;
      ++skipped;
      continue;
    }
    keep(cert);
    const bool baldwin = baldwin_lspace_double_cover(normal_form(h.pow(2))) == LSpaceStatus::kLSpace;
    lspace += baldwin;
    if ((cert.verdict == Verdict::kTotalLSpace) != baldwin) ++mismatches;
    ++checked;
  }
  return {mismatches == 0, std::to_string(checked) + " braids (" + std::to_string(lspace) +
                               " L-space), " + std::to_string(skipped) + " split-binding skipped, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome fdtc_exactness() {
  std::mt19937_64 rng(77);
  int failures = 0, checked = 0;
  const auto check = [&](const BraidWord& b, const Rational& want) {
    ++checked;
    const Rational got = fdtc_exact_b3(b);
    const auto enclosure = fdtc_floor_interval(b, 24);
    if (got != want || !enclosure.contains(got) || enclosure.width() > Rational(1, 24)) ++failures;
  };
  std::uniform_int_distribution<int> dd(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = dd(rng);
    std::vector<Letter> tail;
    const int blocks = 1 + static_cast<int>(rng() % 3);
    bool positive_a = false;
    for (int i = 0; i < blocks; ++i) {
      tail.push_back(1);
      int a = static_cast<int>(rng() % 3);
      if (i == blocks - 1 && !positive_a) a = std::max(a, 1);
      positive_a = positive_a || a > 0;
      tail.insert(tail.end(), static_cast<std::size_t>(a), -2);
    }
    check(kC.pow(d) * BraidWord(3, tail), Rational(d));
  }
  for (int d = -5; d <= 5; ++d) {
    check(kC.pow(d) * w(1), Rational(d) - Rational(1, 3));
    check(kC.pow(d) * w(2), Rational(d) - Rational(1, 2));
    check(kC.pow(d) * w(3), Rational(d) - Rational(2, 3));
  }
  return {failures == 0, std::to_string(checked) + " braids, " + std::to_string(failures) + " failures"};
}

Outcome floor_identities() {
  int failures = 0, checked = 0;
  for (int m : {3, 4, 5}) {
    for (int d = -5; d <= 5; ++d) {
      ++checked;
      if (dehornoy_floor(delta(m).pow(2 * d)) != std::abs(d)) ++failures;
    }
  }
  for (int k = 1; k <= 30; ++k) {
    ++checked;
    if (dehornoy_floor(BraidWord::generator(3, 2, k)) != 0) ++failures;
  }
  return {failures == 0, std::to_string(checked) + " identities, " + std::to_string(failures) + " failures"};
}

Outcome lift_formula() {
  int failures = 0;
  if (fdtc_lift(Rational(5, 4), 4, 3) != Rational(5, 12)) ++failures;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const Rational c(BigInt(static_cast<long long>(rng() % 2001) - 1000),
                     BigInt(1 + static_cast<long long>(rng() % 500)));
    const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 30);
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 60);
    if (fdtc_lift(c, m, 1) != c) ++failures;
    if (fdtc_lift(c, m, n) != Rational(std::gcd(m, n)) / Rational(n) * c) ++failures;
  }
  return {failures == 0, "c = 5/4 lifts to " + fdtc_lift(Rational(5, 4), 4, 3).str() +
                             "; 1000 random triples, " + std::to_string(failures) + " failures"};
}

Outcome order_axioms() {
  std::mt19937_64 rng(99);
  int violations = 0;
  const auto neg = [](Ordering o) { return static_cast<Ordering>(-static_cast<int>(o)); };
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 2 + trial % 4;
    const auto u = oracle::random_word(rng, m, 40, 30);
    const auto v = oracle::random_word(rng, m, 40, 30);
    const auto x = oracle::random_word(rng, m, 40, 30);
    const auto uv = compare(u, v), vx = compare(v, x), ux = compare(u, x);
    // Trichotomy and antisymmetry.
    if (compare(v, u) != neg(uv)) ++violations;
    if ((uv == Ordering::kEqual) != is_trivial(u.inverse() * v)) ++violations;
    // Transitivity, both directions.
    if (uv == Ordering::kLess && vx == Ordering::kLess && ux != Ordering::kLess) ++violations;
    if (uv == Ordering::kGreater && vx == Ordering::kGreater && ux != Ordering::kGreater) ++violations;
    if (compare(x * u, x * v) != uv) ++violations;
    if (sigma_sign(oracle::random_positive_word(rng, m, 40)) != OrderSign::kPositive) ++violations;
    const auto c = delta(m).pow(2);
    if (!is_trivial(c * u * c.inverse() * u.inverse())) ++violations;
  }
  return {violations == 0, "1000 triples, " + std::to_string(violations) + " violations"};
}

// More certificates of each kind for the replay suite.
void extra_certificates() {
  Assertions hyp;
  hyp.hyperbolic = true;
  Assertions pa;
  pa.pseudo_anosov = true;
  pa.hyperbolic = true;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational c(BigInt(static_cast<int>(rng() % 41) - 20), BigInt(1 + static_cast<int>(rng() % 8)));
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 8);
    const std::int64_t q = static_cast<std::int64_t>(rng() % 11) - 5;
    keep(certify_fibred_cover(FdtcValue::exact(c), 1 + trial % 3, n, q, hyp));
    keep(certify_fibred_cover(FdtcValue::interval(c, c + Rational(1, 10)), std::nullopt, n, q, hyp));
    if (std::gcd<std::int64_t>(n, q) == 1) keep(certify_orbifold_cover(FdtcValue::exact(c), n, q, 3, hyp));
    keep(certify_satellite(BraidWord(3, {1, -2}), FdtcValue::exact(c), false, 2 + trial % 5, hyp));
  }
  for (int d = -4; d <= 4; ++d) {
    for (int t = 2; t <= 8; ++t) {
      keep(certify_closed_braid_cover(kC.pow(d) * BraidWord(3, {1, -2, -2}), t, {}));
    }
  }
  keep(certify_closed_braid_cover(delta(4).pow(10) * BraidWord(4, {1, -2, 3}), 3, pa));
}

Outcome replay_all() {
  extra_certificates();
  int failures = 0;
  std::set<std::string> rules;
  for (const auto& cert : emitted) {
    if (!replay(cert).ok) ++failures;
    for (const auto& j : cert.justifications) rules.insert(j.rule);
  }
  return {failures == 0 && !emitted.empty(),
          std::to_string(emitted.size()) + " certificates over " + std::to_string(rules.size()) +
              " rules, " + std::to_string(failures) + " replay failures"};
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "genus-one table", 10, genus_one_table);
  ok &= report(2, "Baldwin consistency", 0, baldwin_consistency);
  ok &= report(3, "FDTC exactness", 60, fdtc_exactness);
  ok &= report(4, "floor identities", 0, floor_identities);
  ok &= report(5, "lift formula", 0, lift_formula);
  ok &= report(6, "order axioms", 120, order_axioms);
  ok &= report(7, "certificate replay", 0, replay_all);
  return ok ? 0 : 1;
}
