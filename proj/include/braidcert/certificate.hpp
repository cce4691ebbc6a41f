#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidcert/expression.hpp"

namespace braidcert {

enum class Verdict { kExcellent, kTotalLSpace, kLSpace, kNotLSpace, kUnknown };

std::string_view to_string(Verdict v);

// One rule application: `inequality` is written in the expression language
// of expression.hpp and must evaluate to true under `bindings`.
struct Justification {
  std::string rule;
  std::string citation;
  std::string inequality;
  Bindings bindings;
};

struct Certificate {
  Verdict verdict = Verdict::kUnknown;
  std::vector<Justification> justifications;
  // Hypotheses that were asserted by the caller and used.
  std::vector<std::string> assumptions;
  // Free-form remarks, e.g. which hypothesis failed for an Unknown verdict.
  std::vector<std::string> notes;
};

// Canonical record, fixed field order:
//   verdict: <Verdict>
//   justification: <rule>
//     citation: ...
//     inequality: ...
//     bindings: name=value ...
//   assumption: ...
//   note: ...
std::string to_text(const Certificate& cert);

struct ReplayReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Re-evaluates every cited inequality with the expression evaluator,
// independently of the code that produced the certificate.
ReplayReport replay(const Certificate& cert);

}  // namespace braidcert
