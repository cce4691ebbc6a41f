#include "braidcert/certificate.hpp"

#include "braidcert/error.hpp"

namespace braidcert {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kExcellent: return "Excellent";
    case Verdict::kTotalLSpace: return "TotalLSpace";
    case Verdict::kLSpace: return "LSpace";
    case Verdict::kNotLSpace: return "NotLSpace";
    case Verdict::kUnknown: return "Unknown";
  }
  return "?";
}

std::string to_text(const Certificate& cert) {
  std::string out = "verdict: " + std::string(to_string(cert.verdict)) + "\n";
  for (const auto& j : cert.justifications) {
    out += "justification: " + j.rule + "\n";
    out += "  citation: " + j.citation + "\n";
    out += "  inequality: " + j.inequality + "\n";
    out += "  bindings:";
    for (const auto& [name, value] : j.bindings) out += " " + name + "=" + value.str();
    out += "\n";
  }
  for (const auto& a : cert.assumptions) out += "assumption: " + a + "\n";
  for (const auto& n : cert.notes) out += "note: " + n + "\n";
  return out;
}

ReplayReport replay(const Certificate& cert) {
  ReplayReport report;
  auto fail = [&](std::string why) {
    report.ok = false;
    report.failures.push_back(std::move(why));
  };
  if (cert.verdict != Verdict::kUnknown && cert.justifications.empty()) {
    fail("verdict " + std::string(to_string(cert.verdict)) + " has no justification");
  }
  for (const auto& j : cert.justifications) {
    if (j.rule.empty() || j.citation.empty()) fail("justification without rule id or citation");
    try {
      if (!holds(j.inequality, j.bindings)) fail(j.rule + ": '" + j.inequality + "' is false");
    } catch (const BraidError& e) {
      fail(j.rule + ": " + e.what());
    }
  }
  return report;
}

}  // namespace braidcert
