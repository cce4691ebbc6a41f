#include "braidcert/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidcert/certify.hpp"
#include "braidcert/corpus.hpp"
#include "braidcert/dehornoy.hpp"
#include "braidcert/error.hpp"
#include "braidcert/fdtc.hpp"
#include "braidcert/three_braid.hpp"

namespace braidcert::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Outcome { kValue, kUnknown, kError };

struct Record {
  Json json = Json::object();
  Outcome outcome = Outcome::kValue;
  std::string certificate_text{};  // canonical record, used by the text report
};

struct Options {
  std::string report = "text";
  ReductionBudget budget;
};

Json fdtc_json(const FdtcValue& c) {
  Json j = Json::object();
  j["kind"] = c.is_exact() ? "exact" : "interval";
  if (c.is_exact()) {
    j["value"] = c.lo().str();
  } else {
    j["lo"] = c.lo().str();
    j["hi"] = c.hi().str();
  }
  j["provenance"] = c.provenance();
  return j;
}

Json certificate_json(const Certificate& cert) {
  Json j = Json::object();
  j["verdict"] = std::string(to_string(cert.verdict));
  Json js = Json::array();
  for (const auto& x : cert.justifications) {
    Json b = Json::object();
    for (const auto& [name, value] : x.bindings) b[name] = value.str();
    js.push_back(Json{{"rule", x.rule}, {"citation", x.citation}, {"inequality", x.inequality}, {"bindings", b}});
  }
  j["justifications"] = js;
  j["assumptions"] = cert.assumptions;
  j["notes"] = cert.notes;
  return j;
}

Record certificate_record(Json base, const Certificate& cert) {
  Record r{std::move(base)};
  r.json["certificate"] = certificate_json(cert);
  r.certificate_text = to_text(cert);
  r.outcome = cert.verdict == Verdict::kUnknown ? Outcome::kUnknown : Outcome::kValue;
  return r;
}

Record error_record(Json base, const std::string& name, const std::string& message) {
  Record r{std::move(base)};
  r.json["error"] = name;
  r.json["message"] = message;
  r.outcome = Outcome::kError;
  return r;
}

// Wraps a record producer so that library failures become error records.
template <typename F>
Record guarded(Json base, F&& produce) {
  try {
    return produce(base);
  } catch (const BraidError& e) {
    return error_record(std::move(base), std::string(e.name()), e.what());
  } catch (const std::exception& e) {
    return error_record(std::move(base), "InternalError", e.what());
  }
}

void print_text_value(std::ostream& out, const std::string& key, const Json& value, int indent);

void print_text(std::ostream& out, const Json& obj, int indent) {
  for (const auto& [key, value] : obj.items()) print_text_value(out, key, value, indent);
}

void print_text_value(std::ostream& out, const std::string& key, const Json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    out << pad << key << ":\n";
    print_text(out, value, indent + 2);
  } else if (value.is_array()) {
    if (value.empty()) return;
    for (const auto& item : value) {
      if (item.is_object()) {
        out << pad << key << ":\n";
        print_text(out, item, indent + 2);
      } else {
        out << pad << key << ": " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
      }
    }
  } else {
    out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

void emit(std::ostream& out, const Options& opts, const Record& r) {
  if (opts.report == "json") {
    out << r.json.dump() << "\n";
  } else {
    for (const auto& [key, value] : r.json.items()) {
      if (key == "certificate") {
        out << "certificate:\n";
        std::istringstream lines(r.certificate_text);
        for (std::string line; std::getline(lines, line);) out << "  " << line << "\n";
      } else {
        print_text_value(out, key, value, 0);
      }
    }
    out << "\n";
  }
}

int exit_status(const std::vector<Record>& records) {
  bool all_unknown = !records.empty();
  for (const auto& r : records) {
    if (r.outcome == Outcome::kError) return kExitError;
    if (r.outcome != Outcome::kUnknown) all_unknown = false;
  }
  return all_unknown ? kExitUnknownOnly : kExitOk;
}

FdtcValue parse_fdtc_option(const std::optional<std::string>& exact, const std::optional<std::string>& lo,
                            const std::optional<std::string>& hi) {
  if (exact) return FdtcValue::exact(Rational::parse(*exact), "user supplied");
  if (lo && hi) return FdtcValue::interval(Rational::parse(*lo), Rational::parse(*hi), "user supplied");
  throw BraidError(ErrorCode::kBadParameters, "give c(h) as --c p/q or as --c-lo and --c-hi");
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw BraidError(ErrorCode::kParseError, what + ": expected an integer, got '" + s + "'");
  }
}

// Record builders shared by subcommands and corpus entries.

Record floor_record(Json base, const BraidWord& b, const Options& opts) {
  return guarded(std::move(base), [&](Json& j) {
    j["floor"] = dehornoy_floor(b, opts.budget);
    return Record{j};
  });
}

Record fdtc_record(Json base, const BraidWord& b, const Rational& tol, const Options& opts) {
  return guarded(std::move(base), [&](Json& j) {
    j["tol"] = tol.str();
    j["fdtc"] = fdtc_json(fdtc_interval(b, tol, opts.budget));
    return Record{j};
  });
}

Record classify_record(Json base, const BraidWord& b) {
  return guarded(std::move(base), [&](Json& j) {
    const auto nf = normal_form(b);
    const auto mat = sl2_image(b);
    j["normal_form"] = to_string(nf);
    j["nt_type"] = std::string(to_string(nt_type(nf)));
    j["central"] = nf.central();
    j["fdtc"] = fdtc_exact_b3(nf).str();
    j["sl2_trace"] = mat.trace().str();
    j["representative"] = to_string(representative(nf));
    return Record{j};
  });
}

Record lspace2_record(Json base, const BraidWord& b) {
  return guarded(std::move(base), [&](Json& j) {
    const auto nf = normal_form(b);
    j["normal_form"] = to_string(nf);
    j["double_cover"] = std::string(to_string(baldwin_lspace_double_cover(nf)));
    return Record{j};
  });
}

Record cover_record(Json base, const BraidWord& b, std::int64_t t, const Assertions& a,
                    const Rational& tol, const Options& opts) {
  return guarded(std::move(base), [&](Json& j) {
    return certificate_record(j, certify_closed_braid_cover(b, t, a, tol, opts.budget));
  });
}

Record genus1_record(Json base, const BraidWord& h, std::int64_t n, const Assertions& a) {
  return guarded(std::move(base), [&](Json& j) { return certificate_record(j, certify_genus1_cover(h, n, a)); });
}

Record satellite_record(Json base, const BraidWord& pattern, const FdtcValue& c, bool zero, std::int64_t n,
                        const Assertions& a, const Options& opts) {
  return guarded(std::move(base), [&](Json& j) {
    return certificate_record(j, certify_satellite(pattern, c, zero, n, a, opts.budget));
  });
}

Record corpus_entry_record(const CorpusEntry& e, const Options& opts) {
  Json base = Json::object();
  base["id"] = e.id;
  base["task"] = std::string(to_string(e.task));
  base["braid"] = to_string(e.braid);
  return guarded(base, [&](Json& j) -> Record {
    Assertions a;
    a.pseudo_anosov = e.flag("pa");
    a.hyperbolic = e.flag("hyperbolic");
    a.irreducible = e.flag("irreducible");
    a.fdtc_nonzero = e.flag("nonzero");
    const Rational tol = e.param("tol") ? Rational::parse(*e.param("tol")) : default_tolerance();
    switch (e.task) {
      case CorpusTask::kFloor: return floor_record(j, e.braid, opts);
      case CorpusTask::kFdtc: return fdtc_record(j, e.braid, tol, opts);
      case CorpusTask::kClassify3: return classify_record(j, e.braid);
      case CorpusTask::kCoverCertify:
        return cover_record(j, e.braid, parse_int(*e.param("t"), "t"), a, tol, opts);
      case CorpusTask::kGenus1: return genus1_record(j, e.braid, parse_int(*e.param("n"), "n"), a);
      case CorpusTask::kSatellite: {
        const bool no_c = !e.param("c") && !e.param("c_lo") && !e.param("c_hi");
        const auto c = e.flag("zero") && no_c
                           ? FdtcValue::exact(0, "asserted zero")
                           : parse_fdtc_option(e.param("c"), e.param("c_lo"), e.param("c_hi"));
        return satellite_record(j, e.braid, c, e.flag("zero"), parse_int(*e.param("n"), "n"), a, opts);
      }
    }
    return Record{j};
  });
}

std::vector<Record> run_corpus(const std::vector<CorpusEntry>& entries, const Options& opts, unsigned jobs) {
  std::vector<Record> records(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      records[i] = corpus_entry_record(entries[i], opts);
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return records;
}

ReductionBudget budget_from_env() {
  ReductionBudget budget;
  if (const char* env = std::getenv(kBudgetEnv)) {
    const std::int64_t v = parse_int(env, kBudgetEnv);
    if (v < 1) throw BraidError(ErrorCode::kBadParameters, std::string(kBudgetEnv) + " must be positive");
    budget.max_length = static_cast<std::size_t>(v);
  }
  return budget;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"braidcert: braid computations and excellence / total L-space certificates"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--report", opts.report, "report format")->check(CLI::IsMember({"text", "json"}));

  std::string word, word2;
  std::string tol_text = "1/12";
  std::int64_t t = 0, n = 0, q = 0, p_orb = 0, m_orb = 0, genus = 0;
  bool assert_pa = false, assert_hyp = false, assert_irr = false, assert_nonzero = false,
       companion_zero = false;
  std::string c_text, c_lo_text, c_hi_text, corpus_path;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto* order = app.add_subcommand("order", "Dehornoy sign of a braid, or comparison of two braids");
  order->add_option("braid", word, "braid word 'm: i1 i2 ...'")->required();
  order->add_option("other", word2, "second braid to compare against");

  auto* floor_cmd = app.add_subcommand("floor", "Dehornoy floor");
  floor_cmd->add_option("braid", word)->required();

  auto* fdtc_cmd = app.add_subcommand("fdtc", "fractional Dehn twist coefficient");
  fdtc_cmd->add_option("braid", word)->required();
  fdtc_cmd->add_option("--tol", tol_text, "interval width bound p/q");

  auto* classify = app.add_subcommand("classify3", "conjugacy class of a 3-braid");
  classify->add_option("braid", word)->required();

  auto* lspace = app.add_subcommand("lspace2", "L-space test for the double branched cover of a closed 3-braid");
  lspace->add_option("braid", word)->required();

  auto* cover = app.add_subcommand("certify-cover", "cyclic branched cover of a closed braid");
  cover->add_option("--word", word)->required();
  cover->add_option("--t", t, "cover order")->required();
  cover->add_option("--tol", tol_text);
  cover->add_flag("--assert-pa", assert_pa);

  auto* g1 = app.add_subcommand("certify-genus1", "cyclic branched cover of a genus one fibred knot");
  g1->add_option("--word", word, "monodromy as a 3-braid (T_c1 -> 1, T_c2 -> 2)")->required();
  g1->add_option("--n", n)->required();
  g1->add_flag("--assert-irreducible", assert_irr);

  auto* surgery = app.add_subcommand("certify-surgery", "cyclic covers of surgeries on a fibred knot");
  surgery->add_option("--c", c_text, "exact c(h) p/q");
  surgery->add_option("--c-lo", c_lo_text);
  surgery->add_option("--c-hi", c_hi_text);
  auto* n_opt = surgery->add_option("--n", n, "cover order n");
  surgery->add_option("--q", q);
  auto* genus_opt = surgery->add_option("--genus", genus);
  auto* p_opt = surgery->add_option("--p", p_orb, "orbifold filling slope p (with --m)");
  auto* m_opt = surgery->add_option("--m", m_orb, "orbifold isotropy order");
  p_opt->needs(m_opt);
  m_opt->needs(p_opt);
  n_opt->excludes(p_opt);
  surgery->add_flag("--assert-hyperbolic", assert_hyp);
  surgery->add_flag("--assert-nonzero", assert_nonzero);

  auto* sat = app.add_subcommand("certify-satellite", "cyclic branched cover of a braided satellite");
  sat->add_option("--pattern", word)->required();
  sat->add_option("--c", c_text, "companion c(h) p/q");
  sat->add_option("--c-lo", c_lo_text);
  sat->add_option("--c-hi", c_hi_text);
  sat->add_flag("--companion-zero", companion_zero);
  sat->add_option("--n", n)->required();
  sat->add_flag("--assert-pa", assert_pa);
  sat->add_flag("--assert-hyperbolic", assert_hyp);

  auto* corpus = app.add_subcommand("corpus", "batch-process a corpus file");
  corpus->add_option("file", corpus_path)->required();
  corpus->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  std::vector<Record> records;
  try {
    opts.budget = budget_from_env();
  } catch (const BraidError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  auto opt = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<std::string>(s); };
  Assertions asserts;
  asserts.pseudo_anosov = assert_pa;
  asserts.hyperbolic = assert_hyp;
  asserts.irreducible = assert_irr;
  asserts.fdtc_nonzero = assert_nonzero;

  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Json base = Json::object();
  base["command"] = name;

  if (name == "corpus") {
    std::ifstream in(corpus_path);
    if (!in) {
      err << "error: cannot open corpus file '" << corpus_path << "'\n";
      return kExitError;
    }
    try {
      records = run_corpus(parse_corpus(in), opts, jobs);
    } catch (const BraidError& e) {
      records.push_back(error_record(base, std::string(e.name()), e.what()));
    }
  } else if (name == "certify-surgery") {
    records.push_back(guarded(base, [&](Json& j) -> Record {
      const auto c = parse_fdtc_option(opt(c_text), opt(c_lo_text), opt(c_hi_text));
      j["c"] = fdtc_json(c);
      if (!p_opt->empty()) {
        j["p"] = p_orb;
        j["q"] = q;
        j["m"] = m_orb;
        return certificate_record(j, certify_orbifold_cover(c, p_orb, q, m_orb, asserts));
      }
      if (n_opt->empty()) throw BraidError(ErrorCode::kBadParameters, "give --n, or --p with --m");
      j["n"] = n;
      j["q"] = q;
      if (c.is_exact()) {
        Json ex = Json::array();
        for (const auto& v : excluded_q(c.lo(), n)) ex.push_back(v.str());
        j["excluded_q"] = ex;
      }
      std::optional<std::int64_t> g;
      if (!genus_opt->empty()) g = genus;
      return certificate_record(j, certify_fibred_cover(c, g, n, q, asserts));
    }));
  } else {
    records.push_back(guarded(base, [&](Json& j) -> Record {
      const BraidWord b = parse_braid(word);
      j["braid"] = to_string(b);
      if (name == "order") {
        if (word2.empty()) {
          j["sign"] = std::string(to_string(sigma_sign(b, opts.budget)));
        } else {
          const BraidWord other = parse_braid(word2);
          j["other"] = to_string(other);
          j["compare"] = std::string(to_string(compare(b, other, opts.budget)));
        }
        return Record{j};
      }
      if (name == "floor") return floor_record(j, b, opts);
      if (name == "fdtc") return fdtc_record(j, b, Rational::parse(tol_text), opts);
      if (name == "classify3") return classify_record(j, b);
      if (name == "lspace2") return lspace2_record(j, b);
      if (name == "certify-cover") return cover_record(j, b, t, asserts, Rational::parse(tol_text), opts);
      if (name == "certify-genus1") {
        j["n"] = n;
        return genus1_record(j, b, n, asserts);
      }
      // certify-satellite
      const bool no_c = c_text.empty() && c_lo_text.empty() && c_hi_text.empty();
      const auto c = companion_zero && no_c ? FdtcValue::exact(0, "asserted zero")
                                            : parse_fdtc_option(opt(c_text), opt(c_lo_text), opt(c_hi_text));
      j["c"] = fdtc_json(c);
      j["n"] = n;
      return satellite_record(j, b, c, companion_zero, n, asserts, opts);
    }));
  }

  for (const auto& r : records) emit(out, opts, r);
  for (const auto& r : records) {
    if (r.outcome == Outcome::kError) err << "error: " << r.json["error"].get<std::string>() << ": "
                                          << r.json["message"].get<std::string>() << "\n";
  }
  return exit_status(records);
}

}  // namespace braidcert::cli
