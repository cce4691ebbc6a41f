#include "braidcert/corpus.hpp"

#include <set>
#include <sstream>

#include "braidcert/error.hpp"

namespace braidcert {

namespace {

constexpr std::pair<CorpusTask, std::string_view> kTaskNames[] = {
    {CorpusTask::kFloor, "floor"},       {CorpusTask::kFdtc, "fdtc"},
    {CorpusTask::kClassify3, "classify3"}, {CorpusTask::kCoverCertify, "cover"},
    {CorpusTask::kGenus1, "genus1"},     {CorpusTask::kSatellite, "satellite"},
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(s);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void line_error(std::size_t line, const std::string& why) {
  throw BraidError(ErrorCode::kParseError, "corpus line " + std::to_string(line) + ": " + why);
}

}  // namespace

std::string_view to_string(CorpusTask task) {
  for (const auto& [t, name] : kTaskNames) {
    if (t == task) return name;
  }
  return "?";
}

std::optional<CorpusTask> parse_task(std::string_view name) {
  for (const auto& [t, n] : kTaskNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

std::optional<std::string> CorpusEntry::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

bool CorpusEntry::flag(const std::string& key) const {
  auto v = param(key);
  return v && (*v == "1" || *v == "true");
}

std::vector<std::string> required_params(CorpusTask task) {
  switch (task) {
    case CorpusTask::kCoverCertify: return {"t"};
    case CorpusTask::kGenus1: return {"n"};
    case CorpusTask::kSatellite: return {"n"};
    default: return {};
  }
}

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> entries;
  std::set<std::string> ids;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split(raw, '\t');
    if (fields.size() != 4) {
      line_error(line_no, "expected 4 tab-separated fields, got " + std::to_string(fields.size()));
    }
    const std::string id = trim(fields[0]);
    if (id.empty()) line_error(line_no, "empty id");
    if (!ids.insert(id).second) line_error(line_no, "duplicate id '" + id + "'");
    const auto task = parse_task(trim(fields[1]));
    if (!task) line_error(line_no, "unknown task '" + trim(fields[1]) + "'");

    std::map<std::string, std::string> params;
    const std::string p = trim(fields[2]);
    if (p != "-" && !p.empty()) {
      for (const auto& kv : split(p, ',')) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) line_error(line_no, "parameter '" + kv + "' is not key=value");
        params[trim(kv.substr(0, eq))] = trim(kv.substr(eq + 1));
      }
    }
    for (const auto& key : required_params(*task)) {
      if (!params.count(key)) {
        line_error(line_no, "task " + std::string(to_string(*task)) + " needs parameter '" + key + "'");
      }
    }

    BraidWord braid(2);
    try {
      braid = parse_braid(fields[3]);
    } catch (const BraidError& e) {
      line_error(line_no, e.what());
    }
    entries.push_back({id, *task, std::move(params), std::move(braid), line_no});
  }
  return entries;
}

}  // namespace braidcert
