#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidcert/braid.hpp"

namespace braidcert {

enum class CorpusTask { kFloor, kFdtc, kClassify3, kCoverCertify, kGenus1, kSatellite };

std::string_view to_string(CorpusTask task);
std::optional<CorpusTask> parse_task(std::string_view name);

// One line of a corpus file:
//   id <TAB> task <TAB> params <TAB> braid
// params is "-" or comma-separated key=value pairs, e.g. "t=4,pa=1".
struct CorpusEntry {
  std::string id;
  CorpusTask task;
  std::map<std::string, std::string> params;
  BraidWord braid;
  std::size_t line = 0;

  std::optional<std::string> param(const std::string& key) const;
  bool flag(const std::string& key) const;  // "1" or "true"
};

// Parameters each task requires; parse_corpus rejects entries missing one.
std::vector<std::string> required_params(CorpusTask task);

// Blank lines and lines starting with '#' are skipped. Throws ParseError
// naming the line on malformed input or duplicate ids.
std::vector<CorpusEntry> parse_corpus(std::istream& in);

}  // namespace braidcert
