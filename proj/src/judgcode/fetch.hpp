#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "judgcode/document.hpp"

namespace judgcode::fetch {

inline constexpr const char* kDefaultEndpoint = "https://data.rechtspraak.nl/uitspraken";
inline constexpr const char* kEndpointEnv = "JUDGCODE_ENDPOINT";

struct FetchOptions {
  std::string source;  // http(s) URL or local directory
  Date from{};
  Date to{};
  std::filesystem::path out;
  // Extra query parameters for the index request, e.g. {"subject", "...strafrecht"}.
  std::vector<std::pair<std::string, std::string>> params;
  int page_size = 1000;
  int max_attempts = 3;
  int retry_delay_ms = 500;
};

struct FetchResult {
  size_t stored = 0;         // documents present in `out` after the run
  size_t written = 0;        // files (re)written
  size_t skipped = 0;        // checksum already matched
  size_t bytes_written = 0;
  std::vector<std::string> failures;  // "<id>: <reason>" for per-document problems
};

// Endpoint from the environment override, else the public default.
std::string default_endpoint();

// "ECLI:NL:RBMNE:2014:4790" -> "ECLI_NL_RBMNE_2014_4790.xml"
std::string ecli_filename(std::string_view ecli);

// ECLIs listed in an Atom index page. Throws ParseError naming the entry
// when an entry has no ECLI id.
std::vector<std::string> parse_index(std::string_view atom);

// Stores one XML file per judgment. Network failures surface as NetworkError
// after retries; files whose checksum already matches are not rewritten.
FetchResult fetch_judgments(const FetchOptions& options);

}  // namespace judgcode::fetch
