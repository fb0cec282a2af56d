#include "judgcode/fetch.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <thread>

#include <expat.h>
#include <fmt/format.h>
#include <httplib.h>

#include "judgcode/errors.hpp"
#include "judgcode/ingest.hpp"
#include "judgcode/tables.hpp"
#include "judgcode/text.hpp"

namespace fs = std::filesystem;

namespace judgcode::fetch {

std::string default_endpoint() {
  const char* env = std::getenv(kEndpointEnv);
  return env && *env ? std::string(env) : std::string(kDefaultEndpoint);
}

std::string ecli_filename(std::string_view ecli) {
  std::string name(ecli);
  for (char& c : name)
    if (c == ':') c = '_';
  return name + ".xml";
}

namespace {

struct IndexState {
  int depth = 0;
  int entry_depth = -1;
  bool in_id = false;
  std::string id;
  size_t entry_index = 0;
  std::vector<std::string> eclis;
  std::string error;
};

std::string_view local(const XML_Char* q) {
  std::string_view n(q);
  auto c = n.rfind(':');
  return c == std::string_view::npos ? n : n.substr(c + 1);
}

void XMLCALL index_start(void* data, const XML_Char* name, const XML_Char**) {
  auto* st = static_cast<IndexState*>(data);
  ++st->depth;
  std::string_view n = local(name);
  if (n == "entry" && st->entry_depth < 0) {
    st->entry_depth = st->depth;
    st->id.clear();
    ++st->entry_index;
  } else if (n == "id" && st->entry_depth >= 0 && st->depth == st->entry_depth + 1) {
    st->in_id = true;
  }
}

void XMLCALL index_end(void* data, const XML_Char*) {
  auto* st = static_cast<IndexState*>(data);
  if (st->in_id) st->in_id = false;
  if (st->depth == st->entry_depth) {
    std::string id = trim(st->id);
    if (id.rfind("ECLI:", 0) != 0) {
      if (st->error.empty())
        st->error = fmt::format("index entry {} has no ECLI id (got '{}')", st->entry_index, id);
    } else {
      st->eclis.push_back(std::move(id));
    }
    st->entry_depth = -1;
  }
  --st->depth;
}

void XMLCALL index_text(void* data, const XML_Char* s, int len) {
  auto* st = static_cast<IndexState*>(data);
  if (st->in_id) st->id.append(s, static_cast<size_t>(len));
}

// Writes `bytes` to `path` unless an identical file is already there.
// Returns true when the file was written.
bool store(const fs::path& path, std::string_view bytes) {
  std::error_code ec;
  if (fs::exists(path, ec)) {
    std::string existing = read_file(path);
    if (ingest::sha256_hex(existing) == ingest::sha256_hex(bytes)) return false;
  }
  fs::path tmp = path;
  tmp += ".part";
  write_file(tmp, bytes);
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
  return true;
}

void record(FetchResult& r, const fs::path& path, std::string_view bytes) {
  if (store(path, bytes)) {
    ++r.written;
    r.bytes_written += bytes.size();
  } else {
    ++r.skipped;
  }
  ++r.stored;
}

FetchResult fetch_local(const FetchOptions& o) {
  fs::path src(o.source);
  if (!fs::is_directory(src)) throw IoError("source directory not found: " + o.source);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(src))
    if (e.is_regular_file() && e.path().extension() == ".xml") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  FetchResult r;
  for (const auto& f : files) {
    std::string bytes = read_file(f);
    JudgmentDocument doc;
    try {
      doc = ingest::normalize_judgment(bytes);
    } catch (const Error& e) {
      r.failures.push_back(f.filename().string() + ": " + e.what());
      continue;
    }
    if (doc.meta.decision_date < o.from || doc.meta.decision_date > o.to) continue;
    record(r, o.out / ecli_filename(doc.meta.ecli), bytes);
  }
  return r;
}

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string base;    // path prefix without trailing slash
};

Endpoint split_url(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw InvalidArgument("not a URL: " + url);
  auto path_begin = url.find('/', scheme_end + 3);
  Endpoint e;
  e.origin = url.substr(0, path_begin);
  e.base = path_begin == std::string::npos ? "" : url.substr(path_begin);
  while (!e.base.empty() && e.base.back() == '/') e.base.pop_back();
  return e;
}

class HttpSource {
 public:
  HttpSource(const FetchOptions& o) : opts_(o), ep_(split_url(o.source)), client_(ep_.origin) {
    client_.set_connection_timeout(10);
    client_.set_read_timeout(60);
    client_.set_follow_location(true);
  }

  std::string get(const std::string& path_and_query) {
    std::string last_error;
    for (int attempt = 1; attempt <= std::max(1, opts_.max_attempts); ++attempt) {
      auto res = client_.Get(ep_.base + path_and_query);
      if (res && res->status == 200) return res->body;
      bool retriable = !res || res->status >= 500 || res->status == 429;
      last_error = res ? fmt::format("HTTP {} for {}", res->status, path_and_query)
                       : fmt::format("{} for {}", httplib::to_string(res.error()), path_and_query);
      if (!retriable) throw NetworkError(last_error, false);
      if (attempt < opts_.max_attempts)
        std::this_thread::sleep_for(std::chrono::milliseconds(opts_.retry_delay_ms * attempt));
    }
    throw NetworkError(last_error + " (gave up after retries)", true);
  }

 private:
  const FetchOptions& opts_;
  Endpoint ep_;
  httplib::Client client_;
};

FetchResult fetch_http(const FetchOptions& o) {
  HttpSource http(o);
  std::vector<std::string> eclis;
  for (int offset = 0;; offset += o.page_size) {
    httplib::Params q;
    q.emplace("date", format_iso_date(o.from));
    q.emplace("date", format_iso_date(o.to));
    q.emplace("max", std::to_string(o.page_size));
    q.emplace("from", std::to_string(offset));
    q.emplace("return", "DOC");
    for (const auto& [k, v] : o.params) q.emplace(k, v);
    std::vector<std::string> page = parse_index(http.get("/zoeken?" + httplib::detail::params_to_query_str(q)));
    eclis.insert(eclis.end(), page.begin(), page.end());
    if (static_cast<int>(page.size()) < o.page_size) break;
  }
  std::sort(eclis.begin(), eclis.end());
  eclis.erase(std::unique(eclis.begin(), eclis.end()), eclis.end());

  FetchResult r;
  for (const auto& ecli : eclis) {
    std::string bytes = http.get("/content?id=" + httplib::detail::encode_query_param(ecli));
    record(r, o.out / ecli_filename(ecli), bytes);
  }
  return r;
}

}  // namespace

std::vector<std::string> parse_index(std::string_view atom) {
  IndexState st;
  std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(XML_ParserCreate("UTF-8"),
                                                                      &XML_ParserFree);
  XML_SetUserData(parser.get(), &st);
  XML_SetElementHandler(parser.get(), index_start, index_end);
  XML_SetCharacterDataHandler(parser.get(), index_text);
  if (XML_Parse(parser.get(), atom.data(), static_cast<int>(atom.size()), XML_TRUE) == XML_STATUS_ERROR) {
    long line = static_cast<long>(XML_GetCurrentLineNumber(parser.get()));
    long col = static_cast<long>(XML_GetCurrentColumnNumber(parser.get())) + 1;
    throw ParseError(fmt::format("malformed index response at {}:{} (after entry {}): {}", line, col,
                                 st.entry_index, XML_ErrorString(XML_GetErrorCode(parser.get()))),
                     line, col);
  }
  if (!st.error.empty()) throw ParseError(st.error);
  return st.eclis;
}

FetchResult fetch_judgments(const FetchOptions& o) {
  if (o.to < o.from) throw InvalidArgument("date range is not well-ordered");
  if (o.source.empty()) throw InvalidArgument("no source given");
  if (o.out.empty()) throw InvalidArgument("no output directory given");
  if (o.page_size <= 0) throw InvalidArgument("page size must be positive");
  std::error_code ec;
  fs::create_directories(o.out, ec);
  if (ec) throw IoError("cannot create " + o.out.string() + ": " + ec.message());
  bool is_url = o.source.rfind("http://", 0) == 0 || o.source.rfind("https://", 0) == 0;
  return is_url ? fetch_http(o) : fetch_local(o);
}

}  // namespace judgcode::fetch
