#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testsupport {

inline std::filesystem::path fixtures() { return JUDGCODE_FIXTURES; }

struct Section {
  std::string title;
  std::string body;  // inserted as raw XML content
};

// A judgment in the open-data layout with `body` as the content of the
// uitspraak element; no uitspraak element when `body` is empty.
inline std::string judgment_xml_body(const std::string& ecli, const std::string& date, const std::string& body,
                                     const std::string& court = "Rechtbank Amsterdam") {
  std::string x = R"(<?xml version="1.0" encoding="utf-8"?>
<open-rechtspraak>
  <rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#" xmlns:dcterms="http://purl.org/dc/terms/">
    <rdf:Description>
      <dcterms:identifier>)" + ecli + R"(</dcterms:identifier>
      <dcterms:creator>)" + court + R"(</dcterms:creator>
      <dcterms:date>)" + date + R"(</dcterms:date>
      <dcterms:type>Uitspraak</dcterms:type>
    </rdf:Description>
  </rdf:RDF>
)";
  if (!body.empty()) x += "  <uitspraak>" + body + "</uitspraak>\n";
  return x + "</open-rechtspraak>\n";
}

// A judgment in the open-data layout.
inline std::string judgment_xml(const std::string& ecli, const std::string& date, const std::vector<Section>& sections,
                                const std::string& preamble = "", const std::string& summary = "",
                                const std::string& court = "Rechtbank Amsterdam",
                                const std::string& subject = "Strafrecht") {
  std::string x = R"(<?xml version="1.0" encoding="utf-8"?>
<open-rechtspraak>
  <rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#" xmlns:dcterms="http://purl.org/dc/terms/" xmlns:psi="http://psi.rechtspraak.nl/">
    <rdf:Description>
      <dcterms:identifier>)" + ecli + R"(</dcterms:identifier>
      <dcterms:language>nl</dcterms:language>
      <dcterms:creator>)" + court + R"(</dcterms:creator>
      <dcterms:date>)" + date + R"(</dcterms:date>
      <psi:zaaknummer>13/000001-19</psi:zaaknummer>
      <dcterms:type>Uitspraak</dcterms:type>
      <dcterms:subject>)" + subject + R"(</dcterms:subject>
    </rdf:Description>
  </rdf:RDF>
)";
  if (!summary.empty()) x += "  <inhoudsindicatie><para>" + summary + "</para></inhoudsindicatie>\n";
  if (sections.empty() && preamble.empty()) {
    x += "</open-rechtspraak>\n";
    return x;
  }
  x += "  <uitspraak>\n";
  if (!preamble.empty()) x += "    <uitspraak.info><para>" + preamble + "</para></uitspraak.info>\n";
  for (const auto& s : sections)
    x += "    <section>\n      <title>" + s.title + "</title>\n      <para>" + s.body + "</para>\n    </section>\n";
  x += "  </uitspraak>\n</open-rechtspraak>\n";
  return x;
}

// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("judgcode_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace testsupport
