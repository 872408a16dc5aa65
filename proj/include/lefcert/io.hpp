#pragma once

#include "lefcert/certifier.hpp"
#include "lefcert/fibration.hpp"
#include "lefcert/invariants.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace lefcert {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct ParseResult {
  FibrationDescription fd;
  std::vector<std::string> warnings;  // unknown-field notes in non-strict mode
};

/// Parses and validates a fibration document. Shape problems raise
/// SchemaError with a field path; semantic problems are forwarded from
/// validation with the fiber index in the message.
ParseResult parse_fibration_document(const std::string& text, bool strict = false);

/// Canonical serialization: fixed key order, integers and fraction strings
/// only, two-space indent, trailing newline. parse(serialize(fd)) == fd.
std::string serialize_fibration_document(const FibrationDescription& fd);

Json fibration_to_json(const FibrationDescription& fd);
Json invariants_to_json(const InvariantReport& report);
Json certificate_to_json(const CertificateReport& cert);

std::string render_invariants_text(const InvariantReport& report);
std::string render_certificate_text(const CertificateReport& cert);

/// One line per verdict: id, status, slack, citation label.
std::string render_verdict_line(const InequalityVerdict& v);

std::string dump_canonical(const Json& j);

}  // namespace lefcert
