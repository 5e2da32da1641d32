#pragma once

// Instance file formats and JSON serialization of reports.
//
// Instances are read from either
//   JSON        {"points": n, "lines": [[i, ...], ...]}
//   plain text  first content line "n", then one whitespace-separated line of
//               point indices per line; '#' starts a comment line
//   one-line    "n: i j k | i j | ..." as streamed by `enum`
// All point indices are 0-based.

#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <json.hpp>

#include "linspace/classify.hpp"
#include "linspace/exact_linalg.hpp"
#include "linspace/hanani.hpp"
#include "linspace/incidence.hpp"
#include "linspace/matching.hpp"

namespace linspace {

/// Malformed instance text (not a format problem of the structure itself).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

IncidenceStructure parse_instance(std::string_view text);

std::string to_text(const IncidenceStructure& s);
std::string to_line(const IncidenceStructure& s);
nlohmann::json to_json(const IncidenceStructure& s);

/// 64-bit FNV-1a of the one-line encoding, as 16 hex digits.
std::string content_hash(const IncidenceStructure& s);

/// Canonical "num/den" form; integers print without a denominator.
std::string rational_string(const mpq_class& q);

nlohmann::json to_json(const ValidationDetail& d);
nlohmann::json to_json(const DegreeProfile& p);
nlohmann::json to_json(const DoubleCount& d);
nlohmann::json to_json(const DbeTable& t, bool include_rows);
nlohmann::json to_json(const SdrCertificate& c);
nlohmann::json to_json(const HallResult& h);
nlohmann::json to_json(const MatchingResult& r);
nlohmann::json to_json(const SdrSumReport& r);
nlohmann::json to_json(const ProofTrace& t);
nlohmann::json to_json(const CyclicCertificate& c);
nlohmann::json to_json(const BkcReport& r);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const IntersectionReport& r);
nlohmann::json to_json(const GramReport& r);
nlohmann::json to_json(const HananiReport& r);
nlohmann::json to_json(const HananiBounds& b);
nlohmann::json to_json(const MinDegreeBoundsReport& r);

/// Reads {"sdr": {"0": 2, ...}} back into a certificate with `line_count` lines.
SdrCertificate sdr_from_json(const nlohmann::json& j, std::size_t line_count);

}  // namespace linspace
