#pragma once

#include <oddom/perfect_code.hpp>
#include <oddom/search.hpp>
#include <oddom/solvers.hpp>
#include <oddom/wod.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace oddom::report {

using json = nlohmann::json;

inline constexpr const char * tool_version = "0.1.0";

/// Malformed or ill-typed certificate document.
class FormatError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Ascending array of vertex indices.
json vertex_array(const VertexSet & s);

/// Reads a vertex array against a universe; rejects duplicates and out-of-range entries.
VertexSet read_vertex_array(const json & value, int universe, const char * field);

/// {"value", "witness", "bounds", "set"} for kappa and kappa_prime;
/// kappa_q additionally carries both component values and witnesses.
json extremal_json(const Graph & g, const ExtremalResult & r);

json bounds_json(const Bounds & b);

/// Certificate document: {"kind": "WOD"|"NON_WOD", "set": [...B], "witness": [...]}.
json certificate_json(const VertexSet & b, const WodCertificate & cert);

struct CertificateDocument
{
    VertexSet set;
    WodCertificate certificate;
};

/// Parses a certificate document for a graph of order n. Throws FormatError.
CertificateDocument read_certificate(const json & doc, int n);

json perfect_code_json(const std::optional<PerfectCode> & code);

/// One JSON-lines record; elapsed_ms is omitted when `timing` is false.
json trial_json(const TrialReport & r, bool timing);
json summary_json(const TrialSummary & s);

/// Compact single-line dump with sorted keys.
std::string dump_line(const json & j);

} // namespace oddom::report
