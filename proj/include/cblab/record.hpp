#pragma once

#include <string>

#include <json.hpp>

#include "cblab/blaschke.hpp"
#include "cblab/landen.hpp"
#include "cblab/theta.hpp"

namespace cblab::record {

using Json = nlohmann::ordered_json;

// Deterministic text: keys in insertion order, two-space indent, floats at 17
// significant digits, trailing zeros kept. DomainError on NaN or
// infinity, which never belong in a document.
std::string dump(const Json& doc);

// Header row plus records. A payload holding a "records" array gives one row
// per element; anything else is a single row. Nested objects flatten to
// dotted keys and arrays to key.0, key.1, ..; columns are the union of keys
// in first-seen order. Fields are quoted when they contain , " CR or LF.
std::string to_csv(const Json& payload);

Json complex_value(Complex z);  // {"re": .., "im": ..}

// {n, tau_im, b[], S[], parity}. Off the imaginary axis the record also
// carries tau_re and the entries of b and S become [re, im] pairs.
Json chebyshev_blaschke(const ChebyshevBlaschke& cb);
// Inverse of the above; ParseError on a malformed record.
ChebyshevBlaschke chebyshev_blaschke_from(const Json& rec, const SeriesConfig& series = {});

Json identity_report(const IdentityReport& report);

}  // namespace cblab::record
