#pragma once

/// @file io.hpp
/// JSON descriptions of fields, encoders, realizations, weight adjacency
/// grids, and verification certificates. Input validation throws UsageError;
/// serialization is deterministic (insertion-ordered keys, sorted entries).

#include <string>
#include <vector>

#include "json.hpp"

#include "ccode/ccf.hpp"
#include "ccode/duality.hpp"
#include "ccode/poly_matrix.hpp"
#include "ccode/wam.hpp"

namespace ccode {

using Json = nlohmann::ordered_json;

/// {"p": 3} or {"p": 2, "s": 2} with an optional "modulus" (ascending
/// coefficients, monic, length s+1).
const Field& parse_field(const Json& j);
Json field_to_json(const Field& f);

/// {"field": {...}, "k": 2, "n": 3, "G": [[[1,0,1],[2,1],[0]], ...]}:
/// one coefficient list per entry, ascending in D, canonical element indices.
PolyMatrix parse_encoder(const Json& j);
Json encoder_to_json(const PolyMatrix& g);

/// Entries as canonical element indices.
Json matrix_to_json(const FqMatrix& m);

/// Sparse sorted entries [i, j, [c0, c1, ...]] under state order
/// "lex-msb-left" (leftmost state coordinate most significant).
Json wam_to_json(const WamZ& w);

Json profile_to_json(const CodeProfile& p);
Json ccf_to_json(const Ccf& c);
Json checks_to_json(const std::vector<CheckResult>& checks);
Json sigma_to_json(const SigmaReport& r);
Json mw_certificate_to_json(const MwCertificate& cert);
Json sequence_certificate_to_json(const SequenceCertificate& cert);

Json read_json_file(const std::string& path);

} // namespace ccode
