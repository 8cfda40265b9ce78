#pragma once

#include <string>
#include <vector>

#include "arrcomb/arrangement.hpp"
#include "arrcomb/bijection.hpp"
#include "arrcomb/faces.hpp"
#include "arrcomb/identities.hpp"
#include "arrcomb/polynomial.hpp"
#include "arrcomb/series.hpp"
#include "json.hpp"

// JSON and CSV encodings. Rationals are strings "p/q" or "p"; vertex indices
// and partition elements are 1-based; face ids are 0-based positions in the
// canonical face order.
namespace arrcomb::io {

using Json = nlohmann::json;

Json to_json(const Arrangement& a);
/// Throws ParseError for malformed JSON structure, InvalidSpec for a
/// well-formed but invalid arrangement. A "hyperplanes" list given next to
/// a deformed braid or type B spec must match the one the spec generates.
Arrangement arrangement_from_json(const Json& j);
Arrangement read_arrangement(const std::string& path);
/// Key-sorted compact dump; the basis for cache keys.
std::string canonical_text(const Arrangement& a);

Json to_json(const BivariatePolynomial& p);
BivariatePolynomial polynomial_from_json(const Json& j);

Json to_json(const Face& f, std::size_t id);
Json to_json(const std::vector<Face>& faces);
/// Reads a face against the arrangement it belongs to and checks that the
/// witness reproduces the sign vector and the stored dimension.
Face face_from_json(const Json& j, const Arrangement& a);
std::vector<Face> faces_from_json(const Json& j, const Arrangement& a);

/// Header "d,0,1,...,n,b"; row d lists f(d,0..n) and b_d.
std::string table_csv(const FaceCountTable& t);

Json to_json(const TruncatedSeries& s);

Json to_json(const std::vector<CheckResult>& report);

Json to_json(const OrderedPartition& p);
OrderedPartition partition_from_json(const Json& j);
Json to_json(const PhiImage& image);

Json error_json(const std::string& code, const std::string& message);

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
Json read_json(const std::string& path);

}  // namespace arrcomb::io
