#pragma once

// JSON serialization of the domain types. Numbers are emitted with 17
// significant digits so that parse(serialize(x)) == x exactly and repeated
// runs are byte-identical.

#include <string>

#include <json.hpp>

#include "trichain/coords.hpp"
#include "trichain/torus.hpp"

namespace trichain {

using Json = nlohmann::ordered_json;

// Thrown when an input document does not match the expected schema.
struct MalformedInputError : Error {
    using Error::Error;
};

Json alpha_to_json(const AngleVector& alpha);
AngleVector alpha_from_json(const Json& j);

Json isometry_to_json(const Isometry& g);
Isometry isometry_from_json(const Json& j);

Json rep_to_json(const DTRepresentation& rep);
DTRepresentation rep_from_json(const Json& j);

Json chain_to_json(const TriangleChain& chain);
TriangleChain chain_from_json(const Json& j);

Json projective_to_json(const ProjectivePoint& p);
ProjectivePoint projective_from_json(const Json& j);

Json coords_to_json(const ActionAngleCoords& c);

// Serializer with %.17g floating-point formatting and stable key order.
std::string dump_json(const Json& j, int indent = 2);

// Parses a JSON document, translating parser failures to MalformedInputError.
Json parse_json(const std::string& text);
Json load_json_file(const std::string& path);

}  // namespace trichain
