#pragma once

// JSON encodings of every value type. Encoders produce a canonical form so
// that serialize(parse(serialize(x))) is byte-identical; decoders validate
// the schema and report the offending field as a JSON path.

#include <json.hpp>

#include <string>

#include "bost/crossed_product.hpp"
#include "bost/equivariant.hpp"
#include "bost/errors.hpp"
#include "bost/expectation.hpp"
#include "bost/graded_endo.hpp"
#include "bost/group_ring.hpp"
#include "bost/int_poly.hpp"
#include "bost/qz.hpp"
#include "bost/scissors.hpp"
#include "bost/witt.hpp"

namespace bost {

using Json = nlohmann::ordered_json;

class SchemaError : public InvalidInput {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : InvalidInput(path + ": " + message), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Parses text, turning syntax errors into a SchemaError at the root.
Json parse_json_text(const std::string& text, const std::string& path = "$");

/// A JSON number when the value fits in 64 bits, a decimal string otherwise.
Json to_json(const Integer& x);
/// An integer when the value is integral, "p/q" otherwise.
Json to_json(const Rational& x);
Json to_json(const QZ& r);
Json to_json(const IntPoly& p);
Json to_json(const GroupRingZ& x);
Json to_json(const GroupRingQ& x);
Json to_json(const BCElem& u);
Json to_json(const BCElemQ& u);
Json to_json(const OrbitSum& x);
Json to_json(const BoldK0Elem& u);
Json to_json(const TruncationSet& t);
Json to_json(const WittVector& w);
Json to_json(const Ghost& g);
Json to_json(const IntMatrix& m);
Json to_json(const GradedEndo& g);
Json to_json(const CycloFactorization& f);
Json to_json(const QuasiUnipotenceReport& r);
Json to_json(const HodgeTable& t);
Json to_json(const AssemblerPresentation& p);
Json to_json(const K0Presentation& k);
Json to_json(const SubringMembership& s);
Json to_json(const ObjectCombination& c);

Integer integer_from_json(const Json& j, const std::string& path = "$");
Rational rational_from_json(const Json& j, const std::string& path = "$");
std::int64_t int64_from_json(const Json& j, const std::string& path = "$");
QZ qz_from_json(const Json& j, const std::string& path = "$");
IntPoly int_poly_from_json(const Json& j, const std::string& path = "$");
GroupRingZ group_ring_z_from_json(const Json& j, const std::string& path = "$");
GroupRingQ group_ring_q_from_json(const Json& j, const std::string& path = "$");
/// True when some coefficient is a non-integral "p/q" string.
bool group_ring_json_is_rational(const Json& j);
BCElem bc_from_json(const Json& j, const std::string& path = "$");
BCElemQ bc_q_from_json(const Json& j, const std::string& path = "$");
OrbitSum orbit_sum_from_json(const Json& j, const std::string& path = "$");
BoldK0Elem bold_k0_from_json(const Json& j, const std::string& path = "$");
TruncationSet truncation_from_json(const Json& j, const std::string& path = "$");
WittVector witt_from_json(const Json& j, const std::string& path = "$");
Ghost ghost_from_json(const Json& j, const std::string& path = "$");
IntMatrix matrix_from_json(const Json& j, const std::string& path = "$");
GradedEndo graded_endo_from_json(const Json& j, const std::string& path = "$");
HodgeTable hodge_from_json(const Json& j, const std::string& path = "$");
AssemblerPresentation assembler_from_json(const Json& j, const std::string& path = "$");
K0Presentation k0_from_json(const Json& j, const std::string& path = "$");

/// A functor between presentations given on objects.
struct InducedMapRequest {
  AssemblerPresentation p, q;
  std::map<std::string, std::string> object_map;
  std::map<std::string, Integer> multiplicity_map;
};

/// {"p": ..., "q": ..., "object_map": {label: label}, "multiplicity_map": {label: n}};
/// multiplicity_map may be omitted.
InducedMapRequest induced_request_from_json(const Json& j, const std::string& path = "$");

}  // namespace bost
