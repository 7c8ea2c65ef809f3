#pragma once

#include <string>

#include "json.hpp"
#include "trigrid/chambers.hpp"
#include "trigrid/diagram.hpp"
#include "trigrid/moduli.hpp"
#include "trigrid/obstruct.hpp"
#include "trigrid/oracle.hpp"
#include "trigrid/slopes.hpp"

// JSON views of engine values. Rationals are "p/q" strings; every document
// carries schema_version.
namespace trigrid::json {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json document(const std::string& kind, Json body);
Json error_document(const std::string& code, const std::string& message, Json details = Json::object());
// Two-space indented, trailing newline.
std::string dump(const Json& j);

Json rational(const Rational& q);
Json rationals(const RatVector& v);
Json integers(const IntVector& v);

Json graph(const ColoredCubicGraph& g);
Json surface(const SurfaceType& s);
Json bipartition(const Bipartition& b);
Json slopes(const SlopeSystem& s);
Json winding(const WindingClass& w);
Json chart(const AffineChart& c);
Json certificate(const DegeneracyCertificate& c);
Json families(const std::vector<WallFamily>& f);
Json walls(const std::vector<DegeneracyWall>& w);
Json component(const ModuliComponent& c, std::size_t index);
Json sample(const SampleResult& s);
Json combinatorial_type(const CombinatorialType& t);
Json chambers(const ChamberSet& set);
Json moves(const std::vector<Move>& m);
Json locus(const std::optional<CommonLocus>& l);
Json projections(const std::array<GridProjection, 3>& p);
Json geometric(const GeometricDiagram& d);
Json combinatorial(const CombinatorialDiagram& d);
Json moduli_report(const ModuliReport& r);
Json enumeration(const EnumerationReport& r);
Json obstruction(const ObstructionReport& r);
Json markov(const std::vector<MarkovTriple>& triples);

// Inverse of rationals(); throws ParseError on bad entries.
RatVector parse_rationals(const Json& j);

}  // namespace trigrid::json
