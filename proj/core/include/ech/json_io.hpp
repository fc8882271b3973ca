#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "ech/chain.hpp"
#include "ech/cover.hpp"
#include "ech/orbits.hpp"

namespace ech {

using Json = nlohmann::ordered_json;

// Complex values travel as [re, im]. Entries may be JSON integers or
// strings ("3/7", "-1.25", "2"); non-integer JSON numbers are rejected in
// exact contexts so no binary-float noise sneaks into the rationals.
Json complex_to_json(const ComplexQ& z);
ComplexQ complex_from_json(const Json& j);
std::vector<ComplexQ> complex_vector_from_json(const Json& j);

Json orbit_to_json(const ReebOrbitSpec& o);
ReebOrbitSpec orbit_from_json(const std::string& id, const Json& j);

// Curve document: {"orbits": {id: {...}}, "curve": {genus, components,
// rel_c1, rel_Q, delta, ends: [{orbit, mult, sign}]}}.
Json curve_to_json(const CurveData& c);
CurveData curve_from_json(const Json& doc);

// Branched-cover problem: {n, p: [[re,im],...], q: [...], theta, T,
// alpha: [[pair,...],...], d: [[...]]|null, backend: "exact"|"float"}.
struct GluingProblem {
    CoverConfig<ComplexQ> cfg;
    AsymptoticData<ComplexQ> asym;
    std::string backend = "exact";
    std::optional<std::vector<ComplexQ>> restriction;  // optional "c" entry
};
GluingProblem gluing_from_json(const Json& j);
Json gluing_to_json(const GluingProblem& p);

// Chain fixture: {L, orbits, generators: [{orbits: [[id, mult],...],
// action?}], diff: [[i,j],...], cobordism?: {target?, direct, building,
// building_alt?}, expect?: {...}}. A cobordism without "target" maps the
// complex to itself.
struct ChainFixture {
    std::string name;
    ChainComplexData source;
    std::optional<CobordismData> cobordism;
    std::optional<CountTable> building_alt;
    Json expect;  // empty object when absent
};
ChainFixture chain_fixture_from_json(const Json& j, const std::string& name = {});
ChainFixture load_chain_fixture(const std::string& path);

Json load_json_file(const std::string& path);

}  // namespace ech
