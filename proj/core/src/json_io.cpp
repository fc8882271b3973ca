#include "ech/json_io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "ech/errors.hpp"

namespace ech {

namespace {

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float())
        throw Error("non-integer JSON number in exact context; write it as a string like \"3/7\"");
    throw Error("expected a rational value");
}

EndSign sign_from_string(const std::string& s) {
    if (s == "positive") return EndSign::positive;
    if (s == "negative") return EndSign::negative;
    throw Error("end sign must be 'positive' or 'negative'");
}

OrbitKind kind_from_string(const std::string& s) {
    if (s == "positive_hyperbolic") return OrbitKind::positive_hyperbolic;
    if (s == "negative_hyperbolic") return OrbitKind::negative_hyperbolic;
    if (s == "elliptic") return OrbitKind::elliptic;
    throw Error("unknown orbit kind '" + s + "'");
}

std::string kind_to_string(OrbitKind k) {
    switch (k) {
        case OrbitKind::positive_hyperbolic: return "positive_hyperbolic";
        case OrbitKind::negative_hyperbolic: return "negative_hyperbolic";
        default: return "elliptic";
    }
}

CountTable count_table_from_json(const Json& j) {
    CountTable t;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw Error("count entries must be [from, to] pairs");
        t.insert({entry[0].get<int>(), entry[1].get<int>()});
    }
    return t;
}

}  // namespace

Json complex_to_json(const ComplexQ& z) {
    return Json::array({to_string(z.re), to_string(z.im)});
}

ComplexQ complex_from_json(const Json& j) {
    if (j.is_string()) return parse_complex(j.get<std::string>());
    if (j.is_number_integer()) return ComplexQ(Rational(j.get<long long>()));
    if (!j.is_array() || j.size() != 2)
        throw Error("complex values must be [re, im] pairs or literals");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

std::vector<ComplexQ> complex_vector_from_json(const Json& j) {
    if (!j.is_array()) throw Error("expected an array of complex values");
    std::vector<ComplexQ> out;
    out.reserve(j.size());
    for (const auto& entry : j) out.push_back(complex_from_json(entry));
    return out;
}

Json orbit_to_json(const ReebOrbitSpec& o) {
    Json j;
    j["kind"] = kind_to_string(o.kind);
    if (o.hyperbolic())
        j["rotation"] = std::get<long>(o.rotation);
    else
        j["rotation"] = to_string(std::get<Rational>(o.rotation));
    j["action"] = o.action;
    return j;
}

ReebOrbitSpec orbit_from_json(const std::string& id, const Json& j) {
    ReebOrbitSpec o;
    o.id = id;
    o.kind = kind_from_string(j.at("kind").get<std::string>());
    if (o.kind == OrbitKind::elliptic)
        o.rotation = rational_from_json(j.at("rotation"));
    else
        o.rotation = j.at("rotation").get<long>();
    o.action = j.value("action", 1.0);
    o.validate();
    return o;
}

Json curve_to_json(const CurveData& c) {
    Json orbits = Json::object();
    for (const auto& e : c.ends)
        if (!orbits.contains(e.orbit.id)) orbits[e.orbit.id] = orbit_to_json(e.orbit);
    Json curve;
    curve["genus"] = c.genus;
    curve["components"] = c.components;
    curve["rel_c1"] = c.rel_c1;
    curve["rel_Q"] = c.rel_q;
    curve["delta"] = c.delta;
    Json ends = Json::array();
    for (const auto& e : c.ends) {
        Json end;
        end["orbit"] = e.orbit.id;
        end["mult"] = e.multiplicity;
        end["sign"] = e.sign == EndSign::positive ? "positive" : "negative";
        ends.push_back(end);
    }
    curve["ends"] = ends;
    Json doc;
    doc["orbits"] = orbits;
    doc["curve"] = curve;
    return doc;
}

CurveData curve_from_json(const Json& doc) {
    std::map<std::string, ReebOrbitSpec> orbits;
    for (const auto& [id, body] : doc.at("orbits").items())
        orbits.emplace(id, orbit_from_json(id, body));
    const Json& curve = doc.at("curve");
    CurveData c;
    c.genus = curve.value("genus", 0L);
    c.components = curve.value("components", 1L);
    c.rel_c1 = curve.value("rel_c1", 0L);
    c.rel_q = curve.value("rel_Q", 0L);
    c.delta = curve.value("delta", 0L);
    for (const auto& end : curve.at("ends")) {
        auto it = orbits.find(end.at("orbit").get<std::string>());
        if (it == orbits.end()) throw Error("end references an unknown orbit");
        c.ends.push_back(
            {it->second, end.at("mult").get<long>(), sign_from_string(end.at("sign"))});
    }
    c.validate();
    return c;
}

GluingProblem gluing_from_json(const Json& j) {
    GluingProblem p;
    int n = j.at("n").get<int>();
    for (const auto& entry : j.at("p")) p.cfg.p.push_back(complex_from_json(entry));
    if (j.contains("q") && !j.at("q").is_null())
        for (const auto& entry : j.at("q")) p.cfg.q.push_back(complex_from_json(entry));
    if (static_cast<int>(p.cfg.p.size()) != n)
        throw Error("puncture list length disagrees with n");
    p.cfg.theta = j.value("theta", 0.0);
    p.cfg.big_t = j.value("T", 0.0);
    p.cfg.validate();
    for (const auto& row : j.at("alpha")) {
        std::vector<ComplexQ> r;
        for (const auto& entry : row) r.push_back(complex_from_json(entry));
        p.asym.alpha.push_back(std::move(r));
    }
    if (j.contains("d") && !j.at("d").is_null())
        for (const auto& row : j.at("d")) {
            std::vector<ComplexQ> r;
            for (const auto& entry : row) r.push_back(complex_from_json(entry));
            p.asym.d.push_back(std::move(r));
        }
    p.backend = j.value("backend", std::string("exact"));
    if (p.backend != "exact" && p.backend != "float")
        throw Error("backend must be 'exact' or 'float'");
    if (j.contains("c") && !j.at("c").is_null())
        p.restriction = complex_vector_from_json(j.at("c"));
    return p;
}

Json gluing_to_json(const GluingProblem& p) {
    Json j;
    j["n"] = p.cfg.n();
    Json pp = Json::array();
    for (const auto& z : p.cfg.p) pp.push_back(complex_to_json(z));
    j["p"] = pp;
    Json qq = Json::array();
    for (const auto& z : p.cfg.q) qq.push_back(complex_to_json(z));
    j["q"] = qq;
    j["theta"] = p.cfg.theta;
    j["T"] = p.cfg.big_t;
    Json alpha = Json::array();
    for (const auto& row : p.asym.alpha) {
        Json r = Json::array();
        for (const auto& z : row) r.push_back(complex_to_json(z));
        alpha.push_back(r);
    }
    j["alpha"] = alpha;
    if (p.asym.d.empty()) {
        j["d"] = nullptr;
    } else {
        Json dd = Json::array();
        for (const auto& row : p.asym.d) {
            Json r = Json::array();
            for (const auto& z : row) r.push_back(complex_to_json(z));
            dd.push_back(r);
        }
        j["d"] = dd;
    }
    j["backend"] = p.backend;
    if (p.restriction) {
        Json c = Json::array();
        for (const auto& z : *p.restriction) c.push_back(complex_to_json(z));
        j["c"] = c;
    }
    return j;
}

namespace {

ChainComplexData complex_from_fixture(const Json& j) {
    ChainComplexData data;
    data.action_bound = j.value("L", 0.0);
    std::map<std::string, ReebOrbitSpec> orbits;
    if (j.contains("orbits"))
        for (const auto& [id, body] : j.at("orbits").items())
            orbits.emplace(id, orbit_from_json(id, body));
    for (const auto& gen : j.at("generators")) {
        OrbitSet s;
        for (const auto& entry : gen.at("orbits")) {
            std::string id = entry.at(0).get<std::string>();
            long mult = entry.at(1).get<long>();
            auto it = orbits.find(id);
            if (it == orbits.end()) throw Error("generator references unknown orbit '" + id + "'");
            s.entries.push_back({it->second, mult});
        }
        if (gen.contains("action")) {
            double want = gen.at("action").get<double>();
            double computed = s.total_action();
            if (std::abs(want - computed) > 1e-9 * std::max(1.0, std::abs(computed)))
                throw Error("declared generator action disagrees with the orbit actions");
        }
        data.generators.push_back(std::move(s));
    }
    if (j.contains("diff")) data.diff = count_table_from_json(j.at("diff"));
    return data;
}

}  // namespace

ChainFixture chain_fixture_from_json(const Json& j, const std::string& name) {
    ChainFixture f;
    f.name = name;
    f.source = complex_from_fixture(j);
    if (j.contains("cobordism") && !j.at("cobordism").is_null()) {
        const Json& cob = j.at("cobordism");
        CobordismData d;
        d.source = f.source;
        d.target = cob.contains("target") ? complex_from_fixture(cob.at("target")) : f.source;
        d.direct = count_table_from_json(cob.at("direct"));
        d.building = count_table_from_json(cob.at("building"));
        if (cob.contains("building_alt"))
            f.building_alt = count_table_from_json(cob.at("building_alt"));
        f.cobordism = std::move(d);
    }
    f.expect = j.value("expect", Json::object());
    return f;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

ChainFixture load_chain_fixture(const std::string& path) {
    return chain_fixture_from_json(load_json_file(path),
                                   std::filesystem::path(path).filename().string());
}

}  // namespace ech
