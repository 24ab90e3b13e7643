#include "nadisk/json_io.hpp"

#include <stdexcept>

#include "nadisk/error.hpp"

namespace nadisk::io {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::SchemaError, where + ": " + what);
}

std::int64_t integer_from(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) schema(where, "expected an integer");
    return j.get<std::int64_t>();
}

const Json& array_at(const Json& j, const char* key, const std::string& where) {
    const Json& a = member(j, key, where);
    if (!a.is_array()) schema(where + "." + key, "expected an array");
    return a;
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

} // namespace

Json parse(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::SchemaError, std::string("malformed JSON: ") + e.what());
    }
}

const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) schema(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema(where, std::string("missing \"") + key + "\"");
    return *it;
}

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) schema(where, "expected a rational string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception&) {
        schema(where, "bad rational \"" + j.get<std::string>() + "\"");
    }
}

mpq_class coefficient_from(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (!j.is_string()) schema(where, "expected a rational string");
    const std::string s = j.get<std::string>();
    mpq_class q;
    // digits, '-' and '/' only
    if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos || q.set_str(s, 10) != 0)
        schema(where, "bad rational \"" + s + "\"");
    if (q.get_den() == 0) schema(where, "zero denominator");
    q.canonicalize();
    return q;
}

Json to_json(const Scalar& x) {
    Json terms = Json::array();
    for (const auto& t : x.terms()) terms.push_back({{"q", t.exp.str()}, {"a", t.coeff.get_str()}});
    Json out = {{"terms", terms}};
    out["trunc"] = x.trunc() ? Json(x.trunc()->str()) : Json(nullptr);
    return out;
}

Scalar scalar_from(const Json& j, const std::string& where) {
    const Json& terms = array_at(j, "terms", where);
    std::vector<Term> ts;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string w = at(where + ".terms", i);
        ts.push_back({rational_from(member(terms[i], "q", w), w + ".q"), coefficient_from(member(terms[i], "a", w), w + ".a")});
    }
    Scalar::Trunc trunc;
    auto it = j.find("trunc");
    if (it != j.end() && !it->is_null()) trunc = rational_from(*it, where + ".trunc");
    return Scalar::from_terms(std::move(ts), trunc);
}

Json to_json(const Mag& m) {
    if (m.is_zero()) return {{"kind", "zero"}};
    return {{"kind", "finite"}, {"q", m.exponent().str()}};
}

Mag mag_from(const Json& j, const std::string& where) {
    const Json& kind = member(j, "kind", where);
    if (kind == "zero") return Mag::zero();
    if (kind == "finite") return Mag::from_exponent(rational_from(member(j, "q", where), where + ".q"));
    schema(where + ".kind", "expected \"finite\" or \"zero\"");
}

Json to_json(const PowerSeries& f) {
    Json coeffs = Json::array();
    for (const auto& a : f.coeffs()) coeffs.push_back(to_json(a));
    Json out = {{"coeffs", coeffs}};
    out["gauss_tail"] = f.tail() ? to_json(*f.tail()) : Json(nullptr);
    return out;
}

PowerSeries series_from(const Json& j, const std::string& where) {
    if (j.is_object() && j.contains("zeros")) {
        ZeroProfile p;
        if (j.contains("unit")) p.unit_mag = mag_from(j["unit"], where + ".unit");
        if (j.contains("origin_order")) p.origin_order = integer_from(j["origin_order"], where + ".origin_order");
        const Json& zs = array_at(j, "zeros", where);
        for (std::size_t i = 0; i < zs.size(); ++i) {
            const std::string w = at(where + ".zeros", i);
            std::int64_t m = zs[i].is_object() && zs[i].contains("m") ? integer_from(zs[i]["m"], w + ".m") : 1;
            p.zeros.push_back({scalar_from(member(zs[i], "z", w), w + ".z"), m});
        }
        return zp_to_series(p);
    }
    const Json& cs = array_at(j, "coeffs", where);
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i < cs.size(); ++i) coeffs.push_back(scalar_from(cs[i], at(where + ".coeffs", i)));
    std::optional<Mag> tail;
    auto it = j.find("gauss_tail");
    if (it != j.end() && !it->is_null()) tail = mag_from(*it, where + ".gauss_tail");
    return PowerSeries(std::move(coeffs), tail);
}

Json to_json(const std::vector<Target>& targets) {
    Json arr = Json::array();
    for (const auto& t : targets) arr.push_back({{"center", to_json(t.center)}, {"eps", to_json(t.eps)}});
    return {{"targets", arr}};
}

std::vector<Target> targets_from(const Json& j, const std::string& where) {
    const Json& arr = j.is_array() ? j : array_at(j, "targets", where);
    std::vector<Target> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string w = at(where + ".targets", i);
        out.push_back({scalar_from(member(arr[i], "center", w), w + ".center"), mag_from(member(arr[i], "eps", w), w + ".eps")});
    }
    return out;
}

DiskFamily family_from(const Json& j, const std::string& where) {
    const Json& cs = array_at(j, "centers", where);
    const Json& ws = array_at(j, "weights", where);
    std::vector<Scalar> centers;
    std::vector<std::int64_t> weights;
    for (std::size_t i = 0; i < cs.size(); ++i) centers.push_back(scalar_from(cs[i], at(where + ".centers", i)));
    for (std::size_t i = 0; i < ws.size(); ++i) weights.push_back(integer_from(ws[i], at(where + ".weights", i)));
    return DiskFamily(std::move(centers), std::move(weights), mag_from(member(j, "base_r", where), where + ".base_r"));
}

Json to_json(const DiskFamily& fam) {
    Json cs = Json::array();
    for (const auto& z : fam.centers()) cs.push_back(to_json(z));
    return {{"centers", cs}, {"weights", fam.weights()}, {"base_r", to_json(fam.base())}};
}

Json to_json(const NewtonData& d) {
    Json verts = Json::array();
    for (const auto& [n, q] : d.vertices) verts.push_back({{"n", n}, {"q", q.str()}});
    Json radii = Json::array();
    for (const auto& c : d.radii)
        radii.push_back({{"radius", to_json(c.radius)},
                         {"mu", c.mu},
                         {"nu", c.nu},
                         {"count", c.count()},
                         {"certified", c.certified}});
    return {{"vertices", verts}, {"radii", radii}, {"complete_below", d.complete_below}};
}

Json to_json(const StagePlan& plan) {
    Json seps = Json::array();
    for (const auto& s : plan.separators) seps.push_back(s.str());
    return {{"breakpoints", plan.breakpoints}, {"block_sizes", plan.block_sizes}, {"separators", seps}};
}

Json to_json(const StageAudit& a) {
    return {{"stage", a.stage},
            {"preserved", a.preserved},
            {"separator_count", a.separator_count},
            {"nodes_vanish", a.nodes_vanish},
            {"outer_counts", a.outer_counts},
            {"tail_counts", a.tail_counts},
            {"ok", a.ok()}};
}

Json to_json(const VerifyReport& r) {
    Json ts = Json::array();
    for (const auto& t : r.targets) ts.push_back({{"index", t.index}, {"pass", t.pass}, {"detail", t.detail}});
    Json cs = Json::array();
    for (const auto& c : r.circles)
        cs.push_back({{"radius", to_json(c.radius)}, {"expected", c.expected}, {"found", c.found}, {"pass", c.pass}});
    return {{"targets", ts}, {"circles", cs}, {"summary", r.all_pass() ? "all PASS" : "FAIL"}};
}

Json to_json(const StageReport& r) {
    Json recs = Json::array();
    for (std::size_t n = 0; n < r.records.size(); ++n) {
        const auto& s = r.records[n];
        recs.push_back({{"n", n + 1},
                        {"zeta", to_json(s.zeta)},
                        {"xi", to_json(s.xi)},
                        {"prefactor", to_json(s.prefactor)},
                        {"count", s.count}});
    }
    Json out = {{"records", recs}};
    if (!r.records.empty()) {
        out["zeta_min"] = to_json(r.zeta_min);
        out["zeta_max"] = to_json(r.zeta_max);
        out["xi_min"] = to_json(r.xi_min);
        out["xi_max"] = to_json(r.xi_max);
    }
    out["zeta_nondecreasing"] = r.zeta_nondecreasing;
    out["xi_nondecreasing"] = r.xi_nondecreasing;
    return out;
}

} // namespace nadisk::io
