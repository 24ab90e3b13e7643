#include "nadisk/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "nadisk/error.hpp"
#include "nadisk/norm_target.hpp"
#include "nadisk/random.hpp"

namespace nadisk::cli {

using io::Json;

namespace {

// Exponent of a magnitude for tables; the zero magnitude has none.
std::string mq(const Mag& m) { return m.is_zero() ? "zero" : m.exponent().str(); }
std::string num(std::int64_t n) { return std::to_string(n); }
std::string flag(bool b) { return b ? "true" : "false"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

const Json& need(const Json& in, const char* key) { return io::member(in, key, "input"); }

PowerSeries input_series(const Json& in) { return io::series_from(need(in, "f"), "input.f"); }
Scalar input_scalar(const Json& in, const char* key) { return io::scalar_from(need(in, key), std::string("input.") + key); }
Mag input_mag(const Json& in, const char* key) { return io::mag_from(need(in, key), std::string("input.") + key); }

Report newton_scenario(const Json& in) {
    NewtonData d = newton(input_series(in));
    Report r;
    r.json = {{"scenario", "newton"}, {"newton", io::to_json(d)}};
    r.columns = {"radius_q", "mu", "nu", "count", "certified"};
    for (const auto& c : d.radii) r.rows.push_back({mq(c.radius), num(c.mu), num(c.nu), num(c.count()), flag(c.certified)});
    return r;
}

Report norm_scenario(const Json& in) {
    Report r;
    if (!in.contains("bounds")) {
        GaussNorm g = gauss_norm(input_series(in));
        r.json = {{"scenario", "norm"}, {"norm", io::to_json(g.value)}, {"certified", g.certified}};
        r.columns = {"norm_q", "certified"};
        r.rows.push_back({mq(g.value), flag(g.certified)});
        return r;
    }
    // greedy selection of sum q_n(t_n) = target over a dense grid
    const Json& bs = need(in, "bounds");
    if (!bs.is_array()) throw Error(ErrorKind::SchemaError, "input.bounds: expected an array");
    std::vector<Bound> bounds;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        const std::string w = "input.bounds[" + std::to_string(i) + "]";
        bounds.push_back({io::rational_from(io::member(bs[i], "a", w), w + ".a"),
                          io::rational_from(io::member(bs[i], "b", w), w + ".b")});
    }
    Rational target = io::rational_from(need(in, "target"), "input.target");
    Rational eps = io::rational_from(need(in, "eps"), "input.eps");
    const Json& grid = need(in, "grid");
    const std::string kind = io::member(grid, "kind", "input.grid").get<std::string>();
    const Json& dj = io::member(grid, "d", "input.grid");
    if (!dj.is_number_integer()) throw Error(ErrorKind::SchemaError, "input.grid.d: expected an integer");
    const auto d = dj.get<std::int64_t>();
    NormTargetResult res;
    if (kind == "pow2")
        res = norm_target_select(bounds, target, PowerOfTwoGrid{d}, eps);
    else if (kind == "rational")
        res = norm_target_select(bounds, target, RationalGrid{d}, eps);
    else
        throw Error(ErrorKind::SchemaError, "input.grid.kind: expected \"pow2\" or \"rational\"");
    Json picks = Json::array();
    r.columns = {"n", "pick", "t_display"};
    for (std::size_t n = 0; n < res.picks.size(); ++n) {
        picks.push_back(res.picks[n].str());
        std::ostringstream t;
        t.precision(17);
        t << res.t[n];
        r.rows.push_back({num(static_cast<std::int64_t>(n + 1)), res.picks[n].str(), t.str()});
    }
    r.json = {{"scenario", "norm"},
              {"grid", kind},
              {"picks", picks},
              {"t_display", res.t},
              {"within_eps", true}};
    return r;
}

Report zeta_scenario(const Json& in) {
    Mag z = disk_norm(input_series(in), input_scalar(in, "center"), input_mag(in, "radius"));
    Report r;
    r.json = {{"scenario", "zeta"}, {"zeta", io::to_json(z)}};
    r.columns = {"zeta_q"};
    r.rows.push_back({mq(z)});
    return r;
}

Report xi_scenario(const Json& in) {
    PowerSeries f = input_series(in);
    Scalar c = input_scalar(in, "center");
    Mag rad = input_mag(in, "radius");
    Mag x = xi(f, c, rad), pre = xi_prefactor(f, c), z = disk_norm(f, c, rad);
    Report r;
    r.ok = z == pre * x;
    r.json = {{"scenario", "xi"},
              {"xi", io::to_json(x)},
              {"prefactor", io::to_json(pre)},
              {"zeta", io::to_json(z)},
              {"zeta_factors", r.ok}};
    r.columns = {"xi_q", "prefactor_q", "zeta_q", "zeta_factors"};
    r.rows.push_back({mq(x), mq(pre), mq(z), flag(r.ok)});
    return r;
}

void verify_rows(Report& r, const VerifyReport& v) {
    r.columns = {"kind", "index", "radius_q", "expected", "found", "pass", "detail"};
    for (const auto& t : v.targets) r.rows.push_back({"target", num(static_cast<std::int64_t>(t.index)), "", "", "", flag(t.pass), t.detail});
    for (std::size_t i = 0; i < v.circles.size(); ++i) {
        const auto& c = v.circles[i];
        r.rows.push_back({"circle", num(static_cast<std::int64_t>(i)), mq(c.radius), num(c.expected), num(c.found), flag(c.pass), ""});
    }
}

Report prescribe_scenario(const ExperimentConfig& cfg, const Json& in) {
    Prescription p(io::targets_from(in, "input"));
    StagePlan plan = make_plan(p, cfg.stages);
    if (in.contains("norm")) {
        std::int64_t d = in.value("d", std::int64_t(64));
        Rational eps = in.contains("eps") ? io::rational_from(in["eps"], "input.eps") : Rational(1, 64);
        plan = plan_for_norm(p, plan, input_mag(in, "norm"), d, eps);
    }
    PrescribeResult res = prescribe(p, plan);
    GaussNorm g = gauss_norm(res.f);
    Json audits = Json::array();
    bool audits_ok = true;
    for (const auto& a : res.audits) {
        audits.push_back(io::to_json(a));
        audits_ok = audits_ok && a.ok();
    }
    const bool norm_ok = g.value == res.expected_norm;
    Report r;
    r.ok = res.report.all_pass() && audits_ok && norm_ok;
    r.json = {{"scenario", "prescribe"},
              {"f", io::to_json(res.f)},
              {"plan", io::to_json(res.plan)},
              {"working_order", res.working_order.str()},
              {"audits", audits},
              {"expected_norm", io::to_json(res.expected_norm)},
              {"gauss_norm", io::to_json(g.value)},
              {"norm_matches", norm_ok},
              {"verify", io::to_json(res.report)}};
    verify_rows(r, res.report);
    return r;
}

Report verify_scenario(const Json& in) {
    PowerSeries f = input_series(in);
    Prescription p(io::targets_from(need(in, "targets"), "input.targets"));
    VerifyReport v = verify_prescription(f, p);
    Report r;
    r.ok = v.all_pass();
    r.json = {{"scenario", "verify"}, {"verify", io::to_json(v)}, {"summary", v.all_pass() ? "all PASS" : "FAIL"}};
    verify_rows(r, v);
    return r;
}

void stage_rows(Report& r, const StageReport& rep, const std::string& prefix) {
    for (std::size_t n = 0; n < rep.records.size(); ++n) {
        const auto& s = rep.records[n];
        std::vector<std::string> row;
        if (!prefix.empty()) row.push_back(prefix);
        row.insert(row.end(), {num(static_cast<std::int64_t>(n + 1)), mq(s.zeta), mq(s.xi), mq(s.prefactor), num(s.count)});
        r.rows.push_back(std::move(row));
    }
}

Report semcurve_scenario(const ExperimentConfig& cfg, const Json& in) {
    PowerSeries f = input_series(in);
    DiskFamily fam = io::family_from(need(in, "family"), "input.family");
    std::vector<Scalar> centers = fam.centers();
    std::vector<std::int64_t> weights = fam.weights();
    if (cfg.horizon && *cfg.horizon < centers.size()) {
        centers.resize(*cfg.horizon);
        weights.resize(*cfg.horizon);
        fam = DiskFamily(centers, weights, fam.base());
    }
    Report r;
    if (!in.contains("grid")) {
        StageReport rep = stage_values(f, fam);
        r.json = {{"scenario", "semcurve"}, {"family", io::to_json(fam)}, {"stages", io::to_json(rep)}};
        r.columns = {"n", "zeta_q", "xi_q", "prefactor_q", "count"};
        stage_rows(r, rep, "");
        return r;
    }
    const Json& gj = need(in, "grid");
    if (!gj.is_array()) throw Error(ErrorKind::SchemaError, "input.grid: expected an array");
    std::vector<Mag> grid;
    for (std::size_t i = 0; i < gj.size(); ++i) grid.push_back(io::mag_from(gj[i], "input.grid[" + std::to_string(i) + "]"));
    Curve c = curve(f, centers, weights, grid);
    r.columns = {"r_q", "n", "zeta_q", "xi_q", "prefactor_q", "count"};
    Json tables = Json::array();
    for (const auto& g : grid) {
        StageReport rep = stage_values(f, DiskFamily(centers, weights, g));
        tables.push_back({{"base_r", io::to_json(g)}, {"stages", io::to_json(rep)}});
        stage_rows(r, rep, mq(g));
    }
    r.ok = c.nondecreasing;
    r.json = {{"scenario", "semcurve"}, {"curve", tables}, {"nondecreasing", c.nondecreasing}};
    return r;
}

Report solve_radius_scenario(const Json& in) {
    PowerSeries f = input_series(in);
    Scalar c = input_scalar(in, "center");
    Mag tau = input_mag(in, "target");
    Mag s = solve_radius(f, c, tau);
    Mag back = xi(f, c, s);
    Report r;
    r.ok = back == tau;
    r.json = {{"scenario", "solve-radius"}, {"radius", io::to_json(s)}, {"xi", io::to_json(back)}, {"round_trip", r.ok}};
    r.columns = {"s_q", "xi_q", "round_trip"};
    r.rows.push_back({mq(s), mq(back), flag(r.ok)});
    return r;
}

// ---- recipes ----

Scalar monomial(std::int64_t c, const Rational& q) { return Scalar::monomial(mpq_class(c), q); }

PowerSeries from_zeros(const std::vector<Scalar>& zeros) {
    ZeroProfile p;
    for (const auto& w : zeros) p.zeros.push_back({w, 1});
    return zp_to_series(p);
}

Report table(const std::string& name, std::size_t horizon, std::uint64_t seed, std::vector<std::string> columns) {
    Report r;
    r.columns = std::move(columns);
    r.json = {{"recipe", name}, {"horizon", horizon}, {"seed", seed}};
    return r;
}

void finish(Report& r, Json extra = Json::object()) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json o = Json::object();
        for (std::size_t i = 0; i < r.columns.size(); ++i) o[r.columns[i]] = row[i];
        rows.push_back(o);
    }
    r.json["rows"] = rows;
    for (auto& [k, v] : extra.items()) r.json[k] = v;
    r.json["all_identities_hold"] = r.ok;
}

Mag param_mag(const Json& params, const char* key, const Mag& fallback) {
    if (!params.is_object() || !params.contains(key)) return fallback;
    return io::mag_from(params[key], std::string("params.") + key);
}

// Clusters of i+1 points on circle i at mutual distance M^(1/i); the
// regularity product over each cluster is M for every point.
Report clustered_circles(std::size_t H, std::uint64_t seed, const Json& params) {
    Mag M = param_mag(params, "M", mag2(1));
    if (M.is_zero() || !(M < Mag::one())) throw Error(ErrorKind::InvalidArgument, "M must lie in (0, 1)");
    Rng rng(seed);
    std::vector<Scalar> zs;
    std::vector<std::size_t> circle;
    std::vector<Rational> spacing;
    for (std::size_t i = 1; i <= H; ++i) {
        Rational e = M.exponent() / Rational(static_cast<std::int64_t>(i));
        Rational rho = e / Rational(2);
        std::int64_t c = rng.coeff(5);
        for (std::size_t a = 1; a <= i + 1; ++a) {
            zs.push_back(monomial(c, rho) + monomial(static_cast<std::int64_t>(a), e));
            circle.push_back(i);
            spacing.push_back(e);
        }
    }
    Report r = table("noterrias", H, seed,
                     {"n", "circle", "r_q", "s_q", "zeta_r_q", "zeta_s_q", "xi_r_q", "xi_s_q", "count_r", "count_s", "partial_q"});
    if (zs.empty()) {
        finish(r);
        return r;
    }
    PowerSeries f = from_zeros(zs);
    for (std::size_t n = 0; n < zs.size(); ++n) {
        const std::size_t Mi = circle[n] + 1;
        Mag rn = mag2(spacing[n]);
        Mag sn = mag2(spacing[n] * Rational(static_cast<std::int64_t>(Mi + 1), static_cast<std::int64_t>(Mi)));
        std::vector<Scalar> cluster;
        std::size_t idx = 0;
        for (std::size_t m = 0; m < zs.size(); ++m)
            if (circle[m] == circle[n]) {
                if (m == n) idx = cluster.size();
                cluster.push_back(zs[m]);
            }
        Mag partial = regularity_products(cluster, std::vector<std::int64_t>(cluster.size(), 1), cluster.size()).products[idx];
        Mag pre = xi_prefactor(f, zs[n]);
        Mag zr = disk_norm(f, zs[n], rn), zsv = disk_norm(f, zs[n], sn);
        Mag xr = xi(f, zs[n], rn), xs = xi(f, zs[n], sn);
        std::int64_t cr = count_zeros(translate(f, zs[n]), Region::ClosedDisk, rn);
        std::int64_t cs = count_zeros(translate(f, zs[n]), Region::ClosedDisk, sn);
        r.ok = r.ok && zr == pre * xr && zsv == pre * xs && zsv <= zr && xs <= xr && partial == M;
        r.rows.push_back({num(static_cast<std::int64_t>(n + 1)), num(static_cast<std::int64_t>(circle[n])), mq(rn), mq(sn),
                          mq(zr), mq(zsv), mq(xr), mq(xs), num(cr), num(cs), mq(partial)});
    }
    finish(r, {{"M", io::to_json(M)}});
    return r;
}

// One center per circle |z_n| = 2^(-1/(n+1)) with a zero between the two
// schedules s_n < r_n, so the two stage tables differ at every finite n.
Report two_schedules(std::size_t H, std::uint64_t seed, const Json&) {
    Rng rng(seed);
    std::vector<Scalar> centers, zeros;
    std::vector<Rational> rho;
    for (std::size_t n = 1; n <= H; ++n) {
        Rational q(1, static_cast<std::int64_t>(n + 1));
        Scalar z = monomial(rng.coeff(5), q);
        centers.push_back(z);
        rho.push_back(q);
        zeros.push_back(z + monomial(rng.coeff(5), q + Rational(3, 2 * static_cast<std::int64_t>(n))));
    }
    Report r = table("lucile-insensitivity", H, seed,
                     {"n", "r_q", "s_q", "zeta_r_q", "zeta_s_q", "ratio_q", "count_r", "count_s", "sandwich"});
    if (centers.empty()) {
        finish(r);
        return r;
    }
    // a few extra zeros closer to the origin
    for (int i = 0; i < 2; ++i) zeros.push_back(monomial(rng.coeff(5), rng.exponent(Rational(1), Rational(2))));
    PowerSeries f = from_zeros(zeros);
    for (std::size_t n = 0; n < H; ++n) {
        const auto k = static_cast<std::int64_t>(n + 1);
        Mag rn = mag2(rho[n] + Rational(1, k)), sn = mag2(rho[n] + Rational(2, k));
        Mag pre = xi_prefactor(f, centers[n]);
        Mag zr = disk_norm(f, centers[n], rn), zsv = disk_norm(f, centers[n], sn);
        PowerSeries g = translate(f, centers[n]);
        XiSandwich sw = xi_sandwich(f, centers[n], rn, sn);
        r.ok = r.ok && zr == pre * xi(f, centers[n], rn) && zsv == pre * xi(f, centers[n], sn) && zsv <= zr && sw.holds();
        r.rows.push_back({num(k), mq(rn), mq(sn), mq(zr), mq(zsv), mq(zsv / zr),
                          num(count_zeros(g, Region::ClosedDisk, rn)), num(count_zeros(g, Region::ClosedDisk, sn)),
                          flag(sw.holds())});
    }
    finish(r);
    return r;
}

// i+1 points on circle i at mutual distance 2^(-(rho_i+1)), each with a zero
// nearby: xi_n = r_n times the product over its own cluster, and the full
// regularity products tend to zero.
Report collapsing_clusters(std::size_t H, std::uint64_t seed, const Json&) {
    Rng rng(seed);
    std::vector<Scalar> zs, us;
    std::vector<std::size_t> circle;
    std::vector<Rational> rho;
    for (std::size_t i = 1; i <= H; ++i) {
        Rational q(1, static_cast<std::int64_t>(i + 1));
        std::int64_t c = rng.coeff(5);
        for (std::size_t a = 1; a <= i + 1; ++a) {
            Scalar z = monomial(c, q) + monomial(static_cast<std::int64_t>(a), q + 1);
            zs.push_back(z);
            us.push_back(z + monomial(rng.coeff(5), q + 2));
            circle.push_back(i);
            rho.push_back(q);
        }
    }
    Report r = table("gertrudis-collapse", H, seed, {"n", "circle", "r_q", "xi_q", "partial_q", "full_q", "running_inf_q"});
    if (zs.empty()) {
        finish(r);
        return r;
    }
    PowerSeries f = from_zeros(us);
    Regularity full = regularity_products(zs, std::vector<std::int64_t>(zs.size(), 1), zs.size());
    for (std::size_t n = 0; n < zs.size(); ++n) {
        std::vector<Scalar> cluster;
        std::size_t idx = 0;
        for (std::size_t m = 0; m < zs.size(); ++m)
            if (circle[m] == circle[n]) {
                if (m == n) idx = cluster.size();
                cluster.push_back(zs[m]);
            }
        Mag partial = regularity_products(cluster, std::vector<std::int64_t>(cluster.size(), 1), cluster.size()).products[idx];
        Mag rn = mag2(rho[n] + Rational(3, 2));
        Mag x = xi(f, zs[n], rn);
        r.ok = r.ok && x == rn * partial && disk_norm(f, zs[n], rn) == xi_prefactor(f, zs[n]) * x;
        r.rows.push_back({num(static_cast<std::int64_t>(n + 1)), num(static_cast<std::int64_t>(circle[n])), mq(rn), mq(x),
                          mq(partial), mq(full.products[n]), mq(full.running_inf[n])});
    }
    finish(r);
    return r;
}

// Centers on circles 2^(-1/(n+1)), one zero per circle close to its center;
// every stage radius s_n is solved so that xi_n equals the target.
Report radius_chain(std::size_t H, std::uint64_t seed, const Json& params) {
    Mag tau = param_mag(params, "target", mag2(3));
    Rng rng(seed);
    std::vector<Scalar> centers, zeros;
    for (std::size_t n = 1; n <= H; ++n) {
        Rational q(1, static_cast<std::int64_t>(n + 1));
        Scalar z = monomial(rng.coeff(5), q);
        centers.push_back(z);
        zeros.push_back(z + monomial(rng.coeff(5), q + 3));
    }
    Report r = table("liberban-chain", H, seed, {"n", "s_q", "xi_q", "zeta_q", "count"});
    if (centers.empty()) {
        finish(r, {{"target", io::to_json(tau)}});
        return r;
    }
    PowerSeries f = from_zeros(zeros);
    for (std::size_t n = 0; n < H; ++n) {
        Mag s = solve_radius(f, centers[n], tau);
        Mag x = xi(f, centers[n], s);
        Mag z = disk_norm(f, centers[n], s);
        r.ok = r.ok && x == tau && z == xi_prefactor(f, centers[n]) * x;
        r.rows.push_back({num(static_cast<std::int64_t>(n + 1)), mq(s), mq(x), mq(z),
                          num(count_zeros(translate(f, centers[n]), Region::ClosedDisk, s))});
    }
    finish(r, {{"target", io::to_json(tau)}});
    return r;
}

using RecipeFn = Report (*)(std::size_t, std::uint64_t, const Json&);

const std::map<std::string, RecipeFn>& recipes() {
    static const std::map<std::string, RecipeFn> m{{"gertrudis-collapse", collapsing_clusters},
                                                   {"liberban-chain", radius_chain},
                                                   {"lucile-insensitivity", two_schedules},
                                                   {"noterrias", clustered_circles}};
    return m;
}

bool input_error(ErrorKind k) {
    switch (k) {
    case ErrorKind::SchemaError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::CenterOutsideDisk:
    case ErrorKind::DuplicateNodes:
    case ErrorKind::DuplicateCenters:
    case ErrorKind::TargetOutOfRange:
    case ErrorKind::TargetNotInValueGroup:
    case ErrorKind::InfeasibleHorizon:
    case ErrorKind::SeparatorCollision:
    case ErrorKind::ZeroToNonpositivePower:
        return true;
    default:
        return false;
    }
}

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

const std::vector<std::string>& recipe_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, _] : recipes()) v.push_back(k);
        return v;
    }();
    return names;
}

Report run_recipe(const std::string& name, std::size_t horizon, std::uint64_t seed, const Json& params) {
    auto it = recipes().find(name);
    if (it == recipes().end()) throw Error(ErrorKind::SchemaError, "unknown recipe \"" + name + "\"");
    if (horizon > 5) throw Error(ErrorKind::InvalidArgument, "recipe horizon must be at most 5");
    return it->second(horizon, seed, params);
}

Report run_scenario(const ExperimentConfig& cfg, const Json& input) {
    const std::string& c = cfg.command;
    if (c == "recipe") return run_recipe(cfg.recipe, cfg.horizon.value_or(4), cfg.seed, input);
    if (!input.is_object()) throw Error(ErrorKind::SchemaError, "input: expected an object");
    if (c == "newton") return newton_scenario(input);
    if (c == "norm") return norm_scenario(input);
    if (c == "zeta") return zeta_scenario(input);
    if (c == "xi") return xi_scenario(input);
    if (c == "prescribe") return prescribe_scenario(cfg, input);
    if (c == "verify") return verify_scenario(input);
    if (c == "semcurve") return semcurve_scenario(cfg, input);
    if (c == "solve-radius") return solve_radius_scenario(input);
    throw Error(ErrorKind::SchemaError, "unknown scenario \"" + c + "\"");
}

std::string render(const Report& r, const std::string& format) {
    if (format == "json") return r.json.dump(2) + "\n";
    if (format != "csv") throw Error(ErrorKind::SchemaError, "format must be json or csv");
    std::string out;
    auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
        out += "\n";
    };
    line(r.columns);
    for (const auto& row : r.rows) line(row);
    return out;
}

int run(const ExperimentConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    Json report;
    int code = Ok;
    std::string text;
    try {
        if (cfg.format != "json" && cfg.format != "csv") throw Error(ErrorKind::SchemaError, "format must be json or csv");
        Json input;
        const bool optional_input = cfg.command == "recipe";
        if (!cfg.input.empty() && cfg.input != "-") {
            std::ifstream file(cfg.input);
            if (!file) throw Error(ErrorKind::SchemaError, "cannot read " + cfg.input);
            input = io::parse(read_all(file));
        } else if (!optional_input) {
            input = io::parse(read_all(in));
        }
        Report r = run_scenario(cfg, input);
        text = render(r, cfg.format);
        if (!r.ok) code = InvariantFailure;
    } catch (const Error& e) {
        code = input_error(e.kind()) ? InputError : InvariantFailure;
        report = {{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
    } catch (const std::exception& e) {
        code = InvariantFailure;
        report = {{"error", {{"kind", "Internal"}, {"message", e.what()}}}};
    }
    if (!report.is_null()) {
        err << report.dump() << "\n";
        text = cfg.format == "csv" ? "error_kind,message\n" + csv_field(report["error"]["kind"].get<std::string>()) + "," +
                                         csv_field(report["error"]["message"].get<std::string>()) + "\n"
                                   : report.dump(2) + "\n";
    }
    if (cfg.output.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file) {
            err << Json{{"error", {{"kind", "SchemaError"}, {"message", "cannot write " + cfg.output}}}}.dump() << "\n";
            return InputError;
        }
        file << text;
    }
    return code;
}

} // namespace nadisk::cli
