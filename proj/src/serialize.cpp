#include "nilorb/serialize.hpp"

namespace nilorb {

namespace {

Q parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Q(std::stoll(s));
        return Q(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw Error(Errc::parse_error, "malformed rational '" + s + "'");
    }
}

template <class F>
auto guarded(const Json& j, F&& f)
{
    try {
        return f(j);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, e.what());
    }
}

}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const ClassicalOrbit& o)
{
    return {{"family", std::string(1, family_char(o.fam.letter))}, {"N", o.fam.N}, {"partition", to_json(o.p)}};
}

Json to_json(const SpecialDecomposition& d)
{
    return {{"skeleton", to_json(d.skeleton)}, {"alpha", d.alphas}, {"beta", d.betas}, {"q", d.q}};
}

Json to_json(const WeylFactor& f)
{
    Json j;
    std::string key(1, f.letter);
    if (f.is_opaque()) {
        j["type"] = key + std::to_string(f.rank);
        j["name"] = f.opaque;
        j["b"] = f.opaque_b;
        return j;
    }
    if (f.letter == 'A') j[key] = to_json(f.a);
    else j[key] = Json::array({to_json(f.a), to_json(f.b)});
    if (f.degenerate) j["degenerate"] = true;
    return j;
}

Json to_json(const WeylRepLabel& r)
{
    Json j = Json::array();
    for (const auto& f : r.factors) j.push_back(to_json(f));
    return j;
}

Json to_json(const LusztigQuotient& q)
{
    return {{"descriptor", q.descriptor()}, {"q", q.q}, {"sym", q.sym}, {"classes", q.conj_class_count()}};
}

Json to_json(const Vec& v)
{
    Json j = Json::array();
    for (const auto& x : v) j.push_back(to_string(x));
    return j;
}

Json to_json(const RootSystem& rs)
{
    Json roots = Json::array(), simple = Json::array();
    for (const auto& r : rs.simple_roots) simple.push_back(to_json(r));
    for (const auto& r : rs.roots) roots.push_back(to_json(r));
    return {{"type", to_string(rs.type)}, {"ambient_dim", rs.ambient_dim}, {"simple_roots", simple}, {"roots", roots}};
}

Json to_json(const Subsystem& s)
{
    Json roots = Json::array(), simple = Json::array();
    for (const auto& c : s.components)
        for (const auto& r : c) simple.push_back(to_json(r));
    for (const auto& r : s.roots) roots.push_back(to_json(r));
    return {{"type", to_string(s.type)}, {"simple_roots", simple}, {"roots", roots}};
}

Json to_json(const ExcOrbitRecord& r)
{
    Json j = {{"type", r.type}, {"label", r.label}, {"wdd", r.wdd}, {"dim", r.dim}, {"special", r.special}, {"dual", r.dual}};
    j["abar"] = r.abar ? to_json(*r.abar) : Json();
    return j;
}

Json to_json(const FactorReport& f)
{
    Json j = {{"type", std::string(1, f.type.letter) + std::to_string(f.type.rank)},
              {"levi", to_string(f.levi)},
              {"induced", f.induced},
              {"o_prime", f.o_prime}};
    if (f.induced_orbit) j["induced_orbit"] = to_json(*f.induced_orbit);
    if (f.o_prime_orbit) j["o_prime_orbit"] = to_json(*f.o_prime_orbit);
    j["sigma"] = to_json(f.sigma);
    j["b"] = f.b;
    j["o_prime_dim"] = f.o_prime_dim;
    j["abar"] = to_json(f.abar);
    return j;
}

Json to_json(const UnipotentReport& r)
{
    Json factors = Json::array();
    for (const auto& f : r.factors) factors.push_back(to_json(f));
    Json j = {{"type", r.type},
              {"input", r.input},
              {"lambda", to_json(r.lambda)},
              {"g_prime", to_string(r.g_prime)},
              {"l_prime", to_string(r.l_prime)},
              {"factors", factors},
              {"induced", r.induced_string()},
              {"o_prime", r.o_prime_string()},
              {"sigma_prime", to_json(r.sigma_prime)},
              {"b", r.b},
              {"orbit", r.orbit}};
    if (r.orbit_classical) j["orbit_classical"] = to_json(*r.orbit_classical);
    j["orbit_dim"] = r.orbit_dim;
    j["nilcone_dim"] = r.nilcone;
    j["pi_count"] = r.pi_count;
    j["abar"] = {{"dual", to_json(r.abar_dual)}, {"orbit", to_json(r.abar_orbit)}, {"o_prime", to_json(r.abar_oprime)}};
    j["integral"] = r.integral;
    if (!r.notice.empty()) j["notice"] = r.notice;
    return j;
}

Json to_json(const RowResult& r)
{
    Json j = {{"dual_orbit", r.dual_orbit}, {"status", to_string(r.status)}, {"flags", r.flags}, {"expected", r.expected}, {"details", r.details}};
    if (r.report) j["report"] = to_json(*r.report);
    return j;
}

Json to_json(const TableReport& t)
{
    Json rows = Json::array();
    for (const auto& r : t.rows) rows.push_back(to_json(r));
    return {{"type", t.type}, {"rows", rows}, {"passed", t.passed()}, {"flagged", t.flagged()}, {"failed", t.failed()}};
}

Json to_json(const SuiteReport& s)
{
    Json fails = Json::array();
    for (const auto& f : s.failures) fails.push_back({{"orbit", f.orbit}, {"check", f.check}, {"detail", f.detail}});
    return {{"family", std::string(1, s.family)},
            {"max_rank", s.max_rank},
            {"orbits", s.orbits},
            {"checks_run", s.checks_run},
            {"checks_passed", s.checks_passed},
            {"failures", fails}};
}

Partition partition_from_json(const Json& j)
{
    return guarded(j, [](const Json& x) { return Partition(x.get<std::vector<int>>()); });
}

ClassicalOrbit orbit_from_json(const Json& j)
{
    return guarded(j, [](const Json& x) {
        auto fam = x.at("family").get<std::string>();
        if (fam.size() != 1) throw Error(Errc::parse_error, "family must be one letter");
        return ClassicalOrbit(ClassicalFamily(family_from_char(fam[0]), x.at("N").get<int>()), partition_from_json(x.at("partition")));
    });
}

SpecialDecomposition decomposition_from_json(const Json& j)
{
    return guarded(j, [](const Json& x) {
        SpecialDecomposition d;
        d.skeleton = partition_from_json(x.at("skeleton"));
        d.alphas = x.at("alpha").get<std::vector<int>>();
        d.betas = x.at("beta").get<std::vector<int>>();
        d.q = x.at("q").get<int>();
        return d;
    });
}

WeylFactor weyl_factor_from_json(const Json& j)
{
    return guarded(j, [](const Json& x) {
        WeylFactor f;
        if (x.contains("name")) {
            auto t = parse_cartan_type(x.at("type").get<std::string>());
            if (t.size() != 1) throw Error(Errc::parse_error, "opaque label needs a simple type");
            f.letter = t[0].letter;
            f.rank = t[0].rank;
            f.opaque = x.at("name").get<std::string>();
            f.opaque_b = x.at("b").get<int>();
            return f;
        }
        for (char c : std::string("ABCD")) {
            std::string key(1, c);
            if (!x.contains(key)) continue;
            f.letter = c;
            if (c == 'A') {
                f.a = partition_from_json(x.at(key));
                f.rank = f.a.size() - 1;
            } else {
                f.a = partition_from_json(x.at(key).at(0));
                f.b = partition_from_json(x.at(key).at(1));
                f.rank = f.a.size() + f.b.size();
                f.degenerate = c == 'D' && f.a == f.b;
            }
            return f;
        }
        throw Error(Errc::parse_error, "unrecognised Weyl group label");
    });
}

WeylRepLabel weyl_label_from_json(const Json& j)
{
    return guarded(j, [](const Json& x) {
        WeylRepLabel r;
        for (const auto& f : x) r.factors.push_back(weyl_factor_from_json(f));
        return r;
    });
}

LusztigQuotient quotient_from_json(const Json& j)
{
    return guarded(j, [](const Json& x) { return LusztigQuotient{x.at("q").get<int>(), x.at("sym").get<int>()}; });
}

Vec vec_from_json(const Json& j)
{
    return guarded(j, [](const Json& x) {
        Vec v;
        for (const auto& e : x) v.push_back(parse_rational(e.get<std::string>()));
        return v;
    });
}

UnipotentReport report_from_json(const Json& j)
{
    return guarded(j, [](const Json& x) {
        UnipotentReport r;
        r.type = x.at("type").get<std::string>();
        r.input = x.at("input").get<std::string>();
        r.lambda = vec_from_json(x.at("lambda"));
        r.g_prime = parse_cartan_type(x.at("g_prime").get<std::string>());
        r.l_prime = parse_cartan_type(x.at("l_prime").get<std::string>());
        for (const auto& fj : x.at("factors")) {
            FactorReport f;
            auto t = parse_cartan_type(fj.at("type").get<std::string>());
            f.type = t.at(0);
            f.levi = parse_cartan_type(fj.at("levi").get<std::string>());
            f.induced = fj.at("induced").get<std::string>();
            f.o_prime = fj.at("o_prime").get<std::string>();
            if (fj.contains("induced_orbit")) f.induced_orbit = orbit_from_json(fj.at("induced_orbit"));
            if (fj.contains("o_prime_orbit")) f.o_prime_orbit = orbit_from_json(fj.at("o_prime_orbit"));
            f.sigma = weyl_factor_from_json(fj.at("sigma"));
            f.sigma.letter = f.type.letter;
            f.sigma.rank = f.type.rank;
            f.b = fj.at("b").get<int>();
            f.o_prime_dim = fj.at("o_prime_dim").get<long>();
            f.abar = quotient_from_json(fj.at("abar"));
            r.factors.push_back(std::move(f));
        }
        r.sigma_prime = weyl_label_from_json(x.at("sigma_prime"));
        for (std::size_t i = 0; i < r.factors.size() && i < r.sigma_prime.factors.size(); ++i)
            r.sigma_prime.factors[i] = r.factors[i].sigma;
        r.b = x.at("b").get<int>();
        r.orbit = x.at("orbit").get<std::string>();
        if (x.contains("orbit_classical")) r.orbit_classical = orbit_from_json(x.at("orbit_classical"));
        r.orbit_dim = x.at("orbit_dim").get<long>();
        r.nilcone = x.at("nilcone_dim").get<long>();
        r.pi_count = x.at("pi_count").get<long>();
        r.abar_dual = quotient_from_json(x.at("abar").at("dual"));
        r.abar_orbit = quotient_from_json(x.at("abar").at("orbit"));
        r.abar_oprime = quotient_from_json(x.at("abar").at("o_prime"));
        r.integral = x.at("integral").get<bool>();
        if (x.contains("notice")) r.notice = x.at("notice").get<std::string>();
        return r;
    });
}

}
