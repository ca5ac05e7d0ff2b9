#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "nilorb/serialize.hpp"

using namespace nilorb;

namespace {

struct Options {
    bool json = false;
    std::string data_dir;
    std::string family;
    int n = 0;
    std::string type;
    std::string arg;
    std::string arg2;
    bool cross = false;
    int rank = 6;
};

const Catalog& catalog(const Options& opt)
{
    static std::optional<Catalog> loaded;
    if (opt.data_dir.empty()) return Catalog::load_embedded();
    if (!loaded) loaded = Catalog::load(opt.data_dir);
    return *loaded;
}

ClassicalOrbit classical_input(const std::string& family, int n, const std::string& text)
{
    if (family.size() != 1) throw Error(Errc::parse_error, "--family takes one of A, B, C, D");
    Partition p = parse_partition(text);
    ClassicalFamily fam(family_from_char(family[0]), n ? n : p.size());
    return {fam, p};
}

bool is_exceptional(const std::string& t) { return t == "G2" || t == "F4" || t == "E6" || t == "E7" || t == "E8"; }

void print(const Options& opt, const Json& j, const std::string& text)
{
    if (opt.json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : sep) + s;
    return out;
}

std::string vec_string(const Vec& v)
{
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(to_string(x));
    return "(" + join(s, ", ") + ")";
}

std::string report_text(const UnipotentReport& r)
{
    std::ostringstream os;
    os << "orbit       " << r.type << " " << r.input << "\n"
       << "lambda      " << vec_string(r.lambda) << "\n"
       << "g'          " << to_string(r.g_prime) << "\n"
       << "l'          " << to_string(r.l_prime) << "\n"
       << "(O')^vee    " << r.induced_string() << "\n"
       << "O'          " << r.o_prime_string() << "\n"
       << "sigma'      " << to_string(r.sigma_prime) << "\n"
       << "b           " << r.b << "\n"
       << "O           " << r.orbit << "  (dim " << r.orbit_dim << ", nilcone " << r.nilcone << ")\n"
       << "Abar        " << r.abar_dual.descriptor() << " / " << r.abar_orbit.descriptor() << " / " << r.abar_oprime.descriptor() << "\n"
       << "|Pi|        " << r.pi_count << "\n";
    if (!r.notice.empty()) os << "notice      " << r.notice << "\n";
    return os.str();
}

int cmd_dual(const Options& opt)
{
    if (!opt.type.empty()) {
        const auto& rec = catalog(opt).lookup(opt.type, opt.arg);
        const auto& d = catalog(opt).lookup(opt.type, rec.dual);
        print(opt, {{"type", opt.type}, {"orbit", rec.label}, {"dual", d.label}}, opt.type + " " + rec.label + " -> " + d.label + "\n");
        return 0;
    }
    auto o = classical_input(opt.family, opt.n, opt.arg);
    auto d = opt.cross ? bv_dual(o) : ls_dual(o);
    print(opt, {{"orbit", to_json(o)}, {"dual", to_json(d)}, {"kind", opt.cross ? "bv" : "ls"}}, to_string(o) + " -> " + to_string(d) + "\n");
    return 0;
}

int cmd_special(const Options& opt)
{
    if (!opt.type.empty()) {
        const auto& rec = catalog(opt).lookup(opt.type, opt.arg);
        Json j = to_json(rec);
        print(opt, j, opt.type + " " + rec.label + (rec.special ? " is special, Abar = " + rec.abar->descriptor() : " is not special") + "\n");
        return 0;
    }
    auto o = classical_input(opt.family, opt.n, opt.arg);
    Json j = {{"orbit", to_json(o)}, {"special", is_special(o)}, {"very_even", is_very_even(o)}};
    std::string text = to_string(o) + (is_special(o) ? " is special" : " is not special") + "\n";
    if (is_special(o) && o.fam.letter != Family::A && !is_very_even(o)) {
        auto d = decompose_special(o);
        auto q = lusztig_quotient(o);
        j["decomposition"] = to_json(d);
        j["abar"] = to_json(q);
        j["unipotent_count"] = unipotent_count(o);
        std::vector<std::string> a, b;
        for (int x : d.alphas) a.push_back(std::to_string(x));
        for (int x : d.betas) b.push_back(std::to_string(x));
        text += "skeleton " + to_string(d.skeleton) + "  alpha (" + join(a, ",") + ")  beta (" + join(b, ",") + ")  q = " +
                std::to_string(d.q) + "\nAbar " + q.descriptor() + ", |Pi| = " + std::to_string(unipotent_count(o)) + "\n";
    }
    print(opt, j, text);
    return 0;
}

int cmd_lambda(const Options& opt, bool gprime)
{
    Vec lam;
    const RootSystem* rs = nullptr;
    std::optional<RootSystem> built;
    Json j;
    std::string head;
    if (!opt.type.empty()) {
        const auto& rec = catalog(opt).lookup(opt.type, opt.arg);
        rs = &catalog(opt).root_system(opt.type);
        lam = lambda_from_wdd(*rs, rec.wdd);
        j["type"] = opt.type;
        j["orbit"] = rec.label;
        head = opt.type + " " + rec.label;
    } else {
        auto o = classical_input(opt.family, opt.n, opt.arg);
        lam = lambda_from_partition(o.fam, o.p);
        built = build(CartanType{{family_char(o.fam.letter), o.fam.rank()}});
        rs = &*built;
        j["orbit"] = to_json(o);
        head = to_string(o);
    }
    j["lambda"] = to_json(lam);
    std::string text = head + "\nlambda " + vec_string(lam) + "\n";
    if (gprime) {
        auto g = integral_subsystem(*rs, lam);
        auto l = zero_levi(*rs, lam);
        j["g_prime"] = to_string(g.type);
        j["l_prime"] = to_string(l.type);
        j["integral_roots"] = g.roots.size();
        text += "g' " + to_string(g.type) + " (" + std::to_string(g.roots.size()) + " roots)\nl' " + to_string(l.type) + "\n";
    }
    print(opt, j, text);
    return 0;
}

int cmd_springer(const Options& opt)
{
    auto o = classical_input(opt.family, opt.n, opt.arg);
    auto s = springer_rep(o);
    int b = b_invariant(s);
    print(opt, {{"orbit", to_json(o)}, {"springer", to_json(s)}, {"b", b}, {"dimension", dimension(o)}},
          to_string(o) + " -> " + to_string(s) + ", b = " + std::to_string(b) + "\n");
    return 0;
}

int cmd_analyze(const Options& opt)
{
    UnipotentReport r;
    if (is_exceptional(opt.type)) r = analyze(catalog(opt), opt.type, opt.arg);
    else r = analyze_classical(classical_input(opt.type, opt.n, opt.arg));
    print(opt, to_json(r), report_text(r));
    return 0;
}

int cmd_verify(const Options& opt)
{
    std::vector<std::string> types;
    if (opt.type == "all") {
        for (const auto& t : catalog(opt).types())
            if (!catalog(opt).golden_text(t).empty()) types.push_back(t);
    } else {
        types.push_back(opt.type);
    }
    Json all = Json::array();
    std::ostringstream os;
    int failed = 0;
    for (const auto& t : types) {
        auto rep = verify_tables(catalog(opt), t);
        failed += rep.failed();
        all.push_back(to_json(rep));
        for (const auto& row : rep.rows) {
            os << t << "  " << row.dual_orbit << "  " << to_string(row.status);
            if (!row.flags.empty()) os << "  [" << join(row.flags, ",") << "]";
            os << "\n";
            if (row.status != RowStatus::pass)
                for (const auto& d : row.details) os << "    " << d << "\n";
        }
        os << t << ": " << rep.rows.size() << " rows, " << rep.passed() << " pass, " << rep.flagged() << " flagged as annotated, "
           << rep.failed() << " fail\n";
    }
    print(opt, types.size() == 1 ? all[0] : all, os.str());
    return failed ? 1 : 0;
}

int cmd_suite(const Options& opt)
{
    if (opt.family.size() != 1) throw Error(Errc::parse_error, "--family takes one of B, C, D");
    if (opt.rank < 1 || opt.rank > 8) throw Error(Errc::size_mismatch, "--rank must be between 1 and 8");
    auto s = classical_suite(family_from_char(opt.family[0]), opt.rank);
    std::ostringstream os;
    os << "type " << s.family << " up to rank " << s.max_rank << ": " << s.orbits << " special orbits, " << s.checks_passed << "/"
       << s.checks_run << " checks pass\n";
    for (const auto& f : s.failures) os << "  " << f.orbit << " " << f.check << ": " << f.detail << "\n";
    print(opt, to_json(s), os.str());
    return s.failures.empty() ? 0 : 1;
}

int cmd_orbits(const Options& opt)
{
    Json j = Json::array();
    std::ostringstream os;
    if (!opt.type.empty()) {
        for (const auto& r : catalog(opt).orbits(opt.type)) {
            j.push_back(to_json(r));
            std::vector<std::string> w;
            for (int x : r.wdd) w.push_back(std::to_string(x));
            os << r.label << "\t" << join(w, "") << "\t" << r.dim << "\t" << (r.special ? "special" : "-") << "\t" << r.dual << "\n";
        }
    } else {
        if (opt.family.size() != 1 || opt.n <= 0) throw Error(Errc::parse_error, "orbits list needs --type, or --family and --n");
        for (const auto& o : orbits_of(ClassicalFamily(family_from_char(opt.family[0]), opt.n))) {
            Json e = to_json(o);
            e["dimension"] = dimension(o);
            e["special"] = is_special(o);
            j.push_back(e);
            os << to_string(o.p) << "\t" << dimension(o) << "\t" << (is_special(o) ? "special" : "-") << "\n";
        }
    }
    print(opt, j, os.str());
    return 0;
}

}

int main(int argc, char** argv)
{
    CLI::App app{"Special nilpotent orbits, duality and unipotent representation counts"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "machine readable output");
    app.add_option("--data-dir", opt.data_dir, "read orbit tables from this directory instead of the built-in copy");

    auto classical_opts = [&](CLI::App* sub) {
        sub->add_option("--family", opt.family, "A, B, C or D");
        sub->add_option("--n", opt.n, "natural dimension N (defaults to the partition size)");
        sub->add_option("--type", opt.type, "exceptional type G2, F4, E6, E7 or E8");
    };

    auto* dual = app.add_subcommand("dual", "Lusztig-Spaltenstein dual, or the cross-type dual with --cross");
    classical_opts(dual);
    dual->add_option("orbit", opt.arg, "partition such as [3,2,2] or Bala-Carter label")->required();
    dual->add_flag("--cross", opt.cross, "dual orbit in the Langlands dual algebra");

    auto* special = app.add_subcommand("special", "specialness test and decomposition");
    classical_opts(special);
    special->add_option("orbit", opt.arg)->required();

    auto* lambda = app.add_subcommand("lambda", "infinitesimal character one half of h");
    classical_opts(lambda);
    lambda->add_option("orbit", opt.arg)->required();

    auto* gprime = app.add_subcommand("gprime", "integral subsystem and zero Levi of lambda");
    classical_opts(gprime);
    gprime->add_option("orbit", opt.arg)->required();

    auto* springer = app.add_subcommand("springer", "Springer representation and b-value of a classical orbit");
    classical_opts(springer);
    springer->add_option("orbit", opt.arg)->required();

    auto* an = app.add_subcommand("analyze", "full report for an orbit of the dual algebra");
    an->add_option("type", opt.type, "G2, F4, E6, E7, E8 or a classical family letter")->required();
    an->add_option("orbit", opt.arg, "Bala-Carter label or partition")->required();
    an->add_option("--n", opt.n, "natural dimension for classical input");

    auto* verify = app.add_subcommand("verify-tables", "re-derive every row of a reference table");
    verify->add_option("type", opt.type, "F4, E6, E7, E8 or all")->required();

    auto* suite = app.add_subcommand("classical-suite", "checks on all special orbits of a classical family");
    suite->add_option("--family", opt.family, "B, C or D")->required();
    suite->add_option("--rank", opt.rank, "largest rank, at most 8");

    auto* orbits = app.add_subcommand("orbits", "orbit listings");
    auto* list = orbits->add_subcommand("list", "list the orbits of a type");
    orbits->require_subcommand(1);
    classical_opts(list);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*dual) return cmd_dual(opt);
        if (*special) return cmd_special(opt);
        if (*lambda) return cmd_lambda(opt, false);
        if (*gprime) return cmd_lambda(opt, true);
        if (*springer) return cmd_springer(opt);
        if (*an) return cmd_analyze(opt);
        if (*verify) return cmd_verify(opt);
        if (*suite) return cmd_suite(opt);
        if (*list) return cmd_orbits(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
