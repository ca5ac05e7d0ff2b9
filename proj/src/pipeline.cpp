#include "nilorb/pipeline.hpp"

#include <algorithm>
#include <map>

namespace nilorb {

namespace {

template <class F>
void for_each_index(std::size_t n, Exec exec, F&& body)
{
    if (exec == Exec::serial) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

std::string factor_name(const CartanFactor& f) { return std::string(1, f.letter) + std::to_string(f.rank); }

bool is_positive(const RootSystem& rs, const Vec& r)
{
    const auto& c = rs.coeffs[rs.index_of(r)];
    return std::any_of(c.begin(), c.end(), [](int x) { return x > 0; });
}

LusztigQuotient combine(const LusztigQuotient& x, const LusztigQuotient& y)
{
    if (x.sym && y.sym) throw Error(Errc::integrity, "two symmetric group factors");
    return {x.q + y.q, x.sym ? x.sym : y.sym};
}

// |y| classes: zeros give the cofactor rank, the rest gl blocks
std::pair<std::vector<int>, int> blocks_of(const std::vector<Q>& ys)
{
    std::map<Q, int> count;
    int zeros = 0;
    for (const auto& y : ys) {
        if (y == Q(0)) ++zeros;
        else ++count[y < Q(0) ? -y : y];
    }
    std::vector<int> blocks;
    for (const auto& [v, m] : count) blocks.push_back(m);
    std::sort(blocks.begin(), blocks.end(), std::greater<>());
    return {blocks, zeros};
}

std::vector<int> equal_classes(const std::vector<Q>& ys)
{
    std::map<Q, int> count;
    for (const auto& y : ys) ++count[y];
    std::vector<int> blocks;
    for (const auto& [v, m] : count) blocks.push_back(m);
    std::sort(blocks.begin(), blocks.end(), std::greater<>());
    return blocks;
}

FactorReport classical_factor(CartanFactor type, Family fam, const std::vector<int>& blocks, int cof)
{
    int n = type.rank;
    int N = fam == Family::A ? n + 1 : fam == Family::B ? 2 * n + 1 : 2 * n;
    FactorReport f;
    f.type = type;
    for (int b : blocks)
        if (b > 1) f.levi.push_back({'A', b - 1});
    if (cof > 0 && fam != Family::A) f.levi.push_back({family_char(fam), cof});
    sort_factors(f.levi);
    ClassicalFamily cf(fam, N);
    f.induced_orbit = induce_zero(blocks, fam == Family::A ? 0 : cof, cf);
    f.o_prime_orbit = ls_dual(*f.induced_orbit);
    f.induced = to_string(f.induced_orbit->p);
    f.o_prime = to_string(f.o_prime_orbit->p);
    f.sigma = springer_rep(*f.o_prime_orbit);
    f.sigma.letter = type.letter;
    f.b = b_invariant(f.sigma);
    f.o_prime_dim = dimension(*f.o_prime_orbit);
    f.abar = lusztig_quotient(*f.o_prime_orbit);
    return f;
}

// coordinates (lambda, e_i) of a classical factor from its Bourbaki simple roots
std::vector<Q> factor_coordinates(char letter, const std::vector<Vec>& simple, const Vec& lam)
{
    int n = static_cast<int>(simple.size());
    std::vector<Q> p;
    for (const auto& a : simple) p.push_back(dot(lam, a));
    std::vector<Q> y(n);
    if (letter == 'A') {
        y.resize(n + 1);
        y[0] = 0;
        for (int i = 0; i < n; ++i) y[i + 1] = y[i] - p[i];
        return y;
    }
    int top;
    if (letter == 'B') {
        y[n - 1] = p[n - 1];
        top = n - 1;
    } else if (letter == 'C') {
        y[n - 1] = p[n - 1] / 2;
        top = n - 1;
    } else {
        y[n - 1] = (p[n - 1] - p[n - 2]) / 2;
        y[n - 2] = (p[n - 1] + p[n - 2]) / 2;
        top = n - 2;
    }
    for (int i = top - 1; i >= 0; --i) y[i] = p[i] + y[i + 1];
    return y;
}

}

std::string UnipotentReport::induced_string() const
{
    std::string out;
    for (const auto& f : factors) out += (out.empty() ? "" : " + ") + f.induced;
    return out;
}

std::string UnipotentReport::o_prime_string() const
{
    std::string out;
    for (const auto& f : factors) out += (out.empty() ? "" : " + ") + f.o_prime;
    return out;
}

UnipotentReport analyze(const Catalog& cat, const std::string& type, const std::string& label)
{
    const auto& rec = cat.lookup(type, label);
    if (!rec.special) throw Error(Errc::not_special, type + " orbit " + rec.label + " is not special");
    const auto& rs = cat.root_system(type);
    const auto& dual = cat.lookup(type, rec.dual);

    UnipotentReport r;
    r.type = type;
    r.input = rec.label;
    r.lambda = lambda_from_wdd(rs, rec.wdd);
    r.nilcone = static_cast<long>(rs.roots.size());
    r.orbit = dual.label;
    r.orbit_dim = dual.dim;
    r.abar_dual = *rec.abar;
    r.abar_orbit = *dual.abar;

    auto gp = integral_subsystem(rs, r.lambda);
    auto zl = zero_levi(rs, r.lambda);
    r.g_prime = gp.type;

    if (gp.roots.size() == rs.roots.size()) {
        r.integral = true;
        r.notice = "even orbit: lambda is integral, so g' is all of " + type + " and O' = O";
        r.l_prime = zl.type;
        FactorReport f;
        f.type = rs.type.front();
        f.levi = zl.type;
        f.induced = rec.label;
        f.o_prime = dual.label;
        f.o_prime_dim = dual.dim;
        f.b = static_cast<int>((r.nilcone - dual.dim) / 2);
        f.sigma = {f.type.letter, f.type.rank, {}, {}, false, "springer(" + dual.label + ")", f.b};
        f.abar = *dual.abar;
        r.factors.push_back(f);
    } else {
        for (std::size_t k = 0; k < gp.components.size(); ++k) {
            const auto& simple = gp.components[k];
            CartanFactor ft = gp.type[k];
            std::vector<Vec> levi, levi_pos;
            for (const auto& root : zl.roots) {
                bool inside = true;
                for (std::size_t j = 0; j < gp.components.size() && inside; ++j)
                    if (j != k)
                        for (const auto& s : gp.components[j])
                            if (dot(root, s) != Q(0)) inside = false;
                if (!inside) continue;
                levi.push_back(root);
                if (is_positive(rs, root)) levi_pos.push_back(root);
            }
            CartanType levi_type = levi.empty() ? CartanType{} : subsystem(rs, levi).type;
            if (ft.letter == 'A' || ft.letter == 'B' || ft.letter == 'C' || ft.letter == 'D') {
                auto ys = factor_coordinates(ft.letter, simple, r.lambda);
                FactorReport f;
                if (ft.letter == 'A') f = classical_factor(ft, Family::A, equal_classes(ys), 0);
                else {
                    auto [blocks, cof] = blocks_of(ys);
                    f = classical_factor(ft, family_from_char(ft.letter), blocks, cof);
                }
                if (normalized(f.levi) != normalized(levi_type))
                    throw Error(Errc::integrity, "coordinate Levi " + to_string(f.levi) + " differs from " + to_string(levi_type));
                f.levi = levi_type;
                r.factors.push_back(std::move(f));
                continue;
            }
            std::string name = factor_name(ft);
            auto labels = levi_characteristic(simple, levi_pos);
            const auto* bc = cat.find_by_wdd(name, labels);
            if (!bc) throw Error(Errc::integrity, "no " + name + " orbit with diagram of the Levi " + to_string(levi_type));
            const auto& induced = cat.lookup(name, bc->dual);
            const auto& op = cat.lookup(name, induced.dual);
            FactorReport f;
            f.type = ft;
            f.levi = levi_type;
            f.induced = induced.label;
            f.o_prime = op.label;
            f.o_prime_dim = op.dim;
            f.b = static_cast<int>((nilcone_dim(CartanType{ft}) - op.dim) / 2);
            f.sigma = {ft.letter, ft.rank, {}, {}, false, "springer(" + op.label + ")", f.b};
            f.abar = *op.abar;
            r.factors.push_back(std::move(f));
        }
        for (const auto& f : r.factors) r.l_prime.insert(r.l_prime.end(), f.levi.begin(), f.levi.end());
    }
    for (const auto& f : r.factors) {
        r.sigma_prime.factors.push_back(f.sigma);
        r.b += f.b;
        r.abar_oprime = combine(r.abar_oprime, f.abar);
    }
    r.pi_count = r.abar_oprime.conj_class_count();
    return r;
}

UnipotentReport analyze_classical(const ClassicalOrbit& o)
{
    if (is_very_even(o)) throw Error(Errc::very_even, to_string(o) + " is very even");
    if (!is_special(o)) throw Error(Errc::not_special, to_string(o) + " is not special");
    Family fam = o.fam.letter;
    UnipotentReport r;
    r.type = std::string(1, family_char(fam)) + std::to_string(o.fam.rank());
    r.input = to_string(o.p);
    r.lambda = lambda_from_partition(o.fam, o.p);

    std::vector<Q> ints, halves;
    for (const auto& x : r.lambda) (is_integer(x) ? ints : halves).push_back(x);
    r.integral = halves.empty();

    if (fam == Family::A) {
        for (const auto* group : {&ints, &halves}) {
            if (group->size() < 2) continue;
            CartanFactor ft{'A', static_cast<int>(group->size()) - 1};
            r.g_prime.push_back(ft);
            r.factors.push_back(classical_factor(ft, Family::A, equal_classes(*group), 0));
        }
    } else {
        Family second = fam == Family::C ? Family::C : Family::D;
        std::pair<Family, const std::vector<Q>*> groups[] = {{fam, &ints}, {second, &halves}};
        for (const auto& [f, group] : groups) {
            int m = static_cast<int>(group->size());
            if (m == 0 || (f == Family::D && m == 1)) continue;
            CartanFactor ft{family_char(f), m};
            r.g_prime.push_back(ft);
            auto [blocks, cof] = blocks_of(*group);
            r.factors.push_back(classical_factor(ft, f, blocks, cof));
        }
    }
    if (r.integral) r.notice = "even orbit: lambda is integral, so O' = O";
    for (const auto& f : r.factors) {
        r.l_prime.insert(r.l_prime.end(), f.levi.begin(), f.levi.end());
        r.sigma_prime.factors.push_back(f.sigma);
        r.b += f.b;
        r.abar_oprime = combine(r.abar_oprime, f.abar);
    }
    sort_factors(r.l_prime);
    r.pi_count = r.abar_oprime.conj_class_count();

    ClassicalOrbit d = bv_dual(o);
    r.orbit_classical = d;
    r.orbit = std::string(1, family_char(d.fam.letter)) + to_string(d.p);
    r.orbit_dim = dimension(d);
    r.nilcone = nilcone_dim(d.fam);
    r.abar_dual = lusztig_quotient(o);
    r.abar_orbit = lusztig_quotient(d);
    return r;
}

std::string to_string(RowStatus s)
{
    switch (s) {
    case RowStatus::pass: return "pass";
    case RowStatus::flagged_expected: return "flagged";
    default: return "FAIL";
    }
}

namespace {

// the table may name a different Levi with the same Richardson orbit in the exceptional factor
std::optional<std::string> equivalent_levi(const Catalog& cat, const UnipotentReport& r, const CartanType& table)
{
    const FactorReport* exc = nullptr;
    CartanType rest = table;
    for (const auto& f : r.factors) {
        if (!f.o_prime_orbit) {
            if (exc) return std::nullopt;
            exc = &f;
            continue;
        }
        for (const auto& part : normalized(f.levi)) {
            auto it = std::find(rest.begin(), rest.end(), part);
            if (it == rest.end()) return std::nullopt;
            rest.erase(it);
        }
    }
    if (!exc) return std::nullopt;
    std::string name = factor_name(exc->type);
    std::string levi = to_string(rest);
    const auto* bc = rest.empty() ? cat.find(name, "0") : cat.find(name, levi);
    if (!bc || bc->dual != exc->induced) return std::nullopt;
    return "the table's Levi " + levi + " of " + name + " also induces " + exc->induced;
}

}

RowResult verify_row(const Catalog& cat, const std::string& type, const GoldenRow& row)
{
    RowResult out;
    out.dual_orbit = row.dual_orbit;
    out.expected = row.expect;
    auto flag = [&](const std::string& name, const std::string& detail) {
        if (std::find(out.flags.begin(), out.flags.end(), name) == out.flags.end()) out.flags.push_back(name);
        out.details.push_back(name + ": " + detail);
    };
    try {
        out.report = analyze(cat, type, row.dual_orbit);
    } catch (const Error& e) {
        flag("analyze", e.what());
        out.status = RowStatus::fail;
        return out;
    }
    const auto& r = *out.report;
    if (normalized(r.g_prime) != row.gprime) flag("gprime", "computed " + to_string(r.g_prime) + ", table " + to_string(row.gprime));
    if (normalized(r.l_prime) != row.lprime) {
        std::string detail = "computed " + to_string(r.l_prime) + ", table " + to_string(row.lprime);
        auto equivalent = equivalent_levi(cat, r, row.lprime);
        if (equivalent) flag("lprime-equivalent", detail + "; " + *equivalent);
        else flag("lprime", detail);
    }
    if (r.orbit != row.orbit) flag("orbit", "computed " + r.orbit + ", table " + row.orbit);
    if (r.b != row.b) flag("b", "computed " + std::to_string(r.b) + ", table " + std::to_string(row.b));
    if (!r.codim_ok())
        flag("codim", "2b = " + std::to_string(2 * r.b) + " but codimension is " + std::to_string(r.nilcone - r.orbit_dim));
    if (!(r.abar_dual == r.abar_orbit && r.abar_orbit == r.abar_oprime))
        flag("abar", r.abar_dual.descriptor() + ", " + r.abar_orbit.descriptor() + ", " + r.abar_oprime.descriptor());

    if (row.oprime.size() != r.factors.size()) {
        flag("oprime", "table has " + std::to_string(row.oprime.size()) + " summands for " + std::to_string(r.factors.size()) + " factors");
    } else {
        for (std::size_t k = 0; k < r.factors.size(); ++k) {
            const auto& f = r.factors[k];
            const auto& g = row.oprime[k];
            if (f.o_prime_orbit) {
                if (!g.is_partition) {
                    flag("oprime", "expected a partition for " + factor_name(f.type) + ", table has " + g.label);
                } else if (g.p.size() != f.o_prime_orbit->fam.N) {
                    flag("oprime-size", to_string(g.p) + " has size " + std::to_string(g.p.size()) + " but " + factor_name(f.type) +
                                            " needs " + std::to_string(f.o_prime_orbit->fam.N) + "; computed " + f.o_prime);
                } else if (g.p != f.o_prime_orbit->p) {
                    flag("oprime", "computed " + f.o_prime + ", table " + to_string(g.p));
                }
            } else if (g.is_partition || g.label != f.o_prime) {
                flag("oprime", "computed " + f.o_prime + ", table " + (g.is_partition ? to_string(g.p) : g.label));
            }
        }
    }

    for (const auto& f : r.factors)
        if (label_rank(f.sigma) != f.type.rank)
            flag("sigma-ours", "computed " + to_string(f.sigma) + " does not have rank " + std::to_string(f.type.rank));
    if (row.sigma.size() != r.factors.size()) {
        flag("sigma", "table has " + std::to_string(row.sigma.size()) + " components for " + std::to_string(r.factors.size()) + " factors");
    } else {
        for (std::size_t k = 0; k < r.factors.size(); ++k) {
            const auto& ours = r.factors[k].sigma;
            const auto& g = row.sigma[k];
            switch (g.kind) {
            case GoldenSigma::opaque:
                if (!ours.is_opaque()) flag("sigma", "table gives a name " + g.name + " for a classical factor");
                break;
            case GoldenSigma::partition:
                if (ours.letter != 'A' || ours.a != g.a) flag("sigma", "computed " + to_string(ours) + ", table " + to_string(g.a));
                break;
            case GoldenSigma::bipartition: {
                WeylFactor lit = ours;
                lit.a = g.a;
                lit.b = g.b;
                std::string shown = "((" + to_string(g.a) + "),(" + to_string(g.b) + "))";
                if (ours.is_opaque() || ours.letter == 'A') {
                    flag("sigma", "table gives a bipartition for " + factor_name(r.factors[k].type));
                    break;
                }
                if (g.a.size() + g.b.size() != ours.rank) {
                    flag("sigma-rank", shown + " has rank " + std::to_string(g.a.size() + g.b.size()) + ", " +
                                           factor_name(r.factors[k].type) + " has rank " + std::to_string(ours.rank) +
                                           "; computed " + to_string(ours) + " with b = " + std::to_string(b_invariant(ours)));
                    break;
                }
                int want = row.b - (r.b - r.factors[k].b);
                WeylFactor mirrored = lit;
                std::swap(mirrored.a, mirrored.b);
                if ((ours.letter == 'B' || ours.letter == 'C') && b_invariant(lit) != want) lit = mirrored;
                if (same_rep(lit, ours)) break;
                if (b_invariant(lit) != want && b_invariant(mirrored) != want)
                    flag("sigma-b", shown + " has b = " + std::to_string(b_invariant(lit)) + " but the row needs " + std::to_string(want) +
                                        "; computed " + to_string(ours) + " with b = " + std::to_string(b_invariant(ours)));
                else
                    flag("sigma", "computed " + to_string(ours) + ", table " + shown);
                break;
            }
            }
        }
    }

    if (out.flags.empty() && out.expected.empty()) out.status = RowStatus::pass;
    else {
        auto a = out.flags, b = out.expected;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        out.status = (a == b) ? RowStatus::flagged_expected : RowStatus::fail;
    }
    return out;
}

int TableReport::passed() const
{
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.status == RowStatus::pass; }));
}

int TableReport::flagged() const
{
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.status == RowStatus::flagged_expected; }));
}

int TableReport::failed() const
{
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.status == RowStatus::fail; }));
}

TableReport verify_tables(const Catalog& cat, const std::string& type, Exec exec)
{
    const auto& text = cat.golden_text(type);
    if (text.empty()) throw Error(Errc::unsupported_type, "no reference table for " + type);
    auto table = parse_golden(text);
    if (table.type != type) throw Error(Errc::integrity, "reference table for " + type + " is labelled " + table.type);
    TableReport out;
    out.type = type;
    out.rows.resize(table.rows.size());
    for_each_index(table.rows.size(), exec, [&](std::size_t i) { out.rows[i] = verify_row(cat, type, table.rows[i]); });
    return out;
}

ClassicalOrbit union_formula(const ClassicalOrbit& o)
{
    auto d = decompose_special(o);
    ClassicalFamily target = dual_family(o.fam);
    auto small = d.skeleton.parts();
    for (int b : d.betas) small.insert(small.end(), 2, b);
    Partition sp(small);
    std::vector<int> cols;
    if (!sp.empty()) cols = columns(bv_dual(ClassicalOrbit(ClassicalFamily(o.fam.letter, sp.size()), sp)).p);
    else if (o.fam.letter == Family::C) cols = {1};
    for (int a : d.alphas) cols.insert(cols.end(), 2, a);
    return {target, collapse(from_columns(cols), target)};
}

namespace {

// dominant half of the weights of the given rows
std::vector<Q> dominant_half(const std::vector<int>& rows)
{
    std::vector<Q> w;
    for (int r : rows)
        for (int k = 0; k < r; ++k) w.push_back(Q(r - 1 - 2 * k, 2));
    std::sort(w.begin(), w.end(), std::greater<>());
    w.resize(w.size() / 2);
    return w;
}

}

std::vector<SuiteFailure> check_special_orbit(const ClassicalOrbit& o, long& run, long& passed)
{
    std::vector<SuiteFailure> fails;
    std::string name = to_string(o);
    auto check = [&](bool ok, const std::string& what, const std::string& detail) {
        ++run;
        if (ok) ++passed;
        else fails.push_back({name, what, detail});
    };
    Family fam = o.fam.letter;
    auto d = decompose_special(o);
    check(reassemble(d) == o.p, "reassembly", to_string(reassemble(d)));

    auto q = lusztig_quotient(o);
    check(q.sym == 0 && q.q == d.q, "abar", q.descriptor());
    check(unipotent_count(o) == (1L << d.q), "count", std::to_string(unipotent_count(o)));

    ClassicalOrbit target = bv_dual(o);
    ClassicalOrbit u = union_formula(o);
    check(u == target, "union", to_string(u) + " vs " + to_string(target));

    auto lam = lambda_from_partition(o.fam, o.p);
    std::vector<Q> ints, halves;
    for (const auto& x : lam) (is_integer(x) ? ints : halves).push_back(x);
    std::vector<int> int_rows, half_rows;
    auto& alpha_rows = fam == Family::C ? int_rows : half_rows;
    auto& other_rows = fam == Family::C ? half_rows : int_rows;
    for (int a : d.alphas) alpha_rows.insert(alpha_rows.end(), 2, a);
    for (int b : d.betas) other_rows.insert(other_rows.end(), 2, b);
    for (int s : d.skeleton.parts()) other_rows.push_back(s);
    check(dominant_half(int_rows) == ints && dominant_half(half_rows) == halves, "lambda-split",
          "integer and half-integer coordinates do not match the row groups");

    static thread_local std::map<std::pair<int, int>, RootSystem> systems;
    auto key = std::make_pair(static_cast<int>(fam), o.fam.rank());
    auto it = systems.find(key);
    if (it == systems.end()) it = systems.emplace(key, build(CartanType{{family_char(fam), o.fam.rank()}})).first;
    auto gp = integral_subsystem(it->second, lam);
    CartanType want;
    char second = fam == Family::C ? 'C' : 'D';
    if (!ints.empty()) want.push_back({family_char(fam), static_cast<int>(ints.size())});
    if (!halves.empty()) want.push_back({second, static_cast<int>(halves.size())});
    check(normalized(gp.type) == normalized(want), "gprime", to_string(gp.type) + " vs " + to_string(want));

    auto rep = analyze_classical(o);
    check(rep.codim_ok(), "codim", "b = " + std::to_string(rep.b) + ", codimension " + std::to_string(rep.nilcone - rep.orbit_dim));
    check(rep.abar_dual == rep.abar_orbit && rep.abar_orbit == rep.abar_oprime, "abar-triple",
          rep.abar_dual.descriptor() + ", " + rep.abar_orbit.descriptor() + ", " + rep.abar_oprime.descriptor());
    return fails;
}

SuiteReport classical_suite(Family fam, int max_rank, Exec exec)
{
    if (fam == Family::A) throw Error(Errc::unsupported_type, "the suite covers types B, C and D");
    SuiteReport out;
    out.family = family_char(fam);
    out.max_rank = max_rank;
    std::vector<ClassicalOrbit> work;
    for (int n = fam == Family::D ? 2 : 1; n <= max_rank; ++n) {
        int N = fam == Family::B ? 2 * n + 1 : 2 * n;
        for (auto& o : orbits_of({fam, N}))
            if (is_special(o) && !is_very_even(o)) work.push_back(o);
    }
    out.orbits = static_cast<int>(work.size());
    std::vector<std::vector<SuiteFailure>> fails(work.size());
    std::vector<long> run(work.size()), passed(work.size());
    for_each_index(work.size(), exec, [&](std::size_t i) {
        try {
            fails[i] = check_special_orbit(work[i], run[i], passed[i]);
        } catch (const Error& e) {
            ++run[i];
            fails[i].push_back({to_string(work[i]), "error", e.what()});
        }
    });
    for (std::size_t i = 0; i < work.size(); ++i) {
        out.checks_run += run[i];
        out.checks_passed += passed[i];
        out.failures.insert(out.failures.end(), fails[i].begin(), fails[i].end());
    }
    return out;
}

}
