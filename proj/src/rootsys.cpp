#include "nilorb/rootsys.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

namespace nilorb {

namespace {

int letter_key(char c)
{
    switch (c) {
    case 'E': return 0;
    case 'F': return 1;
    case 'G': return 2;
    case 'D': return 3;
    case 'C': return 4;
    case 'B': return 5;
    default: return 6;
    }
}

bool factor_before(const CartanFactor& a, const CartanFactor& b)
{
    if (letter_key(a.letter) != letter_key(b.letter)) return letter_key(a.letter) < letter_key(b.letter);
    return a.rank > b.rank;
}

Vec unit(int dim, int i, Q scale = 1)
{
    Vec v(dim, Q(0));
    v[i] = scale;
    return v;
}

Vec sub(Vec a, const Vec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

Vec add(Vec a, const Vec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vec scaled(Vec a, const Q& s)
{
    for (auto& x : a) x *= s;
    return a;
}

std::vector<Vec> factor_simple_roots(const CartanFactor& f)
{
    int n = f.rank;
    std::vector<Vec> s;
    auto chain = [&](int dim, int count) {
        for (int i = 0; i < count; ++i) s.push_back(sub(unit(dim, i), unit(dim, i + 1)));
    };
    switch (f.letter) {
    case 'A':
        if (n < 1) break;
        chain(n + 1, n);
        return s;
    case 'B':
        if (n < 1) break;
        chain(n, n - 1);
        s.push_back(unit(n, n - 1));
        return s;
    case 'C':
        if (n < 1) break;
        chain(n, n - 1);
        s.push_back(unit(n, n - 1, 2));
        return s;
    case 'D':
        if (n < 2) break;
        chain(n, n - 1);
        s.push_back(add(unit(n, n - 2), unit(n, n - 1)));
        return s;
    case 'G':
        if (n != 2) break;
        s.push_back(Vec{1, -1, 0});
        s.push_back(Vec{-2, 1, 1});
        return s;
    case 'F': {
        if (n != 4) break;
        Q h(1, 2);
        s = {Vec{0, 1, -1, 0}, Vec{0, 0, 1, -1}, Vec{0, 0, 0, 1}, Vec{h, -h, -h, -h}};
        return s;
    }
    case 'E': {
        if (n < 6 || n > 8) break;
        Q h(1, 2);
        s.push_back(Vec{h, -h, -h, -h, -h, -h, -h, h});
        s.push_back(add(unit(8, 0), unit(8, 1)));
        for (int k = 0; k < 6; ++k) s.push_back(sub(unit(8, k + 1), unit(8, k)));
        s.resize(n);
        return s;
    }
    }
    throw Error(Errc::unsupported_type, "unsupported type " + std::string(1, f.letter) + std::to_string(n));
}

std::vector<Q> solve(std::vector<std::vector<Q>> m, std::vector<Q> rhs)
{
    std::size_t n = rhs.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == Q(0)) ++p;
        if (p == n) throw Error(Errc::integrity, "singular Cartan matrix");
        std::swap(m[p], m[c]);
        std::swap(rhs[p], rhs[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == Q(0)) continue;
            Q f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
            rhs[r] -= f * rhs[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
    return rhs;
}

std::vector<std::vector<Q>> gram(const std::vector<Vec>& s)
{
    std::vector<std::vector<Q>> g(s.size(), std::vector<Q>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) g[i][j] = dot(s[i], s[j]);
    return g;
}

Vec reflect(const Vec& v, const Vec& a)
{
    return sub(v, scaled(a, 2 * dot(v, a) / dot(a, a)));
}

std::vector<Vec> ordered_path(const std::vector<Vec>& comp, const std::vector<std::vector<int>>& adj, int start)
{
    std::vector<Vec> out;
    int prev = -1, cur = start;
    while (cur >= 0) {
        out.push_back(comp[cur]);
        int next = -1;
        for (int v : adj[cur])
            if (v != prev) next = v;
        prev = cur;
        cur = next;
    }
    return out;
}

// one connected simple system -> (factor, Bourbaki ordered roots)
std::pair<CartanFactor, std::vector<Vec>> classify_component(const std::vector<Vec>& comp)
{
    int n = static_cast<int>(comp.size());
    std::vector<std::vector<int>> adj(n);
    int bond = 1;
    Q longest = 0;
    for (const auto& a : comp) longest = std::max(longest, dot(a, a));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || dot(comp[i], comp[j]) == Q(0)) continue;
            adj[i].push_back(j);
            Q m = 4 * dot(comp[i], comp[j]) * dot(comp[i], comp[j]) / (dot(comp[i], comp[i]) * dot(comp[j], comp[j]));
            bond = std::max(bond, static_cast<int>(boost::rational_cast<std::int64_t>(m)));
        }
    auto is_long = [&](int i) { return dot(comp[i], comp[i]) == longest; };
    if (n == 1) return {{'A', 1}, comp};
    std::vector<int> ends;
    int branch = -1;
    for (int i = 0; i < n; ++i) {
        if (adj[i].size() == 1) ends.push_back(i);
        if (adj[i].size() == 3) branch = i;
        if (adj[i].size() > 3) throw Error(Errc::integrity, "not a simple system");
    }
    if (bond == 3) {
        int s = is_long(0) ? 1 : 0;
        return {{'G', 2}, {comp[s], comp[1 - s]}};
    }
    if (bond == 2) {
        if (ends.size() != 2) throw Error(Errc::integrity, "not a simple system");
        if (n == 2) {
            int l = is_long(0) ? 0 : 1;
            return {{'B', 2}, {comp[l], comp[1 - l]}};
        }
        int longs = 0;
        for (int i = 0; i < n; ++i) longs += is_long(i);
        if (n == 4 && longs == 2) {
            int start = is_long(ends[0]) ? ends[0] : ends[1];
            return {{'F', 4}, ordered_path(comp, adj, start)};
        }
        // the doubly bonded end comes last
        auto path = ordered_path(comp, adj, ends[0]);
        if (dot(path[n - 1], path[n - 1]) == dot(path[n - 2], path[n - 2])) path = ordered_path(comp, adj, ends[1]);
        char letter = longs == n - 1 ? 'B' : 'C';
        return {{letter, n}, path};
    }
    if (branch < 0) {
        int start = comp[ends[0]] < comp[ends[1]] ? ends[0] : ends[1];
        return {{'A', n}, ordered_path(comp, adj, start)};
    }
    std::vector<std::vector<int>> arms;
    for (int v : adj[branch]) {
        std::vector<int> arm{v};
        int prev = branch, cur = v;
        for (;;) {
            int next = -1;
            for (int w : adj[cur])
                if (w != prev) next = w;
            if (next < 0) break;
            arm.push_back(next);
            prev = cur;
            cur = next;
        }
        arms.push_back(arm);
    }
    std::sort(arms.begin(), arms.end(), [&](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return comp[a[0]] < comp[b[0]];
    });
    std::vector<Vec> out;
    if (arms[1].size() == 1) {
        for (auto it = arms[2].rbegin(); it != arms[2].rend(); ++it) out.push_back(comp[*it]);
        out.push_back(comp[branch]);
        out.push_back(comp[arms[0][0]]);
        out.push_back(comp[arms[1][0]]);
        return {{'D', n}, out};
    }
    if (arms[0].size() != 1 || arms[1].size() != 2) throw Error(Errc::integrity, "not a simple system");
    out = {comp[arms[1][1]], comp[arms[0][0]], comp[arms[1][0]], comp[branch]};
    for (int v : arms[2]) out.push_back(comp[v]);
    return {{'E', n}, out};
}

}

std::string to_string(const CartanType& t)
{
    if (t.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < t.size();) {
        std::size_t j = i;
        while (j < t.size() && t[j] == t[i]) ++j;
        if (!out.empty()) out += "+";
        if (j - i > 1) out += std::to_string(j - i);
        out += std::string(1, t[i].letter) + std::to_string(t[i].rank);
        i = j;
    }
    return out;
}

CartanType parse_cartan_type(const std::string& text)
{
    static const std::regex tok(R"(\s*(\d*)\s*([A-G])\s*(\d+)\s*)");
    CartanType t;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t plus = text.find('+', pos);
        std::string part = text.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        std::smatch m;
        if (std::regex_match(part, m, tok)) {
            int mult = m[1].length() ? std::stoi(m[1]) : 1;
            for (int k = 0; k < mult; ++k) t.push_back({m[2].str()[0], std::stoi(m[3])});
        } else if (part.find_first_not_of(" 0") != std::string::npos || part.empty()) {
            throw Error(Errc::parse_error, "malformed Cartan type '" + text + "'");
        }
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    sort_factors(t);
    return t;
}

void sort_factors(CartanType& t) { std::stable_sort(t.begin(), t.end(), factor_before); }

CartanType normalized(CartanType t)
{
    CartanType out;
    for (auto f : t) {
        if (f.letter == 'D' && f.rank == 2) {
            out.push_back({'A', 1});
            out.push_back({'A', 1});
            continue;
        }
        if (f.letter == 'D' && f.rank == 3) f = {'A', 3};
        if ((f.letter == 'B' || f.letter == 'C') && f.rank == 1) f = {'A', 1};
        if (f.letter == 'C' && f.rank == 2) f = {'B', 2};
        if (f.rank <= 0 || (f.letter == 'D' && f.rank == 1)) continue;
        out.push_back(f);
    }
    sort_factors(out);
    return out;
}

std::size_t RootSystem::index_of(const Vec& v) const
{
    auto it = std::lower_bound(roots.begin(), roots.end(), v);
    if (it == roots.end() || *it != v) return roots.size();
    return static_cast<std::size_t>(it - roots.begin());
}

RootSystem build(const CartanType& type)
{
    RootSystem rs;
    rs.type = type;
    std::vector<std::vector<Vec>> blocks;
    for (const auto& f : type) {
        blocks.push_back(factor_simple_roots(f));
        rs.ambient_dim += static_cast<int>(blocks.back()[0].size());
    }
    int offset = 0;
    for (const auto& b : blocks) {
        int d = static_cast<int>(b[0].size());
        for (const auto& s : b) {
            Vec v(rs.ambient_dim, Q(0));
            std::copy(s.begin(), s.end(), v.begin() + offset);
            rs.simple_roots.push_back(v);
        }
        offset += d;
    }
    std::set<Vec> seen(rs.simple_roots.begin(), rs.simple_roots.end());
    std::vector<Vec> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const auto& r : frontier)
            for (const auto& s : rs.simple_roots) {
                Vec t = reflect(r, s);
                if (seen.insert(t).second) next.push_back(t);
            }
        frontier = std::move(next);
    }
    rs.roots.assign(seen.begin(), seen.end());
    auto g = gram(rs.simple_roots);
    for (const auto& r : rs.roots) {
        std::vector<Q> rhs;
        for (const auto& s : rs.simple_roots) rhs.push_back(dot(r, s));
        auto c = solve(g, rhs);
        std::vector<int> ci;
        for (const auto& x : c) ci.push_back(static_cast<int>(boost::rational_cast<std::int64_t>(x)));
        bool pos = std::all_of(ci.begin(), ci.end(), [](int x) { return x >= 0; });
        if (pos) rs.positive_roots.push_back(r);
        rs.coeffs.push_back(std::move(ci));
    }
    return rs;
}

RootSystem build(const std::string& type) { return build(parse_cartan_type(type)); }

Subsystem classify(const std::vector<Vec>& simple_roots)
{
    int n = static_cast<int>(simple_roots.size());
    std::vector<int> comp_of(n, -1);
    std::vector<std::vector<Vec>> comps;
    for (int i = 0; i < n; ++i) {
        if (comp_of[i] >= 0) continue;
        std::vector<int> stack{i};
        comp_of[i] = static_cast<int>(comps.size());
        std::vector<Vec> comp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(simple_roots[u]);
            for (int v = 0; v < n; ++v)
                if (comp_of[v] < 0 && dot(simple_roots[u], simple_roots[v]) != Q(0)) {
                    comp_of[v] = comp_of[i];
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
    }
    std::vector<std::pair<CartanFactor, std::vector<Vec>>> parts;
    for (const auto& c : comps) parts.push_back(classify_component(c));
    std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return factor_before(a.first, b.first);
        return a.second < b.second;
    });
    Subsystem out;
    out.simple_roots = simple_roots;
    for (auto& [f, roots] : parts) {
        out.type.push_back(f);
        out.components.push_back(roots);
    }
    return out;
}

Subsystem subsystem(const RootSystem& rs, std::vector<Vec> roots)
{
    std::sort(roots.begin(), roots.end());
    std::vector<Vec> positive;
    for (const auto& r : roots) {
        std::size_t i = rs.index_of(r);
        if (i == rs.roots.size()) throw Error(Errc::integrity, "vector is not a root");
        const auto& c = rs.coeffs[i];
        if (std::any_of(c.begin(), c.end(), [](int x) { return x > 0; })) positive.push_back(r);
    }
    std::set<Vec> pos(positive.begin(), positive.end());
    std::set<Vec> decomposable;
    for (std::size_t i = 0; i < positive.size(); ++i)
        for (std::size_t j = i + 1; j < positive.size(); ++j) {
            Vec s = add(positive[i], positive[j]);
            if (pos.count(s)) decomposable.insert(s);
        }
    std::vector<Vec> simple;
    for (const auto& r : positive)
        if (!decomposable.count(r)) simple.push_back(r);
    Subsystem out = classify(simple);
    out.roots = std::move(roots);
    return out;
}

Vec lambda_from_wdd(const RootSystem& rs, const WeightedDynkinDiagram& wdd)
{
    if (static_cast<int>(wdd.size()) != rs.rank())
        throw Error(Errc::size_mismatch, "diagram has " + std::to_string(wdd.size()) + " labels, rank is " + std::to_string(rs.rank()));
    std::vector<Q> rhs;
    for (int x : wdd) {
        if (x < 0 || x > 2) throw Error(Errc::parse_error, "diagram labels must be 0, 1 or 2");
        rhs.push_back(Q(x, 2));
    }
    auto c = solve(gram(rs.simple_roots), rhs);
    Vec lam(rs.ambient_dim, Q(0));
    for (std::size_t i = 0; i < c.size(); ++i) lam = add(lam, scaled(rs.simple_roots[i], c[i]));
    return lam;
}

Vec lambda_from_partition(const ClassicalFamily& fam, const Partition& p)
{
    if (!is_valid(p, fam)) throw Error(Errc::invalid_orbit, to_string(p) + " is not an orbit of type " + family_char(fam.letter));
    Vec w;
    for (int r : p.parts())
        for (int k = 0; k < r; ++k) w.push_back(Q(r - 1 - 2 * k, 2));
    std::sort(w.begin(), w.end(), std::greater<>());
    if (fam.letter != Family::A) w.resize(fam.rank());
    return w;
}

Subsystem integral_subsystem(const RootSystem& rs, const Vec& lam)
{
    if (static_cast<int>(lam.size()) != rs.ambient_dim) throw Error(Errc::size_mismatch, "lambda has the wrong dimension");
    std::vector<Vec> keep;
    for (const auto& r : rs.roots)
        if (is_integer(dot(lam, r))) keep.push_back(r);
    return subsystem(rs, std::move(keep));
}

Subsystem zero_levi(const RootSystem& rs, const Vec& lam)
{
    if (static_cast<int>(lam.size()) != rs.ambient_dim) throw Error(Errc::size_mismatch, "lambda has the wrong dimension");
    std::vector<Vec> keep;
    for (const auto& r : rs.roots)
        if (dot(lam, r) == Q(0)) keep.push_back(r);
    return subsystem(rs, std::move(keep));
}

WeightedDynkinDiagram levi_characteristic(const std::vector<Vec>& simple, const std::vector<Vec>& levi_positive)
{
    Vec h(simple.empty() ? 0 : simple[0].size(), Q(0));
    for (const auto& b : levi_positive) h = add(h, scaled(b, Q(2) / dot(b, b)));
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& a : simple)
            if (dot(h, a) < Q(0)) {
                h = reflect(h, a);
                changed = true;
            }
    }
    WeightedDynkinDiagram w;
    for (const auto& a : simple) {
        Q x = dot(h, a);
        if (!is_integer(x)) throw Error(Errc::integrity, "non-integral characteristic");
        w.push_back(static_cast<int>(x.numerator()));
    }
    return w;
}

}
