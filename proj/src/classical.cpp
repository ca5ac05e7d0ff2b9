#include "nilorb/classical.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

namespace nilorb {

namespace {

bool alpha_parity(int v, Family f) { return f == Family::C ? v % 2 == 1 : v % 2 == 0; }

long sum_squares(const std::vector<int>& v)
{
    long s = 0;
    for (int x : v) s += static_cast<long>(x) * x;
    return s;
}

}

ClassicalOrbit::ClassicalOrbit(ClassicalFamily f, Partition q) : fam(f), p(std::move(q))
{
    if (!is_valid(p, fam))
        throw Error(Errc::invalid_orbit, to_string(p) + " is not a nilpotent orbit of type " + family_char(fam.letter));
}

std::string LusztigQuotient::descriptor() const
{
    std::string out;
    if (sym) out = "S" + std::to_string(sym);
    if (q == 1) out += out.empty() ? "S2" : "xS2";
    else if (q > 1) out += (out.empty() ? "" : "x") + std::string("(Z/2)^") + std::to_string(q);
    return out.empty() ? "1" : out;
}

long LusztigQuotient::conj_class_count() const
{
    long classes = sym == 3 ? 3 : sym == 4 ? 5 : sym == 5 ? 7 : 1;
    return classes << q;
}

LusztigQuotient parse_quotient(const std::string& text)
{
    static const std::regex factor(R"(S([2-5])|Z/2|\(Z/2\)\^(\d+))");
    LusztigQuotient out;
    if (text == "1" || text == "trivial") return out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t x = text.find('x', pos);
        std::string part = text.substr(pos, x == std::string::npos ? std::string::npos : x - pos);
        std::smatch m;
        if (!std::regex_match(part, m, factor)) throw Error(Errc::parse_error, "malformed quotient '" + text + "'");
        if (m[1].matched) {
            int s = std::stoi(m[1]);
            if (s == 2) ++out.q;
            else if (out.sym) throw Error(Errc::parse_error, "two symmetric factors in '" + text + "'");
            else out.sym = s;
        } else {
            out.q += m[2].matched ? std::stoi(m[2]) : 1;
        }
        if (x == std::string::npos) break;
        pos = x + 1;
    }
    return out;
}

bool is_very_even(const ClassicalOrbit& o)
{
    if (o.fam.letter != Family::D) return false;
    return std::all_of(o.p.parts().begin(), o.p.parts().end(), [](int x) { return x % 2 == 0; });
}

bool is_special(const ClassicalOrbit& o)
{
    switch (o.fam.letter) {
    case Family::A: return true;
    case Family::B: return parity_ok(transpose(o.p), Family::B);
    default: return parity_ok(transpose(o.p), Family::C);
    }
}

SpecialDecomposition decompose_special(const ClassicalOrbit& o)
{
    Family f = o.fam.letter;
    if (f == Family::A) throw Error(Errc::unsupported_type, "decomposition is defined for types B, C, D");
    if (is_very_even(o)) throw Error(Errc::very_even, to_string(o) + " is very even");
    if (!is_special(o)) throw Error(Errc::not_special, to_string(o) + " is not special");
    int off = f == Family::C ? 1 : 0;
    auto rows = padded_rows(o.p, f != Family::D);
    SpecialDecomposition d;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = rows.size() - 1; i >= 1; --i) {
            int v = rows[i];
            if (v == 0 || rows[i - 1] != v) continue;
            int top = static_cast<int>(i) + off;
            bool alpha = alpha_parity(v, f);
            if ((alpha && top % 2 == 1) || (!alpha && top % 2 == 0)) {
                (alpha ? d.alphas : d.betas).push_back(v);
                rows.erase(rows.begin() + static_cast<long>(i) - 1, rows.begin() + static_cast<long>(i) + 1);
                changed = true;
                break;
            }
        }
    }
    for (int v : rows)
        if (v > 0 && alpha_parity(v, f)) throw Error(Errc::integrity, "decomposition left an unpaired row");
    for (std::size_t i = rows.size() - 1; i >= 1; --i)
        if ((static_cast<int>(i) + off) % 2 == 0 && rows[i] <= rows[i - 1])
            throw Error(Errc::integrity, "decomposition skeleton is not interlaced");
    int len = static_cast<int>(rows.size());
    d.q = f == Family::D ? (len - 2) / 2 : (len - 1) / 2;
    d.skeleton = Partition(rows);
    std::sort(d.alphas.begin(), d.alphas.end(), std::greater<>());
    std::sort(d.betas.begin(), d.betas.end(), std::greater<>());
    return d;
}

Partition reassemble(const SpecialDecomposition& d)
{
    auto v = d.skeleton.parts();
    for (int a : d.alphas) v.insert(v.end(), 2, a);
    for (int b : d.betas) v.insert(v.end(), 2, b);
    return Partition(v);
}

long dimension(const ClassicalOrbit& o)
{
    long N = o.fam.N;
    long s = sum_squares(columns(o.p));
    long odd = std::count_if(o.p.parts().begin(), o.p.parts().end(), [](int x) { return x % 2 == 1; });
    switch (o.fam.letter) {
    case Family::A: return N * N - s;
    case Family::C: return (N * N + N) / 2 - (s + odd) / 2;
    default: return (N * N - s) / 2 - (N - odd) / 2;
    }
}

long nilcone_dim(const ClassicalFamily& fam)
{
    long n = fam.rank();
    switch (fam.letter) {
    case Family::A: return static_cast<long>(fam.N) * fam.N - fam.N;
    case Family::D: return 2 * n * (n - 1);
    default: return 2 * n * n;
    }
}

ClassicalOrbit ls_dual(const ClassicalOrbit& o)
{
    Partition t = transpose(o.p);
    if (o.fam.letter == Family::A) return {o.fam, t};
    return {o.fam, collapse(t, o.fam)};
}

ClassicalFamily dual_family(const ClassicalFamily& fam)
{
    switch (fam.letter) {
    case Family::B: return {Family::C, fam.N - 1};
    case Family::C: return {Family::B, fam.N + 1};
    default: return fam;
    }
}

ClassicalOrbit bv_dual(const ClassicalOrbit& o)
{
    ClassicalFamily g = dual_family(o.fam);
    auto t = transpose(o.p).parts();
    switch (o.fam.letter) {
    case Family::B:
        --t.back();
        return {g, collapse(Partition(t), g)};
    case Family::C:
        if (t.empty()) t.push_back(0);
        ++t.front();
        return {g, collapse(Partition(t), g)};
    default:
        return ls_dual(o);
    }
}

ClassicalOrbit induce_zero(const std::vector<int>& gl_blocks, int cofactor_rank, const ClassicalFamily& target)
{
    std::vector<int> cols;
    int total = 0;
    for (int b : gl_blocks) {
        if (b <= 0) throw Error(Errc::size_mismatch, "gl blocks must be positive");
        total += b;
    }
    if (target.letter == Family::A) {
        if (cofactor_rank != 0 || total != target.N)
            throw Error(Errc::size_mismatch, "gl blocks do not fill " + to_string(target));
        return {target, from_columns(gl_blocks)};
    }
    int cof_dim = 2 * cofactor_rank + (target.letter == Family::B ? 1 : 0);
    if (cofactor_rank < 0 || 2 * total + cof_dim != target.N)
        throw Error(Errc::size_mismatch, "Levi does not fit in " + to_string(target));
    for (int b : gl_blocks) cols.insert(cols.end(), 2, b);
    if (cof_dim > 0) cols.push_back(cof_dim);
    return {target, collapse(from_columns(cols), target)};
}

LusztigQuotient lusztig_quotient(const ClassicalOrbit& o)
{
    if (o.fam.letter == Family::A || is_very_even(o)) return {};
    return {decompose_special(o).q, 0};
}

long unipotent_count(const ClassicalOrbit& o) { return lusztig_quotient(o).conj_class_count(); }

std::vector<ClassicalOrbit> orbits_of(const ClassicalFamily& fam)
{
    std::vector<ClassicalOrbit> out;
    for (const auto& p : partitions_of(fam.N))
        if (parity_ok(p, fam.letter)) out.emplace_back(fam, p);
    return out;
}

std::string to_string(const ClassicalOrbit& o)
{
    return std::string("(") + family_char(o.fam.letter) + ", " + to_string(o.p) + ")";
}

}
