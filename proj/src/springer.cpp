#include "nilorb/springer.hpp"

#include <algorithm>
#include <sstream>

namespace nilorb {

int n_of(const Partition& p)
{
    int s = 0;
    for (int i = 0; i < p.length(); ++i) s += i * p[i];
    return s;
}

WeylFactor springer_rep(const ClassicalOrbit& o)
{
    WeylFactor f;
    f.letter = family_char(o.fam.letter);
    f.rank = o.fam.rank();
    if (o.fam.letter == Family::A) {
        f.a = o.p;
        return f;
    }
    auto rows = padded_rows(o.p, o.fam.letter != Family::D);
    std::vector<int> odd, even;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        int x = rows[i] + static_cast<int>(i);
        (x % 2 ? odd : even).push_back(x);
    }
    std::vector<int> from_odd, from_even;
    for (std::size_t i = 0; i < odd.size(); ++i) from_odd.push_back((odd[i] - 1) / 2 - static_cast<int>(i));
    for (std::size_t i = 0; i < even.size(); ++i) from_even.push_back(even[i] / 2 - static_cast<int>(i));
    if (o.fam.letter == Family::B) {
        f.a = Partition(from_odd);
        f.b = Partition(from_even);
    } else {
        f.a = Partition(from_even);
        f.b = Partition(from_odd);
    }
    f.degenerate = o.fam.letter == Family::D && f.a == f.b;
    return f;
}

int b_invariant(const WeylFactor& f)
{
    if (f.is_opaque()) return f.opaque_b;
    switch (f.letter) {
    case 'A': return n_of(f.a);
    case 'B':
    case 'C': return 2 * n_of(f.a) + 2 * n_of(f.b) + f.b.size();
    default: return 2 * n_of(f.a) + 2 * n_of(f.b) + std::min(f.a.size(), f.b.size());
    }
}

int b_invariant(const WeylRepLabel& r)
{
    int s = 0;
    for (const auto& f : r.factors) s += b_invariant(f);
    return s;
}

WeylFactor tensor_sign(const WeylFactor& f)
{
    if (f.is_opaque()) throw Error(Errc::unsupported_type, "cannot tensor an opaque label");
    WeylFactor g = f;
    if (f.letter == 'A') {
        g.a = transpose(f.a);
        return g;
    }
    g.a = transpose(f.b);
    g.b = transpose(f.a);
    return g;
}

WeylRepLabel tensor_sign(const WeylRepLabel& r)
{
    WeylRepLabel out;
    for (const auto& f : r.factors) out.factors.push_back(tensor_sign(f));
    return out;
}

int label_rank(const WeylFactor& f)
{
    if (f.is_opaque()) return f.rank;
    return f.letter == 'A' ? f.a.size() - 1 : f.a.size() + f.b.size();
}

bool same_rep(const WeylFactor& x, const WeylFactor& y)
{
    if (x.letter != y.letter || x.rank != y.rank) return false;
    if (x.is_opaque() || y.is_opaque()) return x.opaque == y.opaque;
    if (x.a == y.a && x.b == y.b) return true;
    return x.letter == 'D' && x.a == y.b && x.b == y.a;
}

static std::string compact(const Partition& p)
{
    if (p.empty()) return "phi";
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < p.length(); ++i) os << (i ? "," : "") << p[i];
    os << ')';
    return os.str();
}

std::string to_string(const WeylFactor& f)
{
    if (f.is_opaque()) return f.opaque;
    if (f.letter == 'A') return compact(f.a);
    if (f.letter == 'D') return "{" + compact(f.a) + "," + compact(f.b) + "}";
    return "(" + compact(f.a) + "," + compact(f.b) + ")";
}

std::string to_string(const WeylRepLabel& r)
{
    std::string out;
    for (const auto& f : r.factors) out += (out.empty() ? "" : " x ") + to_string(f);
    return out;
}

}
