#include "nilorb/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace nilorb {

std::string to_string(const Q& q)
{
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Q dot(const Vec& a, const Vec& b)
{
    Q s = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_integer(const Q& q) { return q.denominator() == 1; }

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts)
{
    for (int x : parts)
        if (x < 0) throw Error(Errc::parse_error, "negative part in partition");
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    parts_ = std::move(parts);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int v) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

ClassicalFamily::ClassicalFamily(Family f, int n) : letter(f), N(n)
{
    if (n < 1) throw Error(Errc::size_mismatch, "natural dimension must be positive");
    if (f == Family::B && n % 2 == 0) throw Error(Errc::size_mismatch, "type B needs odd N");
    if ((f == Family::C || f == Family::D) && n % 2 == 1)
        throw Error(Errc::size_mismatch, "types C and D need even N");
}

int ClassicalFamily::rank() const
{
    switch (letter) {
    case Family::A: return N - 1;
    case Family::B: return (N - 1) / 2;
    default: return N / 2;
    }
}

char family_char(Family f) { return "ABCD"[static_cast<int>(f)]; }

Family family_from_char(char c)
{
    switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    }
    throw Error(Errc::parse_error, std::string("unknown classical family '") + c + "'");
}

std::string to_string(const ClassicalFamily& fam)
{
    return std::string(1, family_char(fam.letter)) + "(N=" + std::to_string(fam.N) + ")";
}

Partition transpose(const Partition& p)
{
    std::vector<int> t(p.empty() ? 0 : p[0], 0);
    for (int x : p.parts())
        for (int i = 0; i < x; ++i) ++t[i];
    return Partition(std::move(t));
}

bool dominates(const Partition& a, const Partition& b)
{
    int sa = 0, sb = 0;
    int n = std::max(a.length(), b.length());
    for (int i = 0; i < n; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) return false;
    }
    return true;
}

bool parity_ok(const Partition& p, Family f)
{
    if (f == Family::A) return true;
    int bad_parity = (f == Family::C) ? 1 : 0;
    const auto& v = p.parts();
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if (v[i] % 2 == bad_parity && (j - i) % 2 == 1) return false;
        i = j;
    }
    return true;
}

bool is_valid(const Partition& p, const ClassicalFamily& fam)
{
    if (p.size() != fam.N)
        throw Error(Errc::size_mismatch, "partition " + to_string(p) + " does not have size " + std::to_string(fam.N));
    return parity_ok(p, fam.letter);
}

Partition collapse(const Partition& p, const ClassicalFamily& fam)
{
    if (p.size() != fam.N)
        throw Error(Errc::size_mismatch, "partition " + to_string(p) + " does not have size " + std::to_string(fam.N));
    if (fam.letter == Family::A) return p;
    int bad_parity = (fam.letter == Family::C) ? 1 : 0;
    std::vector<int> v = p.parts();
    while (!parity_ok(Partition(v), fam.letter)) {
        int q = -1;
        for (int x : v)
            if (x % 2 == bad_parity && std::count(v.begin(), v.end(), x) % 2 == 1) q = std::max(q, x);
        std::size_t i = v.size() - 1 - std::distance(v.rbegin(), std::find(v.rbegin(), v.rend(), q));
        --v[i];
        std::size_t j = i + 1;
        while (j < v.size() && v[j] >= q - 1) ++j;
        if (j == v.size()) v.push_back(0);
        ++v[j];
        v = Partition(v).parts();
    }
    return Partition(v);
}

Partition from_columns(std::vector<int> cols) { return transpose(Partition(std::move(cols))); }

std::vector<int> columns(const Partition& p) { return transpose(p).parts(); }

std::vector<int> padded_rows(const Partition& p, bool odd_count)
{
    std::vector<int> rows(p.parts().rbegin(), p.parts().rend());
    if ((rows.size() % 2 == 1) != odd_count) rows.insert(rows.begin(), 0);
    return rows;
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, max_part); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

static std::string join(const std::vector<int>& v, char open, char close)
{
    std::ostringstream os;
    os << open;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << close;
    return os.str();
}

std::string to_string(const Partition& p) { return join(p.parts(), '[', ']'); }

std::string columns_string(const Partition& p) { return join(columns(p), '(', ')'); }

Partition parse_partition(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    bool cols = false;
    if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
        char close = s.front() == '[' ? ']' : ')';
        cols = s.front() == '(';
        if (s.back() != close) throw Error(Errc::parse_error, "unbalanced brackets in '" + text + "'");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw Error(Errc::parse_error, "empty entry in '" + text + "'");
        auto caret = tok.find('^');
        std::size_t used = 0;
        int value = 0, mult = 1;
        try {
            value = std::stoi(tok.substr(0, caret), &used);
            if (used != (caret == std::string::npos ? tok.size() : caret)) throw std::invalid_argument(tok);
            if (caret != std::string::npos) {
                mult = std::stoi(tok.substr(caret + 1), &used);
                if (used != tok.size() - caret - 1) throw std::invalid_argument(tok);
            }
        } catch (const std::logic_error&) {
            throw Error(Errc::parse_error, "malformed partition entry '" + tok + "'");
        }
        if (value <= 0 || mult <= 0) throw Error(Errc::parse_error, "parts must be positive in '" + text + "'");
        parts.insert(parts.end(), mult, value);
    }
    return cols ? from_columns(parts) : Partition(parts);
}

}
