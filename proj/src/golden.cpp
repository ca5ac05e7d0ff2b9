#include "nilorb/golden.hpp"

#include <cctype>
#include <sstream>

#include "nilorb/excdata.hpp"

namespace nilorb {

namespace {

std::string strip(const std::string& s, const std::string& drop)
{
    std::string out;
    for (char c : s)
        if (drop.find(c) == std::string::npos) out += c;
    return out;
}

std::vector<std::string> split_top(const std::string& s, char sep)
{
    std::vector<std::string> out(1);
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.emplace_back();
            continue;
        }
        out.back() += c;
    }
    return out;
}

std::vector<std::string> split_on(const std::string& s, const std::string& sep)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (;;) {
        auto at = s.find(sep, pos);
        out.push_back(s.substr(pos, at == std::string::npos ? std::string::npos : at - pos));
        if (at == std::string::npos) return out;
        pos = at + sep.size();
    }
}

int to_int(const std::string& s)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw Error(Errc::parse_error, "expected an integer, got '" + s + "'");
}

}

Partition parse_compact(const std::string& text)
{
    std::string s = strip(text, " $[]()");
    std::vector<int> parts;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto caret = tok.find('^');
            int v = to_int(tok.substr(0, caret));
            int m = caret == std::string::npos ? 1 : to_int(tok.substr(caret + 1));
            parts.insert(parts.end(), m, v);
        }
        return Partition(parts);
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error(Errc::parse_error, "malformed partition '" + text + "'");
        int v = s[i] - '0';
        int m = 1;
        if (i + 1 < s.size() && s[i + 1] == '^') {
            if (i + 2 >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i + 2])))
                throw Error(Errc::parse_error, "malformed exponent in '" + text + "'");
            m = s[i + 2] - '0';
            i += 2;
        }
        parts.insert(parts.end(), m, v);
    }
    return Partition(parts);
}

CartanType parse_levi_cell(const std::string& cell)
{
    std::string s = strip(cell, " $_{}()");
    CartanType out;
    for (const auto& tok : split_on(s, "+")) {
        if (tok == "0" || tok.empty()) continue;
        auto t = parse_cartan_type(tok);
        out.insert(out.end(), t.begin(), t.end());
    }
    return normalized(out);
}

std::vector<GoldenSigma> parse_sigma_cell(const std::string& cell)
{
    std::vector<GoldenSigma> out;
    for (auto comp : split_on(strip(cell, " $"), "\\boxtimes")) {
        GoldenSigma g;
        if (comp.rfind("((", 0) == 0 || comp.rfind("(\\phi", 0) == 0) {
            g.kind = GoldenSigma::bipartition;
            std::vector<Partition> groups;
            std::size_t i = 1;
            while (i < comp.size() && groups.size() < 2) {
                if (comp[i] == ',' || comp[i] == ')') {
                    ++i;
                } else if (comp.compare(i, 4, "\\phi") == 0) {
                    groups.emplace_back();
                    i += 4;
                } else if (comp[i] == '(') {
                    auto close = comp.find(')', i);
                    if (close == std::string::npos) throw Error(Errc::parse_error, "unbalanced '" + comp + "'");
                    groups.push_back(parse_compact(comp.substr(i + 1, close - i - 1)));
                    i = close + 1;
                } else {
                    throw Error(Errc::parse_error, "malformed bipartition '" + comp + "'");
                }
            }
            if (groups.size() != 2) throw Error(Errc::parse_error, "malformed bipartition '" + comp + "'");
            g.a = groups[0];
            g.b = groups[1];
        } else if (comp.size() > 2 && comp.front() == '(' && comp.back() == ')') {
            g.kind = GoldenSigma::partition;
            g.a = parse_compact(comp);
        } else {
            g.name = comp;
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<GoldenOrbit> parse_oprime_cell(const std::string& cell)
{
    std::vector<GoldenOrbit> out;
    for (auto tok : split_top(strip(cell, " $"), '+')) {
        GoldenOrbit o;
        if (!tok.empty() && tok.front() == '[') {
            o.is_partition = true;
            o.p = parse_compact(tok);
        } else {
            if (tok.size() > 1 && tok.front() == '(' && tok.back() == ')') tok = tok.substr(1, tok.size() - 2);
            o.label = canonical_label(tok);
        }
        out.push_back(std::move(o));
    }
    return out;
}

GoldenTable parse_golden(const std::string& text)
{
    GoldenTable t;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split_on(line, "\t");
        if (line[0] == '#') {
            if (first && (cells.size() != 2 || cells[0] != "#nilorb-golden" || cells[1] != "1"))
                throw Error(Errc::parse_error, "golden table lacks its schema line");
            if (cells[0] == "#type" && cells.size() == 2) t.type = cells[1];
            first = false;
            continue;
        }
        if (cells.size() < 7) throw Error(Errc::parse_error, "golden row '" + line + "' is short");
        GoldenRow r;
        r.raw = cells;
        r.dual_orbit = canonical_label(cells[0]);
        r.orbit = canonical_label(cells[1]);
        r.gprime = parse_levi_cell(cells[2]);
        r.lprime = parse_levi_cell(cells[3]);
        r.sigma = parse_sigma_cell(cells[4]);
        r.b = to_int(strip(cells[5], " $"));
        r.oprime = parse_oprime_cell(cells[6]);
        if (cells.size() > 7 && cells[7] != "-")
            for (const auto& f : split_on(cells[7], ",")) r.expect.push_back(f);
        t.rows.push_back(std::move(r));
    }
    if (t.type.empty()) throw Error(Errc::parse_error, "golden table lacks a type line");
    return t;
}

}
