#include "nilorb/excdata.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <boost/crc.hpp>

namespace nilorb {

namespace detail {
const std::map<std::string, std::string>& embedded_files();
}

namespace {

const std::vector<std::string> exceptional = {"G2", "F4", "E6", "E7", "E8"};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(s);
    while (std::getline(ss, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

[[noreturn]] void fail(const std::string& type, const std::string& label, const std::string& what)
{
    throw Error(Errc::integrity, type + (label.empty() ? "" : " " + label) + ": " + what);
}

std::vector<ExcOrbitRecord> parse_table(const std::string& type, const std::string& text)
{
    std::istringstream in(text);
    std::string line, body;
    std::map<std::string, std::string> header;
    bool first = true;
    std::vector<ExcOrbitRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto f = split(line.substr(1), '\t');
            if (first && (f.size() != 2 || f[0] != "nilorb-orbits" || f[1] != "1"))
                fail(type, "", "missing schema line 'nilorb-orbits 1'");
            if (f.size() >= 2) header[f[0]] = f[1];
            first = false;
            continue;
        }
        if (first) fail(type, "", "missing schema line");
        body += line + "\n";
        auto f = split(line, '\t');
        if (f.size() != 6) fail(type, "", "row '" + line + "' does not have 6 fields");
        ExcOrbitRecord r;
        r.type = type;
        r.label = f[0];
        try {
            for (const auto& x : split(f[1], ',')) r.wdd.push_back(std::stoi(x));
            r.dim = std::stoi(f[2]);
        } catch (const std::logic_error&) {
            fail(type, r.label, "malformed number");
        }
        if (f[3] != "yes" && f[3] != "no") fail(type, r.label, "special flag must be yes or no");
        r.special = f[3] == "yes";
        r.dual = f[4];
        if (f[5] != "-") r.abar = parse_quotient(f[5]);
        out.push_back(std::move(r));
    }
    if (header["type"] != type) fail(type, "", "type line says '" + header["type"] + "'");
    boost::crc_32_type crc;
    crc.process_bytes(body.data(), body.size());
    std::ostringstream hex;
    hex << std::hex;
    hex.width(8);
    hex.fill('0');
    hex << crc.checksum();
    if (header["crc32"] != hex.str()) fail(type, "", "checksum mismatch, body hashes to " + hex.str());
    return out;
}

void check_table(const std::string& type, const std::vector<ExcOrbitRecord>& rows, const RootSystem& rs)
{
    std::map<std::string, const ExcOrbitRecord*> by_label;
    std::set<WeightedDynkinDiagram> seen;
    long roots = static_cast<long>(rs.roots.size());
    for (const auto& r : rows) {
        if (!by_label.emplace(r.label, &r).second) fail(type, r.label, "duplicate label");
        if (static_cast<int>(r.wdd.size()) != rs.rank()) fail(type, r.label, "diagram length differs from rank");
        for (int x : r.wdd)
            if (x < 0 || x > 2) fail(type, r.label, "diagram label outside 0..2");
        if (!seen.insert(r.wdd).second) fail(type, r.label, "duplicate diagram");
        if (r.dim % 2 || r.dim < 0 || r.dim > roots) fail(type, r.label, "dimension out of range or odd");
        int d = dim_from_wdd(rs, r.wdd);
        if (d != r.dim) fail(type, r.label, "dimension " + std::to_string(r.dim) + " but diagram gives " + std::to_string(d));
        if (r.special != r.abar.has_value()) fail(type, r.label, "quotient must be given exactly for special orbits");
    }
    for (const auto& r : rows) {
        auto it = by_label.find(r.dual);
        if (it == by_label.end()) fail(type, r.label, "dual '" + r.dual + "' is not in the table");
        const auto& d = *it->second;
        if (!d.special) fail(type, r.label, "dual '" + r.dual + "' is not special");
        if (!r.special) continue;
        if (d.dual != r.label) fail(type, r.label, "duality is not an involution on special orbits");
        if (*d.abar != *r.abar) fail(type, r.label, "quotient differs from that of the dual");
    }
}

}

long nilcone_dim(const CartanType& type)
{
    long s = 0;
    for (const auto& f : type) {
        long n = f.rank;
        switch (f.letter) {
        case 'A': s += n * (n + 1); break;
        case 'B':
        case 'C': s += 2 * n * n; break;
        case 'D': s += 2 * n * (n - 1); break;
        case 'G': s += 12; break;
        case 'F': s += 48; break;
        case 'E': s += n == 6 ? 72 : n == 7 ? 126 : 240; break;
        default: throw Error(Errc::unsupported_type, "unsupported type");
        }
    }
    return s;
}

std::string canonical_label(const std::string& label)
{
    static const std::string tilde = "\xC3\x83";
    std::string s;
    for (char c : label)
        if (c != ' ' && c != '$' && c != '_' && c != '{' && c != '}') s += c;
    s = std::regex_replace(s, std::regex(R"(\\widetilde\\?A|\\tilde\\?A|~A)"), tilde);
    s = std::regex_replace(s, std::regex(R"(A(\d)(t|~))"), tilde + "$1");
    return s;
}

int dim_from_wdd(const RootSystem& rs, const WeightedDynkinDiagram& wdd)
{
    int zero = 0, one = 0;
    for (const auto& c : rs.coeffs) {
        int h = 0;
        for (std::size_t i = 0; i < c.size(); ++i) h += c[i] * wdd[i];
        zero += h == 0;
        one += h == 1;
    }
    return static_cast<int>(rs.roots.size()) - zero - one;
}

Catalog Catalog::from_files(const std::map<std::string, std::string>& files)
{
    Catalog cat;
    for (const auto& type : exceptional) {
        auto it = files.find(type + ".tsv");
        if (it == files.end()) continue;
        const auto& rs = cat.systems_.emplace(type, build(type)).first->second;
        auto rows = parse_table(type, it->second);
        check_table(type, rows, rs);
        cat.orbits_[type] = std::move(rows);
        auto g = files.find("golden/" + type + ".tsv");
        if (g != files.end()) cat.golden_[type] = g->second;
    }
    if (cat.orbits_.empty()) throw Error(Errc::parse_error, "no orbit tables found");
    return cat;
}

Catalog Catalog::load(const std::filesystem::path& dir)
{
    if (!std::filesystem::is_directory(dir)) throw Error(Errc::parse_error, "data directory " + dir.string() + " not found");
    std::map<std::string, std::string> files;
    for (const auto& type : exceptional)
        for (const auto& rel : {type + ".tsv", "golden/" + type + ".tsv"}) {
            std::ifstream in(dir / rel, std::ios::binary);
            if (!in) continue;
            std::ostringstream ss;
            ss << in.rdbuf();
            files[rel] = ss.str();
        }
    return from_files(files);
}

const Catalog& Catalog::load_embedded()
{
    static const Catalog cat = from_files(detail::embedded_files());
    return cat;
}

std::vector<std::string> Catalog::types() const
{
    std::vector<std::string> out;
    for (const auto& t : exceptional)
        if (orbits_.count(t)) out.push_back(t);
    return out;
}

const std::vector<ExcOrbitRecord>& Catalog::orbits(const std::string& type) const
{
    auto it = orbits_.find(type);
    if (it == orbits_.end()) throw Error(Errc::unsupported_type, "no orbit table for type " + type);
    return it->second;
}

const ExcOrbitRecord* Catalog::find(const std::string& type, const std::string& label) const
{
    auto want = canonical_label(label);
    for (const auto& r : orbits(type))
        if (r.label == want) return &r;
    return nullptr;
}

const ExcOrbitRecord& Catalog::lookup(const std::string& type, const std::string& label) const
{
    const auto* r = find(type, label);
    if (!r) throw Error(Errc::unknown_orbit, "no orbit '" + label + "' in " + type);
    return *r;
}

const ExcOrbitRecord* Catalog::find_by_wdd(const std::string& type, const WeightedDynkinDiagram& wdd) const
{
    for (const auto& r : orbits(type))
        if (r.wdd == wdd) return &r;
    return nullptr;
}

const RootSystem& Catalog::root_system(const std::string& type) const
{
    auto it = systems_.find(type);
    if (it == systems_.end()) throw Error(Errc::unsupported_type, "no orbit table for type " + type);
    return it->second;
}

const std::string& Catalog::golden_text(const std::string& type) const
{
    static const std::string none;
    auto it = golden_.find(type);
    return it == golden_.end() ? none : it->second;
}

}
