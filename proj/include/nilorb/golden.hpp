#pragma once

#include <string>
#include <vector>

#include "nilorb/rootsys.hpp"
#include "nilorb/springer.hpp"

namespace nilorb {

// one summand of the O' column: a classical partition or an exceptional label
struct GoldenOrbit {
    bool is_partition = false;
    Partition p;
    std::string label;
};

// one component of the sigma' column; letter and rank are unknown until matched
struct GoldenSigma {
    enum Kind { bipartition, partition, opaque } kind = opaque;
    Partition a;
    Partition b;
    std::string name;
};

struct GoldenRow {
    std::string dual_orbit;
    std::string orbit;
    CartanType gprime;
    CartanType lprime;  // normalized, as a multiset
    std::vector<GoldenSigma> sigma;
    int b = 0;
    std::vector<GoldenOrbit> oprime;
    std::vector<std::string> expect;  // annotated flags, empty for clean rows
    std::vector<std::string> raw;     // cells as written
};

struct GoldenTable {
    std::string type;
    std::vector<GoldenRow> rows;
};

GoldenTable parse_golden(const std::string& text);

// compact notation: "[53^31]" is 5,3,3,3,1 and "[13,1^3]" is 13,1,1,1
Partition parse_compact(const std::string& text);
CartanType parse_levi_cell(const std::string& cell);
std::vector<GoldenSigma> parse_sigma_cell(const std::string& cell);
std::vector<GoldenOrbit> parse_oprime_cell(const std::string& cell);

}
