#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilorb/classical.hpp"
#include "nilorb/rootsys.hpp"

namespace nilorb {

struct ExcOrbitRecord {
    std::string type;
    std::string label;
    WeightedDynkinDiagram wdd;
    int dim = 0;
    bool special = false;
    std::string dual;
    std::optional<LusztigQuotient> abar;  // recorded for special orbits only
};

// number of roots of the (possibly reducible) type
long nilcone_dim(const CartanType& type);

// accepts "~A1", "A1t" and "A1~" for the tilde labels and ignores blanks
std::string canonical_label(const std::string& label);

// counts roots with (h, root) = 0 and = 1 from the diagram
int dim_from_wdd(const RootSystem& rs, const WeightedDynkinDiagram& wdd);

class Catalog {
public:
    // keys are file names relative to the data directory ("E7.tsv", "golden/E7.tsv")
    static Catalog from_files(const std::map<std::string, std::string>& files);
    static Catalog load(const std::filesystem::path& dir);
    static const Catalog& load_embedded();

    std::vector<std::string> types() const;
    const std::vector<ExcOrbitRecord>& orbits(const std::string& type) const;
    const ExcOrbitRecord* find(const std::string& type, const std::string& label) const;
    const ExcOrbitRecord& lookup(const std::string& type, const std::string& label) const;
    const ExcOrbitRecord* find_by_wdd(const std::string& type, const WeightedDynkinDiagram& wdd) const;
    const RootSystem& root_system(const std::string& type) const;
    // raw golden table text; empty when none is bundled
    const std::string& golden_text(const std::string& type) const;

private:
    std::map<std::string, std::vector<ExcOrbitRecord>> orbits_;
    std::map<std::string, RootSystem> systems_;
    std::map<std::string, std::string> golden_;
};

}
