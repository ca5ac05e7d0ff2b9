#pragma once

#include <string>
#include <vector>

#include "nilorb/common.hpp"
#include "nilorb/partition.hpp"

namespace nilorb {

struct CartanFactor {
    char letter;
    int rank;
    auto operator<=>(const CartanFactor&) const = default;
};

using CartanType = std::vector<CartanFactor>;

// "E7+A1", "4A1", "0" for the empty type
std::string to_string(const CartanType& t);
CartanType parse_cartan_type(const std::string& text);
void sort_factors(CartanType& t);
// identifies D2=2A1, D3=A3, B1=C1=A1, C2=B2 and drops empty factors
CartanType normalized(CartanType t);

struct RootSystem {
    CartanType type;
    int ambient_dim = 0;
    std::vector<Vec> simple_roots;
    std::vector<Vec> roots;
    std::vector<std::vector<int>> coeffs;  // simple-root coordinates, parallel to roots
    std::vector<Vec> positive_roots;

    int rank() const { return static_cast<int>(simple_roots.size()); }
    std::size_t index_of(const Vec& v) const;  // roots.size() when absent
};

RootSystem build(const CartanType& type);
RootSystem build(const std::string& type);

struct Subsystem {
    std::vector<Vec> roots;
    std::vector<Vec> simple_roots;
    CartanType type;
    // per factor of type, simple roots in Bourbaki order
    std::vector<std::vector<Vec>> components;
};

// factors sorted as in to_string, each component Bourbaki ordered
Subsystem classify(const std::vector<Vec>& simple_roots);
// closed subsystem given by its roots; positivity inherited from rs
Subsystem subsystem(const RootSystem& rs, std::vector<Vec> roots);

using WeightedDynkinDiagram = std::vector<int>;

Vec lambda_from_wdd(const RootSystem& rs, const WeightedDynkinDiagram& wdd);
Vec lambda_from_partition(const ClassicalFamily& fam, const Partition& p);
Subsystem integral_subsystem(const RootSystem& rs, const Vec& lam);
Subsystem zero_levi(const RootSystem& rs, const Vec& lam);

// dominant characteristic of the regular orbit of the Levi spanned by levi_roots,
// read as labels on the given simple system
WeightedDynkinDiagram levi_characteristic(const std::vector<Vec>& simple, const std::vector<Vec>& levi_positive);

}
