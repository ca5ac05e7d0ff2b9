#pragma once

#include <string>
#include <vector>

#include "nilorb/partition.hpp"

namespace nilorb {

struct ClassicalOrbit {
    ClassicalFamily fam;
    Partition p;

    // throws invalid_orbit unless p is valid for fam
    ClassicalOrbit(ClassicalFamily fam, Partition p);
    bool operator==(const ClassicalOrbit&) const = default;
};

struct SpecialDecomposition {
    Partition skeleton;
    std::vector<int> alphas;
    std::vector<int> betas;
    int q = 0;
};

/* (Z/2)^q x S_sym, sym in {0,3,4,5}; S2 is folded into q */
struct LusztigQuotient {
    int q = 0;
    int sym = 0;

    std::string descriptor() const;
    long conj_class_count() const;
    bool operator==(const LusztigQuotient&) const = default;
};

// "1", "S2", "S3", "(Z/2)^3", "S3xZ/2", ...
LusztigQuotient parse_quotient(const std::string& text);

bool is_very_even(const ClassicalOrbit& o);
bool is_special(const ClassicalOrbit& o);
SpecialDecomposition decompose_special(const ClassicalOrbit& o);
Partition reassemble(const SpecialDecomposition& d);

long dimension(const ClassicalOrbit& o);
long nilcone_dim(const ClassicalFamily& fam);

ClassicalOrbit ls_dual(const ClassicalOrbit& o);
// B(2n+1) <-> C(2n), D and A to themselves
ClassicalFamily dual_family(const ClassicalFamily& fam);
ClassicalOrbit bv_dual(const ClassicalOrbit& o);

// Richardson orbit of the Levi gl(b1)+...+gl(bk)+g(cofactor_rank) inside target
ClassicalOrbit induce_zero(const std::vector<int>& gl_blocks, int cofactor_rank, const ClassicalFamily& target);

// trivial for type A and for very even orbits; throws for non-special orbits
LusztigQuotient lusztig_quotient(const ClassicalOrbit& o);
long unipotent_count(const ClassicalOrbit& o);

std::vector<ClassicalOrbit> orbits_of(const ClassicalFamily& fam);

std::string to_string(const ClassicalOrbit& o);

}
