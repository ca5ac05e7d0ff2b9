#pragma once

#include <string>
#include <vector>

#include "nilorb/classical.hpp"

namespace nilorb {

/*
 * One simple factor of a Weyl group irreducible.
 * A: a is a partition of rank+1.  B/C: ordered (a, b).  D: unordered {a, b}.
 * Exceptional factors are carried as an opaque name with a known b-value.
 */
struct WeylFactor {
    char letter = 'A';
    int rank = 0;
    Partition a;
    Partition b;
    bool degenerate = false;  // type D with a == b
    std::string opaque;
    int opaque_b = 0;

    bool is_opaque() const { return !opaque.empty(); }
};

struct WeylRepLabel {
    std::vector<WeylFactor> factors;
};

// n(l) = sum (i-1) l_i
int n_of(const Partition& p);

// very even orbits of type D get the degenerate label shared by both classes
WeylFactor springer_rep(const ClassicalOrbit& o);
int b_invariant(const WeylFactor& f);
int b_invariant(const WeylRepLabel& r);
WeylFactor tensor_sign(const WeylFactor& f);
WeylRepLabel tensor_sign(const WeylRepLabel& r);
// a + b summed, or |a| - 1 in type A; this should equal the rank
int label_rank(const WeylFactor& f);
// type D compares as unordered pairs
bool same_rep(const WeylFactor& x, const WeylFactor& y);

// "(4,1,1)", "((3),(1))", "{(7,1),phi}", opaque names verbatim; factors joined by " x "
std::string to_string(const WeylFactor& f);
std::string to_string(const WeylRepLabel& r);

}
