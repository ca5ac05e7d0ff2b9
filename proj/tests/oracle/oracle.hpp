#pragma once

#include <cstdint>
#include <vector>

// Reference computations for the test suite.  Nothing here calls into the library algorithms.
namespace oracle {

using Rows = std::vector<int>;  // weakly decreasing

std::vector<Rows> partitions(int n);
bool dominates(const Rows& a, const Rows& b);
// letter is 'B', 'C' or 'D'
bool valid(const Rows& p, char letter);
// dominance maximum of the valid partitions below p, by exhaustive search
Rows collapse(const Rows& p, char letter);

// orbit dimension as the rank of ad(X) on gl, so or sp for an explicit nilpotent X
long orbit_dim(const Rows& p, char letter);

/* Simply laced Lie algebra over Z/p from a sign cocycle on the root lattice. */
class LieAlgebra {
public:
    // Cartan matrix of a simply laced type, e.g. from cartan('E', 7)
    explicit LieAlgebra(const std::vector<std::vector<int>>& cartan);

    int dim() const { return static_cast<int>(roots_.size()) + rank_; }
    int rank() const { return rank_; }
    const std::vector<std::vector<int>>& roots() const { return roots_; }

    // ad of sum c_i e_{root i}, as a dim x dim matrix mod p
    std::vector<std::vector<std::int64_t>> ad(const std::vector<std::pair<int, std::int64_t>>& element) const;

private:
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<int>> roots_;
    int index(const std::vector<int>& r) const;
    int eps(const std::vector<int>& a, const std::vector<int>& b) const;
};

std::vector<std::vector<int>> cartan(char letter, int rank);
std::int64_t random_unit(std::uint64_t& state);
int rank_mod_p(std::vector<std::vector<std::int64_t>> m);
// ranks of M, M^2, ..., M^k
std::vector<int> power_ranks(const std::vector<std::vector<std::int64_t>>& m, int k);

constexpr std::int64_t prime = 1000003;

}
