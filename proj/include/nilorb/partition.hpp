#pragma once

#include <compare>
#include <string>
#include <vector>

#include "nilorb/common.hpp"

namespace nilorb {

/* weakly decreasing positive parts; zeros are dropped on construction */
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 0 past the end
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int multiplicity(int v) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

enum class Family { A, B, C, D };

struct ClassicalFamily {
    Family letter;
    int N;

    ClassicalFamily(Family f, int n);
    int rank() const;
    bool operator==(const ClassicalFamily&) const = default;
};

char family_char(Family f);
Family family_from_char(char c);
std::string to_string(const ClassicalFamily& fam);

Partition transpose(const Partition& p);
// true iff a >= b in dominance order
bool dominates(const Partition& a, const Partition& b);
bool parity_ok(const Partition& p, Family f);
bool is_valid(const Partition& p, const ClassicalFamily& fam);
Partition collapse(const Partition& p, const ClassicalFamily& fam);
Partition from_columns(std::vector<int> cols);
std::vector<int> columns(const Partition& p);

// ascending rows r_0 <= r_1 <= ..., zero padded so that the count has the given parity
std::vector<int> padded_rows(const Partition& p, bool odd_count);

std::vector<Partition> partitions_of(int n);

std::string to_string(const Partition& p);
std::string columns_string(const Partition& p);

/* "[3,2,2]", "[3,2^2]", "3,2,2" or the column form "(3,3,1)" */
Partition parse_partition(const std::string& text);

}
