#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace nilorb {

using Q = boost::rational<std::int64_t>;
using Vec = std::vector<Q>;

enum class Errc {
    size_mismatch,
    invalid_orbit,
    not_special,
    very_even,
    unknown_orbit,
    unsupported_type,
    parse_error,
    integrity,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

std::string to_string(const Q& q);
Q dot(const Vec& a, const Vec& b);
bool is_integer(const Q& q);

}
