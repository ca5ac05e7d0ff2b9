#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilorb/classical.hpp"
#include "nilorb/excdata.hpp"
#include "nilorb/golden.hpp"
#include "nilorb/rootsys.hpp"
#include "nilorb/springer.hpp"

namespace nilorb {

enum class Exec { serial, parallel };

// one simple factor of g'
struct FactorReport {
    CartanFactor type;
    CartanType levi;
    std::string induced;  // (O')^vee
    std::string o_prime;
    std::optional<ClassicalOrbit> induced_orbit;
    std::optional<ClassicalOrbit> o_prime_orbit;
    WeylFactor sigma;
    int b = 0;
    long o_prime_dim = 0;
    LusztigQuotient abar;
};

struct UnipotentReport {
    std::string type;   // "E8", or "B7" style family+N for classical input
    std::string input;  // Bala-Carter label or partition
    Vec lambda;
    CartanType g_prime;
    CartanType l_prime;
    std::vector<FactorReport> factors;
    WeylRepLabel sigma_prime;
    int b = 0;
    std::string orbit;  // O
    std::optional<ClassicalOrbit> orbit_classical;
    long orbit_dim = 0;
    long nilcone = 0;
    long pi_count = 1;
    LusztigQuotient abar_dual;    // of the input orbit
    LusztigQuotient abar_orbit;   // of O
    LusztigQuotient abar_oprime;  // of O'
    bool integral = false;
    std::string notice;

    std::string induced_string() const;
    std::string o_prime_string() const;
    // 2b equals the codimension of O
    bool codim_ok() const { return 2L * b == nilcone - orbit_dim; }
    bool abar_ok() const
    {
        return abar_dual.conj_class_count() == abar_orbit.conj_class_count() &&
               abar_orbit.conj_class_count() == abar_oprime.conj_class_count();
    }
};

UnipotentReport analyze(const Catalog& cat, const std::string& type, const std::string& label);
UnipotentReport analyze_classical(const ClassicalOrbit& o);

enum class RowStatus { pass, flagged_expected, fail };
std::string to_string(RowStatus s);

struct RowResult {
    std::string dual_orbit;
    RowStatus status = RowStatus::fail;
    std::vector<std::string> flags;
    std::vector<std::string> details;
    std::vector<std::string> expected;
    std::optional<UnipotentReport> report;
};

struct TableReport {
    std::string type;
    std::vector<RowResult> rows;
    int passed() const;
    int flagged() const;
    int failed() const;
};

RowResult verify_row(const Catalog& cat, const std::string& type, const GoldenRow& row);
TableReport verify_tables(const Catalog& cat, const std::string& type, Exec exec = Exec::parallel);

struct SuiteFailure {
    std::string orbit;
    std::string check;
    std::string detail;
};

struct SuiteReport {
    char family = 'B';
    int max_rank = 0;
    int orbits = 0;
    long checks_run = 0;
    long checks_passed = 0;
    std::vector<SuiteFailure> failures;
};

// checks on one special orbit; returns the failures, adds to run/passed
std::vector<SuiteFailure> check_special_orbit(const ClassicalOrbit& o, long& run, long& passed);
SuiteReport classical_suite(Family fam, int max_rank, Exec exec = Exec::parallel);

// O from the decomposition: dual of skeleton and betas in the smaller group, plus each alpha twice as columns
ClassicalOrbit union_formula(const ClassicalOrbit& o);

}
