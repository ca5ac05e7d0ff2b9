#include "doctest.h"

#include <nilorb/golden.hpp>
#include <nilorb/pipeline.hpp>
#include <nilorb/serialize.hpp>

using namespace nilorb;

TEST_CASE("F4 tilde A1")
{
    auto r = analyze(Catalog::load_embedded(), "F4", "~A1");
    CHECK(to_string(r.g_prime) == "B4");
    CHECK(to_string(r.l_prime) == "B3");
    CHECK(r.o_prime_string() == "[7,1,1]");
    CHECK(to_string(r.sigma_prime) == "((3),(1))");
    CHECK(r.b == 1);
    CHECK(r.orbit == "F4(a1)");
    CHECK(r.codim_ok());
    CHECK(r.abar_ok());
    CHECK(r.pi_count == 2);
    CHECK_FALSE(r.integral);
}

TEST_CASE("E8 2A1")
{
    auto r = analyze(Catalog::load_embedded(), "E8", "2A1");
    CHECK(to_string(r.g_prime) == "D8");
    CHECK(to_string(r.l_prime) == "D7");
    CHECK(r.o_prime_string() == "[13,1,1,1]");
    CHECK(to_string(r.sigma_prime) == "{(7,1),phi}");
    CHECK(r.b == 2);
    CHECK(r.orbit == "E8(a2)");
    CHECK(r.nilcone - r.orbit_dim == 4);
}

TEST_CASE("E7 A3 splits over two factors")
{
    auto r = analyze(Catalog::load_embedded(), "E7", "A3");
    CHECK(to_string(r.g_prime) == "D6+A1");
    CHECK(r.o_prime_string() == "[7,1,1,1,1,1] + [2]");
    CHECK(r.b == 6);
    CHECK(r.orbit == "D6(a1)");
    CHECK(r.codim_ok());
}

TEST_CASE("E7 rank-sum row")
{
    auto r = analyze(Catalog::load_embedded(), "E7", "D4(a1)+A1");
    CHECK(to_string(r.sigma_prime.factors.front()) == "{(3,1,1),(1)}");
    CHECK(r.codim_ok());
    CHECK(r.abar_ok());
}

TEST_CASE("integral infinitesimal character")
{
    auto r = analyze(Catalog::load_embedded(), "E8", "A2");
    CHECK(r.integral);
    CHECK_FALSE(r.notice.empty());
    CHECK(r.g_prime == parse_cartan_type("E8"));
    CHECK(r.codim_ok());
}

TEST_CASE("every special orbit of the catalog satisfies the identities")
{
    const auto& cat = Catalog::load_embedded();
    for (const auto& t : cat.types())
        for (const auto& o : cat.orbits(t)) {
            if (!o.special) continue;
            auto r = analyze(cat, t, o.label);
            CHECK_MESSAGE(r.codim_ok(), t << " " << o.label);
            CHECK_MESSAGE(r.abar_ok(), t << " " << o.label);
            CHECK(2 * b_invariant(r.sigma_prime) == r.nilcone - r.orbit_dim);
        }
}

TEST_CASE("non-special input is rejected")
{
    const auto& cat = Catalog::load_embedded();
    CHECK_THROWS_AS(analyze(cat, "F4", "A1"), Error);
    CHECK_THROWS_AS(analyze(cat, "E9", "A1"), Error);
    CHECK_THROWS_AS(analyze(cat, "E8", "A9"), Error);
    CHECK_THROWS_AS(analyze_classical({ClassicalFamily(Family::B, 7), Partition{2, 2, 1, 1, 1}}), Error);
    CHECK_THROWS_AS(analyze_classical({ClassicalFamily(Family::D, 8), Partition{4, 4}}), Error);
}

TEST_CASE("classical analysis")
{
    auto r = analyze_classical({ClassicalFamily(Family::C, 8), Partition{2, 2, 1, 1, 1, 1}});
    CHECK(r.codim_ok());
    CHECK(r.abar_ok());
    REQUIRE(r.orbit_classical);
    CHECK(*r.orbit_classical == union_formula({ClassicalFamily(Family::C, 8), Partition{2, 2, 1, 1, 1, 1}}));
    auto s = analyze_classical({ClassicalFamily(Family::B, 9), Partition{7, 1, 1}});
    REQUIRE(s.orbit_classical);
    CHECK(s.orbit_classical->p == Partition{2, 2, 1, 1, 1, 1});
}

TEST_CASE("golden tables")
{
    const auto& cat = Catalog::load_embedded();
    struct Want {
        const char* type;
        int pass, flagged;
    };
    for (auto w : {Want{"F4", 3, 0}, Want{"E6", 7, 0}, Want{"E7", 9, 2}, Want{"E8", 17, 2}}) {
        auto rep = verify_tables(cat, w.type);
        CHECK(rep.passed() == w.pass);
        CHECK(rep.flagged() == w.flagged);
        CHECK(rep.failed() == 0);
    }
    auto e7 = verify_tables(cat, "E7");
    for (const auto& row : e7.rows)
        if (row.dual_orbit == "D4(a1)+A1") CHECK(row.flags == std::vector<std::string>{"sigma-rank"});
}

TEST_CASE("a wrong golden cell fails its row")
{
    const auto& cat = Catalog::load_embedded();
    auto table = parse_golden(cat.golden_text("F4"));
    auto row = table.rows.front();
    row.b += 1;
    auto res = verify_row(cat, "F4", row);
    CHECK(res.status == RowStatus::fail);
    CHECK(std::find(res.flags.begin(), res.flags.end(), "b") != res.flags.end());
}

TEST_CASE("serial and parallel runs agree")
{
    const auto& cat = Catalog::load_embedded();
    for (const auto& t : {"F4", "E6", "E7", "E8"})
        CHECK(to_json(verify_tables(cat, t, Exec::serial)) == to_json(verify_tables(cat, t, Exec::parallel)));
    for (Family f : {Family::B, Family::C, Family::D})
        CHECK(to_json(classical_suite(f, 5, Exec::serial)) == to_json(classical_suite(f, 5, Exec::parallel)));
}

TEST_CASE("classical suite")
{
    for (Family f : {Family::B, Family::C, Family::D}) {
        auto s = classical_suite(f, 6);
        CHECK(s.failures.empty());
        CHECK(s.checks_run == s.checks_passed);
        CHECK(s.checks_run == 8L * s.orbits);
    }
    CHECK(classical_suite(Family::B, 6).orbits == 63);
    CHECK(classical_suite(Family::D, 6).orbits == 49);
    CHECK_THROWS_AS(classical_suite(Family::A, 3), Error);
}
