#include <doctest.h>

#include "permfact/verify.hpp"

using namespace permfact;

TEST_CASE("verify suite passes at small n") {
    VerifyReport rep = verify_suite(VerifyScope::all, 4, 2);
    for (const VerifyCheck& c : rep.checks) {
        INFO(c.name, ": ", c.failures.empty() ? "" : c.failures.front());
        CHECK(c.pass);
        CHECK(c.cases > 0);
    }
    CHECK(rep.all_pass());
    CHECK(rep.total_cases() > 0);
}

TEST_CASE("scope selection") {
    VerifyReport rep = verify_suite(VerifyScope::symfunc, 5);
    for (const VerifyCheck& c : rep.checks)
        CHECK(c.name.rfind("symfunc/", 0) == 0);
    CHECK(rep.all_pass());
    CHECK_THROWS_AS(parse_scope("bogus"), domain_error);
    CHECK(parse_scope("nonfull") == VerifyScope::nonfull);
}

TEST_CASE("erratum report confirms every recorded deviation") {
    std::vector<ErratumEntry> entries = erratum_report();
    CHECK(entries.size() == 8);
    for (const ErratumEntry& e : entries) {
        INFO(e.id);
        CHECK(e.confirmed);
        CHECK_FALSE(e.witness.empty());
        CHECK_FALSE(e.correction.empty());
    }
}
