#include <string>

#include "doctest.h"
#include "property_suite.hpp"

using testsupport::SuiteResult;

namespace {

void check_suite(const SuiteResult& r, int min_cases) {
    INFO("first failure: " << r.first_failure());
    CHECK(r.failures.empty());
    CHECK(r.cases >= min_cases);
    // exclusions must stay rare relative to attempted instances
    const bool exclusions_rare = r.excluded == 0 || r.excluded * 10 < (r.cases + r.excluded);
    CHECK(exclusions_rare);
}

}  // namespace

TEST_CASE("discriminant four-point identity") {
    check_suite(testsupport::run_discriminant_identity_suite(60, 0xD15C0001u), 60);
}

TEST_CASE("transfer matrices are unimodular") {
    check_suite(testsupport::run_transfer_det_suite(60, 0xD15C0002u), 60);
}

TEST_CASE("wronskian is constant across the interval") {
    check_suite(testsupport::run_wronskian_suite(60, 0xD15C0003u), 60);
}

TEST_CASE("chain recurrence equals the subset expansion") {
    check_suite(testsupport::run_chain_closed_form_suite(60, 0xD15C0004u), 60);
}

TEST_CASE("mass scaling rescales the spectrum") {
    check_suite(testsupport::run_mass_scaling_suite(60, 0xD15C0005u), 50);
}

TEST_CASE("count bound, zero membership, and route agreement") {
    check_suite(testsupport::run_count_and_zero_suite(60, 0xD15C0006u), 50);
}

TEST_CASE("scan oracle agrees with the classifier") {
    check_suite(testsupport::run_oracle_agreement_suite(60, 0xD15C0007u), 50);
}

TEST_CASE("companion roots separate real from complex cleanly") {
    check_suite(testsupport::run_companion_imag_suite(60, 0xD15C0008u), 50);
}

TEST_CASE("reported eigenvalues pass the shooting residual") {
    check_suite(testsupport::run_shooting_residual_suite(50, 0xD15C0009u), 40);
}
