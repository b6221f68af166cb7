#include <doctest.h>

#include <string>

#include "qcorr/errors.hpp"
#include "qcorr/verify.hpp"

using namespace qcorr;

namespace {

OptimizerSettings quick_settings() {
    OptimizerSettings s;
    s.grid_points = 400;
    return s;
}

}  // namespace

TEST_CASE("self-verification passes on random physical states") {
    const VerificationResult result = run_verification(3, 99, quick_settings());
    CHECK(result.states_checked == 3);
    CHECK(result.passed());
    const std::string text = render_verification(result);
    CHECK(text.find("3 states checked") != std::string::npos);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("a corrupted reference is caught, not silently accepted") {
    const auto corrupted = [](const BellVector& c) {
        ClosedFormReference ref = closed_form_bell(c);
        ref.q += 0.05;
        return ref;
    };
    const VerificationResult result = run_verification(3, 99, quick_settings(), corrupted);
    CHECK_FALSE(result.passed());
    CHECK(result.failures.size() == 3);
    CHECK(result.failures.front().check == "minimized_q_vs_reference");
    CHECK(result.failures.front().tolerance == 1e-6);
    CHECK(render_verification(result).find("FAIL") != std::string::npos);

    // same seed, same sampled states, same verdict
    const VerificationResult again = run_verification(3, 99, quick_settings(), corrupted);
    CHECK(again.failures.size() == result.failures.size());
    CHECK(again.failures.front().vector.x == result.failures.front().vector.x);
    CHECK(again.failures.front().actual == result.failures.front().actual);
}

TEST_CASE("verification needs at least one state") {
    CHECK_THROWS_AS(run_verification(0, 1, quick_settings()), InputError);
}
