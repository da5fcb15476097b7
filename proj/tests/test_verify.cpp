#include <catch2/catch.hpp>

#include <novelty/verify.hpp>

using namespace novelty;

TEST_CASE("sampler streams are reproducible and in range") {
    verify::Sampler a(99), b(99);
    for (int i = 0; i < 1000; ++i) {
        const double u = a.uniform();
        CHECK(u == b.uniform());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    verify::Sampler c(99);
    for (int i = 0; i < 100; ++i) {
        const double v = c.log_uniform(1e-2, 1e2);
        CHECK(v >= 1e-2);
        CHECK(v <= 1e2);
    }
    verify::Sampler d(3);
    for (int i = 0; i < 100; ++i) {
        const int k = d.uniform_int(1, 30);
        CHECK(k >= 1);
        CHECK(k <= 30);
    }
}

TEST_CASE("the full suite passes and its report is byte-stable for a fixed seed") {
    const verify::Report first = verify::run_suite(7, 120);
    CHECK(first.all_passed());
    REQUIRE(first.checks.size() == 5);
    CHECK(first.checks[0].name == "oracle equivalence");
    CHECK(first.checks[4].samples == 60);  // crossover scan runs on half the samples

    const verify::Report second = verify::run_suite(7, 120);
    CHECK(verify::format_report(first) == verify::format_report(second));
}

TEST_CASE("different seeds still pass") {
    for (std::uint64_t seed : {1ull, 42ull, 20260808ull})
        CHECK(verify::run_suite(seed, 80).all_passed());
}

TEST_CASE("a failing check is reported as such") {
    verify::Report report;
    report.checks.push_back({"synthetic", 1, false, "1 violations"});
    CHECK_FALSE(report.all_passed());
    CHECK(verify::format_report(report).find("FAIL") != std::string::npos);
}
