#include <doctest.h>

#include <cmath>

#include "nims/bias_planner.hpp"
#include "nims/error.hpp"
#include "support.hpp"

using namespace nims;

namespace {

const double kj = static_cast<double>(testing::josephson_constant());

Sequence table5() { return Sequence(testing::table5_junctions()); }

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidInput;
}

} // namespace

TEST_CASE("Josephson constant matches 2e/h") {
    const PhysicalConstants k;
    CHECK(k.josephson_hz_per_volt == doctest::Approx(kj).epsilon(1e-15));
    CHECK(std::abs(k.josephson_hz_per_volt - 483597.848416984e9) < 1e3);
    CHECK(2.0 * kElementaryCharge / kPlanckConstant == doctest::Approx(k.josephson_hz_per_volt).epsilon(1e-15));
}

TEST_CASE("step_count rounds half away from zero") {
    const PhysicalConstants unit{1.0};
    CHECK(step_count(2.5, 1.0, unit) == 3);
    CHECK(step_count(-2.5, 1.0, unit) == -3);
    CHECK(step_count(2.49, 1.0, unit) == 2);
    CHECK(step_count(1.0, 18.01e9) == std::llround(kj / 18.01e9));
}

TEST_CASE("plan: 1 V on the Table 5 array") {
    const auto seq = table5();
    const auto p = plan(1.0, 18.01e9, seq);
    CHECK(p.m_target == 26852);
    CHECK(std::llround(1.0 * kj / 18.01e9) == 26852);
    const auto &rep = p.representation;
    CHECK(rep.expressed + rep.beta == 26852);
    CHECK(std::abs(rep.beta) < seq.lsb());
    // f' is set from the junctions actually biased.
    CHECK(p.adjusted_frequency == doctest::Approx(1.0 * kj / static_cast<double>(rep.expressed)).epsilon(1e-14));
    CHECK(rep.expressed == 26853);
    CHECK(p.adjusted_frequency == doctest::Approx(18.009080863e9).epsilon(1e-10));
    CHECK(p.in_band);
    CHECK(std::abs(p.achieved_voltage - 1.0) <= 1e-12);
    CHECK(p.frequency_shift <= (std::abs(rep.beta) + 0.5) / std::abs(static_cast<double>(rep.expressed)));
}

TEST_CASE("plan: zero, full scale and errors") {
    const auto seq = table5();
    const auto zero = plan(0.0, 18.01e9, seq);
    CHECK(zero.m_target == 0);
    CHECK(zero.adjusted_frequency == 18.01e9);
    for (auto s : zero.representation.signs) {
        CHECK(s == 0);
    }

    const auto high = plan(3.2, 18.01e9, seq);
    CHECK(high.in_band);
    CHECK(std::abs(high.achieved_voltage - 3.2) / 3.2 <= 1e-12);

    CHECK(code_of([&] { plan(3.5, 18.01e9, seq); }) == ErrorCode::OutOfRange);
    CHECK(code_of([&] { plan(1.0, 19e9, seq, FrequencyBand::around(18.01e9)); }) == ErrorCode::OutOfRange);
    CHECK(code_of([&] { plan(5 * 18.01e9 / kj, 18.01e9, {1, 2, 7}); }) == ErrorCode::InvalidSequence);
    // One step on a stacked array: expressed_m = 0 with beta = 1.
    const double one_step = 18.01e9 / kj;
    CHECK(code_of([&] { plan(one_step, 18.01e9, seq); }) == ErrorCode::DegenerateTarget);
}

TEST_CASE("plan: leaving the band is reported, not raised") {
    const Sequence seq{1, 3, 8};
    // 1.4 steps round to 1; f' must move 40% away from f.
    const double f = 10e9;
    const auto p = plan(1.4 * f / kj, f, seq);
    CHECK(p.m_target == 1);
    CHECK_FALSE(p.in_band);
    CHECK(p.adjusted_frequency == doctest::Approx(1.4 * f).epsilon(1e-12));
}

TEST_CASE("plan: custom constant") {
    const PhysicalConstants k90{483597.9e9};
    const auto p = plan(0.5, 18.01e9, table5(), std::nullopt, k90);
    CHECK(p.m_target == std::llround(0.5 * 483597.9e9 / 18.01e9));
    CHECK(std::abs(p.achieved_voltage - 0.5) / 0.5 <= 1e-12);
}

TEST_CASE("max_voltage and resolution") {
    const auto seq = table5();
    CHECK(std::abs(max_voltage(seq, 18.01e9) - 3.4299) <= 1e-4);
    CHECK(max_voltage(seq, 18.01e9) == doctest::Approx(92098.0 * 18.01e9 / kj).epsilon(1e-14));
    CHECK(max_voltage({1}, kj) == doctest::Approx(1.0));

    const auto ternary = Sequence(testing::read_table("table3.csv").ints("ternary"));
    CHECK(max_voltage(ternary, 18.01e9) ==
          doctest::Approx(static_cast<double>(testing::sum(testing::read_table("table3.csv").ints("ternary"))) *
                          18.01e9 / kj));

    // Linear in f and in A_N.
    CHECK(max_voltage(seq, 2 * 18.01e9) == doctest::Approx(2 * max_voltage(seq, 18.01e9)));
    CHECK(max_voltage({2, 6, 18}, 1e10) == doctest::Approx(2 * max_voltage({1, 3, 9}, 1e10)));

    CHECK(resolution({1, 3, 8}, 18.01e9) == doctest::Approx(37.242e-6).epsilon(1e-4));
    CHECK(resolution(seq, 18.01e9) == doctest::Approx(74.48e-6).epsilon(1e-4));
    CHECK(resolution(seq, 0.0) == 0.0);
}

TEST_CASE("frequency band") {
    const auto b = FrequencyBand::around(18.01e9);
    CHECK(b.low_hz == doctest::Approx(18.01e9 * 0.995));
    CHECK(b.high_hz == doctest::Approx(18.01e9 * 1.005));
    CHECK(b.contains(18.01e9));
    CHECK_FALSE(b.contains(18.2e9));
}
