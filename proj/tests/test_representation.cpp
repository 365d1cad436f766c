#include <doctest.h>

#include <cstdlib>

#include "nims/error.hpp"
#include "nims/representation.hpp"
#include "support.hpp"

using namespace nims;

namespace {

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

TEST_CASE("represent: published sign table on [1,3,8]") {
    const auto table2 = testing::read_table("table2.csv");
    const auto ms = table2.ints("m");
    const auto b0 = table2.ints("b0");
    const auto b1 = table2.ints("b1");
    const auto b2 = table2.ints("b2");
    REQUIRE(ms.size() == 13);
    const Sequence seq{1, 3, 8};
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const std::vector<int> expected{static_cast<int>(b0[i]), static_cast<int>(b1[i]), static_cast<int>(b2[i])};
        const auto rep = represent(ms[i], seq);
        CHECK_MESSAGE(rep.signs == expected, "m = " << ms[i]);
        CHECK(rep.beta == 0);
        CHECK(rep.expressed == ms[i]);
    }
}

TEST_CASE("represent: examples") {
    CHECK(represent(7, {1, 3, 8}).signs == std::vector<int>{-1, 0, 1});
    CHECK(represent(5, {1, 3, 8}).signs == std::vector<int>{0, -1, 1});
    CHECK(represent(0, {2, 6, 18, 48}).signs == std::vector<int>{0, 0, 0, 0});

    const auto r = represent(3, {2, 6, 18});
    CHECK(r.signs == std::vector<int>{1, 0, 0});
    CHECK(r.beta == 1);
    CHECK(r.expressed + r.beta == 3);

    // Residual below a_0 is left in beta rather than spending a_0.
    const auto one = represent(1, {2, 6, 18});
    CHECK(one.signs == std::vector<int>{0, 0, 0});
    CHECK(one.beta == 1);
}

TEST_CASE("represent: sign symmetry") {
    for (const Sequence &seq : {Sequence{1, 3, 8}, Sequence{2, 6, 18, 48}, Sequence{3, 9, 20, 55}}) {
        const auto lim = representable_limit(seq);
        for (std::int64_t m = 0; m <= lim; ++m) {
            const auto pos = represent(m, seq);
            const auto neg = represent(-m, seq);
            for (std::size_t n = 0; n < seq.size(); ++n) {
                CHECK(neg.signs[n] == -pos.signs[n]);
            }
            CHECK(neg.beta == -pos.beta);
        }
    }
}

TEST_CASE("represent: remainder trace obeys |r| <= A_{n-1} + a_0 - 1") {
    const Sequence seq{2, 6, 18, 48, 132};
    const auto A = prefix_sums(seq).totals;
    for (std::int64_t m = -representable_limit(seq); m <= representable_limit(seq); ++m) {
        RemainderTrace trace;
        const auto rep = represent(m, seq, &trace);
        REQUIRE(trace.remainders.size() == seq.size());
        for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
            const std::size_t n = seq.top() - k;
            CHECK(std::llabs(trace.remainders[k]) <= A[n - 1] + seq.lsb() - 1);
        }
        CHECK(trace.remainders.back() == rep.beta);
    }
}

TEST_CASE("represent: errors") {
    CHECK(code_of([] { represent(13, {1, 3, 8}); }) == ErrorCode::OutOfRange);
    CHECK(code_of([] { represent(-13, {1, 3, 8}); }) == ErrorCode::OutOfRange);
    CHECK(code_of([] { represent(1, {1, 2, 7}); }) == ErrorCode::InvalidSequence);
    CHECK_NOTHROW(represent(27, {2, 6, 18}));
    CHECK(code_of([] { represent(28, {2, 6, 18}); }) == ErrorCode::OutOfRange);
}

TEST_CASE("evaluate") {
    const auto table2 = testing::read_table("table2.csv");
    const auto row = table2.rows.at(10);
    REQUIRE(row.at(0) == "10");
    Representation rep;
    rep.signs = {std::stoi(row[1]), std::stoi(row[2]), std::stoi(row[3])};
    CHECK(evaluate(rep, {1, 3, 8}) == 10);

    Representation zero;
    zero.signs = {0, 0, 0};
    CHECK(evaluate(zero, {1, 3, 8}) == 0);

    Representation with_beta;
    with_beta.signs = {1, 0, 1};
    with_beta.beta = -1;
    CHECK(evaluate(with_beta, {2, 6, 18}) == 19);

    Representation short_rep;
    short_rep.signs = {1, 0};
    CHECK(code_of([&] { evaluate(short_rep, {1, 3, 8}); }) == ErrorCode::InvalidInput);

    Representation bad_digit;
    bad_digit.signs = {2, 0, 0};
    CHECK(code_of([&] { evaluate(bad_digit, {1, 3, 8}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("represent_range_check") {
    const auto r = represent_range_check({1, 3, 8});
    CHECK(r.lo == -12);
    CHECK(r.hi == 12);
    CHECK(r.checked == 25);
    CHECK(r.ok());

    const auto single = represent_range_check({1});
    CHECK(single.checked == 3);
    CHECK(single.ok());

    const auto table5 = represent_range_check(Sequence(testing::table5_junctions()));
    CHECK(table5.ok());
    CHECK(table5.lo == -92099);
    CHECK(table5.hi == 92099);
    CHECK(table5.checked == 2 * 92098 + 1 + 2);

    OracleOptions tight;
    tight.cap = 10;
    CHECK(code_of([&] { represent_range_check({1, 3, 8}, tight); }) == ErrorCode::RangeError);
}
