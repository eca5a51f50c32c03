#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "benford/construct.hpp"
#include "benford/errors.hpp"
#include "benford/presets.hpp"

using namespace benford;

TEST_SUITE("construct.partition") {
    TEST_CASE("single-digit boundaries") {
        const Partition p = benford_partition(1);
        REQUIRE(p.intervals() == 9);
        CHECK(p.points().front() == 0.0);
        CHECK(p.points().back() == 1.0);
        CHECK(p.points()[1] == doctest::Approx(std::log10(2.0)).epsilon(1e-15));
        double width_sum = 0.0;
        for (std::size_t j = 0; j + 1 < p.points().size(); ++j)
            width_sum += p.points()[j + 1] - p.points()[j];
        CHECK(std::abs(width_sum - 1.0) <= 1e-12);
    }

    TEST_CASE("two-digit boundaries") {
        const Partition p = benford_partition(2);
        REQUIRE(p.intervals() == 90);
        CHECK(p.points()[1] == doctest::Approx(std::log10(1.1)).epsilon(1e-14));
        double width_sum = 0.0;
        for (std::size_t j = 0; j + 1 < p.points().size(); ++j)
            width_sum += p.points()[j + 1] - p.points()[j];
        CHECK(std::abs(width_sum - 1.0) <= 1e-12);
    }

    TEST_CASE("limits") {
        CHECK_THROWS_AS(benford_partition(0), std::invalid_argument);
        CHECK_THROWS_AS(benford_partition(5), LimitError);
    }

    TEST_CASE("partition validation") {
        CHECK_THROWS_AS(Partition({0.0, 0.5}), std::invalid_argument);           // no 1 endpoint
        CHECK_THROWS_AS(Partition({0.0, 0.7, 0.3, 1.0}), std::invalid_argument); // not increasing
    }
}

TEST_SUITE("construct.bumps") {
    TEST_CASE("named families have unit mass") {
        for (auto name : {"uniform", "sine", "linear-ramp"}) {
            const BumpFamily f = BumpFamily::named(name);
            CHECK(std::abs(shape_total(f.bump(0)) - 1.0) <= 1e-12);
        }
        CHECK_THROWS_AS(BumpFamily::named("sawtooth"), std::invalid_argument);
    }

    TEST_CASE("non-unit bumps are rejected") {
        CHECK_THROWS_AS(BumpFamily::broadcast(ConstantShape{2.0}), std::invalid_argument);
    }

    TEST_CASE("bump count must match the partition") {
        const Partition p = benford_partition(1);
        BumpFamily two{std::vector<PieceShape>{ConstantShape{1.0}, SineBumpShape{}}};
        CHECK_THROWS_AS(construct_n_digit(p, two), std::invalid_argument);
    }
}

TEST_SUITE("construct.n-digit") {
    TEST_CASE("the all-sine one-digit construction is the sine preset") {
        const Mod1Density built =
            construct_n_digit(benford_partition(1), BumpFamily::named("sine"));
        const PiecewiseDensity expected = preset_density("sine1");
        REQUIRE(built.inner().pieces().size() == expected.pieces().size());
        for (std::size_t i = 0; i < expected.pieces().size(); ++i) {
            CHECK(built.inner().pieces()[i].lo == expected.pieces()[i].lo);
            CHECK(built.inner().pieces()[i].weight == expected.pieces()[i].weight);
        }
        CHECK(built.evaluate(std::log10(2.0) / 2.0) ==
              doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
    }

    TEST_CASE("uniform bumps give the uniform density") {
        const Mod1Density gd =
            construct_n_digit(benford_partition(2), BumpFamily::named("uniform"));
        for (int i = 0; i < 500; ++i)
            CHECK(gd.evaluate((i + 0.5) / 500.0) == doctest::Approx(1.0).epsilon(1e-12));
    }

    TEST_CASE("every bump family is n-digit Benford at its level") {
        for (int n : {1, 2, 3}) {
            for (auto name : {"uniform", "sine", "linear-ramp"}) {
                const Mod1Density gd =
                    construct_n_digit(benford_partition(n), BumpFamily::named(name));
                const NDigitReport r = verify_n_digit(gd, n);
                CHECK(r.is_n_digit);
                CHECK(r.max_abs_error <= 1e-9);
            }
        }
        // mixed per-cell bumps as well
        const Partition p = benford_partition(1);
        std::vector<PieceShape> mixed;
        for (std::size_t j = 0; j < p.intervals(); ++j) {
            if (j % 3 == 0) mixed.push_back(ConstantShape{1.0});
            else if (j % 3 == 1) mixed.push_back(SineBumpShape{});
            else mixed.push_back(LinearShape{0.0, 2.0});
        }
        const NDigitReport r = verify_n_digit(construct_n_digit(p, BumpFamily{mixed}), 1);
        CHECK(r.is_n_digit);
    }

    TEST_CASE("one-digit Benford is not two-digit Benford") {
        const Mod1Density gd = construct_n_digit(benford_partition(1), BumpFamily::named("sine"));
        CHECK(verify_n_digit(gd, 1).is_n_digit);
        const NDigitReport at2 = verify_n_digit(gd, 2);
        CHECK_FALSE(at2.is_n_digit);
        CHECK(at2.max_abs_error == doctest::Approx(0.027566157574215872).epsilon(1e-9));
    }

    TEST_CASE("two-digit Benford fails at three digits") {
        const Mod1Density gd = construct_n_digit(benford_partition(2), BumpFamily::named("sine"));
        CHECK(verify_n_digit(gd, 2).max_abs_error <= 1e-9);
        const NDigitReport at3 = verify_n_digit(gd, 3);
        CHECK_FALSE(at3.is_n_digit);
        CHECK(at3.max_abs_error > 1e-4);
        CHECK(at3.max_abs_error == doctest::Approx(0.003218151080265428).epsilon(1e-9));
    }

    TEST_CASE("uniform is Benford at every tested depth") {
        const Mod1Density uniform = mod1_project(preset_density("uniform"));
        const NDigitReport r = verify_n_digit(uniform, 3);
        CHECK(r.is_n_digit);
        CHECK(r.max_abs_error <= 1e-12);
    }
}
