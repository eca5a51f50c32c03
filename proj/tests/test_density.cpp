#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "benford/density.hpp"
#include "benford/digits.hpp"
#include "benford/presets.hpp"
#include "benford/rng.hpp"
#include "oracles.hpp"

using namespace benford;

namespace {

constexpr double kPi = std::numbers::pi;

PiecewiseDensity uniform01() {
    return PiecewiseDensity{{Piece{0.0, 1.0, ConstantShape{1.0}, 1.0}}};
}

// Nine-hump density of Y on [1,10): f(y) = pi/(2 y ln 10) *
// sin(pi * log10(y/k)/log10(1+1/k)) on [k, k+1).
double nine_hump_f(double y) {
    const auto k = std::floor(y);
    if (k < 1.0 || k > 9.0) return 0.0;
    const double w = std::log10(1.0 + 1.0 / k);
    return kPi / (2.0 * y * std::numbers::ln10) * std::sin(kPi * std::log10(y / k) / w);
}

} // namespace

TEST_SUITE("shapes") {
    TEST_CASE("profile values and totals") {
        const PieceShape c = ConstantShape{2.0};
        CHECK(shape_value(c, 0.3) == 2.0);
        CHECK(shape_total(c) == 2.0);

        const PieceShape l = LinearShape{0.0, 2.0};
        CHECK(shape_value(l, 0.0) == 0.0);
        CHECK(shape_value(l, 1.0) == 2.0);
        CHECK(shape_total(l) == doctest::Approx(1.0).epsilon(1e-15));

        const PieceShape s = SineBumpShape{};
        CHECK(shape_total(s) == 1.0);  // (1 - cos(pi))/2 exactly
        CHECK(shape_value(s, 0.5) == doctest::Approx(kPi / 2).epsilon(1e-15));

        const PieceShape t = TabulatedShape{{1.0, 3.0, 1.0}};
        CHECK(shape_total(t) == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(shape_value(t, 0.25) == doctest::Approx(2.0).epsilon(1e-15));
    }

    TEST_CASE("restriction keeps the profile pointwise") {
        Xoshiro256pp rng(7);
        const PieceShape shapes[] = {PieceShape{ConstantShape{1.5}},
                                     PieceShape{LinearShape{0.5, 2.0}},
                                     PieceShape{SineBumpShape{}},
                                     PieceShape{TabulatedShape{{0.2, 1.0, 0.4, 2.0, 0.7}}}};
        for (const PieceShape& s : shapes) {
            for (int trial = 0; trial < 20; ++trial) {
                const double a = 0.8 * rng.next_unit();
                const double b = a + 0.05 + (0.95 - a) * rng.next_unit();
                const PieceShape r = shape_restrict(s, a, b);
                for (int i = 0; i <= 10; ++i) {
                    const double u = i / 10.0;
                    CHECK(shape_value(r, u) ==
                          doctest::Approx(shape_value(s, a + (b - a) * u)).epsilon(1e-12));
                }
            }
        }
    }

    TEST_CASE("fraction and inverse are mutually inverse") {
        const PieceShape shapes[] = {PieceShape{ConstantShape{1.0}},
                                     PieceShape{LinearShape{0.2, 1.8}},
                                     PieceShape{SineBumpShape{}},
                                     PieceShape{SineBumpShape{0.2, 0.9}},
                                     PieceShape{TabulatedShape{{0.0, 2.0, 1.0, 3.0}}}};
        for (const PieceShape& s : shapes) {
            for (int i = 0; i <= 1000; ++i) {
                const double u = i / 1000.0;
                const double p = shape_fraction(s, u);
                CHECK(std::abs(shape_cum(s, shape_inverse_fraction(s, p)) - shape_cum(s, u)) <=
                      1e-10 * std::max(1.0, shape_total(s)));
            }
        }
    }

    TEST_CASE("invalid shapes are rejected") {
        CHECK_THROWS_AS(validate_shape(ConstantShape{-1.0}), std::invalid_argument);
        CHECK_THROWS_AS(validate_shape(LinearShape{1.0, -0.5}), std::invalid_argument);
        CHECK_THROWS_AS(validate_shape(TabulatedShape{{1.0}}), std::invalid_argument);
        CHECK_THROWS_AS(validate_shape(TabulatedShape{{1.0, -2.0}}), std::invalid_argument);
        CHECK_THROWS_AS(validate_shape(SineBumpShape{0.7, 0.2}), std::invalid_argument);
    }
}

TEST_SUITE("density.construction") {
    TEST_CASE("normalization is enforced") {
        CHECK_THROWS_AS((PiecewiseDensity{{Piece{0.0, 1.0, ConstantShape{1.0}, 0.5}}}),
                        std::invalid_argument);
        CHECK_THROWS_AS((PiecewiseDensity{std::vector<Piece>{}}), std::invalid_argument);
    }

    TEST_CASE("overlap and ordering are rejected") {
        std::vector<Piece> overlapping{{0.0, 0.6, ConstantShape{1.0}, 0.5},
                                       {0.5, 1.0, ConstantShape{1.0}, 0.5}};
        CHECK_THROWS_AS(PiecewiseDensity{std::move(overlapping)}, std::invalid_argument);
        std::vector<Piece> reversed{{0.0, 0.0, ConstantShape{1.0}, 1.0}};
        CHECK_THROWS_AS(PiecewiseDensity{std::move(reversed)}, std::invalid_argument);
    }

    TEST_CASE("positive weight needs a positive-mass shape") {
        std::vector<Piece> zero_shape{{0.0, 1.0, ConstantShape{0.0}, 1.0}};
        CHECK_THROWS_AS(PiecewiseDensity{std::move(zero_shape)}, std::invalid_argument);
    }

    TEST_CASE("presets are normalized") {
        for (auto name : preset_names()) {
            const PiecewiseDensity d = preset_density(name);
            CHECK(std::abs(d.mass() - 1.0) <= 1e-12);
            CHECK(std::abs(d.integrate(d.support_lo(), d.support_hi()) - 1.0) <= 1e-12);
        }
    }
}

TEST_SUITE("density.evaluate") {
    TEST_CASE("uniform") {
        const PiecewiseDensity u = uniform01();
        CHECK(u.evaluate(0.5) == 1.0);
        CHECK(u.evaluate(0.0) == 1.0);
        CHECK(u.evaluate(1.0) == 0.0);  // hi is exclusive
        CHECK(u.evaluate(-0.2) == 0.0);
    }

    TEST_CASE("sine density peaks at pi/2") {
        // Unit-mass arches compressed onto each digit cell keep their
        // height; the first mid-peak sits at pi/2, not pi/(2 log 2).
        const PiecewiseDensity g = preset_density("sine1");
        CHECK(g.evaluate(std::log10(2.0) / 2.0) == doctest::Approx(kPi / 2).epsilon(1e-14));
    }

    TEST_CASE("right-continuous at piece boundaries") {
        const PiecewiseDensity d{{Piece{0.0, 0.5, ConstantShape{1.0}, 0.25},
                                  Piece{0.5, 1.0, ConstantShape{1.0}, 0.75}}};
        CHECK(d.evaluate(0.5) == doctest::Approx(1.5).epsilon(1e-15));
    }
}

TEST_SUITE("density.integrate") {
    TEST_CASE("uniform digit interval") {
        CHECK(uniform01().integrate(0.0, std::log10(2.0)) ==
              doctest::Approx(std::log10(2.0)).epsilon(1e-15));
    }

    TEST_CASE("empty and reversed intervals") {
        const PiecewiseDensity u = uniform01();
        CHECK(u.integrate(0.3, 0.3) == 0.0);
        CHECK_THROWS_AS(u.integrate(0.4, 0.2), std::invalid_argument);
    }

    TEST_CASE("sine density third digit cell") {
        const PiecewiseDensity g = preset_density("sine1");
        CHECK(g.integrate(std::log10(3.0), std::log10(4.0)) ==
              doctest::Approx(std::log10(4.0 / 3.0)).epsilon(1e-12));
    }

    TEST_CASE("matches the midpoint Riemann oracle for every shape kind") {
        const PiecewiseDensity densities[] = {
            PiecewiseDensity{{Piece{0.25, 1.75, ConstantShape{1.0}, 1.0}}},
            PiecewiseDensity{{Piece{-0.5, 1.0, LinearShape{0.2, 1.8}, 1.0}}},
            PiecewiseDensity{{Piece{0.1, 2.3, SineBumpShape{}, 1.0}}},
            PiecewiseDensity{{Piece{0.0, 1.0, TabulatedShape{{0.1, 1.9, 0.7, 1.3}}, 1.0}}},
        };
        for (const PiecewiseDensity& d : densities) {
            const double lo = d.support_lo();
            const double hi = d.support_hi();
            const double exact = d.integrate(lo, hi);
            CHECK(std::abs(exact - testing::riemann_integral(d, lo, hi, 1'000'000)) <= 1e-7);
            // and over a strict sub-interval
            const double a = lo + 0.37 * (hi - lo);
            const double b = lo + 0.81 * (hi - lo);
            CHECK(std::abs(d.integrate(a, b) - testing::riemann_integral(d, a, b, 1'000'000)) <=
                  1e-7);
        }
    }
}

TEST_SUITE("density.mod1") {
    TEST_CASE("shifted uniform tiles the unit interval") {
        const PiecewiseDensity g{{Piece{0.65, 1.65, ConstantShape{1.0}, 1.0}}};
        const Mod1Density gd = mod1_project(g);
        CHECK(gd.inner().pieces().size() == 2);
        for (int i = 0; i < 100; ++i)
            CHECK(gd.evaluate(i / 100.0) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(gd.inner().mass() == g.mass());
    }

    TEST_CASE("geometric staircase folds to the uniform density") {
        const Mod1Density gd = mod1_project(preset_density("geom60"));
        REQUIRE(gd.inner().pieces().size() == 1);
        for (int i = 0; i <= 1000; ++i)
            CHECK(std::abs(gd.evaluate(i / 1001.0) - 1.0) <= 1e-12);
        CHECK(std::abs(gd.inner().mass() - 1.0) <= 1e-12);
    }

    TEST_CASE("triangle matches the direct fold oracle") {
        const PiecewiseDensity g = preset_density("triangle");
        const Mod1Density gd = mod1_project(g);
        for (int i = 0; i < 1000; ++i) {
            const double x = (i + 0.5) / 1000.0;
            CHECK(std::abs(gd.evaluate(x) - testing::mod1_sum(g, x)) <= 1e-10);
        }
        CHECK(gd.inner().mass() == doctest::Approx(1.0).epsilon(1e-15));
        // the stack is piecewise linear: 8/9 at the ends, 10/9 in the middle
        CHECK(gd.evaluate(0.0) == doctest::Approx(8.0 / 9.0).epsilon(1e-13));
        CHECK(gd.evaluate(0.5) == doctest::Approx(10.0 / 9.0).epsilon(1e-13));
    }

    TEST_CASE("projection conserves mass on random densities") {
        Xoshiro256pp rng(123);
        for (int trial = 0; trial < 50; ++trial) {
            // a few disjoint pieces with random spans crossing integers
            const int n = 1 + static_cast<int>(rng.next() % 4);
            std::vector<Piece> pieces;
            double cursor = -2.0 + 2.0 * rng.next_unit();
            std::vector<double> weights(static_cast<std::size_t>(n));
            double wsum = 0.0;
            for (double& w : weights) wsum += (w = 0.1 + rng.next_unit());
            for (double& w : weights) w /= wsum;
            // make the weights sum to 1 exactly
            weights.back() = 1.0;
            for (std::size_t i = 0; i + 1 < weights.size(); ++i) weights.back() -= weights[i];
            for (int i = 0; i < n; ++i) {
                const double lo = cursor + rng.next_unit();
                const double hi = lo + 0.25 + 2.5 * rng.next_unit();
                cursor = hi;
                PieceShape shape;
                switch (rng.next() % 4) {
                    case 0: shape = ConstantShape{1.0}; break;
                    case 1: shape = LinearShape{0.3, 1.7}; break;
                    case 2: shape = SineBumpShape{}; break;
                    default: shape = TabulatedShape{{0.4, 1.2, 0.8, 1.6, 0.2}}; break;
                }
                pieces.push_back({lo, hi, shape, weights[static_cast<std::size_t>(i)]});
            }
            const PiecewiseDensity g{std::move(pieces)};
            const Mod1Density gd = mod1_project(g);
            CHECK(std::abs(gd.inner().mass() - g.mass()) <= 1e-15);
            // pointwise within the overlap-grid resolution
            for (int i = 0; i < 200; ++i) {
                const double x = (i + 0.5) / 200.0;
                CHECK(std::abs(gd.evaluate(x) - testing::mod1_sum(g, x)) <= 1e-4);
            }
            // integrals are tighter than pointwise tabulation error; the
            // oracle itself carries O(h) error at the density jumps, which
            // sets this tolerance
            CHECK(std::abs(gd.integrate(0.17, 0.83) -
                           testing::riemann_integral(gd.inner(), 0.17, 0.83, 400'000)) <= 1e-5);
        }
    }
}

TEST_SUITE("density.translate") {
    TEST_CASE("integer shifts are the identity") {
        const Mod1Density gd = mod1_project(preset_density("sine1"));
        for (double t : {0.0, 1.0, 2.0, -3.0}) {
            const Mod1Density shifted = translate_mod1(gd, t);
            REQUIRE(shifted.inner().pieces().size() == gd.inner().pieces().size());
            for (std::size_t i = 0; i < gd.inner().pieces().size(); ++i) {
                CHECK(shifted.inner().pieces()[i].lo == gd.inner().pieces()[i].lo);
                CHECK(shifted.inner().pieces()[i].weight == gd.inner().pieces()[i].weight);
            }
        }
    }

    TEST_CASE("uniform stays Benford under every translation") {
        const Mod1Density uniform = mod1_project(preset_density("uniform"));
        for (int j = 0; j < 100; ++j) {
            const Mod1Density shifted = translate_mod1(uniform, j / 100.0);
            for (int d = 1; d <= 9; ++d) {
                const DigitBlock block{{d}};
                CHECK(std::abs(digit_prob_from_mod1(shifted, block) - benford_block_prob(block)) <=
                      1e-12);
            }
        }
    }

    TEST_CASE("the sine density is not translation invariant") {
        const Mod1Density gd = mod1_project(preset_density("sine1"));
        const Mod1Density shifted = translate_mod1(gd, 0.3);
        double max_dev = 0.0;
        for (int d = 1; d <= 9; ++d) {
            const DigitBlock block{{d}};
            max_dev = std::max(max_dev, std::abs(digit_prob_from_mod1(shifted, block) -
                                                 benford_block_prob(block)));
        }
        CHECK(max_dev > 0.01);
        CHECK(max_dev == doctest::Approx(0.015673088252007315).epsilon(1e-9));
    }

    TEST_CASE("translation composes") {
        const Mod1Density gd = mod1_project(preset_density("sine1"));
        Xoshiro256pp rng(99);
        for (int trial = 0; trial < 10; ++trial) {
            const double s = rng.next_unit();
            const double t = rng.next_unit();
            const Mod1Density twice = translate_mod1(translate_mod1(gd, s), t);
            const Mod1Density once = translate_mod1(gd, s + t);
            for (int i = 0; i < 1000; ++i) {
                const double x = (i + 0.5) / 1000.0;
                CHECK(std::abs(twice.evaluate(x) - once.evaluate(x)) <= 1e-10);
            }
        }
    }

    TEST_CASE("wrap-around preserves mass") {
        const Mod1Density gd = mod1_project(preset_density("triangle"));
        const Mod1Density shifted = translate_mod1(gd, 0.65);
        CHECK(std::abs(shifted.inner().mass() - 1.0) <= 1e-13);
    }
}

TEST_SUITE("density.rebase") {
    TEST_CASE("base 10 is the identity") {
        const PiecewiseDensity g = preset_density("sine1");
        const PiecewiseDensity r = rebase_log_density(g, 10);
        for (std::size_t i = 0; i < g.pieces().size(); ++i) {
            CHECK(r.pieces()[i].lo == g.pieces()[i].lo);
            CHECK(r.pieces()[i].hi == g.pieces()[i].hi);
        }
    }

    TEST_CASE("invalid base") {
        CHECK_THROWS_AS(rebase_log_density(uniform01(), 1), std::invalid_argument);
    }

    TEST_CASE("base 100 halves the unit support") {
        const PiecewiseDensity r = rebase_log_density(uniform01(), 100);
        CHECK(r.support_hi() == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(r.evaluate(0.25) == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(std::abs(r.mass() - 1.0) <= 1e-12);
    }

    TEST_CASE("uniform on [0,2) is Benford in base 100") {
        const PiecewiseDensity g{{Piece{0.0, 2.0, ConstantShape{1.0}, 1.0}}};
        const Mod1Density gd = mod1_project(rebase_log_density(g, 100));
        const double log100 = std::log(100.0);
        for (int d = 1; d <= 99; ++d) {
            const double p = gd.integrate(log_mantissa_bound(d, 1, 100),
                                          log_mantissa_bound(d + 1, 1, 100));
            CHECK(std::abs(p - std::log1p(1.0 / d) / log100) <= 1e-12);
        }
    }
}

TEST_SUITE("density.y-transform") {
    TEST_CASE("uniform maps to 1/(y ln 10)") {
        const PiecewiseDensity f = density_of_y_from_g(uniform01());
        CHECK(f.support_lo() == doctest::Approx(1.0));
        CHECK(f.support_hi() == doctest::Approx(10.0));
        CHECK(f.evaluate(1.0) == doctest::Approx(1.0 / std::numbers::ln10).epsilon(1e-4));
        CHECK(f.evaluate(5.0) == doctest::Approx(1.0 / (5.0 * std::numbers::ln10)).epsilon(1e-4));
        CHECK(std::abs(f.integrate(1.0, 10.0) - 1.0) <= 1e-9);
    }

    TEST_CASE("sine density maps to the nine-hump curve") {
        const PiecewiseDensity f = density_of_y_from_g(preset_density("sine1"));
        CHECK(f.pieces().size() == 9);
        for (int i = 0; i < 500; ++i) {
            const double y = 1.0 + 9.0 * (i + 0.5) / 500.0;
            CHECK(std::abs(f.evaluate(y) - nine_hump_f(y)) <= 1e-4);
        }
        CHECK(std::abs(f.integrate(1.0, 10.0) - 1.0) <= 1e-9);
    }
}
