#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "su11/squeezing.hpp"

using namespace su11;
using Catch::Matchers::WithinAbs;

TEST_CASE("closed-form report at the fiducial point") {
    SECTION("kappa=1, s=0: saturation of the uncertainty bound") {
        const auto rep = squeezing_report_closed_form({1.0, 0}, disk_amplitude{complexd{0.0, 0.0}});
        CHECK_THAT(rep.mean_k0, WithinAbs(1.0, 1e-15));
        CHECK(rep.mean_k1 == 0.0);
        CHECK(rep.mean_k2 == 0.0);
        CHECK_THAT(rep.delta_k1, WithinAbs(std::sqrt(0.5), 1e-15));
        CHECK_THAT(rep.delta_k2, WithinAbs(std::sqrt(0.5), 1e-15));
        CHECK_THAT(rep.uncertainty_product, WithinAbs(0.5, 1e-15));
        CHECK_THAT(rep.uncertainty_product, WithinAbs(rep.bound, 1e-15));
    }
    SECTION("kappa=1, s=1: strict inequality") {
        const auto rep = squeezing_report_closed_form({1.0, 1}, disk_amplitude{complexd{0.0, 0.0}});
        CHECK_THAT(rep.uncertainty_product, WithinAbs(2.0, 1e-15));
        CHECK_THAT(rep.bound, WithinAbs(1.0, 1e-15));
    }
}

TEST_CASE("closed-form report at alpha = 0.5") {
    const auto rep = squeezing_report_closed_form({1.0, 0}, disk_amplitude{complexd{0.5, 0.0}});
    CHECK_THAT(rep.mean_k0, WithinAbs(5.0 / 3.0, 1e-14));
    CHECK_THAT(rep.delta_k1, WithinAbs(std::sqrt(0.5), 1e-14));  // |1-0.25|/0.75 = 1
    CHECK_THAT(rep.delta_k2, WithinAbs(std::sqrt(0.5) * (1.25 / 0.75), 1e-14));
}

TEST_CASE("contraction oracle agrees with the closed forms") {
    struct case_t {
        double kappa;
        int s;
        complexd alpha;
    };
    const case_t cases[] = {
        {1.0, 0, complexd{0.5, 0.0}},
        {2.0, 1, complexd{0.0, 0.3}},
        {0.75, 2, std::polar(0.55, 0.9)},
        {10.0, 5, std::polar(0.7, -2.0)},
    };
    for (const auto& c : cases) {
        const representation_label label(c.kappa, c.s);
        const disk_amplitude amp{c.alpha};
        const auto closed = squeezing_report_closed_form(label, amp);
        const auto numer = numeric_moments(label, amp, 700);
        CHECK_THAT(numer.mean_k0, WithinAbs(closed.mean_k0, 1e-7));
        CHECK_THAT(numer.mean_k1, WithinAbs(closed.mean_k1, 1e-7));
        CHECK_THAT(numer.mean_k2, WithinAbs(closed.mean_k2, 1e-7));
        CHECK_THAT(numer.delta_k1, WithinAbs(closed.delta_k1, 1e-7));
        CHECK_THAT(numer.delta_k2, WithinAbs(closed.delta_k2, 1e-7));
    }
}

TEST_CASE("frozen contraction value at kappa=2, s=1, alpha=0.3i") {
    // 2 (kappa+s) Im(alpha) / (1-u) = 2*3*0.3/0.91
    const auto numer = numeric_moments({2.0, 1}, disk_amplitude{complexd{0.0, 0.3}}, 500);
    CHECK_THAT(numer.mean_k1, WithinAbs(1.9780219780219777, 1e-9));
    const auto at_zero = numeric_moments({2.0, 1}, disk_amplitude{complexd{0.0, 0.0}}, 50);
    CHECK_THAT(at_zero.mean_k1, WithinAbs(0.0, 1e-14));
    CHECK_THAT(at_zero.mean_k2, WithinAbs(0.0, 1e-14));
}

TEST_CASE("uncertainty relation holds across the disk") {
    for (double kappa : {0.75, 1.0, 3.0})
        for (int s : {0, 1, 5})
            for (double m : {0.0, 0.3, 0.8})
                for (double ph : {0.0, 0.7, 2.9}) {
                    const auto rep = squeezing_report_closed_form(
                        {kappa, s}, disk_amplitude::from_polar(m, ph));
                    CHECK(rep.uncertainty_product >= rep.bound - 1e-10);
                    // algebraic form of the same statement
                    const complexd a = std::polar(m, ph);
                    const double u = m * m;
                    const double lhs = (kappa + s * (s + 2.0 * kappa)) * std::abs(1.0 - a * a * a * a);
                    const double rhs = (kappa + s) * (1.0 - u * u);
                    CHECK(lhs - rhs >= -1e-10);
                }
}

TEST_CASE("surfaces match the primitive predicates") {
    for (double kappa : {1.0, 2.0})
        for (int s : {0, 1}) {
            const representation_label label(kappa, s);
            for (double rho : {0.0, 0.4, 1.2, 2.0})
                for (double ph : {0.0, 0.9, 2.2, 4.4}) {
                    const auto amp = disk_amplitude::from_polar(std::tanh(rho), ph);
                    const auto rep = squeezing_report_closed_form(label, amp);
                    for (auto axis : {squeezed_axis::k1, squeezed_axis::k2}) {
                        const double delta = squeezing_surface_value(label, rho, ph, axis);
                        const double slack =
                            rep.bound - (axis == squeezed_axis::k1 ? rep.delta_k1 : rep.delta_k2);
                        if (std::abs(delta) > 1e-12) CHECK(delta * slack > 0.0);
                    }
                }
        }
}

TEST_CASE("surface closed values") {
    CHECK_THAT(squeezing_strength({1.0, 0}), WithinAbs(0.5, 1e-15));
    CHECK_THAT(squeezing_strength({1.0, 1}), WithinAbs(0.5, 1e-15));
    CHECK_THAT(squeezing_surface_value({1.0, 0}, 0.0, 0.0, squeezed_axis::k1),
               WithinAbs(-0.5, 1e-15));
    CHECK_THAT(squeezing_surface_value({1.0, 1}, 0.0, 0.0, squeezed_axis::k1),
               WithinAbs(-0.5, 1e-15));
    // phi = 0, large rapidity: tanh^2 -> 1, Delta -> S
    CHECK_THAT(squeezing_surface_value({1.0, 0}, 12.0, 0.0, squeezed_axis::k1),
               WithinAbs(0.5, 1e-9));
    const auto grid = squeezing_inequality_surfaces({1.0, 0}, {0.0, 1.0}, {0.0, 0.5});
    REQUIRE(grid.size() == 2);
    REQUIRE(grid[0].size() == 2);
    CHECK_THAT(grid[0][0], WithinAbs(-0.5, 1e-15));
}

TEST_CASE("axis classification") {
    // kappa=1, s=0, large real rapidity squeezes K1 under both definitions
    const auto amp = disk_amplitude::from_polar(std::tanh(1.5), 0.0);
    const auto rep = squeezing_report_closed_form({1.0, 0}, amp);
    CHECK(rep.axis_variance_vs_bound == squeezed_axis::k1);
    CHECK(rep.delta_k1 < rep.delta_k2);

    // at alpha = 0 with kappa = 1 nothing is squeezed under the bound test
    const auto center = squeezing_report_closed_form({1.0, 0}, disk_amplitude{complexd{0.0, 0.0}});
    CHECK(center.axis_variance_vs_bound == squeezed_axis::none);

    // mutual exclusion holds on the kappa <= 1 families
    for (double kappa : {0.75, 1.0})
        for (int s : {0, 1, 3})
            for (double rho : {0.2, 1.0, 2.2})
                for (double ph : {0.0, 0.8, 2.4}) {
                    const auto r = squeezing_report_closed_form(
                        {kappa, s}, disk_amplitude::from_polar(std::tanh(rho), ph));
                    const bool s1 = r.delta_k1 < r.bound - 1e-12;
                    const bool s2 = r.delta_k2 < r.bound - 1e-12;
                    CHECK_FALSE((s1 && s2));
                }
}

TEST_CASE("trivial inequality over the grid") {
    for (double kappa : {1.0, 3.0})
        for (int s : {0, 2})
            for (double rho : {0.0, 0.7, 1.9})
                for (double ph : {0.0, 0.5, 1.3, 2.8}) {
                    const double lhs = std::sqrt(
                        1.0 + 0.25 * std::pow(std::tanh(2.0 * rho) * std::sinh(2.0 * rho), 2)
                                  * std::pow(std::sin(2.0 * ph), 4));
                    const double rhs = (kappa + s) / (kappa + s * (s + 2.0 * kappa));
                    CHECK(lhs >= rhs - 1e-12);
                }
}

TEST_CASE("phase-space map") {
    CHECK_THAT(std::abs(phase_space_point({3.0, 4}, disk_amplitude{complexd{0.0, 0.0}})),
               WithinAbs(2.0, 1e-15));
    CHECK(std::abs(phase_space_point({3.0, 0}, disk_amplitude{complexd{0.0, 0.0}})) == 0.0);

    // alpha = 0.5 means u = 0.25: nbar = 2/3 on both routes
    const disk_amplitude half{complexd{0.5, 0.0}};
    CHECK_THAT(std::norm(phase_space_point({1.0, 0}, half)), WithinAbs(2.0 / 3.0, 1e-14));
    CHECK_THAT(std::norm(phase_space_point_rapidity_form({1.0, 0}, half)),
               WithinAbs(2.0 / 3.0, 1e-13));
    // u = 0.5 gives nbar = 2
    const disk_amplitude root_half{complexd{std::sqrt(0.5), 0.0}};
    CHECK_THAT(std::norm(phase_space_point({1.0, 0}, root_half)), WithinAbs(2.0, 1e-13));

    for (double kappa : {1.0, 4.0})
        for (int s : {0, 4})
            for (double m : {0.0, 0.5, 0.8}) {
                const representation_label label(kappa, s);
                const auto amp = disk_amplitude::from_polar(m, 0.3);
                CHECK_THAT(std::abs(phase_space_point(label, amp)
                                    - phase_space_point_rapidity_form(label, amp)),
                           WithinAbs(0.0, 1e-11));
            }
}
