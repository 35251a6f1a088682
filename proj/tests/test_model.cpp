#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "polarbound/angular.hpp"
#include "polarbound/model.hpp"

using namespace polarbound;
using namespace polarbound::units;

namespace {

// Round test constants: hbar = 1, eps0 = 1/(4 pi), m = 1, e = 1 give L = 1/Z.
PhysicalParams round_params() {
    PhysicalParams p{Mass(1.0)};
    p.e_charge = Charge(1.0);
    p.hbar = Action(1.0);
    p.eps0 = Permittivity(1.0 / (4.0 * std::acos(-1.0)));
    p.sigma = Length(2.0);
    return p;
}

}  // namespace

TEST_CASE("round-number sanity: L, a, energy scale") {
    PhysicalParams p = round_params();
    auto d = nondimensionalize(p);
    CHECK(d.L == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.a == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(d.energy_scale == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.xi == 0.0);  // D = 0
    CHECK(d.A == 0.0);   // B = 0
}

TEST_CASE("xi carries the sign of q*D") {
    PhysicalParams p = round_params();
    p.D = DipoleMoment(2.0);
    auto d = nondimensionalize(p);
    CHECK(d.xi == doctest::Approx(-2.0).epsilon(1e-14));  // q = -e
}

TEST_CASE("coupling 4*gp = 0.8147872 corresponds to xi = 0.10184840") {
    // gp = 2 xi, so 4 gp = 8 xi = 0.8147872.
    PhysicalParams p = round_params();
    p.D = DipoleMoment(0.8147872 / 8.0);
    auto d = nondimensionalize(p);
    CHECK(std::abs(d.xi) == doctest::Approx(0.10184840).epsilon(1e-7));
    CHECK(4.0 * gp_from_xi(std::abs(d.xi)) == doctest::Approx(0.8147872).epsilon(1e-7));
}

TEST_CASE("energy map and round trip") {
    PhysicalParams p = round_params();
    auto d = nondimensionalize(p);
    CHECK(energy_to_physical(0.0, d) == 0.0);
    CHECK(energy_to_physical(-2.0, d) == doctest::Approx(-2.0 * d.energy_scale));
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> ed(-10.0, 10.0);
    for (int i = 0; i < 20; ++i) {
        double e = ed(rng);
        CHECK(energy_to_dimensionless(energy_to_physical(e, d), d) ==
              doctest::Approx(e).epsilon(1e-14));
    }
}

TEST_CASE("xi is invariant under D -> cD, e -> e/c") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> cd(0.5, 3.0);
    for (int i = 0; i < 20; ++i) {
        const double c = cd(rng);
        PhysicalParams p = round_params();
        p.D = DipoleMoment(1.3);
        auto d1 = nondimensionalize(p);
        PhysicalParams p2 = round_params();
        p2.D = DipoleMoment(1.3 * c);
        p2.e_charge = Charge(1.0 / c);
        auto d2 = nondimensionalize(p2);
        CHECK(d2.xi == doctest::Approx(d1.xi).epsilon(1e-13));
    }
}

TEST_CASE("unit tags validate at construction") {
    CHECK_THROWS_AS(Mass(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(Length(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Permittivity(-1e-12), std::invalid_argument);
    PhysicalParams p = round_params();
    p.Z = 0;
    CHECK_THROWS_AS(nondimensionalize(p), std::invalid_argument);
}

TEST_CASE("CODATA defaults give a positive electron-scale length") {
    PhysicalParams p{Mass(9.1093837015e-31)};
    auto d = nondimensionalize(p);
    // Bohr radius scale for Z = 1.
    CHECK(d.L == doctest::Approx(5.29177210903e-11).epsilon(1e-6));
    CHECK(d.energy_scale > 0.0);
}
