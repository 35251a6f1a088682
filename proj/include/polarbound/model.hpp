#pragma once

#include <array>
#include <stdexcept>

namespace polarbound {

// Thin unit tags: construction validates, arithmetic happens on .value.
// CODATA 2018 defaults are provided for hbar, eps0 and the elementary charge.
namespace units {

struct Mass {
    double kg;
    explicit Mass(double v) : kg(v) {
        if (!(v > 0.0)) throw std::invalid_argument("Mass must be > 0 kg");
    }
};

struct Charge {
    double coulomb;
    explicit Charge(double v) : coulomb(v) {
        if (!(v > 0.0)) throw std::invalid_argument("charge magnitude must be > 0 C");
    }
};

struct Length {
    double meter;
    explicit Length(double v) : meter(v) {
        if (!(v > 0.0)) throw std::invalid_argument("Length must be > 0 m");
    }
};

struct DipoleMoment {
    double coulomb_meter;
    explicit DipoleMoment(double v) : coulomb_meter(v) {}
};

struct Energy {
    double joule;
    explicit Energy(double v) : joule(v) {}
};

struct Action {
    double joule_second;
    explicit Action(double v) : joule_second(v) {
        if (!(v > 0.0)) throw std::invalid_argument("Action must be > 0 J*s");
    }
};

struct Permittivity {
    double farad_per_meter;
    explicit Permittivity(double v) : farad_per_meter(v) {
        if (!(v > 0.0)) throw std::invalid_argument("Permittivity must be > 0 F/m");
    }
};

inline constexpr double kHbarSI = 1.054571817e-34;        // J s
inline constexpr double kElementaryChargeSI = 1.602176634e-19;  // C
inline constexpr double kEps0SI = 8.8541878128e-12;       // F/m

}  // namespace units

// Physical inputs. The electron charge is q = -e, the nanostructure charge
// Q = Z e, so q*Q < 0 (attraction) holds by construction.
struct PhysicalParams {
    units::Mass m_eff;
    units::Charge e_charge{units::kElementaryChargeSI};
    int Z = 1;
    units::DipoleMoment D{0.0};
    units::Energy B{0.0};
    units::Length sigma{1e-9};
    std::array<double, 2> r0{0.0, 0.0};  // meters; accepted but solvers require r0 = 0
    units::Action hbar{units::kHbarSI};
    units::Permittivity eps0{units::kEps0SI};
};

struct DimensionlessParams {
    double L = 0.0;             // meters
    double xi = 0.0;            // carries the sign of q*D
    double A = 0.0;
    double a = 0.0;
    std::array<double, 2> rho0{0.0, 0.0};
    double energy_scale = 0.0;  // hbar^2 / (m L^2), joules
};

// r = L*rho with L = -4 pi eps0 hbar^2 / (m q Q); xi = m q D / (4 pi eps0 hbar^2),
// A = m L^2 B / hbar^2, a = L / sigma.
DimensionlessParams nondimensionalize(const PhysicalParams& p);

// E = e_dimless * hbar^2 / (m L^2).
double energy_to_physical(double e_dimless, const DimensionlessParams& d);

// Inverse of the energy map, for round trips.
double energy_to_dimensionless(double energy_joule, const DimensionlessParams& d);

}  // namespace polarbound
