#include "polarbound/model.hpp"

#include <cmath>

namespace polarbound {

DimensionlessParams nondimensionalize(const PhysicalParams& p) {
    if (p.Z < 1) throw std::invalid_argument("nondimensionalize: Z must be >= 1");
    const double pi = std::acos(-1.0);
    const double four_pi_eps0 = 4.0 * pi * p.eps0.farad_per_meter;
    const double hbar2 = p.hbar.joule_second * p.hbar.joule_second;
    const double m = p.m_eff.kg;
    const double q = -p.e_charge.coulomb;             // electron
    const double Q = p.Z * p.e_charge.coulomb;        // nanostructure
    const double qQ = q * Q;
    if (!(qQ < 0.0)) throw std::invalid_argument("nondimensionalize: q*Q must be < 0");

    DimensionlessParams d;
    d.L = -four_pi_eps0 * hbar2 / (m * qQ);
    d.xi = m * q * p.D.coulomb_meter / (four_pi_eps0 * hbar2);
    d.A = m * d.L * d.L * p.B.joule / hbar2;
    d.a = d.L / p.sigma.meter;
    d.rho0 = {p.r0[0] / d.L, p.r0[1] / d.L};
    d.energy_scale = hbar2 / (m * d.L * d.L);
    return d;
}

double energy_to_physical(double e_dimless, const DimensionlessParams& d) {
    return e_dimless * d.energy_scale;
}

double energy_to_dimensionless(double energy_joule, const DimensionlessParams& d) {
    if (!(d.energy_scale > 0.0))
        throw std::invalid_argument("energy_to_dimensionless: invalid energy scale");
    return energy_joule / d.energy_scale;
}

}  // namespace polarbound
