// Single photon leaking out of a cavity with absorption: how eta(t) grows and
// what the extracted pulse looks like at the origin of phase space.

#include <cstdio>

#include <qextract/qextract.hpp>

int main()
{
    using namespace qextract;

    // 2 cm cavity, |T| = 1e-3, |A| = 5e-4 -> gamma_abs / gamma_rad = 0.25
    const CavityParams cavity(0.02, 1e-3, 5e-4, 2.0 * std::numbers::pi * 3.5e14);
    const auto rates = decay_rates(cavity);
    std::printf("gamma_rad = %.6g /s, gamma_abs = %.6g /s, asymptote = %.6f\n", rates.rad, rates.abs,
                eta_asymptote(rates.rad, rates.abs));

    const double tau = 1.0 / cavity.total_rate();
    for (double k : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
        const double eta = eta_closed(rates, k * tau);
        const double w0 = fock_output_wigner(1, eta)(0.0);
        std::printf("t = %4.2f tau  eta = %.6f  W(0) = %+.6f  %s\n", k, eta, w0,
                    eta > fock_threshold(1) ? "one-photon dominant" : "vacuum dominant");
    }
    return 0;
}
