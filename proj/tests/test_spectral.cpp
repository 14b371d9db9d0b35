#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "nanoring/spectral.hpp"

using namespace nanoring;

namespace {

// synthetic trajectory carrying a given dipole-x series at 2 eV carrier
Trajectory synthetic(const std::vector<double>& dx, double dt) {
    Trajectory traj;
    traj.dt_sample = dt;
    traj.cycle = 2.0 * std::numbers::pi / ev_to_au(2.0);
    for (size_t i = 0; i < dx.size(); ++i) {
        traj.times.push_back(dt * static_cast<double>(i));
        traj.dipole_x.push_back(dx[i]);
        traj.dipole_y.push_back(0.0);
        traj.lz.push_back(0.0);
        traj.norm.push_back(1.0);
    }
    return traj;
}

std::vector<double> tone(double energy_ev, size_t n, double dt, double amp = 1.0) {
    std::vector<double> s(n);
    const double w = ev_to_au(energy_ev);
    for (size_t i = 0; i < n; ++i) s[i] = amp * std::cos(w * dt * static_cast<double>(i));
    return s;
}

size_t argmax(const std::vector<double>& v) {
    return static_cast<size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

}  // namespace

TEST_CASE("Morlet mother wavelet values") {
    const double sigma0 = 6.0;
    // direct substitution at x = 0
    CHECK(morlet(0.0, sigma0).real() == doctest::Approx(1.0 - std::exp(-18.0)).epsilon(1e-15));
    CHECK(morlet(0.0, sigma0).imag() == 0.0);
    // Gaussian decay
    CHECK(std::abs(morlet(10.0 * sigma0, sigma0)) < 1e-20);
    CHECK_THROWS_AS(morlet(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("Morlet admissibility: integral vanishes by construction") {
    const double sigma0 = 6.0;
    // trapezoidal quadrature over x in [-10 sigma0, 10 sigma0]
    const int n = 200000;
    const double a = -10.0 * sigma0, b = 10.0 * sigma0;
    const double h = (b - a) / n;
    cplx integral(0.0, 0.0);
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 0.5 : 1.0;
        integral += w * morlet(a + h * i, sigma0);
    }
    integral *= h;
    CHECK(std::abs(integral) < 1e-10);
}

TEST_CASE("Morlet symmetry: Re even, Im odd") {
    for (double x : {0.3, 1.7, 5.0, 11.2}) {
        const cplx p = morlet(x, 6.0);
        const cplx m = morlet(-x, 6.0);
        CHECK(p.real() == doctest::Approx(m.real()).epsilon(1e-15));
        CHECK(p.imag() == doctest::Approx(-m.imag()).epsilon(1e-15));
    }
}

TEST_CASE("dipole spectrum of a monochromatic signal peaks at the tone") {
    const double dt = 1.0;  // a.u.
    const size_t n = 4096;
    const Trajectory traj = synthetic(tone(2.0, n, dt), dt);
    const Spectrum spec = dipole_spectrum(traj);
    const size_t peak = argmax(spec.power);
    CHECK(spec.energies[peak] == doctest::Approx(2.0).epsilon(0.02));
    // zero signal gives a zero spectrum
    const Spectrum zero = dipole_spectrum(synthetic(std::vector<double>(n, 0.0), dt));
    for (double p : zero.power) CHECK(p == 0.0);
}

TEST_CASE("Hann taper: same peak, quarter power, leakage suppressed") {
    const double dt = 1.0;
    const size_t n = 4096;
    // strong tone off the bin grid so the rectangular DFT leaks hard
    std::vector<double> sig = tone(2.013, n, dt);
    const std::vector<double> weak = tone(3.0, n, dt, 1e-4);
    for (size_t i = 0; i < n; ++i) sig[i] += weak[i];
    const Trajectory traj = synthetic(sig, dt);

    const Spectrum rect = dipole_spectrum(traj);
    const Spectrum hann = dipole_spectrum(traj, SpectrumWindow::Hann);
    REQUIRE(hann.energies.size() == rect.energies.size());

    // the dominant peak stays put; the Hann coherent gain is 1/2 in amplitude
    const size_t peak = argmax(hann.power);
    CHECK(hann.energies[peak] == doctest::Approx(2.013).epsilon(0.02));
    CHECK(hann.power[peak] == doctest::Approx(0.25 * rect.power[argmax(rect.power)]).epsilon(0.2));

    // the weak tone is buried under rectangular leakage but resolved by Hann
    auto best_in = [](const Spectrum& s, double lo, double hi) {
        size_t best = 0;
        double bp = -1.0;
        for (size_t k = 0; k < s.energies.size(); ++k)
            if (s.energies[k] >= lo && s.energies[k] <= hi && s.power[k] > bp) {
                bp = s.power[k];
                best = k;
            }
        return best;
    };
    CHECK(hann.energies[best_in(hann, 2.6, 3.4)] == doctest::Approx(3.0).epsilon(0.02));
    CHECK(rect.energies[best_in(rect, 2.6, 3.4)] != doctest::Approx(3.0).epsilon(0.02));
}

TEST_CASE("dipole spectrum rejects short windows") {
    const double dt = 1.0;
    const Trajectory traj = synthetic(tone(2.0, 128, dt), dt);  // ~0.6 oc at 2 eV
    CHECK_THROWS_AS(dipole_spectrum(traj), WindowTooShort);
}

TEST_CASE("CWT: matched row is maximal for a monochromatic signal") {
    const double dt = 1.0;
    const size_t n = 4096;
    const Trajectory traj = synthetic(tone(2.0, n, dt), dt);
    const std::vector<double> energies = energy_grid(1.0, 3.0, 0.1);
    const Scalogram s = cwt(traj, energies, {});

    const size_t mid = n / 2;
    std::vector<double> column;
    for (size_t e = 0; e < energies.size(); ++e) column.push_back(s.at(e, mid));
    CHECK(energies[argmax(column)] == doctest::Approx(2.0).epsilon(0.06));

    // plateau magnitude close to the analytic value sigma0 sqrt(pi/(2 Omega))
    const double omega = ev_to_au(2.0);
    const double analytic = 6.0 * std::sqrt(std::numbers::pi / (2.0 * omega));
    const size_t row = argmax(column);
    CHECK(s.at(row, mid) > 0.5 * analytic);
    CHECK(s.at(row, mid) < 2.0 * analytic);
}

TEST_CASE("CWT of zero signal is a zero grid") {
    const double dt = 1.0;
    const Trajectory traj = synthetic(std::vector<double>(1024, 0.0), dt);
    const Scalogram s = cwt(traj, energy_grid(1.0, 3.0, 0.5), {});
    for (double v : s.magnitude) CHECK(v == 0.0);
}

TEST_CASE("CWT resolves the two ridges of a two-tone signal") {
    const double dt = 1.0;
    const size_t n = 8192;
    std::vector<double> sig = tone(1.0, n, dt);
    const std::vector<double> third = tone(3.0, n, dt);
    for (size_t i = 0; i < n; ++i) sig[i] += third[i];
    const Trajectory traj = synthetic(sig, dt);
    const std::vector<double> energies = energy_grid(0.5, 4.0, 0.02);
    const Scalogram s = cwt(traj, energies, {});

    const size_t mid = n / 2;
    // ridge centers: local maxima of the mid-time column
    auto value = [&](size_t e) { return s.at(e, mid); };
    size_t best_low = 0, best_high = 0;
    for (size_t e = 0; e < energies.size(); ++e) {
        if (energies[e] < 2.0 && value(e) > value(best_low)) best_low = e;
        if (energies[e] >= 2.0 && (best_high == 0 || value(e) > value(best_high))) best_high = e;
    }
    // ridge width set by the sigma0 = 6 resolution: 3 Omega0 / sigma0
    CHECK(std::abs(energies[best_low] - 1.0) < 1.0 * 3.0 / 6.0);
    CHECK(std::abs(energies[best_high] - 3.0) < 3.0 * 3.0 / 6.0);
}

TEST_CASE("CWT is linear in the signal") {
    const double dt = 1.0;
    const size_t n = 1024;
    std::vector<double> s1 = tone(1.5, n, dt);
    std::vector<double> s2 = tone(2.5, n, dt, 0.7);
    std::vector<double> combo(n);
    const double a = 1.3, b = -2.1;
    for (size_t i = 0; i < n; ++i) combo[i] = a * s1[i] + b * s2[i];

    std::vector<double> times(n);
    for (size_t i = 0; i < n; ++i) times[i] = dt * static_cast<double>(i);
    const std::vector<double> energies = energy_grid(1.0, 3.0, 0.25);
    const auto g1 = cwt_complex(times, s1, energies, {});
    const auto g2 = cwt_complex(times, s2, energies, {});
    const auto gc = cwt_complex(times, combo, energies, {});
    for (size_t i = 0; i < gc.size(); ++i)
        CHECK(std::abs(gc[i] - (a * g1[i] + b * g2[i])) < 1e-10);
}

TEST_CASE("line bands sit at the published centers for the 2.7 a0 / 2 eV pairing") {
    RingConfig ring{2.7, 64};
    const auto bands = line_bands(ring, 2.0, 0.5);
    CHECK(bands[0].center() == doctest::Approx(2.0));
    CHECK(bands[1].center() == doctest::Approx(6.0));
    CHECK(bands[2].center() == doctest::Approx(2.0 * level_energy_ev(1, ring)));
    CHECK(bands[2].center() == doctest::Approx(3.8).epsilon(0.02));
    CHECK(bands[3].lo == doctest::Approx(level_energy_ev(2, ring) - 0.5));
    CHECK(bands[3].hi == doctest::Approx(level_energy_ev(2, ring) + level_energy_ev(1, ring) + 0.5));
}

namespace {

// hand-built spectrum with narrow lines at the requested energies
Spectrum blob_spectrum(const std::vector<double>& energies, const std::vector<double>& line_centers,
                       double power = 1.0) {
    Spectrum s;
    s.energies = energies;
    s.power_x.assign(energies.size(), 0.0);
    s.power_y.assign(energies.size(), 0.0);
    s.power.assign(energies.size(), 0.0);
    for (double c : line_centers)
        for (size_t e = 0; e < energies.size(); ++e)
            if (std::abs(energies[e] - c) < 0.1) s.power[e] = s.power_x[e] = power;
    return s;
}

}  // namespace

TEST_CASE("detect_lines flags exactly the populated bands") {
    RingConfig ring{2.7, 64};
    const std::vector<double> energies = energy_grid(0.25, 12.0, 0.02);
    const double w1 = level_energy_ev(1, ring);
    const Spectrum s = blob_spectrum(energies, {2.0, 2.0 * w1});  // H_I and H_R1 only

    const LineReport report = detect_lines(s, ring, 2.0, {});
    CHECK(report.line(LineId::H_I).present);
    CHECK(report.line(LineId::H_R1).present);
    CHECK_FALSE(report.line(LineId::H_II).present);
    CHECK_FALSE(report.line(LineId::H_R2).present);
}

TEST_CASE("detection is scale invariant") {
    RingConfig ring{2.7, 64};
    const std::vector<double> energies = energy_grid(0.25, 12.0, 0.02);
    for (double scale : {1e-6, 1.0, 1e6}) {
        const Spectrum s = blob_spectrum(energies, {2.0, 6.0}, scale);
        const LineReport report = detect_lines(s, ring, 2.0, {});
        CHECK(report.line(LineId::H_I).present);
        CHECK(report.line(LineId::H_II).present);
        CHECK_FALSE(report.line(LineId::H_R1).present);
        CHECK_FALSE(report.line(LineId::H_R2).present);
    }
}

TEST_CASE("silent spectrum yields no lines") {
    RingConfig ring{2.7, 64};
    const std::vector<double> energies = energy_grid(0.25, 12.0, 0.02);
    const Spectrum s = blob_spectrum(energies, {});
    const LineReport report = detect_lines(s, ring, 2.0, {});
    for (const auto& line : report.lines) CHECK_FALSE(line.present);
}

TEST_CASE("overlapping bands signal a bad ring/laser pairing") {
    RingConfig ring{25.0, 64};  // levels collapse under the 0.1 eV carrier
    const std::vector<double> energies = energy_grid(0.005, 0.6, 0.005);
    const Spectrum s = blob_spectrum(energies, {0.1});
    DetectionConfig cfg;
    cfg.band_halfwidth = 0.025;
    CHECK_THROWS_AS(detect_lines(s, ring, 0.1, cfg), BandOverlap);
    cfg.allow_overlap = true;
    CHECK_NOTHROW(detect_lines(s, ring, 0.1, cfg));
}
