#include <cmath>

#include "doctest.h"
#include "fse/free_particle.hpp"
#include "fse/kernels.hpp"
#include "test_support.hpp"

using fse::Complex;
using fse::DerivativeOrder;
using fse::KGridSpec;
using fse::MomentumSpectrum;
using fse::Scales;
using fse::SpaceTimeField;
using testsupport::kPi;

namespace {

KGridSpec standard_grid() { return KGridSpec::from_range(-12.0, 12.0, 321); }

MomentumSpectrum standard_packet() { return fse::gaussian_packet(0.0, 1.0, 0.0, standard_grid()); }

} // namespace

TEST_CASE("gaussian packet: symmetry, phase shift, narrow-grid rejection") {
    MomentumSpectrum spec = standard_packet();
    const std::size_t n = spec.size();
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(spec.amplitudes[i].imag() == 0.0);
        CHECK(spec.amplitudes[i].real() > 0.0);
        CHECK(spec.amplitudes[i].real() ==
              doctest::Approx(spec.amplitudes[n - 1 - i].real()).epsilon(1e-12));
    }
    MomentumSpectrum shifted = fse::gaussian_packet(0.0, 1.0, 1.7, standard_grid());
    for (std::size_t i = 0; i < n; i += 16)
        CHECK(std::abs(shifted.amplitudes[i]) ==
              doctest::Approx(std::abs(spec.amplitudes[i])).epsilon(1e-12));
    CHECK_THROWS_AS(fse::gaussian_packet(0.0, 1.0, 0.0, KGridSpec::from_range(-3.0, 3.0, 61)),
                    fse::Error);
}

TEST_CASE("gaussian packet: t=0 field has unit L2 norm") {
    MomentumSpectrum spec = standard_packet();
    SpaceTimeField f =
        fse::evolve_free(spec, DerivativeOrder(1.0), Scales(), {0.0}, fse::linspace(-16, 16, 801));
    CHECK(std::abs(testsupport::l2_norm_row(f, 0) - 1.0) < 1e-8);
}

TEST_CASE("single-mode spectrum evolves as a plane wave (nu = 1)") {
    KGridSpec grid(2.0, 1.0, 1); // single k0 = 2
    MomentumSpectrum mode(grid, {Complex{1.0, 0.0}});
    Scales s;
    DerivativeOrder nu(1.0);
    double w = fse::dispersion_w(2.0, nu, s).real();
    std::vector<double> ts{0.0, 0.7, 1.9};
    std::vector<double> xs{-1.0, 0.3, 2.2};
    SpaceTimeField f = fse::evolve_free(mode, nu, s, ts, xs);
    for (std::size_t it = 0; it < ts.size(); ++it)
        for (std::size_t ix = 0; ix < xs.size(); ++ix) {
            Complex expect =
                std::exp(Complex(0.0, -(w * ts[it] + 2.0 * xs[ix]))) / (2.0 * kPi);
            CHECK(std::abs(f.at(it, ix) - expect) < 1e-12);
        }
}

TEST_CASE("zero spectrum gives the zero field") {
    KGridSpec grid = KGridSpec::from_range(-4.0, 4.0, 17);
    MomentumSpectrum zero(grid, std::vector<Complex>(17, Complex{0.0, 0.0}));
    SpaceTimeField f = fse::evolve_free(zero, DerivativeOrder(0.5), Scales(), {0.0, 1.0},
                                        fse::linspace(-2, 2, 21));
    for (const Complex& v : f.values) CHECK(v == Complex(0.0, 0.0));
}

TEST_CASE("negative time is rejected for the causal solution") {
    CHECK_THROWS_AS(fse::evolve_free(standard_packet(), DerivativeOrder(1.0), Scales(), {-1.0},
                                     {0.0}),
                    fse::Error);
}

TEST_CASE("nu=1 Gaussian evolution matches the direct-quadrature dispersion oracle") {
    MomentumSpectrum spec = standard_packet();
    Scales s;
    std::vector<double> xs = fse::linspace(-14.0, 14.0, 141);
    SpaceTimeField f = fse::evolve_free(spec, DerivativeOrder(1.0), s, {5.0}, xs);
    double beta2 = fse::beta_sq(DerivativeOrder(1.0), s).real();
    double norm = std::pow(2.0 * kPi, 0.25);
    auto amp = [&](double k) -> Complex { return {norm * std::exp(-k * k / 4.0), 0.0}; };
    double num = 0.0, den = 0.0;
    for (std::size_t ix = 0; ix < xs.size(); ++ix) {
        Complex oracle = testsupport::dispersion_oracle_nu1(amp, beta2, 5.0, xs[ix], -12.0, 12.0);
        num += std::norm(f.at(0, ix) - oracle);
        den += std::norm(oracle);
    }
    CHECK(std::sqrt(num / den) < 1e-6);
}

TEST_CASE("evolution is linear in the spectrum") {
    KGridSpec grid = KGridSpec::from_range(-14.0, 14.0, 201);
    MomentumSpectrum a = fse::gaussian_packet(0.0, 1.0, 0.0, grid);
    MomentumSpectrum b = fse::gaussian_packet(1.0, 1.2, 0.4, grid);
    std::vector<Complex> mixed(a.size());
    const Complex ca{0.6, -0.2}, cb{-1.1, 0.8};
    for (std::size_t i = 0; i < mixed.size(); ++i)
        mixed[i] = ca * a.amplitudes[i] + cb * b.amplitudes[i];
    MomentumSpectrum m(grid, std::move(mixed));
    std::vector<double> ts{0.5, 2.0};
    std::vector<double> xs = fse::linspace(-5, 5, 41);
    DerivativeOrder nu(0.75);
    Scales s;
    SpaceTimeField fa = fse::evolve_free(a, nu, s, ts, xs);
    SpaceTimeField fb = fse::evolve_free(b, nu, s, ts, xs);
    SpaceTimeField fm = fse::evolve_free(m, nu, s, ts, xs);
    for (std::size_t i = 0; i < fm.values.size(); ++i)
        CHECK(std::abs(fm.values[i] - (ca * fa.values[i] + cb * fb.values[i])) < 1e-12);
}

TEST_CASE("nu=1 norm conservation over t in [0, 5]") {
    MomentumSpectrum spec = standard_packet();
    std::vector<double> ts = fse::linspace(0.0, 5.0, 6);
    SpaceTimeField f = fse::evolve_free(spec, DerivativeOrder(1.0), Scales(), ts,
                                        fse::linspace(-30.0, 30.0, 1201));
    for (std::size_t it = 0; it < ts.size(); ++it)
        CHECK(std::abs(testsupport::l2_norm_row(f, it) - 1.0) < 1e-6);
}

TEST_CASE("nu=2 single-mode time series matches cos(t sqrt(w))") {
    KGridSpec grid(1.5, 1.0, 1);
    MomentumSpectrum mode(grid, {Complex{1.0, 0.0}});
    Scales s;
    DerivativeOrder nu(2.0);
    double w = fse::dispersion_w(1.5, nu, s).real();
    double period = 2.0 * kPi / std::sqrt(w);
    std::vector<double> ts = fse::linspace(0.0, 2.0 * period, 41);
    std::vector<double> xs{0.9};
    SpaceTimeField f = fse::evolve_free(mode, nu, s, ts, xs);
    for (std::size_t it = 0; it < ts.size(); ++it) {
        Complex expect = std::cos(ts[it] * std::sqrt(w)) *
                         std::exp(Complex(0.0, -1.5 * xs[0])) / (2.0 * kPi);
        CHECK(std::abs(f.at(it, 0) - expect) < 1e-10);
    }
}

TEST_CASE("shifting x0 translates the probability density") {
    KGridSpec grid = standard_grid();
    double x0 = 2.0; // exactly 10 samples of the x grid below
    MomentumSpectrum base = fse::gaussian_packet(0.0, 1.0, 0.0, grid);
    MomentumSpectrum moved = fse::gaussian_packet(0.0, 1.0, x0, grid);
    std::vector<double> xs = fse::linspace(-10.0, 10.0, 101);
    SpaceTimeField f0 = fse::evolve_free(base, DerivativeOrder(1.0), Scales(), {1.2}, xs);
    SpaceTimeField f1 = fse::evolve_free(moved, DerivativeOrder(1.0), Scales(), {1.2}, xs);
    for (std::size_t ix = 10; ix < xs.size(); ++ix)
        CHECK(std::abs(std::norm(f1.at(0, ix)) - std::norm(f0.at(0, ix - 10))) < 1e-9);
}

TEST_CASE("doubling the k grid changes the field by < 1e-8 L2 relative") {
    MomentumSpectrum coarse = fse::gaussian_packet(0.0, 1.0, 0.0, KGridSpec::from_range(-12, 12, 161));
    MomentumSpectrum fine = fse::gaussian_packet(0.0, 1.0, 0.0, KGridSpec::from_range(-12, 12, 321));
    std::vector<double> ts{0.0, 1.0, 3.0};
    std::vector<double> xs = fse::linspace(-8, 8, 81);
    SpaceTimeField fc = fse::evolve_free(coarse, DerivativeOrder(1.0), Scales(), ts, xs);
    SpaceTimeField ff = fse::evolve_free(fine, DerivativeOrder(1.0), Scales(), ts, xs);
    CHECK(testsupport::l2_rel_diff(fc, ff) < 1e-8);
}

TEST_CASE("general solution: single m=0 term reduces to -i times the causal one (nu=1)") {
    KGridSpec grid = KGridSpec::from_range(-12.0, 12.0, 145);
    MomentumSpectrum packet = fse::gaussian_packet(0.4, 1.1, 0.0, grid);
    std::vector<double> ts{0.8, 2.1};
    std::vector<double> xs = fse::linspace(-4, 4, 33);
    SpaceTimeField causal = fse::evolve_free(packet, DerivativeOrder(1.0), Scales(), ts, xs, 1e-13);
    SpaceTimeField general = fse::evolve_free_general(
        grid, {{0, packet.amplitudes}}, DerivativeOrder(1.0), Scales(), ts, xs, 1e-13);
    for (std::size_t i = 0; i < general.values.size(); ++i)
        CHECK(std::abs(general.values[i] - Complex(0.0, -1.0) * causal.values[i]) < 1e-12);
}

TEST_CASE("general solution: empty term list and linearity in terms") {
    KGridSpec grid = KGridSpec::from_range(-6.0, 6.0, 61);
    std::vector<double> ts{0.5};
    std::vector<double> xs{-1.0, 0.0, 1.0};
    SpaceTimeField empty =
        fse::evolve_free_general(grid, {}, DerivativeOrder(0.5), Scales(), ts, xs);
    for (const Complex& v : empty.values) CHECK(v == Complex(0.0, 0.0));

    std::vector<Complex> a0(grid.n), a1(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        double k = grid.k(i);
        a0[i] = std::exp(-k * k / 2.0);
        a1[i] = k * std::exp(-k * k / 2.0) * Complex(0.3, 0.7);
    }
    SpaceTimeField both = fse::evolve_free_general(grid, {{0, a0}, {1, a1}},
                                                   DerivativeOrder(0.5), Scales(), ts, xs);
    SpaceTimeField first =
        fse::evolve_free_general(grid, {{0, a0}}, DerivativeOrder(0.5), Scales(), ts, xs);
    SpaceTimeField second =
        fse::evolve_free_general(grid, {{1, a1}}, DerivativeOrder(0.5), Scales(), ts, xs);
    for (std::size_t i = 0; i < both.values.size(); ++i)
        CHECK(std::abs(both.values[i] - first.values[i] - second.values[i]) < 1e-13);

    CHECK_THROWS_AS(fse::evolve_free_general(grid, {{9, a0}}, DerivativeOrder(0.5), Scales(),
                                             ts, xs),
                    fse::Error);
    CHECK_THROWS_AS(fse::evolve_free_general(grid, {{0, a0}}, DerivativeOrder(0.5), Scales(),
                                             {0.0}, xs),
                    fse::Error); // singular at t = 0 for Re(nu - 1) < 0
}

TEST_CASE("half-shell decomposition: fields sum to the direct nu=1/2 evolution") {
    MomentumSpectrum spec = standard_packet();
    Scales s;
    std::vector<double> xs = fse::linspace(-8.0, 8.0, 81);
    auto [onf, off] = fse::decompose_half_shell(spec, s, 1.0, xs);
    SpaceTimeField direct = fse::evolve_free(spec, DerivativeOrder(0.5), s, {1.0}, xs);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < direct.values.size(); ++i) {
        num += std::norm(onf.values[i] + off.values[i] - direct.values[i]);
        den += std::norm(direct.values[i]);
    }
    CHECK(std::sqrt(num / den) < 1e-6);
}

TEST_CASE("half-shell decomposition: single mode oscillates at frequency w^2") {
    KGridSpec grid(2.0, 1.0, 1);
    MomentumSpectrum mode(grid, {Complex{1.0, 0.0}});
    Scales s;
    double w = fse::dispersion_w(2.0, DerivativeOrder(0.5), s).real();
    std::vector<double> xs{0.0};
    auto [on1, off1] = fse::decompose_half_shell(mode, s, 0.6, xs);
    auto [on2, off2] = fse::decompose_half_shell(mode, s, 1.1, xs);
    Complex ratio = on2.at(0, 0) / on1.at(0, 0);
    CHECK(std::abs(ratio - std::exp(Complex(0.0, -w * w * 0.5))) < 1e-12);
}

TEST_CASE("half-shell decomposition: t -> 0+ stays finite and consistent") {
    KGridSpec grid = KGridSpec::from_range(-10.0, 10.0, 101);
    MomentumSpectrum packet = fse::gaussian_packet(0.0, 1.0, 0.0, grid);
    Scales s;
    std::vector<double> xs = fse::linspace(-4.0, 4.0, 17);
    auto [onf, off] = fse::decompose_half_shell(packet, s, 1e-4, xs);
    SpaceTimeField direct = fse::evolve_free(packet, DerivativeOrder(0.5), s, {1e-4}, xs);
    for (std::size_t i = 0; i < direct.values.size(); ++i) {
        CHECK(std::isfinite(off.values[i].real()));
        CHECK(std::abs(onf.values[i] + off.values[i] - direct.values[i]) < 1e-6);
    }
}
