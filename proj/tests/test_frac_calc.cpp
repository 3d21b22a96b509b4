#include <cmath>

#include "doctest.h"
#include "fse/frac_calc.hpp"
#include "test_support.hpp"

using fse::Complex;
using fse::SignedSpectrum;
using testsupport::kPi;

namespace {

std::vector<double> xgrid() { return fse::linspace(-8.0, 8.0, 321); }
std::vector<double> kgrid() { return fse::linspace(-10.0, 10.0, 201); }

std::vector<Complex> sample(const std::vector<double>& xs,
                            const std::function<Complex(double)>& f) {
    std::vector<Complex> v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) v[i] = f(xs[i]);
    return v;
}

SignedSpectrum gaussian_spectrum() {
    auto xs = xgrid();
    return fse::forward_transform(xs, sample(xs, [](double x) {
                                      return Complex(std::exp(-x * x), 0.0);
                                  }),
                                  kgrid());
}

double amp_diff(const SignedSpectrum& a, const SignedSpectrum& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.upper.size(); ++i) {
        m = std::max(m, std::abs(a.upper[i] - b.upper[i]));
        m = std::max(m, std::abs(a.lower[i] - b.lower[i]));
    }
    return m;
}

} // namespace

TEST_CASE("forward transform: Gaussian pair, zero input, odd parity") {
    SignedSpectrum g = gaussian_spectrum();
    for (std::size_t i = 0; i < g.k_values.size(); ++i) {
        double k = g.k_values[i];
        Complex expect(std::sqrt(kPi) * std::exp(-k * k / 4.0), 0.0);
        CHECK(std::abs(g.upper[i] - g.lower[i] - expect) < 1e-8);
    }

    auto xs = xgrid();
    SignedSpectrum z =
        fse::forward_transform(xs, std::vector<Complex>(xs.size(), Complex{0.0, 0.0}), kgrid());
    for (std::size_t i = 0; i < z.upper.size(); ++i) {
        CHECK(z.upper[i] == Complex(0.0, 0.0));
        CHECK(z.lower[i] == Complex(0.0, 0.0));
    }

    SignedSpectrum odd = fse::forward_transform(
        xs, sample(xs, [](double x) { return Complex(x * std::exp(-x * x), 0.0); }), kgrid());
    const std::size_t n = odd.k_values.size();
    for (std::size_t i = 0; i < n; ++i) {
        Complex fwd = odd.upper[i] - odd.lower[i];
        Complex mirrored = odd.upper[n - 1 - i] - odd.lower[n - 1 - i];
        CHECK(std::abs(mirrored + fwd) < 1e-9);              // odd in k
        CHECK(std::abs(mirrored - std::conj(fwd)) < 1e-9);   // conjugation symmetry
    }
}

TEST_CASE("forward transform preconditions") {
    auto xs = fse::linspace(-8.0, 8.0, 321);
    CHECK_THROWS_AS(fse::forward_transform(
                        xs, std::vector<Complex>(xs.size(), Complex{1.0, 0.0}), kgrid()),
                    fse::Error); // no edge decay
    auto bad_x = fse::linspace(0.5, 8.0, 64); // grid without 0
    CHECK_THROWS_AS(
        fse::forward_transform(bad_x,
                               sample(bad_x, [](double x) {
                                   return Complex(std::exp(-20.0 * (x - 4) * (x - 4)), 0.0);
                               }),
                               kgrid()),
        fse::Error);
}

TEST_CASE("frac_deriv: lambda = 0 is the exact identity") {
    SignedSpectrum g = gaussian_spectrum();
    SignedSpectrum same = fse::frac_deriv(g, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < g.upper.size(); ++i) {
        CHECK(same.upper[i] == g.upper[i]);
        CHECK(same.lower[i] == g.lower[i]);
    }
}

TEST_CASE("frac_deriv: lambda = 1 matches the analytic Gaussian derivative") {
    SignedSpectrum g = gaussian_spectrum();
    SignedSpectrum d = fse::frac_deriv(g, Complex(1.0, 0.0));
    auto xs = xgrid();
    std::vector<Complex> back = fse::inverse_transform(d, xs);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Complex expect(-2.0 * xs[i] * std::exp(-xs[i] * xs[i]), 0.0);
        num += std::norm(back[i] - expect);
        den += std::norm(expect);
    }
    CHECK(std::sqrt(num / den) < 1e-6);
}

TEST_CASE("frac_deriv: half derivative applied twice equals the first derivative") {
    SignedSpectrum g = gaussian_spectrum();
    SignedSpectrum half = fse::frac_deriv(g, Complex(0.5, 0.0));
    SignedSpectrum twice = fse::frac_deriv(half, Complex(0.5, 0.0));
    SignedSpectrum once = fse::frac_deriv(g, Complex(1.0, 0.0));
    CHECK(amp_diff(twice, once) < 1e-8);
}

TEST_CASE("inverse transform: round trip and shift theorem") {
    auto xs = xgrid();
    SignedSpectrum g = gaussian_spectrum();
    std::vector<Complex> back = fse::inverse_transform(g, xs);
    for (std::size_t i = 0; i < xs.size(); ++i)
        CHECK(std::abs(back[i] - Complex(std::exp(-xs[i] * xs[i]), 0.0)) < 1e-8);

    std::vector<Complex> zero = fse::inverse_transform(
        SignedSpectrum{kgrid(), std::vector<Complex>(201, Complex{0.0, 0.0}),
                       std::vector<Complex>(201, Complex{0.0, 0.0})},
        xs);
    for (const Complex& v : zero) CHECK(v == Complex(0.0, 0.0));

    const double x0 = 1.25;
    SignedSpectrum shifted = g;
    for (std::size_t i = 0; i < shifted.k_values.size(); ++i) {
        Complex phase = std::exp(Complex(0.0, shifted.k_values[i] * x0));
        shifted.upper[i] *= phase;
        shifted.lower[i] *= phase;
    }
    std::vector<Complex> moved = fse::inverse_transform(shifted, xs);
    for (std::size_t i = 0; i < xs.size(); ++i)
        CHECK(std::abs(moved[i] - Complex(std::exp(-(xs[i] - x0) * (xs[i] - x0)), 0.0)) < 1e-8);
}

TEST_CASE("semigroup property on the Gaussian spectrum") {
    SignedSpectrum g = gaussian_spectrum();
    for (double l1 : {0.25, 0.5, 1.0, 1.5}) {
        for (double l2 : {0.25, 0.5, 1.0, 1.5}) {
            SignedSpectrum a = fse::frac_deriv(fse::frac_deriv(g, Complex(l1, 0.0)),
                                               Complex(l2, 0.0));
            SignedSpectrum b = fse::frac_deriv(g, Complex(l1 + l2, 0.0));
            INFO("l1=" << l1 << " l2=" << l2);
            CHECK(amp_diff(a, b) < 1e-10);
        }
    }
}

TEST_CASE("integer orders match finite differences at O(dx^2)") {
    auto fd_error = [](std::size_t n) {
        std::vector<double> xs = fse::linspace(-8.0, 8.0, n);
        double dx = xs[1] - xs[0];
        auto f = sample(xs, [](double x) { return Complex(std::exp(-x * x), 0.0); });
        SignedSpectrum s = fse::forward_transform(xs, f, fse::linspace(-12.0, 12.0, 385));
        std::vector<Complex> d1 = fse::inverse_transform(fse::frac_deriv(s, {1.0, 0.0}), xs);
        std::vector<Complex> d2 = fse::inverse_transform(fse::frac_deriv(s, {2.0, 0.0}), xs);
        double worst = 0.0;
        for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
            Complex fd1 = (f[i + 1] - f[i - 1]) / (2.0 * dx);
            Complex fd2 = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (dx * dx);
            worst = std::max(worst, std::abs(fd1 - d1[i]));
            worst = std::max(worst, std::abs(fd2 - d2[i]));
        }
        return worst;
    };
    double e1 = fd_error(161);
    double e2 = fd_error(321);
    double slope = std::log2(e1 / e2);
    INFO("e1=" << e1 << " e2=" << e2 << " slope=" << slope);
    CHECK(slope > 1.7);
    CHECK(slope < 2.3);
}

TEST_CASE("canonical primitive: integration is a right inverse of differentiation") {
    auto xs = xgrid();
    // odd samples: the transform vanishes at k = 0 as Re(lambda) < 0 requires
    SignedSpectrum s = fse::forward_transform(
        xs, sample(xs, [](double x) { return Complex(-2.0 * x * std::exp(-x * x), 0.0); }),
        kgrid());
    SignedSpectrum prim = fse::frac_deriv(s, Complex(-1.0, 0.0));
    SignedSpectrum back = fse::frac_deriv(prim, Complex(1.0, 0.0));
    for (std::size_t i = 0; i < s.k_values.size(); ++i) {
        // branch values agree off the pinch; the collapsed-contour density
        // (upper - lower) agrees everywhere, including k = 0
        if (s.k_values[i] != 0.0) {
            CHECK(std::abs(back.upper[i] - s.upper[i]) < 1e-8);
            CHECK(std::abs(back.lower[i] - s.lower[i]) < 1e-8);
        }
        CHECK(std::abs((back.upper[i] - back.lower[i]) - (s.upper[i] - s.lower[i])) < 1e-8);
    }

    SignedSpectrum g = gaussian_spectrum(); // nonzero at k = 0
    CHECK_THROWS_AS(fse::frac_deriv(g, Complex(-1.0, 0.0)), fse::Error);
}

TEST_CASE("real-order derivative of an even real function: cos/sin parity structure") {
    // (-ik)^lambda = |k|^lambda [cos(pi lambda/2) - i sin(pi lambda/2) sgn k]:
    // the even part of the derivative carries the cos weight, the odd part the
    // sin weight, and the result is real for real even input.
    auto xs = xgrid();
    const double lambda = 0.5;
    SignedSpectrum g = gaussian_spectrum();
    std::vector<Complex> d = fse::inverse_transform(fse::frac_deriv(g, {lambda, 0.0}), xs);
    const std::size_t n = xs.size();
    const double dk = g.k_values[1] - g.k_values[0];
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(d[i].imag()) < 1e-9); // real output
        double even = 0.5 * (d[i].real() + d[n - 1 - i].real());
        double odd = 0.5 * (d[i].real() - d[n - 1 - i].real());
        double he = 0.0, ho = 0.0;
        for (std::size_t j = 0; j < g.k_values.size(); ++j) {
            double k = g.k_values[j];
            double w = (j == 0 || j + 1 == g.k_values.size()) ? 0.5 : 1.0;
            double mag = std::pow(std::abs(k), lambda);
            double f = (g.upper[j] - g.lower[j]).real();
            he += w * mag * f * std::cos(k * xs[i]);
            ho += w * (k >= 0 ? 1.0 : -1.0) * mag * f * std::sin(k * xs[i]);
        }
        he *= dk / (2.0 * testsupport::kPi);
        ho *= dk / (2.0 * testsupport::kPi);
        CHECK(std::abs(even - std::cos(0.5 * testsupport::kPi * lambda) * he) < 1e-9);
        CHECK(std::abs(odd + std::sin(0.5 * testsupport::kPi * lambda) * ho) < 1e-9);
    }
}

TEST_CASE("primitive ambiguity terms") {
    std::vector<Complex> one{Complex{1.0, 0.0}};
    fse::PrimitiveAmbiguity a = fse::primitive_ambiguity(-1, one);
    CHECK(a.constant == Complex(2.0 * kPi, 0.0));
    CHECK(a.linear == Complex(0.0, 0.0));

    std::vector<Complex> zero{Complex{0.0, 0.0}};
    fse::PrimitiveAmbiguity b = fse::primitive_ambiguity(-1, zero);
    CHECK(b.constant == Complex(0.0, 0.0));

    // a(k) = 1 + k: residue arithmetic gives 2 pi a'(0) - 2 pi i a(0) x
    std::vector<Complex> affine{Complex{1.0, 0.0}, Complex{1.0, 0.0}};
    fse::PrimitiveAmbiguity c = fse::primitive_ambiguity(-2, affine);
    CHECK(c.constant == Complex(2.0 * kPi, 0.0));
    CHECK(c.linear == Complex(0.0, -2.0 * kPi));

    CHECK_THROWS_AS(fse::primitive_ambiguity(-3, one), fse::Error);
    CHECK_THROWS_AS(fse::primitive_ambiguity(1, one), fse::Error);
}
