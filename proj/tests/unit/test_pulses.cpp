#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cavgrover/errors.hpp"
#include "cavgrover/pulses.hpp"

using namespace cavgrover;
using std::numbers::pi;

namespace {

// Trapezoid quadrature of the envelope, the independent check on the
// closed-form areas.
double numeric_area(const Pulse& p, double t0, double t1, int steps) {
    const double dt = (t1 - t0) / steps;
    double acc = 0.5 * (envelope(p, t0) + envelope(p, t1));
    for (int i = 1; i < steps; ++i) acc += envelope(p, t0 + i * dt);
    return acc * dt;
}

} // namespace

TEST_CASE("sech envelope values") {
    Pulse p;
    p.shape = PulseShape::Sech;
    p.peak = 2.0;
    p.width = 1.5;
    p.center = 10.0;

    CHECK(envelope(p, 10.0) == doctest::Approx(2.0));
    // sech(1) = 0.6480542736638853
    CHECK(envelope(p, 10.0 + 1.5) == doctest::Approx(2.0 * 0.6480542736638853).epsilon(1e-12));
    CHECK(envelope(p, 10.0 + 1.5) == doctest::Approx(0.6481 * 2.0).epsilon(1e-4));

    // exactly zero outside the truncation window
    CHECK(envelope(p, 10.0 + 10.001 * 1.5) == 0.0);
    CHECK(envelope(p, 10.0 - 11.0 * 1.5) == 0.0);
}

TEST_CASE("square and off envelopes") {
    Pulse sq;
    sq.shape = PulseShape::Square;
    sq.peak = 3.0;
    sq.width = 2.0;
    sq.center = 0.0;
    CHECK(envelope(sq, 0.0) == 3.0);
    CHECK(envelope(sq, 0.99) == 3.0);
    CHECK(envelope(sq, 1.01) == 0.0);

    Pulse off;
    off.shape = PulseShape::Off;
    off.peak = 7.0;
    CHECK(envelope(off, 0.0) == 0.0);
    CHECK(pulse_area(off) == 0.0);
}

TEST_CASE("closed-form areas") {
    Pulse sech;
    sech.shape = PulseShape::Sech;
    sech.peak = 0.5;
    sech.width = 2.0; // peak * T = 1
    CHECK(pulse_area(sech) == doctest::Approx(pi).epsilon(1e-14));

    Pulse sq;
    sq.shape = PulseShape::Square;
    sq.peak = 2.0;
    sq.width = pi;
    CHECK(pulse_area(sq) == doctest::Approx(2.0 * pi).epsilon(1e-14));
}

TEST_CASE("pulse_for_area inverts the closed form") {
    const Pulse p1 = pulse_for_area(PulseShape::Sech, pi, 1.0, 0.0);
    CHECK(p1.peak == doctest::Approx(1.0).epsilon(1e-14));
    const Pulse p2 = pulse_for_area(PulseShape::Sech, 2.0 * pi, 1.0, 0.0);
    CHECK(p2.peak == doctest::Approx(2.0).epsilon(1e-14));

    const Pulse off = pulse_for_area(PulseShape::Sech, 0.0, 1.0, 0.0);
    CHECK(off.shape == PulseShape::Off);

    CHECK_THROWS_AS(pulse_for_area(PulseShape::Sech, pi, 0.0, 0.0), SingularParameterError);
    CHECK_THROWS_AS(pulse_for_area(PulseShape::Sech, -1.0, 1.0, 0.0), SingularParameterError);

    // round trip over shapes and areas in [0, 10 pi]
    for (PulseShape shape : {PulseShape::Sech, PulseShape::Square}) {
        for (int i = 0; i <= 20; ++i) {
            const double area = 10.0 * pi * i / 20.0;
            const Pulse p = pulse_for_area(shape, area, 0.7, 3.0);
            CHECK(pulse_area(p) == doctest::Approx(area).epsilon(1e-12));
        }
    }
}

TEST_CASE("truncated sech area deficit below 1e-4 relative") {
    const Pulse p = pulse_for_area(PulseShape::Sech, 2.0 * pi, 1.3, 0.0);
    const double numeric =
        numeric_area(p, p.support_begin(), p.support_end(), 400000);
    const double relative_deficit = std::abs(numeric - pulse_area(p)) / pulse_area(p);
    CHECK(relative_deficit < 1e-4);
}

TEST_CASE("square area agrees with quadrature") {
    Pulse sq;
    sq.shape = PulseShape::Square;
    sq.peak = 1.7;
    sq.width = 2.4;
    sq.center = 5.0;
    const double numeric = numeric_area(sq, 3.0, 7.0, 800000);
    CHECK(numeric == doctest::Approx(pulse_area(sq)).epsilon(1e-5));
}

TEST_CASE("support bounds") {
    Pulse p = pulse_for_area(PulseShape::Sech, pi, 2.0, 30.0);
    CHECK(p.support_begin() == doctest::Approx(10.0));
    CHECK(p.support_end() == doctest::Approx(50.0));
    CHECK(p.active_at(30.0));
    CHECK(!p.active_at(51.0));
}
