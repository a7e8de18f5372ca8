// SPDX-License-Identifier: Apache-2.0
//
// mmid - millimeter-wave radar imaging toolkit
// Copyright (C) 2026 The mmid authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "mmid/scene.hpp"
#include "oracles.hpp"

using namespace mmid;

namespace {

int dominant_tap(const CirFrame &f, int m, int n)
{
    int best = 0;
    for (int k = 1; k < f.taps; ++k)
        if (std::abs(f.at(m, n, k)) > std::abs(f.at(m, n, best)))
            best = k;
    return best;
}

double max_abs_diff(const CirFrame &a, const CirFrame &b)
{
    double d = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        d = std::max(d, std::abs(a.data[i] - b.data[i]));
    return d;
}

const ArrayGeometry kGeom = ArrayGeometry::device_default();

} // namespace

TEST_CASE("empty scene without noise or leakage is all zeros")
{
    const auto f = synthesize_cir(Scene{}, kGeom, 96, 1);
    CHECK(f.tx == 32);
    CHECK(f.rx == 32);
    CHECK(f.taps == 96);
    for (const auto &v : f.data)
        CHECK(v == cplx(0.0, 0.0));
}

TEST_CASE("broadside scatterer at 1.5 m lands in tap 36")
{
    const double expected = 2.0 * 1.5 / (2.998e8 * 0.28e-9);
    CHECK(std::lround(expected) == 36);
    const auto f = synthesize_cir(oracle::point_scene(0, 0, 1.5), kGeom, 96, 0);
    for (int m = 0; m < 32; ++m)
        for (int n = 0; n < 32; ++n)
            CHECK(dominant_tap(f, m, n) == 36);
}

TEST_CASE("scatterers 10 cm apart in range occupy distinct taps")
{
    Scene s;
    s.targets.push_back({{1.5, 0.0, 0.0}, {1.0, 0.0}});
    s.targets.push_back({{1.6, 0.0, 0.0}, {1.0, 0.0}});
    const auto f = synthesize_cir(s, kGeom, 96, 0);
    for (int m = 0; m < 32; m += 5)
        for (int n = 0; n < 32; n += 3)
        {
            int nonzero = 0;
            for (int k = 0; k < 96; ++k)
                nonzero += std::abs(f.at(m, n, k)) > 0.5;
            CHECK(nonzero == 2);
        }
}

TEST_CASE("deposited phase follows the round-trip delay")
{
    const Eigen::Vector3d p(1.3, 0.2, -0.1);
    Scene s;
    s.targets.push_back({p, std::polar(0.7, 0.3)});
    const auto f = synthesize_cir(s, kGeom, 96, 0);
    for (int m : {0, 7, 31})
        for (int n : {0, 12, 30})
        {
            const auto pt = kGeom.element_position(m), pr = kGeom.element_position(n);
            const double tau = ((p - pt).norm() + (p - pr).norm()) / 299792458.0;
            const int tap = oracle::delay_tap(p, pt, pr, 0.28e-9);
            const cplx want = std::polar(0.7, 0.3) * std::exp(cplx(0.0, -2.0 * kPi * 60e9 * tau));
            CHECK(std::abs(f.at(m, n, tap) - want) < 1e-9);
        }
}

TEST_CASE("dominant tap equals the delay oracle for 1000 random positions")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> x(0.3, 3.5), yz(-1.0, 1.0);
    std::uniform_int_distribution<int> el(0, 31);
    for (int i = 0; i < 1000; ++i)
    {
        const Eigen::Vector3d p(x(rng), yz(rng), yz(rng));
        Scene s;
        s.targets.push_back({p, {1.0, 0.0}});
        const auto f = synthesize_cir(s, kGeom, 128, 0);
        const int m = el(rng), n = el(rng);
        const int want = oracle::delay_tap(p, kGeom.element_position(m), kGeom.element_position(n), 0.28e-9);
        REQUIRE(dominant_tap(f, m, n) == want);
        CHECK(nearest_tap(p, kGeom.element_position(m), kGeom.element_position(n), 0.28e-9) == want);
    }
}

TEST_CASE("synthesis is linear and superposes at zero noise")
{
    Scene a, b;
    a.targets.push_back({{1.4, 0.1, 0.0}, {0.5, -0.2}});
    b.targets.push_back({{1.9, -0.3, 0.2}, {-0.1, 0.9}});
    b.clutter.push_back({{3.0, 0.0, 0.5}, {0.4, 0.0}});
    Scene a2 = a;
    a2.targets[0].reflectivity *= 2.0;
    Scene ab = a;
    ab.targets.insert(ab.targets.end(), b.targets.begin(), b.targets.end());
    ab.clutter = b.clutter;

    for (auto kernel : {TapKernel::nearest, TapKernel::sinc})
    {
        SynthesisOptions opt;
        opt.kernel = kernel;
        const auto fa = synthesize_cir(a, kGeom, 96, 0, opt);
        const auto fa2 = synthesize_cir(a2, kGeom, 96, 0, opt);
        const auto fb = synthesize_cir(b, kGeom, 96, 0, opt);
        const auto fab = synthesize_cir(ab, kGeom, 96, 0, opt);
        for (std::size_t i = 0; i < fa.data.size(); ++i)
        {
            REQUIRE(fa2.data[i] == 2.0 * fa.data[i]);
            REQUIRE(std::abs(fab.data[i] - (fa.data[i] + fb.data[i])) < 1e-12);
        }
    }
}

TEST_CASE("fixed seed gives bit-identical noisy frames")
{
    Scene s = oracle::point_scene(0.1, -0.2, 1.7);
    s.noise_power = 0.3;
    s.leakage_profile = {{1.0, 0.5}, {0.2, 0.0}};
    const auto a = synthesize_cir(s, kGeom, 96, 77);
    const auto b = synthesize_cir(s, kGeom, 96, 77);
    const auto c = synthesize_cir(s, kGeom, 96, 78);
    CHECK(a.data == b.data);
    CHECK(a.data != c.data);
}

TEST_CASE("noise has the requested power and leakage sits on the first taps")
{
    Scene s;
    s.noise_power = 0.25;
    const auto f = synthesize_cir(s, kGeom, 96, 3);
    double p = 0.0;
    for (const auto &v : f.data)
        p += std::norm(v);
    CHECK(p / static_cast<double>(f.data.size()) == Catch::Approx(0.25).epsilon(0.03));

    Scene l;
    l.leakage_profile = {{2.0, 0.0}, {0.0, -1.0}, {0.5, 0.5}};
    SynthesisOptions opt;
    opt.chain_gain = std::polar(1.2, 0.4);
    const auto g = synthesize_cir(l, kGeom, 96, 0, opt);
    for (int m = 0; m < 32; m += 7)
        for (int n = 0; n < 32; n += 5)
        {
            for (int k = 0; k < 3; ++k)
                CHECK(std::abs(g.at(m, n, k) - opt.chain_gain * l.leakage_profile[static_cast<std::size_t>(k)]) <
                      1e-12);
            for (int k = 3; k < 96; ++k)
                CHECK(g.at(m, n, k) == cplx(0.0, 0.0));
        }
}

TEST_CASE("parallel synthesis matches the serial reference")
{
    Scene s;
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> x(0.8, 3.0), yz(-0.8, 0.8), ph(0, 2 * kPi);
    for (int i = 0; i < 60; ++i)
        s.targets.push_back({{x(rng), yz(rng), yz(rng)}, std::polar(1.0, ph(rng))});
    s.leakage_profile = {{0.3, 0.1}, {0.1, 0.0}};
    s.noise_power = 0.01;
    for (auto kernel : {TapKernel::nearest, TapKernel::sinc})
    {
        SynthesisOptions opt;
        opt.kernel = kernel;
        opt.chain_gain = {0.9, 0.2};
        const auto fast = synthesize_cir(s, kGeom, 96, 5, opt);
        const auto ref = synthesize_cir_reference(s, kGeom, 96, 5, opt);
        CHECK(max_abs_diff(fast, ref) < 1e-10);
    }
}

TEST_CASE("sinc kernel keeps the peak on the nearest tap")
{
    SynthesisOptions opt;
    opt.kernel = TapKernel::sinc;
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> x(0.5, 3.0);
    for (int i = 0; i < 100; ++i)
    {
        const Eigen::Vector3d p(x(rng), 0.0, 0.0);
        Scene s;
        s.targets.push_back({p, {1.0, 0.0}});
        const auto f = synthesize_cir(s, kGeom, 96, 0, opt);
        CHECK(dominant_tap(f, 3, 9) ==
              oracle::delay_tap(p, kGeom.element_position(3), kGeom.element_position(9), 0.28e-9));
    }
}

TEST_CASE("synthesis rejects invalid scenes")
{
    CHECK_THROWS_WITH(synthesize_cir(oracle::point_scene(0, 0, 5.0), kGeom, 96, 0), "scene exceeds tap window");
    Scene behind;
    behind.targets.push_back({{-1.0, 0.0, 0.0}, {1.0, 0.0}});
    CHECK_THROWS_AS(synthesize_cir(behind, kGeom, 96, 0), DataError);
    Scene leak;
    leak.leakage_profile.assign(5, {1.0, 0.0});
    CHECK_THROWS_AS(synthesize_cir(leak, kGeom, 96, 0), DataError);
    Scene noisy;
    noisy.noise_power = -1.0;
    CHECK_THROWS_AS(synthesize_cir(noisy, kGeom, 96, 0), DataError);
}

TEST_CASE("phantom samples of a sphere lie on the sphere and face the array")
{
    HumanPhantom ph;
    ph.distance = 1.5;
    ph.ellipsoids.push_back({Eigen::Vector3d::Zero(), Eigen::Vector3d::Constant(0.2)});
    const auto pts = sample_phantom(ph, 1);
    REQUIRE_FALSE(pts.empty());
    const Eigen::Vector3d c(1.5, 0.0, 0.0);
    for (const auto &p : pts)
    {
        CHECK(std::abs((p.position - c).norm() - 0.2) < 1e-9);
        CHECK(p.position.x() <= 1.5);
        CHECK(std::abs(p.reflectivity) <= 1.0);
    }
}

TEST_CASE("doubling density doubles the sample count within one")
{
    HumanPhantom ph;
    ph.ellipsoids.push_back({Eigen::Vector3d::Zero(), Eigen::Vector3d(0.1, 0.2, 0.3)});
    for (double d : {50.0, 123.0, 400.0, 777.0})
    {
        ph.sample_density = d;
        const auto n1 = static_cast<long>(sample_phantom(ph, 0).size());
        ph.sample_density = 2 * d;
        const auto n2 = static_cast<long>(sample_phantom(ph, 0).size());
        CHECK(std::abs(n2 - 2 * n1) <= 1);
    }
    ph.sample_density = 0.0;
    CHECK_THROWS_AS(sample_phantom(ph, 0), std::invalid_argument);
}

TEST_CASE("ellipsoid area formula matches the sphere exactly and sampling is seeded")
{
    CHECK(ellipsoid_area(Eigen::Vector3d::Constant(0.5)) == Catch::Approx(kPi).epsilon(1e-12));
    const auto ph = HumanPhantom::standard();
    const auto a = sample_phantom(ph, 5), b = sample_phantom(ph, 5), c = sample_phantom(ph, 6);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i].reflectivity == b[i].reflectivity);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        differs = differs || a[i].reflectivity != c[i].reflectivity;
    CHECK(differs);
}

namespace {

std::size_t support(const DepthImage &img)
{
    std::size_t n = 0;
    for (double v : img.values)
        n += v > 0.0;
    return n;
}

} // namespace

TEST_CASE("empty phantom renders an all-zero image")
{
    HumanPhantom ph;
    const auto img = render_ground_truth(ph, kGeom);
    CHECK(img.rows == 256);
    CHECK(img.cols == 256);
    CHECK(support(img) == 0);
}

TEST_CASE("centred sphere renders a disc of the analytic area")
{
    HumanPhantom ph;
    ph.distance = 1.5;
    const double r = 0.5;
    ph.ellipsoids.push_back({Eigen::Vector3d::Zero(), Eigen::Vector3d::Constant(r)});
    const PinholeCamera cam;
    const auto img = render_ground_truth(ph, kGeom, cam);
    // Tangent cone: silhouette radius on the unit-depth plane is r / sqrt(D^2 - r^2).
    const double rho = r / std::sqrt(1.5 * 1.5 - r * r);
    const double pixel = 2.0 * std::tan(kPi / 3.0) / 256.0;
    const double expected = kPi * rho * rho / (pixel * pixel);
    CHECK(std::abs(static_cast<double>(support(img)) - expected) / expected < 0.02);
    // nearest depth is the front pole
    CHECK(img(128, 128) == Catch::Approx(1.0).margin(2e-3));
}

TEST_CASE("moving the phantom from 1.5 m to 2.0 m shrinks its silhouette by (1.5/2)^2")
{
    const auto near = render_ground_truth(HumanPhantom::standard(1.5), kGeom);
    const auto far = render_ground_truth(HumanPhantom::standard(2.0), kGeom);
    const double ratio = static_cast<double>(support(far)) / static_cast<double>(support(near));
    CHECK(std::abs(ratio / (0.75 * 0.75) - 1.0) < 0.05);
}

TEST_CASE("phantom outside the field of view is an error")
{
    HumanPhantom ph;
    ph.distance = 1.0;
    ph.lateral_offset = Eigen::Vector3d(0.0, 5.0, 0.0);
    ph.ellipsoids.push_back({Eigen::Vector3d::Zero(), Eigen::Vector3d::Constant(0.1)});
    CHECK_THROWS_AS(render_ground_truth(ph, kGeom), DataError);
}
