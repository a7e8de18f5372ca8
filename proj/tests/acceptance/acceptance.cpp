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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mmid/commands.hpp"
#include "mmid/image_ops.hpp"
#include "mmid/linalg.hpp"
#include "mmid/metrics.hpp"
#include "mmid/preprocess.hpp"
#include "mmid/spectrum.hpp"
#include "oracles.hpp"

using namespace mmid;
namespace fs = std::filesystem;

namespace {

constexpr double kDeg = kPi / 180.0;
constexpr double kDtau = 0.28e-9;

struct Outcome
{
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof(buf), f, args...);
    return buf;
}

bool two_peaks_match(const Image &img, std::pair<int, int> t1, std::pair<int, int> t2)
{
    const auto peaks = local_maxima(img, 2);
    if (peaks.size() < 2)
        return false;
    using oracle::cell_distance;
    return (cell_distance(peaks[0], t1) <= 1 && cell_distance(peaks[1], t2) <= 1) ||
           (cell_distance(peaks[0], t2) <= 1 && cell_distance(peaks[1], t1) <= 1);
}

// Pseudospectrum of Tx 0 at one tap, pooling the given windows.
Image tap_spectrum(const CirFrame &f, const ArrayGeometry &g, int tap, std::vector<SubarraySpec> subs,
                   const MusicConfig &cfg)
{
    const auto snaps = subarray_snapshots(f, 0, tap, subs);
    const auto ns = noise_subspace(covariance(snaps), cfg);
    return music_spectrum(ns.basis, g, subs.front(), cfg.grid()).values;
}

Outcome single_source()
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto g = ArrayGeometry::full_grid();  // 9 complete windows
    const auto subs = enumerate_subarrays(g);
    const MusicConfig cfg;
    const auto grid = cfg.grid();
    const double range = oracle::tap_center_range(36, kDtau);
    const double noise = 0.01;  // unit-amplitude source, 20 dB per entry
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> ang(-40 * kDeg, 40 * kDeg);
    int hits = 0;
    for (int trial = 0; trial < 100; ++trial)
    {
        const double th = ang(rng), ph = ang(rng);
        const auto f = synthesize_cir(oracle::point_scene(th, ph, range, {1.0, 0.0}, noise), g, 64,
                                      mix_seed(1, static_cast<std::uint64_t>(trial)));
        const auto img = tap_spectrum(f, g, 36, subs, cfg);
        hits += oracle::cell_distance(oracle::argmax(img), {grid.nearest_row(th), grid.nearest_col(ph)}) <= 1;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {hits >= 95 && secs < 60.0,
            fmt("%d/100 within 1 cell (need >= 95), %zu snapshots, %.2f s (limit 60 s)", hits, subs.size(), secs)};
}

Outcome coherent_sources()
{
    const auto g = ArrayGeometry::full_grid();
    const auto subs = enumerate_subarrays(g);
    MusicConfig cfg;
    cfg.order_mode = OrderMode::fixed;
    cfg.fixed_order = 2;
    const auto grid = cfg.grid();
    const double range = oracle::tap_center_range(36, kDtau);
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> ph0(-35 * kDeg, 20 * kDeg), th0(-30 * kDeg, 30 * kDeg);
    int on = 0, off = 0;
    for (int trial = 0; trial < 100; ++trial)
    {
        const double th = th0(rng), p1 = ph0(rng), p2 = p1 + 15 * kDeg;
        auto s = oracle::point_scene(th, p1, range, {1.0, 0.0}, 0.01);
        s.targets.push_back(oracle::point_scene(th, p2, range).targets[0]);  // same amplitude and phase
        const auto f = synthesize_cir(s, g, 64, mix_seed(2, static_cast<std::uint64_t>(trial)));
        const std::pair t1{grid.nearest_row(th), grid.nearest_col(p1)};
        const std::pair t2{grid.nearest_row(th), grid.nearest_col(p2)};
        on += two_peaks_match(tap_spectrum(f, g, 36, subs, cfg), t1, t2);
        off += two_peaks_match(tap_spectrum(f, g, 36, {subs.front()}, cfg), t1, t2);
    }
    return {on >= 90 && off <= 10,
            fmt("smoothing on %d/100 (need >= 90), single window %d/100 (must fail: <= 10)", on, off)};
}

Outcome background_removal()
{
    const auto g = ArrayGeometry::device_default();
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto phase = [&] { return std::polar(1.0, 2.0 * kPi * u(rng)); };
    int passed = 0;
    double worst_db = 1e300, worst_amp = 0.0;
    for (int trial = 0; trial < 50; ++trial)
    {
        Scene room;
        room.noise_power = 1e-6;
        for (int k = 0; k < 4; ++k)
            room.leakage_profile.push_back((0.3 + u(rng)) * phase() / (1.0 + k));
        const int n_clutter = 1 + static_cast<int>(u(rng) * 3);
        for (int c = 0; c < n_clutter; ++c)
            room.clutter.push_back({{2.7 + 0.8 * u(rng), -0.8 + 1.6 * u(rng), -0.5 + u(rng)}, (0.2 + u(rng)) * phase()});
        Scene scene = room;
        scene.targets.push_back({{1.1 + 1.1 * u(rng), -0.4 + 0.8 * u(rng), -0.3 + 0.6 * u(rng)}, phase()});

        auto drift = [&] {
            SynthesisOptions o;
            o.chain_gain = std::polar(0.9 + 0.2 * u(rng), 0.4 * (u(rng) - 0.5));
            return o;
        };
        std::vector<CirFrame> empties;
        for (int s = 0; s < 5; ++s)
            empties.push_back(synthesize_cir(room, g, 96, mix_seed(trial, 100 + s), drift()));
        const auto frame = synthesize_cir(scene, g, 96, mix_seed(trial, 1), drift());
        const auto clean = remove_background(frame, EmptyCirSet(empties));

        const double db = 10.0 * std::log10(window_energy(frame, 4) / window_energy(clean, 4));
        double amp_dev = 0.0;
        const auto &p = scene.targets.front().position;
        for (int m = 0; m < 32; ++m)
            for (int n = 0; n < 32; ++n)
            {
                const int tap = oracle::delay_tap(p, g.element_position(m), g.element_position(n), kDtau);
                const double a0 = std::abs(frame.at(m, n, tap)), a1 = std::abs(clean.at(m, n, tap));
                amp_dev = std::max(amp_dev, std::abs(20.0 * std::log10(a1 / a0)));
            }
        worst_db = std::min(worst_db, db);
        worst_amp = std::max(worst_amp, amp_dev);
        passed += db >= 20.0 && amp_dev <= 1.0;
    }
    return {passed == 50, fmt("%d/50 trials; worst window reduction %.1f dB (need >= 20), worst target-tap change "
                              "%.3f dB (need <= 1)",
                              passed, worst_db, worst_amp)};
}

Outcome range_resolution()
{
    const auto g = ArrayGeometry::device_default();
    std::mt19937_64 rng(4260);
    std::uniform_real_distribution<double> r0(0.5, 2.8), sep(0.10, 0.6), ang(-50 * kDeg, 50 * kDeg);
    int distinct = 0;
    for (int trial = 0; trial < 1000; ++trial)
    {
        const double th = ang(rng), ph = ang(rng), r = r0(rng), d = sep(rng);
        auto s = oracle::point_scene(th, ph, r);
        s.targets.push_back(oracle::point_scene(th, ph, r + d).targets[0]);
        const auto f = synthesize_cir(s, g, 96, 0);
        bool ok = true;
        for (int m = 0; m < 32 && ok; ++m)
            for (int n = 0; n < 32 && ok; ++n)
            {
                int occupied = 0;
                for (int k = 0; k < 96; ++k)
                    occupied += std::abs(f.at(m, n, k)) > 0.5;
                ok = occupied == 2;
            }
        distinct += ok;
    }
    const double dr = tap_to_range(1.0, kDtau);
    return {distinct == 1000,
            fmt("%d/1000 pairs in distinct taps at every Tx/Rx pair (tap = %.2f cm of range)", distinct, 100 * dr)};
}

Outcome eigen_roundtrip()
{
    std::mt19937_64 rng(16);
    std::uniform_int_distribution<int> rank(1, 16);
    std::uniform_real_distribution<double> lg(-6.0, 6.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i)
    {
        const Eigen::MatrixXcd R = oracle::random_psd(rng, 16, rank(rng)) * std::pow(10.0, lg(rng));
        const double err = (reconstruct(hermitian_eigen(R)) - R).norm() / R.norm();
        worst = std::max(worst, err);
    }
    return {worst <= 1e-10, fmt("max relative Frobenius error %.2e over 1000 matrices (limit 1e-10)", worst)};
}

Outcome metrics_suite()
{
    std::mt19937_64 rng(6);
    std::bernoulli_distribution bit(0.35);
    auto mask = [&] {
        Mask m(256, 256);
        for (auto &b : m.bits)
            b = bit(rng);
        return m;
    };
    bool ok = true;
    std::string why;
    const auto a = mask();
    Mask na = a;
    for (auto &b : na.bits)
        b = !b;
    const double self = silhouette_difference(a, a), inv = silhouette_difference(a, na);
    if (self != 0.0 || inv != 100.0)
        ok = false, why += fmt(" SD(a,a)=%g SD(a,~a)=%g;", self, inv);

    int tri_fail = 0;
    std::bernoulli_distribution sparse(0.05);
    for (int i = 0; i < 1000; ++i)
    {
        Mask x = mask(), y = x, z = x;
        for (std::size_t k = 0; k < x.size(); ++k)
        {
            y.bits[k] ^= sparse(rng);
            z.bits[k] ^= sparse(rng);
        }
        tri_fail += silhouette_difference(x, z) > silhouette_difference(x, y) + silhouette_difference(y, z) + 1e-12;
    }
    if (tri_fail)
        ok = false, why += fmt(" %d triangle violations;", tri_fail);

    std::uniform_real_distribution<double> val(0.0, 3.0);
    double self_err = 0.0, sym_err = 0.0;
    for (int i = 0; i < 100; ++i)
    {
        Image x(256, 256), y(256, 256);
        for (std::size_t k = 0; k < x.size(); ++k)
        {
            x.values[k] = val(rng);
            y.values[k] = 0.5 * x.values[k] + 0.5 * val(rng);
        }
        self_err = std::max(self_err, std::abs(ssim(x, x) - 1.0));
        sym_err = std::max(sym_err, std::abs(ssim(x, y) - ssim(y, x)));
    }
    if (self_err > 1e-9 || sym_err > 1e-12)
        ok = false;
    return {ok, fmt("SD(a,a)=%g, SD(a,~a)=%g, triangle violations %d/1000, |ssim(x,x)-1|<=%.1e, ssim asymmetry "
                    "<=%.1e%s",
                    self, inv, tri_fail, self_err, sym_err, why.c_str())};
}

struct ImagingRun
{
    double sd = 0.0;
    double sd_blank = 0.0;  // SD of an all-background prediction
    double iou = 0.0;
    bool peak_on_body = false;  // global peak within 2 cells of the silhouette
};

ImagingRun imaging_run(std::uint64_t seed, double threshold)
{
    const auto g = ArrayGeometry::device_default();
    const HumanPhantom body = HumanPhantom::standard(1.5);
    Scene room;
    room.noise_power = 1e-4;
    room.leakage_profile = {{0.8, 0.1}, {0.3, -0.2}, {0.1, 0.05}};
    room.clutter.push_back({{3.4, -0.8, 0.3}, {0.4, 0.0}});
    Scene scene = room;
    scene.targets = sample_phantom(body, seed);

    std::vector<CirFrame> frames, empties;
    for (int i = 0; i < 10; ++i)
        frames.push_back(synthesize_cir(scene, g, 96, mix_seed(seed, 1 + i)));
    for (int i = 0; i < 4; ++i)
        empties.push_back(synthesize_cir(room, g, 96, mix_seed(seed, 1000 + i)));

    const MusicConfig cfg;
    const auto tensor = build_spectrum_tensor(frames, EmptyCirSet(empties), g, cfg);
    Image mean = tensor.mean_image();
    const double peak = *std::max_element(mean.values.begin(), mean.values.end());
    for (auto &v : mean.values)
        v /= peak;

    const PinholeCamera cam;
    const auto truth = resample_to_grid(render_ground_truth(body, g, cam), cam, cfg.grid());
    const Mask tm = to_mask(truth, 0.0), pm = to_mask(mean, threshold);
    ImagingRun r;
    r.sd = silhouette_difference(pm, tm);
    r.sd_blank = silhouette_difference(Mask(tm.rows, tm.cols), tm);
    std::size_t inter = 0, uni = 0;
    for (std::size_t i = 0; i < tm.size(); ++i)
    {
        inter += tm.bits[i] && pm.bits[i];
        uni += tm.bits[i] || pm.bits[i];
    }
    r.iou = uni ? static_cast<double>(inter) / static_cast<double>(uni) : 1.0;
    const auto [pr, pc] = oracle::argmax(mean);
    for (int dr = -2; dr <= 2; ++dr)
        for (int dc = -2; dc <= 2; ++dc)
        {
            const int rr = pr + dr, cc = pc + dc;
            if (rr >= 0 && rr < tm.rows && cc >= 0 && cc < tm.cols && tm(rr, cc))
                r.peak_on_body = true;
        }
    return r;
}

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

Outcome end_to_end()
{
    constexpr double kThreshold = 0.5;  // half of the normalised mean-image peak
    std::vector<double> sd, blank, iou;
    int on_body = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
    {
        const auto r = imaging_run(seed, kThreshold);
        sd.push_back(r.sd);
        blank.push_back(r.sd_blank);
        iou.push_back(r.iou);
        on_body += r.peak_on_body;
    }
    const double m = median(sd);
    return {m <= 35.0, fmt("median SD %.2f%% over 10 seeds (limit 35%%); range %.2f-%.2f%%; all-background "
                           "baseline %.2f%%; median IoU %.3f; peak on body in %d/10",
                           m, *std::min_element(sd.begin(), sd.end()), *std::max_element(sd.begin(), sd.end()),
                           median(blank), median(iou), on_body)};
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Outcome determinism()
{
    const fs::path root = fs::temp_directory_path() / "mmid_acceptance_determinism";
    fs::remove_all(root);
    fs::create_directories(root);
    std::ofstream(root / "scene.scene") << "noise_power = 1e-3\nleakage = 0.8,0.1 0.3,-0.2\n"
                                           "[target]\nposition = 1.6 0.1 0.0\n"
                                           "[phantom]\npreset = human\ndistance = 1.8\ndensity = 150\n"
                                           "[clutter]\nposition = 3.2 0.5 0.0\n";
    std::vector<fs::path> outputs[2];
    for (int run = 0; run < 2; ++run)
    {
        const fs::path dir = root / ("run" + std::to_string(run));
        SimulateOptions sim;
        sim.scene_file = root / "scene.scene";
        sim.frames = 4;
        sim.seed = 99;
        sim.out_dir = dir / "frames";
        auto a = cmd_simulate(sim);
        sim.empty_room = true;
        sim.seed = 100;
        sim.out_dir = dir / "empty";
        auto b = cmd_simulate(sim);
        SpectrumOptions spec;
        spec.frames_dir = dir / "frames";
        spec.empty_dir = dir / "empty";
        spec.out_path = dir / "spectrum.mmid";
        auto c = cmd_spectrum(spec);
        for (auto *list : {&a.frames, &b.frames, &c.previews})
            outputs[run].insert(outputs[run].end(), list->begin(), list->end());
        outputs[run].insert(outputs[run].end(), {a.manifest, b.manifest, c.tensor, c.manifest});
    }
    int same = 0;
    for (std::size_t i = 0; i < outputs[0].size(); ++i)
        same += slurp(outputs[0][i]) == slurp(outputs[1][i]) && !slurp(outputs[0][i]).empty();
    fs::remove_all(root);
    const int total = static_cast<int>(outputs[0].size());
    return {same == total, fmt("%d/%d output files byte-identical across two runs", same, total)};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"MUSIC single-source localization", single_source},
        {"Coherent-source spatial smoothing", coherent_sources},
        {"Background removal", background_removal},
        {"Range resolution", range_resolution},
        {"Eigendecomposition round-trip", eigen_roundtrip},
        {"Metrics unit suite", metrics_suite},
        {"End-to-end synthetic imaging", end_to_end},
        {"Determinism of simulate and spectrum", determinism},
    };
    int failed = 0;
    for (const auto &[name, run] : criteria)
    {
        Outcome o;
        try
        {
            o = run();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed == 0 ? 0 : 1;
}
