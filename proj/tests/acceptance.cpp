/*
 * Copyright (C) 2026 The petriproof Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Runs the eight acceptance checks and prints one PASS/FAIL line for each.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fixtures.hpp"
#include "petriproof/cpn.hpp"
#include "petriproof/error.hpp"
#include "petriproof/incidence.hpp"
#include "petriproof/models.hpp"
#include "petriproof/pnet.hpp"
#include "petriproof/scheme/ecdsa.hpp"
#include "petriproof/sim.hpp"
#include "petriproof/smtgen.hpp"

namespace fs = std::filesystem;
using namespace petriproof;

namespace {

// Pinned limits.
constexpr double kIncidenceSeconds = 1.0;
constexpr double kSmtSecondsPerProperty = 10.0;
constexpr double kCryptoSeconds = 30.0;
constexpr double kLivenessSeconds = 60.0;
constexpr std::size_t kMaxStates = 10000;
constexpr int kEnsembleSeeds = 20;
constexpr int kCpnSteps = 100;
constexpr double kMonitorRelTol = 1e-9;
constexpr int kShrinkSeeds = 20;
constexpr int kShrinkRequired = 18;  // 90 %
constexpr double kHalfWidthSlack = 1e-12;

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v, int prec = 3) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(prec);
    os << v;
    return os.str();
}

Outcome incidence_golden() {
    auto t0 = Clock::now();
    int equal = 0;
    std::string first_diff;
    for (const auto& name : models::base_names()) {
        auto diffs = compare_incidence(parse_incidence_csv(models::golden_csv(name)),
                                       incidence(models::instantiate_hlpn(name)));
        if (diffs.empty())
            ++equal;
        else if (first_diff.empty())
            first_diff = name + ": " + diffs.front();
    }
    double s = since(t0);
    bool ok = equal == 6 && s < kIncidenceSeconds;
    return {ok, std::to_string(equal) + "/6 models equal cell for cell in " + fmt(s) + " s" +
                    (first_diff.empty() ? "" : "; " + first_diff)};
}

Outcome smt_verdicts() {
    std::string z3 = smt::resolve_solver("");
    if (z3.empty()) return {false, "no SMT-LIB2 solver found"};
    int unsat = 0, sat_negative = 0;
    double slowest = 0;
    std::string problem;
    for (const auto& row : smt::verify_all(z3, kSmtSecondsPerProperty)) {
        if (!row.verdict) {
            problem = row.property + ": " + row.error;
            continue;
        }
        slowest = std::max(slowest, row.verdict->elapsed_seconds);
        if (row.verdict->result == smt::Result::Unsat && row.verdict->elapsed_seconds < kSmtSecondsPerProperty)
            ++unsat;
        else if (problem.empty())
            problem = row.property + " gave " + smt::to_string(row.verdict->result);
    }
    for (const auto& p : smt::property_names()) {
        try {
            auto v = smt::run_solver(smt::emit_property(p).without_bindings(), z3, kSmtSecondsPerProperty);
            sat_negative += v.result == smt::Result::Sat;
        } catch (const Error& e) {
            if (problem.empty()) problem = p + " (unbound): " + e.what();
        }
    }
    return {unsat == 6 && sat_negative == 6,
            std::to_string(unsat) + "/6 unsat, slowest " + fmt(slowest, 4) + " s; unbound scripts sat " +
                std::to_string(sat_negative) + "/6" + (problem.empty() ? "" : "; " + problem)};
}

Bytes random_message(std::mt19937_64& rng) {
    Bytes m(1 + rng() % 40);
    for (auto& c : m) c = static_cast<std::uint8_t>(rng());
    return m;
}

void flip_bit(Bytes& m, std::mt19937_64& rng) {
    auto bit = rng() % (m.size() * 8);
    m[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
}

Outcome crypto_oracles() {
    using namespace scheme;
    auto t0 = Clock::now();
    auto dp = generate_domain_parameters(Profile::Toy);
    fixtures::ToyOracle o;

    long table_bad = 0, cells = 0;
    for (auto& P : o.points) {
        for (auto& Q : o.points) {
            ++cells;
            table_bad += add(dp, o.lift(P), o.lift(Q)) != o.lift(o.add(P, Q));
        }
        for (long k = 0; k < 19; ++k) {
            ++cells;
            table_bad += mul(dp, k, o.lift(P)) != o.lift(o.mul(k, P));
        }
    }

    std::mt19937_64 rng(2024);
    int round_trip = 0;
    for (long d = 1; d < 19; ++d) {
        auto kp = key_from_private(dp, d);
        for (int i = 0; i < 100; ++i) {
            auto m = random_message(rng);
            round_trip += verify(sign(m, d, dp, Nonce::seeded(rng())), kp.Q, m, dp) == Verdict::Accept;
        }
    }

    // Standard curve: every flipped message must be rejected.
    auto sdp = generate_domain_parameters(Profile::Standard);
    auto skp = generate_keys(sdp, 77);
    int std_rejected = 0;
    for (int i = 0; i < 1000; ++i) {
        auto m = random_message(rng);
        Signature sig = sign(m, skp.d, sdp, Nonce::seeded(rng()));
        flip_bit(m, rng);
        std_rejected += verify(sig, skp.Q, m, sdp) == Verdict::Reject;
    }

    // Toy curve: with n = 19 a flip is accepted exactly when e' = e or e' = -(e + 2rd) mod n.
    int toy_rejected = 0, toy_explained = 0;
    for (int i = 0; i < 1000; ++i) {
        long d = 1 + static_cast<long>(rng() % 18);
        auto kp = key_from_private(dp, d);
        auto m = random_message(rng);
        auto sig = sign(m, d, dp, Nonce::seeded(rng()));
        long e = static_cast<long>(hash_to_int(HashAlg::Sha256, m, dp.n));
        flip_bit(m, rng);
        long e2 = static_cast<long>(hash_to_int(HashAlg::Sha256, m, dp.n));
        long r = static_cast<long>(sig.r);
        bool collide = e2 == e || e2 == ((-(e + 2 * r * d)) % 19 + 19) % 19;
        bool rejected = verify(sig, kp.Q, m, dp) == Verdict::Reject;
        toy_rejected += rejected;
        toy_explained += rejected != collide;
    }

    int batch_agree = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 1 + rng() % 8;
        std::vector<BatchItem> items;
        std::vector<std::size_t> expected;
        for (std::size_t i = 0; i < n; ++i) {
            auto kp = key_from_private(dp, 1 + static_cast<long>(rng() % 18));
            auto m = random_message(rng);
            auto sig = sign(m, kp.d, dp, Nonce::seeded(rng()));
            if (rng() % 3 == 0) flip_bit(m, rng);
            if (verify(sig, kp.Q, m, dp) == Verdict::Reject) expected.push_back(i);
            items.push_back({sig, kp.Q, m});
        }
        auto res = batch_verify(items, dp, rng());
        batch_agree += res.all_valid == expected.empty() && res.invalid == expected;
    }
    double s = since(t0);
    bool ok = table_bad == 0 && round_trip == 1800 && std_rejected == 1000 && toy_explained == 1000 &&
              batch_agree == 500 && s < kCryptoSeconds;
    return {ok, "group table " + std::to_string(cells - table_bad) + "/" + std::to_string(cells) +
                    ", round trip " + std::to_string(round_trip) + "/1800, tamper rejected " +
                    std::to_string(std_rejected) + "/1000 (standard) and " + std::to_string(toy_rejected) +
                    "/1000 (toy, all accepts are mod-19 hash collisions: " + std::to_string(toy_explained) +
                    "/1000 explained), batch " + std::to_string(batch_agree) + "/500, " + fmt(s) + " s"};
}

Outcome liveness() {
    auto t0 = Clock::now();
    std::vector<std::string> nets = models::base_names();
    for (const auto& c : models::composite_names()) nets.push_back(c);
    int live = 0;
    std::string problem;
    for (const auto& name : nets) {
        Net net = models::instantiate_hlpn(name);
        auto r = bounded_explore(net, kMaxStates);
        bool all = std::all_of(r.place_reachable.begin(), r.place_reachable.end(), [](bool b) { return b; });
        if (!r.truncated && r.deadlocks.empty() && all)
            ++live;
        else if (problem.empty())
            problem = name + (r.truncated ? " truncated" : !r.deadlocks.empty() ? " deadlocks" : " has unreached places");
    }
    int cpn_ok = 0, cpn_total = 0;
    for (const auto& name : models::base_names())
        for (bool timed : {false, true}) {
            ++cpn_total;
            auto m = models::instantiate_cpn(name, timed);
            std::set<std::size_t> fired;
            for (int seed = 0; seed < kEnsembleSeeds; ++seed) {
                auto run = run_cpn(m, kCpnSteps, static_cast<std::uint64_t>(seed), default_policy(m),
                                   MonitorKind::DiscreteAverage);
                for (auto& e : run.events) fired.insert(e.transition);
            }
            if (fired.size() == m.transitions.size())
                ++cpn_ok;
            else if (problem.empty())
                problem = name + (timed ? " (timed)" : "") + " has a transition that never fired";
        }
    double s = since(t0);
    return {live == static_cast<int>(nets.size()) && cpn_ok == cpn_total && s < kLivenessSeconds,
            std::to_string(live) + "/" + std::to_string(nets.size()) +
                " HLPN nets deadlock-free with every place reachable, " + std::to_string(cpn_ok) + "/" +
                std::to_string(cpn_total) + " CPN models fire every transition over " +
                std::to_string(kEnsembleSeeds) + " seeds, " + fmt(s) + " s" + (problem.empty() ? "" : "; " + problem)};
}

bool identities_hold(const MonitorStats& s) {
    if (!s.average_defined) return true;
    bool order = s.min <= s.average && s.average <= s.max;
    if (s.kind == MonitorKind::TimeAverage) return order;
    double scale = std::max(std::abs(s.sum), 1.0);
    return order && std::abs(s.average * static_cast<double>(s.count) - s.sum) <= kMonitorRelTol * scale;
}

Outcome statistics_identities() {
    long checked = 0, held = 0;
    for (const auto& r : fixtures::kRows) {
        Monitor m(0, MonitorKind::DiscreteAverage);
        auto xs = fixtures::sequence_for(r);
        for (std::size_t i = 0; i < xs.size(); ++i) m.observe(xs[i], static_cast<std::int64_t>(i));
        auto s = m.stats();
        ++checked;
        held += !xs.empty() && identities_hold(s) && s.count == r.count && s.sum == r.sum &&
                std::abs(s.average - r.average) < 5e-7 && std::abs(r.sum / static_cast<double>(r.count) - r.average) < 5e-7;
    }
    for (const auto& r : fixtures::kTimedRows) {
        ++checked;
        held += r.min <= r.average && r.average <= r.max;
    }
    for (const auto& name : models::base_names())
        for (bool timed : {false, true}) {
            auto m = models::instantiate_cpn(name, timed);
            for (int seed = 0; seed < kEnsembleSeeds; ++seed)
                for (auto kind : {MonitorKind::DiscreteAverage, MonitorKind::TimeAverage}) {
                    auto run = run_cpn(m, kCpnSteps, static_cast<std::uint64_t>(seed), default_policy(m), kind);
                    for (auto& s : run.stats) {
                        ++checked;
                        held += identities_hold(s);
                    }
                }
        }
    return {held == checked, std::to_string(held) + "/" + std::to_string(checked) +
                                 " monitors and table rows satisfy average*count = sum (rel " +
                                 fmt(kMonitorRelTol, 10) + ") and min <= average <= max"};
}

Outcome timed_semantics() {
    auto m = models::instantiate_cpn("ecdsa-keygen", true);
    long events = 0, bad = 0;
    for (int seed = 0; seed < kEnsembleSeeds; ++seed) {
        auto run = run_cpn(m, 200, static_cast<std::uint64_t>(seed), default_policy(m), MonitorKind::TimeAverage);
        for (auto& e : run.events) {
            ++events;
            bad += e.clock < 1 || e.clock % 2 == 0;
        }
    }
    auto mixed = std::get<CpnModel>(parse_model(fixtures::kMixed, FunctionRegistry{}));
    int priority_ok = 0;
    for (int seed = 0; seed < kEnsembleSeeds; ++seed) {
        auto run = run_cpn(mixed, 10, static_cast<std::uint64_t>(seed), default_policy(mixed),
                           MonitorKind::DiscreteAverage);
        bool ok = run.events.size() == 5;
        for (std::size_t i = 0; ok && i < run.events.size(); ++i)
            ok = mixed.transition_untimed(run.events[i].transition) == (i < 3);
        priority_ok += ok;
    }
    return {events > 0 && bad == 0 && priority_ok == kEnsembleSeeds,
            std::to_string(events - bad) + "/" + std::to_string(events) +
                " timed key-generation events at odd clocks >= 1; untimed-first order in " +
                std::to_string(priority_ok) + "/" + std::to_string(kEnsembleSeeds) + " mixed-model runs"};
}

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* f = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!f) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
    status = pclose(f);
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

Outcome determinism() {
    const std::string cli = PETRIPROOF_CLI;
    if (!fs::exists(cli)) return {false, "CLI not found at " + cli};
    std::vector<std::string> cmds;
    for (const auto& m : models::base_names()) {
        cmds.push_back("incidence " + m + " --format csv");
        cmds.push_back("incidence " + m + " --format json");
        cmds.push_back("simulate " + m + " --firings 100 --replications 5 --seed 42");
        cmds.push_back("simulate " + m + " --firings 100 --replications 5 --seed 42 --format csv");
        cmds.push_back("cpn-run " + m + " --seed 42 --format csv");
        cmds.push_back("cpn-run " + m + " --timed --seed 42 --format json");
        cmds.push_back("explore " + m + " --max-states 10000");
    }
    for (const auto& p : smt::property_names()) cmds.push_back("smt-emit " + p);
    int same = 0;
    std::string problem;
    for (const auto& c : cmds) {
        int s1 = 0, s2 = 0;
        auto a = capture(cli + " " + c, s1);
        auto b = capture(cli + " " + c, s2);
        if (s1 == 0 && s2 == 0 && !a.empty() && a == b)
            ++same;
        else if (problem.empty())
            problem = c;
    }
    int total = static_cast<int>(cmds.size());

    // a full report bundle, twice
    auto root = fs::temp_directory_path() / ("petriproof_accept_" + std::to_string(::getpid()));
    fs::remove_all(root);
    int s1 = 0, s2 = 0;
    capture(cli + " report --all --seed 7 --out " + (root / "a").string(), s1);
    capture(cli + " report --all --seed 7 --out " + (root / "b").string(), s2);
    int files = 0, equal_files = 0;
    if (s1 == 0 && s2 == 0 && fs::exists(root / "a"))
        for (auto& e : fs::recursive_directory_iterator(root / "a")) {
            if (!e.is_regular_file()) continue;
            ++files;
            auto rel = fs::relative(e.path(), root / "a");
            equal_files += fs::exists(root / "b" / rel) && slurp(e.path()) == slurp(root / "b" / rel);
        }
    fs::remove_all(root);
    ++total;
    if (files > 0 && files == equal_files)
        ++same;
    else if (problem.empty())
        problem = "report bundle";
    return {same == total, std::to_string(same) + "/" + std::to_string(total) +
                               " seeded commands byte-identical across two runs (report bundle: " +
                               std::to_string(equal_files) + "/" + std::to_string(files) + " files)" +
                               (problem.empty() ? "" : "; first difference: " + problem)};
}

// A place whose five samples happen to coincide gets a zero-width interval,
// so the comparison is made on the model's mean half-width.
double mean_half_width(const SimReport& r) {
    double sum = 0;
    for (std::size_t p = 0; p < r.places.size(); ++p) sum += r.half_width(p);
    return sum / static_cast<double>(r.places.size());
}

Outcome ci_shrinkage() {
    int models_ok = 0;
    std::string counts, strict;
    for (const auto& name : models::base_names()) {
        Net net = models::instantiate_hlpn(name);
        int wins = 0, every_place = 0;
        for (int seed = 0; seed < kShrinkSeeds; ++seed) {
            auto s = static_cast<std::uint64_t>(seed);
            auto small = replicate(net, SimConfig{100, 5, s, 0.05});
            auto large = replicate(net, SimConfig{1000, 50, s, 0.05});
            wins += mean_half_width(large) <= mean_half_width(small) + kHalfWidthSlack;
            bool all = true;
            for (std::size_t p = 0; p < small.places.size(); ++p)
                all = all && large.half_width(p) <= small.half_width(p) + kHalfWidthSlack;
            every_place += all;
        }
        models_ok += wins >= kShrinkRequired;
        counts += (counts.empty() ? "" : ", ") + name + " " + std::to_string(wins) + "/" + std::to_string(kShrinkSeeds);
        strict += (strict.empty() ? "" : " ") + std::to_string(every_place);
    }
    return {models_ok == 6, "mean (1000,50) half-width <= (100,5): " + counts +
                                " (need " + std::to_string(kShrinkRequired) + "); every place separately: " + strict};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "incidence golden suite", incidence_golden},
        {2, "SMT verdict suite", smt_verdicts},
        {3, "crypto oracle suite", crypto_oracles},
        {4, "liveness suite", liveness},
        {5, "statistics identities", statistics_identities},
        {6, "timed semantics", timed_semantics},
        {7, "determinism", determinism},
        {8, "CI shrinkage", ci_shrinkage},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto t0 = Clock::now();
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << " " << c.name << ": " << o.detail << " ["
                  << fmt(since(t0), 2) << " s]" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
