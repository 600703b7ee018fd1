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

#include <map>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "petriproof/incidence.hpp"
#include "petriproof/models.hpp"
#include "petriproof/sim.hpp"

using namespace petriproof;

namespace {

// Reads arcs straight from the model text, without the parser or Eigen.
std::map<std::pair<std::string, std::string>, int> arc_counts(const std::string& text, bool inhibitor) {
    std::map<std::pair<std::string, std::string>, int> out;
    std::regex re(R"(^arc\s+(\w+)\s+(->|-o)\s+(\w+)\s*:\s*(?:(\d+)')?)");
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::smatch m;
        if (!std::regex_search(line, m, re)) continue;
        if ((m[2] == "-o") != inhibitor) continue;
        out[{m[1], m[3]}] += m[4].matched ? std::stoi(m[4]) : 1;
    }
    return out;
}

}  // namespace

TEST_SUITE("incidence") {

TEST_CASE("built-in models match the bundled incidence tables cell for cell") {
    for (const auto& name : models::base_names()) {
        CAPTURE(name);
        Net net = models::instantiate_hlpn(name);
        auto expected = parse_incidence_csv(models::golden_csv(name));
        auto diffs = compare_incidence(expected, incidence(net));
        for (const auto& d : diffs) MESSAGE(d);
        CHECK(diffs.empty());
    }
}

TEST_CASE("matrices agree with arcs read directly from the model text") {
    for (const auto& name : models::base_names()) {
        CAPTURE(name);
        Net net = models::instantiate_hlpn(name);
        std::string text = models::source({name, models::Layer::Hlpn, models::Timing::Untimed});
        auto normal = arc_counts(text, false);
        auto inhib = arc_counts(text, true);
        auto f = forward_matrix(net), b = backward_matrix(net), h = inhibition_matrix(net);
        for (std::size_t p = 0; p < net.places().size(); ++p)
            for (std::size_t t = 0; t < net.transitions().size(); ++t) {
                auto& pid = net.places()[p].id;
                auto& tid = net.transitions()[t].id;
                auto P = static_cast<Eigen::Index>(p), T = static_cast<Eigen::Index>(t);
                int fwd = normal.count({tid, pid}) ? normal[{tid, pid}] : 0;
                int bwd = normal.count({pid, tid}) ? normal[{pid, tid}] : 0;
                CHECK(f(P, T) == fwd);
                CHECK(b(P, T) == bwd);
                CHECK(h(P, T) == (inhib.count({pid, tid}) ? 1 : 0));
            }
    }
}

TEST_CASE("combined is forward minus backward and inhibition is 0/1") {
    for (const auto& name : models::base_names()) {
        auto m = incidence(models::instantiate_hlpn(name));
        CHECK(m.combined == m.forward - m.backward);
        CHECK((m.inhibition.array() >= 0).all());
        CHECK((m.inhibition.array() <= 1).all());
        CHECK((m.forward.array() >= 0).all());
        CHECK((m.backward.array() >= 0).all());
    }
}

TEST_CASE("floating-point scalars give the same matrices") {
    Net net = models::instantiate_hlpn("ecdsa-sigverify");
    CHECK(combined_matrix<double>(net) == combined_matrix<int>(net).cast<double>());
}

TEST_CASE("state equation holds along random traces") {
    // count change of every firing equals the transition's column in C
    for (const auto& name : models::base_names()) {
        CAPTURE(name);
        Net net = models::instantiate_hlpn(name);
        Eigen::MatrixXi C = combined_matrix(net);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            Trace tr = run_trace(net, 60, seed);
            Eigen::VectorXi prev = net.initial_marking().counts();
            for (std::size_t i = 0; i < tr.fired.size(); ++i) {
                Eigen::VectorXi delta = tr.series[i] - prev;
                CHECK(delta == C.col(static_cast<Eigen::Index>(tr.fired[i].transition)));
                prev = tr.series[i];
            }
        }
    }
}

TEST_CASE("csv round trip") {
    for (const auto& name : models::base_names()) {
        auto m = incidence(models::instantiate_hlpn(name));
        auto back = parse_incidence_csv(to_csv(m));
        CHECK(compare_incidence(m, back).empty());
        CHECK(back.row_labels == m.row_labels);
        CHECK(back.col_labels == m.col_labels);
    }
}

TEST_CASE("a changed cell is reported") {
    auto m = incidence(models::instantiate_hlpn("ecdsa-keygen"));
    auto other = m;
    other.forward(0, 0) += 1;
    auto diffs = compare_incidence(m, other);
    CHECK(diffs.size() == 1);
    CHECK(diffs[0].find("FORWARD") != std::string::npos);
}

TEST_CASE("json carries all four matrices") {
    auto m = incidence(models::instantiate_hlpn("lps-calc-location"));
    auto j = to_json(m, "lps-calc-location");
    for (const char* key : {"forward", "backward", "combined", "inhibition", "places", "transitions"})
        CHECK(j.find(key) != std::string::npos);
}

}
