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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "petriproof/net.hpp"

namespace petriproof {

/* splitmix64 finalizer; replication k of master seed s runs on mix_seed(s, k). */
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t k);

struct SimConfig {
    int firings = 100;
    int replications = 5;
    std::uint64_t seed = 0;
    double alpha = 0.05;
};

enum class Termination { BudgetExhausted, Completion, Deadlock };
std::string_view to_string(Termination t);

struct Trace {
    ExecutionState final_state;
    std::vector<Eigen::VectorXi> series;  // token counts after every firing
    std::vector<Enabled> fired;
    Termination termination = Termination::BudgetExhausted;
};

Trace run_trace(const Net& net, int firings, std::uint64_t seed);

struct PlaceStatistic {
    std::string name;
    double mean = 0;
    double ci_lo = 0;
    double ci_hi = 0;
};

struct SimReport {
    std::string model;
    SimConfig config;
    std::vector<PlaceStatistic> places;
    std::vector<int> trace_lengths;
    std::vector<Termination> terminations;
    int deadlocks = 0;
    std::size_t states_explored = 0;

    double half_width(std::size_t p) const { return 0.5 * (places[p].ci_hi - places[p].ci_lo); }
};

SimReport replicate(const Net& net, const SimConfig& config);

/* Student-t interval; (mean, mean) for one sample. */
std::pair<double, double> confidence_interval(std::span<const double> samples, double alpha);

struct ExploreResult {
    std::size_t states = 0;
    std::vector<bool> place_reachable;
    std::vector<ExecutionState> deadlocks;
    std::size_t completions = 0;
    bool truncated = false;
};

ExploreResult bounded_explore(const Net& net, std::size_t max_states);

std::string to_json(const SimReport& r);
std::string to_csv(const SimReport& r);

}  // namespace petriproof
