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
#include <string>
#include <vector>

#include "petriproof/cpn.hpp"
#include "petriproof/net.hpp"
#include "petriproof/sim.hpp"

namespace petriproof::tool {

struct ReportConfig {
    SimConfig sim;
    int cpn_steps = 100;
    bool with_smt = true;
    std::string solver;
    double smt_timeout = 30;
};

/* JSON for one CPN run: events with bindings and clocks plus monitor stats. */
std::string cpn_run_json(const CpnModel& model, const CpnRun& run, std::uint64_t seed, int steps);
std::string explore_json(const Net& net, const ExploreResult& r, std::size_t max_states);

/* Writes <out>/<model>/{incidence.csv,simulation.json,cpn_untimed.csv,cpn_timed.csv}
 * and <out>/smt_verdicts.csv. Returns false when any SMT property is not unsat. */
bool write_report(const std::vector<std::string>& models, const std::string& out, const ReportConfig& cfg);

}  // namespace petriproof::tool
