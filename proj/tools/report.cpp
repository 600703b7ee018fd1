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

#include "report.hpp"

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "petriproof/error.hpp"
#include "petriproof/incidence.hpp"
#include "petriproof/models.hpp"
#include "petriproof/smtgen.hpp"

namespace petriproof::tool {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string cpn_run_json(const CpnModel& model, const CpnRun& run, std::uint64_t seed, int steps) {
    ordered_json j;
    j["model"] = model.name;
    j["timed"] = model.timed;
    j["seed"] = seed;
    j["steps"] = steps;
    j["stopped_early"] = run.stopped_early;
    j["final_clock"] = run.final_state.clock;
    ordered_json events = ordered_json::array();
    for (const auto& e : run.events) {
        ordered_json b = ordered_json::object();
        for (const auto& [var, v] : e.binding) b[var] = v.to_string();
        events.push_back({{"transition", model.transitions[e.transition].id}, {"clock", e.clock}, {"binding", b}});
    }
    j["events"] = events;
    ordered_json stats = ordered_json::array();
    for (std::size_t p = 0; p < run.stats.size(); ++p) {
        const auto& s = run.stats[p];
        stats.push_back({{"place", model.places[p].id},
                         {"monitor", std::string(to_string(s.kind))},
                         {"count", s.count},
                         {"sum", s.sum},
                         {"average", s.average},
                         {"min", s.min},
                         {"max", s.max}});
    }
    j["monitors"] = stats;
    return j.dump(2) + "\n";
}

std::string explore_json(const Net& net, const ExploreResult& r, std::size_t max_states) {
    ordered_json j;
    j["model"] = net.name();
    j["max_states"] = max_states;
    j["states"] = r.states;
    j["truncated"] = r.truncated;
    j["completions"] = r.completions;
    j["deadlocks"] = r.deadlocks.size();
    ordered_json unreached = ordered_json::array();
    for (std::size_t p = 0; p < r.place_reachable.size(); ++p)
        if (!r.place_reachable[p]) unreached.push_back(net.places()[p].display);
    j["unreached_places"] = unreached;
    return j.dump(2) + "\n";
}

namespace {

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    os << text;
    if (!os) throw Error(ErrorCode::IoError, "write failed: " + path.string());
}

}  // namespace

bool write_report(const std::vector<std::string>& models, const std::string& out, const ReportConfig& cfg) {
    if (models.empty()) throw Error(ErrorCode::InvalidArgument, "no models requested");
    fs::path root(out);
    std::error_code ec;
    fs::create_directories(root, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create " + root.string() + ": " + ec.message());

    for (const auto& name : models) {
        fs::path dir = root / name;
        fs::create_directories(dir, ec);
        if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
        Net net = models::instantiate_hlpn(name);
        write_file(dir / "incidence.csv", to_csv(incidence(net)));
        SimReport rep = replicate(net, cfg.sim);
        rep.model = name;
        write_file(dir / "simulation.json", to_json(rep));
        const auto& composites = models::composite_names();
        if (std::find(composites.begin(), composites.end(), name) != composites.end()) continue;
        for (bool timed : {false, true}) {
            CpnModel m = models::instantiate_cpn(name, timed);
            auto kind = timed ? MonitorKind::TimeAverage : MonitorKind::DiscreteAverage;
            CpnRun run = run_cpn(m, cfg.cpn_steps, cfg.sim.seed, default_policy(m), kind);
            write_file(dir / (timed ? "cpn_timed.csv" : "cpn_untimed.csv"), stats_csv(m, run.stats));
        }
    }

    if (!cfg.with_smt) return true;
    auto rows = smt::verify_all(cfg.solver, cfg.smt_timeout);
    // timings vary between runs, so the bundle keeps verdicts only
    write_file(root / "smt_verdicts.csv", smt::verdict_csv(rows, false));
    for (const auto& r : rows)
        if (!r.verdict || r.verdict->result != smt::Result::Unsat) return false;
    return true;
}

}  // namespace petriproof::tool
