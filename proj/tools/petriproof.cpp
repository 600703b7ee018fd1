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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "petriproof/error.hpp"
#include "petriproof/incidence.hpp"
#include "petriproof/models.hpp"
#include "petriproof/pnet.hpp"
#include "petriproof/smtgen.hpp"
#include "report.hpp"

namespace fs = std::filesystem;
using namespace petriproof;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;

bool is_file_arg(const std::string& arg) { return arg.size() > 5 && arg.ends_with(".pnet"); }

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error(ErrorCode::IoError, "cannot read " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

// A catalog name (optionally with /cpn[/timed]) or a path to a .pnet file.
// `--timed` / `--untimed` pick the CPN variant when the name alone is given.
ParsedModel load(const std::string& arg, bool want_cpn, bool timed) {
    if (is_file_arg(arg)) return parse_model(read_file(arg), models::registry());
    models::ModelId id = models::parse_model_id(arg);
    if (want_cpn && id.layer == models::Layer::Hlpn && arg.find('/') == std::string::npos) {
        id.layer = models::Layer::Cpn;
        id.timing = timed ? models::Timing::Timed : models::Timing::Untimed;
    }
    return models::instantiate(id);
}

Net load_net(const std::string& arg) {
    auto m = load(arg, false, false);
    if (auto* n = std::get_if<Net>(&m)) return std::move(*n);
    throw Error(ErrorCode::InvalidArgument, arg + " is a cpn model; this command needs an hlpn model");
}

CpnModel load_cpn(const std::string& arg, bool timed) {
    auto m = load(arg, true, timed);
    if (auto* c = std::get_if<CpnModel>(&m)) return std::move(*c);
    throw Error(ErrorCode::InvalidArgument, arg + " is an hlpn model; this command needs a cpn model");
}

void write_out(const std::string& out, const std::string& name, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    fs::create_directories(out);
    fs::path p = fs::path(out) / name;
    std::ofstream os(p, std::ios::binary);
    if (!os) throw Error(ErrorCode::IoError, "cannot write " + p.string());
    os << text;
    std::cerr << "wrote " << p.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"petriproof: Petri-net models, simulation and SMT checks for the ECDSA and location-proof workflows"};
    app.require_subcommand(1);

    std::string model, format = "csv", out, solver, property;
    std::uint64_t seed = 42;
    int firings = 100, replications = 5, steps = 100;
    double alpha = 0.05, smt_timeout = 30;
    std::size_t max_states = 10000;
    bool check = false, timed = false, untimed = false, all = false, no_bindings = false, no_smt = false;
    std::vector<std::string> report_models;

    auto* list = app.add_subcommand("list", "List the built-in models");

    auto* show = app.add_subcommand("show", "Print a model in .pnet form");
    show->add_option("model", model, "Model name or .pnet file")->required();
    auto* show_timed = show->add_flag("--timed", timed, "Show the timed CPN");
    show->add_flag("--untimed", untimed, "Show the untimed CPN")->excludes(show_timed);

    auto* validate = app.add_subcommand("validate", "Parse and check a model");
    validate->add_option("model", model, "Model name or .pnet file")->required();

    auto* inc = app.add_subcommand("incidence", "Forward, backward, combined and inhibition matrices");
    inc->add_option("model", model, "HLPN model name or .pnet file")->required();
    inc->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    inc->add_flag("--check", check, "Compare with the bundled table; exit 2 on mismatch");
    inc->add_option("--out", out, "Directory for the output file");

    auto* sim = app.add_subcommand("simulate", "Replicated random firing with confidence intervals");
    sim->add_option("model", model, "HLPN model name or .pnet file")->required();
    sim->add_option("--firings", firings, "Firings per replication")->check(CLI::PositiveNumber);
    sim->add_option("--replications", replications, "Replications")->check(CLI::PositiveNumber);
    sim->add_option("--seed", seed, "Master seed");
    sim->add_option("--alpha", alpha, "1 - confidence level")->check(CLI::Range(1e-9, 0.999999));
    sim->add_option("--format", format, "json or csv")->check(CLI::IsMember({"csv", "json"}));
    sim->add_option("--out", out, "Directory for the output file");

    auto* cpn = app.add_subcommand("cpn-run", "Run a coloured model and report place monitors");
    cpn->add_option("model", model, "Model name or .pnet file")->required();
    auto* cpn_timed = cpn->add_flag("--timed", timed, "Timed variant");
    cpn->add_flag("--untimed", untimed, "Untimed variant (default)")->excludes(cpn_timed);
    cpn->add_option("--firings", steps, "Maximum steps")->check(CLI::PositiveNumber);
    cpn->add_option("--seed", seed, "Seed");
    cpn->add_option("--format", format, "csv (monitors) or json (events and monitors)")
        ->check(CLI::IsMember({"csv", "json"}));
    cpn->add_option("--out", out, "Directory for the output file");

    auto* explore = app.add_subcommand("explore", "Bounded state-space exploration; exit 2 on deadlock");
    explore->add_option("model", model, "HLPN model name or .pnet file")->required();
    explore->add_option("--max-states", max_states, "State bound")->check(CLI::PositiveNumber);
    explore->add_option("--seed", seed, "Accepted for uniformity; exploration is exhaustive");

    auto* emit = app.add_subcommand("smt-emit", "Write SMT-LIB2 scripts for properties or rules");
    auto* emit_prop = emit->add_option("property", property, "Property id, model name or R1..R21");
    auto* emit_all = emit->add_flag("--all", all, "All six properties");
    emit_all->excludes(emit_prop);
    emit->add_flag("--without-bindings", no_bindings, "Drop the reference-run bindings (expected sat)");
    emit->add_option("--out", out, "Directory for .smt2 files");

    auto* smtc = app.add_subcommand("smt-check", "Run properties through an SMT-LIB2 solver");
    auto* check_prop = smtc->add_option("property", property, "Property id or model name");
    auto* check_all = smtc->add_flag("--all", all, "All six properties");
    check_all->excludes(check_prop);
    smtc->add_flag("--without-bindings", no_bindings, "Drop the bindings (sanity check, expects sat)");
    smtc->add_option("--solver", solver, "Solver binary (else PETRIPROOF_SOLVER, else z3 on PATH)");
    smtc->add_option("--smt-timeout", smt_timeout, "Seconds per property")->check(CLI::PositiveNumber);

    auto* rep = app.add_subcommand("report", "Write incidence, simulation, monitor and SMT results");
    auto* rep_models = rep->add_option("models", report_models, "Model names");
    auto* rep_all = rep->add_flag("--all", all, "All six models");
    rep_all->excludes(rep_models);
    rep->add_option("--out", out, "Output directory")->required();
    rep->add_option("--seed", seed, "Master seed");
    rep->add_option("--firings", firings, "Firings per replication")->check(CLI::PositiveNumber);
    rep->add_option("--replications", replications, "Replications")->check(CLI::PositiveNumber);
    rep->add_option("--alpha", alpha, "1 - confidence level")->check(CLI::Range(1e-9, 0.999999));
    rep->add_option("--solver", solver, "Solver binary");
    rep->add_option("--smt-timeout", smt_timeout, "Seconds per property")->check(CLI::PositiveNumber);
    rep->add_flag("--no-smt", no_smt, "Skip the solver");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (list->parsed()) {
            for (const auto& id : models::catalog()) std::cout << id.key() << "\n";
            for (const auto& n : models::composite_names()) std::cout << n << "/hlpn\n";
            return kOk;
        }

        if (show->parsed()) {
            if (is_file_arg(model)) {
                std::cout << print_model(parse_model(read_file(model), models::registry()));
                return kOk;
            }
            auto id = models::parse_model_id(model);
            if (timed || untimed) {
                id.layer = models::Layer::Cpn;
                id.timing = timed ? models::Timing::Timed : models::Timing::Untimed;
            }
            const auto& comp = models::composite_names();
            if (std::find(comp.begin(), comp.end(), id.name) != comp.end())
                std::cout << print_model(models::instantiate_hlpn(id.name));
            else
                std::cout << models::source(id);
            return kOk;
        }

        if (validate->parsed()) {
            auto m = load(model, false, false);
            if (auto* n = std::get_if<Net>(&m))
                std::cout << "ok: " << n->name() << " hlpn, " << n->places().size() << " places, "
                          << n->transitions().size() << " transitions, " << n->arcs().size() << " arcs\n";
            else {
                auto& c = std::get<CpnModel>(m);
                std::cout << "ok: " << c.name << " cpn" << (c.timed ? " timed" : "") << ", " << c.places.size()
                          << " places, " << c.transitions.size() << " transitions, " << c.arcs.size() << " arcs\n";
            }
            return kOk;
        }

        if (inc->parsed()) {
            Net net = load_net(model);
            auto m = incidence(net);
            std::string text = format == "json" ? to_json(m, net.name()) : to_csv(m);
            write_out(out, net.name() + (format == "json" ? ".json" : ".csv"), text);
            if (check) {
                auto golden = parse_incidence_csv(models::golden_csv(net.name()));
                auto diffs = compare_incidence(golden, m);
                for (const auto& d : diffs) std::cerr << "mismatch: " << d << "\n";
                if (!diffs.empty()) return kFailed;
                std::cerr << "incidence matches the bundled table for " << net.name() << "\n";
            }
            return kOk;
        }

        if (sim->parsed()) {
            Net net = load_net(model);
            SimConfig cfg{firings, replications, seed, alpha};
            SimReport r = replicate(net, cfg);
            r.model = net.name();
            write_out(out, net.name() + (format == "csv" && sim->count("--format") ? ".csv" : ".json"),
                      format == "csv" && sim->count("--format") ? to_csv(r) : to_json(r));
            return kOk;
        }

        if (cpn->parsed()) {
            CpnModel m = load_cpn(model, timed);
            auto kind = m.timed ? MonitorKind::TimeAverage : MonitorKind::DiscreteAverage;
            CpnRun run = run_cpn(m, steps, seed, default_policy(m), kind);
            std::string stem = m.name + (m.timed ? "_timed" : "");
            if (format == "json")
                write_out(out, stem + ".json", tool::cpn_run_json(m, run, seed, steps));
            else
                write_out(out, stem + ".csv", stats_csv(m, run.stats));
            return kOk;
        }

        if (explore->parsed()) {
            Net net = load_net(model);
            auto r = bounded_explore(net, max_states);
            std::cout << tool::explore_json(net, r, max_states);
            bool unreached = std::find(r.place_reachable.begin(), r.place_reachable.end(), false) != r.place_reachable.end();
            return r.deadlocks.empty() && !unreached ? kOk : kFailed;
        }

        if (emit->parsed()) {
            if (!all && property.empty()) throw CLI::RequiredError("property or --all");
            std::vector<smt::SmtScript> scripts;
            if (all) {
                for (const auto& p : smt::property_names()) scripts.push_back(smt::emit_property(p));
            } else if (property.size() >= 2 && property[0] == 'R' && std::isdigit(static_cast<unsigned char>(property[1]))) {
                scripts.push_back(smt::emit_rule(property));
            } else {
                scripts.push_back(smt::emit_property(property));
            }
            for (auto& s : scripts) {
                if (no_bindings) s = s.without_bindings();
                auto problems = smt::validate(s.text());
                for (const auto& p : problems) std::cerr << s.name << ": " << p << "\n";
                if (!problems.empty()) return kFailed;
                std::string file = s.name.substr(s.name.find(' ') + 1);
                file = file.substr(0, file.find(' ')) + (no_bindings ? ".unbound" : "") + ".smt2";
                write_out(out, file, s.text());
            }
            return kOk;
        }

        if (smtc->parsed()) {
            if (!all && property.empty()) throw CLI::RequiredError("property or --all");
            std::string path = smt::resolve_solver(solver);
            std::vector<smt::VerdictRow> rows;
            if (all && !no_bindings) {
                rows = smt::verify_all(path, smt_timeout);
            } else {
                std::vector<std::string> ids = all ? smt::property_names() : std::vector<std::string>{property};
                for (const auto& id : ids) {
                    smt::VerdictRow row;
                    row.property = smt::canonical_property(id);
                    try {
                        auto s = smt::emit_property(id);
                        if (no_bindings) s = s.without_bindings();
                        row.verdict = smt::run_solver(s, path, smt_timeout);
                    } catch (const Error& e) {
                        row.error = e.what();
                    }
                    rows.push_back(row);
                }
            }
            std::cout << smt::verdict_csv(rows);
            auto expected = no_bindings ? smt::Result::Sat : smt::Result::Unsat;
            for (const auto& r : rows)
                if (!r.verdict || r.verdict->result != expected) return kFailed;
            return kOk;
        }

        if (rep->parsed()) {
            std::vector<std::string> names = all ? models::base_names() : report_models;
            if (names.empty()) {
                std::cerr << "report: give model names or --all\n";
                return kUsage;
            }
            for (const auto& n : names) models::parse_model_id(n);
            tool::ReportConfig cfg;
            cfg.sim = SimConfig{firings, replications, seed, alpha};
            cfg.with_smt = !no_smt;
            cfg.solver = smt::resolve_solver(solver);
            cfg.smt_timeout = smt_timeout;
            bool ok = tool::write_report(names, out, cfg);
            std::cerr << "report written to " << out << "\n";
            return ok ? kOk : kFailed;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::UnknownModel:
            case ErrorCode::UnknownProperty:
            case ErrorCode::UnknownRule:
            case ErrorCode::InvalidArgument:
                return kUsage;
            default:
                return kFailed;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
