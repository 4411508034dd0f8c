// hbsa — command-line front end for the hyperentangled Bell-state analyzer.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hbsa/experiments.hpp"
#include "hbsa/io.hpp"
#include "hbsa/published_states.hpp"
#include "hbsa/parser.hpp"

namespace {

using namespace hbsa;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

HyperBellIndex parse_selector(const std::string& sel) {
    auto kind = [](const std::string& s) -> BellKind {
        if (s == "phi+") return BellKind::phi_plus;
        if (s == "phi-") return BellKind::phi_minus;
        if (s == "psi+") return BellKind::psi_plus;
        if (s == "psi-") return BellKind::psi_minus;
        throw CLI::ValidationError("selector",
                                   "unknown Bell label '" + s +
                                       "' (expected phi+, phi-, psi+ or psi-)");
    };
    auto comma = sel.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError(
            "selector", "expected '<spatial>s,<pol>p', e.g. phi+s,phi+p; valid labels: "
                        "phi+ phi- psi+ psi- with s/p suffixes");
    std::string s = sel.substr(0, comma);
    std::string p = sel.substr(comma + 1);
    if (s.empty() || s.back() != 's' || p.empty() || p.back() != 'p')
        throw CLI::ValidationError("selector",
                                   "expected suffixes s and p, e.g. phi+s,phi+p (got '" + sel +
                                       "')");
    return HyperBellIndex{kind(s.substr(0, s.size() - 1)), kind(p.substr(0, p.size() - 1))};
}

UiWiring parse_pairing(const std::string& text) {
    // format: m1:n1,m2:n2  e.g. a1:b2,b1:a2
    auto arm = [](const std::string& s) -> Arm {
        if (s == "a1") return Arm::a1;
        if (s == "a2") return Arm::a2;
        if (s == "b1") return Arm::b1;
        if (s == "b2") return Arm::b2;
        throw CLI::ValidationError("--ui-pairing", "unknown arm '" + s + "'");
    };
    auto comma = text.find(',');
    auto c1 = text.find(':');
    if (comma == std::string::npos || c1 == std::string::npos || c1 > comma)
        throw CLI::ValidationError("--ui-pairing", "expected m1:n1,m2:n2 (e.g. a1:b2,b1:a2)");
    auto c2 = text.find(':', comma);
    if (c2 == std::string::npos)
        throw CLI::ValidationError("--ui-pairing", "expected m1:n1,m2:n2 (e.g. a1:b2,b1:a2)");
    UiWiring w;
    w.m1 = arm(text.substr(0, c1));
    w.n1 = arm(text.substr(c1 + 1, comma - c1 - 1));
    w.m2 = arm(text.substr(comma + 1, c2 - comma - 1));
    w.n2 = arm(text.substr(c2 + 1));
    return w;
}

struct RangeSpec {
    double from = 0.0, to = 0.0;
    int points = 1;
};

RangeSpec parse_range(const std::string& text) {
    RangeSpec r;
    std::istringstream in(text);
    char c1, c2;
    if (!(in >> r.from >> c1 >> r.to >> c2 >> r.points) || c1 != ':' || c2 != ':' ||
        r.points < 1 || !in.eof())
        throw CLI::ValidationError("range", "expected <from>:<to>:<points>, e.g. 0:5:11");
    return r;
}

std::string render_distribution(const HyperBellIndex& idx, const Distribution& dist,
                                OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::records: return distribution_to_records(idx, dist);
        case OutputFormat::flat: return distribution_to_flat(dist);
        default: return distribution_to_human(dist);
    }
}

OutputFormat to_format(const std::string& s) {
    if (s == "human") return OutputFormat::human;
    if (s == "structured-records") return OutputFormat::records;
    if (s == "flat-table") return OutputFormat::flat;
    throw CLI::ValidationError("--format",
                               "expected human, structured-records or flat-table");
}

int check_table(const SignatureTable& table) {
    DiffReport diff = diff_tables(table, oracle_table());
    std::size_t bad = diff.mismatched_rows();
    std::cout << (16 - bad) << "/16 rows match\n";
    if (!diff.empty()) {
        std::cout << diff_to_human(diff);
        return kExitVerificationFailure;
    }
    return kExitOk;
}

// Verifies the analyzer stage snapshots of one worked example against the
// published intermediate states. Returns pass/fail lines; stage 4 is checked
// at the level of detection records.
int trace_input(const HyperBellIndex& idx, OutputFormat fmt, double tol) {
    Circuit circuit = build_hbsa_circuit();
    TwoPhotonState input = make_hyper_bell(idx);
    auto snaps = stage_states(circuit, input);
    int k = worked_example_of(idx);
    int fails = 0;

    auto report = [&](const std::string& name, const TwoPhotonState& st, int stage) {
        std::cout << "== " << name << " ==\n";
        if (fmt == OutputFormat::human) std::cout << state_to_human(st);
        if (k < 0) {
            std::cout << "   (no published reference for this input)\n";
            return;
        }
        if (stage < 0) return;  // intermediate step, no published state
        bool ok = true;
        std::string what;
        if (stage == 0) {
            ok = equal_up_to_global_phase(st, make_hyper_bell(idx), tol);
            what = "input state";
        } else if (stage <= 3) {
            TwoPhotonState want = stage == 1   ? expected_stage1(k)
                                  : stage == 2 ? expected_stage2(k)
                                               : expected_stage3(k);
            ok = equal_up_to_global_phase(st, want, tol);
            what = "stage-" + std::to_string(stage) + " state";
        } else {
            auto want = expected_stage4_events(k);
            std::set<DetectionEvent> got;
            for (const auto& [ev, p] : detection_distribution(st)) got.insert(ev);
            ok = (got == want);
            what = "stage-4 signature";
        }
        std::cout << "   " << (ok ? "PASS" : "FAIL") << ": " << what << "\n";
        if (!ok) ++fails;
    };

    report("input " + idx.str(), input, 0);
    for (std::size_t i = 0; i < snaps.size(); ++i) {
        int stage = -1;
        for (std::size_t s = 0; s < circuit.stage_marks.size(); ++s)
            if (circuit.stage_marks[s] == i) stage = static_cast<int>(s) + 1;
        report("after " + snaps[i].first, snaps[i].second, stage);
    }
    return fails == 0 ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hbsa — two-photon hyperentangled Bell-state analyzer"};
    app.require_subcommand(1);
    argv = app.ensure_utf8(argv);

    std::string format_s = "human";
    NoiseParams noise;
    std::string pairing_s;
    double tol = kNormTolerance;

    auto add_common = [&](CLI::App* cmd, bool with_noise = true) {
        cmd->add_option("--format", format_s,
                        "output format: human, structured-records, flat-table");
        if (with_noise) {
            cmd->add_option("--hwp-jitter", noise.hwp_jitter_deg,
                            "additive offset (degrees) to every 22.5 deg plate");
            cmd->add_option("--fs-leakage", noise.fs_leakage,
                            "residual un-flipped FS amplitude in [0,1]");
            cmd->add_option("--bs-imbalance", noise.bs_imbalance,
                            "beam-splitter imbalance, |eps| < 0.5");
        }
    };

    // analyze
    std::string selector;
    auto* analyze = app.add_subcommand(
        "analyze", "print the detection distribution for one hyper-Bell input");
    analyze->add_option("selector", selector,
                        "input state, e.g. phi+s,phi+p (labels phi+ phi- psi+ psi-)")
        ->required();
    add_common(analyze);

    // table
    bool check = false;
    auto* table = app.add_subcommand("table", "print the full 16-row signature table");
    table->add_flag("--check", check, "diff against the published table; exit 1 on mismatch");
    table->add_option("--ui-pairing", pairing_s,
                      "override interferometer arm pairing, e.g. a1:b2,b1:a2");
    add_common(table);

    // verify
    auto* verify = app.add_subcommand(
        "verify", "check stage snapshots and the signature table against the published values");
    verify->add_option("--tol", tol, "state-comparison tolerance");

    // trace
    auto* trace = app.add_subcommand("trace", "print every stage snapshot for one input");
    trace->add_option("selector", selector, "input state, e.g. phi+s,phi+p")->required();
    trace->add_option("--tol", tol, "state-comparison tolerance");
    add_common(trace, false);

    // sweep
    std::string r_hwp, r_fs, r_bs;
    auto* sweepc = app.add_subcommand("sweep", "noise sweep, flat-table output");
    sweepc->add_option("--hwp-jitter", r_hwp, "range from:to:points (degrees)");
    sweepc->add_option("--fs-leakage", r_fs, "range from:to:points");
    sweepc->add_option("--bs-imbalance", r_bs, "range from:to:points");
    sweepc->add_option("--format", format_s, "output format");

    // run-file
    std::string path;
    auto* runf = app.add_subcommand("run-file", "run a circuit-description file");
    runf->add_option("file", path, "circuit description path")->required();
    runf->add_flag("--check", check, "diff the resulting table against the published one");
    add_common(runf, false);

    // sample
    std::uint64_t shots = 1000, seed = 1;
    auto* sample = app.add_subcommand("sample", "draw detection events for one input");
    sample->add_option("selector", selector, "input state, e.g. phi+s,phi+p")->required();
    sample->add_option("--shots", shots, "number of samples (>= 1)");
    sample->add_option("--seed", seed, "RNG seed");
    add_common(sample);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        OutputFormat fmt = to_format(format_s);

        if (analyze->parsed()) {
            HyperBellIndex idx = parse_selector(selector);
            TwoPhotonState out = run(build_hbsa_circuit(noise), make_hyper_bell(idx));
            std::cout << render_distribution(idx, detection_distribution(out), fmt);
            return kExitOk;
        }
        if (table->parsed()) {
            UiWiring wiring;
            if (!pairing_s.empty()) wiring = parse_pairing(pairing_s);
            SignatureTable t = signature_table(build_hbsa_circuit(noise, wiring));
            if (check) return check_table(t);
            switch (fmt) {
                case OutputFormat::records: std::cout << table_to_records(t); break;
                case OutputFormat::flat: std::cout << table_to_flat(t); break;
                default: std::cout << table_to_human(t); break;
            }
            return kExitOk;
        }
        if (verify->parsed()) {
            int rc = kExitOk;
            for (const auto& idx : worked_examples()) {
                std::cout << "--- trace " << idx.str() << " ---\n";
                if (trace_input(idx, OutputFormat::records /* suppress state dumps */, tol) != 0)
                    rc = kExitVerificationFailure;
            }
            std::cout << "--- signature table ---\n";
            if (check_table(signature_table(build_hbsa_circuit())) != 0)
                rc = kExitVerificationFailure;
            return rc;
        }
        if (trace->parsed()) {
            return trace_input(parse_selector(selector), fmt, tol);
        }
        if (sweepc->parsed()) {
            std::vector<SweepPoint> points;
            if (!r_hwp.empty()) {
                auto r = parse_range(r_hwp);
                auto p = sweep(SweepParam::hwp_jitter, r.from, r.to, r.points);
                points.insert(points.end(), p.begin(), p.end());
            }
            if (!r_fs.empty()) {
                auto r = parse_range(r_fs);
                auto p = sweep(SweepParam::fs_leakage, r.from, r.to, r.points);
                points.insert(points.end(), p.begin(), p.end());
            }
            if (!r_bs.empty()) {
                auto r = parse_range(r_bs);
                auto p = sweep(SweepParam::bs_imbalance, r.from, r.to, r.points);
                points.insert(points.end(), p.begin(), p.end());
            }
            if (points.empty())
                throw CLI::ValidationError("sweep", "give at least one range option");
            std::cout << (fmt == OutputFormat::records ? sweep_to_records(points)
                                                       : sweep_to_flat(points));
            return kExitOk;
        }
        if (runf->parsed()) {
            std::ifstream in(path);
            if (!in) {
                std::cerr << "cannot open " << path << "\n";
                return kExitUsage;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            Circuit c = parse_circuit(buf.str());
            SignatureTable t = signature_table(c);
            if (check) return check_table(t);
            switch (fmt) {
                case OutputFormat::records: std::cout << table_to_records(t); break;
                case OutputFormat::flat: std::cout << table_to_flat(t); break;
                default: std::cout << table_to_human(t); break;
            }
            return kExitOk;
        }
        if (sample->parsed()) {
            HyperBellIndex idx = parse_selector(selector);
            TwoPhotonState out = run(build_hbsa_circuit(noise), make_hyper_bell(idx));
            auto counts = sample_events(out, shots, seed);
            std::cout << "event,interval,count\n";
            for (const auto& [ev, n] : counts)
                std::cout << ev.d1.str() << "+" << ev.d2.str() << "," << to_string(ev.interval)
                          << "," << n << "\n";
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
