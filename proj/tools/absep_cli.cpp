// Command-line front end: single classifications, parameter-region sweeps,
// randomized unitary witness searches, and a self-checking demo mode.
//
// Exit codes: 0 Holds/AS (or success), 1 Fails/notAS, 2 Undetermined (or no
// witness found), 64 usage or malformed input, 74 I/O failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "absep/demo.hpp"
#include "absep/json_io.hpp"
#include "absep/sweep.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

nlohmann::json load_json_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return nlohmann::json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("cannot open file: " + arg);
    return nlohmann::json::parse(in);
}

int status_exit(absep::Status s) {
    switch (s) {
        case absep::Status::Holds: return kExitHolds;
        case absep::Status::Fails: return kExitFails;
        default: return kExitUndetermined;
    }
}

int status_exit(absep::MapStatus s) {
    switch (s) {
        case absep::MapStatus::AbsolutelySeparating: return kExitHolds;
        case absep::MapStatus::NotAbsolutelySeparating: return kExitFails;
        default: return kExitUndetermined;
    }
}

int run_classify_state(const std::string& spectrum, const std::string& matrix_file,
                       const std::string& partition) {
    const absep::Partition part = absep::parse_partition(partition);
    absep::Verdict v;
    if (!spectrum.empty()) {
        const absep::Spectrum s = absep::parse_spectrum_string(spectrum);
        v = absep::classify_spectrum(s, part);
    } else {
        const absep::ComplexMatrix m = absep::read_matrix_file(matrix_file);
        v = absep::classify_state(absep::DensityMatrix(m), part);
    }
    std::cout << absep::verdict_to_json(v).dump(2) << "\n";
    return status_exit(v.status);
}

int run_classify_channel(const std::string& channel_arg, const std::string& partition,
                         int witness_trials, std::uint64_t seed) {
    const absep::ChannelSpec c = absep::channel_from_json(load_json_arg(channel_arg));
    const absep::Partition part = absep::parse_partition(partition);
    const absep::MapVerdict v = absep::classify_channel(c, part, witness_trials, seed);
    std::cout << absep::map_verdict_to_json(v).dump(2) << "\n";
    return status_exit(v.status);
}

int run_witness(const std::string& channel_arg, const std::string& partition, int trials,
                std::uint64_t seed) {
    const absep::ChannelSpec c = absep::channel_from_json(load_json_arg(channel_arg));
    const absep::Partition part = absep::parse_partition(partition);
    const auto* bip = std::get_if<absep::Bipartition>(&part);
    if (!bip) throw std::invalid_argument("witness: needs a bipartition MxN");
    const auto w = absep::random_unitary_witness(c, *bip, trials, seed);
    if (!w) {
        std::cout << "{\"witness\": null, \"trials\": " << trials << "}\n";
        return kExitUndetermined;
    }
    std::cout << absep::witness_to_json(*w).dump(2) << "\n";
    return kExitHolds;
}

int run_sweep_cmd(const std::string& spec_file, const std::string& preset, const std::string& out,
                  const std::string& format, std::uint64_t seed) {
    absep::SweepSpec spec;
    if (!preset.empty())
        spec = absep::preset_sweep(preset);
    else
        spec = absep::sweep_spec_from_json(load_json_arg(spec_file));
    spec.seed = seed;
    const absep::SweepFormat fmt =
        (format == "json") ? absep::SweepFormat::Json : absep::SweepFormat::Csv;
    if (out.empty() || out == "-") {
        absep::run_sweep(spec, std::cout, fmt);
        return kExitHolds;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file " << out << "\n";
        return kExitIo;
    }
    absep::run_sweep(spec, f, fmt);
    f.flush();
    if (!f) {
        std::cerr << "error: write failure on " << out << "\n";
        return kExitIo;
    }
    return kExitHolds;
}

int run_demo(const std::string& only) {
    std::vector<absep::DemoResult> results;
    if (only.empty())
        results = absep::run_all_demos();
    else
        results.push_back(absep::run_demo_check(only));
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << " — " << r.description;
        if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
        std::cout << "\n";
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << " (" << results.size()
              << " run)\n";
    return all ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"absolutely separable states and absolutely separating channels"};
    app.require_subcommand(1);

    std::string spectrum, matrix_file, partition, channel_arg, spec_file, preset, out_path, only;
    std::string format = "csv";
    int witness_trials = 0;
    int trials = 1000;
    std::uint64_t seed = 0;  // all randomized subcommands default to seed 0

    auto* cs = app.add_subcommand("classify-state", "classify a state or spectrum");
    auto* opt_spec = cs->add_option("--spectrum", spectrum, "comma-separated eigenvalues");
    cs->add_option("--matrix", matrix_file, "dense complex matrix file")->excludes(opt_spec);
    cs->add_option("--partition", partition, "MxN or 2^N")->required();

    auto* cc = app.add_subcommand("classify-channel", "classify a channel family");
    cc->add_option("channel", channel_arg, "channel JSON (inline or file)")->required();
    cc->add_option("--partition", partition, "MxN or 2^N")->required();
    cc->add_option("--witness-trials", witness_trials,
                   "randomized witness search when criteria stay undetermined");
    cc->add_option("--seed", seed, "RNG seed (default 0)");

    auto* wt = app.add_subcommand("witness", "search for a PPT-violating unitary witness");
    wt->add_option("channel", channel_arg, "channel JSON (inline or file)")->required();
    wt->add_option("--partition", partition, "MxN")->required();
    wt->add_option("--trials,--witness-trials", trials, "number of trials (default 1000)");
    wt->add_option("--seed", seed, "RNG seed (default 0)");

    auto* sw = app.add_subcommand("sweep", "parameter-region sweep to CSV/JSON");
    sw->add_option("spec", spec_file, "sweep spec JSON (inline or file)");
    sw->add_option("--preset", preset, "figure1|figure3|figure4|figure5|figure6|figure7");
    sw->add_option("--out", out_path, "output path (default stdout)");
    sw->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sw->add_option("--seed", seed, "RNG seed recorded in the provenance header");

    auto* dm = app.add_subcommand("demo", "reproduce the published numbers and claims");
    dm->add_option("--only", only, "run a single check by id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cs->parsed()) {
            if (spectrum.empty() && matrix_file.empty())
                throw std::invalid_argument("classify-state: need --spectrum or --matrix");
            return run_classify_state(spectrum, matrix_file, partition);
        }
        if (cc->parsed()) return run_classify_channel(channel_arg, partition, witness_trials, seed);
        if (wt->parsed()) return run_witness(channel_arg, partition, trials, seed);
        if (sw->parsed()) {
            if (preset.empty() && spec_file.empty())
                throw std::invalid_argument("sweep: need a spec file or --preset");
            return run_sweep_cmd(spec_file, preset, out_path, format, seed);
        }
        if (dm->parsed()) return run_demo(only);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
