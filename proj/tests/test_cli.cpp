#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "absep/json_io.hpp"
#include "absep/sweep.hpp"

// End-to-end checks of the installed binary: exit codes, JSON output,
// deterministic sweep files, malformed-input handling.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string out_file = "/tmp/absep_cli_out.txt";
    const std::string cmd = std::string(ABSEP_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(raw);
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("classify-state exit codes and JSON output") {
    const RunResult holds = run_cli("classify-state --spectrum 0.25,0.25,0.25,0.25 --partition 2x2");
    CHECK(holds.exit_code == 0);
    const auto j = nlohmann::json::parse(holds.out);
    CHECK(j["status"] == "Holds");
    CHECK(j["criterion"] == "abs-ppt-2n");

    const RunResult fails = run_cli("classify-state --spectrum 1,0,0,0 --partition 2x2");
    CHECK(fails.exit_code == 1);

    // the extremal 2|4 spectrum: Holds with zero margin
    const RunResult edge = run_cli(
        "classify-state --spectrum "
        "0.22916666666666666,0.22916666666666666,0.1597222222222222,"
        "0.0763888888888889,0.0763888888888889,0.0763888888888889,"
        "0.0763888888888889,0.0763888888888889 --partition 2x4");
    CHECK(edge.exit_code == 0);
    const auto je = nlohmann::json::parse(edge.out);
    CHECK(std::abs(je["margin"].get<double>()) <= 1e-9);

    // multipartition syntax
    const RunResult multi = run_cli(
        "classify-state --spectrum 0.125,0.125,0.125,0.125,0.125,0.125,0.125,0.125 "
        "--partition 2^3");
    CHECK(multi.exit_code == 0);
    CHECK(nlohmann::json::parse(multi.out)["criterion"] == "nqubit-ball");

    // malformed input
    CHECK(run_cli("classify-state --spectrum 0.5,abc --partition 2x2").exit_code == 64);
    CHECK(run_cli("classify-state --spectrum 0.5,0.2 --partition 2x2").exit_code == 64);
    CHECK(run_cli("classify-state --partition 2x2").exit_code == 64);
    CHECK(run_cli("classify-state --spectrum 0.5,0.5 --partition bogus").exit_code == 64);
}

TEST_CASE("classify-state reads matrix files") {
    {
        std::ofstream f("/tmp/absep_bell.mat");
        f << "4\n";
        f << "0.5,0 0,0 0,0 0.5,0\n";
        f << "0,0 0,0 0,0 0,0\n";
        f << "0,0 0,0 0,0 0,0\n";
        f << "0.5,0 0,0 0,0 0.5,0\n";
    }
    const RunResult bell = run_cli("classify-state --matrix /tmp/absep_bell.mat --partition 2x2");
    CHECK(bell.exit_code == 1);  // pure Bell state is not absolutely separable

    // dimension cap via environment variable
    const std::string cmd = std::string("ABSEP_MAX_DIM=2 ") + ABSEP_CLI_PATH +
                            " classify-state --matrix /tmp/absep_bell.mat --partition 2x2 "
                            "> /dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 64);

    CHECK(run_cli("classify-state --matrix /tmp/no_such_file.mat --partition 2x2").exit_code == 74);

    // malformed matrix files are rejected cleanly
    const char* bad_files[] = {
        "0\n",                         // non-positive dimension
        "2\n1,0 0,0\n0,0\n",           // missing entry
        "2\n1,0 0,0 0,0 x,0\n",        // unparsable pair
        "2\n1,0 0,0 0,0 1\n",          // not a re,im pair
        "2\n0.6,0 0,0 0,0 0.4,1e-3\n"  // non-hermitian
    };
    for (const char* body : bad_files) {
        {
            std::ofstream f("/tmp/absep_bad.mat");
            f << body;
        }
        CHECK(run_cli("classify-state --matrix /tmp/absep_bad.mat --partition 2x2").exit_code ==
              64);
    }
}

TEST_CASE("classify-channel") {
    const RunResult as = run_cli(
        R"(classify-channel '{"family":"depolarizing","d":4,"q":0.2}' --partition 2x2)");
    CHECK(as.exit_code == 0);
    CHECK(nlohmann::json::parse(as.out)["status"] == "AbsolutelySeparating");

    const RunResult wh = run_cli(
        R"(classify-channel '{"family":"ctit","d":8,"alpha":0,"beta":-1}' --partition 2x4)");
    CHECK(wh.exit_code == 0);
    CHECK(nlohmann::json::parse(wh.out)["criterion"] == "ctit-2n-exact");

    const RunResult os = run_cli(
        R"(classify-channel '{"family":"one_sided","inner":{"family":"tracing","d":2},"id_dim":2}' --partition 2x2)");
    CHECK(os.exit_code == 1);
    CHECK(nlohmann::json::parse(os.out)["criterion"] == "one-sided");

    // witness upgrade
    const RunResult up = run_cli(
        R"(classify-channel '{"family":"local_product","factors":[{"family":"depolarizing","d":4,"q":0.5},{"family":"depolarizing","d":4,"q":0.5}]}' --partition 4x4 --witness-trials 5 --seed 3)");
    CHECK(up.exit_code == 1);
    CHECK(nlohmann::json::parse(up.out)["criterion"] == "random-witness");

    CHECK(run_cli(R"(classify-channel '{"family":"nonsense","d":4}' --partition 2x2)").exit_code ==
          64);
    CHECK(run_cli(R"(classify-channel '{"family":"tracing","d":4' --partition 2x2)").exit_code ==
          64);
}

TEST_CASE("witness subcommand") {
    const RunResult found = run_cli(
        R"(witness '{"family":"depolarizing","d":4,"q":0.34}' --partition 2x2 --trials 1 --seed 1)");
    CHECK(found.exit_code == 0);
    const auto j = nlohmann::json::parse(found.out);
    CHECK(j["negativity"].get<double>() <= -0.004);
    CHECK(j["unitary"].size() == 4);

    const RunResult none = run_cli(
        R"(witness '{"family":"tracing","d":4}' --partition 2x2 --trials 50 --seed 1)");
    CHECK(none.exit_code == 2);
}

TEST_CASE("sweep determinism and shape") {
    const std::string spec = R"({
        "name": "mini",
        "family": {"family":"local_product","factors":[
            {"family":"depolarizing","d":2,"q":"$q1"},
            {"family":"depolarizing","d":2,"q":"$q2"}]},
        "axes": [{"name":"q1","min":-1,"max":1,"steps":11},
                 {"name":"q2","min":-1,"max":1,"steps":7}],
        "partition": "2x2",
        "criteria": ["local-dep-exact","local-dep-sufficient"]
    })";
    {
        std::ofstream f("/tmp/absep_sweep_spec.json");
        f << spec;
    }
    CHECK(run_cli("sweep /tmp/absep_sweep_spec.json --out /tmp/absep_sweep1.csv --seed 5")
              .exit_code == 0);
    CHECK(run_cli("sweep /tmp/absep_sweep_spec.json --out /tmp/absep_sweep2.csv --seed 5")
              .exit_code == 0);
    const std::string a = slurp("/tmp/absep_sweep1.csv");
    CHECK(a == slurp("/tmp/absep_sweep2.csv"));  // byte-identical

    // row count = product of steps (+4 provenance lines + header)
    int lines = 0;
    for (char ch : a)
        if (ch == '\n') ++lines;
    CHECK(lines == 4 + 1 + 11 * 7);
    CHECK(a.find("# seed: 5") != std::string::npos);
    CHECK(a.find("# spec-hash: 0x") != std::string::npos);

    // degenerate axis rejected
    const std::string bad = R"({"family":{"family":"depolarizing","d":4,"q":"$q"},
        "axes":[{"name":"q","min":0,"max":1,"steps":1}],
        "partition":"2x2","criteria":["covariant-ea"]})";
    {
        std::ofstream f("/tmp/absep_sweep_bad.json");
        f << bad;
    }
    CHECK(run_cli("sweep /tmp/absep_sweep_bad.json --out /tmp/absep_b.csv").exit_code == 64);

    // unknown axis placeholder rejected
    const std::string orphan = R"({"family":{"family":"depolarizing","d":4,"q":0.2},
        "axes":[{"name":"q","min":0,"max":1,"steps":3}],
        "partition":"2x2","criteria":["covariant-ea"]})";
    {
        std::ofstream f("/tmp/absep_sweep_orphan.json");
        f << orphan;
    }
    CHECK(run_cli("sweep /tmp/absep_sweep_orphan.json --out /tmp/absep_o.csv").exit_code == 64);

    // unwritable output path
    CHECK(run_cli("sweep /tmp/absep_sweep_spec.json --out /no_such_dir/x.csv").exit_code == 74);
}

TEST_CASE("figure presets stream without error") {
    const RunResult f1 = run_cli("sweep --preset figure1 --out /tmp/absep_fig1.csv");
    CHECK(f1.exit_code == 0);
    const std::string body = slurp("/tmp/absep_fig1.csv");
    CHECK(body.find("mn,ball_bound,purity_threshold,hyperbola") != std::string::npos);
    int lines = 0;
    for (char ch : body)
        if (ch == '\n') ++lines;
    CHECK(lines == 4 + 1 + 61);  // mn = 4..64

    CHECK(run_cli("sweep --preset bogus --out /tmp/absep_bogus.csv").exit_code == 64);
}

TEST_CASE("demo subcommand") {
    const RunResult one = run_cli("demo --only local-dep-threshold");
    CHECK(one.exit_code == 0);
    CHECK(one.out.find("PASS") != std::string::npos);
    CHECK(run_cli("demo --only no-such-check").exit_code == 64);

    // the full table must come out green
    const RunResult all = run_cli("demo");
    CHECK(all.exit_code == 0);
    CHECK(all.out.find("FAIL") == std::string::npos);
    CHECK(all.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("channel JSON round trip") {
    const char* text = R"({"family":"one_sided","id_dim":3,"inner":
        {"family":"local_product","factors":[
            {"family":"generalized_pauli","d":3,"s":0.1,"t":[0.3,0.25,0.2,0.15]},
            {"family":"unital_qubit","l1":0.5,"l2":-0.25,"l3":0.125}]}})";
    const auto j = nlohmann::json::parse(text);
    const absep::ChannelSpec c = absep::channel_from_json(j);
    CHECK(c.dim() == 18);
    const auto j2 = absep::channel_to_json(c);
    CHECK(absep::channel_from_json(j2).dim() == 18);
    CHECK(j2 == nlohmann::json::parse(j2.dump()));
    CHECK(j2["inner"]["factors"][0]["t"].size() == 4);
}

TEST_CASE("json sweep format parses") {
    const absep::SweepSpec spec = absep::preset_sweep("figure1");
    std::stringstream out;
    absep::run_sweep(spec, out, absep::SweepFormat::Json);
    const auto j = nlohmann::json::parse(out.str());
    CHECK(j["meta"]["version"] == "0.1.0");
    CHECK(j["rows"].size() == 61);
}
