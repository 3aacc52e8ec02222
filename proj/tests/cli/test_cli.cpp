// Runs the sta binary end to end: exit codes, output files, determinism.

#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const auto dir = fs::path(STA_CLI_SCRATCH) / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run(const fs::path& dir, const std::string& args) {
    const std::string cmd = "cd '" + dir.string() + "' && '" STA_BINARY "' " + args + " >stdout.txt 2>stderr.txt";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("bad invocations exit with status 2") {
    const auto dir = scratch("usage");
    CHECK(run(dir, "simulate missing-config.toml") == 2);
    CHECK(slurp(dir / "stderr.txt").find("Usage:") != std::string::npos);
    CHECK(run(dir, "") == 2);
    CHECK(run(dir, "no-such-command") == 2);
    CHECK(run(dir, "check-equivalence --n notanumber") == 2);
    CHECK(run(dir, "--format xml verify-identities") == 2);
    CHECK(run(dir, "simulate --signature 4,0 --grid 8 --steps 1") == 2);
    CHECK(run(dir, "verify-identities --signature 1") == 2);

    write(dir / "bad.cfg", "grid = 16\nmystery = 3\n");
    CHECK(run(dir, "simulate bad.cfg") == 2);
    CHECK(slurp(dir / "stderr.txt").find("bad.cfg:2") != std::string::npos);
    write(dir / "dup.cfg", "steps = 3\nsteps = 4\n");
    CHECK(run(dir, "simulate dup.cfg") == 2);
}

TEST_CASE("help exits cleanly") {
    const auto dir = scratch("help");
    CHECK(run(dir, "--help") == 0);
    CHECK(slurp(dir / "stdout.txt").find("dispersion-scan") != std::string::npos);
}

TEST_CASE("verify-identities on one signature") {
    const auto dir = scratch("verify");
    CHECK(run(dir, "verify-identities --signature 1,3") == 0);
    const auto kernel = slurp(dir / "out" / "kernel_oracle.csv");
    CHECK(kernel == "signature,blade_pairs,mismatches,pseudoscalar_square\n\"Cl(1,3)\",256,0,-1\n");
    const auto ids = slurp(dir / "out" / "identities.csv");
    CHECK(ids.rfind("name,signature,passed,differences\n", 0) == 0);
    CHECK(ids.find(",false,") == std::string::npos);
}

TEST_CASE("a failing identity exits with status 1 and is named") {
    const auto dir = scratch("failing");
    fs::create_directories(dir / "corpus");
    write(dir / "corpus" / "wrong.idn",
          "[commuting-vectors]\nsignature: 1,3\nspacetime-vectors: a, b\nlhs: a b\nrhs: b a\n");
    CHECK(run(dir, "verify-identities --corpus corpus") == 1);
    CHECK(slurp(dir / "stderr.txt").find("commuting-vectors") != std::string::npos);
    CHECK(slurp(dir / "out" / "identities.csv").find("commuting-vectors,\"Cl(1,3)\",false,") != std::string::npos);
}

TEST_CASE("check-equivalence is deterministic across runs") {
    const auto a = scratch("equiv_a");
    const auto b = scratch("equiv_b");
    const std::string args = "--format json check-equivalence --seed 42 --n 3 --grid 16 --gauge-pairs 2";
    CHECK(run(a, args) == 0);
    CHECK(run(b, args) == 0);
    const auto first = slurp(a / "out" / "equivalence.json");
    CHECK(!first.empty());
    CHECK(first == slurp(b / "out" / "equivalence.json"));
    CHECK(slurp(a / "out" / "gauge.json") == slurp(b / "out" / "gauge.json"));
}

TEST_CASE("simulate writes identical time series and snapshots on repeat") {
    const std::string cfg = "grid = 16,8,8\nmass = 2\ninitial = plane-wave\nsteps = 40\ncadence = 10\n";
    const auto a = scratch("sim_a");
    const auto b = scratch("sim_b");
    write(a / "run.cfg", cfg);
    write(b / "run.cfg", cfg);
    CHECK(run(a, "simulate run.cfg --snapshot-every 20") == 0);
    CHECK(run(b, "simulate run.cfg --snapshot-every 20") == 0);
    for (const char* f : {"timeseries.csv", "snapshots/snapshot_00000020.csv", "snapshots/snapshot_00000040.json"}) {
        CAPTURE(f);
        const auto text = slurp(a / "out" / f);
        CHECK(!text.empty());
        CHECK(text == slurp(b / "out" / f));
    }
    // Samples at 10, 20, 30; step 40 has no successor inside the run.
    const auto series = slurp(a / "out" / "timeseries.csv");
    CHECK(std::count(series.begin(), series.end(), '\n') == 4);
}

TEST_CASE("config values take precedence over flags") {
    const auto dir = scratch("precedence");
    write(dir / "run.cfg", "grid = 8\nsteps = 20\ncadence = 10\n");
    CHECK(run(dir, "simulate run.cfg --grid 16 --steps 40") == 0);
    const auto series = slurp(dir / "out" / "timeseries.csv");
    CHECK(std::count(series.begin(), series.end(), '\n') == 2);  // header + step 10
    const auto sidecar = slurp(dir / "out" / "snapshots" / "snapshot_00000020.json");
    CHECK(sidecar.find("\"nx\": 8") != std::string::npos);
}

TEST_CASE("duality-report reads a snapshot directory") {
    const auto dir = scratch("duality");
    write(dir / "run.cfg", "grid = 8\ninitial = gaussian-charge\nwidth = 0.4\nsteps = 0\n");
    CHECK(run(dir, "simulate run.cfg") == 0);
    CHECK(run(dir, "duality-report --snapshots out/snapshots") == 0);
    const auto table = slurp(dir / "out" / "duality.csv");
    CHECK(table.rfind("index,t,lagrangian,lagrangian_rotated,", 0) == 0);
}
