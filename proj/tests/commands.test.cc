// Copyright 2026 The graymux Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graymux/commands.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "graymux/circuit_io.h"
#include "graymux/sim.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace graymux;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "graymux");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CommandsTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("graymux_commands_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::remove_all(dir_);
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override {
        std::filesystem::remove_all(dir_);
    }

    std::string write(const std::string &name, const std::string &text) {
        auto path = dir_ / name;
        std::ofstream(path) << text;
        return path.string();
    }

    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }

    std::filesystem::path dir_;
};

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST(cmd_gray, width_three) {
    auto r = run({"gray", "-m", "3"});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.out, "2,1,2,0,2,1,2\n000\n100\n110\n010\n011\n111\n101\n001\n");
}

TEST(cmd_gray, small_widths) {
    ASSERT_EQ(run({"gray", "-m", "1"}).out, "0\n0\n1\n");
    ASSERT_EQ(run({"gray", "-m", "2"}).out, "1,0,1\n00\n10\n11\n01\n");
}

TEST(cmd_gray, bad_width) {
    for (const char *bad : {"0", "31", "-4", "abc"}) {
        auto r = run({"gray", "-m", bad});
        ASSERT_EQ(r.code, 2) << bad;
        ASSERT_FALSE(r.err.empty()) << bad;
        ASSERT_TRUE(r.out.empty()) << bad;
    }
    ASSERT_EQ(run({"gray"}).code, 2);
    ASSERT_EQ(run({}).code, 2);
    ASSERT_EQ(run({"frobnicate"}).code, 2);
}

TEST_F(CommandsTest, synth_default_is_optimized) {
    std::string angles = write("a.txt", "m 2\n0.1\n0.2\n0.3\n0.4\n");
    auto r = run({"synth", "--angles", angles, "--out", path("c.txt")});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_EQ(r.err, "rotations=4 cnots=4\n");

    AngleVector phis = read_angles_file(angles);
    Circuit expected = emit_optimized(thetas_from_phis(phis));
    Circuit written = read_circuit_file(path("c.txt"));
    ASSERT_EQ(written, expected);

    auto lines = lines_of(format_circuit(expected));
    std::vector<std::string> cnot_lines;
    for (const auto &l : lines) {
        if (l.rfind("CNOT", 0) == 0) {
            cnot_lines.push_back(l);
        }
    }
    ASSERT_EQ(cnot_lines, (std::vector<std::string>{"CNOT 1 -> 2", "CNOT 0 -> 2", "CNOT 1 -> 2", "CNOT 0 -> 2"}));
}

TEST_F(CommandsTest, synth_to_stdout) {
    std::string angles = write("a.txt", "m 1\n0.5\n-0.5\n");
    auto r = run({"synth", "--angles", angles});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.out, format_circuit(emit_optimized(thetas_from_phis(read_angles_file(angles)))));
}

TEST_F(CommandsTest, synth_no_cancel_and_natural) {
    std::string angles = write("a.txt", "m 2\n0.1\n0.2\n0.3\n0.4\n");
    auto r = run({"synth", "--angles", angles, "--order", "lazy", "--no-cancel", "--out", path("n.txt")});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.err, "rotations=4 cnots=8\n");
    ASSERT_EQ(gate_counts(read_circuit_file(path("n.txt"))), (GateCounts{4, 8}));

    r = run({"synth", "--angles", angles, "--order", "natural", "--no-cancel", "--out", path("nat.txt")});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.err, "rotations=4 cnots=8\n");

    // Natural order 00,01,10,11 leaves runs {0}, {0,1}, {0}, {0,1}: 6 CNots.
    r = run({"synth", "--angles", angles, "--order", "natural", "--out", path("natc.txt")});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.err, "rotations=4 cnots=6\n");

    ASSERT_EQ(run({"synth", "--angles", angles, "--order", "random"}).code, 2);
}

TEST_F(CommandsTest, synth_width_zero) {
    std::string angles = write("a.txt", "m 0\n0.75\n");
    auto r = run({"synth", "--angles", angles, "--out", path("c.txt")});
    ASSERT_EQ(r.code, 0);
    std::ifstream in(path("c.txt"));
    std::stringstream text;
    text << in.rdbuf();
    auto lines = lines_of(text.str());
    ASSERT_EQ(lines.front(), "NB 1");
    ASSERT_EQ(lines.back(), "ROTY 0.75 AT 0");
    ASSERT_EQ(read_circuit_file(path("c.txt")).size(), 1u);
}

TEST_F(CommandsTest, synth_errors) {
    ASSERT_EQ(run({"synth", "--angles", path("missing.txt")}).code, 2);
    ASSERT_EQ(run({"synth", "--angles", write("bad.txt", "m 1\n0\n")}).code, 2);
    ASSERT_EQ(run({"synth", "--angles", write("wide.txt", "m 24\n")}).code, 2);
    ASSERT_EQ(run({"synth"}).code, 2);
}

TEST_F(CommandsTest, verify_round_trip_and_corruption) {
    std::string angles = write("a.txt", "m 3\n0.1\n-0.2\n0.3\n1.4\n-2.5\n0.6\n0.7\n3.0\n");
    ASSERT_EQ(run({"synth", "--angles", angles, "--out", path("c.txt")}).code, 0);
    auto r = run({"verify", "--angles", angles, "--circuit", path("c.txt")});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    ASSERT_EQ(r.out.rfind("max_abs_diff=", 0), 0u);

    // Drop the first CNOT line.
    std::ifstream in(path("c.txt"));
    std::string line;
    std::string corrupted;
    bool dropped = false;
    while (std::getline(in, line)) {
        if (!dropped && line.rfind("CNOT", 0) == 0) {
            dropped = true;
            continue;
        }
        corrupted += line + "\n";
    }
    write("bad.txt", corrupted);
    r = run({"verify", "--angles", angles, "--circuit", path("bad.txt")});
    ASSERT_EQ(r.code, 1) << r.out;
}

TEST_F(CommandsTest, verify_identity_cases) {
    std::string angles = write("a.txt", "m 2\n0\n0\n0\n0\n");
    std::string empty = write("e.txt", "NB 3\n");
    ASSERT_EQ(run({"verify", "--angles", angles, "--circuit", empty}).code, 0);
    std::string wrong_nb = write("w.txt", "NB 4\n");
    ASSERT_EQ(run({"verify", "--angles", angles, "--circuit", wrong_nb}).code, 2);
    ASSERT_EQ(run({"verify", "--angles", angles, "--circuit", write("m.txt", "NB 3\nBOGUS\n")}).code, 2);
    ASSERT_EQ(run({"verify", "--angles", angles}).code, 2);
    ASSERT_EQ(run({"verify", "--angles", angles, "--circuit", empty, "--tol", "-1"}).code, 2);
}

TEST_F(CommandsTest, verify_tolerance_flag) {
    std::string angles = write("a.txt", "m 1\n1e-6\n1e-6\n");
    std::string empty = write("e.txt", "NB 2\n");
    ASSERT_EQ(run({"verify", "--angles", angles, "--circuit", empty}).code, 1);
    ASSERT_EQ(run({"verify", "--angles", angles, "--circuit", empty, "--tol", "1e-5"}).code, 0);
}

TEST_F(CommandsTest, natural_and_lazy_verify_identically) {
    std::string angles = write("a.txt", "m 3\n0.9\n-0.2\n0.3\n0.4\n-1.5\n0.6\n2.7\n0.8\n");
    ASSERT_EQ(run({"synth", "--angles", angles, "--order", "natural", "--no-cancel", "--out", path("nat.txt")}).code, 0);
    ASSERT_EQ(run({"synth", "--angles", angles, "--order", "lazy", "--out", path("lazy.txt")}).code, 0);
    auto a = run({"verify", "--angles", angles, "--circuit", path("nat.txt")});
    auto b = run({"verify", "--angles", angles, "--circuit", path("lazy.txt")});
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
}

TEST(synthesize, spot_check_beyond_dense_guard) {
    std::mt19937_64 rng(51);
    const unsigned m = 11;
    AngleVector phis = oracle::random_angle_vector(m, AngleBasis::control, rng);
    Circuit c = synthesize(phis, SynthOrder::lazy, true);
    ASSERT_EQ(c.num_bits(), 12u);
    ASSERT_LE(verification_error(phis, c), 1e-10);

    std::vector<Gate> gates = c.gates();
    gates.erase(gates.begin() + 1);
    ASSERT_GT(verification_error(phis, Circuit(c.num_bits(), gates)), 1e-3);
}
