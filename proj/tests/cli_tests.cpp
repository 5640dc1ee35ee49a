#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "rb/generate.hpp"
#include "rb/io/json.hpp"

using namespace rb;
using rb::io::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;

    json parsed() const { return json::parse(out); }
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(RBTRUNC_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
        out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("rbtrunc_test_" + name);
    std::ofstream(path) << contents;
    return path;
}

const std::string zero_op_q = R"({"field": "rational", "n": 1, "matrix": [[0, 0], [0, 0]]})";
const std::string identity_q = R"({"field": "rational", "n": 1, "matrix": [[1, 0], [0, 1]]})";
const std::string nilpotent_n2 =
    R"({"field": "rational", "n": 2, "matrix": [[0, 0, 0], [1, 0, 1], [0, 0, 0]]})";
const std::string diag_m1_m1_0 =
    R"({"field": "rational", "n": 2, "matrix": [[-1, 0, 0], [0, -1, 0], [0, 0, 0]]})";
const std::string minus_2_identity =
    R"({"field": "rational", "n": 1, "matrix": [[-2, 0], [0, -2]]})";

} // namespace

TEST_CASE("check: verdicts and exit codes") {
    const auto zero = temp_file("zero.json", zero_op_q);
    const auto id = temp_file("id.json", identity_q);
    const auto nil2 = temp_file("nil2.json", nilpotent_n2);

    SUBCASE("zero operator is weight-0 RB: exit 0") {
        const auto r = run_cli("check " + zero.string() + " --weight 0");
        CHECK(r.exit_code == 0);
        CHECK(r.parsed()["verdict"] == "rb");
        CHECK(r.parsed()["witness"].is_null());
    }

    SUBCASE("identity fails weight 0 with witness (0,0), lhs 1, rhs 2: exit 1") {
        const auto r = run_cli("check " + id.string() + " --weight 0");
        CHECK(r.exit_code == 1);
        const json j = r.parsed();
        CHECK(j["verdict"] == "not-rb");
        CHECK(j["witness"]["pair"] == json::array({0, 0}));
        CHECK(j["witness"]["lhs"]["scalar"] == 1);
        CHECK(j["witness"]["rhs"]["scalar"] == 2);
    }

    SUBCASE("the n = 2 nilpotent example holds at weight 0: exit 0") {
        const auto r = run_cli("check " + nil2.string() + " --weight 0");
        CHECK(r.exit_code == 0);
    }

    SUBCASE("identity holds at weight -1 (P = -lambda id with lambda = -1)") {
        const auto r = run_cli("check " + id.string() + " --weight -1");
        CHECK(r.exit_code == 0);
    }

    SUBCASE("stdin via -") {
        const auto r = run_cli("check - --weight 0 < " + zero.string());
        CHECK(r.exit_code == 0);
    }

    SUBCASE("--pretty emits text, same exit code") {
        const auto r = run_cli("check " + id.string() + " --weight 0 --pretty");
        CHECK(r.exit_code == 1);
        CHECK(r.out.find("verdict: not-rb") != std::string::npos);
        CHECK(r.out.find("basis pair (0, 0)") != std::string::npos);
    }
}

TEST_CASE("check: input errors exit 2 with diagnostics") {
    SUBCASE("malformed JSON names the line") {
        const auto bad = temp_file("bad.json", "{\"field\": \"rational\",\n  \"n\": }");
        const auto r = run_cli("check " + bad.string() + " --weight 0");
        CHECK(r.exit_code == 2);
        CHECK(r.out.find("line 2") != std::string::npos);
    }

    SUBCASE("schema violation names the field") {
        const auto bad = temp_file("badschema.json",
                                   R"({"field": "rational", "n": 2, "matrix": [[0,0],[0,0]]})");
        const auto r = run_cli("check " + bad.string() + " --weight 0");
        CHECK(r.exit_code == 2);
        CHECK(r.out.find("matrix") != std::string::npos);
    }

    SUBCASE("missing file") {
        const auto r = run_cli("check /nonexistent/op.json --weight 0");
        CHECK(r.exit_code == 2);
    }

    SUBCASE("bad weight scalar") {
        const auto f = temp_file("zero2.json", zero_op_q);
        const auto r = run_cli("check " + f.string() + " --weight 1.5");
        CHECK(r.exit_code == 2);
    }

    SUBCASE("usage errors") {
        CHECK(run_cli("check").exit_code == 2);
        CHECK(run_cli("frobnicate x").exit_code == 2);
        CHECK(run_cli("").exit_code == 2);
    }
}

TEST_CASE("classify: reports and exit codes") {
    const auto diag = temp_file("diag.json", diag_m1_m1_0);
    const auto id = temp_file("id2.json", identity_q);
    const auto m2id = temp_file("m2id.json", minus_2_identity);

    SUBCASE("diag(-1,-1,0) at weight 1 gives alpha -1, Q = diag(1,0)") {
        const auto r = run_cli("classify " + diag.string() + " --weight 1");
        CHECK(r.exit_code == 0);
        const json j = r.parsed();
        CHECK(j["verdict"] == "rb");
        CHECK(j["data"]["kind"] == "weight1");
        CHECK(j["data"]["alpha"] == -1);
        CHECK(j["data"]["Q"] == json::parse("[[1, 0], [0, 0]]"));
    }

    SUBCASE("identity at weight 1 is rejected with the alpha reason code") {
        const auto r = run_cli("classify " + id.string() + " --weight 1");
        CHECK(r.exit_code == 1);
        const json j = r.parsed();
        CHECK(j["verdict"] == "not-rb");
        CHECK(j["reason"] == "alpha-not-in-{0,-1}");
    }

    SUBCASE("-2*identity at weight 2 classifies through rescaling") {
        const auto r = run_cli("classify " + m2id.string() + " --weight 2");
        CHECK(r.exit_code == 0);
        const json j = r.parsed();
        CHECK(j["data"]["alpha"] == -1);
        CHECK(j["data"]["Q"] == json::parse("[[1]]"));
    }

    SUBCASE("weight 0 route") {
        const auto nil2 = temp_file("nil2b.json", nilpotent_n2);
        const auto r = run_cli("classify " + nil2.string() + " --weight 0");
        CHECK(r.exit_code == 0);
        const json j = r.parsed();
        CHECK(j["data"]["kind"] == "weight0");
        CHECK(j["data"]["v0"] == json::parse("[1, 0]"));
        CHECK(j["data"]["L"] == json::parse("[[0, 1], [0, 0]]"));
    }

    SUBCASE("classified data reconstructs the exact input matrix") {
        const auto r = run_cli("classify " + diag.string() + " --weight 1");
        const json j = r.parsed();
        const RationalField q;
        const AlgebraSpec<RationalField> spec(q, 2);
        const Weight1Data<Rat> d{io::scalar_from_json(q, j["data"]["alpha"], "alpha"),
                                 io::matrix_from_json(q, j["data"]["Q"], 2, 2, "Q")};
        const auto P = make_weight1_operator(d, spec);
        const auto original = io::operator_from_json(json::parse(diag_m1_m1_0));
        CHECK(P == std::get<LinearOperator<RationalField>>(original));
    }

    SUBCASE("rational weight 1/2") {
        // -(1/2) * identity is RB of weight 1/2
        const auto half = temp_file("half.json",
                                    R"({"field": "rational", "n": 1, "matrix": [["-1/2", 0], [0, "-1/2"]]})");
        const auto r = run_cli("classify " + half.string() + " --weight 1/2");
        CHECK(r.exit_code == 0);
        CHECK(r.parsed()["data"]["alpha"] == -1);
    }
}

TEST_CASE("gen: certified operators") {
    SUBCASE("weight 0, rank 0 has L = 0 and passes check") {
        const auto r = run_cli("gen --weight 0 --n 2 --rank 0 --seed 1");
        CHECK(r.exit_code == 0);
        const json j = r.parsed();
        CHECK(j["data"]["kind"] == "weight0");
        CHECK(j["data"]["L"] == json::parse("[[0, 0], [0, 0]]"));

        const auto f = temp_file("gen0.json", r.out);
        CHECK(run_cli("check " + f.string() + " --weight 0").exit_code == 0);
    }

    SUBCASE("weight 1, full rank, alpha -1 is minus the identity") {
        const auto r = run_cli("gen --weight 1 --n 3 --rank 3 --alpha -1 --seed 5");
        CHECK(r.exit_code == 0);
        const json j = r.parsed();
        const auto parsed = io::operator_from_json(j);
        const auto& P = std::get<LinearOperator<RationalField>>(parsed);
        CHECK(P == -identity_operator(P.spec));
    }

    SUBCASE("prime field generation") {
        const auto r = run_cli("gen --weight 1 --n 2 --rank 1 --field 7 --seed 3");
        CHECK(r.exit_code == 0);
        CHECK(r.parsed()["field"] == json::parse(R"({"prime": 7})"));
    }

    SUBCASE("same seed, same operator") {
        const auto a = run_cli("gen --weight 0 --n 4 --rank 2 --seed 42");
        const auto b = run_cli("gen --weight 0 --n 4 --rank 2 --seed 42");
        CHECK(a.out == b.out);
    }

    SUBCASE("invalid rank exits 2") {
        CHECK(run_cli("gen --weight 0 --n 2 --rank 2 --seed 1").exit_code == 2);
        CHECK(run_cli("gen --weight 1 --n 2 --rank 3 --seed 1").exit_code == 2);
    }

    SUBCASE("invalid field exits 2") {
        CHECK(run_cli("gen --weight 0 --n 2 --rank 1 --field 9 --seed 1").exit_code == 2);
        CHECK(run_cli("gen --weight 0 --n 2 --rank 1 --field 2 --seed 1").exit_code == 2);
    }
}

TEST_CASE("gen | check pipeline closure over 500 seeded invocations") {
    int runs = 0;
    for (std::uint64_t seed = 0; runs < 500; ++seed) {
        const std::string field = (seed % 3 == 0) ? "rational" : (seed % 3 == 1) ? "5" : "7";
        const int weight = static_cast<int>(seed % 2);
        const long n = 1 + static_cast<long>(seed % 3);
        const long max_rank = weight == 0 ? n / 2 : n;
        const long rank = static_cast<long>(seed) % (max_rank + 1);

        const auto gen = run_cli("gen --weight " + std::to_string(weight) + " --n " + std::to_string(n) +
                                 " --rank " + std::to_string(rank) + " --field " + field + " --seed " +
                                 std::to_string(seed));
        REQUIRE(gen.exit_code == 0);
        const auto f = temp_file("pipe.json", gen.out);
        const auto check = run_cli("check " + f.string() + " --weight " + std::to_string(weight));
        if (check.exit_code != 0)
            FAIL("pipeline failed at seed " << seed << ":\n" << gen.out);
        ++runs;
    }
}

TEST_CASE("enumerate: counts, exit codes, budget") {
    SUBCASE("F_3 n=1 weight 0") {
        const auto r = run_cli("enumerate --prime 3 --n 1 --weight 0");
        CHECK(r.exit_code == 0);
        const json j = r.parsed();
        CHECK(j["total"] == 81);
        CHECK(j["rb_count"] == 3);
        CHECK(j["classified_count"] == 3);
        CHECK(j["mismatches"] == json::array());
    }

    SUBCASE("F_3 n=1 weight 1") {
        const auto r = run_cli("enumerate --prime 3 --n 1 --weight 1");
        CHECK(r.exit_code == 0);
        CHECK(r.parsed()["rb_count"] == 4);
    }

    SUBCASE("count-only keeps counts") {
        const auto r = run_cli("enumerate --prime 3 --n 1 --weight 1 --count-only");
        CHECK(r.exit_code == 0);
        const json j = r.parsed();
        CHECK(j["rb_count"] == 4);
        CHECK(j["mismatch_count"] == 0);
    }

    SUBCASE("budget exceeded exits 2 and names the required count") {
        const std::string cmd = "RB_ENUM_BUDGET=10 " + std::string(RBTRUNC_BIN) +
                                " enumerate --prime 3 --n 1 --weight 0 2>&1";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        char buf[4096];
        while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
            out.append(buf, got);
        const int status = pclose(pipe);
        CHECK(WEXITSTATUS(status) == 2);
        CHECK(out.find("81") != std::string::npos);
    }

    SUBCASE("even prime exits 2") {
        CHECK(run_cli("enumerate --prime 2 --n 1 --weight 0").exit_code == 2);
        CHECK(run_cli("enumerate --prime 9 --n 1 --weight 0").exit_code == 2);
    }

    SUBCASE("worker count does not change the report") {
        const auto a = run_cli("enumerate --prime 5 --n 1 --weight 1 --workers 1");
        const auto b = run_cli("enumerate --prime 5 --n 1 --weight 1 --workers 4");
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK(a.parsed()["rb_count"] == 4);
    }

    SUBCASE("--pretty table") {
        const auto r = run_cli("enumerate --prime 3 --n 1 --weight 0 --pretty");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("total maps:") != std::string::npos);
    }
}
