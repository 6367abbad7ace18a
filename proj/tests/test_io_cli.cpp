#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include "ccode/io.hpp"
#include "helpers.hpp"

using namespace ccode;
using tst::demo_encoder;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

// Runs the installed binary (path from the test environment) with stderr
// dropped; returns exit code and captured stdout.
CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("CCODE_CLI_PATH");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data_file(const std::string& name) {
    const char* dir = std::getenv("CCODE_DATA_DIR");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + name;
}

bool cli_available() {
    return std::getenv("CCODE_CLI_PATH") != nullptr && std::getenv("CCODE_DATA_DIR") != nullptr;
}

} // namespace

TEST_CASE("field descriptions round-trip") {
    const Field& f3 = Field::get(3, 1);
    Json j3 = field_to_json(f3);
    CHECK(j3["p"] == 3);
    CHECK(j3["s"] == 1);
    CHECK_FALSE(j3.contains("modulus"));
    CHECK(&parse_field(j3) == &f3);

    const Field& f4 = Field::get(2, 2);
    Json j4 = field_to_json(f4);
    CHECK(j4["modulus"] == Json::array({1, 1, 1}));
    CHECK(&parse_field(j4) == &f4);

    CHECK_THROWS_AS(parse_field(Json::object()), UsageError);
    CHECK_THROWS_AS(parse_field(Json{{"p", 4}}), UsageError);
}

TEST_CASE("encoder descriptions round-trip") {
    PolyMatrix g = demo_encoder();
    Json j = encoder_to_json(g);
    CHECK(j["k"] == 2);
    CHECK(j["n"] == 3);
    CHECK(j["G"][0][0] == Json::array({1, 0, 1}));
    PolyMatrix back = parse_encoder(j);
    CHECK(encoder_to_json(back) == j);
}

TEST_CASE("malformed encoder descriptions are rejected") {
    Json good = encoder_to_json(demo_encoder());

    Json missing = good;
    missing.erase("field");
    CHECK_THROWS_AS(parse_encoder(missing), UsageError);

    Json ragged = good;
    ragged["G"][0].erase(2); // row shorter than n
    CHECK_THROWS_AS(parse_encoder(ragged), UsageError);

    Json bad_index = good;
    bad_index["G"][0][0][0] = 3; // not a canonical index mod 3
    CHECK_THROWS_AS(parse_encoder(bad_index), UsageError);

    Json not_list = good;
    not_list["G"][1][2] = "zero";
    CHECK_THROWS_AS(parse_encoder(not_list), UsageError);

    Json wrong_k = good;
    wrong_k["k"] = 1;
    CHECK_THROWS_AS(parse_encoder(wrong_k), UsageError);
}

TEST_CASE("grid serialization is sparse and sorted") {
    WamZ w = compute_wam(build_ccf(demo_encoder()));
    Json j = wam_to_json(w);
    CHECK(j["q"] == 3);
    CHECK(j["delta"] == 2);
    CHECK(j["n"] == 3);
    CHECK(j["order"] == "lex-msb-left");
    REQUIRE(j["entries"].size() == 27);
    CHECK(j["entries"][0] == Json::array({0, 0, Json::array({1, 0, 2})}));
    long long prev = -1;
    for (const Json& e : j["entries"]) {
        long long key = e[0].get<long long>() * 9 + e[1].get<long long>();
        CHECK(key > prev);
        prev = key;
    }
}

TEST_CASE("certificate serialization carries the witness matrices") {
    MwCertificate cert = verify_macwilliams(demo_encoder());
    Json j = mw_certificate_to_json(cert);
    CHECK(j["identity"] == "module-macwilliams");
    CHECK(j["pass"] == true);
    CHECK(j["p_matrix"] == Json::array({Json::array({1, 1}), Json::array({1, 2})}));
    CHECK(j["n_matrix"] == Json::array({Json::array({2, 0}), Json::array({1, 0})}));
    CHECK(j["dual_n_matrix"] == Json::array({Json::array({1, 0}), Json::array({2, 0})}));
    CHECK(j["first_mismatch"].is_null());

    SequenceCertificate seq = verify_sequence_macwilliams(demo_encoder());
    Json js = sequence_certificate_to_json(seq);
    CHECK(js["identity"] == "sequence-macwilliams");
    CHECK(js["pass"] == true);
    CHECK(js["r_matrix"] == Json::array({Json::array({0, 1}), Json::array({1, 0})}));
}

TEST_CASE("json files are read with validation") {
    CHECK_THROWS_AS(read_json_file("/nonexistent/path.json"), UsageError);
    std::string path = "/tmp/ccode_bad_json_test.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(read_json_file(path), UsageError);
    std::remove(path.c_str());
}

TEST_CASE("cli verifies the sample pair" * doctest::skip(!cli_available())) {
    std::string in = data_file("sample_f3.json");
    CliResult r = run_cli("verify-macwilliams " + in + " --dual " + data_file("sample_f3_dual.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("\"identity\":\"module-macwilliams\"") != std::string::npos);
    CHECK(r.out.find("\"pass\":true") != std::string::npos);

    CliResult again = run_cli("verify-macwilliams " + in);
    CHECK(again.code == 0);
    CliResult third = run_cli("verify-macwilliams " + in);
    CHECK(third.out == again.out); // byte-identical reruns

    CliResult seq = run_cli("verify-sequence " + in);
    CHECK(seq.code == 0);
    CHECK(seq.out.find("\"pass\":true") != std::string::npos);

    CliResult inv = run_cli("check-invariants " + in);
    CHECK(inv.code == 0);
}

TEST_CASE("cli pretty output" * doctest::skip(!cli_available())) {
    std::string in = data_file("sample_f3.json");
    CliResult wam = run_cli("wam " + in + " --format pretty");
    CHECK(wam.code == 0);
    CHECK(wam.out.find("states: 9 (order lex-msb-left)") != std::string::npos);
    CHECK(wam.out.find("[0][0] = 1 + 2*W^2") != std::string::npos);

    CliResult info = run_cli("info " + in + " --format pretty");
    CHECK(info.code == 0);
    CHECK(info.out.find("forney indices: 0 2") != std::string::npos);
    CHECK(info.out.find("basic: yes") != std::string::npos);

    CliResult mw = run_cli("mw-transform --poly 1/3,2,4,8/3 --n 3 --q 3 --format pretty");
    CHECK(mw.code == 0);
    CHECK(mw.out == "9\n");

    CliResult ver = run_cli("verify-macwilliams " + in + " --format pretty");
    CHECK(ver.code == 0);
    CHECK(ver.out.find("PASS module identity over GF(3)") != std::string::npos);
}

TEST_CASE("cli failure modes use exit code 2" * doctest::skip(!cli_available())) {
    CHECK(run_cli("verify-macwilliams /nonexistent.json").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("wam").code == 2); // no input
    std::string in = data_file("sample_f3.json");
    // wrong shape for a dual of a 2x3 encoder
    CHECK(run_cli("verify-macwilliams " + in + " --dual " + in).code == 2);
    CHECK(run_cli("mw-transform --poly 1,0,0,0,1 --n 3 --q 3").code == 2);
    CHECK(run_cli("wam " + in + " --format yaml").code == 2);
}

TEST_CASE("cli writes certificates and output files" * doctest::skip(!cli_available())) {
    std::string in = data_file("sample_f3.json");
    std::string cert_path = "/tmp/ccode_cert_test.json";
    std::string out_path = "/tmp/ccode_out_test.json";
    CliResult r = run_cli("verify-macwilliams " + in + " --cert " + cert_path + " --out " + out_path);
    CHECK(r.code == 0);
    CHECK(r.out.empty()); // redirected
    Json cert = read_json_file(cert_path);
    CHECK(cert["pass"] == true);
    CHECK(cert["entries_checked"] == 81);
    Json out = read_json_file(out_path);
    CHECK(out == cert);
    std::remove(cert_path.c_str());
    std::remove(out_path.c_str());
}
