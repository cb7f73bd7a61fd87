#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "slocc/cli.hpp"

using namespace slocc;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("slocc-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_CASE("complex literals") {
    CHECK(parse_complex("1.5") == Complex(1.5, 0));
    CHECK(parse_complex("-2") == Complex(-2, 0));
    CHECK(parse_complex("i") == Complex(0, 1));
    CHECK(parse_complex("-i") == Complex(0, -1));
    CHECK(parse_complex("2i") == Complex(0, 2));
    CHECK(parse_complex("1+2i") == Complex(1, 2));
    CHECK(parse_complex("1.5-0.5i") == Complex(1.5, -0.5));
    CHECK(parse_complex("1e-3+2e2i") == Complex(1e-3, 2e2));
    CHECK(parse_complex("(1,2)") == Complex(1, 2));
    CHECK_THROWS_AS(parse_complex("fish"), std::exception);
}

TEST_CASE("demo then roots") {
    TempDir tmp;
    const std::string ghz = tmp.file("ghz3.json");
    CHECK(run({"demo", "ghz3", "--output", ghz}) == 0);

    std::string text;
    CHECK(run({"roots", ghz}, &text) == 0);
    CHECK(text.find("inf") != std::string::npos);

    std::string w_text;
    const std::string w3 = tmp.file("w3.json");
    CHECK(run({"demo", "w3", "--output", w3}) == 0);
    CHECK(run({"roots", w3}, &w_text) == 0);
    CHECK(w_text.find("(x2)") != std::string::npos);
}

TEST_CASE("bloch export is valid JSON with four roots per qubit") {
    TempDir tmp;
    const std::string state = tmp.file("ghzw4.json");
    const std::string bloch = tmp.file("bloch.json");
    CHECK(run({"demo", "ghzw4", "--output", state}) == 0);
    CHECK(run({"roots", state, "--qubit", "1", "--export-bloch", bloch}) == 0);

    std::ifstream in(bloch);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["qubit"] == 1);
    CHECK(j[0]["h"] == 4);
    CHECK(j[0]["roots"].size() == 4);
    CHECK(j[0]["bloch"].size() == 4);
}

TEST_CASE("equiv exit codes") {
    TempDir tmp;
    const std::string a = tmp.file("a.json");
    const std::string b = tmp.file("b.json");
    const std::string c = tmp.file("c.json");
    CHECK(run({"demo", "gabcd", "1", "2", "3", "4", "--output", a}) == 0);
    CHECK(run({"demo", "gabcd", "2", "1", "4", "3", "--output", b}) == 0);
    CHECK(run({"demo", "gabcd", "1", "2", "3", "5", "--output", c}) == 0);

    CHECK(run({"equiv", a, b}) == 0);
    CHECK(run({"equiv", a, c}) == 1);

    // Degree-two measure on three qubits: inconclusive by construction.
    const std::string w = tmp.file("w.json");
    const std::string ghz = tmp.file("ghz.json");
    CHECK(run({"demo", "w3", "--output", w}) == 0);
    CHECK(run({"demo", "ghz3", "--output", ghz}) == 0);
    std::string err;
    CHECK(run({"equiv", w, ghz}, nullptr, &err) == 3);
    CHECK(err.find("degree") != std::string::npos);

    CHECK(run({"equiv", tmp.file("missing.json"), a}) == 2);
}

TEST_CASE("equiv verifies its own witness JSON") {
    TempDir tmp;
    const std::string a = tmp.file("a.json");
    const std::string b = tmp.file("b.json");
    CHECK(run({"demo", "gabcd", "1", "2", "3", "4", "--output", a}) == 0);
    CHECK(run({"demo", "gabcd", "-1", "-2", "3", "4", "--output", b}) == 0);

    std::string text;
    CHECK(run({"equiv", a, b, "--json"}, &text) == 0);
    const nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j["outcome"] == "equivalent");
    CHECK(j["witness"].size() == 4);
}

TEST_CASE("normal-form command") {
    TempDir tmp;
    const std::string state = tmp.file("ghzw4.json");
    const std::string out_path = tmp.file("nf.json");
    CHECK(run({"demo", "ghzw4", "--output", state}) == 0);

    std::string text;
    CHECK(run({"normal-form", state, "--output", out_path}, &text) == 0);
    CHECK(text.find("rho") != std::string::npos);

    std::ifstream in(out_path);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    CHECK(j["operators"].size() == 4);
    CHECK(j["max_reduction_deviation"].get<double>() <= 1e-8);

    // Non-generic input: |0000> + |0111> is a product on qubit 1.
    const std::string product = tmp.file("product.json");
    nlohmann::json pj{{"n", 4}, {"amps", nlohmann::json::array()}};
    for (int i = 0; i < 16; ++i)
        pj["amps"].push_back({i == 0 || i == 7 ? 1.0 : 0.0, 0.0});
    std::ofstream(product) << pj.dump();
    CHECK(run({"normal-form", product}) == 3);
}

TEST_CASE("gabcd-orbit command") {
    std::string text;
    CHECK(run({"gabcd-orbit", "1", "2", "3", "4"}, &text) == 0);
    const nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j["count"] == 192);
    CHECK(j["tuples"].size() == 192);

    // Identical invocations produce identical bytes.
    std::string again;
    CHECK(run({"gabcd-orbit", "1", "2", "3", "4"}, &again) == 0);
    CHECK(text == again);

    CHECK(run({"gabcd-orbit", "1", "1", "2", "3"}) == 3);
    CHECK(run({"gabcd-orbit", "i", "2i", "3", "4"}, &text) == 0);
    CHECK(nlohmann::json::parse(text)["count"] == 192);
}

TEST_CASE("roots of a degenerate state exit with the non-generic code") {
    TempDir tmp;
    // |0>|000> as a 4-qubit state: the three-tangle pencil vanishes.
    const std::string path = tmp.file("product.json");
    nlohmann::json j{{"n", 4}, {"amps", nlohmann::json::array()}};
    for (int i = 0; i < 16; ++i) j["amps"].push_back({i == 0 ? 1.0 : 0.0, 0.0});
    std::ofstream(path) << j.dump();

    std::string err;
    CHECK(run({"roots", path}, nullptr, &err) == 3);
    CHECK(err.find("non-generic") != std::string::npos);
}

TEST_CASE("usage errors exit with the I/O code") {
    CHECK(run({"no-such-command"}) == 2);
    CHECK(run({"roots"}) == 2);
    CHECK(run({}) == 2);
}
