#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// Run the CLI binary with stderr discarded; stdout is the interface.
RunResult run(const std::string& args) {
    std::string cmd = std::string(POWCOL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "powcol_cli_tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
    fs::path path = scratch_dir() / name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("gen, check and classify a trivial table") {
    fs::path desc = write_file(
        "trivial.json",
        R"({"kind":"trivial","lambda":2,"kappa":3,"i":0,"pi":[0,1,2]})");
    fs::path table = scratch_dir() / "trivial_table.json";

    auto gen = run("gen --desc " + desc.string() + " --out " + table.string());
    CHECK(gen.exit_code == 0);
    json gen_doc = json::parse(gen.out);
    CHECK(gen_doc["points"] == 9);
    CHECK(gen_doc["mu"] == 3);

    auto check = run("check " + table.string() +
                     " --props proper,tight,ctight,minimal,strong-uniform,"
                     "weak-uniform,lawful-classes,nu-tight:2");
    CHECK(check.exit_code == 0);
    json verdicts = json::parse(check.out)["verdicts"];
    for (const auto& [name, ok] : verdicts.items()) CHECK(ok == true);

    auto classify = run("classify " + table.string());
    CHECK(classify.exit_code == 0);
    json result = json::parse(classify.out)["result"];
    CHECK(result["form"] == "principal");
    CHECK(result["coordinate"] == 0);
    CHECK(result["permutation"] == json::array({0, 1, 2}));
}

TEST_CASE("failed properties exit 1 and carry witnesses") {
    fs::path table = write_file(
        "shifted.json", R"({"lambda":1,"kappa":3,"mu":4,"colors":[1,2,3]})");
    auto check = run("check " + table.string() + " --props proper,minimal,tight");
    CHECK(check.exit_code == 1);
    json doc = json::parse(check.out);
    CHECK(doc["verdicts"]["proper"] == true);
    CHECK(doc["verdicts"]["minimal"] == false);
    CHECK(doc["verdicts"]["tight"] == false);
    CHECK(doc["witnesses"]["minimal"]["beta"] == 0);
    CHECK(doc["witnesses"]["minimal"]["point"] == json::array({0}));

    // a split color class leaves some color unreachable from (0,0)
    fs::path split = write_file(
        "split.json", R"({"lambda":2,"kappa":2,"mu":3,"colors":[0,1,0,2]})");
    auto ctight = run("check " + split.string() + " --props proper,ctight");
    CHECK(ctight.exit_code == 1);
    json split_doc = json::parse(ctight.out);
    CHECK(split_doc["verdicts"]["proper"] == true);
    CHECK(split_doc["verdicts"]["ctight"] == false);
    CHECK(split_doc["witnesses"]["ctight"]["point"] == json::array({0, 0}));
    CHECK(split_doc["witnesses"]["ctight"]["beta"] == 1);
}

TEST_CASE("the constant table fails proper with the first constant pair") {
    fs::path table = write_file(
        "constant.json",
        R"({"lambda":2,"kappa":3,"mu":1,"colors":[0,0,0,0,0,0,0,0,0]})");
    auto check = run("check " + table.string() + " --props proper");
    CHECK(check.exit_code == 1);
    json doc = json::parse(check.out);
    CHECK(doc["verdicts"]["proper"] == false);
    CHECK(doc["witnesses"]["proper"] ==
          json::array({json::array({0, 0}), json::array({1, 1})}));
}

TEST_CASE("the parity table is proper but not 2-tight") {
    fs::path desc =
        write_file("parity_nu.json", R"({"kind":"parity","k":1,"m":2})");
    fs::path table = scratch_dir() / "parity_nu_table.json";
    REQUIRE(run("gen --desc " + desc.string() + " --out " + table.string())
                .exit_code == 0);
    auto check = run("check " + table.string() + " --props proper,nu-tight:2");
    CHECK(check.exit_code == 1);
    json doc = json::parse(check.out);
    CHECK(doc["verdicts"]["proper"] == true);
    CHECK(doc["verdicts"]["nu-tight:2"] == false);
    CHECK(doc["witnesses"].contains("nu-tight:2"));
}

TEST_CASE("classify recovers the permutation of a recolored trivial table") {
    fs::path desc = write_file(
        "recolored.json",
        R"({"kind":"recolor","perm":[1,2,0],)"
        R"("base":{"kind":"trivial","lambda":2,"kappa":3,"i":0,"pi":[0,1,2]}})");
    fs::path table = scratch_dir() / "recolored_table.json";
    REQUIRE(run("gen --desc " + desc.string() + " --out " + table.string())
                .exit_code == 0);
    auto classify = run("classify " + table.string());
    CHECK(classify.exit_code == 0);
    json result = json::parse(classify.out)["result"];
    CHECK(result["form"] == "principal");
    CHECK(result["coordinate"] == 0);
    CHECK(result["permutation"] == json::array({1, 2, 0}));
}

TEST_CASE("classify reports non-trivial tables with violations") {
    fs::path desc =
        write_file("parity.json", R"({"kind":"parity","k":1,"m":2})");
    fs::path table = scratch_dir() / "parity_table.json";
    REQUIRE(run("gen --desc " + desc.string() + " --out " + table.string())
                .exit_code == 0);

    auto classify = run("classify " + table.string());
    CHECK(classify.exit_code == 1);
    json result = json::parse(classify.out)["result"];
    CHECK(result["form"] == "non_trivial");
    CHECK(result["violations"].size() == 3);  // one per coordinate
}

TEST_CASE("eval") {
    fs::path table = write_file(
        "eval_table.json",
        R"({"lambda":2,"kappa":3,"mu":3,"colors":[0,1,2,0,1,2,0,1,2]})");
    auto direct = run("eval --table " + table.string() + " --point 2,1");
    CHECK(direct.exit_code == 0);
    CHECK(direct.out == "2\n");

    fs::path theorem10 =
        write_file("theorem10.json", R"({"kind":"theorem10"})");
    auto zero = run("eval --desc " + theorem10.string() + " --point \"0;0\"");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out == "0\n");

    auto ranked =
        run("eval --desc " + theorem10.string() + " --point \"2;0\" --rank");
    CHECK(ranked.exit_code == 0);
    CHECK(ranked.out == "4 1\n");

    // flipping the last in-scope coordinate changes the color
    auto even = run("eval --desc " + theorem10.string() + " --point \"2,0,0;0\"");
    auto odd = run("eval --desc " + theorem10.string() + " --point \"2,0,1;0\"");
    CHECK(even.exit_code == 0);
    CHECK(odd.exit_code == 0);
    CHECK(even.out != odd.out);

    CHECK(run("eval --table " + table.string() + " --point 3,0").exit_code == 2);

    // lazy colorings reject finite points, and the two sources are exclusive
    CHECK(run("eval --desc " + theorem10.string() + " --point 2,0").exit_code ==
          2);
    CHECK(run("eval --table " + table.string() + " --desc " +
              theorem10.string() + " --point 0,0")
              .exit_code == 2);
}

TEST_CASE("minimize") {
    fs::path table = write_file(
        "to_minimize.json", R"({"lambda":1,"kappa":3,"mu":4,"colors":[1,2,3]})");
    fs::path out = scratch_dir() / "minimized.json";
    auto result = run("minimize " + table.string() + " --out " + out.string());
    CHECK(result.exit_code == 0);
    CHECK(json::parse(result.out)["lowered_entries"] == 3);

    std::ifstream in(out);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    CHECK(json::parse(text)["colors"] == json::array({0, 1, 2}));

    // the output is a fixpoint and passes the minimal checker
    CHECK(run("check " + out.string() + " --props minimal").exit_code == 0);
    fs::path again = scratch_dir() / "minimized_again.json";
    auto rerun = run("minimize " + out.string() + " --out " + again.string());
    CHECK(rerun.exit_code == 0);
    CHECK(json::parse(rerun.out)["lowered_entries"] == 0);
}

TEST_CASE("oracle streams every proper table") {
    auto result = run("oracle --sig 2,3,3");
    CHECK(result.exit_code == 0);
    std::size_t lines = 0;
    for (char c : result.out)
        if (c == '\n') ++lines;
    CHECK(lines == 12);

    CHECK(run("oracle --sig 2,3,3 --budget 10").exit_code == 2);
}

TEST_CASE("usage errors exit 2") {
    fs::path odd = write_file("odd.json", R"({"kind":"parity","k":1,"m":3})");
    fs::path out = scratch_dir() / "never.json";
    CHECK(run("gen --desc " + odd.string() + " --out " + out.string())
              .exit_code == 2);
    CHECK(run("check missing_file.json --props proper").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("check").exit_code == 2);
}

TEST_CASE("sampled mix closure requires a seed and is deterministic") {
    fs::path desc = write_file(
        "trivial2.json",
        R"({"kind":"trivial","lambda":2,"kappa":3,"i":1,"pi":[2,0,1]})");
    fs::path table = scratch_dir() / "trivial2_table.json";
    REQUIRE(run("gen --desc " + desc.string() + " --out " + table.string())
                .exit_code == 0);

    CHECK(run("check " + table.string() + " --props mix-closure:50").exit_code ==
          2);
    auto first =
        run("check " + table.string() + " --props mix-closure:50 --seed 7");
    CHECK(first.exit_code == 0);
    auto second =
        run("check " + table.string() + " --props mix-closure:50 --seed 7");
    CHECK(second.out == first.out);
}
