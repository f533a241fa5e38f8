#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(TRIFREE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    const int raw = ::pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_CASE("generate")
{
    const Run g6 = run("generate --k 1 --ell 1 --format graph6");
    CHECK(g6.status == 0);
    CHECK(g6.out == "LRdKH?HC?G`??`\n");

    const Run dot = run("generate --k 1 --ell 0 --format dot");
    CHECK(dot.status == 0);
    for (const char* label : {"\"u\"", "\"v\"", "\"v1\"", "\"v2\""})
        CHECK(dot.out.find(label) != std::string::npos);

    const Run json = run("generate --k 2 --ell 1 --json");
    CHECK(json.status == 0);
    CHECK(nlohmann::json::parse(json.out)["vertex_count"] == 19);

    CHECK(run("generate --k 0 --ell 1").status == 2);
    CHECK(run("generate --k 1 --ell 1 --format png").status == 2);
    CHECK(run("generate --k 1 --ell 1 -o /nonexistent-dir/x.json").status == 3);
    CHECK(run("generate --bogus").status == 2);
}

TEST_CASE("count")
{
    const Run dp = run("count --k 1 --ell 1 --method dp --full");
    CHECK(dp.status == 0);
    CHECK(dp.out.find("count: 1056") != std::string::npos);
    CHECK(dp.out.find("bit_length: 11") != std::string::npos);

    const Run brute = run("count --k 1 --ell 1 --method brute --full");
    CHECK(brute.status == 0);
    CHECK(brute.out.find("count: 1056") != std::string::npos);

    const Run pinned = run("count --k 1 --ell 1 --fix-u 2 --fix-v 3 --full");
    CHECK(pinned.out.find("count: 168") != std::string::npos);
    const Run pinned_brute = run("count --k 1 --ell 1 --method brute --fix-u 2 --fix-v 3 --full");
    CHECK(pinned_brute.out.find("count: 168") != std::string::npos);

    const Run json = run("count --k 5 --ell 8 --json");
    CHECK(json.status == 0);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["count"]["bit_length"].get<int>() > 1000);

    CHECK(run("count --k 5 --ell 8 --method brute").status == 2);
    CHECK(run("count --k 1 --ell 1 --method magic").status == 2);
    CHECK(run("count --k 1 --ell 1 --fix-u 4").status == 2);
}

TEST_CASE("verify")
{
    const Run lemma2 = run("verify --suite lemma2");
    CHECK(lemma2.status == 0);
    CHECK(lemma2.out.find("84/84 colorings classified") != std::string::npos);

    const Run theorem = run("verify --suite theorem --ell-max 8 --json");
    CHECK(theorem.status == 0);
    const auto j = nlohmann::json::parse(theorem.out);
    CHECK(j["pass"] == true);
    CHECK(j["suites"][0]["checks"].size() == 8);

    CHECK(run("verify --suite lemma3 --ell-max 0").status == 2);
    CHECK(run("verify --suite nope").status == 2);
}

TEST_CASE("verify reports failures with exit 1")
{
    const std::string cmd = std::string("TRIFREE_BIT_BUDGET=100 ") + TRIFREE_CLI_PATH + " verify --suite eq3 --ell-max 3";
    const int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(raw) == 1);
}

TEST_CASE("report output is deterministic")
{
    const Run a = run("report --ell-max 4 --json --decimal");
    const Run b = run("report --ell-max 4 --json --decimal");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["rows"].size() == 4);
    CHECK(run("report --ell-min 3 --ell-max 2").status == 0);
}
