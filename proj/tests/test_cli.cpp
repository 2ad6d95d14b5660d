#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "twinlcs/json.hpp"
#include "twinlcs/word_io.hpp"

using namespace twinlcs;
using nlohmann::json;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "twinlcs");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json cli_json(std::vector<std::string> args)
{
    args.insert(args.begin(), "--json");
    auto r = cli(std::move(args));
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path temp_path(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / ("twinlcs_test_" + name);
    std::filesystem::remove(p);
    std::filesystem::remove(p.string() + ".csv");
    return p;
}

} // namespace

TEST_CASE("json round trips")
{
    const Word w = parse_word("k=5;w=1,5,2,2");
    json j = w;
    CHECK(j["k"] == 5);
    CHECK(j["letters"] == json({1, 5, 2, 2}));
    CHECK(j.get<Word>() == w);

    MultiSignature s({2, 0, 1});
    json js = s;
    CHECK(js["counts"] == json({2, 0, 1}));
    CHECK(js.get<MultiSignature>() == s);

    auto t = frequency_table(parse_word("1212"), 2);
    json jt = t;
    CHECK(jt["k"] == 2);
    CHECK(jt["L"] == 2);
    auto back = jt.get<FrequencyTable>();
    CHECK(back.freqs == t.freqs);
    CHECK(back.at({1, 2}) == Rational(2, 3));

    auto c = *extract(parse_word("1212"), RoleWord::parse("1122"));
    json jc = c;
    CHECK(jc["roles"] == "1122");
    auto cb = jc.get<TwinCertificate>();
    CHECK(cb.roles == c.roles);
    CHECK(cb.first == c.first);
    jc["roles"] = "1212";
    CHECK_THROWS_AS(jc.get<TwinCertificate>(), std::invalid_argument);

    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("cli lcs")
{
    auto j = cli_json({"lcs", "2143", "3412", "--reversible"});
    CHECK(j["length"] == 1);
    CHECK(j["lcs_reversed"] == 4);
    CHECK(j["lcs_reversible"] == 4);
    j = cli_json({"lcs", "k=3;w=1,2,3,1,2", "k=3;w=3,1,2,1"});
    CHECK(j["length"] == 3);
    CHECK(j["common"] == "k=3;w=1,2,1");
    CHECK(j["positions"][0] == json({1, 2, 4}));
    j = cli_json({"lcs", "--length-only", "1234", "4321"});
    CHECK(j["length"] == 1);
    CHECK(cli({"lcs", "12"}).code == 2);
    CHECK(cli({"--budget-cells", "3", "lcs", "1122", "1212"}).code == 3);
}

TEST_CASE("cli lcs-set reads word files")
{
    auto p = temp_path("words.txt");
    {
        std::ofstream f(p);
        f << "# three permutations\n123\n321\n\n213\n";
    }
    auto j = cli_json({"lcs-set", "@" + p.string(), "--tuple", "2"});
    CHECK(j["pairs"] == json({{3, 1, 2}, {1, 3, 2}, {2, 2, 3}}));
    CHECK(j["lcs_tuple"] == 2);
    CHECK(j["best_subset"] == json({1, 3}));
    j = cli_json({"lcs-set", "@" + p.string(), "--tuple", "3"});
    CHECK(j["lcs_tuple"] == 1);
    CHECK(cli({"lcs-set", "@/nonexistent/file"}).code == 2);
    std::filesystem::remove(p);
}

TEST_CASE("cli twins")
{
    auto j = cli_json({"--zero-based", "twins", "0110010010101101"});
    CHECK(j["length"] == 7);
    CHECK(j["roles"] == "0120111211221222");
    CHECK(j["regular"] == true);
    CHECK(j["stats"]["m"] == 7);
    CHECK(cli_json({"--zero-based", "twins", "--oracle", "01100100101011"})["length"] ==
          cli_json({"--zero-based", "twins", "01100100101011"})["length"]);
    j = cli_json({"twins", "--runs", "1112221"});
    CHECK(j["length"] == 2);
    j = cli_json({"twins", "--blocks", "123123123"});
    CHECK(j.contains("block_lcs"));
    j = cli_json({"twins", "--tuplets", "3", "121212"});
    CHECK(j["length"] == 2);
    j = cli_json({"twins", "1212", "--roles", "1122"});
    CHECK(j["input"]["monotone"] == true);
    CHECK(j["regularized"]["roles"] <= std::string("1122"));
    CHECK(cli({"twins", "1221", "--roles", "1212"}).code == 2);
    CHECK(cli({"twins", "--oracle", "--runs", "1212"}).code == 2);
    CHECK(cli({"twins", "--max-length", "3", "12121212"}).code == 3);
}

TEST_CASE("cli construct")
{
    auto j = cli_json({"construct", "quadratic", "--p", "3", "--verify"});
    CHECK(j["family"] == "quadratic");
    CHECK(j["words"].size() == 3);
    CHECK(j["verification"]["all_hold"] == true);
    CHECK(j["ceilings"][0]["value"] == "10");
    j = cli_json({"construct", "es", "--k", "9", "--s", "2"});
    CHECK(j["params"]["k1"] == 3);
    j = cli_json({"construct", "multiperm", "--s", "2", "--k1", "2", "--k2", "1", "--k3", "2", "--verify"});
    CHECK(j["verification"]["all_hold"] == true);
    j = cli_json({"construct", "stratified", "--k", "2", "--n", "8", "--ms", "1,4"});
    CHECK(j["words"][0] == "k=2;w=1,2,1,2,1,2,1,2");
    CHECK(cli_json({"construct", "tuplet", "--T", "2", "--kappa", "2"})["words"].size() == 4);
    CHECK(cli_json({"construct", "bhn", "--n", "2"})["words"].size() == 4);
    CHECK(cli({"construct", "bhn"}).code == 2);
    CHECK(cli({"construct", "nosuch"}).code == 2);
}

TEST_CASE("cli bound")
{
    auto j = cli_json({"bound", "threshold", "--k", "4"});
    CHECK(j["alpha"].get<double>() <= 0.4932);
    CHECK(j["theta"].get<double>() < 0);
    CHECK(cli_json({"bound", "threshold", "--k", "2"})["alpha"].is_null());
    CHECK(cli_json({"bound", "count", "--n", "12", "--m", "4", "--p", "2", "--z", "1"})["value"] == "5940");
    CHECK(cli_json({"bound", "count", "--n", "12", "--m", "4", "--p", "2", "--z", "1", "--exact-z"})["value"] == "4320");
    CHECK(cli_json({"bound", "prob", "--k", "2", "--n", "12", "--m", "4", "--p", "2", "--z", "1"})["value"] ==
          "1/512");
    j = cli_json({"bound", "union", "--k", "2", "--n", "4", "--m", "2"});
    CHECK(parse_rational(j["value"].get<std::string>()) >= Rational(1, 16));
    j = cli_json({"bound", "theta", "--alpha", "0.5", "--k", "2"});
    CHECK(std::abs(j["total"].get<double>() - 0.18827) < 1e-4);
    j = cli_json({"bound", "constants", "--k", "3"});
    CHECK(std::abs(j["minmax_numeric"].get<double>() - 0.3416876048) < 1e-9);
    CHECK(cli({"bound", "theta", "--alpha", "0.1", "--k", "3"}).code == 2);
    CHECK(cli({"bound"}).code == 2);
}

TEST_CASE("cli experiments are reproducible")
{
    auto p = temp_path("tail.jsonl");
    std::vector<std::string> args = {"--seed", "9", "--out", p.string(), "experiment", "lt-tail", "--k", "3",
                                     "--n", "14", "--alpha", "0.4", "--trials", "50"};
    auto a = cli(args);
    REQUIRE(a.code == 0);
    const std::string first = slurp(p);
    const std::string csv = slurp(p.string() + ".csv");
    std::filesystem::remove(p);
    auto b = cli(args);
    REQUIRE(b.code == 0);
    CHECK(a.out == b.out);
    CHECK(slurp(p) == first);
    CHECK(slurp(p.string() + ".csv") == csv);
    auto record = json::parse(first);
    CHECK(record["schema_version"] == 1);
    CHECK(record["config"]["seed"] == 9);
    CHECK(record["result"]["trials"] == 50);
    CHECK(csv.rfind("schema_version,k,n,alpha", 0) == 0);
    std::filesystem::remove(p);
    std::filesystem::remove(p.string() + ".csv");

    auto j = cli_json({"experiment", "lt-tail", "--k", "2", "--n", "12", "--alpha", "0.5"});
    CHECK(j["exhaustive"] == true);
    CHECK(j["trials"] == 4096);

    j = cli_json({"experiment", "conjecture", "--k", "2", "--starts", "5"});
    CHECK(std::abs(j["value"].get<double>() - 1.5) < 1e-12);
    CHECK(j["counterexample"] == false);
    CHECK(cli({"experiment", "conjecture", "--k", "9"}).code == 3);
}

TEST_CASE("cli verify")
{
    auto r = cli({"verify", "bounds"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS threshold") != std::string::npos);
    CHECK(cli({"verify", "nosuch"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}
