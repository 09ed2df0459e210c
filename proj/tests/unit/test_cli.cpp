#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "clq_cli/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = clq::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "json"});
    const Run r = run(args);
    auto j = nlohmann::json::parse(r.out);
    CHECK((r.code == 0) == (j["status"] == "pass"));
    return j;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("dims") {
        const Run r = run({"dims", "--family", "NC", "--magma", "N2", "--max-arity", "5"});
        CHECK(r.code == 0);
        CHECK(r.out.find("1 8 48 352 2880") != std::string::npos);
        const auto j = run_json({"dims", "--family", "NC", "--magma", "N2", "--max-arity", "5"});
        CHECK(j["command"] == "dims");
        CHECK(j["data"]["dims"] == nlohmann::json::array({1, 8, 48, 352, 2880}));
        CHECK(j["data"]["family"] == "NC");
        CHECK(j["data"]["magma"] == "N2");
        CHECK_FALSE(j.contains("seed"));
    }

    TEST_CASE("csv tables") {
        const Run r = run({"dims", "--family", "Mot", "--magma", "D0", "--max-arity", "4", "--format", "csv"});
        CHECK(r.code == 0);
        CHECK(r.out == "arity,count\n1,1\n2,4\n3,9\n4,21\n");
        CHECK(run({"--format", "csv", "known-ops", "--which", "NCP"}).code == 2);
    }

    TEST_CASE("a failing expectation exits 1 with a counterexample") {
        const auto j = run_json({"dims", "--family", "Cli", "--magma", "N2", "--max-arity", "3", "--expect", "1,8,63"});
        CHECK(j["status"] == "fail");
        CHECK(j["data"]["counterexamples"].size() >= 1);
        CHECK(run({"dims", "--family", "Cli", "--max-arity", "3", "--expect", "1,8,63"}).code == 1);
    }

    TEST_CASE("usage errors exit 2") {
        CHECK(run({}).code == 2);
        CHECK(run({"frobnicate"}).code == 2);
        CHECK(run({"dims", "--max-arity", "zero"}).code == 2);
        CHECK(run({"dims", "--magma", "Q7"}).code == 2);
        CHECK(run({"dims", "--family", "Deg1", "--magma", "N2"}).code == 2);
        CHECK(run({"--format", "yaml", "dims"}).code == 2);
        CHECK(run({"--help"}).code == 0);
    }

    TEST_CASE("verify-axioms") {
        const auto j = run_json({"verify-axioms", "--magma", "D0", "--max-arity", "2", "--symmetries"});
        CHECK(j["status"] == "pass");
        CHECK(j["data"]["right_cancellable"] == false);
        CHECK(j["data"].contains("collision"));
        CHECK(run({"verify-axioms", "--magma", "D0", "--max-arity", "2", "--family", "Bub"}).code == 0);
    }

    TEST_CASE("normal forms and relations") {
        const auto j = run_json({"normal-forms", "--magma", "N2", "--arity", "3"});
        CHECK(j["data"]["count"] == 48);
        CHECK(j["data"]["normal_forms"].size() == 48);
        const auto rel = run_json({"relations", "--magma", "N2"});
        CHECK(rel["data"]["rank"] == 80);
        CHECK(rel["data"]["dual_rank"] == 48);
    }

    TEST_CASE("hilbert-check") {
        CHECK(run({"hilbert-check", "--which", "NC", "--m", "2", "--order", "5"}).code == 0);
        CHECK(run({"hilbert-check", "--which", "Koszul", "--m", "2"}).code == 0);
        CHECK(run({"hilbert-check", "--which", "Koszul"}).code == 2);
        CHECK(run({"hilbert-check", "--which", "Nope"}).code == 2);
    }

    TEST_CASE("seeded commands echo their seed") {
        const auto j = run_json({"--seed", "9", "morphism-check", "--kind", "frac", "--samples", "20"});
        CHECK(j["status"] == "pass");
        CHECK(j["seed"] == 9);
        const auto k = run_json({"known-ops", "--which", "FF4"});
        CHECK(k["seed"] == 1);
        CHECK(k["data"]["FF4"]["dims"] == nlohmann::json::array({1, 4, 24, 176, 1440}));
    }

    TEST_CASE("other morphism checks and bases") {
        CHECK(run({"morphism-check", "--kind", "schroder", "--magma", "N2", "--max-arity", "3"}).code == 0);
        CHECK(run({"morphism-check", "--kind", "hadamard", "--magma", "N2", "--magma2", "D0", "--max-arity", "2"}).code == 0);
        CHECK(run({"bases-check", "--max-arity", "2"}).code == 0);
        CHECK(run({"closure", "--magma", "D0", "--gen", "clique 2 { 1-3:0 }", "--max-arity", "3", "--list"}).code == 0);
    }
}
