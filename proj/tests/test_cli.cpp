#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "linspace/cli.hpp"
#include "linspace/io.hpp"

using namespace linspace;
using nlohmann::json;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

Outcome call(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    Outcome o;
    o.code = cli::run(args, in, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

const std::string kBroken = R"({"points": 4, "lines": [[0,1,2],[0,3],[1,3]]})";

}  // namespace

TEST_CASE("gen output pipes into classify") {
    const Outcome gen = call({"gen", "plane", "2"});
    REQUIRE(gen.code == 0);
    const Outcome cls = call({"classify", "-"}, gen.out);
    REQUIRE(cls.code == 0);
    const json r = cls.report();
    CHECK(r.at("verdict") == "ok");
    CHECK(r.at("classification").at("verdict") == "projective_plane");
    CHECK(r.at("classification").at("k") == 3);
    CHECK(r.at("instance").at("n") == 7);
    CHECK(r.at("instance").at("m") == 7);

    const Outcome np = call({"gen", "near-pencil", "5"});
    CHECK(parse_instance(np.out) == near_pencil(5).structure());
}

TEST_CASE("enum") {
    const Outcome j = call({"enum", "4", "--json"});
    REQUIRE(j.code == 0);
    CHECK(json::parse(j.out).size() == 5);

    const Outcome text = call({"enum", "4"});
    REQUIRE(text.code == 0);
    std::istringstream lines(text.out);
    std::string line;
    std::size_t instances = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("#", 0) == 0) {
            CHECK(line == "# labeled 5");
            continue;
        }
        validate(parse_instance(line));
        ++instances;
    }
    CHECK(instances == 5);

    const Outcome canon = call({"enum", "6", "--canonical", "--json", "--jobs", "2"});
    REQUIRE(canon.code == 0);
    CHECK(json::parse(canon.out).size() == 9);

    CHECK(call({"enum", "5", "--jobs", "3"}).out == call({"enum", "5"}).out);
    CHECK(call({"enum", "9"}).code == cli::kExitInvalidInput);
}

TEST_CASE("invalid input exits with 1 and names the error") {
    const Outcome o = call({"validate", "-"}, kBroken);
    CHECK(o.code == cli::kExitInvalidInput);
    const json r = o.report();
    CHECK(r.at("verdict") == "invalid-input");
    CHECK(r.at("error").at("kind") == "PairUncovered");
    CHECK(r.at("error").at("pair") == json::array({2, 3}));

    CHECK(call({"validate", "-"}, "3\n0 1 2\n").report().at("error").at("kind") == "LineEqualsWholeSet");
    CHECK(call({"validate", "-"}, "2\n0 1\n").report().at("error").at("kind") == "TooFewPoints");
    CHECK(call({"validate", "-"}, "3\n0 1\n0 2\n1 2\n0 1\n").report().at("error").at("kind") ==
          "PairMultiplyCovered");
    CHECK(call({"validate", "-"}, "not an instance").code == cli::kExitInvalidInput);
    CHECK(call({"validate", "/nonexistent/file"}).code == cli::kExitInvalidInput);
    CHECK(call({"gen", "plane", "4"}).code == cli::kExitInvalidInput);
}

TEST_CASE("usage errors") {
    CHECK(call({}).code == cli::kExitInvalidInput);
    CHECK(call({"frobnicate"}).code == cli::kExitInvalidInput);
    CHECK(call({"bkc", "-", "--variant", "cubic"}).code == cli::kExitInvalidInput);
    CHECK(call({"--help"}).code == cli::kExitOk);
}

TEST_CASE("report commands on the Fano plane") {
    const std::string fano = to_text(projective_plane(2).structure());

    const json cert = call({"certify", "-"}, fano).report();
    CHECK(cert.at("verdict") == "ok");
    CHECK(cert.at("certificates").at("proof_trace").at("ineq2_lhs") == 12);
    CHECK(cert.at("certificates").at("matching").at("sdr").size() == 7);

    const json gram = call({"gram", "-"}, fano).report();
    CHECK(gram.at("gram").at("det") == "576");
    CHECK(gram.at("gram").at("incidence_rank") == 7);

    const json hanani = call({"hanani", "-"}, fano).report();
    CHECK(hanani.at("hanani").at("p") == 7);
    CHECK(hanani.at("min_degree_bounds").at("equality_chain") == true);

    const json bkc = call({"bkc", "-", "--variant", "shifted"}, fano).report();
    CHECK(bkc.at("bkc").at("variant") == "shifted");
    CHECK(bkc.at("bkc").at("square_equalities") == true);
}

TEST_CASE("gram with lambda 2") {
    const std::string design = "4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n";
    const Outcome o = call({"gram", "-", "--lambda", "2"}, design);
    REQUIRE(o.code == 0);
    const json r = o.report();
    CHECK(r.at("gram").at("det") == "9");
    CHECK(r.at("gram").at("det_closed_form") == "9");
    CHECK(r.at("gram").at("rank") == 4);
    CHECK(r.at("gram").at("m_ge_n") == true);

    const Outcome dup = call({"gram", "-", "--lambda", "2"}, design + "0 1 2\n");
    CHECK(dup.code == cli::kExitInvalidInput);
    CHECK(dup.report().at("error").at("kind") == "PairCoverageNotLambda");
}

TEST_CASE("output is deterministic") {
    const std::string input = to_text(near_pencil(6).structure());
    for (const char* cmd : {"validate", "certify", "classify", "gram", "hanani", "bkc"}) {
        const Outcome a = call({cmd, "-"}, input);
        const Outcome b = call({cmd, "-"}, input);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}
