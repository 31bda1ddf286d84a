#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "algkit/cli.hpp"

using namespace algkit;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("zd subcommand output") {
    CliRun r = run({"H(2)", "zd", "1+j"});
    CHECK(r.code == 0);
    CHECK(r.out == "zero divisor: true; Ann basis: [1-j]\n");

    CliRun neg = run({"H(2)", "zd", "2+j"});
    CHECK(neg.code == 0);  // a mathematical negative still answers
    CHECK(neg.out == "zero divisor: false; Ann basis: []\n");
}

TEST_CASE("ann subcommand reports the nildegree") {
    CliRun r = run({"G(3)", "ann", "e^2"});
    CHECK(r.code == 0);
    CHECK(r.out == "Ann basis: [e, e^2]; nildegree: 2\n");
}

TEST_CASE("poly ann names the annihilator generator") {
    CliRun r = run({"G(2)", "poly", "ann", "(e)*z^2 + (e)"});
    CHECK(r.code == 0);
    CHECK(r.out == "Ann(f) = Ann(e) * A[z]; Ann basis: [e]\n");
}

TEST_CASE("repr subcommand prints the circulant matrix") {
    CliRun r = run({"H(3)", "repr", "1+2*j+3*j^2"});
    CHECK(r.code == 0);
    CHECK(r.out == "[1, 3, 2]\n[2, 1, 3]\n[3, 2, 1]\n");
}

TEST_CASE("nilposet --dot emits four nodes for the 3-nil numbers") {
    CliRun r = run({"G(3)", "nilposet", "--dot"});
    CHECK(r.code == 0);
    CHECK(r.out.find("digraph nilposet") != std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '[') == 4);  // one label per node
}

TEST_CASE("nilposet --lattice reports the counterexample witness") {
    CliRun ok = run({"G(4)", "nilposet", "--lattice"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("lattice: true") != std::string::npos);
}

TEST_CASE("info --output json round-trips the algebra") {
    CliRun r = run({"--output", "json", "tensor(G(2),C(2))", "info"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    auto back = algebra_from_json(j);
    CHECK(back->same_table(*parse_algebra_expr("tensor(G(2),C(2))").algebra));
}

TEST_CASE("present prints a parseable canonical presentation") {
    CliRun r = run({"C(2)", "present"});
    CHECK(r.code == 0);
    CHECK(r.out == "R[i]/<i^2+1>\n");
    CliRun r2 = run({"H(3)", "present"});
    CHECK(r2.code == 0);
    CHECK(build(parse_presentation(r2.out.substr(0, r2.out.size() - 1))).algebra->dim() == 3);
}

TEST_CASE("ev evaluates formal polynomials over the presentation generators") {
    CliRun r = run({"H(2)", "ev", "j^2 + j - 1"});
    CHECK(r.code == 0);
    CHECK(r.out == "j\n");
}

TEST_CASE("wedderburn output") {
    CliRun r = run({"H(4)", "wedderburn"});
    CHECK(r.code == 0);
    CHECK(r.out.find("m=2 k=1") != std::string::npos);

    CliRun numeric = run({"--seed", "7", "product(H(1),C(2))", "wedderburn", "--numeric"});
    CHECK(numeric.code == 0);
    CHECK(numeric.out.find("m=1 k=1") != std::string::npos);
    CHECK(numeric.out.find("seed 7") != std::string::npos);

    CliRun json = run({"--output", "json", "H(3)", "wedderburn"});
    CHECK(json.code == 0);
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["m"] == 1);
    CHECK(j["k"] == 1);
    CHECK(j.contains("forward"));
    CHECK(j.contains("inverse"));

    CliRun reject = run({"product(H(1),H(1))", "wedderburn", "--exact"});
    CHECK(reject.code == 1);
}

TEST_CASE("zd-geometry lists component dimensions") {
    CliRun r = run({"H(2)", "zd-geometry"});
    CHECK(r.code == 0);
    CHECK(r.out.find("m=2 k=0") != std::string::npos);
    CHECK(r.out.find("component 1: real, zero-set dimension 1") != std::string::npos);
    CHECK(r.out.find("component 2: real, zero-set dimension 1") != std::string::npos);
}

TEST_CASE("poly subcommands") {
    CliRun div = run({"H(2)", "poly", "div", "z^2", "z - j"});
    CHECK(div.code == 0);
    CHECK(div.out == "q = (1)*z + (j)\nr = (1)\n");

    CliRun eval = run({"H(2)", "poly", "eval", "z^2 - 1", "j"});
    CHECK(eval.code == 0);
    CHECK(eval.out == "0\n");

    CliRun zd = run({"H(2)", "poly", "zd", "(1+j)*z + (1+j)"});
    CHECK(zd.code == 0);
    CHECK(zd.out.find("zero divisor: true") != std::string::npos);
    CHECK(zd.out.find("[1-j]") != std::string::npos);

    CliRun nf = run({"G(2)", "poly", "nilfactor", "(e)*z^2 + (e)"});
    CHECK(nf.code == 0);
    CHECK(nf.out.find("factors: [e]") != std::string::npos);
    CHECK(nf.out.find("reduced: (1)*z^2 + (1)") != std::string::npos);

    CliRun split = run({"G(2)", "poly", "split", "z^2 + (-1-e)"});
    CHECK(split.code == 0);
    CHECK(split.out.find("[exact]") != std::string::npos);

    CliRun none = run({"H(2)", "poly", "split", "z^2 + (j)*z + (j)"});
    CHECK(none.code == 0);
    CHECK(none.out == "split: none\n");
}

TEST_CASE("iso-check reads a map file") {
    const char* path = "iso_check_test_map.json";
    {
        std::ofstream f(path);
        f << R"json({"target": "H(2)", "matrix": [["1", "1/2"], ["0", "1/2"]]})json";
    }
    CliRun r = run({"product(H(1),H(1))", "iso-check", path});
    std::remove(path);
    CHECK(r.code == 0);
    CHECK(r.out == "isomorphism: true\n");
}

TEST_CASE("algebra from a JSON file") {
    const char* path = "algebra_load_test.json";
    {
        std::ofstream f(path);
        f << algebra_to_json(*family(Family::H, 2).algebra).dump();
    }
    CliRun r = run({std::string("@") + path, "zd", "1+j"});
    std::remove(path);
    CHECK(r.code == 0);
    CHECK(r.out.find("zero divisor: true") != std::string::npos);
}

TEST_CASE("noncommutative JSON algebras: info works, zd queries reject") {
    // upper triangular 2x2 matrices: {I, E11, E12}
    const char* path = "noncomm_load_test.json";
    {
        std::ofstream f(path);
        f << R"json({"dim": 3, "basis": ["1", "a", "b"], "unit": 0, "table":
            [[["1","0","0"],["0","1","0"],["0","0","1"]],
             [["0","1","0"],["0","1","0"],["0","0","1"]],
             [["0","0","1"],["0","0","0"],["0","0","0"]]]})json";
    }
    CliRun info = run({std::string("@") + path, "info"});
    CHECK(info.code == 0);
    CHECK(info.out.find("commutative: false") != std::string::npos);
    CliRun zd = run({std::string("@") + path, "zd", "a"});
    std::remove(path);
    CHECK(zd.code == 1);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);                                   // no subcommand
    CHECK(run({"H(2)"}).code == 2);                             // still no subcommand
    CHECK(run({"info"}).code == 2);                             // no algebra
    CHECK(run({"--output", "yaml", "H(2)", "info"}).code == 2); // bad flag value
    CHECK(run({"H(2)", "zd", "q+1"}).code == 1);                // unknown basis label
    CHECK(run({"R[x,y]/<x*y-1>", "info"}).code == 1);           // infinite-dimensional
    CHECK(run({"H(3)", "nilposet"}).code == 1);                 // not unital nil
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("the examples subcommand runs the whole built-in suite") {
    CliRun r = run({"examples"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS]") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 15);  // 14 checks + summary
}
