#include <doctest.h>

#include <sstream>
#include <string>

#include "bitonic/cli.hpp"
#include "bitonic/graph_io.hpp"
#include "fixtures.hpp"

using namespace bitonic;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_graph(const std::string& name, const EmbeddedStGraph& g) {
    write_file(name, to_text(g));
    return name;
}

}  // namespace

TEST_CASE("check") {
    const auto tri = temp_graph("cli_tri.txt", fixtures::triangle());
    const auto f1 = temp_graph("cli_f1.txt", fixtures::f1());
    auto r = run({"check", tri});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "accept\n");
    r = run({"check", f1});
    CHECK(r.code == kExitRejected);
    CHECK(r.out == "reject 0 1 2\n");
    r = run({"check", "missing.txt"});
    CHECK(r.code == kExitInputError);
    write_file("cli_cycle.txt", "3 0 2\n0: 1\n1: 0\n");
    r = run({"check", "cli_cycle.txt"});
    CHECK(r.code == kExitInputError);
    CHECK(r.err.find("NotAcyclic") != std::string::npos);
    CHECK(run({"frobnicate"}).code == kExitInputError);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("order and split") {
    const auto f1 = temp_graph("cli_f1.txt", fixtures::f1());
    const auto sf1 = temp_graph("cli_sf1.txt", fixtures::split_f1());
    CHECK(run({"order", f1}).code == kExitRejected);
    auto r = run({"order", sf1});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("# augment 5 2\n# augment 1 3\n", 0) == 0);
    r = run({"split", f1});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "split 0 3\ntotal 1\n");
    r = run({"split", "--emit-graph", f1});
    CHECK(r.out.find(to_text(fixtures::split_f1()) + "dummy 5 0 3\n") != std::string::npos);
}

TEST_CASE("draw then validate") {
    const auto f1 = temp_graph("cli_f1.txt", fixtures::f1());
    const auto tri = temp_graph("cli_tri.txt", fixtures::triangle());
    auto r = run({"draw", "--mode", "straight", f1});
    CHECK(r.code == kExitRejected);
    CHECK(r.err.find("reject 0 1 2") != std::string::npos);

    r = run({"draw", "--mode", "poly", "-o", "cli_f1.draw", "--svg", "cli_f1.svg", f1});
    CHECK(r.code == kExitOk);
    CHECK(read_file("cli_f1.svg").find("<svg") == 0);
    r = run({"validate", f1, "cli_f1.draw"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("planar yes") != std::string::npos);
    r = run({"validate", "--json", f1, "cli_f1.draw"});
    CHECK(r.out.find("\"upward\":true") != std::string::npos);
    // Bends are not allowed in straight-line mode.
    CHECK(run({"validate", "--mode", "straight", f1, "cli_f1.draw"}).code == kExitRejected);

    write_file("cli_bad.draw", "0 0 0\n1 0 1\n2 0 2\n");
    r = run({"validate", tri, "cli_bad.draw"});
    CHECK(r.code == kExitRejected);
    CHECK(r.out.find("violation") != std::string::npos);
}

TEST_CASE("gen is deterministic") {
    const auto a = run({"gen", "--n", "40", "--seed", "5"});
    const auto b = run({"gen", "--n", "40", "--seed", "5"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("# generator mt19937_64 seed 5 n 40\n", 0) == 0);
    CHECK(parse_graph(a.out).vertex_count() == 40);
    const auto j = run({"gen", "--n", "10", "--seed", "5", "--format", "json"});
    CHECK(parse_graph(j.out).vertex_count() == 10);
    CHECK(run({"gen", "--n", "1"}).code == kExitInputError);
}

TEST_CASE("bench writes csv") {
    const auto r = run({"bench", "--sizes", "50,100", "--repeats", "1", "--validate"});
    CHECK(r.code == kExitOk);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,edges,splits,bends,width,height,ms_total");
    std::size_t rows = 0;
    while (std::getline(in, line)) rows += !line.empty();
    CHECK(rows == 2);
}
