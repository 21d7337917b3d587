#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "arbornet/io.hpp"
#include "arbornet/metric.hpp"
#include "fixtures.hpp"

using namespace arbornet;

// end-to-end harness: drives the installed binary through a shell, checking
// the exit-code contract (0 success/true, 1 false/NONE, 2 errors)
namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string temp_path(const std::string& stem) {
    return std::string("/tmp/arbornet_test_") + stem;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    f << content;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

RunResult run(const std::string& args) {
    std::string out_path = temp_path("stdout");
    std::string cmd = std::string(ARBORNET_CLI_PATH) + " " + args + " > " +
                      out_path + " 2> /dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    r.out = read_file(out_path);
    return r;
}

std::string fixture_file(const std::string& stem, const Network& net) {
    std::string path = temp_path(stem + ".net");
    write_file(path, serialize_net(net));
    return path;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("check") {
    RunResult ok = run("check " + fixture_file("nb2", fixtures::nb2()));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("m-network: ok") != std::string::npos);
    CHECK(ok.out.find("arboreal: true") != std::string::npos);

    RunResult bad = run("check " + fixture_file("na", fixtures::na()));
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("root has out-degree 3") != std::string::npos);

    RunResult banyan = run("check " + fixture_file("nf", fixtures::nf()));
    CHECK(banyan.exit_code == 0);
    CHECK(banyan.out.find("banyan: true") != std::string::npos);
}

TEST_CASE("extract and duet modes") {
    RunResult chain = run("extract " + fixture_file("nc", fixtures::nc()));
    CHECK(chain.exit_code == 0);
    CHECK(chain.out == "T 1 2 3\nD 2 4\n");

    RunResult literal = run("extract --duet-mode literal " +
                            fixture_file("nc2", fixtures::nc()));
    CHECK(literal.exit_code == 0);
    CHECK(literal.out == "T 1 2 3\nD 1 4\nD 2 4\n");

    // non-arboreal input is an input error
    RunResult err = run("extract " + fixture_file("twin", fixtures::nonarboreal_twin()));
    CHECK(err.exit_code == 2);
}

TEST_CASE("reconstruct") {
    std::string good = temp_path("good.cst");
    write_file(good, "T 1 2 3\nT 1 2 4\n");
    RunResult built = run("reconstruct " + good);
    CHECK(built.exit_code == 0);
    CHECK(is_isomorphic(parse_net(built.out), fixtures::nb2()));

    std::string bad = temp_path("bad.cst");
    write_file(bad, "T 1 2 3\nT 2 3 1\n");
    RunResult none = run("reconstruct " + bad);
    CHECK(none.exit_code == 1);
    CHECK(none.out == "NONE\n");

    std::string malformed = temp_path("malformed.cst");
    write_file(malformed, "T 1 1 3\n");
    CHECK(run("reconstruct " + malformed).exit_code == 2);
}

TEST_CASE("distance and iso") {
    std::string nb2 = fixture_file("d_nb2", fixtures::nb2());
    std::string nc = fixture_file("d_nc", fixtures::nc());
    RunResult dist = run("distance " + nb2 + " " + nc);
    CHECK(dist.exit_code == 0);
    CHECK(dist.out == "2\n");

    std::string ne = fixture_file("d_ne", fixtures::ne());
    std::string nf = fixture_file("d_nf", fixtures::nf());
    RunResult zero = run("distance " + ne + " " + nf);
    CHECK(zero.exit_code == 0);
    CHECK(zero.out == "0\n");

    RunResult not_iso = run("iso " + ne + " " + nf);
    CHECK(not_iso.exit_code == 1);
    CHECK(not_iso.out == "false\n");

    RunResult same = run("iso " + nb2 + " " + nb2);
    CHECK(same.exit_code == 0);
    CHECK(same.out == "true\n");

    // differing label sets
    std::string nb1 = fixture_file("d_nb1", fixtures::nb1());
    CHECK(run("distance " + nb1 + " " + nb2).exit_code == 2);
}

TEST_CASE("gen, dot, and the file-level round trip") {
    RunResult gen = run("gen --n 7 --seed 11");
    CHECK(gen.exit_code == 0);
    Network net = parse_net(gen.out);
    CHECK(validate_m_network(net).ok());
    CHECK(net.leaf_labels().size() == 7);

    RunResult again = run("gen --n 7 --seed 11");
    CHECK(again.out == gen.out);   // byte-identical

    RunResult with_roots = run("gen --n 7 --seed 3 --roots 4");
    CHECK(with_roots.exit_code == 0);
    CHECK(parse_net(with_roots.out).roots().size() == 4);

    CHECK(run("gen --n 2 --seed 1").exit_code == 2);

    std::string net_path = temp_path("gen.net");
    write_file(net_path, gen.out);
    RunResult dot = run("dot " + net_path);
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);

    // extract | reconstruct | iso against the original, file-level
    for (int seed = 21; seed <= 26; ++seed) {
        RunResult g = run("gen --n 8 --seed " + std::to_string(seed));
        REQUIRE(g.exit_code == 0);
        std::string gpath = temp_path("rt.net");
        write_file(gpath, g.out);
        RunResult ex = run("extract " + gpath);
        REQUIRE(ex.exit_code == 0);
        std::string cpath = temp_path("rt.cst");
        write_file(cpath, ex.out);
        RunResult rec = run("reconstruct " + cpath);
        REQUIRE(rec.exit_code == 0);
        std::string rpath = temp_path("rt_out.net");
        write_file(rpath, rec.out);
        RunResult iso = run("iso " + gpath + " " + rpath);
        CHECK(iso.exit_code == 0);
    }
}

TEST_CASE("roundtrip subcommand") {
    RunResult rt = run("roundtrip --n 6 --seeds 25");
    CHECK(rt.exit_code == 0);
    CHECK(rt.out == "pass: 25 fail: 0\n");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("frobnicate x").exit_code == 2);
    CHECK(run("check").exit_code == 2);                  // missing argument
    CHECK(run("check /nonexistent/file").exit_code == 2);
    CHECK(run("extract --duet-mode bogus x").exit_code == 2);
}

TEST_SUITE_END();
