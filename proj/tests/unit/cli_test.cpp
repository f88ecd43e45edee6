#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Drives the installed binary end to end through a shell. CLI_PATH is
// injected by the build.

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string command = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        res.out.append(buffer, got);
    }
    int rc = pclose(pipe);
    res.status = WEXITSTATUS(rc);
    return res;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("cli build, check and classes") {
    RunResult build = run("build --shape 2,2,2 --gen 1,1,0 --gen 0,1,1 --out "
                          "cli_test_doc.txt");
    CHECK(build.status == 0);
    CHECK(build.out.find("vertices 6") != std::string::npos);
    CHECK(build.out.find("canonical generators: 0,1,1 1,1,0") != std::string::npos);

    RunResult check = run("check cli_test_doc.txt");
    CHECK(check.status == 0);
    CHECK(check.out.find("daisy: yes") != std::string::npos);
    CHECK(check.out.find("isometric: yes") != std::string::npos);
    CHECK(check.out.find("minimal host: yes") != std::string::npos);

    RunResult classes = run("classes cli_test_doc.txt");
    CHECK(classes.status == 0);
    CHECK(classes.out.find("3 delta classes") != std::string::npos);
    CHECK(classes.out.find("anchored at") != std::string::npos);
}

TEST_CASE("cli rejects malformed input") {
    RunResult bad = run("build --shape 2,2 --gen 1,0,0");
    CHECK(bad.status == 2);

    std::ofstream("cli_test_bad.txt") << "daisygraph 1\nkind labeled\nshape 2,2\n"
                                         "root 0,0\nvertices 1\n5,0\n";
    CHECK(run("check cli_test_bad.txt").status == 2);

    std::ofstream("cli_test_hole.txt") << "daisygraph 1\nkind labeled\nshape 2,2\n"
                                          "root 0,0\nvertices 2\n0,0\n1,1\n";
    RunResult hole = run("check cli_test_hole.txt");
    CHECK(hole.status == 1);
    CHECK(hole.out.find("daisy: no") != std::string::npos);
    CHECK(hole.out.find("1,1") != std::string::npos);
}

TEST_CASE("cli decompose and replay are byte identical") {
    REQUIRE(run("build --shape 2,2 --gen 0,1 --gen 1,0 --out cli_test_p3.txt").status ==
            0);
    REQUIRE(run("decompose cli_test_p3.txt --out cli_test_p3.script").status == 0);
    REQUIRE(run("expand --script cli_test_p3.script --out cli_test_p3_replay.txt")
                .status == 0);
    CHECK(slurp("cli_test_p3.txt") == slurp("cli_test_p3_replay.txt"));
}

TEST_CASE("cli expand and contract") {
    REQUIRE(run("build --shape 2 --gen 1 --out cli_test_k2.txt").status == 0);
    RunResult expand = run("expand cli_test_k2.txt --cover 0 --out cli_test_p3b.txt");
    CHECK(expand.status == 0);
    RunResult check = run("check cli_test_p3b.txt");
    CHECK(check.out.find("daisy: yes") != std::string::npos);

    RunResult contract = run("contract cli_test_p3b.txt --coord 0");
    CHECK(contract.status == 0);
    CHECK(contract.out.find("shape 2") != std::string::npos);
}

TEST_CASE("cli export and verify") {
    RunResult dot = run("export cli_test_doc.txt");
    CHECK(dot.status == 0);
    CHECK(dot.out.find("graph daisy {") != std::string::npos);

    RunResult verify = run("verify --suite quick --budget 8 --samples 5");
    CHECK(verify.status == 0);
    CHECK(verify.out.find("# summary:") != std::string::npos);
    CHECK(verify.out.find("fail=0") != std::string::npos);

    RunResult json = run("verify --suite quick --budget 6 --samples 2 --format json");
    CHECK(json.status == 0);
    CHECK(json.out.find("\"summary\"") != std::string::npos);
}
