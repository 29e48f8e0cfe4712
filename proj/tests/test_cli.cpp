#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Runs the installed CLI with stdout captured; stderr goes to a scratch file
// so failures stay quiet unless a test wants to look.
RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out_path =
        fs::temp_directory_path() / ("susa_cli_out_" + std::to_string(counter++) + ".txt");
    const std::string cmd = std::string(SUSA_CLI_PATH) + " " + args + " > " +
                            out_path.string() + " 2> " + out_path.string() + ".err";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    fs::remove(out_path);
    fs::remove(out_path.string() + ".err");
    return result;
}

std::string golden(const std::string& name) {
    return slurp(fs::path(SUSA_GOLDEN_DIR) / (name + ".txt"));
}

} // namespace

TEST_CASE("solve prints roots in both notations") {
    const auto result = run_cli("solve --form ADD --a 1 --b '0;45'");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "x = 0;30 (1/2)\n");
}

TEST_CASE("solve prints both excess roots") {
    const auto result = run_cli("solve --form EXCESS --a 2 --b '0;45'");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "x = 0;30 (1/2)\nx = 1;30 (3/2)\n");
}

TEST_CASE("solve accepts fractions and the GENERAL form") {
    const auto result = run_cli("solve --form GENERAL --A 4/9 --B 1 --C '0;36,40'");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "x = 0;30 (1/2)\n");
}

TEST_CASE("solve reports a non-regular root as a fraction") {
    // x^2 + (1/2) x = 57/49 has the positive root 6/7
    const auto result = run_cli("solve --form ADD --a 1/2 --b 57/49");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "x = 6/7 (6/7)\n");
}

TEST_CASE("mathematical infeasibility exits 2") {
    CHECK(run_cli("solve --form SQUARE --c 1 --b 2").exit_code == 2);
    CHECK(run_cli("geometry square --margin 5 --gap '1,40'").exit_code == 2);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli("solve --form ADD --a 1 --b '0;99'").exit_code == 1);
    CHECK(run_cli("solve --form ADD --a 1").exit_code == 1);       // missing b
    CHECK(run_cli("solve --form FROB --a 1 --b 2").exit_code == 1);
    CHECK(run_cli("solve --form ADD --a 1 --b 1 --bogus 2").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("trace bogus").exit_code == 1);
    CHECK(run_cli("verify-corpus /no/such/file.txt").exit_code == 1);
}

TEST_CASE("trace output is bit-exact against the golden files") {
    for (const std::string id : {"smt20-1", "smt20-2", "smt21-1", "smt21-2"}) {
        const auto result = run_cli("trace " + id);
        CHECK(result.exit_code == 0);
        CHECK(result.out == golden(id));
    }
}

TEST_CASE("geometry square solves the tablet instance") {
    const auto result = run_cli("geometry square --margin 5 --gap '35,0'");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "x = 30 (30)\nouter = 50 (50)\n");
}

TEST_CASE("geometry rect solves the tablet instance") {
    const auto result = run_cli("geometry rect --u 5 --v 10 --gap '30,50'");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "x = 30 (30)\ny = 45 (45)\nz = 50 (50)\n");
}

TEST_CASE("verify-corpus on the shipped corpus") {
    const std::string path = SUSA_DATA_DIR "/susa_corpus.txt";
    const auto result = run_cli("verify-corpus " + path);
    CHECK(result.exit_code == 0);
    CHECK(result.out == "total=170 passed=146 flagged=24 failures=0\n");
}

TEST_CASE("verify-corpus tabular lists one line per entry") {
    const std::string path = SUSA_DATA_DIR "/susa_corpus.txt";
    const auto result = run_cli("verify-corpus " + path + " --format tabular");
    CHECK(result.exit_code == 0);
    std::istringstream lines(result.out);
    std::string line;
    int count = 0;
    bool saw_first = false;
    while (std::getline(lines, line)) {
        ++count;
        if (line == "SMT5.P6.L1 PASS 0")
            saw_first = true;
        CHECK(line.find(" FAIL ") == std::string::npos);
    }
    CHECK(count == 170);
    CHECK(saw_first);
}

TEST_CASE("verify-corpus flags a corrupted copy with exit 3") {
    const fs::path corrupted = fs::temp_directory_path() / "susa_corpus_corrupted.txt";
    {
        std::ifstream in(SUSA_DATA_DIR "/susa_corpus.txt");
        std::ofstream out(corrupted);
        std::string line;
        while (std::getline(in, line)) {
            if (line.rfind("SMT5.P6.L1|", 0) == 0)
                line = "SMT5.P6.L1|SQUARE|c=1|b=50,26|x=55|";
            out << line << "\n";
        }
    }
    const auto result = run_cli("verify-corpus " + corrupted.string());
    CHECK(result.exit_code == 3);
    CHECK(result.out.find("failures=1") != std::string::npos);
    CHECK(result.out.find("FAIL SMT5.P6.L1") != std::string::npos);
    fs::remove(corrupted);
}

TEST_CASE("corpus syntax errors exit 1") {
    const fs::path broken = fs::temp_directory_path() / "susa_corpus_broken.txt";
    {
        std::ofstream out(broken);
        out << "SMT5.P6.L1|SQUARE|c=1|b=50,99|x=55|\n";
    }
    CHECK(run_cli("verify-corpus " + broken.string()).exit_code == 1);
    fs::remove(broken);
}
