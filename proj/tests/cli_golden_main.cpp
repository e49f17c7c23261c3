// Golden input/output pairs for the command-line surface. Takes the binary
// path as argv[1]; exits nonzero on the first mismatch.

#include <array>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct Run {
    int exit_code = -1;
    std::string output;
};

Run run(const std::string& binary, const std::string& args, const std::string& stdin_text) {
    Run r;
    std::string command = "'" + binary + "' " + args + " 2>/dev/null";
    if (!stdin_text.empty())
        command = "printf '%s\\n' '" + stdin_text + "' | " + command;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int failures = 0;

void expect(const std::string& binary, const std::string& args,
            const std::string& stdin_text, const std::string& expected_output,
            int expected_code = 0) {
    Run r = run(binary, args, stdin_text);
    if (r.output != expected_output || r.exit_code != expected_code) {
        ++failures;
        std::cout << "[FAIL] " << args << "\n  expected (rc " << expected_code
                  << "): " << expected_output << "  actual (rc " << r.exit_code
                  << "): " << r.output;
    } else {
        std::cout << "[PASS] " << args << "\n";
    }
}

void expect_lines(const std::string& binary, const std::string& args,
                  std::size_t expected_lines) {
    Run r = run(binary, args, "");
    std::size_t lines = 0;
    for (char c : r.output)
        if (c == '\n') ++lines;
    if (r.exit_code != 0 || lines != expected_lines) {
        ++failures;
        std::cout << "[FAIL] " << args << "\n  expected " << expected_lines
                  << " lines, got " << lines << " (rc " << r.exit_code << ")\n";
    } else {
        std::cout << "[PASS] " << args << " (" << lines << " lines)\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: fintop_cli_golden <path-to-cli>\n";
        return 2;
    }
    std::string cli = argv[1];

    expect(cli, "canon \"PRE n=2 rel=1101\"", "", "FS k=2 w=1,1 cov=(1,2)\n");
    expect(cli, "canon", "PRE n=3 rel=111011011", "FS k=2 w=1,2 cov=(1,2)\n");
    expect(cli, "dual \"FS k=3 w=1,1,1 cov=(1,2);(1,3)\"", "",
           "FS k=3 w=1,1,1 cov=(1,3);(2,3)\n");
    expect(cli, "product \"FS k=1 w=1 cov=\" \"FS k=1 w=1 cov=\"", "",
           "FS k=2 w=1,1 cov=\n");
    expect(cli, "join \"FS k=1 w=1 cov=\" \"FS k=1 w=1 cov=\"", "",
           "FS k=2 w=1,1 cov=(1,2)\n");
    expect(cli, "coproduct \"FS k=1 w=2 cov=\"", "",
           "(1) * FS k=0 w= cov= (x) FS k=1 w=2 cov= + "
           "(1) * FS k=1 w=2 cov= (x) FS k=0 w= cov=\n");
    expect(cli, "antipode \"FS k=2 w=1,1 cov=(1,2)\"", "",
           "(1) * FS k=2 w=1,1 cov= + (-1) * FS k=2 w=1,1 cov=(1,2)\n");
    expect(cli, "phi \"FS k=2 w=1,1 cov=(1,2)\"", "", "(q)*M[2] + (1)*M[1,1]\n");
    expect(cli, "phi --eval-q 1/2 \"FS k=2 w=1,1 cov=(1,2)\"", "",
           "(1/2)*M[2] + (1)*M[1,1]\n");
    expect(cli, "phi --eval-q 0 \"FS k=2 w=1,1 cov=(1,2)\"", "", "(1)*M[1,1]\n");
    expect(cli, "zeta \"FS k=2 w=2,3 cov=(1,2)\"", "", "q^6\n");
    expect(cli, "core \"FS k=3 w=1,1,1 cov=(1,2);(2,3)\"", "", "FS k=1 w=1 cov=\n");
    expect(cli, "core \"FS k=1 w=5 cov=\"", "", "FS k=1 w=1 cov=\n");
    expect(cli, "euler \"FS k=4 w=1,1,1,1 cov=(1,3);(1,4);(2,3);(2,4)\"", "", "0\n");
    expect(cli, "complex \"FS k=2 w=1,1 cov=(1,2)\"", "", "1 2\n");
    expect(cli, "complex \"FS k=3 w=1,1,1 cov=(1,3);(2,3)\"", "", "1 3\n2 3\n");

    expect_lines(cli, "enumerate --n 3 --kind spaces", 9);
    expect_lines(cli, "enumerate --n 2 --kind topologies", 4);
    expect_lines(cli, "enumerate --n 4 --kind connected", 21);
    expect_lines(cli, "enumerate --n 4 --kind join-indec", 14);
    expect_lines(cli, "enumerate --n 4 --kind irreducible", 2);

    // input errors exit with code 2
    expect(cli, "canon \"PRE n=2 rel=11\"", "", "", 2);
    expect(cli, "canon \"FS k=1 w=1 cov=(1,1)\"", "", "", 2);
    expect(cli, "enumerate --n 9 --kind spaces", "", "", 2);
    expect(cli, "counts --max-n 99", "", "", 2);

    if (failures) {
        std::cout << failures << " golden check(s) failed\n";
        return 1;
    }
    std::cout << "all golden checks passed\n";
    return 0;
}
