#pragma once

// Spawns the installed CLI binary and captures stdout/stderr separately.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace cli {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

inline std::string cli_path() { return INTRES_CLI_PATH; }
inline std::string fixture_dir() { return INTRES_FIXTURE_DIR; }

inline std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    return out + "'";
}

inline Result run(const std::vector<std::string>& args, const std::string& stdin_data = "") {
    static int counter = 0;
    std::string tag = std::to_string(++counter) + "_" + std::to_string(::getpid());
    std::string out_file = "/tmp/intres_test_out_" + tag;
    std::string err_file = "/tmp/intres_test_err_" + tag;
    std::string in_file = "/tmp/intres_test_in_" + tag;

    std::string cmd = shell_quote(cli_path());
    for (const auto& a : args) cmd += " " + shell_quote(a);
    if (!stdin_data.empty()) {
        std::ofstream in(in_file);
        in << stdin_data;
        cmd += " < " + shell_quote(in_file);
    }
    cmd += " > " + shell_quote(out_file) + " 2> " + shell_quote(err_file);

    int status = std::system(cmd.c_str());
    Result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    auto slurp = [](const std::string& path) {
        std::ifstream f(path);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    if (!stdin_data.empty()) std::remove(in_file.c_str());
    return r;
}

} // namespace cli
