// fixture_runner.cpp — regression fixtures binding CLI invocations to
// expected key numbers. Reads a JSON fixture list, runs the CLI binary,
// parses key=value tokens (or CSV cells) from its output, and compares
// against the recorded values within each fixture's tolerance.
//
// Usage: fixture_runner <cli-binary> <fixtures.json> [workdir]
// Placeholders inside args/paths: {ROOT} = parent of the fixture file's
// directory, {OUT} = per-fixture output directory under workdir.

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunOutput {
    std::string text; // stdout + stderr
    int exit_code;
};

RunOutput run_command(const std::string& command) {
    const std::string full = command + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) {
        return {"<popen failed>", -1};
    }
    std::string text;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        text.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    return {text, code};
}

std::string replace_all(std::string s, const std::string& from,
                        const std::string& to) {
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
    return s;
}

// key=value tokens anywhere in the output (whitespace separated).
std::map<std::string, std::string> parse_tokens(const std::string& text) {
    std::map<std::string, std::string> tokens;
    std::istringstream in(text);
    std::string word;
    while (in >> word) {
        const auto eq = word.find('=');
        if (eq == std::string::npos || eq == 0) continue;
        tokens[word.substr(0, eq)] = word.substr(eq + 1);
    }
    return tokens;
}

std::string csv_cell(const std::string& path, int row, int col) {
    std::ifstream in(path);
    if (!in) return "<missing file " + path + ">";
    std::string line;
    for (int k = 0; k <= row; ++k) {
        if (!std::getline(in, line)) return "<missing row>";
    }
    std::istringstream ls(line);
    std::string cell;
    for (int k = 0; k <= col; ++k) {
        if (!std::getline(ls, cell, ',')) return "<missing col>";
    }
    return cell;
}

struct CheckOutcome {
    bool ok;
    std::string detail;
};

CheckOutcome run_check(const json& check, const RunOutput& output,
                       const std::map<std::string, std::string>& tokens,
                       const std::string& out_dir, const std::string& root) {
    const std::string type = check.at("type").get<std::string>();

    auto lookup = [&](const std::string& key) -> std::string {
        const auto it = tokens.find(key);
        return it == tokens.end() ? std::string("<missing key " + key + ">")
                                  : it->second;
    };
    auto resolve = [&](std::string s) {
        s = replace_all(std::move(s), "{OUT}", out_dir);
        return replace_all(std::move(s), "{ROOT}", root);
    };

    if (type == "exit_code") {
        const int expect = check.at("expect").get<int>();
        return {output.exit_code == expect,
                "exit code " + std::to_string(output.exit_code) + " expected " +
                    std::to_string(expect)};
    }
    if (type == "output_contains") {
        const std::string text = check.at("text").get<std::string>();
        return {output.text.find(text) != std::string::npos,
                "output does not contain \"" + text + "\""};
    }

    std::string raw;
    std::string label;
    if (type == "stdout_num" || type == "stdout_str") {
        const std::string key = check.at("key").get<std::string>();
        raw = lookup(key);
        label = key;
    } else if (type == "csv_num" || type == "csv_str") {
        const std::string file = resolve(check.at("file").get<std::string>());
        raw = csv_cell(file, check.at("row").get<int>(),
                       check.at("col").get<int>());
        label = file + "[" + std::to_string(check.at("row").get<int>()) + "," +
                std::to_string(check.at("col").get<int>()) + "]";
    } else {
        return {false, "unknown check type " + type};
    }

    if (type == "stdout_str" || type == "csv_str") {
        const std::string expect = check.at("expect").get<std::string>();
        return {raw == expect,
                label + " = \"" + raw + "\" expected \"" + expect + "\""};
    }

    double value = 0.0;
    try {
        value = std::stod(raw);
    } catch (const std::exception&) {
        return {false, label + " is not numeric: \"" + raw + "\""};
    }
    const double expect = check.at("expect").get<double>();
    const double tol = check.at("tol").get<double>();
    const double err = std::abs(value - expect);
    std::ostringstream detail;
    detail << label << " = " << value << " expected " << expect << " +- " << tol;
    return {err <= tol, detail.str()};
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: fixture_runner <cli-binary> <fixtures.json> [workdir]\n";
        return 2;
    }
    const std::string binary = argv[1];
    const fs::path fixture_path = argv[2];
    const fs::path workdir = argc > 3 ? fs::path(argv[3]) : fs::path("fixture_out");
    const std::string root = fixture_path.parent_path().parent_path().string();

    std::ifstream in(fixture_path);
    if (!in) {
        std::cerr << "cannot open " << fixture_path << '\n';
        return 2;
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        std::cerr << "malformed fixtures JSON: " << e.what() << '\n';
        return 2;
    }

    int failures = 0;
    int total_checks = 0;
    for (const json& fixture : doc.at("fixtures")) {
        const std::string name = fixture.at("name").get<std::string>();
        const fs::path out_dir = workdir / name;
        fs::create_directories(out_dir);

        std::string command = "'" + binary + "'";
        for (const json& arg : fixture.at("args")) {
            std::string a = arg.get<std::string>();
            a = replace_all(std::move(a), "{OUT}", out_dir.string());
            a = replace_all(std::move(a), "{ROOT}", root);
            command += " '" + a + "'";
        }

        const RunOutput output = run_command(command);
        const auto tokens = parse_tokens(output.text);

        bool expects_exit = false;
        for (const json& check : fixture.at("checks")) {
            if (check.at("type").get<std::string>() == "exit_code") {
                expects_exit = true;
            }
        }

        std::vector<std::string> problems;
        if (!expects_exit && output.exit_code != 0) {
            problems.push_back("exit code " + std::to_string(output.exit_code));
        }
        for (const json& check : fixture.at("checks")) {
            ++total_checks;
            const CheckOutcome outcome =
                run_check(check, output, tokens, out_dir.string(), root);
            if (!outcome.ok) problems.push_back(outcome.detail);
        }

        if (problems.empty()) {
            std::cout << "[PASS] " << name << " ("
                      << fixture.at("checks").size() << " checks)\n";
        } else {
            ++failures;
            std::cout << "[FAIL] " << name << '\n';
            for (const std::string& p : problems) {
                std::cout << "       " << p << '\n';
            }
            std::cout << "------ command: " << command << '\n';
            std::cout << output.text << "------\n";
        }
    }

    std::cout << (failures == 0 ? "all fixtures passed" : "fixture failures")
              << " (" << total_checks << " checks)\n";
    return failures == 0 ? 0 : 1;
}
