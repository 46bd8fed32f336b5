#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qextremal/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    qext::Command cmd;
    try {
        cmd = qext::parse_args(args);
    } catch (const qext::help_requested& h) {
        std::cout << h.what() << "\n";
        return qext::kExitPass;
    } catch (const qext::usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return qext::kExitUsage;
    }

    qext::Execution run;
    try {
        run = qext::execute(cmd);
    } catch (const qext::usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return qext::kExitUsage;
    }

    std::string text = cmd.format == "table" ? qext::to_table(run.report) : run.report.dump(2) + "\n";
    if (cmd.output) {
        std::ofstream out(*cmd.output);
        if (!out) {
            std::cerr << "cannot write " << *cmd.output << "\n";
            return qext::kExitFail;
        }
        out << text;
    } else {
        std::cout << text;
    }
    return run.exit_code;
}
