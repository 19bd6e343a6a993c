#include <iostream>
#include <string>
#include <vector>

#include "cycl/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) {
        std::cerr << "usage: cycl COMMAND [flags]\n"
                  << "commands: verify | hh | ch | bracket | cobracket | axioms |\n"
                  << "          ncsymp-compare | fixture\n"
                  << "flags:    --input PATH --max-len N --degree-min D --degree-max D\n"
                  << "          --field q|fp:P --convention chain|cochain\n"
                  << "          --format table|csv --alpha CLASS --beta CLASS\n"
                  << "          --kind K --param N --seed S --serial\n";
        return 2;
    }
    return cycl::run_cli(args, std::cout, std::cerr);
}
