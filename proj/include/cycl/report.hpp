// Verification reports and tabular output.

#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace cycl {

struct VerificationReport {
    struct Failure {
        std::string check;
        std::string where;
        std::string residual;
    };
    std::size_t checks_run = 0;
    std::vector<Failure> failures;

    bool ok() const { return failures.empty(); }

    void count(std::size_t n = 1) { checks_run += n; }

    void fail(std::string check, std::string where, std::string residual) {
        failures.push_back({std::move(check), std::move(where), std::move(residual)});
    }

    void merge(const VerificationReport& o) {
        checks_run += o.checks_run;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }

    std::string summary() const {
        std::ostringstream os;
        os << (ok() ? "OK" : "FAIL") << " (" << checks_run << " checks, "
           << failures.size() << " failures)";
        return os.str();
    }
};

}  // namespace cycl
