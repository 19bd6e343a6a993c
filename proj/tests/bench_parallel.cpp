// Compares the serial reference implementations against the OpenMP kernels:
// differential assembly and the axiom-suite tuple sweep. Results must agree
// exactly; timings are printed for both paths.

#include <chrono>
#include <iostream>

#include "cycl/axioms.hpp"
#include "cycl/modelzoo.hpp"

using namespace cycl;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
    using Q = Rational;

    {
        auto data = random_directed<Q>(4, 20240517);
        WordBounds b;
        b.max_length = 8;
        b.deg_lo = -9;
        b.deg_hi = 9;
        auto t0 = Clock::now();
        auto serial = connes_homology(data, b, /*parallel=*/false);
        double ts = seconds_since(t0);
        t0 = Clock::now();
        auto par = connes_homology(data, b, /*parallel=*/true);
        double tp = seconds_since(t0);
        bool equal = true;
        for (const auto& [d, e] : serial.dims)
            if (par.dims.at(d).dim != e.dim || par.dims.at(d).reliable != e.reliable)
                equal = false;
        std::cout << "connes differential assembly (directed r=4, max-len 8): serial "
                  << ts << "s, parallel " << tp << "s, equal=" << (equal ? "yes" : "NO")
                  << "\n";
    }

    {
        auto data = projective_fixture<Q>(2);
        SymplecticForm<Q> form = induced_omega(data, *data.pairing);
        LieBialgebra<Q> lb(data, form);
        auto t0 = Clock::now();
        AxiomReport serial = axiom_suite(lb, 4, /*parallel=*/false);
        double ts = seconds_since(t0);
        t0 = Clock::now();
        AxiomReport par = axiom_suite(lb, 4, /*parallel=*/true);
        double tp = seconds_since(t0);
        bool equal = serial.checks.size() == par.checks.size();
        for (std::size_t i = 0; equal && i < serial.checks.size(); ++i)
            equal = serial.checks[i].tuples == par.checks[i].tuples &&
                    serial.checks[i].failures == par.checks[i].failures &&
                    serial.checks[i].sample == par.checks[i].sample;
        std::cout << "axiom suite (CP^2, max-len 4): serial " << ts << "s, parallel "
                  << tp << "s, equal=" << (equal ? "yes" : "NO") << "\n";
        if (!serial.ok()) {
            std::cout << "unexpected axiom failures\n";
            return 1;
        }
        if (!equal) return 1;
    }
    return 0;
}
