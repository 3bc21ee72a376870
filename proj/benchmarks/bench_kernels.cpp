// Compares the OpenMP-parallel multiplicity-table and tensor kernels against
// their serial reference implementations on a few medium-sized inputs.
//
// Usage: bench_kernels [repetitions]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "satake/tensor.hpp"

using namespace satake;

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& f, int reps) {
    auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) f();
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void bench_table(const std::string& name, const RootDatum& d, const LatticeVector& lv,
                 int reps) {
    OrbitLabel lam(d, lv);
    MultiplicityTable serial, parallel;
    double ts = time_ms([&] { serial = kostant_table(d, lam, Execution::serial); }, reps);
    double tp = time_ms([&] { parallel = kostant_table(d, lam, Execution::parallel); }, reps);
    if (!(serial == parallel)) {
        std::cerr << "MISMATCH in kostant_table for " << name << "\n";
        std::exit(1);
    }
    std::cout << "kostant_table " << name << " dim=" << serial.total_dim()
              << "  serial=" << ts << "ms  parallel=" << tp << "ms  speedup=" << ts / tp
              << "\n";
}

void bench_tensor(const std::string& name, const RootDatum& d, const LatticeVector& a,
                  const LatticeVector& b, int reps) {
    OrbitLabel lam(d, a), mu(d, b);
    TensorTable serial, parallel;
    double ts = time_ms([&] { serial = tensor_decompose(d, lam, mu, Execution::serial); }, reps);
    double tp =
        time_ms([&] { parallel = tensor_decompose(d, lam, mu, Execution::parallel); }, reps);
    if (!(serial == parallel)) {
        std::cerr << "MISMATCH in tensor_decompose for " << name << "\n";
        std::exit(1);
    }
    std::cout << "tensor_decompose " << name << " irreducibles=" << serial.entries.size()
              << "  serial=" << ts << "ms  parallel=" << tp << "ms  speedup=" << ts / tp
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;

    RootDatum a2 = RootDatum::from_cartan(parse_cartan_type("A2"), Isogeny::simply_connected);
    RootDatum b2 = RootDatum::from_cartan(parse_cartan_type("B2"), Isogeny::simply_connected);
    RootDatum g2 = RootDatum::from_cartan(parse_cartan_type("G2"), Isogeny::adjoint);
    RootDatum a3 = RootDatum::from_cartan(parse_cartan_type("A3"), Isogeny::simply_connected);

    bench_table("A2 6rho-check", a2, 6 * a2.two_rho_check(), reps);
    bench_table("B2 4rho-check", b2, 2 * b2.two_rho_check(), reps);
    bench_table("G2 2rho-check", g2, g2.two_rho_check(), reps);
    bench_table("A3 2rho-check", a3, a3.two_rho_check(), reps);

    bench_tensor("A2 3rho x 3rho", a2, 3 * a2.two_rho_check(), 3 * a2.two_rho_check(), reps);
    bench_tensor("B2 2rho x 2rho", b2, b2.two_rho_check(), b2.two_rho_check(), reps);
    bench_tensor("G2 2rho x 2rho", g2, g2.two_rho_check(), g2.two_rho_check(), reps);
    return 0;
}
