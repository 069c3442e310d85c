// Times each verification kernel in serial and OpenMP mode and prints
// the speedup. The memo cache is cleared before every run so the two
// modes do the same work.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "ytl/lr.hpp"
#include "ytl/sweeps.hpp"

using namespace ytl;

namespace {

double run_ms(const std::function<void(Exec)>& kernel, Exec exec) {
    lr_cache_clear();
    auto start = std::chrono::steady_clock::now();
    kernel(exec);
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace

int main() {
    struct Bench {
        const char* name;
        std::function<void(Exec)> kernel;
    };
    const std::vector<Bench> benches = {
        {"product identities, total size <= 8",
         [](Exec e) { verify_product_identities(8, e); }},
        {"first-row bounds, total size <= 9",
         [](Exec e) { verify_first_row_bounds(9, e); }},
        {"restriction bounds, d <= 3, size <= 7",
         [](Exec e) { verify_restriction_bounds(3, 7, e); }},
        {"LR checker agreement, outer size <= 8",
         [](Exec e) { verify_lr_checker_agreement(8, e); }},
        {"group algebra dimension, d = 3, n = 8",
         [](Exec e) { group_algebra_dimension(3, 8, e); }},
    };

    std::printf("%-42s %12s %12s %9s\n", "kernel", "serial (ms)", "openmp (ms)",
                "speedup");
    for (const Bench& b : benches) {
        double serial = run_ms(b.kernel, Exec::serial);
        double parallel = run_ms(b.kernel, Exec::parallel);
        std::printf("%-42s %12.1f %12.1f %8.2fx\n", b.name, serial, parallel,
                    serial / parallel);
    }
    return 0;
}
