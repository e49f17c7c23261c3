// Times the serial reference kernels against their OpenMP counterparts.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fintop/checks.hpp"
#include "fintop/enumeration.hpp"

namespace {

using namespace fintop;

double time_of(const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

void row(const std::string& name, const std::function<void(Exec)>& kernel) {
    double serial = time_of([&] { kernel(Exec::Serial); });
    double parallel = time_of([&] { kernel(Exec::Parallel); });
    std::printf("%-38s %10.3f s %10.3f s %8.2fx\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-38s %12s %12s %9s\n", "kernel", "serial", "parallel", "speedup");
    row("labeled poset count, 7 elements",
        [](Exec e) { count_labeled_posets(7, e); });
    row("poset classes, 7 vertices", [](Exec e) { poset_classes(7, e); });
    row("space enumeration, 7 points", [](Exec e) { enumerate_spaces(7, e); });
    row("family counts, 6 points", [](Exec e) { count_families(6, e); });
    row("Hopf axiom sweep, size 4", [](Exec e) { check_hopf(4, e); });
    row("tensor identity sweep, length 5", [](Exec e) { check_tensor(5, e); });
    row("homotopy sweep, size 6", [](Exec e) { check_homotopy(6, 1, e); });
    return 0;
}
