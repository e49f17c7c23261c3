#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fintop/exec.hpp"

namespace fintop {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::uint64_t cases = 0;
    std::string counterexample;  // first failing case, empty when passed
};

struct CheckReport {
    std::vector<CheckResult> results;

    bool all_passed() const;
    void append(CheckResult r) { results.push_back(std::move(r)); }
    void append(const CheckReport& r);
};

enum class AxiomSuite { Coassoc, HopfCompat, Infinitesimal, Duality };

/// Exhaustive single-suite sweep over all spaces (or pairs) of total size
/// at most n_max; reports the first counterexample instead of throwing.
CheckResult verify_axioms(int n_max, AxiomSuite suite, Exec exec = Exec::Parallel);

// Grouped suites behind the `check` command. Each runs several named
// sweeps and reports one line per sweep.
CheckReport check_hopf(int max_n, Exec exec = Exec::Parallel);
CheckReport check_infinitesimal(int max_n, Exec exec = Exec::Parallel);
CheckReport check_tensor(int max_len, Exec exec = Exec::Parallel);
CheckReport check_qsym(int max_n, std::uint64_t seed, Exec exec = Exec::Parallel);
CheckReport check_homotopy(int max_n, std::uint64_t seed, Exec exec = Exec::Parallel);

}  // namespace fintop
