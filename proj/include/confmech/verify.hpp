#pragma once

#include <string>
#include <vector>

namespace confmech {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // failure context; empty when passed
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    const CheckResult* first_failure() const;  // nullptr when green
};

// Polynomial-identity suite: the Hermite-Laguerre bridges for n <= 8 and the
// factored structure (valuation m(m+1)/2, Gaussian weight of modulus m, even
// core free of positive roots) of every odd-index seed Wronskian of size
// <= 5 drawn from indices <= 13, in both weight families.
SuiteReport suite_identities();

// The four frozen rational deformations, matched coefficient by coefficient
// against the transformed potentials.
SuiteReport suite_golden();

// Mirror-diagram duality: involution and shift law over every scheme with
// max index <= max_index, and exact potential agreement across the five
// frozen dual pairs.
SuiteReport suite_duality(int max_index = 11);

// Finite-difference cross-check of the four frozen systems: lowest six
// levels within tolerance, counts per band, convergence flag.
SuiteReport suite_numeric();

// All of the above, in a fixed order, under one report.
SuiteReport suite_all();

// Dispatch by name: identities, golden, duality, numeric, all.
SuiteReport run_suite(const std::string& name);

}  // namespace confmech
