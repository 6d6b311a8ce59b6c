#pragma once

#include <string>
#include <vector>

namespace eqaoa {

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
};

// The built-in self-check suite: centralizer orders, commutation relations,
// the sign of the shifted distinguished state, cyclic-eigenspace dimensions,
// Perron-Frobenius reports, circuit/simulator equivalences, and subspace
// preservation along a short QAOA run.
VerifyReport run_verification();

std::string verify_to_json_text(const VerifyReport& report);

}  // namespace eqaoa
