#pragma once

#include <string>
#include <vector>

namespace tqc::cli {

struct CheckResult {
    std::string module;
    std::string name;
    bool ok = false;
    std::string detail;
};

// exactnum, polyseries, catalan, freeenergy, trres, wkb, lattice, hurwitz, gwp1
const std::vector<std::string>& suite_modules();

// "all" or one module name; throws std::invalid_argument otherwise.
std::vector<CheckResult> run_suite(const std::string& suite);

} // namespace tqc::cli
