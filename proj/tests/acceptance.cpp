#include <algorithm>
#include <iostream>

#include "dsp/suites.hpp"

int main() {
    auto results = dsp::suites::run_all(dsp::suites::full_config(), &std::cout);
    bool all = std::all_of(results.begin(), results.end(),
                           [](const dsp::suites::CriterionResult& r) { return r.passed; });
    std::cout << (all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << std::endl;
    return all ? 0 : 1;
}
