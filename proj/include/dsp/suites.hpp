#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dsp::suites {

// Instance counts and size knobs for the acceptance criteria. The full
// configuration is the one the acceptance binary pins; the reduced one backs
// the CLI selftest command.
struct SuiteConfig {
    uint64_t seed = 0xD15EA5E05EEDULL;

    int c1_instances = 500;   // directed 2-DSP vs oracle
    int c2_instances = 100;   // negative weights vs oracle
    int c3_plants = 20;       // planted zero cycles
    int c3_clean = 100;
    int c5_instances = 200;   // directed min-k vs oracle
    int c6_instances = 300;   // DAG solver vs oracle
    int c7_instances = 300;   // undirected solver vs oracle
    int c8_each = 100;        // cross-algorithm consistency, per kind
    int c9_instances = 100;   // symbolic polynomial ground truth
    int c10_instances = 100;  // delta / dominator brute force
    int c11_instances = 500;  // structural lemma properties
    int c12_checks = 100000;  // field axiom rounds

    // performance smoke sizes
    int c13_decide_n = 2000, c13_decide_m = 10000;
    int c13_large_n = 100000, c13_large_m = 300000;

    // wall-clock limits in seconds, pinned by the criteria
    double c1_limit = 60.0;
    double c5_limit = 600.0;
    double c6_limit = 60.0;
    double c13_decide_limit = 10.0;
    double c13_solve_limit = 5.0;
};

SuiteConfig full_config();
SuiteConfig reduced_config();  // ~10x smaller counts for selftest

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // counts, mismatch description, elapsed time
    double seconds = 0.0;
};

CriterionResult run_criterion(int id, const SuiteConfig& cfg);

// Runs criteria 1..13 in order; when progress is non-null each result is
// printed as soon as it is known ("CRITERION <id> PASS|FAIL <detail>").
std::vector<CriterionResult> run_all(const SuiteConfig& cfg, std::ostream* progress);

}  // namespace dsp::suites
