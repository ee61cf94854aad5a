#pragma once

#include <string>
#include <vector>

namespace qeis {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ExactSuiteOptions {
    int order = 20;        // order for the structural / product identities
    int route_k_max = 8;   // three-route agreement range
    int route_order = 20;  // three-route agreement truncation
    int u_order = 15;      // trace-recursion truncation
    int threshold_a_n = 30;
    int threshold_b_n = 20;
    int bruteforce_n = 12;   // exhaustive unimodal histogram range
    int bijection_n = 25;    // mutual-inverse range for both bijections
    unsigned seed = 1;       // cycle-index random inputs
};

struct NumericSuiteOptions {
    double tol = 1e-8;
    unsigned seed = 20260823;
    int matrices = 20;
    int points = 5;
    int chi_samples = 200;
};

std::vector<CheckLine> run_exact_suite(const ExactSuiteOptions& opt = {});
std::vector<CheckLine> run_numeric_suite(const NumericSuiteOptions& opt = {});
// psihat / That / Hhat completed-vs-target gaps along t in {1, 3, 10, 30}.
std::vector<CheckLine> run_limit_suite(double tol = 1e-7);

bool all_pass(const std::vector<CheckLine>& lines);

}  // namespace qeis
