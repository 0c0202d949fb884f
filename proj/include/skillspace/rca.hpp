#pragma once

#include <vector>

#include "skillspace/corpus.hpp"
#include "skillspace/matrix.hpp"

namespace skillspace {

// R[j][s] = (P[j][s] / b[j]) / (c[s] / d): how over-represented skill s is
// in document j relative to the whole corpus.
struct RcaMatrix {
    Matrix data;                          // n x m
    std::vector<double> skills_per_job;   // b, row sums of P
    std::vector<double> jobs_per_skill;   // c, column sums of P
    double total_occurrences = 0.0;       // d, grand sum of P
    std::vector<std::size_t> degenerate_columns;  // skills with c[s] = 0
};

RcaMatrix rca_matrix(const PresenceMatrix& p);

}  // namespace skillspace
