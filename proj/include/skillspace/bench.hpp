#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "skillspace/corpus.hpp"

namespace skillspace {

struct WorkloadSpec {
    std::size_t n_groups = 1;        // "unique occupations"
    std::size_t m_skills = 1;        // "unique skills"
    std::size_t docs_per_group = 50;
    std::size_t skills_min = 1;      // per-document skill count range
    std::size_t skills_max = 1;
    std::uint64_t seed = 0;
};

// Deterministic corpus from the seed. Every document is non-empty and every
// skill is used at least once; regeneration is retried up to a bound if
// coverage fails.
Corpus generate_workload(const WorkloadSpec& spec);

struct BenchRow {
    WorkloadSpec spec;
    double naive_ms = 0.0;       // median
    double vectorised_ms = 0.0;  // median
    double speedup = 0.0;
    double naive_iqr_ms = 0.0;
    double vectorised_iqr_ms = 0.0;
    std::size_t repetitions = 0;
    std::optional<double> reference_naive_ms;  // published baseline, if any
    std::optional<double> reference_speedup;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    int thread_count = 1;
};

// Times the end-to-end pipeline on both engines. Engine agreement is
// asserted before timings are accepted; a warm-up run is excluded.
BenchReport run_benchmark(const std::vector<WorkloadSpec>& specs, std::size_t repetitions);

// The six-rung (occupations, skills) ladder from the published benchmark,
// with a configurable documents-per-group count.
std::vector<WorkloadSpec> paper_ladder(std::size_t docs_per_group = 50, std::uint64_t seed = 0);

std::string render_bench_csv(const BenchReport& report);
std::string render_bench_markdown(const BenchReport& report);

}  // namespace skillspace
