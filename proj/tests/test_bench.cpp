#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "skillspace/bench.hpp"
#include "skillspace/errors.hpp"

using namespace skillspace;

TEST_CASE("workload generation is deterministic in the seed") {
    WorkloadSpec spec{2, 3, 2, 1, 2, 7};
    Corpus a = generate_workload(spec);
    Corpus b = generate_workload(spec);
    CHECK(corpus_hash(a) == corpus_hash(b));

    spec.seed = 8;
    Corpus c = generate_workload(spec);
    CHECK(corpus_hash(c) != corpus_hash(a));
}

TEST_CASE("generated corpora are well-formed with full skill coverage") {
    WorkloadSpec spec{4, 12, 6, 2, 5, 19};
    Corpus corpus = generate_workload(spec);
    CHECK(corpus.groups.size() == 4);
    CHECK(corpus.vocabulary.size() == 12);
    CHECK(corpus.documents.size() == 4 * 6);
    std::vector<bool> seen(12, false);
    for (const auto& doc : corpus.documents) {
        CHECK(doc.skills.size() >= 2);
        CHECK(doc.skills.size() <= 5);
        CHECK(std::is_sorted(doc.skills.begin(), doc.skills.end()));
        CHECK(std::adjacent_find(doc.skills.begin(), doc.skills.end()) == doc.skills.end());
        for (std::size_t s : doc.skills) seen.at(s) = true;
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool v) { return v; }));
}

TEST_CASE("impossible coverage is rejected") {
    // Three documents with one skill each can never cover five skills.
    WorkloadSpec spec{3, 5, 1, 1, 1, 0};
    CHECK_THROWS_AS(generate_workload(spec), InfeasibleSpec);
}

TEST_CASE("tiny benchmark produces a coherent report") {
    WorkloadSpec spec{3, 6, 4, 1, 3, 5};
    BenchReport report = run_benchmark({spec}, 5);
    REQUIRE(report.rows.size() == 1);
    const BenchRow& row = report.rows[0];
    CHECK(row.repetitions == 5);
    CHECK(row.naive_ms >= 0.0);
    CHECK(row.vectorised_ms >= 0.0);
    CHECK(row.speedup > 0.0);
    CHECK(report.thread_count >= 1);
    CHECK(!render_bench_csv(report).empty());
    CHECK(render_bench_markdown(report).find("speedup") != std::string::npos);

    CHECK_THROWS_AS(run_benchmark({spec}, 2), std::invalid_argument);
}

TEST_CASE("the published ladder has six rungs") {
    auto specs = paper_ladder(50, 0);
    REQUIRE(specs.size() == 6);
    CHECK(specs.front().n_groups == 15);
    CHECK(specs.front().m_skills == 5);
    CHECK(specs.back().n_groups == 90);
    CHECK(specs.back().m_skills == 30);
    for (const auto& s : specs) {
        CHECK(s.docs_per_group == 50);
        CHECK(s.skills_max == s.m_skills / 2);
    }
}
