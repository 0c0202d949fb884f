#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "skillspace/errors.hpp"
#include "skillspace/impact.hpp"
#include "skillspace/rca.hpp"
#include "skillspace/simmatrix.hpp"
#include "test_util.hpp"

using namespace skillspace;

namespace {

ImpactReport anomaly_impact(const AnomalyBundle& bundle, const std::string& degree_group) {
    RcaMatrix r = rca_matrix(presence_matrix(bundle.corpus));
    SkillSimilarityMatrix theta = skill_similarity(effective_use(r));
    WeightedSkillSet degree = skill_weights(bundle.corpus, r, degree_group);
    WeightedSkillSet cert = skill_weights(bundle.corpus, r, bundle.cert);
    WeightedSkillSet role = skill_weights(bundle.corpus, r, bundle.role);
    return impact_decompose(degree, cert, role, theta, 0.2);
}

}  // namespace

TEST_CASE("direct and decomposed enhanced similarity agree on random inputs") {
    std::mt19937_64 rng(201);
    for (int trial = 0; trial < 100; ++trial) {
        SkillSimilarityMatrix theta = testutil::random_theta(rng, 10);
        auto s1 = testutil::random_weights(rng, 10, 5, "degree");
        auto s2 = testutil::random_weights(rng, 10, 5, "cert");
        auto t = testutil::random_weights(rng, 10, 6, "role");
        for (double alpha : {0.05, 0.2, 1.0}) {
            ImpactReport rep = impact_decompose(s1, s2, t, theta, alpha);
            CHECK(rep.identity_residual <= 1e-10);
            CHECK(rep.C_prime >= rep.C - 1e-12);
        }
    }
}

TEST_CASE("an irrelevant certification cannot raise the similarity") {
    // Skills {3, 4} are the cert's; they never co-occur with the role's
    // skills, so every cross-entry of theta they touch is zero.
    SkillSimilarityMatrix theta;
    theta.data = Matrix(5, 5);
    theta.skill_frequencies.assign(5, 1.0);
    for (std::size_t i = 0; i < 5; ++i) theta.data(i, i) = 1.0;
    theta.data(0, 1) = theta.data(1, 0) = 0.8;
    theta.data(0, 2) = theta.data(2, 0) = 0.4;
    theta.data(1, 2) = theta.data(2, 1) = 0.6;
    theta.data(3, 4) = theta.data(4, 3) = 0.9;

    std::mt19937_64 rng(211);
    std::uniform_real_distribution<double> weight(0.1, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        WeightedSkillSet s1, s2, t;
        s1.label = "degree";
        s2.label = "cert";
        t.label = "role";
        for (std::size_t s : {0ul, 1ul}) s1.weights[s] = weight(rng);
        for (std::size_t s : {3ul, 4ul}) s2.weights[s] = weight(rng);
        for (std::size_t s : {0ul, 1ul, 2ul}) t.weights[s] = weight(rng);
        ImpactReport rep = impact_decompose(s1, s2, t, theta, 0.2);
        CHECK(rep.cert_term == 0.0);
        CHECK(rep.C_prime > rep.C);
        CHECK(rep.enhanced_theta < rep.baseline_theta);
    }
}

TEST_CASE("percentage improvement on published-scale values") {
    // 0.53 -> 49.80 (in units of 1e-4) is a ~9296% gain; 48.13 -> 59.01 is ~23%.
    CHECK(percentage_improvement(0.53e-4, 49.80e-4) == doctest::Approx(9296.2).epsilon(0.01));
    CHECK(percentage_improvement(48.13e-4, 59.01e-4) == doctest::Approx(22.6).epsilon(0.01));
    CHECK(percentage_improvement(0.37, 0.37) == 0.0);
    CHECK_THROWS_AS(percentage_improvement(0.0, 1.0), BaselineZero);
    CHECK_THROWS_AS(percentage_improvement(-0.1, 1.0), BaselineZero);
}

TEST_CASE("report carries labels and ranked contributions") {
    std::mt19937_64 rng(223);
    SkillSimilarityMatrix theta = testutil::random_theta(rng, 8);
    auto s1 = testutil::random_weights(rng, 8, 4, "degree");
    auto s2 = testutil::random_weights(rng, 8, 4, "cert");
    auto t = testutil::random_weights(rng, 8, 5, "role");
    ImpactReport rep = impact_decompose(s1, s2, t, theta, 0.2, 3);
    CHECK(rep.degree_label == "degree");
    CHECK(rep.cert_label == "cert");
    CHECK(rep.role_label == "role");
    CHECK(rep.top_contributions.size() <= 3);
    for (std::size_t i = 1; i < rep.top_contributions.size(); ++i)
        CHECK(rep.top_contributions[i - 1].score >= rep.top_contributions[i].score);
}

TEST_CASE("anomaly scenario amplifies the smaller degree, deterministically") {
    AnomalyBundle bundle = anomaly_scenario(0);
    for (const auto& name :
         {bundle.small_degree, bundle.large_degree, bundle.cert, bundle.role})
        CHECK(bundle.corpus.groups.count(name) == 1);

    ImpactReport small = anomaly_impact(bundle, bundle.small_degree);
    ImpactReport large = anomaly_impact(bundle, bundle.large_degree);
    REQUIRE(small.percentage_improvement.has_value());
    REQUIRE(large.percentage_improvement.has_value());
    CHECK(small.baseline_theta < large.baseline_theta);
    CHECK(*small.percentage_improvement > *large.percentage_improvement);

    AnomalyBundle again = anomaly_scenario(0);
    CHECK(corpus_hash(again.corpus) == corpus_hash(bundle.corpus));
}
