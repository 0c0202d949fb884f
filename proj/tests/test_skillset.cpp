#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "skillspace/errors.hpp"
#include "skillspace/oracle.hpp"
#include "skillspace/rca.hpp"
#include "skillspace/skillset.hpp"
#include "test_util.hpp"

using namespace skillspace;

namespace {

SkillSimilarityMatrix identity_theta(std::size_t m) {
    SkillSimilarityMatrix theta;
    theta.data = Matrix(m, m);
    theta.skill_frequencies.assign(m, 1.0);
    for (std::size_t i = 0; i < m; ++i) theta.data(i, i) = 1.0;
    return theta;
}

WeightedSkillSet make_set(const std::string& label,
                          std::initializer_list<std::pair<std::size_t, double>> weights) {
    WeightedSkillSet set;
    set.label = label;
    for (const auto& [s, w] : weights) set.weights.emplace(s, w);
    return set;
}

}  // namespace

TEST_CASE("group weights are mean RCA over the group") {
    Corpus corpus;
    corpus.vocabulary.add("s0");
    corpus.vocabulary.add("s1");
    corpus.documents = {{"d1", "G", {0}}, {"d2", "G", {0, 1}}};
    corpus.groups = {{"G", {0, 1}}};
    RcaMatrix r = rca_matrix(presence_matrix(corpus));
    WeightedSkillSet set = skill_weights(corpus, r, "G");
    // (1.5 + 0.75) / 2
    CHECK(set.weights.at(0) == doctest::Approx(1.125).epsilon(1e-15));

    Corpus single = corpus;
    single.groups = {{"G1", {0}}, {"G2", {1}}};
    single.documents[0].group = "G1";
    single.documents[1].group = "G2";
    WeightedSkillSet one = skill_weights(single, r, "G2");
    CHECK(one.weights.at(0) == doctest::Approx(r.data(1, 0)));
    CHECK(one.weights.at(1) == doctest::Approx(r.data(1, 1)));

    CHECK_THROWS_AS(skill_weights(corpus, r, "missing"), UnknownGroup);
}

TEST_CASE("group weights match the naive per-skill mean") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        Corpus corpus = testutil::random_corpus(rng, 18, 7);
        RcaMatrix r = rca_matrix(presence_matrix(corpus));
        for (const auto& [group, _] : corpus.groups) {
            WeightedSkillSet vec = skill_weights(corpus, r, group);
            WeightedSkillSet naive = oracle::naive_skill_weights(corpus, r, group);
            REQUIRE(vec.weights.size() == naive.weights.size());
            for (const auto& [s, w] : vec.weights)
                CHECK(w == doctest::Approx(naive.weights.at(s)).epsilon(1e-12));
        }
    }
}

TEST_CASE("cosine SSS of a singleton with itself is one") {
    auto theta = identity_theta(3);
    auto a = make_set("a", {{1, 0.7}});
    CHECK(sss_cosine(a, a, theta) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("disjoint supports under identity theta score zero") {
    auto theta = identity_theta(4);
    auto a = make_set("a", {{0, 1.0}, {1, 2.0}});
    auto b = make_set("b", {{2, 0.5}, {3, 1.5}});
    CHECK(sss_cosine(a, b, theta) == 0.0);
    CHECK(sss_weighted(a, b, theta).value == 0.0);
}

TEST_CASE("weighted SSS of constant theta is that constant") {
    std::mt19937_64 rng(7);
    SkillSimilarityMatrix theta;
    theta.data = Matrix(5, 5, 0.3);
    theta.skill_frequencies.assign(5, 1.0);
    auto a = testutil::random_weights(rng, 5, 4, "a");
    auto b = testutil::random_weights(rng, 5, 4, "b");
    auto res = sss_weighted(a, b, theta);
    CHECK(res.value == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(res.normalization > 0.0);
}

TEST_CASE("both norms match the naive loops on random instances") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        SkillSimilarityMatrix theta = testutil::random_theta(rng, 9);
        auto a = testutil::random_weights(rng, 9, 5, "a");
        auto b = testutil::random_weights(rng, 9, 5, "b");
        CHECK(sss_cosine(a, b, theta) ==
              doctest::Approx(oracle::naive_sss(a, b, theta, oracle::SssNorm::cosine))
                  .epsilon(1e-12));
        CHECK(sss_weighted(a, b, theta).value ==
              doctest::Approx(oracle::naive_sss(a, b, theta, oracle::SssNorm::weighted))
                  .epsilon(1e-12));
    }
}

TEST_CASE("symmetry and scale invariance") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        SkillSimilarityMatrix theta = testutil::random_theta(rng, 8);
        auto a = testutil::random_weights(rng, 8, 5, "a");
        auto b = testutil::random_weights(rng, 8, 5, "b");
        CHECK(sss_cosine(a, b, theta) == doctest::Approx(sss_cosine(b, a, theta)).epsilon(1e-12));
        CHECK(sss_weighted(a, b, theta).value ==
              doctest::Approx(sss_weighted(b, a, theta).value).epsilon(1e-12));

        WeightedSkillSet scaled = a;
        for (auto& [_, w] : scaled.weights) w *= 17.5;
        CHECK(sss_cosine(scaled, b, theta) ==
              doctest::Approx(sss_cosine(a, b, theta)).epsilon(1e-12));
        CHECK(sss_weighted(scaled, b, theta).value ==
              doctest::Approx(sss_weighted(a, b, theta).value).epsilon(1e-12));

        // Weighted form is a weighted average of theta entries.
        CHECK(sss_weighted(a, b, theta).value >= 0.0);
        CHECK(sss_weighted(a, b, theta).value <= 1.0 + 1e-12);
    }
}

TEST_CASE("empty sets are rejected") {
    auto theta = identity_theta(2);
    WeightedSkillSet empty;
    empty.label = "empty";
    auto a = make_set("a", {{0, 1.0}});
    CHECK_THROWS_AS(sss_cosine(empty, a, theta), EmptySkillSet);
    CHECK_THROWS_AS(sss_weighted(a, empty, theta), EmptySkillSet);
}

TEST_CASE("latent alignment single-term and zero-row cases") {
    SkillSimilarityMatrix theta;
    theta.data = Matrix(3, 3);
    theta.skill_frequencies.assign(3, 1.0);
    theta.data(0, 1) = theta.data(1, 0) = 0.5;
    auto a = make_set("a", {{0, 1.0}});
    auto b = make_set("b", {{1, 1.0}});
    CHECK(latent_alignment(1, a, b, theta) == doctest::Approx(0.5));
    auto b2 = make_set("b2", {{2, 1.0}});
    CHECK(latent_alignment(2, a, b2, theta) == 0.0);
    CHECK_THROWS_AS(latent_alignment(0, a, b, theta), TargetSkillNotInB);
}

TEST_CASE("latent alignment is linear in the target weight and matches naive") {
    std::mt19937_64 rng(88);
    for (int trial = 0; trial < 30; ++trial) {
        SkillSimilarityMatrix theta = testutil::random_theta(rng, 7);
        auto a = testutil::random_weights(rng, 7, 4, "a");
        auto b = testutil::random_weights(rng, 7, 4, "b");
        const std::size_t target = b.weights.begin()->first;
        const double base = latent_alignment(target, a, b, theta);
        CHECK(base == doctest::Approx(oracle::naive_latent_alignment(target, a, b, theta))
                          .epsilon(1e-12));
        WeightedSkillSet b_scaled = b;
        b_scaled.weights[target] *= 3.0;
        CHECK(latent_alignment(target, a, b_scaled, theta) ==
              doctest::Approx(3.0 * base).epsilon(1e-12));
    }
}

TEST_CASE("top alignments: singleton target, tie broken by lower id") {
    SkillSimilarityMatrix theta;
    theta.data = Matrix(4, 4);
    theta.skill_frequencies.assign(4, 1.0);
    for (std::size_t i = 0; i < 4; ++i) theta.data(i, i) = 1.0;
    auto a = make_set("a", {{0, 1.0}});
    auto single = make_set("b", {{0, 2.0}});
    auto rows = top_alignments(a, single, theta, 10);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].skill == 0);

    // Skills 2 and 3 both score zero against a's support.
    auto b = make_set("b", {{2, 1.0}, {3, 1.0}});
    auto tied = top_alignments(a, b, theta, 2);
    REQUIRE(tied.size() == 2);
    CHECK(tied[0].score == tied[1].score);
    CHECK(tied[0].skill == 2);
    CHECK(tied[1].skill == 3);
}

TEST_CASE("a cert-introduced skill dominating the role ranks first") {
    // Corpus where the "dominant" skill is both heavily weighted in the
    // educational set and central to the role group.
    Corpus corpus;
    const std::size_t dom = corpus.vocabulary.add("dominant");
    const std::size_t minor1 = corpus.vocabulary.add("minor1");
    const std::size_t minor2 = corpus.vocabulary.add("minor2");
    std::size_t j = 0;
    auto add = [&](const std::string& g, std::vector<std::size_t> skills) {
        corpus.groups[g].push_back(corpus.documents.size());
        corpus.documents.push_back({"d" + std::to_string(j++), g, std::move(skills)});
    };
    add("role", {dom, minor1});
    add("role", {dom, minor2});
    add("role", {dom});
    add("edu", {dom});
    add("edu", {dom, minor1});
    RcaMatrix r = rca_matrix(presence_matrix(corpus));
    SkillSimilarityMatrix theta = skill_similarity(effective_use(r));
    WeightedSkillSet edu = skill_weights(corpus, r, "edu");
    WeightedSkillSet role = skill_weights(corpus, r, "role");
    auto rows = top_alignments(edu, role, theta, 5);
    REQUIRE(!rows.empty());
    // Exhaustive check: the reported head really is the max over all targets.
    for (const auto& [target, _] : role.weights)
        CHECK(rows[0].score >= latent_alignment(target, edu, role, theta));
    CHECK(rows[0].skill == dom);
}
