#include "skillspace/impact.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "skillspace/errors.hpp"

namespace skillspace {

std::pair<double, double> baseline_similarity(const WeightedSkillSet& s1,
                                              const WeightedSkillSet& t,
                                              const SkillSimilarityMatrix& theta) {
    auto res = sss_weighted(s1, t, theta);
    return {res.value, res.normalization};
}

double percentage_improvement(double baseline, double enhanced) {
    if (baseline <= 0.0) throw BaselineZero();
    return 100.0 * (enhanced - baseline) / baseline;
}

ImpactReport impact_decompose(const WeightedSkillSet& s1, const WeightedSkillSet& s2,
                              const WeightedSkillSet& t, const SkillSimilarityMatrix& theta,
                              double alpha, std::size_t top_k) {
    if (t.weights.empty()) throw EmptySkillSet(t.label);

    ImpactReport report;
    report.degree_label = s1.label;
    report.cert_label = s2.label;
    report.role_label = t.label;

    auto [baseline, c] = baseline_similarity(s1, t, theta);
    report.baseline_theta = baseline;
    report.C = c;

    CombinedSkillSet combined = combine(s1, s2, alpha);
    report.enhanced_theta = sss_weighted(combined.set, t, theta).value;

    // The additive term sums over all of S2 with transformed weights,
    // overlap skills included; C' = C plus the matching weight products.
    double cert_term = 0.0, cert_norm = 0.0;
    for (const auto& [s, w2] : s2.weights) {
        const double wt = combined.params.apply(w2);
        for (const auto& [tt, wtt] : t.weights) {
            cert_term += wt * wtt * theta.data(s, tt);
            cert_norm += wt * wtt;
        }
    }
    report.cert_term = cert_term;
    report.C_prime = c + cert_norm;

    const double decomposed = (c / report.C_prime) * baseline + cert_term / report.C_prime;
    const double scale = std::max(std::abs(report.enhanced_theta), std::abs(decomposed));
    report.identity_residual =
        scale > 0.0 ? std::abs(report.enhanced_theta - decomposed) / scale : 0.0;

    if (baseline > 0.0)
        report.percentage_improvement = percentage_improvement(baseline, report.enhanced_theta);

    report.top_contributions = top_alignments(combined.set, t, theta, top_k);
    return report;
}

AnomalyBundle anomaly_scenario(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    AnomalyBundle bundle;
    Corpus& corpus = bundle.corpus;

    constexpr std::size_t kRoleSkills = 8;
    constexpr std::size_t kSmallFillers = 6;
    constexpr std::size_t kLargeFillers = 40;

    std::vector<std::size_t> role_skills, small_fillers, large_fillers;
    for (std::size_t i = 0; i < kRoleSkills; ++i)
        role_skills.push_back(corpus.vocabulary.add("role_skill_" + std::to_string(i)));
    const std::size_t bridge = corpus.vocabulary.add("bridge_skill");
    for (std::size_t i = 0; i < kSmallFillers; ++i)
        small_fillers.push_back(corpus.vocabulary.add("small_filler_" + std::to_string(i)));
    for (std::size_t i = 0; i < kLargeFillers; ++i)
        large_fillers.push_back(corpus.vocabulary.add("large_filler_" + std::to_string(i)));

    std::set<std::string> ids;
    std::size_t next_id = 0;
    auto emit = [&](const std::string& group, std::set<std::size_t> skills) {
        Document doc;
        doc.id = "d" + std::to_string(next_id++);
        doc.group = group;
        doc.skills.assign(skills.begin(), skills.end());
        corpus.groups[group].push_back(corpus.documents.size());
        corpus.documents.push_back(std::move(doc));
    };
    auto pick = [&](const std::vector<std::size_t>& pool, std::size_t count) {
        std::set<std::size_t> chosen;
        std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
        while (chosen.size() < count) chosen.insert(pool[dist(rng)]);
        return chosen;
    };

    // Role ads: role skills only, except one ad that also carries the
    // bridge skill. That single co-occurrence keeps the small degree's
    // baseline positive but very weak.
    for (std::size_t i = 0; i < 20; ++i) {
        std::uniform_int_distribution<std::size_t> count(3, 5);
        auto skills = pick(role_skills, count(rng));
        if (i == 0) skills.insert(bridge);
        emit(bundle.role, std::move(skills));
    }
    // Certification syllabus units cover role skills only.
    for (std::size_t i = 0; i < 10; ++i) {
        std::uniform_int_distribution<std::size_t> count(2, 4);
        emit(bundle.cert, pick(role_skills, count(rng)));
    }
    // Small degree: the bridge plus a couple of unrelated skills. Its only
    // link to the role is the bridge's single co-occurrence above.
    for (std::size_t i = 0; i < 6; ++i) {
        auto skills = pick(small_fillers, 3);
        skills.insert(bridge);
        emit(bundle.small_degree, std::move(skills));
    }
    // Large degree: direct role-skill overlap in every document plus a
    // broad filler spread, so its baseline is solid and the certification
    // arrives heavily diluted.
    for (std::size_t i = 0; i < 6; ++i) {
        std::uniform_int_distribution<std::size_t> count(12, 18);
        auto skills = pick(large_fillers, count(rng));
        auto overlap = pick(role_skills, 4);
        skills.insert(overlap.begin(), overlap.end());
        skills.insert(bridge);
        emit(bundle.large_degree, std::move(skills));
    }
    return bundle;
}

}  // namespace skillspace
