#include "skillspace/augment.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "skillspace/errors.hpp"

namespace skillspace {

using nlohmann::json;

namespace {

std::pair<double, double> weight_range(const WeightedSkillSet& set) {
    double lo = set.weights.begin()->second, hi = lo;
    for (const auto& [_, w] : set.weights) {
        lo = std::min(lo, w);
        hi = std::max(hi, w);
    }
    return {lo, hi};
}

}  // namespace

TransformParams transform_params(const WeightedSkillSet& s1, const WeightedSkillSet& s2,
                                 double alpha) {
    if (s1.weights.empty()) throw EmptySkillSet(s1.label);
    if (s2.weights.empty()) throw EmptySkillSet(s2.label);
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must be in (0, 1]");

    TransformParams p;
    p.alpha = alpha;
    std::tie(p.min_s1, p.max_s1) = weight_range(s1);
    std::tie(p.min_s2, p.max_s2) = weight_range(s2);

    const double range1 = p.max_s1 - p.min_s1;
    const double range2 = p.max_s2 - p.min_s2;
    if (range2 == 0.0) {
        // Single-valued certification: every skill enters at the top of the
        // degree's range.
        p.degenerate_cert = true;
        p.a = 0.0;
        p.b_coeff = p.max_s1;
        return p;
    }
    if (range1 == 0.0) {
        // Flat degree weights: cert skills enter at the common weight.
        p.degenerate_degree = true;
        p.a = 0.0;
        p.b_coeff = p.min_s1;
        return p;
    }
    p.a = alpha * range1 / range2;
    p.b_coeff = (1.0 - alpha) * range1 + p.min_s1 - p.a * p.min_s2;
    return p;
}

CombinedSkillSet combine(const WeightedSkillSet& s1, const WeightedSkillSet& s2,
                         double alpha) {
    CombinedSkillSet out;
    out.params = transform_params(s1, s2, alpha);
    out.set.label = s1.label + "+" + s2.label;
    out.set.provenance = Provenance::combined;

    for (const auto& [s, w] : s1.weights) {
        out.set.weights.emplace(s, w);
        out.origin.emplace(s, Origin::degree_only);
    }
    for (const auto& [s, w] : s2.weights) {
        const double wt = out.params.apply(w);
        auto [it, inserted] = out.set.weights.emplace(s, wt);
        if (inserted) {
            out.origin.emplace(s, Origin::cert_only);
        } else {
            it->second += wt;
            out.origin[s] = Origin::both;
        }
    }
    return out;
}

void save_combined(const CombinedSkillSet& combined, const SkillVocabulary& vocab,
                   const std::filesystem::path& path) {
    json weights = json::object();
    json origin = json::object();
    static constexpr const char* kOriginNames[] = {"degree_only", "cert_only", "both"};
    for (const auto& [s, w] : combined.set.weights) weights[vocab.name(s)] = w;
    for (const auto& [s, o] : combined.origin)
        origin[vocab.name(s)] = kOriginNames[static_cast<int>(o)];
    json obj{{"label", combined.set.label}, {"weights", weights}, {"origin", origin}};
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << obj.dump(2) << '\n';
}

}  // namespace skillspace
