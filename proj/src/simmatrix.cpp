#include "skillspace/simmatrix.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>

#include "skillspace/errors.hpp"

namespace skillspace {

EffectiveUseMatrix effective_use(const RcaMatrix& r, double threshold) {
    const std::size_t n = r.data.rows(), m = r.data.cols();
    EffectiveUseMatrix e{Matrix(n, m)};
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(n); ++j) {
        const double* rr = r.data.row(static_cast<std::size_t>(j));
        double* er = e.data.row(static_cast<std::size_t>(j));
        for (std::size_t s = 0; s < m; ++s) er[s] = rr[s] >= threshold ? 1.0 : 0.0;
    }
    return e;
}

SkillSimilarityMatrix skill_similarity(const EffectiveUseMatrix& e) {
    const std::size_t n = e.data.rows(), m = e.data.cols();
    SkillSimilarityMatrix out;
    out.data = Matrix(m, m);
    out.skill_frequencies.assign(m, 0.0);

    // Joint frequency N = E^T E, upper triangle only; symmetry by copy.
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(m); ++i) {
        for (std::size_t k = static_cast<std::size_t>(i); k < m; ++k) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                acc += e.data(j, static_cast<std::size_t>(i)) * e.data(j, k);
            out.data(static_cast<std::size_t>(i), k) = acc;
        }
    }
    for (std::size_t i = 0; i < m; ++i) out.skill_frequencies[i] = out.data(i, i);

    // The antecedent max(q_i, q_k) is applied per entry; the tiled matrix
    // from the algebraic formulation is never materialized.
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(m); ++i) {
        const double qi = out.skill_frequencies[static_cast<std::size_t>(i)];
        for (std::size_t k = static_cast<std::size_t>(i); k < m; ++k) {
            const double denom = std::max(qi, out.skill_frequencies[k]);
            const double v = denom > 0.0 ? out.data(static_cast<std::size_t>(i), k) / denom : 0.0;
            out.data(static_cast<std::size_t>(i), k) = v;
            out.data(k, static_cast<std::size_t>(i)) = v;
        }
    }
    return out;
}

namespace {
constexpr char kThetaMagic[8] = {'S', 'S', 'T', 'H', 'E', 'T', 'A', '1'};
}

void save_theta(const SkillSimilarityMatrix& theta, const SkillVocabulary& vocab,
                std::uint64_t source_hash, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out.write(kThetaMagic, sizeof(kThetaMagic));
    std::uint64_t m = theta.data.rows();
    out.write(reinterpret_cast<const char*>(&m), sizeof(m));
    out.write(reinterpret_cast<const char*>(&source_hash), sizeof(source_hash));
    out.write(reinterpret_cast<const char*>(theta.skill_frequencies.data()),
              static_cast<std::streamsize>(m * sizeof(double)));
    std::vector<double> col(m);
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t r = 0; r < m; ++r) col[r] = theta.data(r, c);
        out.write(reinterpret_cast<const char*>(col.data()),
                  static_cast<std::streamsize>(m * sizeof(double)));
    }
    if (!out) throw IoError("write failed: " + path.string());

    std::filesystem::path sidecar = path;
    sidecar += ".vocab.txt";
    std::ofstream voc(sidecar);
    if (!voc) throw IoError("cannot write sidecar: " + sidecar.string());
    for (const auto& name : vocab.names()) voc << name << '\n';
}

SkillSimilarityMatrix load_theta(const std::filesystem::path& path,
                                 std::uint64_t expected_hash) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kThetaMagic, sizeof(magic)) != 0)
        throw IoError("bad theta magic: " + path.string());
    std::uint64_t m = 0, hash = 0;
    in.read(reinterpret_cast<char*>(&m), sizeof(m));
    in.read(reinterpret_cast<char*>(&hash), sizeof(hash));
    if (hash != expected_hash)
        throw IoError("stale theta cache (corpus changed): " + path.string());
    SkillSimilarityMatrix theta;
    theta.skill_frequencies.assign(m, 0.0);
    in.read(reinterpret_cast<char*>(theta.skill_frequencies.data()),
            static_cast<std::streamsize>(m * sizeof(double)));
    theta.data = Matrix(m, m);
    std::vector<double> col(m);
    for (std::size_t c = 0; c < m; ++c) {
        in.read(reinterpret_cast<char*>(col.data()),
                static_cast<std::streamsize>(m * sizeof(double)));
        for (std::size_t r = 0; r < m; ++r) theta.data(r, c) = col[r];
    }
    if (!in) throw IoError("truncated theta file: " + path.string());
    return theta;
}

void export_theta_csv(const SkillSimilarityMatrix& theta, const SkillVocabulary& vocab,
                      const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "skill";
    for (const auto& name : vocab.names()) out << ',' << name;
    out << '\n';
    out << std::setprecision(17);
    for (std::size_t i = 0; i < theta.data.rows(); ++i) {
        out << vocab.name(i);
        for (std::size_t k = 0; k < theta.data.cols(); ++k) out << ',' << theta.data(i, k);
        out << '\n';
    }
}

}  // namespace skillspace
