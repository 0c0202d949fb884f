#include "skillspace/rca.hpp"

#include <cstdint>

namespace skillspace {

RcaMatrix rca_matrix(const PresenceMatrix& p) {
    const std::size_t n = p.data.rows(), m = p.data.cols();
    RcaMatrix r;
    r.data = Matrix(n, m);
    r.skills_per_job.assign(n, 0.0);
    r.jobs_per_skill.assign(m, 0.0);

    for (std::size_t j = 0; j < n; ++j) {
        const double* row = p.data.row(j);
        double sum = 0.0;
        for (std::size_t s = 0; s < m; ++s) {
            sum += row[s];
            r.jobs_per_skill[s] += row[s];
        }
        r.skills_per_job[j] = sum;
        r.total_occurrences += sum;
    }
    for (std::size_t s = 0; s < m; ++s)
        if (r.jobs_per_skill[s] == 0.0) r.degenerate_columns.push_back(s);

    const double d = r.total_occurrences;
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(n); ++j) {
        const double* pr = p.data.row(j);
        double* rr = r.data.row(static_cast<std::size_t>(j));
        const double b = r.skills_per_job[static_cast<std::size_t>(j)];
        for (std::size_t s = 0; s < m; ++s) {
            const double c = r.jobs_per_skill[s];
            rr[s] = c > 0.0 ? (pr[s] / b) / (c / d) : 0.0;
        }
    }
    return r;
}

}  // namespace skillspace
