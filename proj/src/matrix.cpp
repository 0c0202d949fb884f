#include "skillspace/matrix.hpp"

#include <cstring>
#include <fstream>

#include "skillspace/errors.hpp"

namespace skillspace {

void save_matrix(const Matrix& m, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out.write(kMatrixMagic, sizeof(kMatrixMagic));
    std::uint64_t n = m.rows(), cols = m.cols();
    out.write(reinterpret_cast<const char*>(&n), sizeof(n));
    out.write(reinterpret_cast<const char*>(&cols), sizeof(cols));
    std::vector<double> col(m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m(r, c);
        out.write(reinterpret_cast<const char*>(col.data()),
                  static_cast<std::streamsize>(col.size() * sizeof(double)));
    }
    if (!out) throw IoError("write failed: " + path.string());
}

Matrix load_matrix(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMatrixMagic, sizeof(magic)) != 0)
        throw IoError("bad matrix magic: " + path.string());
    std::uint64_t n = 0, m = 0;
    in.read(reinterpret_cast<char*>(&n), sizeof(n));
    in.read(reinterpret_cast<char*>(&m), sizeof(m));
    Matrix out(n, m);
    std::vector<double> col(n);
    for (std::size_t c = 0; c < m; ++c) {
        in.read(reinterpret_cast<char*>(col.data()),
                static_cast<std::streamsize>(col.size() * sizeof(double)));
        for (std::size_t r = 0; r < n; ++r) out(r, c) = col[r];
    }
    if (!in) throw IoError("truncated matrix file: " + path.string());
    return out;
}

}  // namespace skillspace
