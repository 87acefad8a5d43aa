#include "forge/int_matrix.hpp"

#include "forge/caps.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace forge {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {
    require(rows >= 1 && cols >= 1, "IntMatrix: need rows >= 1 and cols >= 1");
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    require(rows >= 1 && cols >= 1, "IntMatrix: need rows >= 1 and cols >= 1");
    require(e_.size() == rows * cols, "IntMatrix: entry count mismatch");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : rows_(rows.size()), cols_(rows.begin()->size()) {
    require(rows_ >= 1 && cols_ >= 1, "IntMatrix: need rows >= 1 and cols >= 1");
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        require(r.size() == cols_, "IntMatrix: ragged initializer");
        e_.insert(e_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero_one() const {
    return std::all_of(e_.begin(), e_.end(),
                       [](const Int& v) { return v == 0 || v == 1; });
}

IntMatrix IntMatrix::rows_subset(const std::vector<std::size_t>& idx) const {
    require(!idx.empty(), "rows_subset: empty selection");
    IntMatrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        require(idx[i] < rows_, "rows_subset: row index out of range");
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(idx[i], j);
    }
    return out;
}

std::optional<std::vector<std::int64_t>> IntMatrix::to_i64() const {
    std::vector<std::int64_t> out;
    out.reserve(e_.size());
    static const Int kMin = std::numeric_limits<std::int64_t>::min();
    static const Int kMax = std::numeric_limits<std::int64_t>::max();
    for (const Int& v : e_) {
        if (v < kMin || v > kMax) return std::nullopt;
        out.push_back(static_cast<std::int64_t>(v));
    }
    return out;
}

IntMatrix matrix_tensor(const IntMatrix& a, const IntMatrix& b,
                        std::uint64_t max_entries) {
    const std::uint64_t r = std::uint64_t{a.rows()} * b.rows();
    const std::uint64_t c = std::uint64_t{a.cols()} * b.cols();
    require_cap(r != 0 && c != 0 && r <= max_entries / c,
                "matrix_tensor: result exceeds entry cap");
    IntMatrix out(r, c);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t ip = 0; ip < b.rows(); ++ip)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                const Int& av = a.at(i, j);
                if (av == 0) continue;
                for (std::size_t jp = 0; jp < b.cols(); ++jp) {
                    const Int& bv = b.at(ip, jp);
                    if (bv == 0) continue;
                    out.at(i * b.rows() + ip, j * b.cols() + jp) = av * bv;
                }
            }
    return out;
}

IntMatrix matrix_tensor(const IntMatrix& a, const IntMatrix& b) {
    return matrix_tensor(a, b, Caps::current().matrix_entries);
}

IntMatrix tensor_amplify(const IntMatrix& b, std::size_t k,
                         std::uint64_t max_entries) {
    require(k >= 1, "tensor_amplify: k must be >= 1");
    IntMatrix out = b;
    for (std::size_t i = 1; i < k; ++i) out = matrix_tensor(out, b, max_entries);
    return out;
}

IntMatrix tensor_amplify(const IntMatrix& b, std::size_t k) {
    return tensor_amplify(b, k, Caps::current().matrix_entries);
}

IntMatrix hconcat(const std::vector<const IntMatrix*>& parts) {
    require(!parts.empty(), "hconcat: no parts");
    const std::size_t rows = parts.front()->rows();
    std::size_t cols = 0;
    for (const IntMatrix* p : parts) {
        require(p->rows() == rows, "hconcat: row count mismatch");
        cols += p->cols();
    }
    IntMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        std::size_t off = 0;
        for (const IntMatrix* p : parts) {
            for (std::size_t j = 0; j < p->cols(); ++j)
                out.at(i, off + j) = p->at(i, j);
            off += p->cols();
        }
    }
    return out;
}

IntMatrix hconcat_copies(const IntMatrix& m, std::size_t copies,
                         std::uint64_t max_entries) {
    require(copies >= 1, "hconcat_copies: need at least one copy");
    require_cap(std::uint64_t{m.rows()} * m.cols() <= max_entries / copies,
                "hconcat_copies: result exceeds entry cap");
    std::vector<const IntMatrix*> parts(copies, &m);
    return hconcat(parts);
}

std::vector<Int> row_vector_times(const std::vector<Int>& x,
                                  const IntMatrix& m) {
    require(x.size() == m.rows(), "row_vector_times: dimension mismatch");
    std::vector<Int> out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Int& v = m.at(i, j);
            if (v != 0) out[j] += x[i] * v;
        }
    }
    return out;
}

namespace {

// Reduced row echelon form over Q. Returns pivot column per pivot row.
std::vector<std::size_t> rref(std::vector<std::vector<Rat>>& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        const Rat inv = a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<Int> to_primitive(const std::vector<Rat>& v) {
    Int lcm = 1;
    for (const Rat& x : v)
        lcm = boost::multiprecision::lcm(lcm, Int(denominator(x)));
    std::vector<Int> w(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = Int(numerator(v[i])) * (lcm / Int(denominator(v[i])));
        g = boost::multiprecision::gcd(g, w[i]);
    }
    if (g > 1)
        for (Int& x : w) x /= g;
    for (const Int& x : w) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : w) y = -y;
        break;
    }
    return w;
}

} // namespace

std::vector<std::vector<Int>> left_kernel_basis(const IntMatrix& m) {
    // x M = 0 over the row index space: run RREF on M^T.
    const std::size_t n = m.rows();
    std::vector<std::vector<Rat>> t(m.cols(), std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t[j][i] = Rat(m.at(i, j));
    const std::vector<std::size_t> pivots = rref(t);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Int>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(n);
        v[free] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -t[pr][free];
        basis.push_back(to_primitive(v));
    }
    return basis;
}

std::size_t rank(const IntMatrix& m) {
    std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rat(m.at(i, j));
    return rref(a).size();
}

Int determinant(const IntMatrix& m) {
    require(m.rows() == m.cols(), "determinant: matrix must be square");
    const std::size_t n = m.rows();
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    // Bareiss fraction-free elimination; divisions are exact.
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t sel = k + 1;
            while (sel < n && a[sel][k] == 0) ++sel;
            if (sel == n) return 0;
            std::swap(a[sel], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

} // namespace forge
