#include "logdegen/matrix.hpp"

#include <sstream>

namespace logdegen {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> data) {
    rows = data.size();
    cols = rows ? data.begin()->size() : 0;
    entries.reserve(rows * cols);
    for (const auto& row : data) {
        if (row.size() != cols) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (const auto& x : row) entries.push_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : entries)
        if (x != 0) return false;
    return true;
}

IntMatrix IntMatrix::col(std::size_t j) const {
    IntMatrix c(rows, 1);
    for (std::size_t i = 0; i < rows; ++i) c.at(i, 0) = at(i, j);
    return c;
}

IntMatrix IntMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    IntMatrix s(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) s.at(i, j) = at(r0 + i, c0 + j);
    return s;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mul: shape mismatch");
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("add: shape mismatch");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.entries.size(); ++i) c.entries[i] += b.entries[i];
    return c;
}

IntMatrix sub(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("sub: shape mismatch");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.entries.size(); ++i) c.entries[i] -= b.entries[i];
    return c;
}

IntMatrix neg(const IntMatrix& a) {
    IntMatrix c = a;
    for (auto& x : c.entries) x = -x;
    return c;
}

IntMatrix scalar_mul(const Int& s, const IntMatrix& a) {
    IntMatrix c = a;
    for (auto& x : c.entries) x *= s;
    return c;
}

IntMatrix transpose(const IntMatrix& a) {
    IntMatrix t(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows) throw std::invalid_argument("hstack: row mismatch");
    IntMatrix c(a.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols; ++j) c.at(i, a.cols + j) = b.at(i, j);
    }
    return c;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.cols) throw std::invalid_argument("vstack: col mismatch");
    IntMatrix c(a.rows + b.rows, a.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) c.at(a.rows + i, j) = b.at(i, j);
    return c;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            const Int& aij = a.at(i, j);
            if (aij == 0) continue;
            for (std::size_t k = 0; k < b.rows; ++k)
                for (std::size_t l = 0; l < b.cols; ++l)
                    c.at(i * b.rows + k, j * b.cols + l) = aij * b.at(k, l);
        }
    return c;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows + b.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) c.at(a.rows + i, a.cols + j) = b.at(i, j);
    return c;
}

std::string to_string(const IntMatrix& a) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.rows; ++i) {
        os << '[';
        for (std::size_t j = 0; j < a.cols; ++j) {
            os << a.at(i, j);
            if (j + 1 < a.cols) os << ',';
        }
        os << ']';
        if (i + 1 < a.rows) os << ',';
    }
    os << ']';
    return os.str();
}

} // namespace logdegen
