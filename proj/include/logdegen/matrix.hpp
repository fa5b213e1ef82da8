#pragma once
// Dense integer matrices. Column-vector convention throughout: a matrix
// M with shape (rows x cols) represents a map Z^cols -> Z^rows, and
// composition is matrix multiplication M2*M1.

#include "logdegen/ints.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace logdegen {

struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> entries; // row-major, rows*cols

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> data);

    Int& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    static IntMatrix zero(std::size_t r, std::size_t c) { return IntMatrix(r, c); }
    static IntMatrix identity(std::size_t n);

    bool is_zero() const;
    bool is_square() const { return rows == cols; }

    IntMatrix col(std::size_t j) const;      // single column as rows x 1
    IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix add(const IntMatrix& a, const IntMatrix& b);
IntMatrix sub(const IntMatrix& a, const IntMatrix& b);
IntMatrix neg(const IntMatrix& a);
IntMatrix scalar_mul(const Int& c, const IntMatrix& a);
IntMatrix transpose(const IntMatrix& a);
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b); // [a | b]
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b); // [a ; b]
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);   // Kronecker / tensor product

// 2x2 block-diagonal assembly (zero off-diagonal blocks)
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

std::string to_string(const IntMatrix& a); // [[...],[...]] row-major

} // namespace logdegen
