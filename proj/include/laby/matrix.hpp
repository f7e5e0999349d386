#pragma once

#include <array>
#include <cstddef>
#include <sstream>
#include <string>

#include "laby/bigint.hpp"
#include "laby/rational.hpp"

namespace laby {

// Fixed-size square matrix of exact integers. All identities asserted on
// these are exact equalities, never floating-point comparisons.
template <std::size_t N>
class SquareMatrix {
public:
    SquareMatrix() = default;

    static SquareMatrix identity() {
        SquareMatrix m;
        for (std::size_t i = 0; i < N; ++i) m.at(i, i) = BigInt(1);
        return m;
    }

    BigInt& at(std::size_t row, std::size_t col) { return cells_[row * N + col]; }
    const BigInt& at(std::size_t row, std::size_t col) const { return cells_[row * N + col]; }

    SquareMatrix operator+(const SquareMatrix& o) const {
        SquareMatrix r;
        for (std::size_t i = 0; i < N * N; ++i) r.cells_[i] = cells_[i] + o.cells_[i];
        return r;
    }

    SquareMatrix operator*(const SquareMatrix& o) const {
        SquareMatrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const BigInt& a = at(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < N; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    SquareMatrix& operator+=(const SquareMatrix& o) { return *this = *this + o; }

    bool operator==(const SquareMatrix& o) const = default;

    std::array<BigInt, N> row_sums() const {
        std::array<BigInt, N> sums;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) sums[i] += at(i, j);
        return sums;
    }

    std::array<Rational, N> apply(const std::array<Rational, N>& v) const {
        std::array<Rational, N> out;
        for (std::size_t i = 0; i < N; ++i) {
            Rational acc;
            for (std::size_t j = 0; j < N; ++j) acc += Rational(at(i, j)) * v[j];
            out[i] = acc;
        }
        return out;
    }

    static SquareMatrix power(const SquareMatrix& base, unsigned exponent) {
        SquareMatrix result = identity(), acc = base;
        while (exponent) {
            if (exponent & 1u) result = result * acc;
            exponent >>= 1;
            if (exponent) acc = acc * acc;
        }
        return result;
    }

    // rows of space-separated integers
    std::string to_text() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                if (j) os << ' ';
                os << at(i, j);
            }
            os << '\n';
        }
        return os.str();
    }

    std::string to_csv(const std::array<std::string, N>& row_labels,
                       const std::array<std::string, N>& col_labels) const {
        std::ostringstream os;
        for (std::size_t j = 0; j < N; ++j) os << ',' << col_labels[j];
        os << '\n';
        for (std::size_t i = 0; i < N; ++i) {
            os << row_labels[i];
            for (std::size_t j = 0; j < N; ++j) os << ',' << at(i, j);
            os << '\n';
        }
        return os.str();
    }

private:
    std::array<BigInt, N * N> cells_{};
};

// 6x6 path matrix: rows = path kind, columns = square type, both over {A..F}.
using PathMatrix = SquareMatrix<6>;
// 6x6 counting matrix, one per member pattern of the next collection.
using CountingMatrix = SquareMatrix<6>;
// 4x4 reduced path matrix: rows (A, B, C+E, D+F), columns (A, B, C, D).
using ReducedPathMatrix = SquareMatrix<4>;

}  // namespace laby
