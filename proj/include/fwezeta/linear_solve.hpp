/*
   Copyright 2026 The fwe-zeta Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FWEZETA_LINEAR_SOLVE_HPP
#define FWEZETA_LINEAR_SOLVE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace fwezeta {

using RationalMatrix = std::vector<std::vector<Rational>>;

class SingularMatrixError : public std::runtime_error {
   public:
    explicit SingularMatrixError(std::size_t column)
        : std::runtime_error("singular matrix: no pivot in column " + std::to_string(column)), column_(column) {}
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t column_;
};

/// Solves A x = b exactly by Gauss-Jordan elimination. The pivot is the first
/// nonzero entry at or below the diagonal; there is no magnitude heuristic.
inline std::vector<Rational> solve_linear(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve_linear: right-hand side has wrong length");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("solve_linear: matrix is not square");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrixError(col);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
        }
        const Rational inv = Rational(1) / a[col][col];
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Rational f = a[r][col];
            for (std::size_t j = col; j < n; ++j)
                if (!a[col][j].is_zero()) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    return b;
}

}  // namespace fwezeta

#endif  // FWEZETA_LINEAR_SOLVE_HPP
