/*
 * Copyright 2026 the hopfwords authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hopfwords/linalg.hpp"

#include <algorithm>

namespace hopfwords {

std::vector<int> rref_inplace(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        const Rational inv = Rational(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const RatMat& m) {
    RatMat copy = m;
    return static_cast<int>(rref_inplace(copy).size());
}

int rank_bareiss(const RatMat& m) {
    if (m.empty() || m[0].empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());

    // Clear denominators row by row; the row space is unchanged.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (int i = 0; i < rows; ++i) {
        Integer lcm = 1;
        for (const Rational& x : m[i]) {
            const Integer d = denominator(x);
            lcm = lcm / gcd(lcm, d) * d;
        }
        for (int j = 0; j < cols; ++j)
            a[i][j] = numerator(m[i][j]) * (lcm / denominator(m[i][j]));
    }

    Integer prev = 1;
    int r = 0;
    // Sweep pivot columns right to left.
    for (int c = cols - 1; c >= 0 && r < rows; --c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[r], a[pr]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                if (j == c) continue;
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::vector<RatVec> kernel_basis(RatMat m, int cols) {
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("kernel_basis: ragged matrix");
    const std::vector<int> pivots = rref_inplace(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const std::vector<RatVec>& span, const RatVec& v) {
    RatMat m = span;
    const int base = rank(m);
    m.push_back(v);
    return rank(m) == base;
}

int rank_of_vectors(const std::vector<RatVec>& vecs) { return rank(vecs); }

}  // namespace hopfwords
