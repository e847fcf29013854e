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

#ifndef HOPFWORDS_SERIES_HPP
#define HOPFWORDS_SERIES_HPP

#include <stdexcept>
#include <vector>

#include "hopfwords/rational.hpp"

namespace hopfwords {

/// One-variable power series with rational coefficients, truncated at a
/// fixed order. Just enough arithmetic for dimension series and the
/// character action; not a general series package.
class TruncatedSeries {
   public:
    explicit TruncatedSeries(int order) : coeffs_(order + 1, Rational(0)) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(int n) const { return coeffs_.at(n); }
    void set_coeff(int n, const Rational& c) { coeffs_.at(n) = c; }

    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require_same_order(o);
        for (int i = 0; i <= order(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }

    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        require_same_order(o);
        for (int i = 0; i <= order(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        TruncatedSeries out(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (int j = 0; i + j <= a.order(); ++j)
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    TruncatedSeries inverse() const {
        if (coeffs_[0] == 0)
            throw std::invalid_argument("TruncatedSeries: inverse of series with zero constant term");
        TruncatedSeries out(order());
        out.coeffs_[0] = Rational(1) / coeffs_[0];
        for (int n = 1; n <= order(); ++n) {
            Rational acc(0);
            for (int k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
            out.coeffs_[n] = -acc / coeffs_[0];
        }
        return out;
    }

    static TruncatedSeries one(int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    /// exp(lambda X) truncated.
    static TruncatedSeries exponential(const Rational& lambda, int order) {
        TruncatedSeries s(order);
        Rational term(1);
        s.coeffs_[0] = term;
        for (int n = 1; n <= order; ++n) {
            term = term * lambda / n;
            s.coeffs_[n] = term;
        }
        return s;
    }

    bool has_constant_term() const { return coeffs_[0] != 0; }

   private:
    void require_same_order(const TruncatedSeries& o) const {
        if (order() != o.order())
            throw std::invalid_argument("TruncatedSeries: mixed truncation orders");
    }

    std::vector<Rational> coeffs_;
};

}  // namespace hopfwords

#endif
