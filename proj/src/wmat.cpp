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

#include "hopfwords/wmat.hpp"

#include <set>

namespace hopfwords {

LinComb<Tensor<PackedWord>> WMat::coproduct(const PackedWord& w) {
    LinComb<Tensor<PackedWord>> out;
    const int n = w.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        PositionSet I;
        for (int p = 1; p <= n; ++p)
            if (mask & (1u << (p - 1))) I.push_back(p);
        auto [left, right] = extract_contract(w, I);
        out.add(Tensor<PackedWord>{left, right}, 1);
    }
    return out;
}

Integer fubini(int n) {
    static std::vector<Integer> cache{1};
    while (static_cast<int>(cache.size()) <= n) {
        const int m = static_cast<int>(cache.size());
        Integer acc = 0;
        for (int k = 1; k <= m; ++k) acc += binomial(m, k) * cache[m - k];
        cache.push_back(acc);
    }
    return cache[n];
}

Integer wmat_dimension(int n) {
    // Choose the zero positions, then a surjection on the rest.
    Integer acc = 0;
    for (int zeros = 0; zeros <= n; ++zeros) acc += binomial(n, zeros) * fubini(n - zeros);
    return acc;
}

TruncatedSeries wmat_dimension_series(int order) {
    TruncatedSeries s(order);
    for (int n = 0; n <= order; ++n) s.set_coeff(n, Rational(wmat_dimension(n)));
    return s;
}

LinComb<PackedWord> antipode_closed_sum(const PackedWord& w) {
    if (w.empty()) throw std::invalid_argument("antipode_closed_sum: empty word");
    LinComb<PackedWord> out;
    const int n = w.size();
    const auto& letters = w.letters();
    for (int k = 1; k <= n; ++k) {
        const Rational sign((k % 2) ? -1 : 1);
        // An ordered set partition into k nonempty blocks is a surjection
        // position -> block index.
        for (const auto& assignment : surjections(n, k)) {
            PackedWord acc;
            std::set<int> earlier_values;
            for (int j = 1; j <= k; ++j) {
                std::vector<int> piece;
                for (int p = 0; p < n; ++p)
                    if (assignment[p] == j)
                        piece.push_back(earlier_values.count(letters[p]) ? 0 : letters[p]);
                acc = star(acc, PackedWord::pack(piece));
                for (int p = 0; p < n; ++p)
                    if (assignment[p] == j) earlier_values.insert(letters[p]);
            }
            out.add(acc, sign);
        }
    }
    return out;
}

namespace {

PackedWord repeated(int letter, int count) {
    return PackedWord::from_letters(std::vector<int>(count, letter));
}

// Descending runs governed by a composition: x_{a1}..x_1, then
// x_{a1+a2}..x_{a1+1}, and so on.
std::vector<int> descending_runs(const std::vector<int>& alpha) {
    std::vector<int> out;
    int base = 0;
    for (int part : alpha) {
        for (int v = base + part; v > base; --v) out.push_back(v);
        base += part;
    }
    return out;
}

void require_positive(int n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

}  // namespace

AntipodeFamilyValue antipode_family_zeros(int n) {
    require_positive(n, "antipode_family_zeros");
    const PackedWord w = repeated(0, n);
    LinComb<PackedWord> v(w, Rational((n % 2) ? -1 : 1));
    return {w, v};
}

AntipodeFamilyValue antipode_family_ones(int n) {
    require_positive(n, "antipode_family_ones");
    const PackedWord w = repeated(1, n);
    LinComb<PackedWord> v;
    const int outer = ((n + 1) % 2) ? -1 : 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> letters(k, 1);
        letters.resize(n, 0);
        v.add(PackedWord::from_letters(std::move(letters)),
              Rational(outer * ((k % 2) ? -1 : 1)) * Rational(binomial(n, k)));
    }
    return {w, v};
}

AntipodeFamilyValue antipode_family_block_increasing(const std::vector<int>& alpha) {
    const int n = static_cast<int>(alpha.size());
    require_positive(n, "antipode_family_block_increasing");
    int total = 0;
    for (int a : alpha) {
        if (a < 1)
            throw std::invalid_argument("antipode_family_block_increasing: parts must be >= 1");
        total += a;
    }
    // The word lists the letters in increasing order with the multiplicities
    // taken from alpha reversed: x_j occurs alpha[n-j] times.
    std::vector<int> letters;
    for (int j = 1; j <= n; ++j)
        for (int r = 0; r < alpha[n - j]; ++r) letters.push_back(j);
    const PackedWord w = PackedWord::from_letters(std::move(letters));

    LinComb<PackedWord> v;
    const Rational outer(((n + total) % 2) ? -1 : 1);
    std::vector<int> k(n, 1);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == n) {
            int s = 0;
            Rational coeff = outer;
            std::vector<int> img;
            for (int t = 0; t < n; ++t) {
                s += k[t];
                coeff *= Rational(binomial(alpha[t], k[t]));
                for (int r = 0; r < k[t]; ++r) img.push_back(t + 1);
                for (int r = 0; r < alpha[t] - k[t]; ++r) img.push_back(0);
            }
            if (s % 2) coeff = -coeff;
            v.add(PackedWord::from_letters(std::move(img)), coeff);
            return;
        }
        for (k[j] = 1; k[j] <= alpha[j]; ++k[j]) self(self, j + 1);
    };
    rec(rec, 0);
    return {w, v};
}

AntipodeFamilyValue antipode_family_identity_perm(int n) {
    require_positive(n, "antipode_family_identity_perm");
    std::vector<int> letters;
    for (int v = 1; v <= n; ++v) letters.push_back(v);
    const PackedWord w = PackedWord::from_letters(std::move(letters));
    LinComb<PackedWord> v(w, Rational((n % 2) ? -1 : 1));
    return {w, v};
}

AntipodeFamilyValue antipode_family_decreasing(int n) {
    require_positive(n, "antipode_family_decreasing");
    std::vector<int> letters;
    for (int v = n; v >= 1; --v) letters.push_back(v);
    const PackedWord w = PackedWord::from_letters(std::move(letters));
    LinComb<PackedWord> v;
    const Integer nfact = factorial(n);
    for (const auto& alpha : compositions_of(n)) {
        Integer denom = 1;
        for (int part : alpha) denom *= factorial(part);
        const int k = static_cast<int>(alpha.size());
        v.add(PackedWord::from_letters(descending_runs(alpha)),
              Rational((k % 2) ? -1 : 1) * Rational(nfact, denom));
    }
    return {w, v};
}

AntipodeFamilyValue antipode_family_mixed_f(int n, int i) {
    require_positive(n, "antipode_family_mixed_f");
    if (i < 1 || i > n) throw std::invalid_argument("antipode_family_mixed_f: need 1 <= i <= n");
    std::vector<int> letters;
    for (int v = i; v >= 1; --v) letters.push_back(v);
    for (int v = i + 1; v <= n; ++v) letters.push_back(v);
    const PackedWord w = PackedWord::from_letters(std::move(letters));

    LinComb<PackedWord> v;
    const Integer ifact = factorial(i);
    for (const auto& alpha : compositions_of(i)) {
        Integer denom = 1;
        for (int part : alpha) denom *= factorial(part);
        const int k = static_cast<int>(alpha.size());
        std::vector<int> img;
        for (int t = 1; t <= n - i; ++t) img.push_back(t);
        for (int x : descending_runs(alpha)) img.push_back(x + (n - i));
        v.add(PackedWord::from_letters(std::move(img)),
              Rational(((n + i + k) % 2) ? -1 : 1) * Rational(ifact, denom));
    }
    return {w, v};
}

AntipodeFamilyValue antipode_family_mixed_g(int n, int i) {
    require_positive(n, "antipode_family_mixed_g");
    if (i < 1 || i > n) throw std::invalid_argument("antipode_family_mixed_g: need 1 <= i <= n");
    std::vector<int> letters;
    for (int v = 1; v <= n - i; ++v) letters.push_back(v);
    for (int v = n; v >= n - i + 1; --v) letters.push_back(v);
    const PackedWord w = PackedWord::from_letters(std::move(letters));

    LinComb<PackedWord> v;
    const Integer ifact = factorial(i);
    for (const auto& alpha : compositions_of(i)) {
        Integer denom = 1;
        for (int part : alpha) denom *= factorial(part);
        const int k = static_cast<int>(alpha.size());
        std::vector<int> img = descending_runs(alpha);
        for (int t = i + 1; t <= n; ++t) img.push_back(t);
        v.add(PackedWord::from_letters(std::move(img)),
              Rational(((n + i + k) % 2) ? -1 : 1) * Rational(ifact, denom));
    }
    return {w, v};
}

AntipodeFamilyValue antipode_family(AntipodeFamily family, const AntipodeFamilyParams& p) {
    switch (family) {
        case AntipodeFamily::Zeros:
            return antipode_family_zeros(p.n);
        case AntipodeFamily::Ones:
            return antipode_family_ones(p.n);
        case AntipodeFamily::BlockIncreasing:
            return antipode_family_block_increasing(p.alpha);
        case AntipodeFamily::IdentityPerm:
            return antipode_family_identity_perm(p.n);
        case AntipodeFamily::Decreasing:
            return antipode_family_decreasing(p.n);
        case AntipodeFamily::MixedF:
            return antipode_family_mixed_f(p.n, p.i);
        case AntipodeFamily::MixedG:
            return antipode_family_mixed_g(p.n, p.i);
    }
    throw std::invalid_argument("antipode_family: unknown family");
}

}  // namespace hopfwords
