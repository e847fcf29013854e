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

#include "hopfwords/ispw.hpp"

#include <algorithm>
#include <set>

namespace hopfwords {

std::vector<Composition> ISPW::enumerate(int n) {
    if (n > 10)
        throw ResourceLimitError("ispw: degree " + std::to_string(n) + " exceeds cap 10");
    std::vector<Composition> out;
    for (auto& parts : compositions_of(n)) out.push_back(Composition(std::move(parts)));
    std::sort(out.begin(), out.end());
    return out;
}

LinComb<Tensor<Composition>> ISPW::coproduct(const Composition& a) {
    const int k = a.length();
    LinComb<Tensor<Composition>> out;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> left, right;
        for (int i = 0; i < k; ++i)
            ((mask >> i) & 1u ? left : right).push_back(a.parts[i]);
        out.add(Tensor<Composition>{Composition(std::move(left)), Composition(std::move(right))},
                1);
    }
    return out;
}

PackedWord block_word(const Composition& c) {
    std::vector<int> letters;
    for (int i = 0; i < c.length(); ++i)
        for (int r = 0; r < c.parts[i]; ++r) letters.push_back(i + 1);
    return PackedWord::from_letters(std::move(letters));
}

bool is_increasing_strict(const PackedWord& w) {
    int prev = 0;
    for (int v : w.letters()) {
        if (v == 0 || (v != prev && v != prev + 1)) return false;
        prev = v;
    }
    return true;
}

Composition block_of_word(const PackedWord& w) {
    if (!is_increasing_strict(w))
        throw std::invalid_argument("block_of_word: not an increasing strict packed word");
    std::vector<int> parts;
    for (int v : w.letters()) {
        if (v > static_cast<int>(parts.size()))
            parts.push_back(1);
        else
            ++parts.back();
    }
    return Composition(std::move(parts));
}

LinComb<PackedWord> spw_project(const LinComb<PackedWord>& x) {
    LinComb<PackedWord> out;
    for (const auto& [w, c] : x) {
        bool has_zero = false;
        for (int v : w.letters())
            if (v == 0) {
                has_zero = true;
                break;
            }
        if (!has_zero) out.add(w, c);
    }
    return out;
}

std::vector<int> gamma_tuple(const std::vector<int>& alpha, const std::vector<int>& beta) {
    if (alpha.empty() || alpha.size() != beta.size())
        throw std::invalid_argument("gamma_tuple: alpha and beta must be nonempty, equal length");
    std::set<int> distinct(beta.begin(), beta.end());
    if (distinct.size() != beta.size())
        throw std::invalid_argument("gamma_tuple: beta values must be pairwise distinct");
    std::vector<int> gamma;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 1 || beta[i] < 1)
            throw std::invalid_argument("gamma_tuple: entries must be positive");
        for (int r = 0; r < alpha[i]; ++r) gamma.push_back(beta[i]);
    }
    return gamma;
}

namespace {

// All permutations of {1..n} as image vectors.
std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Composition gamma_word(const std::vector<int>& gamma, const std::vector<int>& pi) {
    std::vector<int> parts(gamma.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) parts[i] = gamma[pi[i] - 1];
    return Composition(std::move(parts));
}

}  // namespace

LinComb<Composition> p_gamma(const std::vector<int>& alpha, const std::vector<int>& beta) {
    const std::vector<int> gamma = gamma_tuple(alpha, beta);
    const int a1 = alpha[0];
    const int theta = static_cast<int>(gamma.size());
    const int rho = theta - a1;

    Integer norm = 1;
    for (std::size_t i = 1; i < alpha.size(); ++i) norm *= factorial(alpha[i]);

    LinComb<Composition> out;
    for (const auto& sigma : all_perms(rho)) {
        for (int k = 1; k <= a1; ++k) {
            // Base permutation: leading run 1..a1-k+1 fixed, then the
            // shifted tail permutation, then the displaced run a1-k+2..a1.
            std::vector<int> img(theta);
            for (int p = 1; p <= a1 - k + 1; ++p) img[p - 1] = p;
            for (int j = 1; j <= rho; ++j) img[a1 - k + 1 + j - 1] = sigma[j - 1] + a1;
            for (int t = 1; t <= k - 1; ++t) img[theta - k + 1 + t - 1] = a1 - k + 1 + t;

            const Rational ck = Rational(((k - 1) % 2) ? -1 : 1) * Rational(binomial(a1 - 1, k - 1));
            for (int s = 0; s <= rho; ++s) {
                if (s > 0) {
                    // Compose with the adjacent transposition of positions
                    // (a1 - k + s, a1 - k + s + 1).
                    const int p = a1 - k + s;
                    std::swap(img[p - 1], img[p]);
                }
                const Rational cs = Rational((s % 2) ? -1 : 1) * Rational(binomial(rho, s));
                out.add(gamma_word(gamma, img), ck * cs / Rational(norm));
            }
        }
    }
    return out;
}

LinComb<Composition> p_lambda_gamma(const std::vector<int>& alpha,
                                    const std::vector<int>& beta) {
    const std::vector<int> gamma = gamma_tuple(alpha, beta);
    const int a1 = alpha[0];
    const int theta = static_cast<int>(gamma.size());

    Integer norm = 1;
    for (int a : alpha) norm *= factorial(a);

    LinComb<Composition> out;
    for (const auto& sigma : all_perms(theta)) {
        std::vector<int> inv(theta + 1);
        for (int p = 1; p <= theta; ++p) inv[sigma[p - 1]] = p;
        Rational coeff(0);
        for (int i = 1; i <= a1; ++i) {
            const int pos = inv[i];
            Rational c(binomial(theta - 1, pos - 1));
            if ((pos - 1) % 2) c = -c;
            coeff += c;
        }
        if (coeff != 0) out.add(gamma_word(gamma, sigma), coeff / Rational(norm));
    }
    return out;
}

LinComb<Composition> lambda_beta(const std::vector<int>& beta, const LinComb<Composition>& x) {
    const int n = static_cast<int>(beta.size());
    for (int b : beta)
        if (b < 1) throw std::invalid_argument("lambda_beta: substituted sizes must be positive");
    LinComb<Composition> out;
    for (const auto& [c, coeff] : x) {
        std::vector<int> parts;
        for (int p : c.parts) parts.push_back(p <= n ? beta[p - 1] : p);
        out.add(Composition(std::move(parts)), coeff);
    }
    return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> gamma_params_of_weight(int weight) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    std::vector<int> alpha, beta;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0 && !alpha.empty()) out.push_back({alpha, beta});
        for (int b = 1; b <= rest; ++b) {
            if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
            for (int a = 1; a * b <= rest; ++a) {
                alpha.push_back(a);
                beta.push_back(b);
                self(self, rest - a * b);
                alpha.pop_back();
                beta.pop_back();
            }
        }
    };
    rec(rec, weight);
    return out;
}

LinComb<Zdual<Composition>> ISPWDual::product(const Basis& a, const Basis& b) {
    const int p = a.primal.length();
    const int q = b.primal.length();
    std::vector<int> merged = a.primal.parts;
    merged.insert(merged.end(), b.primal.parts.begin(), b.primal.parts.end());
    LinComb<Basis> out;
    for (const auto& tau : shuffles(p, q)) {
        const Permutation inv = tau.inverse();
        std::vector<int> parts(p + q);
        for (int i = 1; i <= p + q; ++i) parts[i - 1] = merged[inv(i) - 1];
        out.add(zd(Composition(std::move(parts))), 1);
    }
    return out;
}

LinComb<Tensor<Zdual<Composition>>> ISPWDual::coproduct(const Basis& c) {
    const auto& parts = c.primal.parts;
    const int n = c.primal.length();
    LinComb<Tensor<Basis>> out;
    for (int i = 0; i <= n; ++i) {
        Composition left(std::vector<int>(parts.begin(), parts.begin() + i));
        Composition right(std::vector<int>(parts.begin() + i, parts.end()));
        out.add(Tensor<Basis>{zd(std::move(left)), zd(std::move(right))}, 1);
    }
    return out;
}

}  // namespace hopfwords
