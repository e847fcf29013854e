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

#include "hopfwords/wmatdual.hpp"

#include <algorithm>

namespace hopfwords {

namespace {

bool all_zero(const PackedWord& w) { return w.sup() == 0; }

bool has_zero(const PackedWord& w) {
    for (int v : w.letters())
        if (v == 0) return true;
    return false;
}

}  // namespace

PairCondition classify_pair(const PackedWord& w1, const PackedWord& w2) {
    if (w1.empty() || w2.empty())
        throw std::invalid_argument("classify_pair: factors must be nonempty");
    if (all_zero(w1)) return PairCondition::C3;
    if (all_zero(w2)) return PairCondition::C4;
    if (!has_zero(w1) && !has_zero(w2)) return PairCondition::C1;
    // Both factors have nonzero letters, so their packed alphabets meet, and
    // at least one contains x0.
    return PairCondition::C2;
}

std::vector<std::vector<int>> gamma_set(const PackedWord& w1, const PackedWord& w2) {
    const int s1 = w1.sup();
    std::vector<int> choices{0};
    for (int v : word_stats(w1).ialph)
        if (v != 0) choices.push_back(v);

    std::vector<std::vector<int>> out;
    std::vector<int> cur(w2.size());
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == w2.size()) {
            out.push_back(cur);
            return;
        }
        const int v = w2.letter(pos + 1);
        if (v != 0) {
            cur[pos] = v + s1;
            self(self, pos + 1);
        } else {
            for (int c : choices) {
                cur[pos] = c;
                self(self, pos + 1);
            }
        }
    };
    rec(rec, 0);
    return out;
}

LinComb<Tensor<Zdual<PackedWord>>> dual_coproduct_closed(const Zdual<PackedWord>& zw) {
    const std::vector<PackedWord> factors = irreducible_factorize(zw.primal);
    const int k = static_cast<int>(factors.size());
    LinComb<Tensor<Zdual<PackedWord>>> out;
    for (int i = 0; i <= k; ++i) {
        PackedWord left, right;
        for (int j = 0; j < i; ++j) left = star(left, factors[j]);
        for (int j = i; j < k; ++j) right = star(right, factors[j]);
        out.add(Tensor<Zdual<PackedWord>>{zd(left), zd(right)}, 1);
    }
    return out;
}

LinComb<Zdual<PackedWord>> dual_product_closed(const Zdual<PackedWord>& zw1,
                                               const Zdual<PackedWord>& zw2) {
    const PackedWord& w1 = zw1.primal;
    const PackedWord& w2 = zw2.primal;
    const int n1 = w1.size(), n2 = w2.size();
    const int s1 = w1.sup(), s2 = w2.sup();
    const PairCondition cond = classify_pair(w1, w2);

    // The words the shuffles act on: w1 * w2 for C1/C3, the concatenations
    // w1.g over the substitution set for C2/C4.
    std::vector<PackedWord> bases;
    if (cond == PairCondition::C1 || cond == PairCondition::C3) {
        bases.push_back(star(w1, w2));
    } else {
        for (const auto& g : gamma_set(w1, w2)) {
            std::vector<int> cat = w1.letters();
            cat.insert(cat.end(), g.begin(), g.end());
            bases.push_back(PackedWord::from_letters(std::move(cat)));
        }
    }

    const bool use_tau = (cond == PairCondition::C1 || cond == PairCondition::C2);
    const std::vector<Permutation> taus =
        use_tau ? shuffles(s1, s2) : std::vector<Permutation>{Permutation()};
    const std::vector<Permutation> mus = shuffles(n1, n2);

    LinComb<Zdual<PackedWord>> out;
    for (const auto& base : bases)
        for (const auto& tau : taus)
            for (const auto& mu : mus)
                out.add(zd(relabel_and_permute(tau, base, mu)), 1);
    return out;
}

}  // namespace hopfwords
