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

#include "hopfwords/perms.hpp"

#include <algorithm>

#include "hopfwords/wmatdual.hpp"

namespace hopfwords {

bool is_permutation_word(const PackedWord& w) {
    std::vector<bool> seen(w.size() + 1, false);
    for (int v : w.letters()) {
        if (v < 1 || v > w.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<PackedWord> SH::enumerate(int n) {
    if (n > 8)
        throw ResourceLimitError("sh: degree " + std::to_string(n) + " exceeds cap 8");
    std::vector<int> letters(n);
    for (int i = 0; i < n; ++i) letters[i] = i + 1;
    std::vector<PackedWord> out;
    do {
        out.push_back(PackedWord::from_letters(letters));
    } while (std::next_permutation(letters.begin(), letters.end()));
    std::sort(out.begin(), out.end());
    return out;
}

LinComb<PackedWord> project_sh(const LinComb<PackedWord>& x) {
    LinComb<PackedWord> out;
    for (const auto& [w, c] : x)
        if (is_permutation_word(w)) out.add(w, c);
    return out;
}

namespace {

LinComb<Zdual<PackedWord>> shuffle_sum(const PackedWord& w1, const PackedWord& w2,
                                       ShuffleKind tau_kind, ShuffleKind mu_kind) {
    if (w1.empty() || w2.empty())
        throw std::invalid_argument("quadri products live on the augmentation ideal");
    if (!is_permutation_word(w1) || !is_permutation_word(w2))
        throw std::invalid_argument("quadri products need permutation words");
    const int n1 = w1.size(), n2 = w2.size();
    const PackedWord base = star(w1, w2);
    LinComb<Zdual<PackedWord>> out;
    for (const auto& tau : shuffles(n1, n2, tau_kind))
        for (const auto& mu : shuffles(n1, n2, mu_kind))
            out.add(zd(relabel_and_permute(tau, base, mu)), 1);
    return out;
}

}  // namespace

LinComb<Zdual<PackedWord>> quadri_product(QuadriKind kind, const Zdual<PackedWord>& z1,
                                          const Zdual<PackedWord>& z2) {
    switch (kind) {
        case QuadriKind::NW:
            return shuffle_sum(z1.primal, z2.primal, ShuffleKind::FirstFixed,
                               ShuffleKind::FirstFixed);
        case QuadriKind::NE:
            return shuffle_sum(z1.primal, z2.primal, ShuffleKind::SecondFixed,
                               ShuffleKind::FirstFixed);
        case QuadriKind::SW:
            return shuffle_sum(z1.primal, z2.primal, ShuffleKind::FirstFixed,
                               ShuffleKind::SecondFixed);
        case QuadriKind::SE:
            return shuffle_sum(z1.primal, z2.primal, ShuffleKind::SecondFixed,
                               ShuffleKind::SecondFixed);
    }
    throw std::invalid_argument("quadri_product: unknown kind");
}

LinComb<Zdual<PackedWord>> dendriform_product(DendriformKind kind,
                                              const Zdual<PackedWord>& z1,
                                              const Zdual<PackedWord>& z2) {
    switch (kind) {
        case DendriformKind::Left:
            return quadri_product(QuadriKind::NW, z1, z2) +
                   quadri_product(QuadriKind::SW, z1, z2);
        case DendriformKind::Right:
            return quadri_product(QuadriKind::NE, z1, z2) +
                   quadri_product(QuadriKind::SE, z1, z2);
        case DendriformKind::Wedge:
            return quadri_product(QuadriKind::NW, z1, z2) +
                   quadri_product(QuadriKind::NE, z1, z2);
        case DendriformKind::Vee:
            return quadri_product(QuadriKind::SW, z1, z2) +
                   quadri_product(QuadriKind::SE, z1, z2);
    }
    throw std::invalid_argument("dendriform_product: unknown kind");
}

LinComb<Zdual<PackedWord>> sh_dual_product(const Zdual<PackedWord>& z1,
                                           const Zdual<PackedWord>& z2) {
    return shuffle_sum(z1.primal, z2.primal, ShuffleKind::All, ShuffleKind::All);
}

LinComb<Tensor<Zdual<PackedWord>>> SHDual::coproduct(const Basis& c) {
    // Restriction of the ambient deconcatenation: the irreducible factors of
    // a permutation word are permutation words.
    return dual_coproduct_closed(c);
}

}  // namespace hopfwords
