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

#ifndef HOPFWORDS_PERMS_HPP
#define HOPFWORDS_PERMS_HPP

#include <string>
#include <vector>

#include "hopfwords/hopfcore.hpp"
#include "hopfwords/wmat.hpp"

namespace hopfwords {

/// Whether each of 1..|w| occurs exactly once (no zeros): the words coming
/// from permutations.
bool is_permutation_word(const PackedWord& w);

/*
 * The Hopf subalgebra of permutation words. Product and coproduct are the
 * ambient ones; both stay inside the span of permutation words.
 */
struct SH {
    using Basis = PackedWord;
    static int degree(const Basis& b) { return b.size(); }
    static Basis unit() { return PackedWord(); }
    static std::vector<Basis> enumerate(int n);
    static LinComb<Basis> product(const Basis& u, const Basis& v) {
        return WMat::product(u, v);
    }
    static LinComb<Tensor<Basis>> coproduct(const Basis& w) { return WMat::coproduct(w); }
    static std::string name() { return "sh"; }
    static std::string label_str(const Basis& b) { return to_string(b); }
};

/// Canonical surjection onto SH: kills every non-permutation word.
LinComb<PackedWord> project_sh(const LinComb<PackedWord>& x);

/*
 * The four quadri-algebra products on the dual of SH, each a double
 * shuffle sum over tau (value side) and mu (position side) restricted by
 * where the preimage of 1 sits: Bat1 pins it to position 1, Bat2 to
 * position n1+1.
 *
 *   nw: tau in Bat1, mu in Bat1        ne: tau in Bat2, mu in Bat1
 *   sw: tau in Bat1, mu in Bat2        se: tau in Bat2, mu in Bat2
 */
enum class QuadriKind { NW, NE, SW, SE };

LinComb<Zdual<PackedWord>> quadri_product(QuadriKind kind, const Zdual<PackedWord>& z1,
                                          const Zdual<PackedWord>& z2);

/// Pairwise sums of quadri products: left = nw + sw, right = ne + se,
/// wedge = nw + ne, vee = sw + se.
enum class DendriformKind { Left, Right, Wedge, Vee };

LinComb<Zdual<PackedWord>> dendriform_product(DendriformKind kind,
                                              const Zdual<PackedWord>& z1,
                                              const Zdual<PackedWord>& z2);

/// Full dual product on SH-dual: the double unrestricted shuffle sum.
LinComb<Zdual<PackedWord>> sh_dual_product(const Zdual<PackedWord>& z1,
                                           const Zdual<PackedWord>& z2);

/// The dual of SH with its closed operations (deconcatenation coproduct
/// restricted from the ambient dual).
struct SHDual {
    using Basis = Zdual<PackedWord>;
    static int degree(const Basis& b) { return b.primal.size(); }
    static Basis unit() { return {PackedWord()}; }
    static std::vector<Basis> enumerate(int n) {
        std::vector<Basis> out;
        for (const auto& b : SH::enumerate(n)) out.push_back({b});
        return out;
    }
    static LinComb<Basis> product(const Basis& a, const Basis& b) {
        if (a.primal.empty()) return LinComb<Basis>(b);
        if (b.primal.empty()) return LinComb<Basis>(a);
        return sh_dual_product(a, b);
    }
    static LinComb<Tensor<Basis>> coproduct(const Basis& c);
    static std::string name() { return "sh-dual"; }
    static std::string label_str(const Basis& b) { return "Z" + to_string(b.primal); }
};

}  // namespace hopfwords

#endif
