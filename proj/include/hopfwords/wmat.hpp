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

#ifndef HOPFWORDS_WMAT_HPP
#define HOPFWORDS_WMAT_HPP

#include <string>
#include <vector>

#include "hopfwords/hopfcore.hpp"
#include "hopfwords/pword.hpp"
#include "hopfwords/series.hpp"

namespace hopfwords {

/*
 * The Hopf algebra of packed words: shifted concatenation as product,
 * extraction-contraction as coproduct, graded by word length.
 */
struct WMat {
    using Basis = PackedWord;

    static int degree(const Basis& b) { return b.size(); }
    static Basis unit() { return PackedWord(); }
    // Word-indexed algebras are budgeted to degree 7 (the dimension grows
    // like twice the ordered Bell numbers).
    static std::vector<Basis> enumerate(int n) { return enumerate_packed(n, 7); }
    static LinComb<Basis> product(const Basis& u, const Basis& v) {
        return LinComb<Basis>(star(u, v));
    }
    /// Sum of extract_contract over all 2^n position splits.
    static LinComb<Tensor<Basis>> coproduct(const Basis& w);
    static std::string name() { return "wmat"; }
    static std::string label_str(const Basis& b) { return to_string(b); }
};

/// dim (WMat)_n, by the zero-positions/surjection count. Cross-checked
/// against enumerate_packed in the tests.
Integer wmat_dimension(int n);

/// Ordered Bell number (number of ordered set partitions).
Integer fubini(int n);

/// Dimension series 1 + 2h + 6h^2 + 26h^3 + ... truncated.
TruncatedSeries wmat_dimension_series(int order);

/*
 * Antipode as the alternating sum over ordered set partitions
 * (I_1,...,I_k) of the positions: (-1)^k times the star product of the
 * successively contracted packed pieces. Must agree with the generic
 * degree recursion; both are tested against each other.
 */
LinComb<PackedWord> antipode_closed_sum(const PackedWord& w);

/// The word and its antipode in closed form, for the families with a
/// known expression.
struct AntipodeFamilyValue {
    PackedWord word;
    LinComb<PackedWord> value;
};

/// S(x0...x0) = (-1)^n x0...x0.
AntipodeFamilyValue antipode_family_zeros(int n);
/// S(x1...x1) as a signed binomial sum of x1-then-x0 words.
AntipodeFamilyValue antipode_family_ones(int n);
/// Words made of increasing letter blocks; alpha[j-1] bounds the j-th
/// block of the image (the input word carries the multiplicities in
/// reverse order).
AntipodeFamilyValue antipode_family_block_increasing(const std::vector<int>& alpha);
/// S(x1 x2 ... xn) = (-1)^n x1 x2 ... xn.
AntipodeFamilyValue antipode_family_identity_perm(int n);
/// S(xn ... x1): multinomial sum over compositions of n.
AntipodeFamilyValue antipode_family_decreasing(int n);
/// S(xi...x1 xi+1...xn), 1 <= i <= n.
AntipodeFamilyValue antipode_family_mixed_f(int n, int i);
/// S(x1...x(n-i) xn...x(n-i+1)), 1 <= i <= n.
AntipodeFamilyValue antipode_family_mixed_g(int n, int i);

enum class AntipodeFamily {
    Zeros,
    Ones,
    BlockIncreasing,
    IdentityPerm,
    Decreasing,
    MixedF,
    MixedG,
};

struct AntipodeFamilyParams {
    int n = 0;
    std::vector<int> alpha;  // BlockIncreasing only
    int i = 0;               // MixedF / MixedG only
};

AntipodeFamilyValue antipode_family(AntipodeFamily family, const AntipodeFamilyParams& params);

}  // namespace hopfwords

#endif
