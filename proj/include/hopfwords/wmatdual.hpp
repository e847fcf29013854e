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

#ifndef HOPFWORDS_WMATDUAL_HPP
#define HOPFWORDS_WMATDUAL_HPP

#include <string>
#include <vector>

#include "hopfwords/hopfcore.hpp"
#include "hopfwords/wmat.hpp"

namespace hopfwords {

/*
 * Closed forms for the graded dual of the packed word algebra. The dual
 * coproduct deconcatenates the irreducible factorization; the dual product
 * splits into four cases by where the letter x0 appears, combining value
 * shuffles, position shuffles and a substitution set for the zero
 * positions of the right factor. Everything here is validated against the
 * brute-force transposition oracle, which is the ground truth.
 */

/// Which branch of the dual product applies to a pair of nonempty words.
/// Precedence: C3 (left factor all zeros), C4 (right factor all zeros),
/// C1 (no zeros at all), else C2.
enum class PairCondition { C1, C2, C3, C4 };

PairCondition classify_pair(const PackedWord& w1, const PackedWord& w2);

/*
 * The substitution set: words of length |w2| whose nonzero positions carry
 * T_{sup(w1)} of the w2 letter and whose zero positions range over
 * IAlph(w1) plus 0, independently.
 */
std::vector<std::vector<int>> gamma_set(const PackedWord& w1, const PackedWord& w2);

/// Deconcatenation along the unique irreducible factorization.
LinComb<Tensor<Zdual<PackedWord>>> dual_coproduct_closed(const Zdual<PackedWord>& zw);

/// The four-branch closed product; must equal dual_product_oracle<WMat>.
LinComb<Zdual<PackedWord>> dual_product_closed(const Zdual<PackedWord>& zw1,
                                               const Zdual<PackedWord>& zw2);

/// The graded dual with closed-form operations (same basis as DualOf<WMat>,
/// computed without enumeration).
struct WMatDual {
    using Basis = Zdual<PackedWord>;
    static int degree(const Basis& b) { return b.primal.size(); }
    static Basis unit() { return {PackedWord()}; }
    static std::vector<Basis> enumerate(int n) { return DualOf<WMat>::enumerate(n); }
    static LinComb<Basis> product(const Basis& a, const Basis& b) {
        if (a.primal.empty()) return LinComb<Basis>(b);
        if (b.primal.empty()) return LinComb<Basis>(a);
        return dual_product_closed(a, b);
    }
    static LinComb<Tensor<Basis>> coproduct(const Basis& c) {
        return dual_coproduct_closed(c);
    }
    static std::string name() { return "wmat-dual"; }
    static std::string label_str(const Basis& b) { return "Z" + to_string(b.primal); }
};

}  // namespace hopfwords

#endif
