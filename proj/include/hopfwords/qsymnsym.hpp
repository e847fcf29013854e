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

#ifndef HOPFWORDS_QSYMNSYM_HPP
#define HOPFWORDS_QSYMNSYM_HPP

#include <functional>
#include <string>
#include <vector>

#include "hopfwords/composition.hpp"
#include "hopfwords/hopfcore.hpp"
#include "hopfwords/ispw.hpp"

namespace hopfwords {

/// Quasi-shuffle of two compositions: interleavings where passing parts may
/// also merge by addition.
LinComb<Composition> quasi_shuffle(const Composition& a, const Composition& b);

/*
 * Quasi-symmetric functions on the monomial basis: quasi-shuffle product,
 * deconcatenation coproduct. Commutative, not cocommutative.
 */
struct QSym {
    using Basis = Composition;
    static int degree(const Basis& b) { return b.weight(); }
    static Basis unit() { return Composition(); }
    static std::vector<Basis> enumerate(int n) { return ISPW::enumerate(n); }
    static LinComb<Basis> product(const Basis& a, const Basis& b) {
        return quasi_shuffle(a, b);
    }
    static LinComb<Tensor<Basis>> coproduct(const Basis& a);
    static std::string name() { return "qsym"; }
    static std::string label_str(const Basis& b) { return "M" + to_string(b); }
};

/*
 * Noncommutative symmetric functions on the dual monomial basis:
 * concatenation product; the coproduct is determined multiplicatively by
 * splitting each single-part generator binomially-free into two parts.
 */
struct NSym {
    using Basis = Composition;
    static int degree(const Basis& b) { return b.weight(); }
    static Basis unit() { return Composition(); }
    static std::vector<Basis> enumerate(int n) { return ISPW::enumerate(n); }
    static LinComb<Basis> product(const Basis& a, const Basis& b) {
        return LinComb<Basis>(concat(a, b));
    }
    static LinComb<Tensor<Basis>> coproduct(const Basis& a);
    static std::string name() { return "nsym"; }
    static std::string label_str(const Basis& b) { return "M*" + to_string(b); }
};

/// The canonical quasi-symmetric character: 1 on the empty and one-part
/// monomials, 0 otherwise.
Rational zeta_qsym(const Composition& alpha);

/// The character of the dual block algebra: 1/n! on an n-part label.
Rational zeta_ispw_dual(const Composition& label);

/*
 * The universal morphism into QSym attached to a character zeta on a graded
 * connected algebra A: the coefficient of M_alpha is zeta applied legwise
 * to the multidegree-alpha component of the iterated coproduct.
 */
template <GradedHopfAlgebra A>
LinComb<Composition> abs_morphism(
    const std::function<Rational(const typename A::Basis&)>& zeta,
    const typename A::Basis& h) {
    const int n = A::degree(h);
    LinComb<Composition> out;
    if (n == 0) {
        out.add(Composition(), zeta(h));
        return out;
    }
    for (const auto& alpha : ISPW::enumerate(n)) {
        const int k = alpha.length();
        const auto legs = iterated_coproduct<A>(LinComb<typename A::Basis>(h), k - 1);
        Rational coeff(0);
        for (const auto& [t, c] : legs) {
            bool matches = true;
            for (int i = 0; i < k; ++i)
                if (A::degree(t[i]) != alpha.parts[i]) {
                    matches = false;
                    break;
                }
            if (!matches) continue;
            Rational prod = c;
            for (int i = 0; i < k; ++i) prod *= zeta(t[i]);
            coeff += prod;
        }
        out.add(alpha, coeff);
    }
    return out;
}

/// Closed form of the universal morphism for the dual block algebra with
/// the 1/n! character: groups the parts of the label in all ordered ways,
/// weighting each grouping by the inverse factorials of the group sizes.
LinComb<Composition> psi_closed(const Composition& zk);

/// Transpose isomorphism into the block algebra: refines every part
/// independently, weighting by inverse factorials of the refinement
/// lengths.
LinComb<Composition> psi_star_closed(const Composition& mstar);

/// Character wrapper with a multiplicativity spot-check helper.
struct Character {
    std::function<Rational(const Composition&)> eval;
};

}  // namespace hopfwords

#endif
