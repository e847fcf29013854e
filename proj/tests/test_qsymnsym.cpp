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

#include <random>

#include "doctest.h"
#include "hopfwords/linalg.hpp"
#include "hopfwords/qsymnsym.hpp"

using namespace hopfwords;

namespace {

Composition cp(std::vector<int> v) { return Composition(std::move(v)); }

LinComb<Composition> clc(std::vector<std::pair<std::vector<int>, Rational>> terms) {
    LinComb<Composition> out;
    for (auto& [p, c] : terms) out.add(cp(p), c);
    return out;
}

std::function<Rational(const Zdual<Composition>&)> zeta_dual_wrapped() {
    return [](const Zdual<Composition>& z) { return zeta_ispw_dual(z.primal); };
}

LinComb<Composition> psi_lc(const LinComb<Zdual<Composition>>& x) {
    LinComb<Composition> out;
    for (const auto& [z, c] : x) {
        auto img = psi_closed(z.primal);
        img *= c;
        out += img;
    }
    return out;
}

}  // namespace

TEST_CASE("quasi-shuffle: base cases and the 1*1 product") {
    CHECK(quasi_shuffle(Composition(), cp({3, 1})) == LinComb<Composition>(cp({3, 1})));
    CHECK(quasi_shuffle(cp({1}), cp({1})) ==
          clc({{{1, 1}, Rational(2)}, {{2}, Rational(1)}}));
}

TEST_CASE("quasi-shuffle M(2) * M(1,1): shuffles plus merges") {
    const auto p = quasi_shuffle(cp({2}), cp({1, 1}));
    CHECK(p == clc({{{2, 1, 1}, Rational(1)},
                    {{1, 2, 1}, Rational(1)},
                    {{1, 1, 2}, Rational(1)},
                    {{3, 1}, Rational(1)},
                    {{1, 3}, Rational(1)}}));
}

TEST_CASE("QSym coproduct: printed examples") {
    {
        LinComb<Tensor<Composition>> expect;
        expect.add({cp({1}), Composition()}, 1);
        expect.add({Composition(), cp({1})}, 1);
        CHECK(QSym::coproduct(cp({1})) == expect);
    }
    {
        LinComb<Tensor<Composition>> expect;
        expect.add({cp({2, 1, 3}), Composition()}, 1);
        expect.add({cp({2}), cp({1, 3})}, 1);
        expect.add({cp({2, 1}), cp({3})}, 1);
        expect.add({Composition(), cp({2, 1, 3})}, 1);
        CHECK(QSym::coproduct(cp({2, 1, 3})) == expect);
    }
    {
        LinComb<Tensor<Composition>> expect;
        expect.add({Composition(), Composition()}, 1);
        CHECK(QSym::coproduct(Composition()) == expect);
    }
}

TEST_CASE("NSym: concatenation product and generator-determined coproduct") {
    CHECK(NSym::product(cp({1, 3, 2, 2, 1}), cp({4, 1, 4})) ==
          LinComb<Composition>(cp({1, 3, 2, 2, 1, 4, 1, 4})));

    const auto red3 = reduced_coproduct<NSym>(LinComb<Composition>(cp({3})));
    LinComb<Tensor<Composition>> expect3;
    expect3.add({cp({1}), cp({2})}, 1);
    expect3.add({cp({2}), cp({1})}, 1);
    CHECK(red3 == expect3);

    const auto red12 = reduced_coproduct<NSym>(LinComb<Composition>(cp({1, 2})));
    LinComb<Tensor<Composition>> expect12;
    expect12.add({cp({1}), cp({2})}, 1);
    expect12.add({cp({2}), cp({1})}, 1);
    expect12.add({cp({1, 1}), cp({1})}, 1);
    expect12.add({cp({1}), cp({1, 1})}, 1);
    CHECK(red12 == expect12);
}

TEST_CASE("QSym and NSym Hopf axioms up to degree 6") {
    const Report q = verify_hopf_axioms<QSym>(6, 4);
    INFO(q.to_text());
    CHECK(q.ok());
    const Report n = verify_hopf_axioms<NSym>(6, 4);
    INFO(n.to_text());
    CHECK(n.ok());
}

TEST_CASE("QSym is commutative (total degree <= 5)") {
    for (int d1 = 1; d1 <= 4; ++d1)
        for (int d2 = 1; d1 + d2 <= 5; ++d2)
            for (const auto& a : QSym::enumerate(d1))
                for (const auto& b : QSym::enumerate(d2))
                    REQUIRE(quasi_shuffle(a, b) == quasi_shuffle(b, a));
}

TEST_CASE("the quasi-shuffle is dual to the NSym coproduct (total degree <= 5)") {
    for (int d1 = 1; d1 <= 4; ++d1)
        for (int d2 = 1; d1 + d2 <= 5; ++d2)
            for (const auto& a : QSym::enumerate(d1))
                for (const auto& b : QSym::enumerate(d2)) {
                    LinComb<Zdual<Composition>> wrapped;
                    for (const auto& [c, coeff] : quasi_shuffle(a, b))
                        wrapped.add(zd(c), coeff);
                    REQUIRE(wrapped == dual_product_oracle<NSym>(zd(a), zd(b)));
                }
}

TEST_CASE("characters are multiplicative on sampled products") {
    for (int d1 = 1; d1 <= 3; ++d1)
        for (int d2 = 1; d2 <= 3; ++d2)
            for (const auto& a : QSym::enumerate(d1))
                for (const auto& b : QSym::enumerate(d2)) {
                    // zeta_Q on the quasi-shuffle.
                    Rational lhs(0);
                    for (const auto& [c, coeff] : quasi_shuffle(a, b))
                        lhs += coeff * zeta_qsym(c);
                    REQUIRE(lhs == zeta_qsym(a) * zeta_qsym(b));
                    // zeta on the dual shuffle product.
                    Rational lhs2(0);
                    for (const auto& [z, coeff] : ISPWDual::product(zd(a), zd(b)))
                        lhs2 += coeff * zeta_ispw_dual(z.primal);
                    REQUIRE(lhs2 == zeta_ispw_dual(a) * zeta_ispw_dual(b));
                }
    CHECK(zeta_ispw_dual(cp({3})) == 1);
    CHECK(zeta_ispw_dual(Composition()) == 1);
    CHECK(zeta_ispw_dual(cp({2, 5})) == Rational(1, 2));
}

TEST_CASE("closed morphism: worked values") {
    CHECK(psi_closed(cp({7})) == LinComb<Composition>(cp({7})));
    CHECK(psi_closed(cp({1, 1})) ==
          clc({{{1, 1}, Rational(1)}, {{2}, Rational(1, 2)}}));
    CHECK(psi_closed(cp({1, 2})) ==
          clc({{{1, 2}, Rational(1)}, {{3}, Rational(1, 2)}}));
}

TEST_CASE("closed morphism equals the universal composite (degree <= 6)") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& c : ISPW::enumerate(n))
            REQUIRE(psi_closed(c) == abs_morphism<ISPWDual>(zeta_dual_wrapped(), zd(c)));
}

TEST_CASE("the defining property: zeta_Q after the morphism returns zeta (degree <= 6)") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& c : ISPW::enumerate(n)) {
            Rational through(0);
            for (const auto& [alpha, coeff] : psi_closed(c))
                through += coeff * zeta_qsym(alpha);
            REQUIRE(through == zeta_ispw_dual(c));
        }
}

TEST_CASE("a primitive with character value c maps to c times the single-part monomial") {
    // Single-part dual labels are primitive for the deconcatenation.
    for (int n = 1; n <= 5; ++n) {
        REQUIRE(reduced_coproduct<ISPWDual>(LinComb<Zdual<Composition>>(zd(cp({n}))))
                    .is_zero());
        const auto img = abs_morphism<ISPWDual>(zeta_dual_wrapped(), zd(cp({n})));
        REQUIRE(img == LinComb<Composition>(cp(std::vector<int>{n})));
    }
}

TEST_CASE("the morphism respects products and coproducts (total degree <= 5)") {
    // Algebra morphism.
    for (int d1 = 1; d1 <= 4; ++d1)
        for (int d2 = 1; d1 + d2 <= 5; ++d2)
            for (const auto& a : ISPW::enumerate(d1))
                for (const auto& b : ISPW::enumerate(d2)) {
                    const auto lhs = psi_lc(ISPWDual::product(zd(a), zd(b)));
                    const auto rhs =
                        bilinear([](const Composition& x,
                                    const Composition& y) { return quasi_shuffle(x, y); },
                                 psi_closed(a), psi_closed(b));
                    REQUIRE(lhs == rhs);
                }
    // Worked instance: Z(1) Z(1) maps to 2M(1,1) + M(2) both ways.
    const auto both = psi_lc(ISPWDual::product(zd(cp({1})), zd(cp({1}))));
    CHECK(both == clc({{{1, 1}, Rational(2)}, {{2}, Rational(1)}}));

    // Coalgebra morphism.
    for (int n = 1; n <= 5; ++n)
        for (const auto& c : ISPW::enumerate(n)) {
            LinComb<Tensor<Composition>> lhs;
            for (const auto& [t, coeff] : ISPWDual::coproduct(zd(c))) {
                auto prod = lc_tensor(psi_closed(t[0].primal), psi_closed(t[1].primal));
                prod *= coeff;
                lhs += prod;
            }
            const auto rhs = coproduct_lc<QSym>(psi_closed(c));
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("per-degree matrices of the morphism have full rank 2^(n-1) (n <= 6)") {
    for (int n = 1; n <= 6; ++n) {
        const auto basis = ISPW::enumerate(n);
        std::vector<RatVec> rows;
        for (const auto& c : basis) rows.push_back(coordinates<QSym>(psi_closed(c), n));
        REQUIRE(rank_of_vectors(rows) == static_cast<int>(basis.size()));
    }
}

TEST_CASE("transpose morphism: worked values") {
    CHECK(psi_star_closed(cp({1})) == LinComb<Composition>(cp({1})));
    CHECK(psi_star_closed(cp({2})) ==
          clc({{{2}, Rational(1)}, {{1, 1}, Rational(1, 2)}}));
}

TEST_CASE("transpose identity: pairings agree for all labels of equal weight <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto basis = ISPW::enumerate(n);
        for (const auto& beta : basis) {
            const auto img = psi_star_closed(beta);
            for (const auto& alpha : basis) {
                // <Psi*(M*_beta), Z_alpha> versus <M*_beta, Psi(Z_alpha)>.
                REQUIRE(img.coeff(alpha) == psi_closed(alpha).coeff(beta));
            }
        }
    }
}

TEST_CASE("transpose morphism is an algebra morphism on sampled pairs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int d1 = 1 + static_cast<int>(rng() % 3);
        const int d2 = 1 + static_cast<int>(rng() % 3);
        const auto& b1 = ISPW::enumerate(d1);
        const auto& b2 = ISPW::enumerate(d2);
        const Composition a = b1[rng() % b1.size()];
        const Composition b = b2[rng() % b2.size()];
        const auto lhs = psi_star_closed(concat(a, b));
        const auto rhs = bilinear(
            [](const Composition& x, const Composition& y) {
                return LinComb<Composition>(concat(x, y));
            },
            psi_star_closed(a), psi_star_closed(b));
        REQUIRE(lhs == rhs);
    }
}
