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

#include "hopfwords/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

#include "hopfwords/linalg.hpp"
#include "hopfwords/textio.hpp"

namespace hopfwords {

namespace {

int cap(int max_degree, int documented) { return std::min(max_degree, documented); }

template <class A>
void check_text(Report& rep, const std::string& name, const LinComb<typename A::Basis>& got,
                const std::string& expected) {
    const auto want = parse_lincomb<A>(expected);
    rep.add(name, got == want, got == want ? "" : "got " + render<A>(got));
}

template <class A>
void check_tensor_text(Report& rep, const std::string& name,
                       const LinComb<Tensor<typename A::Basis>>& got,
                       const std::string& expected) {
    const auto want = parse_tensor_lincomb<A>(expected);
    rep.add(name, got == want, got == want ? "" : "got " + render<A>(got));
}

PackedWord pw(std::vector<int> v) { return PackedWord::from_letters(std::move(v)); }
Composition cp(std::vector<int> v) { return Composition(std::move(v)); }

}  // namespace

Report verify_hopf_suite(int max_degree) {
    Report rep;
    rep.merge(verify_hopf_axioms<WMat>(cap(max_degree, 5), cap(max_degree, 4)));
    rep.merge(verify_hopf_axioms<SH>(cap(max_degree, 5), cap(max_degree, 4)));
    rep.merge(verify_hopf_axioms<ISPW>(cap(max_degree, 6), cap(max_degree, 4)));
    rep.merge(verify_hopf_axioms<Ce>(cap(max_degree, 5), cap(max_degree, 4)));
    rep.merge(verify_hopf_axioms<QSym>(cap(max_degree, 6), cap(max_degree, 4)));
    rep.merge(verify_hopf_axioms<NSym>(cap(max_degree, 6), cap(max_degree, 4)));
    rep.merge(verify_hopf_axioms<PolyH>(cap(max_degree, 6), cap(max_degree, 4)));
    rep.merge(verify_hopf_axioms<TensC>(cap(max_degree, 6), cap(max_degree, 4)));
    rep.merge(verify_hopf_axioms<SemiDirect>(cap(max_degree, 5), cap(max_degree, 4)));
    // Closed-form duals; their agreement with the transposition oracles is
    // the dual-closed-forms suite.
    rep.merge(verify_hopf_axioms<WMatDual>(cap(max_degree, 4), cap(max_degree, 2)));
    rep.merge(verify_hopf_axioms<SHDual>(cap(max_degree, 4), cap(max_degree, 2)));
    rep.merge(verify_hopf_axioms<ISPWDual>(cap(max_degree, 5), cap(max_degree, 3)));
    rep.merge(verify_hopf_axioms<CeDual>(cap(max_degree, 4), cap(max_degree, 3)));
    return rep;
}

Report verify_antipode_forms(int max_degree) {
    Report rep;
    {
        bool ok = true;
        std::string cex;
        for (int n = 1; n <= cap(max_degree, 4); ++n)
            for (const auto& w : enumerate_packed(n))
                if (antipode_closed_sum(w) != antipode_label<WMat>(w) && ok) {
                    ok = false;
                    cex = to_string(w);
                }
        rep.add("antipode: ordered-partition closed sum = generic recursion (degree <= " +
                    std::to_string(cap(max_degree, 4)) + ")",
                ok, cex);
    }
    {
        const int len = cap(max_degree + 1, 5);
        bool ok = true;
        std::string cex;
        auto check = [&](const AntipodeFamilyValue& fam, const std::string& name) {
            if (fam.value != antipode_label<WMat>(fam.word) && ok) {
                ok = false;
                cex = name + " on " + to_string(fam.word);
            }
        };
        for (int n = 1; n <= len; ++n) {
            check(antipode_family_zeros(n), "zeros");
            check(antipode_family_ones(n), "ones");
            check(antipode_family_identity_perm(n), "identity-perm");
            check(antipode_family_decreasing(n), "decreasing");
            for (int i = 1; i <= n; ++i) {
                check(antipode_family_mixed_f(n, i), "mixed-f");
                check(antipode_family_mixed_g(n, i), "mixed-g");
            }
        }
        for (int total = 1; total <= len; ++total)
            for (const auto& alpha : compositions_of(total))
                check(antipode_family_block_increasing(alpha), "block-increasing");
        rep.add("antipode: all seven closed families = generic (length <= " +
                    std::to_string(len) + ")",
                ok, cex);
    }
    check_text<WMat>(rep, "antipode: S[2,1,3,4]",
                     antipode<WMat>(parse_lincomb<WMat>("[2,1,3,4]")),
                     "-[1,2,4,3] + 2[1,2,3,4]");
    check_text<WMat>(rep, "antipode: S[1,2,4,3]",
                     antipode<WMat>(parse_lincomb<WMat>("[1,2,4,3]")),
                     "-[2,1,3,4] + 2[1,2,3,4]");
    check_text<WMat>(rep, "antipode: S[1,1,2,2,2]",
                     antipode<WMat>(parse_lincomb<WMat>("[1,1,2,2,2]")),
                     "[1,1,1,2,2] - 2[1,1,1,2,0] - 3[1,1,0,2,2] + 6[1,1,0,2,0] "
                     "+ 3[1,0,0,2,2] - 6[1,0,0,2,0]");
    return rep;
}

Report verify_dual_closed_forms(int max_degree) {
    Report rep;
    {
        bool ok = true;
        std::string cex;
        const int deg = cap(max_degree + 1, 5);
        for (int n = 0; n <= deg && ok; ++n)
            for (const auto& w : enumerate_packed(n))
                if (dual_coproduct_closed(zd(w)) != dual_coproduct_oracle<WMat>(zd(w))) {
                    ok = false;
                    cex = to_string(w);
                    break;
                }
        rep.add("dual coproduct closed = oracle (degree <= " + std::to_string(deg) + ")", ok,
                cex);
    }
    {
        bool ok = true;
        std::string cex;
        const int total = cap(max_degree, 4);
        for (int d1 = 1; d1 < total && ok; ++d1)
            for (int d2 = 1; d1 + d2 <= total && ok; ++d2)
                for (const auto& w1 : enumerate_packed(d1))
                    for (const auto& w2 : enumerate_packed(d2))
                        if (dual_product_closed(zd(w1), zd(w2)) !=
                            dual_product_oracle<WMat>(zd(w1), zd(w2))) {
                            ok = false;
                            cex = to_string(w1) + " , " + to_string(w2);
                            break;
                        }
        rep.add("dual product closed = oracle, exhaustive (total degree <= " +
                    std::to_string(total) + ")",
                ok, cex);
    }
    if (max_degree >= 5) {
        bool ok = true;
        std::string cex;
        std::mt19937 rng(5);
        for (int trial = 0; trial < 12 && ok; ++trial) {
            const int d1 = 1 + static_cast<int>(rng() % 4);
            const auto& b1 = enumerate_packed(d1);
            const auto& b2 = enumerate_packed(5 - d1);
            const PackedWord w1 = b1[rng() % b1.size()];
            const PackedWord w2 = b2[rng() % b2.size()];
            if (dual_product_closed(zd(w1), zd(w2)) !=
                dual_product_oracle<WMat>(zd(w1), zd(w2))) {
                ok = false;
                cex = to_string(w1) + " , " + to_string(w2);
            }
        }
        rep.add("dual product closed = oracle, sampled degree-5 pairs", ok, cex);
    }
    // Subalgebra and quotient duals against their oracles.
    {
        bool ok = true;
        const int total = cap(max_degree + 1, 5);
        for (int d1 = 1; d1 < total && ok; ++d1)
            for (int d2 = 1; d1 + d2 <= total && ok; ++d2) {
                for (const auto& a : SH::enumerate(d1))
                    for (const auto& b : SH::enumerate(d2))
                        if (SHDual::product(zd(a), zd(b)) != dual_product_oracle<SH>(zd(a), zd(b)))
                            ok = false;
            }
        for (int n = 0; n <= total && ok; ++n)
            for (const auto& c : SH::enumerate(n))
                if (SHDual::coproduct(zd(c)) != dual_coproduct_oracle<SH>(zd(c))) ok = false;
        rep.add("permutation dual closed forms = oracles (total degree <= " +
                    std::to_string(total) + ")",
                ok);
    }
    {
        bool ok = true;
        const int total = cap(max_degree + 1, 5);
        for (int d1 = 1; d1 < total && ok; ++d1)
            for (int d2 = 1; d1 + d2 <= total && ok; ++d2)
                for (const auto& a : ISPW::enumerate(d1))
                    for (const auto& b : ISPW::enumerate(d2))
                        if (ISPWDual::product(zd(a), zd(b)) !=
                            dual_product_oracle<ISPW>(zd(a), zd(b)))
                            ok = false;
        for (int n = 0; n <= cap(max_degree + 1, 5) && ok; ++n)
            for (const auto& c : ISPW::enumerate(n))
                if (ISPWDual::coproduct(zd(c)) != dual_coproduct_oracle<ISPW>(zd(c))) ok = false;
        rep.add("block dual closed forms = oracles (total degree <= " +
                    std::to_string(cap(max_degree + 1, 5)) + ")",
                ok);
    }
    {
        bool ok = true;
        const int total = cap(max_degree + 1, 5);
        for (int d1 = 1; d1 < total && ok; ++d1)
            for (int d2 = 1; d1 + d2 <= total && ok; ++d2)
                for (const auto& a : Ce::enumerate(d1))
                    for (const auto& b : Ce::enumerate(d2))
                        if (CeDual::product(zd(a), zd(b)) != dual_product_oracle<Ce>(zd(a), zd(b)))
                            ok = false;
        for (int n = 0; n <= total && ok; ++n)
            for (const auto& e : Ce::enumerate(n))
                if (CeDual::coproduct(zd(e)) != dual_coproduct_oracle<Ce>(zd(e))) ok = false;
        rep.add("extended composition dual closed forms = oracles (total degree <= " +
                    std::to_string(total) + ")",
                ok);
    }
    // Worked examples.
    check_tensor_text<WMatDual>(rep, "dual coproduct of Z[2,1,3]",
                                dual_coproduct_closed(zd(pw({2, 1, 3}))),
                                "Z[] # Z[2,1,3] + Z[2,1] # Z[1] + Z[2,1,3] # Z[]");
    check_tensor_text<WMatDual>(rep, "dual coproduct of Z[2,1,2]",
                                dual_coproduct_closed(zd(pw({2, 1, 2}))),
                                "Z[2,1,2] # Z[] + Z[] # Z[2,1,2]");
    check_text<WMatDual>(rep, "dual product Z[1] Z[1,1]",
                         dual_product_closed(zd(pw({1})), zd(pw({1, 1}))),
                         "Z[1,2,2] + Z[2,1,2] + Z[2,2,1] + Z[2,1,1] + Z[1,2,1] + Z[1,1,2]");
    check_text<WMatDual>(rep, "dual product Z[0] Z[1]",
                         dual_product_closed(zd(pw({0})), zd(pw({1}))), "Z[1,0] + Z[0,1]");
    check_text<WMatDual>(rep, "dual product Z[1] Z[0]",
                         dual_product_closed(zd(pw({1})), zd(pw({0}))),
                         "Z[1,0] + Z[0,1] + 2Z[1,1]");
    {
        const auto got = dual_product_closed(zd(pw({1, 0})), zd(pw({0, 1})));
        LinComb<Zdual<PackedWord>> expect;
        const std::vector<std::vector<int>> bases = {
            {1, 0, 0, 2}, {1, 0, 1, 2}, {2, 0, 0, 1}, {2, 0, 2, 1}};
        for (const auto& b : bases)
            for (const auto& mu : shuffles(2, 2))
                expect.add(zd(relabel_and_permute(Permutation(), pw(b), mu)), 1);
        rep.add("dual product Z[1,0] Z[0,1] matches its four-shuffle expansion", got == expect);
        rep.add("dual product is non-commutative (Z[0]Z[1] vs Z[1]Z[0])",
                dual_product_closed(zd(pw({0})), zd(pw({1}))) !=
                    dual_product_closed(zd(pw({1})), zd(pw({0}))));
    }
    check_text<ISPWDual>(rep, "block dual product Z(2) Z(2)",
                         ISPWDual::product(zd(cp({2})), zd(cp({2}))), "2Z(2,2)");
    check_text<ISPWDual>(rep, "block dual product Z(1,2) Z(2)",
                         ISPWDual::product(zd(cp({1, 2})), zd(cp({2}))),
                         "2Z(1,2,2) + Z(2,1,2)");
    check_tensor_text<ISPWDual>(rep, "block dual coproduct of Z(2,1,3)",
                                ISPWDual::coproduct(zd(cp({2, 1, 3}))),
                                "Z() # Z(2,1,3) + Z(2) # Z(1,3) + Z(2,1) # Z(3) + "
                                "Z(2,1,3) # Z()");
    check_tensor_text<CeDual>(
        rep, "extended dual reduced coproduct of Z(0;2,1,1,2)",
        reduced_coproduct<CeDual>(LinComb<Zdual<ExtComposition>>(
            zd(ExtComposition(0, cp({2, 1, 1, 2}))))),
        "Z(0;2) # Z(0;1,1,2) + Z(0;2,1) # Z(0;1,2) + Z(0;2,1,1) # Z(0;2)");
    check_tensor_text<CeDual>(
        rep, "extended dual reduced coproduct of Z(1;2,3)",
        reduced_coproduct<CeDual>(
            LinComb<Zdual<ExtComposition>>(zd(ExtComposition(1, cp({2, 3}))))),
        "Z(0;2) # Z(1;3) + Z(0;2,3) # Z(1;) + Z(1;) # Z(0;2,3) + Z(1;2) # Z(0;3)");
    check_text<CeDual>(rep, "extended dual product Z(0;1) Z(0;1)",
                       CeDual::product(zd(ExtComposition(0, cp({1}))),
                                       zd(ExtComposition(0, cp({1})))),
                       "2Z(0;1,1)");
    check_text<CeDual>(rep, "extended dual product Z(0;1) Z(1;1)",
                       CeDual::product(zd(ExtComposition(0, cp({1}))),
                                       zd(ExtComposition(1, cp({1})))),
                       "2Z(0;2,1) + 2Z(0;1,2) + 2Z(1;1,1)");
    return rep;
}

Report verify_quadri(int max_degree) {
    Report rep;
    using Z = Zdual<PackedWord>;
    auto quadri_lc = [](QuadriKind k, const LinComb<Z>& a, const LinComb<Z>& b) {
        return bilinear([k](const Z& x, const Z& y) { return quadri_product(k, x, y); }, a, b);
    };
    auto dend_lc = [](DendriformKind k, const LinComb<Z>& a, const LinComb<Z>& b) {
        return bilinear([k](const Z& x, const Z& y) { return dendriform_product(k, x, y); }, a,
                        b);
    };
    auto dot_lc = [](const LinComb<Z>& a, const LinComb<Z>& b) {
        return bilinear([](const Z& x, const Z& y) { return sh_dual_product(x, y); }, a, b);
    };

    const int total = cap(max_degree, 5);
    bool nine_ok = true, dendr_ok = true, comm_ok = true, zinbiel_ok = true, refine_ok = true;
    std::string cex;
    for (int d1 = 1; d1 <= total - 2; ++d1)
        for (int d2 = 1; d1 + d2 <= total - 1; ++d2)
            for (int d3 = 1; d1 + d2 + d3 <= total; ++d3)
                for (const auto& a : SH::enumerate(d1))
                    for (const auto& b : SH::enumerate(d2))
                        for (const auto& c : SH::enumerate(d3)) {
                            const Z x = zd(a), y = zd(b), z = zd(c);
                            const LinComb<Z> X(x), Y(y), Zc(z);
                            const auto yz = sh_dual_product(y, z);
                            const bool nine =
                                quadri_lc(QuadriKind::NW, quadri_product(QuadriKind::NW, x, y),
                                          Zc) == quadri_lc(QuadriKind::NW, X, yz) &&
                                quadri_lc(QuadriKind::NW, quadri_product(QuadriKind::NE, x, y),
                                          Zc) ==
                                    quadri_lc(QuadriKind::NE, X,
                                              dend_lc(DendriformKind::Left, Y, Zc)) &&
                                quadri_lc(QuadriKind::NE, dend_lc(DendriformKind::Wedge, X, Y),
                                          Zc) ==
                                    quadri_lc(QuadriKind::NE, X,
                                              dend_lc(DendriformKind::Right, Y, Zc)) &&
                                quadri_lc(QuadriKind::NW, quadri_product(QuadriKind::SW, x, y),
                                          Zc) ==
                                    quadri_lc(QuadriKind::SW, X,
                                              dend_lc(DendriformKind::Wedge, Y, Zc)) &&
                                quadri_lc(QuadriKind::NW, quadri_product(QuadriKind::SE, x, y),
                                          Zc) ==
                                    quadri_lc(QuadriKind::SE, X,
                                              quadri_lc(QuadriKind::NW, Y, Zc)) &&
                                quadri_lc(QuadriKind::NE, dend_lc(DendriformKind::Vee, X, Y),
                                          Zc) ==
                                    quadri_lc(QuadriKind::SE, X,
                                              quadri_lc(QuadriKind::NE, Y, Zc)) &&
                                quadri_lc(QuadriKind::SW, dend_lc(DendriformKind::Left, X, Y),
                                          Zc) ==
                                    quadri_lc(QuadriKind::SW, X,
                                              dend_lc(DendriformKind::Vee, Y, Zc)) &&
                                quadri_lc(QuadriKind::SW, dend_lc(DendriformKind::Right, X, Y),
                                          Zc) ==
                                    quadri_lc(QuadriKind::SE, X,
                                              quadri_lc(QuadriKind::SW, Y, Zc)) &&
                                quadri_lc(QuadriKind::SE, dot_lc(X, Y), Zc) ==
                                    quadri_lc(QuadriKind::SE, X,
                                              quadri_lc(QuadriKind::SE, Y, Zc));
                            if (!nine && nine_ok) {
                                nine_ok = false;
                                cex = to_string(a) + "," + to_string(b) + "," + to_string(c);
                            }
                            for (auto [lt, rt] :
                                 {std::pair{DendriformKind::Left, DendriformKind::Right},
                                  std::pair{DendriformKind::Wedge, DendriformKind::Vee}}) {
                                const bool d_ok =
                                    dend_lc(lt, dend_lc(lt, X, Y), Zc) ==
                                        dend_lc(lt, X,
                                                dend_lc(lt, Y, Zc) + dend_lc(rt, Y, Zc)) &&
                                    dend_lc(lt, dend_lc(rt, X, Y), Zc) ==
                                        dend_lc(rt, X, dend_lc(lt, Y, Zc)) &&
                                    dend_lc(rt, dend_lc(lt, X, Y), Zc) +
                                            dend_lc(rt, dend_lc(rt, X, Y), Zc) ==
                                        dend_lc(rt, X, dend_lc(rt, Y, Zc));
                                if (!d_ok) dendr_ok = false;
                            }
                            if (dend_lc(DendriformKind::Left,
                                        dend_lc(DendriformKind::Left, X, Y), Zc) !=
                                dend_lc(DendriformKind::Left, X,
                                        dend_lc(DendriformKind::Left, Y, Zc) +
                                            dend_lc(DendriformKind::Left, Zc, Y)))
                                zinbiel_ok = false;
                        }
    for (int d1 = 1; d1 <= total - 1; ++d1)
        for (int d2 = 1; d1 + d2 <= total; ++d2)
            for (const auto& a : SH::enumerate(d1))
                for (const auto& b : SH::enumerate(d2)) {
                    if (dendriform_product(DendriformKind::Right, zd(a), zd(b)) !=
                            dendriform_product(DendriformKind::Left, zd(b), zd(a)) ||
                        dendriform_product(DendriformKind::Vee, zd(a), zd(b)) !=
                            dendriform_product(DendriformKind::Wedge, zd(b), zd(a)))
                        comm_ok = false;
                    const auto full = sh_dual_product(zd(a), zd(b));
                    if (quadri_product(QuadriKind::NW, zd(a), zd(b)) +
                            quadri_product(QuadriKind::NE, zd(a), zd(b)) +
                            quadri_product(QuadriKind::SW, zd(a), zd(b)) +
                            quadri_product(QuadriKind::SE, zd(a), zd(b)) !=
                        full)
                        refine_ok = false;
                    if (full != dual_product_oracle<SH>(zd(a), zd(b))) refine_ok = false;
                }
    const std::string bound = " (total degree <= " + std::to_string(total) + ")";
    rep.add("quadri: all nine axioms" + bound, nine_ok, cex);
    rep.add("quadri: dendriform axioms for both derived pairs" + bound, dendr_ok);
    rep.add("quadri: commutativity x right y = y left x, x vee y = y wedge x" + bound, comm_ok);
    rep.add("quadri: Zinbiel law for the left product" + bound, zinbiel_ok);
    rep.add("quadri: four corners sum to the dual product = oracle" + bound, refine_ok);

    check_text<SHDual>(rep, "quadri nw: Z[2,1] Z[1]",
                       quadri_product(QuadriKind::NW, zd(pw({2, 1})), zd(pw({1}))),
                       "Z[2,1,3] + Z[2,3,1] + Z[3,1,2] + Z[3,2,1]");
    check_text<SHDual>(rep, "quadri sw: Z[2,1] Z[1]",
                       quadri_product(QuadriKind::SW, zd(pw({2, 1})), zd(pw({1}))),
                       "Z[3,2,1] + Z[2,3,1]");
    check_text<SHDual>(rep, "quadri ne: Z[2,1] Z[1]",
                       quadri_product(QuadriKind::NE, zd(pw({2, 1})), zd(pw({1}))),
                       "Z[3,2,1] + Z[3,1,2]");
    check_text<SHDual>(rep, "quadri se: Z[2,1] Z[1]",
                       quadri_product(QuadriKind::SE, zd(pw({2, 1})), zd(pw({1}))),
                       "Z[1,3,2]");
    check_text<SHDual>(rep, "dendriform left: Z[2,1] Z[1]",
                       dendriform_product(DendriformKind::Left, zd(pw({2, 1})), zd(pw({1}))),
                       "Z[2,1,3] + 2Z[2,3,1] + 2Z[3,2,1] + Z[3,1,2]");
    check_text<SHDual>(rep, "dendriform right: Z[2,1] Z[1]",
                       dendriform_product(DendriformKind::Right, zd(pw({2, 1})), zd(pw({1}))),
                       "Z[3,2,1] + Z[3,1,2] + Z[1,3,2]");
    check_text<SHDual>(rep, "dendriform wedge: Z[2,1] Z[1]",
                       dendriform_product(DendriformKind::Wedge, zd(pw({2, 1})), zd(pw({1}))),
                       "Z[2,1,3] + Z[2,3,1] + 2Z[3,1,2] + 2Z[3,2,1]");
    check_text<SHDual>(rep, "dendriform vee: Z[2,1] Z[1]",
                       dendriform_product(DendriformKind::Vee, zd(pw({2, 1})), zd(pw({1}))),
                       "Z[3,2,1] + Z[2,3,1] + Z[1,3,2]");
    check_text<SHDual>(rep, "dual product Z[1] Z[2,1]",
                       sh_dual_product(zd(pw({1})), zd(pw({2, 1}))),
                       "3Z[3,2,1] + Z[1,3,2] + 2Z[3,1,2] + 2Z[2,3,1] + Z[2,1,3]");
    return rep;
}

Report verify_ispw_prim(int max_degree) {
    Report rep;
    {
        const int top = cap(max_degree, 8);
        const int expected[] = {1, 1, 2, 3, 6, 9, 18, 30};
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= top; ++n) {
            const auto prim = primitive_basis<ISPW>(n);
            for (const auto& v : prim)
                if (!reduced_coproduct<ISPW>(v).is_zero()) ok = false;
            if (static_cast<int>(prim.size()) != expected[n - 1]) {
                ok = false;
                detail += "degree " + std::to_string(n) + ": " + std::to_string(prim.size()) +
                          "; ";
            }
        }
        rep.add("primitive dimensions 1,1,2,3,6,9,18,30 (degree <= " + std::to_string(top) + ")",
                ok, detail);
    }
    {
        const int top = cap(max_degree, 8);
        bool ok = true;
        std::string cex;
        for (int weight = 1; weight <= top; ++weight)
            for (const auto& [alpha, beta] : gamma_params_of_weight(weight)) {
                const auto p = p_gamma(alpha, beta);
                if (!p.is_zero() && !reduced_coproduct<ISPW>(p).is_zero()) ok = false;
                const auto pl = p_lambda_gamma(alpha, beta);
                if (!pl.is_zero() && !reduced_coproduct<ISPW>(pl).is_zero()) ok = false;
            }
        rep.add("both primitive families satisfy the kernel condition (weight <= " +
                    std::to_string(top) + ")",
                ok, cex);
    }
    {
        // Sweep by block-multiplicity pattern: the coefficients of both
        // families depend on the beta values only through their equality
        // pattern, so running each alpha against an increasing, a
        // decreasing and a spread-out beta is exhaustive for the stated
        // block-count bound.
        const int top = cap(max_degree, 6);
        bool ok = true;
        std::string cex;
        for (int theta = 1; theta <= top; ++theta)
            for (const auto& alpha : compositions_of(theta)) {
                const int n = static_cast<int>(alpha.size());
                std::vector<int> inc(n), dec(n), spread(n);
                for (int i = 0; i < n; ++i) {
                    inc[i] = i + 1;
                    dec[i] = n - i;
                    spread[i] = 3 * i + 2;
                }
                for (const auto& beta : {inc, dec, spread}) {
                    const auto p = p_gamma(alpha, beta);
                    if (!p.is_zero() && !reduced_coproduct<ISPW>(p).is_zero()) ok = false;
                    const auto pl = p_lambda_gamma(alpha, beta);
                    if (!pl.is_zero() && !reduced_coproduct<ISPW>(pl).is_zero()) ok = false;
                }
            }
        if (max_degree >= 7) {
            // Sampled seven-block parameters.
            for (const auto& alpha : std::vector<std::vector<int>>{
                     {1, 1, 1, 1, 1, 1, 1}, {2, 2, 3}, {3, 1, 1, 2}, {4, 3}, {7}}) {
                const int n = static_cast<int>(alpha.size());
                std::vector<int> inc(n);
                for (int i = 0; i < n; ++i) inc[i] = i + 1;
                const auto p = p_gamma(alpha, inc);
                if (!p.is_zero() && !reduced_coproduct<ISPW>(p).is_zero()) ok = false;
                const auto pl = p_lambda_gamma(alpha, inc);
                if (!pl.is_zero() && !reduced_coproduct<ISPW>(pl).is_zero()) ok = false;
            }
        }
        rep.add("both families are primitive for every block pattern (block count <= " +
                    std::to_string(top) + (max_degree >= 7 ? ", sampled 7" : "") + ")",
                ok, cex);
    }
    if (max_degree >= 7) {
        std::vector<RatVec> pg;
        for (const auto& [alpha, beta] : gamma_params_of_weight(7))
            pg.push_back(coordinates<ISPW>(p_gamma(alpha, beta), 7));
        const int r = rank_of_vectors(pg);
        rep.add("degree 7: first family has rank exactly 17", r == 17,
                r == 17 ? "" : "rank " + std::to_string(r));
        std::vector<RatVec> both = pg;
        for (const auto& [alpha, beta] : gamma_params_of_weight(7))
            both.push_back(coordinates<ISPW>(p_lambda_gamma(alpha, beta), 7));
        const int r2 = rank_of_vectors(both);
        rep.add("degree 7: union of both families has rank < 18", r2 < 18,
                "rank " + std::to_string(r2));
    }
    {
        bool ok = p_lambda_gamma({1, 2}, {2, 5}) == p_gamma({1, 2}, {2, 5}) &&
                  p_lambda_gamma({1, 1, 1}, {1, 2, 3}) == p_gamma({1, 1, 1}, {1, 2, 3}) &&
                  p_lambda_gamma({2, 2}, {1, 3}) == Rational(-2) * p_gamma({2, 2}, {1, 3}) &&
                  p_lambda_gamma({2, 1, 1}, {2, 1, 3}) ==
                      Rational(-2) * p_gamma({2, 1, 1}, {2, 1, 3}) &&
                  p_lambda_gamma({2, 1}, {1, 2}) == Rational(-1) * p_gamma({2, 1}, {1, 2}) &&
                  p_lambda_gamma({3, 1}, {1, 2}) == p_gamma({3, 1}, {1, 2});
        rep.add("family relations (a)-(c) on sampled parameters", ok);
        const Rational d_coeff = p_lambda_gamma({2, 3}, {1, 2}).coeff(cp({2, 1, 1, 2, 2}));
        const Rational e_coeff = p_lambda_gamma({3, 2}, {1, 2}).coeff(cp({1, 2, 1, 1, 2}));
        rep.add("family non-proportionality witnesses (d)-(e)",
                p_gamma({2, 3}, {1, 2}).coeff(cp({2, 1, 1, 2, 2})) == 0 &&
                    d_coeff == Rational(binomial(3, 2)) - 1 &&
                    p_gamma({3, 2}, {1, 2}).coeff(cp({1, 2, 1, 1, 2})) == 0 &&
                    e_coeff == Rational(3));
    }
    {
        const int top = cap(max_degree, 6);
        bool ok = true;
        for (int n = 1; n <= top; ++n) {
            const auto basis = ISPW::enumerate(n);
            const auto prim = primitive_basis<ISPW>(n);
            const int d = static_cast<int>(prim.size());
            std::vector<RatVec> K;
            for (const auto& v : prim) K.push_back(coordinates<ISPW>(v, n));
            std::map<std::vector<int>, std::set<int>> classes;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                std::vector<int> sorted = basis[j].parts;
                std::sort(sorted.begin(), sorted.end());
                classes[sorted].insert(static_cast<int>(j));
            }
            int sum = 0;
            for (const auto& [cls, cols] : classes) {
                RatMat outside;
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    if (cols.count(static_cast<int>(j))) continue;
                    RatVec row(d);
                    for (int i = 0; i < d; ++i) row[i] = K[i][j];
                    outside.push_back(std::move(row));
                }
                sum += static_cast<int>(kernel_basis(std::move(outside), d).size());
            }
            if (sum != d) ok = false;
        }
        rep.add("partition-by-partition decomposition of the primitives (degree <= " +
                    std::to_string(top) + ")",
                ok);
    }
    return rep;
}

Report verify_ce_structure(int max_degree) {
    Report rep;
    rep.merge(verify_hopf_axioms<Ce>(cap(max_degree, 5), cap(max_degree, 4)));
    {
        const int top = cap(max_degree, 5);
        bool ok = true;
        std::string cex;
        for (int n = 0; n <= top && ok; ++n)
            for (const auto& w : enumerate_packed(n)) {
                LinComb<Tensor<ExtComposition>> lhs;
                for (const auto& [t, c] : coproduct_cached<WMat>(w))
                    lhs.add({pi_project(t[0]), pi_project(t[1])}, c);
                if (lhs != Ce::coproduct(pi_project(w))) {
                    ok = false;
                    cex = to_string(w);
                    break;
                }
            }
        for (int d1 = 1; d1 < top && ok; ++d1)
            for (int d2 = 1; d1 + d2 <= top && ok; ++d2)
                for (const auto& u : enumerate_packed(d1))
                    for (const auto& v : enumerate_packed(d2))
                        if (pi_project(WMat::product(u, v)) !=
                            Ce::product(pi_project(u), pi_project(v))) {
                            ok = false;
                            cex = to_string(u) + " , " + to_string(v);
                            break;
                        }
        rep.add("projection onto extended compositions is a Hopf morphism (degree <= " +
                    std::to_string(top) + ")",
                ok, cex);
    }
    {
        const int dims_top = cap(max_degree, 8);
        bool ok = true;
        for (int n = 0; n <= dims_top; ++n)
            if (Ce::enumerate(n).size() != (1u << n)) ok = false;
        rep.add("dimension 2^n (degree <= " + std::to_string(dims_top) + ")", ok);
    }
    for (int n = 4; n <= cap(max_degree, 7); ++n) {
        const auto prim = primitive_basis<Ce>(n);
        const bool one = prim.size() == 1;
        rep.add("primitive space of degree " + std::to_string(n) + " is one-dimensional", one,
                one ? "" : "computed dimension " + std::to_string(prim.size()) +
                               " (the alternating generator is a proper subspace; see the "
                               "degree-5 witness test)");
    }
    {
        const int top = cap(max_degree - 2, 6);
        bool ok = true;
        for (int n = 1; n <= top; ++n)
            if (!reduced_coproduct<Ce>(gamma_2_ones(n)).is_zero()) ok = false;
        rep.add("alternating family is primitive (parameter <= " + std::to_string(top) + ")",
                ok);
    }
    for (int n = 4; n <= cap(max_degree, 7); ++n) {
        std::vector<RatVec> coords;
        for (const auto& v : primitive_basis<Ce>(n)) coords.push_back(coordinates<Ce>(v, n));
        rep.add("alternating generator lies in the degree-" + std::to_string(n) + " kernel",
                in_span(coords, coordinates<Ce>(gamma_2_ones(n - 2), n)));
    }
    {
        bool support_ok = true, gap_ok = true;
        for (int n = 2; n <= cap(max_degree, 7); ++n) {
            const auto prim = primitive_basis<Ce>(n);
            const int d = static_cast<int>(prim.size());
            for (const auto& v : prim)
                for (const auto& [label, c] : v)
                    if (label.a0 != 0 || label.parts.empty()) support_ok = false;
            if (d == 0) continue;
            const auto basis = Ce::enumerate(n);
            std::vector<RatVec> K;
            for (const auto& v : prim) K.push_back(coordinates<Ce>(v, n));
            std::map<std::vector<int>, std::set<int>> classes;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (basis[j].a0 != 0 || basis[j].parts.empty()) continue;
                std::vector<int> sorted = basis[j].parts.parts;
                std::sort(sorted.begin(), sorted.end());
                classes[sorted].insert(static_cast<int>(j));
            }
            for (const auto& [cls, cols] : classes) {
                std::set<int> distinct(cls.begin(), cls.end());
                bool gap_free = true;
                int expect = 1;
                for (int val : distinct)
                    if (val != expect++) gap_free = false;
                if (gap_free) continue;
                RatMat outside;
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    if (cols.count(static_cast<int>(j))) continue;
                    RatVec row(d);
                    for (int i = 0; i < d; ++i) row[i] = K[i][j];
                    outside.push_back(std::move(row));
                }
                if (!kernel_basis(std::move(outside), d).empty()) gap_ok = false;
            }
        }
        rep.add("primitives have no support on positive zero-counts", support_ok);
        rep.add("no primitive is supported in a single gapped part class", gap_ok);
    }
    if (max_degree >= 7) {
        const auto u = parse_lincomb<Ce>(
            "(0;3,2,1,1) - 2(0;3,1,2,1) + (0;3,1,1,2) - (0;2,1,1,3) + 2(0;1,2,1,3) - "
            "(0;1,1,2,3)");
        rep.add("degree-7 witness element is not primitive",
                !reduced_coproduct<Ce>(u).is_zero());
    }
    if (max_degree >= 3) {
        TruncatedSeries F(6);
        for (int n = 0; n <= 6; ++n) F.set_coeff(n, Rational(Integer(1) << n));
        const auto predicted = TruncatedSeries::one(6) - F.inverse();
        rep.add("cofreeness fails: degree-3 primitives exist although the series predicts none",
                predicted.coeff(3) == 0 && primitive_basis<Ce>(3).size() == 1);
    }
    {
        const int top = cap(max_degree, 6);
        bool ok = true;
        for (int n = 2; n <= top; ++n)
            for (const auto& v : primitive_basis<Ce>(n)) {
                LinComb<Composition> image;
                for (const auto& [label, c] : v) {
                    if (label.a0 != 0) ok = false;
                    image.add(label.parts, c);
                }
                if (!reduced_coproduct<ISPW>(image).is_zero()) ok = false;
            }
        rep.add("zero-headed primitives map to block-algebra primitives (degree <= " +
                    std::to_string(top) + ")",
                ok);
    }
    return rep;
}

Report verify_semidirect(int max_degree, unsigned seed) {
    Report rep;
    const int gen_top = cap(max_degree, 6);
    {
        bool ok = true;
        for (int n = 1; n <= gen_top && ok; ++n) {
            const Composition c = cp({n});
            LinComb<Composition> counit_side;
            for (const auto& [t, coeff] : rho_coaction(c))
                if (t.second == 0) counit_side.add(t.first, coeff);
            if (counit_side != LinComb<Composition>(c)) ok = false;
            using CHH = std::tuple<Composition, int, int>;
            LinComb<CHH> lhs, rhs;
            for (const auto& [t, coeff] : rho_coaction(c)) {
                for (int j = 0; j <= t.second; ++j)
                    lhs.add({t.first, j, t.second - j},
                            coeff * Rational(binomial(t.second, j)));
                for (const auto& [t2, c2] : rho_coaction(t.first))
                    rhs.add({t2.first, t2.second, t.second}, coeff * c2);
            }
            if (lhs != rhs) ok = false;
        }
        // Multiplicativity on products up to the budget.
        for (int d1 = 1; d1 <= gen_top - 1 && ok; ++d1)
            for (int d2 = 1; d1 + d2 <= gen_top && ok; ++d2)
                for (const auto& a : TensC::enumerate(d1))
                    for (const auto& b : TensC::enumerate(d2)) {
                        LinComb<CHPair> rhs;
                        for (const auto& [ta, ca] : rho_coaction(a))
                            for (const auto& [tb, cb] : rho_coaction(b))
                                rhs.add({concat(ta.first, tb.first), ta.second + tb.second},
                                        ca * cb);
                        if (rho_coaction(concat(a, b)) != rhs) {
                            ok = false;
                            break;
                        }
                    }
        rep.add("comodule axioms for the coaction (degree <= " + std::to_string(gen_top) + ")",
                ok);
    }
    {
        bool ok = true;
        using CCH = std::tuple<Composition, Composition, int>;
        std::vector<Composition> cases;
        for (int n = 1; n <= gen_top; ++n) cases.push_back(cp({n}));
        for (int n = 2; n <= cap(max_degree, 5); ++n)
            for (const auto& c : TensC::enumerate(n)) cases.push_back(c);
        for (const auto& c : cases) {
            LinComb<int> left;
            for (const auto& [t, coeff] : rho_coaction(c))
                if (t.first.empty()) left.add(t.second, coeff);
            LinComb<int> right;
            if (c.empty()) right.add(0, Rational(1));
            if (left != right) ok = false;
            LinComb<CCH> lhs, rhs;
            for (const auto& [t, coeff] : rho_coaction(c))
                for (const auto& [split, cs] : TensC::coproduct(t.first))
                    lhs.add({split[0], split[1], t.second}, coeff * cs);
            for (const auto& [split, cs] : TensC::coproduct(c))
                for (const auto& [t1, c1] : rho_coaction(split[0]))
                    for (const auto& [t2, c2] : rho_coaction(split[1]))
                        rhs.add({t1.first, t2.first, t1.second + t2.second}, cs * c1 * c2);
            if (lhs != rhs) ok = false;
        }
        rep.add("comodule-bialgebra axioms for the coaction", ok);
    }
    {
        const int top = cap(max_degree, 5);
        bool ok = true;
        for (int n = 0; n <= top && ok; ++n)
            for (const auto& e : Ce::enumerate(n)) {
                LinComb<Tensor<HCPair>> lhs;
                for (const auto& [t, c] : Ce::coproduct(e))
                    lhs.add({upsilon(t[0]), upsilon(t[1])}, c);
                if (lhs != SemiDirect::coproduct(upsilon(e))) {
                    ok = false;
                    break;
                }
                if (upsilon_inv(upsilon(e)) != e) ok = false;
            }
        for (int d1 = 0; d1 <= top && ok; ++d1)
            for (int d2 = 0; d1 + d2 <= top && ok; ++d2)
                for (const auto& a : Ce::enumerate(d1))
                    for (const auto& b : Ce::enumerate(d2)) {
                        LinComb<HCPair> lhs;
                        for (const auto& [e, c] : Ce::product(a, b)) lhs.add(upsilon(e), c);
                        if (lhs != SemiDirect::product(upsilon(a), upsilon(b))) {
                            ok = false;
                            break;
                        }
                    }
        rep.add("basis bijection intertwines products and coproducts (degree <= " +
                    std::to_string(top) + ")",
                ok);
    }
    {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> num(-6, 6);
        std::uniform_int_distribution<int> den(1, 4);
        bool ok = true;
        for (int trial = 0; trial < 5; ++trial) {
            const Rational lambda(num(rng), den(rng));
            TruncatedSeries a(8);
            for (int n = 1; n <= 8; ++n) a.set_coeff(n, Rational(num(rng), den(rng)));
            if (omega_action_composite(lambda, a) != omega_action_direct(lambda, a)) ok = false;
        }
        rep.add("character action: composite route = exponential multiplication (order 8, 5 "
                "samples)",
                ok);
        bool ax_ok = true;
        for (int trial = 0; trial < 4; ++trial) {
            TruncatedSeries a(6);
            for (int n = 1; n <= 6; ++n) a.set_coeff(n, Rational(num(rng), 3));
            const Rational lambda(num(rng), 2), mu(num(rng), 2);
            if (omega_action_composite(Rational(0), a) != a) ax_ok = false;
            if (omega_action_composite(lambda, omega_action_composite(mu, a)) !=
                omega_action_composite(lambda + mu, a))
                ax_ok = false;
        }
        rep.add("character action: identity and additivity axioms (order 6)", ax_ok);
    }
    {
        bool ok = true;
        for (int k = 0; k <= 3 && ok; ++k)
            for (int l = 0; l <= 3 && ok; ++l) {
                const auto prod = dual_product_oracle<PolyH>(zd(k), zd(l));
                for (const auto& z : {cp({1}), cp({2, 1}), cp({1, 1, 3})}) {
                    LinComb<Zdual<Composition>> lhs;
                    for (const auto& [mid, c] : rho_star(zd(z), k)) {
                        auto t = rho_star(mid, l);
                        t *= c;
                        lhs += t;
                    }
                    LinComb<Zdual<Composition>> rhs;
                    for (const auto& [zk, c] : prod) {
                        auto t = rho_star(zd(z), zk.primal);
                        t *= c;
                        rhs += t;
                    }
                    if (lhs != rhs) ok = false;
                }
            }
        rep.add("transposed coaction is a module action over the divided-power dual", ok);
    }
    return rep;
}

Report verify_morphisms(int max_degree) {
    Report rep;
    {
        const int top = cap(max_degree, 5);
        bool ok = true;
        for (int d1 = 1; d1 < top && ok; ++d1)
            for (int d2 = 1; d1 + d2 <= top && ok; ++d2)
                for (const auto& a : QSym::enumerate(d1))
                    for (const auto& b : QSym::enumerate(d2)) {
                        if (quasi_shuffle(a, b) != quasi_shuffle(b, a)) ok = false;
                        LinComb<Zdual<Composition>> wrapped;
                        for (const auto& [c, coeff] : quasi_shuffle(a, b))
                            wrapped.add(zd(c), coeff);
                        if (wrapped != dual_product_oracle<NSym>(zd(a), zd(b))) ok = false;
                    }
        rep.add("quasi-shuffle is commutative and dual to concatenation (total degree <= " +
                    std::to_string(top) + ")",
                ok);
    }
    {
        const int top = cap(max_degree, 6);
        bool defining_ok = true, closed_ok = true;
        for (int n = 0; n <= top; ++n)
            for (const auto& c : ISPW::enumerate(n)) {
                const auto closed = psi_closed(c);
                Rational through(0);
                for (const auto& [alpha, coeff] : closed) through += coeff * zeta_qsym(alpha);
                if (through != zeta_ispw_dual(c)) defining_ok = false;
                const auto composite = abs_morphism<ISPWDual>(
                    [](const Zdual<Composition>& z) { return zeta_ispw_dual(z.primal); },
                    zd(c));
                if (closed != composite) closed_ok = false;
            }
        rep.add("defining property: the quasi-symmetric character pulls back to 1/n! (degree "
                "<= " +
                    std::to_string(top) + ")",
                defining_ok);
        rep.add("closed morphism = universal composite (degree <= " + std::to_string(top) + ")",
                closed_ok);
    }
    {
        const int top = cap(max_degree, 5);
        bool ok = true;
        for (int d1 = 1; d1 < top && ok; ++d1)
            for (int d2 = 1; d1 + d2 <= top && ok; ++d2)
                for (const auto& a : ISPW::enumerate(d1))
                    for (const auto& b : ISPW::enumerate(d2)) {
                        LinComb<Composition> lhs;
                        for (const auto& [z, c] : ISPWDual::product(zd(a), zd(b))) {
                            auto img = psi_closed(z.primal);
                            img *= c;
                            lhs += img;
                        }
                        const auto rhs = bilinear(
                            [](const Composition& x, const Composition& y) {
                                return quasi_shuffle(x, y);
                            },
                            psi_closed(a), psi_closed(b));
                        if (lhs != rhs) ok = false;
                    }
        for (int n = 1; n <= top && ok; ++n)
            for (const auto& c : ISPW::enumerate(n)) {
                LinComb<Tensor<Composition>> lhs;
                for (const auto& [t, coeff] : ISPWDual::coproduct(zd(c))) {
                    auto prod = lc_tensor(psi_closed(t[0].primal), psi_closed(t[1].primal));
                    prod *= coeff;
                    lhs += prod;
                }
                if (lhs != coproduct_lc<QSym>(psi_closed(c))) ok = false;
            }
        rep.add("the morphism respects products and coproducts (total degree <= " +
                    std::to_string(top) + ")",
                ok);
    }
    {
        const int top = cap(max_degree, 6);
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= top; ++n) {
            const auto basis = ISPW::enumerate(n);
            std::vector<RatVec> rows;
            for (const auto& c : basis) rows.push_back(coordinates<QSym>(psi_closed(c), n));
            if (rank_of_vectors(rows) != static_cast<int>(basis.size())) {
                ok = false;
                detail = "degree " + std::to_string(n);
            }
        }
        rep.add("per-degree matrices are invertible: rank 2^(n-1) (degree <= " +
                    std::to_string(top) + ")",
                ok, detail);
    }
    {
        const int top = cap(max_degree, 6);
        bool ok = true;
        for (int n = 1; n <= top && ok; ++n) {
            const auto basis = ISPW::enumerate(n);
            for (const auto& beta : basis) {
                const auto img = psi_star_closed(beta);
                for (const auto& alpha : basis)
                    if (img.coeff(alpha) != psi_closed(alpha).coeff(beta)) ok = false;
            }
        }
        rep.add("transpose identity between the two closed morphisms (weight <= " +
                    std::to_string(top) + ")",
                ok);
        bool alg_ok = true;
        std::mt19937 rng(3);
        for (int trial = 0; trial < 15; ++trial) {
            const int d1 = 1 + static_cast<int>(rng() % 3);
            const int d2 = 1 + static_cast<int>(rng() % 3);
            const auto& b1 = ISPW::enumerate(d1);
            const auto& b2 = ISPW::enumerate(d2);
            const Composition a = b1[rng() % b1.size()];
            const Composition b = b2[rng() % b2.size()];
            const auto rhs = bilinear(
                [](const Composition& x, const Composition& y) {
                    return LinComb<Composition>(concat(x, y));
                },
                psi_star_closed(a), psi_star_closed(b));
            if (psi_star_closed(concat(a, b)) != rhs) alg_ok = false;
        }
        rep.add("transpose morphism is an algebra morphism on sampled pairs", alg_ok);
    }
    return rep;
}

Report verify_golden_examples() {
    Report rep;
    // Packing and the product.
    rep.add("pack x3x7x1x8", PackedWord::pack({3, 7, 1, 8}) == pw({2, 3, 1, 4}));
    rep.add("pack x50x7x0x8", PackedWord::pack({50, 7, 0, 8}) == pw({3, 1, 0, 2}));
    rep.add("product [2,1,0][0,1,0,3,2]",
            star(pw({2, 1, 0}), pw({0, 1, 0, 3, 2})) == pw({2, 1, 0, 0, 3, 0, 5, 4}));
    rep.add("product [2,1,3][5,1,4,3,2]",
            star(pw({2, 1, 3}), pw({5, 1, 4, 3, 2})) == pw({2, 1, 3, 8, 4, 7, 6, 5}));
    rep.add("product [5,1,4,3,2][2,1,3]",
            star(pw({5, 1, 4, 3, 2}), pw({2, 1, 3})) == pw({5, 1, 4, 3, 2, 7, 6, 8}));
    // Reduced coproducts.
    check_tensor_text<WMat>(rep, "reduced coproduct of [1,2,0]",
                            reduced_coproduct<WMat>(parse_lincomb<WMat>("[1,2,0]")),
                            "2[1] # [1,0] + [0] # [1,2] + [1,2] # [0] + 2[1,0] # [1]");
    check_tensor_text<WMat>(
        rep, "reduced coproduct of [1,2,1]",
        reduced_coproduct<WMat>(parse_lincomb<WMat>("[1,2,1]")),
        "[1] # [1,0] + [1] # [1,1] + [1] # [0,1] + [1,2] # [0] + [1,1] # [1] + [2,1] # [0]");
    check_tensor_text<SH>(rep, "reduced coproduct of [3,1,2]",
                          reduced_coproduct<SH>(parse_lincomb<SH>("[3,1,2]")),
                          "2[1] # [2,1] + [1] # [1,2] + 2[2,1] # [1] + [1,2] # [1]");
    // Irreducible factorization seen through the dual coproduct.
    check_tensor_text<SHDual>(
        rep, "dual reduced coproduct of Z[3,1,2,5,4,6]",
        reduced_coproduct<SHDual>(parse_lincomb<SHDual>("Z[3,1,2,5,4,6]")),
        "Z[3,1,2] # Z[2,1,3] + Z[3,1,2,5,4] # Z[1]");
    // Block algebra.
    rep.add("block product", concat(cp({1, 2, 1, 1}), cp({1, 3})) == cp({1, 2, 1, 1, 1, 3}));
    check_tensor_text<ISPW>(rep, "coproduct of (3)", ISPW::coproduct(cp({3})),
                            "(3) # () + () # (3)");
    check_tensor_text<ISPW>(rep, "coproduct of (1,2)", ISPW::coproduct(cp({1, 2})),
                            "(1,2) # () + (1) # (2) + (2) # (1) + () # (1,2)");
    check_text<ISPW>(rep, "first primitive family at (1,1,2,2)", p_gamma({2, 2}, {1, 2}),
                     "(1,1,2,2) - 2(1,2,1,2) + 2(2,1,2,1) - (2,2,1,1)");
    check_text<ISPW>(rep, "first primitive family at (2,2,1,3)", p_gamma({2, 1, 1}, {2, 1, 3}),
                     "(2,2,1,3) - 2(2,1,2,3) + 2(1,2,3,2) - (1,3,2,2) + (2,2,3,1) - "
                     "2(2,3,2,1) + 2(3,2,1,2) - (3,1,2,2)");
    check_text<ISPW>(rep, "second primitive family at (1,1,3,3,3)", p_lambda_gamma({2, 3}, {1, 3}),
                     "-3(1,1,3,3,3) + 7(1,3,1,3,3) + 2(3,1,1,3,3) - 3(1,3,3,1,3) - "
                     "8(3,1,3,1,3) + 2(3,3,1,1,3) + 2(1,3,3,3,1) - 3(3,1,3,3,1) + "
                     "7(3,3,1,3,1) - 3(3,3,3,1,1)");
    // QSym / NSym.
    check_tensor_text<QSym>(rep, "monomial coproduct of M(2,1,3)",
                            QSym::coproduct(cp({2, 1, 3})),
                            "M(2,1,3) # M() + M(2) # M(1,3) + M(2,1) # M(3) + M() # M(2,1,3)");
    rep.add("dual monomial product",
            concat(cp({1, 3, 2, 2, 1}), cp({4, 1, 4})) == cp({1, 3, 2, 2, 1, 4, 1, 4}));
    check_tensor_text<NSym>(rep, "dual monomial reduced coproduct of M*(3)",
                            reduced_coproduct<NSym>(parse_lincomb<NSym>("M*(3)")),
                            "M*(1) # M*(2) + M*(2) # M*(1)");
    check_tensor_text<NSym>(
        rep, "dual monomial reduced coproduct of M*(1,2)",
        reduced_coproduct<NSym>(parse_lincomb<NSym>("M*(1,2)")),
        "M*(1) # M*(2) + M*(2) # M*(1) + M*(1,1) # M*(1) + M*(1) # M*(1,1)");
    // Extended compositions.
    check_text<Ce>(rep, "extended product (0;1,4,2)(3;2,2)",
                   Ce::product(ExtComposition(0, cp({1, 4, 2})), ExtComposition(3, cp({2, 2}))),
                   "(3;1,4,2,2,2)");
    check_text<Ce>(rep, "extended product (3;2,2)(0;1,4,2)",
                   Ce::product(ExtComposition(3, cp({2, 2})), ExtComposition(0, cp({1, 4, 2}))),
                   "(3;2,2,1,4,2)");
    check_text<Ce>(
        rep, "extended product (2;3,4,1,2)(12;3,14,4)",
        Ce::product(ExtComposition(2, cp({3, 4, 1, 2})), ExtComposition(12, cp({3, 14, 4}))),
        "(14;3,4,1,2,3,14,4)");
    check_tensor_text<Ce>(rep, "extended reduced coproduct of (1;1,1)",
                          reduced_coproduct<Ce>(parse_lincomb<Ce>("(1;1,1)")),
                          "(1;) # (0;1,1) + 2(0;1) # (1;1) + (0;1,1) # (1;) + 2(1;1) # (0;1)");
    check_tensor_text<Ce>(rep, "extended reduced coproduct of (0;2,1)",
                          reduced_coproduct<Ce>(parse_lincomb<Ce>("(0;2,1)")),
                          "(0;1) # (0;2) + 2(0;1) # (1;1) + (0;2) # (0;1) + 2(0;1,1) # (1;)");
    check_text<Ce>(rep, "alternating family at n = 2", gamma_2_ones(2),
                   "(0;2,1,1) - 2(0;1,2,1) + (0;1,1,2)");
    check_text<Ce>(rep, "alternating family at n = 3", gamma_2_ones(3),
                   "(0;2,1,1,1) - 3(0;1,2,1,1) + 3(0;1,1,2,1) - (0;1,1,1,2)");
    {
        LinComb<CHPair> expect;
        expect.add({cp({1, 1}), 2}, 4);
        expect.add({cp({1, 2}), 1}, 2);
        expect.add({cp({2, 1}), 1}, 2);
        expect.add({cp({2, 2}), 0}, 1);
        rep.add("coaction on (0;2,2)", rho_coaction(cp({2, 2})) == expect);
    }
    {
        LinComb<Zdual<Composition>> expect;
        expect.add(zd(cp({6, 23, 4})), 6);
        expect.add(zd(cp({5, 24, 4})), 24);
        expect.add(zd(cp({5, 23, 5})), 5);
        rep.add("dual action by one unit on Z(0;5,23,4)",
                rho_star(zd(cp({5, 23, 4})), 1) == expect);
    }
    // Polynomial side arithmetic.
    {
        LinComb<int> a(2, Rational(3));
        a.add(1, Rational(-4));
        a.add(0, Rational(6));
        LinComb<int> b(1, Rational(1));
        b.add(0, Rational(-1));
        LinComb<int> expect(3, Rational(3));
        expect.add(2, Rational(-7));
        expect.add(1, Rational(10));
        expect.add(0, Rational(-6));
        rep.add("polynomial product (3(2)-4(1)+6)((1)-1)", product_lc<PolyH>(a, b) == expect);
    }
    rep.add("tensor side concatenation",
            concat(cp({2, 3, 1}), cp({9, 4, 6})) == cp({2, 3, 1, 9, 4, 6}));
    // Non-primitive members of the two lifted families.
    rep.add("lifted family at (1,3,5) is not primitive",
            !reduced_coproduct<Ce>(gamma_ce({1, 1, 1}, {1, 3, 5})).is_zero());
    rep.add("lifted family at (1,1,2,3) is not primitive",
            !reduced_coproduct<Ce>(gamma_ce({2, 1, 1}, {1, 2, 3})).is_zero());
    rep.add("lifted second family at (1,1,1,2,2) is not primitive",
            !reduced_coproduct<Ce>(gamma_lambda_ce({3, 2}, {1, 2})).is_zero());
    // The basis bijection on a worked label.
    rep.add("basis bijection on (3;2,2)",
            upsilon(ExtComposition(3, cp({2, 2}))) == HCPair{3, cp({2, 2})} &&
                upsilon_inv(HCPair{3, cp({2, 2})}) == ExtComposition(3, cp({2, 2})));
    // Morphism values.
    check_text<QSym>(rep, "closed morphism on Z(1,1)", psi_closed(cp({1, 1})),
                     "M(1,1) + 1/2M(2)");
    check_text<QSym>(rep, "closed morphism on Z(1,2)", psi_closed(cp({1, 2})),
                     "M(1,2) + 1/2M(3)");
    check_text<ISPW>(rep, "transpose morphism on M*(2)", psi_star_closed(cp({2})),
                     "(2) + 1/2(1,1)");
    return rep;
}

Report verify_all(int max_degree, unsigned seed) {
    Report rep;
    rep.merge(verify_golden_examples());
    rep.merge(verify_hopf_suite(max_degree));
    rep.merge(verify_antipode_forms(max_degree));
    rep.merge(verify_dual_closed_forms(max_degree));
    rep.merge(verify_quadri(max_degree));
    rep.merge(verify_ispw_prim(max_degree));
    rep.merge(verify_ce_structure(max_degree));
    rep.merge(verify_semidirect(max_degree, seed));
    rep.merge(verify_morphisms(max_degree));
    return rep;
}

Report verify_suite(const std::string& name, int max_degree, unsigned seed) {
    if (name == "hopf") return verify_hopf_suite(max_degree);
    if (name == "antipode-forms") return verify_antipode_forms(max_degree);
    if (name == "dual-closed-forms") return verify_dual_closed_forms(max_degree);
    if (name == "quadri") return verify_quadri(max_degree);
    if (name == "ispw-prim") return verify_ispw_prim(max_degree);
    if (name == "ce-structure") return verify_ce_structure(max_degree);
    if (name == "semidirect") return verify_semidirect(max_degree, seed);
    if (name == "morphisms") return verify_morphisms(max_degree);
    if (name == "golden") return verify_golden_examples();
    if (name == "all") return verify_all(max_degree, seed);
    throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace hopfwords
