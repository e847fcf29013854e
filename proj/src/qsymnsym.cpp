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

#include "hopfwords/qsymnsym.hpp"

namespace hopfwords {

LinComb<Composition> quasi_shuffle(const Composition& a, const Composition& b) {
    if (a.empty()) return LinComb<Composition>(b);
    if (b.empty()) return LinComb<Composition>(a);
    LinComb<Composition> out;
    const int ha = a.parts.front();
    const int hb = b.parts.front();
    const Composition ta(std::vector<int>(a.parts.begin() + 1, a.parts.end()));
    const Composition tb(std::vector<int>(b.parts.begin() + 1, b.parts.end()));
    auto prepend = [](int head, const LinComb<Composition>& x) {
        LinComb<Composition> r;
        for (const auto& [c, coeff] : x) {
            std::vector<int> parts{head};
            parts.insert(parts.end(), c.parts.begin(), c.parts.end());
            r.add(Composition(std::move(parts)), coeff);
        }
        return r;
    };
    out += prepend(ha, quasi_shuffle(ta, b));
    out += prepend(hb, quasi_shuffle(a, tb));
    out += prepend(ha + hb, quasi_shuffle(ta, tb));
    return out;
}

LinComb<Tensor<Composition>> QSym::coproduct(const Composition& a) {
    const int k = a.length();
    LinComb<Tensor<Composition>> out;
    for (int i = 0; i <= k; ++i) {
        Composition left(std::vector<int>(a.parts.begin(), a.parts.begin() + i));
        Composition right(std::vector<int>(a.parts.begin() + i, a.parts.end()));
        out.add(Tensor<Composition>{std::move(left), std::move(right)}, 1);
    }
    return out;
}

LinComb<Tensor<Composition>> NSym::coproduct(const Composition& a) {
    // Multiplicative extension of the generator split
    // (n) -> sum over s of (s) x (n-s), with empty parts dropped.
    LinComb<Tensor<Composition>> out;
    out.add(Tensor<Composition>{Composition(), Composition()}, 1);
    for (int part : a.parts) {
        LinComb<Tensor<Composition>> next;
        for (const auto& [t, c] : out) {
            for (int s = 0; s <= part; ++s) {
                Composition left = t[0];
                Composition right = t[1];
                if (s > 0) left.parts.push_back(s);
                if (s < part) right.parts.push_back(part - s);
                next.add(Tensor<Composition>{std::move(left), std::move(right)}, c);
            }
        }
        out = std::move(next);
    }
    return out;
}

Rational zeta_qsym(const Composition& alpha) {
    return alpha.length() <= 1 ? Rational(1) : Rational(0);
}

Rational zeta_ispw_dual(const Composition& label) {
    return Rational(1, factorial(label.length()));
}

LinComb<Composition> psi_closed(const Composition& zk) {
    const int n = zk.length();
    LinComb<Composition> out;
    if (n == 0) {
        out.add(Composition(), 1);
        return out;
    }
    // Group the n parts into consecutive chunks in every ordered way; each
    // chunk contributes the sum of its parts, weighted by 1/(chunk length)!.
    for (const auto& grouping : compositions_of(n)) {
        Rational coeff(1);
        std::vector<int> merged;
        int pos = 0;
        for (int size : grouping) {
            int sum = 0;
            for (int r = 0; r < size; ++r) sum += zk.parts[pos++];
            merged.push_back(sum);
            coeff /= Rational(factorial(size));
        }
        out.add(Composition(std::move(merged)), coeff);
    }
    return out;
}

LinComb<Composition> psi_star_closed(const Composition& mstar) {
    // Independently refine each part into a composition, weighting by the
    // inverse factorial of the refinement length; concatenate the pieces.
    LinComb<Composition> out{Composition()};
    for (int part : mstar.parts) {
        LinComb<Composition> refinements;
        for (const auto& u : compositions_of(part))
            refinements.add(Composition(u), Rational(1, factorial(static_cast<int>(u.size()))));
        out = bilinear(
            [](const Composition& x, const Composition& y) {
                return LinComb<Composition>(concat(x, y));
            },
            out, refinements);
    }
    return out;
}

}  // namespace hopfwords
