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

#ifndef HOPFWORDS_TEXTIO_HPP
#define HOPFWORDS_TEXTIO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hopfwords/compext.hpp"
#include "hopfwords/ispw.hpp"
#include "hopfwords/perms.hpp"
#include "hopfwords/qsymnsym.hpp"
#include "hopfwords/wmat.hpp"
#include "hopfwords/wmatdual.hpp"

namespace hopfwords {

/// Parse failure with the offending position in the input.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

/*
 * Grammar (whitespace-insensitive):
 *   expr    := ['-'] term (('+'|'-') term)*
 *   term    := [coeff ['*']] tensor
 *   tensor  := label ('#' label)*
 *   coeff   := int ['/' int]
 *   label   := '[' ints ']'                packed word
 *            | '(' ints ')'                composition
 *            | '(' int ';' ints ')'        extended composition
 *            | 'Z' label | 'M' '(' ... | 'M*' '(' ...
 * Which label forms are accepted depends on the algebra.
 */
class ParserState {
   public:
    explicit ParserState(std::string_view s) : s_(s) {}

    void skip_ws();
    bool eof();
    char peek();
    char get();
    bool accept(char c);
    void expect(char c);
    bool accept_str(std::string_view lit);
    [[noreturn]] void fail(const std::string& msg) const;

    Integer parse_integer();
    /// Signed p or p/q.
    Rational parse_rational();
    /// Comma-separated non-negative integers until the closing character.
    std::vector<int> parse_int_list(char close);

    std::size_t pos() const { return pos_; }

   private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

/// Per-algebra label syntax.
template <class A>
struct LabelIO;

template <>
struct LabelIO<WMat> {
    static PackedWord parse(ParserState& p);
};
template <>
struct LabelIO<SH> {
    static PackedWord parse(ParserState& p) { return LabelIO<WMat>::parse(p); }
};
template <>
struct LabelIO<ISPW> {
    static Composition parse(ParserState& p);
};
template <>
struct LabelIO<Ce> {
    static ExtComposition parse(ParserState& p);
};
template <>
struct LabelIO<QSym> {
    static Composition parse(ParserState& p);
};
template <>
struct LabelIO<NSym> {
    static Composition parse(ParserState& p);
};
template <>
struct LabelIO<WMatDual> {
    static Zdual<PackedWord> parse(ParserState& p);
};
template <>
struct LabelIO<SHDual> {
    static Zdual<PackedWord> parse(ParserState& p) { return LabelIO<WMatDual>::parse(p); }
};
template <>
struct LabelIO<ISPWDual> {
    static Zdual<Composition> parse(ParserState& p);
};
template <>
struct LabelIO<CeDual> {
    static Zdual<ExtComposition> parse(ParserState& p);
};

/// Linear combination over scalar labels.
template <class A>
LinComb<typename A::Basis> parse_lincomb(std::string_view text) {
    ParserState p(text);
    LinComb<typename A::Basis> out;
    p.skip_ws();
    bool first = true;
    while (true) {
        Rational sign(1);
        p.skip_ws();
        if (p.accept('-'))
            sign = -1;
        else if (!first)
            p.expect('+');
        else
            (void)p.accept('+');
        p.skip_ws();
        Rational coeff(1);
        const char c = p.peek();
        if (c == '+' || c == '-' || (c >= '0' && c <= '9')) {
            coeff = p.parse_rational();
            p.skip_ws();
            (void)p.accept('*');
        }
        p.skip_ws();
        out.add(LabelIO<A>::parse(p), sign * coeff);
        p.skip_ws();
        if (p.eof()) break;
        first = false;
        if (p.peek() != '+' && p.peek() != '-') p.fail("expected '+' or '-'");
    }
    return out;
}

/// Linear combination over tensor terms (uniform arity enforced by LinComb).
template <class A>
LinComb<Tensor<typename A::Basis>> parse_tensor_lincomb(std::string_view text) {
    using B = typename A::Basis;
    ParserState p(text);
    LinComb<Tensor<B>> out;
    p.skip_ws();
    bool first = true;
    while (true) {
        Rational sign(1);
        p.skip_ws();
        if (p.accept('-'))
            sign = -1;
        else if (!first)
            p.expect('+');
        else
            (void)p.accept('+');
        p.skip_ws();
        Rational coeff(1);
        const char c = p.peek();
        if (c == '+' || c == '-' || (c >= '0' && c <= '9')) {
            coeff = p.parse_rational();
            p.skip_ws();
            (void)p.accept('*');
        }
        Tensor<B> legs;
        legs.push_back(LabelIO<A>::parse(p));
        p.skip_ws();
        while (p.accept('#')) {
            p.skip_ws();
            legs.push_back(LabelIO<A>::parse(p));
            p.skip_ws();
        }
        out.add(legs, sign * coeff);
        if (p.eof()) break;
        first = false;
        if (p.peek() != '+' && p.peek() != '-') p.fail("expected '+' or '-'");
    }
    return out;
}

std::string render_coefficient(const Rational& c, bool leading);

template <class A>
std::string render(const LinComb<typename A::Basis>& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& [label, c] : x) {
        out += render_coefficient(c, leading);
        out += A::label_str(label);
        leading = false;
    }
    return out;
}

template <class A>
std::string render(const LinComb<Tensor<typename A::Basis>>& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& [legs, c] : x) {
        out += render_coefficient(c, leading);
        for (std::size_t i = 0; i < legs.size(); ++i) {
            if (i) out += " # ";
            out += A::label_str(legs[i]);
        }
        leading = false;
    }
    return out;
}

/// Versioned JSON rendering: one record per term with exact integer
/// numerator and denominator.
std::string render_json_terms(const std::vector<std::pair<std::string, Rational>>& terms,
                              const std::string& algebra);

template <class A>
std::string render_json(const LinComb<typename A::Basis>& x) {
    std::vector<std::pair<std::string, Rational>> terms;
    for (const auto& [label, c] : x) terms.push_back({A::label_str(label), c});
    return render_json_terms(terms, A::name());
}

template <class A>
std::string render_json(const LinComb<Tensor<typename A::Basis>>& x) {
    std::vector<std::pair<std::string, Rational>> terms;
    for (const auto& [legs, c] : x) {
        std::string s;
        for (std::size_t i = 0; i < legs.size(); ++i) {
            if (i) s += " # ";
            s += A::label_str(legs[i]);
        }
        terms.push_back({s, c});
    }
    return render_json_terms(terms, A::name());
}

/// Inverse of render_json: term strings are re-parsed in the algebra's
/// syntax.
template <class A>
LinComb<typename A::Basis> parse_json(const std::string& text);

template <class A>
LinComb<Tensor<typename A::Basis>> parse_json_tensor(const std::string& text);

/// Raw JSON term extraction shared by the typed parsers.
std::vector<std::pair<std::string, Rational>> json_terms(const std::string& text);

template <class A>
LinComb<typename A::Basis> parse_json(const std::string& text) {
    LinComb<typename A::Basis> out;
    for (const auto& [term, c] : json_terms(text)) {
        ParserState p(term);
        p.skip_ws();
        out.add(LabelIO<A>::parse(p), c);
    }
    return out;
}

template <class A>
LinComb<Tensor<typename A::Basis>> parse_json_tensor(const std::string& text) {
    using B = typename A::Basis;
    LinComb<Tensor<B>> out;
    for (const auto& [term, c] : json_terms(text)) {
        ParserState p(term);
        Tensor<B> legs;
        p.skip_ws();
        legs.push_back(LabelIO<A>::parse(p));
        p.skip_ws();
        while (p.accept('#')) {
            p.skip_ws();
            legs.push_back(LabelIO<A>::parse(p));
            p.skip_ws();
        }
        out.add(legs, c);
    }
    return out;
}

}  // namespace hopfwords

#endif
