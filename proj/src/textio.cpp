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

#include "hopfwords/textio.hpp"

#include <json.hpp>

namespace hopfwords {

void ParserState::skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
}

bool ParserState::eof() { return pos_ >= s_.size(); }

char ParserState::peek() { return pos_ < s_.size() ? s_[pos_] : '\0'; }

char ParserState::get() {
    if (eof()) fail("unexpected end of input");
    return s_[pos_++];
}

bool ParserState::accept(char c) {
    if (!eof() && s_[pos_] == c) {
        ++pos_;
        return true;
    }
    return false;
}

void ParserState::expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
}

bool ParserState::accept_str(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) == lit) {
        pos_ += lit.size();
        return true;
    }
    return false;
}

void ParserState::fail(const std::string& msg) const { throw ParseError(msg, pos_); }

Integer ParserState::parse_integer() {
    skip_ws();
    std::string digits;
    if (peek() == '-' || peek() == '+') digits += get();
    if (peek() < '0' || peek() > '9') fail("expected an integer");
    while (peek() >= '0' && peek() <= '9') digits += get();
    return Integer(digits);
}

Rational ParserState::parse_rational() {
    const Integer num = parse_integer();
    skip_ws();
    if (accept('/')) {
        const Integer den = parse_integer();
        if (den == 0) fail("zero denominator");
        return Rational(num, den);
    }
    return Rational(num);
}

std::vector<int> ParserState::parse_int_list(char close) {
    std::vector<int> out;
    skip_ws();
    if (accept(close)) return out;
    while (true) {
        const Integer v = parse_integer();
        if (v < 0 || v > 1000000) fail("letter index out of range");
        out.push_back(static_cast<int>(v));
        skip_ws();
        if (accept(close)) break;
        expect(',');
    }
    return out;
}

PackedWord LabelIO<WMat>::parse(ParserState& p) {
    p.skip_ws();
    p.expect('[');
    const auto letters = p.parse_int_list(']');
    if (!is_packed(letters)) p.fail("word is not packed");
    return PackedWord::from_letters(letters);
}

Composition LabelIO<ISPW>::parse(ParserState& p) {
    p.skip_ws();
    // Accept the block word spelling as well as the composition spelling.
    if (p.peek() == '[') {
        p.expect('[');
        const auto letters = p.parse_int_list(']');
        if (!is_packed(letters)) p.fail("word is not packed");
        return block_of_word(PackedWord::from_letters(letters));
    }
    p.expect('(');
    const auto parts = p.parse_int_list(')');
    for (int x : parts)
        if (x < 1) p.fail("composition parts must be positive");
    return Composition(parts);
}

ExtComposition LabelIO<Ce>::parse(ParserState& p) {
    p.skip_ws();
    p.expect('(');
    const Integer a0 = p.parse_integer();
    if (a0 < 0) p.fail("leading frequency must be non-negative");
    p.skip_ws();
    p.expect(';');
    const auto parts = p.parse_int_list(')');
    for (int x : parts)
        if (x < 1) p.fail("parts must be positive");
    return ExtComposition(static_cast<int>(a0), Composition(parts));
}

Composition LabelIO<QSym>::parse(ParserState& p) {
    p.skip_ws();
    if (!p.accept('M')) p.fail("expected 'M'");
    p.expect('(');
    const auto parts = p.parse_int_list(')');
    for (int x : parts)
        if (x < 1) p.fail("composition parts must be positive");
    return Composition(parts);
}

Composition LabelIO<NSym>::parse(ParserState& p) {
    p.skip_ws();
    if (!p.accept_str("M*")) p.fail("expected 'M*'");
    p.expect('(');
    const auto parts = p.parse_int_list(')');
    for (int x : parts)
        if (x < 1) p.fail("composition parts must be positive");
    return Composition(parts);
}

Zdual<PackedWord> LabelIO<WMatDual>::parse(ParserState& p) {
    p.skip_ws();
    if (!p.accept('Z')) p.fail("expected 'Z'");
    return zd(LabelIO<WMat>::parse(p));
}

Zdual<Composition> LabelIO<ISPWDual>::parse(ParserState& p) {
    p.skip_ws();
    if (!p.accept('Z')) p.fail("expected 'Z'");
    return zd(LabelIO<ISPW>::parse(p));
}

Zdual<ExtComposition> LabelIO<CeDual>::parse(ParserState& p) {
    p.skip_ws();
    if (!p.accept('Z')) p.fail("expected 'Z'");
    return zd(LabelIO<Ce>::parse(p));
}

std::string render_coefficient(const Rational& c, bool leading) {
    std::string out;
    const bool negative = c < 0;
    if (leading) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? Rational(-c) : c;
    if (mag != 1) out += mag.str();
    return out;
}

std::string render_json_terms(const std::vector<std::pair<std::string, Rational>>& terms,
                              const std::string& algebra) {
    nlohmann::json j;
    j["schema"] = 1;
    j["algebra"] = algebra;
    j["terms"] = nlohmann::json::array();
    for (const auto& [term, c] : terms) {
        nlohmann::json t;
        t["term"] = term;
        t["numerator"] = numerator(c).str();
        t["denominator"] = denominator(c).str();
        j["terms"].push_back(t);
    }
    return j.dump();
}

std::vector<std::pair<std::string, Rational>> json_terms(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("schema") || j["schema"] != 1)
        throw std::runtime_error("json_terms: unsupported schema");
    std::vector<std::pair<std::string, Rational>> out;
    for (const auto& t : j.at("terms")) {
        const Integer num(t.at("numerator").get<std::string>());
        const Integer den(t.at("denominator").get<std::string>());
        out.push_back({t.at("term").get<std::string>(), Rational(num, den)});
    }
    return out;
}

}  // namespace hopfwords
