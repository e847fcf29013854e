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

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hopfwords/textio.hpp"
#include "hopfwords/verify.hpp"

using namespace hopfwords;

namespace {

struct Options {
    std::string format = "text";
    int max_degree = 7;
    unsigned seed = 20260810;
};

[[noreturn]] void die(const std::string& msg, int code) {
    std::cerr << "error: " << msg << "\n";
    std::exit(code);
}

template <class A>
void print_lincomb(const LinComb<typename A::Basis>& x, const Options& opt) {
    std::cout << (opt.format == "json" ? render_json<A>(x) : render<A>(x)) << "\n";
}

template <class A>
void print_tensor(const LinComb<Tensor<typename A::Basis>>& x, const Options& opt) {
    std::cout << (opt.format == "json" ? render_json<A>(x) : render<A>(x)) << "\n";
}

void require_operands(const std::vector<std::string>& operands, std::size_t n,
                      const std::string& op) {
    if (operands.size() != n)
        die(op + " expects " + std::to_string(n) + " operand(s), got " +
                std::to_string(operands.size()),
            2);
}

/// Operations every registered algebra supports.
template <class A>
bool generic_compute(const std::string& op, const std::vector<std::string>& operands,
                     const Options& opt) {
    if (op == "product") {
        require_operands(operands, 2, op);
        const auto a = parse_lincomb<A>(operands[0]);
        const auto b = parse_lincomb<A>(operands[1]);
        print_lincomb<A>(product_lc<A>(a, b), opt);
        return true;
    }
    if (op == "coproduct") {
        require_operands(operands, 1, op);
        print_tensor<A>(coproduct_lc<A>(parse_lincomb<A>(operands[0])), opt);
        return true;
    }
    if (op == "reduced-coproduct") {
        require_operands(operands, 1, op);
        print_tensor<A>(reduced_coproduct<A>(parse_lincomb<A>(operands[0])), opt);
        return true;
    }
    if (op == "antipode") {
        require_operands(operands, 1, op);
        print_lincomb<A>(antipode<A>(parse_lincomb<A>(operands[0])), opt);
        return true;
    }
    if (op == "iterated-coproduct") {
        require_operands(operands, 2, op);
        const int k = std::stoi(operands[0]);
        print_tensor<A>(iterated_coproduct<A>(parse_lincomb<A>(operands[1]), k), opt);
        return true;
    }
    return false;
}

int compute_wmat(const std::string& op, const std::vector<std::string>& operands,
                 const Options& opt) {
    if (op == "antipode-closed") {
        require_operands(operands, 1, op);
        LinComb<PackedWord> out;
        for (const auto& [w, c] : parse_lincomb<WMat>(operands[0])) {
            auto s = antipode_closed_sum(w);
            s *= c;
            out += s;
        }
        print_lincomb<WMat>(out, opt);
        return 0;
    }
    if (op == "factorize") {
        require_operands(operands, 1, op);
        ParserState p(operands[0]);
        const PackedWord w = LabelIO<WMat>::parse(p);
        bool first = true;
        for (const auto& f : irreducible_factorize(w)) {
            if (!first) std::cout << " * ";
            std::cout << to_string(f);
            first = false;
        }
        std::cout << "\n";
        return 0;
    }
    if (op == "antipode-family") {
        if (operands.empty()) die("antipode-family expects a family name", 2);
        const std::string family = operands[0];
        AntipodeFamilyValue v;
        if (family == "zeros" || family == "ones" || family == "identity-perm" ||
            family == "decreasing") {
            require_operands(operands, 2, op);
            const int n = std::stoi(operands[1]);
            if (family == "zeros") v = antipode_family_zeros(n);
            if (family == "ones") v = antipode_family_ones(n);
            if (family == "identity-perm") v = antipode_family_identity_perm(n);
            if (family == "decreasing") v = antipode_family_decreasing(n);
        } else if (family == "block-increasing") {
            require_operands(operands, 2, op);
            ParserState p(operands[1]);
            v = antipode_family_block_increasing(LabelIO<ISPW>::parse(p).parts);
        } else if (family == "mixed-f" || family == "mixed-g") {
            require_operands(operands, 3, op);
            const int n = std::stoi(operands[1]);
            const int i = std::stoi(operands[2]);
            v = family == "mixed-f" ? antipode_family_mixed_f(n, i)
                                    : antipode_family_mixed_g(n, i);
        } else {
            die("unknown antipode family: " + family, 2);
        }
        std::cout << "S(" << to_string(v.word) << ") = " << render<WMat>(v.value) << "\n";
        return 0;
    }
    if (generic_compute<WMat>(op, operands, opt)) return 0;
    die("unknown wmat operation: " + op, 2);
}

int compute_sh(const std::string& op, const std::vector<std::string>& operands,
               const Options& opt) {
    if (op == "project") {
        require_operands(operands, 1, op);
        print_lincomb<SH>(project_sh(parse_lincomb<WMat>(operands[0])), opt);
        return 0;
    }
    if (generic_compute<SH>(op, operands, opt)) return 0;
    die("unknown sh operation: " + op, 2);
}

int compute_sh_dual(const std::string& op, const std::vector<std::string>& operands,
                    const Options& opt) {
    auto binary = [&](auto product) {
        require_operands(operands, 2, op);
        const auto a = parse_lincomb<SHDual>(operands[0]);
        const auto b = parse_lincomb<SHDual>(operands[1]);
        print_lincomb<SHDual>(bilinear(product, a, b), opt);
    };
    using Z = Zdual<PackedWord>;
    if (op == "nw" || op == "ne" || op == "sw" || op == "se") {
        const QuadriKind kind = op == "nw"   ? QuadriKind::NW
                                : op == "ne" ? QuadriKind::NE
                                : op == "sw" ? QuadriKind::SW
                                             : QuadriKind::SE;
        binary([kind](const Z& x, const Z& y) { return quadri_product(kind, x, y); });
        return 0;
    }
    if (op == "left" || op == "right" || op == "wedge" || op == "vee") {
        const DendriformKind kind = op == "left"    ? DendriformKind::Left
                                    : op == "right" ? DendriformKind::Right
                                    : op == "wedge" ? DendriformKind::Wedge
                                                    : DendriformKind::Vee;
        binary([kind](const Z& x, const Z& y) { return dendriform_product(kind, x, y); });
        return 0;
    }
    if (generic_compute<SHDual>(op, operands, opt)) return 0;
    die("unknown sh-dual operation: " + op, 2);
}

int compute_ispw(const std::string& op, const std::vector<std::string>& operands,
                 const Options& opt) {
    auto parse_tuple = [](const std::string& s) {
        ParserState p(s);
        return LabelIO<ISPW>::parse(p).parts;
    };
    if (op == "p-gamma" || op == "p-lambda-gamma") {
        require_operands(operands, 2, op);
        const auto alpha = parse_tuple(operands[0]);
        const auto beta = parse_tuple(operands[1]);
        print_lincomb<ISPW>(
            op == "p-gamma" ? p_gamma(alpha, beta) : p_lambda_gamma(alpha, beta), opt);
        return 0;
    }
    if (op == "lambda-beta") {
        require_operands(operands, 2, op);
        print_lincomb<ISPW>(lambda_beta(parse_tuple(operands[0]), parse_lincomb<ISPW>(operands[1])),
                            opt);
        return 0;
    }
    if (generic_compute<ISPW>(op, operands, opt)) return 0;
    die("unknown ispw operation: " + op, 2);
}

int compute_ce(const std::string& op, const std::vector<std::string>& operands,
               const Options& opt) {
    if (op == "project") {
        require_operands(operands, 1, op);
        print_lincomb<Ce>(pi_project(parse_lincomb<WMat>(operands[0])), opt);
        return 0;
    }
    if (op == "gamma-ones") {
        require_operands(operands, 1, op);
        print_lincomb<Ce>(gamma_2_ones(std::stoi(operands[0])), opt);
        return 0;
    }
    if (op == "upsilon") {
        require_operands(operands, 1, op);
        ParserState p(operands[0]);
        const HCPair image = upsilon(LabelIO<Ce>::parse(p));
        std::cout << SemiDirect::label_str(image) << "\n";
        return 0;
    }
    if (op == "rho") {
        require_operands(operands, 1, op);
        ParserState p(operands[0]);
        const ExtComposition e = LabelIO<Ce>::parse(p);
        if (e.a0 != 0) die("rho acts on zero-headed labels (0;...)", 2);
        bool first = true;
        for (const auto& [t, c] : rho_coaction(e.parts)) {
            std::cout << render_coefficient(c, first)
                      << to_string(ExtComposition(0, t.first)) << " # ("
                      << t.second << ")";
            first = false;
        }
        std::cout << "\n";
        return 0;
    }
    if (generic_compute<Ce>(op, operands, opt)) return 0;
    die("unknown ce operation: " + op, 2);
}

int compute_ce_dual(const std::string& op, const std::vector<std::string>& operands,
                    const Options& opt) {
    if (op == "rho-star") {
        require_operands(operands, 2, op);
        ParserState p(operands[0]);
        const Zdual<ExtComposition> z = LabelIO<CeDual>::parse(p);
        if (z.primal.a0 != 0) die("rho-star acts on zero-headed duals Z(0;...)", 2);
        const int k = std::stoi(operands[1]);
        LinComb<Zdual<ExtComposition>> out;
        for (const auto& [w, c] : rho_star(zd(z.primal.parts), k))
            out.add(zd(ExtComposition(0, w.primal)), c);
        print_lincomb<CeDual>(out, opt);
        return 0;
    }
    if (generic_compute<CeDual>(op, operands, opt)) return 0;
    die("unknown ce-dual operation: " + op, 2);
}

int compute_qsym(const std::string& op, const std::vector<std::string>& operands,
                 const Options& opt) {
    if (op == "psi" || op == "abs-psi") {
        require_operands(operands, 1, op);
        LinComb<Composition> out;
        for (const auto& [z, c] : parse_lincomb<ISPWDual>(operands[0])) {
            auto img = op == "psi"
                           ? psi_closed(z.primal)
                           : abs_morphism<ISPWDual>(
                                 [](const Zdual<Composition>& l) {
                                     return zeta_ispw_dual(l.primal);
                                 },
                                 z);
            img *= c;
            out += img;
        }
        print_lincomb<QSym>(out, opt);
        return 0;
    }
    if (generic_compute<QSym>(op, operands, opt)) return 0;
    die("unknown qsym operation: " + op, 2);
}

int compute_nsym(const std::string& op, const std::vector<std::string>& operands,
                 const Options& opt) {
    if (op == "psi-star") {
        require_operands(operands, 1, op);
        LinComb<Composition> out;
        for (const auto& [c, coeff] : parse_lincomb<NSym>(operands[0])) {
            auto img = psi_star_closed(c);
            img *= coeff;
            out += img;
        }
        print_lincomb<ISPW>(out, opt);
        return 0;
    }
    if (generic_compute<NSym>(op, operands, opt)) return 0;
    die("unknown nsym operation: " + op, 2);
}

template <class A>
int run_primitives(int degree, const Options& opt) {
    const auto prim = primitive_basis<A>(degree);
    std::cout << "dimension " << prim.size() << "\n";
    for (const auto& v : prim)
        std::cout << (opt.format == "json" ? render_json<A>(v) : render<A>(v)) << "\n";
    return 0;
}

template <class A>
int run_dims(int max_degree) {
    std::cout << "degree  dim  prim\n";
    for (int n = 1; n <= max_degree; ++n) {
        std::cout << n << "  " << A::enumerate(n).size() << "  "
                  << primitive_basis<A>(n).size() << "\n";
    }
    return 0;
}

int dispatch_compute(const std::string& algebra, const std::string& op,
                     const std::vector<std::string>& operands, const Options& opt) {
    if (algebra == "wmat") return compute_wmat(op, operands, opt);
    if (algebra == "sh") return compute_sh(op, operands, opt);
    if (algebra == "ispw") return compute_ispw(op, operands, opt);
    if (algebra == "ce") return compute_ce(op, operands, opt);
    if (algebra == "qsym") return compute_qsym(op, operands, opt);
    if (algebra == "nsym") return compute_nsym(op, operands, opt);
    if (algebra == "wmat-dual") {
        if (generic_compute<WMatDual>(op, operands, opt)) return 0;
        die("unknown wmat-dual operation: " + op, 2);
    }
    if (algebra == "sh-dual") return compute_sh_dual(op, operands, opt);
    if (algebra == "ispw-dual") {
        if (generic_compute<ISPWDual>(op, operands, opt)) return 0;
        die("unknown ispw-dual operation: " + op, 2);
    }
    if (algebra == "ce-dual") return compute_ce_dual(op, operands, opt);
    die("unknown algebra: " + algebra, 2);
}

int dispatch_primitives(const std::string& algebra, int degree, const Options& opt) {
    if (algebra == "wmat") return run_primitives<WMat>(degree, opt);
    if (algebra == "sh") return run_primitives<SH>(degree, opt);
    if (algebra == "ispw") return run_primitives<ISPW>(degree, opt);
    if (algebra == "ce") return run_primitives<Ce>(degree, opt);
    if (algebra == "qsym") return run_primitives<QSym>(degree, opt);
    if (algebra == "nsym") return run_primitives<NSym>(degree, opt);
    if (algebra == "wmat-dual") return run_primitives<WMatDual>(degree, opt);
    if (algebra == "sh-dual") return run_primitives<SHDual>(degree, opt);
    if (algebra == "ispw-dual") return run_primitives<ISPWDual>(degree, opt);
    if (algebra == "ce-dual") return run_primitives<CeDual>(degree, opt);
    die("unknown algebra: " + algebra, 2);
}

int dispatch_dims(const std::string& algebra, int max_degree) {
    if (algebra == "wmat") return run_dims<WMat>(max_degree);
    if (algebra == "sh") return run_dims<SH>(max_degree);
    if (algebra == "ispw") return run_dims<ISPW>(max_degree);
    if (algebra == "ce") return run_dims<Ce>(max_degree);
    if (algebra == "qsym") return run_dims<QSym>(max_degree);
    if (algebra == "nsym") return run_dims<NSym>(max_degree);
    die("unknown algebra: " + algebra, 2);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the packed word Hopf algebra and its relatives"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--max-degree", opt.max_degree, "Degree budget for sweeps");
        cmd->add_option("--seed", opt.seed, "Seed for sampled property suites");
    };

    std::string algebra, operation, suite_name = "all";
    std::vector<std::string> operands;
    int degree = 0;

    auto* compute = app.add_subcommand("compute", "Evaluate one operation exactly");
    add_common(compute);
    compute->add_option("algebra", algebra)->required();
    compute->add_option("operation", operation)->required();
    // Operands are taken verbatim; bracketed words must not be parsed as
    // CLI array literals.
    compute->allow_extras();

    auto* primitives =
        app.add_subcommand("primitives", "Canonical basis of the primitive elements");
    add_common(primitives);
    primitives->add_option("algebra", algebra)->required();
    primitives->add_option("degree", degree)->required();

    auto* dims = app.add_subcommand("dims", "Per-degree dimensions and primitive dimensions");
    add_common(dims);
    dims->add_option("algebra", algebra)->required();
    dims->add_option("max_degree", degree)->required();

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    add_common(verify);
    verify->add_option("name", suite_name, "Suite name or 'all'");
    verify->add_option("max_degree", opt.max_degree);
    verify->add_option("--suite", suite_name, "Suite name (flag spelling)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            operands = compute->remaining();
            return dispatch_compute(algebra, operation, operands, opt);
        }
        if (primitives->parsed()) return dispatch_primitives(algebra, degree, opt);
        if (dims->parsed()) return dispatch_dims(algebra, degree);
        if (verify->parsed()) {
            const Report rep = verify_suite(suite_name, opt.max_degree, opt.seed);
            std::cout << rep.to_text();
            std::cout << (rep.ok() ? "ALL CHECKS PASSED" : "FAILURES: " +
                          std::to_string(rep.failures()))
                      << "\n";
            return rep.ok() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        die(std::string("parse: ") + e.what(), 2);
    } catch (const ResourceLimitError& e) {
        die(std::string("resource: ") + e.what(), 3);
    } catch (const std::exception& e) {
        die(e.what(), 2);
    }
    return 0;
}
