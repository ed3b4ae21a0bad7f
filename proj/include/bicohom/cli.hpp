#ifndef BICOHOM_CLI_HPP
#define BICOHOM_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bicohom/model_zoo.hpp"
#include "bicohom/report.hpp"

namespace bicohom::cli {

/// Captured outcome of one invocation. Exit codes: 0 normal, 1 usage error,
/// 2 invalid input complex, 3 a checker returned VIOLATION.
struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

namespace detail {

inline StatementId parse_statement(const std::string& s) {
    if (s == "thm1.1a") return StatementId::Thm11A;
    if (s == "thm1.1b") return StatementId::Thm11B;
    if (s == "thm1.2") return StatementId::Thm12;
    if (s == "cor1.3") return StatementId::Cor13;
    if (s == "prop2.1") return StatementId::Prop21;
    if (s == "prop2.2") return StatementId::Prop22;
    if (s == "cor3.3") return StatementId::Cor33;
    if (s == "cor3.4") return StatementId::Cor34;
    if (s == "cor3.5") return StatementId::Cor35;
    throw UnknownStatement("unknown statement '" + s +
                           "' (expected thm1.1a, thm1.1b, thm1.2, cor1.3, prop2.1, prop2.2, "
                           "cor3.3, cor3.4 or cor3.5)");
}

inline HypothesisMode parse_mode(const std::string& s) {
    if (s == "direct") return HypothesisMode::Direct;
    if (s == "literal" || s == "paper-literal") return HypothesisMode::PaperLiteral;
    throw BadSpec("unknown mode '" + s + "' (expected direct or literal)");
}

inline std::vector<ZigzagLetter> parse_shape(const std::string& s) {
    std::vector<ZigzagLetter> word;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok == "del-out") word.push_back(ZigzagLetter::DelOut);
        else if (tok == "delbar-out") word.push_back(ZigzagLetter::DelbarOut);
        else if (tok == "del-in") word.push_back(ZigzagLetter::DelIn);
        else if (tok == "delbar-in") word.push_back(ZigzagLetter::DelbarIn);
        else throw BadShape("unknown zigzag letter '" + tok +
                            "' (expected del-out, delbar-out, del-in or delbar-in)");
    }
    return word;
}

inline DoubleComplex load_input(const std::string& path, std::istream* stdin_stream) {
    if (path == "-") {
        return parse_complex(stdin_stream ? *stdin_stream : std::cin);
    }
    std::ifstream f(path);
    if (!f) throw BadSpec("cannot open input file '" + path + "'");
    return parse_complex(f);
}

}  // namespace detail

/**
 * Runs one toolkit command against an argument vector (without the program
 * name). Used both by the binary and by tests, so the whole surface is
 * exercisable in-process.
 */
inline CliResult run_cli(const std::vector<std::string>& args,
                         std::istream* stdin_stream = nullptr) {
    std::ostringstream out, err;

    CLI::App app{"exact Bott-Chern / Aeppli / Dolbeault / de Rham cohomology of bounded double "
                 "complexes"};
    app.name("bicohom");
    app.require_subcommand(1);

    std::string input = "-";
    bool json = false;
    int p = 0, q = 0;
    std::string statement, mode = "direct";
    std::string kind, shape, name;
    bool bc = false, sweep = false;
    std::uint64_t seed = 0;
    int blocks = 10, n = 2;
    int pmin = 0, pmax = 4, qmin = 0, qmax = 4;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "input path, or - for standard input");
        cmd->add_flag("--json", json, "render the report as JSON");
    };

    auto* cmd_validate = app.add_subcommand("validate", "check the structural identities");
    add_input(cmd_validate);

    auto* cmd_table = app.add_subcommand(
        "table", "all cohomology dimensions, Betti numbers and Frolicher margins");
    add_input(cmd_table);

    auto* cmd_check = app.add_subcommand("check", "run one statement checker");
    cmd_check->add_option("statement", statement, "statement id, e.g. thm1.1a")->required();
    add_input(cmd_check);
    auto* opt_check_p = cmd_check->add_option("--p", p, "first index of the bidegree");
    auto* opt_check_q = cmd_check->add_option("--q", q, "second index / the q parameter");
    cmd_check->add_option("--mode", mode, "hypothesis mode: direct (default) or literal");

    auto* cmd_qcomplete =
        app.add_subcommand("qcomplete", "cohomological q-completeness predicates");
    add_input(cmd_qcomplete);
    auto* opt_qc_q = cmd_qcomplete->add_option("--q", q, "the q to test");
    cmd_qcomplete->add_flag("--bc", bc, "test the Bott-Chern flavour");
    cmd_qcomplete->add_flag("--sweep", sweep, "test every q in 1..n");

    auto* cmd_gen = app.add_subcommand("gen", "emit a generated model on standard output");
    cmd_gen->add_option("--kind", kind,
                        "dot, square, zigzag, random_sum, iwasawa or stein_like")
        ->required();
    cmd_gen->add_option("--p", p, "anchor p");
    cmd_gen->add_option("--q", q, "anchor q");
    cmd_gen->add_option("--shape", shape, "zigzag word, e.g. del-out,delbar-out");
    cmd_gen->add_option("--seed", seed, "random_sum seed");
    cmd_gen->add_option("--blocks", blocks, "random_sum block count (default 10)");
    cmd_gen->add_option("--pmin", pmin, "random_sum bounds (defaults [0,4]^2)");
    cmd_gen->add_option("--pmax", pmax, "");
    cmd_gen->add_option("--qmin", qmin, "");
    cmd_gen->add_option("--qmax", qmax, "");
    cmd_gen->add_option("--n", n, "stein_like dimension");
    cmd_gen->add_option("--name", name, "override the model name");

    auto* cmd_maps = app.add_subcommand("maps", "the natural comparison maps at one bidegree");
    add_input(cmd_maps);
    auto* opt_maps_p = cmd_maps->add_option("--p", p, "bidegree p")->required();
    auto* opt_maps_q = cmd_maps->add_option("--q", q, "bidegree q")->required();
    (void)opt_maps_p;
    (void)opt_maps_q;

    try {
        std::vector<const char*> argv;
        argv.push_back("bicohom");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {code == 0 ? 0 : 1, out.str(), err.str()};
    }

    std::string echo = "bicohom";
    for (const auto& a : args) echo += " " + a;

    int code = 0;
    try {
        if (app.got_subcommand(cmd_gen)) {
            DoubleComplex c;
            if (kind == "dot") {
                c = build_dot(p, q);
            } else if (kind == "square") {
                c = build_square(p, q);
            } else if (kind == "zigzag") {
                c = build_zigzag({p, q}, detail::parse_shape(shape));
            } else if (kind == "random_sum") {
                GeneratorSpec spec;
                spec.kind = GeneratorSpec::Kind::RandomSum;
                spec.block_count = blocks;
                spec.bounds = {pmin, pmax, qmin, qmax};
                spec.seed = seed;
                c = random_sum(spec).complex;
            } else if (kind == "iwasawa") {
                c = iwasawa();
            } else if (kind == "stein_like") {
                c = stein_like(n);
            } else {
                throw BadSpec("unknown generator kind '" + kind + "'");
            }
            if (!name.empty()) c.set_name(name);
            out << serialize(c);
            return {0, out.str(), err.str()};
        }

        // argument problems must surface before any input is consumed
        StatementId stmt_id{};
        HypothesisMode hyp_mode{};
        if (app.got_subcommand(cmd_check)) {
            stmt_id = detail::parse_statement(statement);
            hyp_mode = detail::parse_mode(mode);
        }

        Report report;
        report.command = echo;
        const DoubleComplex c = detail::load_input(input, stdin_stream);
        report.input_digest = digest(c);

        if (app.got_subcommand(cmd_validate)) {
            report.validation = c.validate();
            code = report.validation->valid() ? 0 : 2;
        } else {
            // every other command needs a valid complex
            const auto vr = c.validate();
            if (!vr.valid()) {
                report.validation = vr;
                out << render(report, json);
                return {2, out.str(), err.str()};
            }
            if (app.got_subcommand(cmd_table)) {
                report.table = full_table(c);
                report.ddbar = ddbar_lemma_holds(c);
            } else if (app.got_subcommand(cmd_check)) {
                const StatementId id = stmt_id;
                const HypothesisMode m = hyp_mode;
                const bool has_p = opt_check_p->count() > 0;
                const bool has_q = opt_check_q->count() > 0;
                auto need_pq = [&]() {
                    if (!has_p || !has_q)
                        throw BadSpec("statement " + statement + " requires --p and --q");
                };
                auto need_q = [&]() {
                    if (!has_q) throw BadSpec("statement " + statement + " requires --q");
                };
                switch (id) {
                    case StatementId::Thm11A:
                        need_pq();
                        report.verdicts.push_back(check_thm_1_1(c, p, q, true, m));
                        break;
                    case StatementId::Thm11B:
                        need_pq();
                        report.verdicts.push_back(check_thm_1_1(c, p, q, false, m));
                        break;
                    case StatementId::Thm12:
                        need_pq();
                        report.verdicts.push_back(check_thm_1_2(c, p, q, m));
                        break;
                    case StatementId::Cor13:
                        need_q();
                        report.verdicts = check_cor_1_3(c, q, m);
                        break;
                    case StatementId::Prop21:
                        need_pq();
                        report.verdicts.push_back(check_prop_2_1(c, p, q));
                        break;
                    case StatementId::Prop22:
                        need_pq();
                        report.verdicts.push_back(check_prop_2_2(c, p, q));
                        break;
                    case StatementId::Cor33:
                        need_pq();
                        report.verdicts.push_back(check_cor_3_3(c, p, q, m));
                        break;
                    case StatementId::Cor34:
                        need_pq();
                        report.verdicts.push_back(check_cor_3_4(c, p, q));
                        break;
                    case StatementId::Cor35:
                        need_q();
                        report.verdicts.push_back(check_cor_3_5(c, q));
                        break;
                }
                for (const auto& v : report.verdicts)
                    if (v.verdict == Verdict::Violation) code = 3;
            } else if (app.got_subcommand(cmd_qcomplete)) {
                if (sweep) {
                    const auto nn = c.complex_dimension();
                    if (!nn)
                        throw MissingDimension("--sweep needs the declared complex dimension n");
                    for (int qq = 1; qq <= *nn; ++qq) {
                        report.qcomplete.push_back(
                            {qq, bc,
                             bc ? is_cohomologically_bc_q_complete(c, qq)
                                : is_cohomologically_q_complete(c, qq)});
                    }
                } else {
                    if (opt_qc_q->count() == 0) throw BadSpec("qcomplete requires --q or --sweep");
                    report.qcomplete.push_back(
                        {q, bc,
                         bc ? is_cohomologically_bc_q_complete(c, q)
                            : is_cohomologically_q_complete(c, q)});
                }
            } else if (app.got_subcommand(cmd_maps)) {
                report.maps.push_back(natural_map_bc_to_dr(c, p, q));
                const std::pair<TheorySpace, TheorySpace> pairs[] = {
                    {TheorySpace::BottChern, TheorySpace::DolbeaultDbar},
                    {TheorySpace::BottChern, TheorySpace::DolbeaultDel},
                    {TheorySpace::BottChern, TheorySpace::Aeppli},
                    {TheorySpace::DolbeaultDbar, TheorySpace::Aeppli},
                    {TheorySpace::DolbeaultDel, TheorySpace::Aeppli},
                    {TheorySpace::DeRham, TheorySpace::Aeppli},
                };
                for (const auto& [s, t] : pairs)
                    report.maps.push_back(natural_map(c, s, t, p, q));
            }
        }
        out << render(report, json);
    } catch (const bicohom::ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return {2, out.str(), err.str()};
    } catch (const InvalidComplex& e) {
        err << "error: " << e.what() << "\n";
        return {2, out.str(), err.str()};
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return {1, out.str(), err.str()};
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return {1, out.str(), err.str()};
    }
    return {code, out.str(), err.str()};
}

inline int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const CliResult r = run_cli(args, &std::cin);
    std::cout << r.out;
    std::cerr << r.err;
    return r.code;
}

}  // namespace bicohom::cli

#endif  // BICOHOM_CLI_HPP
