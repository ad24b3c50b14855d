#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "loopalg/json_io.hpp"

using namespace loopalg;

namespace {

struct CommonOpts {
    int genus = 1;
    int boundary = 1;
    int trunc = 4;
    std::string expansion = "symp";
    std::string format = "json";
};

void add_common(CLI::App *cmd, CommonOpts &o, bool with_expansion = true) {
    cmd->add_option("--genus", o.genus, "surface genus");
    cmd->add_option("--boundary", o.boundary, "number of boundary components");
    cmd->add_option("--trunc", o.trunc, "tensor truncation degree N");
    if (with_expansion)
        cmd->add_option("--expansion", o.expansion, "expansion kind: exp | symp")
            ->check(CLI::IsMember({"exp", "symp"}));
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "pretty"}));
}

Expansion make_expansion(const CommonOpts &o) {
    const SurfaceSignature sig(o.genus, o.boundary, o.trunc);
    if (o.expansion == "exp") return exponential_expansion(sig);
    return symplectic_expansion(sig);
}

// LOOPALG_WIDTH wraps pretty term lists at the given column (the only
// environment influence on output).
std::string wrapped(const std::string &s) {
    const char *env = std::getenv("LOOPALG_WIDTH");
    if (!env) return s;
    const std::size_t width = std::strtoul(env, nullptr, 10);
    if (width < 8) return s;
    std::string out;
    std::size_t line = 0, pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(" + ", pos);
        std::size_t next2 = s.find(" - ", pos);
        if (next == std::string::npos || (next2 != std::string::npos && next2 < next))
            next = next2;
        const std::string piece =
            s.substr(pos, next == std::string::npos ? std::string::npos : next - pos + 3);
        if (line > 0 && line + piece.size() > width) {
            out += "\n  ";
            line = 2;
        }
        out += piece;
        line += piece.size();
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    return out;
}

void emit_tensor(const CommonOpts &o, const TruncatedTensor &t) {
    if (o.format == "pretty")
        std::cout << wrapped(t.pretty()) << "\n";
    else
        std::cout << tensor_to_json(t).dump(2) << "\n";
}

int run(int argc, char **argv) {
    CLI::App app{"exact computations in the completed Goldman Lie algebra of a surface with boundary"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string word_text, loop_text, curve_tag = "a1", twist_tags, spec_path;
    std::vector<std::string> loop_pair;
    std::string z_text = "1";

    auto *expand = app.add_subcommand("expand", "evaluate an expansion on a word");
    add_common(expand, o);
    expand->add_option("--word", word_text, "word, e.g. 'a1 b1 a1^-1'")->required();

    auto *sympexp = app.add_subcommand("symp-exp", "construct a symplectic expansion and dump it");
    add_common(sympexp, o, false);

    auto *bracket = app.add_subcommand("bracket", "Goldman bracket of two free loops (lambda image)");
    add_common(bracket, o, false);
    bracket->add_option("--loop", loop_pair, "loop word (give twice)")
        ->required()
        ->expected(2);

    auto *sigma = app.add_subcommand("sigma", "sigma action of a loop on a based word");
    add_common(sigma, o, false);
    sigma->add_option("--loop", loop_text, "acting loop word")->required();
    sigma->add_option("--word", word_text, "based word acted on")->required();

    auto *twist = app.add_subcommand("twist", "generalized Dehn twist applied to theta(word)");
    add_common(twist, o, false);
    twist->add_option("--curve", curve_tag, "curve tag: a1 | b1 | zeta | sep<h>");
    twist->add_option("--word", word_text, "word whose image is twisted")->required();
    twist->add_option("--z", z_text, "twist scale (rational)");

    auto *fig8 = app.add_subcommand("fig8", "figure-eight realizability obstruction report");
    fig8->add_option("--z", z_text, "scale z (rational)");
    fig8->add_option("--trunc", o.trunc, "truncation (>= 3)");
    fig8->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "pretty"}));

    auto *johnson = app.add_subcommand("johnson", "truncated Johnson homomorphism of a twist word");
    add_common(johnson, o, false);
    johnson->add_option("--twists", twist_tags,
                        "space-separated separating twist tags, e.g. 'sep1 zeta'")
        ->required();

    auto *sacdemo = app.add_subcommand("sac-demo", "annulus computation over a groupoid spec file");
    sacdemo->add_option("--spec", spec_path, "groupoid spec JSON")->required();
    sacdemo->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "pretty"}));

    CLI11_PARSE(app, argc, argv);

    if (expand->parsed()) {
        const Expansion theta = make_expansion(o);
        emit_tensor(o, theta.evaluate(parse_word(theta.gens(), word_text)));
    } else if (sympexp->parsed()) {
        o.expansion = "symp";
        std::cout << expansion_to_json(make_expansion(o)).dump(2) << "\n";
    } else if (bracket->parsed()) {
        o.expansion = "symp";
        const Expansion theta = make_expansion(o);
        const GoldmanElement u =
            GoldmanElement::of_loop(FreeLoop(parse_word(theta.gens(), loop_pair[0])));
        const GoldmanElement v =
            GoldmanElement::of_loop(FreeLoop(parse_word(theta.gens(), loop_pair[1])));
        emit_tensor(o, goldman_bracket(u, v, theta));
    } else if (sigma->parsed()) {
        o.expansion = "symp";
        const Expansion theta = make_expansion(o);
        const GoldmanElement u =
            GoldmanElement::of_loop(FreeLoop(parse_word(theta.gens(), loop_text)));
        const GroupRingElement v =
            GroupRingElement::of_word(parse_word(theta.gens(), word_text));
        emit_tensor(o, sigma_action(u, v, theta));
    } else if (twist->parsed()) {
        o.expansion = "symp";
        const Expansion theta = make_expansion(o);
        const ClassicalCurve c = ClassicalCurve::parse(curve_tag);
        const FreeLoop loop(classical_curve_word(c, theta.gens(), o.genus));
        const TwistOperator op(loop, theta, rat_parse(z_text));
        emit_tensor(o, op.apply(theta.evaluate(parse_word(theta.gens(), word_text))));
    } else if (fig8->parsed()) {
        const FigureEightReport rep = figure_eight_obstruction(rat_parse(z_text), o.trunc);
        if (o.format == "pretty") {
            std::cout << "z = " << rat_str(rep.z) << ", b = " << rat_str(rep.b)
                      << ", c = " << rat_str(rep.c) << "\n"
                      << "degree-2 residual: " << rep.residual2.pretty() << "\n"
                      << "degree-3 residual: " << rat_str(rep.obstruction_coef)
                      << "*[Y,[Y,X]] = " << rep.residual3.pretty() << "\n";
        } else {
            std::cout << fig8_report_to_json(rep).dump(2) << "\n";
        }
    } else if (johnson->parsed()) {
        o.expansion = "symp";
        const Expansion theta = make_expansion(o);
        MappingClassAction phi = MappingClassAction::identity(theta.gens());
        std::istringstream tags(twist_tags);
        std::string tag;
        while (tags >> tag) {
            const ClassicalCurve c = ClassicalCurve::parse(tag);
            phi = phi.after(MappingClassAction::of_twist(c, theta.gens(), o.genus));
        }
        const TruncatedTensor tau = johnson_tau(phi, theta);
        const LieMembership mem = lie_membership(tau);
        Json j;
        j["tau"] = tensor_to_json(tau);
        j["lowest_degree"] = tau.lowest_degree();
        j["in_lg_plus"] = mem.in_lg_plus;
        if (o.format == "pretty")
            std::cout << "tau = " << tau.pretty() << "\nlowest degree "
                      << tau.lowest_degree() << ", l_g^+ membership "
                      << (mem.in_lg_plus ? "yes" : "no") << "\n";
        else
            std::cout << j.dump(2) << "\n";
    } else if (sacdemo->parsed()) {
        const GroupoidSpec spec = groupoid_spec_from_file(spec_path);
        if (spec.object_count() < 2 || spec.loop_basis->rank() < 1)
            throw ConfigError("sac-demo needs at least one arc and one loop");
        // D(d1) = (log x) d1, D(x) = 0; exp(D)(d1) must be x d1.
        SacDerivation d = sac_zero_derivation(spec);
        d.arc_values[0] = log_t(spec.embed(GroupWord::generator(spec.loops, 0)));
        const SacMorphism arc = sac_arc(spec, 1);
        const SacMorphism image = sac_exp_apply(spec, d, arc);
        const SacMorphism expected =
            sac_compose(spec, sac_loop(spec, GroupWord::generator(spec.loops, 0)), arc);
        Json j;
        j["arc"] = spec.arc_names[0];
        j["derivation_value"] = tensor_to_json(d.arc_values[0]);
        j["exp_image_payload"] = tensor_to_json(image.payload);
        j["matches_loop_times_arc"] = (image == expected);
        if (o.format == "pretty")
            std::cout << "exp(D)(" << spec.arc_names[0]
                      << ") payload = " << image.payload.pretty() << "\nmatches "
                      << (image == expected ? "yes" : "no") << "\n";
        else
            std::cout << j.dump(2) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError &e) {
        std::cerr << "unsupported configuration: " << e.what() << "\n";
        return 3;
    } catch (const DomainError &e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 4;
    } catch (const ConvergenceError &e) {
        std::cerr << "convergence check failed: " << e.what() << "\n";
        return 4;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
