#include "loopalg/twists.hpp"

#include <algorithm>

namespace loopalg {

TruncatedTensor f_of_loop(const std::vector<Rat> &coeffs, const FreeLoop &c,
                          const Expansion &theta) {
    if (coeffs.size() >= 1 && coeffs[0] != 0)
        throw DomainError("f(1) must vanish");
    if (coeffs.size() >= 2 && coeffs[1] != 0)
        throw DomainError("f'(1) must vanish");
    const TruncatedTensor tx = theta.evaluate(c.representative());
    TruncatedTensor v = tx;
    v -= TruncatedTensor::unit(theta.homology(), theta.trunc());
    TruncatedTensor acc(theta.homology(), theta.trunc());
    TruncatedTensor p = mul(v, v); // v^2
    for (std::size_t k = 2; k < coeffs.size() && static_cast<int>(k) <= theta.trunc(); ++k) {
        if (coeffs[k] != 0) {
            TruncatedTensor t = p;
            t *= coeffs[k];
            acc += t;
        }
        if (k + 1 < coeffs.size()) p = mul(p, v);
    }
    return cyclicize(acc);
}

TruncatedTensor L_of(const FreeLoop &c, const Expansion &theta) {
    const TruncatedTensor lg = log_t(theta.evaluate(c.representative()));
    TruncatedTensor sq = mul(lg, lg);
    sq *= Rat(1, 2);
    return cyclicize(sq);
}

TruncatedTensor L_of_at_depth(const FreeLoop &c, const Expansion &theta) {
    const TruncatedTensor lg = log_t(theta.evaluate_at_depth(c.representative()));
    TruncatedTensor sq = mul(lg, lg);
    sq *= Rat(1, 2);
    return cyclicize(sq);
}

TwistOperator::TwistOperator(const FreeLoop &c, const Expansion &theta, const Rat &z) {
    out_trunc_ = theta.trunc();
    TruncatedTensor lam = L_of_at_depth(c, theta);
    lam *= z;
    der_ = -tensor_to_derivation(lam);
    check_exp_conditions(der_);
    for (int g = 0; g < theta.homology()->rank(); ++g)
        gen_img_.push_back(
            exp_derivation_apply(der_, theta.image_at_depth(g)).truncated(out_trunc_));
}

TruncatedTensor TwistOperator::apply(const TruncatedTensor &t) const {
    return exp_derivation_apply(der_, t);
}

ClassicalCurve ClassicalCurve::parse(const std::string &tag) {
    ClassicalCurve c;
    if (tag == "a1") { c.kind = Kind::a1; return c; }
    if (tag == "b1") { c.kind = Kind::b1; return c; }
    if (tag == "zeta") { c.kind = Kind::boundary; return c; }
    if (tag.rfind("sep", 0) == 0) {
        c.kind = Kind::separating;
        try {
            c.h = std::stoi(tag.substr(3));
        } catch (const std::exception &) {
            throw ParseError("bad separating tag '" + tag + "'");
        }
        if (c.h < 1) throw ParseError("separating tag needs h >= 1");
        return c;
    }
    throw ParseError("unknown curve tag '" + tag + "'");
}

GroupWord classical_curve_word(const ClassicalCurve &c, const GenSetRef &gens, int genus) {
    auto gen = [&](int i) { return GroupWord::generator(gens, i); };
    switch (c.kind) {
    case ClassicalCurve::Kind::a1:
        if (genus < 1) throw ConfigError("a1 needs g >= 1");
        return gen(0);
    case ClassicalCurve::Kind::b1:
        if (genus < 1) throw ConfigError("b1 needs g >= 1");
        return gen(1);
    case ClassicalCurve::Kind::boundary:
        return boundary_word(gens, genus, 1, 1);
    case ClassicalCurve::Kind::separating: {
        if (c.h < 1 || c.h > genus) throw ConfigError("sep<h> needs 1 <= h <= g");
        GroupWord w(gens);
        for (int i = 0; i < c.h; ++i)
            w = w * word_commutator(gen(2 * i), gen(2 * i + 1));
        return w;
    }
    }
    throw ConfigError("unknown curve");
}

std::vector<GroupWord> classical_twist_images(const ClassicalCurve &c,
                                              const GenSetRef &gens, int genus) {
    auto gen = [&](int i) { return GroupWord::generator(gens, i); };
    std::vector<GroupWord> img;
    for (int i = 0; i < gens->size(); ++i) img.push_back(gen(i));
    switch (c.kind) {
    case ClassicalCurve::Kind::a1:
        img[1] = gen(1) * gen(0); // b1 -> b1 a1
        break;
    case ClassicalCurve::Kind::b1:
        img[0] = gen(0) * gen(1).inverse(); // a1 -> a1 b1^-1
        break;
    case ClassicalCurve::Kind::boundary: {
        const GroupWord zeta = boundary_word(gens, genus, 1, 1);
        for (int i = 0; i < gens->size(); ++i)
            img[i] = zeta.inverse() * gen(i) * zeta;
        break;
    }
    case ClassicalCurve::Kind::separating: {
        const GroupWord w = classical_curve_word(c, gens, genus);
        for (int i = 0; i < 2 * c.h; ++i)
            img[i] = w.inverse() * gen(i) * w;
        break;
    }
    }
    return img;
}

GroupWord classical_twist(const ClassicalCurve &c, const GenSetRef &gens, int genus,
                          const GroupWord &w) {
    return apply_endomorphism(classical_twist_images(c, gens, genus), w);
}

FigureEightReport figure_eight_obstruction(const Rat &z, int trunc) {
    if (trunc < 3) throw DomainError("figure-eight report needs N >= 3");
    const auto h = Homology::free_basis({"X", "Y"});
    const auto X = TruncatedTensor::letter(h, trunc, 0);
    const auto Y = TruncatedTensor::letter(h, trunc, 1);
    TruncatedTensor lhs = bch(X, -Y);
    lhs *= z;
    // degree-1 equation: (z + b + c) X + (-z + c) Y = 0
    FigureEightReport rep;
    rep.z = z;
    rep.c = -lhs.coef(1, 1);
    rep.b = -lhs.coef(1, 0) - rep.c;
    TruncatedTensor expr = lhs;
    {
        TruncatedTensor t = X;
        t *= rep.b;
        expr += t;
    }
    {
        TruncatedTensor t = bch(X, Y);
        t *= rep.c;
        expr += t;
    }
    rep.residual2 = expr.degree_part(2);
    rep.residual3 = expr.degree_part(3);
    // report the residual as a multiple of [Y,[Y,X]]
    const TruncatedTensor obstruction = commutator(Y, commutator(Y, X));
    rep.obstruction_coef = 0;
    for (std::size_t i = 0; i < rep.residual3.block(3).size(); ++i) {
        if (obstruction.coef(3, i) != 0) {
            rep.obstruction_coef = rep.residual3.coef(3, i) / obstruction.coef(3, i);
            break;
        }
    }
    TruncatedTensor check = obstruction;
    check *= rep.obstruction_coef;
    if (!(check == rep.residual3))
        throw ConvergenceError("degree-3 residual is not a multiple of [Y,[Y,X]]");
    return rep;
}

PairLogReport pair_logs(PairKind kind, const std::vector<FreeLoop> &loops,
                        const Expansion &theta) {
    const auto &h = theta.homology();
    auto hom = [&](const FreeLoop &l) { return homology_class(l.representative(), h); };
    switch (kind) {
    case PairKind::separating: {
        if (loops.size() != 1) throw DomainError("separating kind takes one loop");
        const auto cls = hom(loops[0]);
        for (const auto &c : cls)
            if (c != 0)
                throw DomainError("separating hypothesis fails: loop is not null-homologous");
        TruncatedTensor v = L_of(loops[0], theta);
        return {v, v.lowest_degree()};
    }
    case PairKind::bounding_pair: {
        if (loops.size() != 2) throw DomainError("bounding-pair kind takes two loops");
        const auto c1 = hom(loops[0]), c2 = hom(loops[1]);
        bool eq = true, neg = true;
        for (std::size_t i = 0; i < c1.size(); ++i) {
            eq = eq && c1[i] == c2[i];
            neg = neg && c1[i] == -c2[i];
        }
        if (!eq && !neg)
            throw DomainError("bounding-pair hypothesis fails: classes differ");
        TruncatedTensor v = L_of(loops[1], theta) - L_of(loops[0], theta);
        return {v, v.lowest_degree()};
    }
    case PairKind::simply_intersecting: {
        if (loops.size() != 2) throw DomainError("commutator kind takes two loops");
        const int N = theta.trunc();
        const TruncatedTensor l1 = L_of_at_depth(loops[0], theta);
        const TruncatedTensor l2 = L_of_at_depth(loops[1], theta);
        const Derivation d1 = tensor_to_derivation(l1);
        const Derivation d2 = tensor_to_derivation(l2);
        const TruncatedTensor br = derivation_to_tensor(derivation_bracket(d1, d2));
        if (br.lowest_degree() < 3)
            throw DomainError("bracket hypothesis fails: [L(C1),L(C2)] has lambda-degree " +
                              std::to_string(br.lowest_degree()) + " < 3");
        // sigma(P) = log(exp(s1) exp(s2) exp(-s1) exp(-s2)), s_i = sigma(L(C_i))
        const Derivation s1 = -d1, s2 = -d2;
        std::vector<TruncatedTensor> img;
        for (int x = 0; x < h->rank(); ++x) {
            TruncatedTensor t = TruncatedTensor::letter(h, N + 1, x);
            t = exp_derivation_apply(-s2, t);
            t = exp_derivation_apply(-s1, t);
            t = exp_derivation_apply(s2, t);
            t = exp_derivation_apply(s1, t);
            img.push_back(std::move(t));
        }
        const Derivation logu = log_automorphism(img, h);
        TruncatedTensor v = (-derivation_to_tensor(logu)).truncated(N);
        return {v, v.lowest_degree()};
    }
    }
    throw DomainError("unknown pair kind");
}

MappingClassAction MappingClassAction::identity(const GenSetRef &gens) {
    MappingClassAction a;
    for (int i = 0; i < gens->size(); ++i)
        a.images.push_back(GroupWord::generator(gens, i));
    return a;
}

MappingClassAction MappingClassAction::of_twist(const ClassicalCurve &c,
                                                const GenSetRef &gens, int genus,
                                                int power) {
    if (power < 0) throw DomainError("negative twist powers are not supported");
    MappingClassAction a = identity(gens);
    const auto img = classical_twist_images(c, gens, genus);
    for (int i = 0; i < power; ++i) a = MappingClassAction{img}.after(a);
    return a;
}

MappingClassAction MappingClassAction::after(const MappingClassAction &psi) const {
    MappingClassAction out;
    for (const auto &w : psi.images) out.images.push_back(apply(w));
    return out;
}

Derivation log_automorphism(const std::vector<TruncatedTensor> &letter_images,
                            const HomologyRef &basis) {
    if (static_cast<int>(letter_images.size()) != basis->rank())
        throw ConfigError("log_automorphism needs one image per letter");
    const int N = letter_images.empty() ? 1 : letter_images[0].trunc();
    Derivation d(basis, N);
    std::vector<TruncatedTensor> cur;
    for (int i = 0; i < basis->rank(); ++i) {
        const auto &u = letter_images[i];
        TruncatedTensor diff = u;
        diff -= TruncatedTensor::letter(basis, N, i);
        if (u.coef(0, 0) != 0 || diff.lowest_degree() < 2)
            throw ConvergenceError("log_automorphism: (U - id) must raise degree on generators");
        cur.push_back(std::move(diff));
    }
    std::vector<TruncatedTensor> acc = cur; // n = 1 term
    for (int n = 2; n <= N + 1; ++n) {
        bool all_zero = true;
        for (int i = 0; i < basis->rank(); ++i) {
            if (cur[i].is_zero()) continue;
            // (U - id) cur = substitute(cur) - cur
            TruncatedTensor next = substitute(cur[i], letter_images);
            next -= cur[i];
            cur[i] = std::move(next);
            if (!cur[i].is_zero()) {
                all_zero = false;
                TruncatedTensor t = cur[i];
                t *= Rat((n % 2) ? 1 : -1, n);
                acc[i] += t;
            }
        }
        if (all_zero) break;
    }
    for (int i = 0; i < basis->rank(); ++i) d.set_value(i, acc[i]);
    return d;
}

TruncatedTensor johnson_tau(const MappingClassAction &phi, const Expansion &theta) {
    if (theta.kind() != Expansion::Kind::symplectic)
        throw ConfigError("johnson_tau needs a symplectic expansion");
    return dehn_nielsen_log(phi, theta);
}

TruncatedTensor dehn_nielsen_log(const MappingClassAction &phi, const Expansion &theta) {
    const auto &h = theta.homology();
    const int rank = h->rank();
    if (static_cast<int>(phi.images.size()) != rank)
        throw ConfigError("mapping class action has the wrong number of images");
    for (int i = 0; i < rank; ++i) {
        const auto cls = homology_class(phi.images[i], h);
        for (int j = 0; j < rank; ++j)
            if (cls[j] != Rat(i == j ? 1 : 0))
                throw DomainError("non-Torelli action: homology image of generator " +
                                  std::to_string(i) + " moved");
    }
    const int N = theta.trunc();
    // U = theta . phi . theta^{-1}; solve for its letter images u_k from
    // U(theta(x_k)) = theta(phi(x_k)) and theta(x_k) = exp(X_k + lam_k):
    //   u_k = log T_k - U(lam_k).
    // Degree m of U(lam_k) only involves degrees < m of the letter images,
    // so one capped substitution pass per degree settles the fixpoint.
    std::vector<TruncatedTensor> logT, lam;
    for (int k = 0; k < rank; ++k) {
        logT.push_back(log_t(theta.evaluate(phi.images[k])));
        TruncatedTensor l = theta.log_image(k);
        l -= TruncatedTensor::letter(h, N, k);
        lam.push_back(std::move(l));
    }
    std::vector<TruncatedTensor> u = logT;
    for (int cap = 2; cap <= N; ++cap) {
        std::vector<TruncatedTensor> next;
        for (int k = 0; k < rank; ++k) {
            TruncatedTensor t = logT[k];
            t -= substitute(lam[k], u, cap);
            next.push_back(std::move(t));
        }
        u = std::move(next);
    }
    const Derivation d = log_automorphism(u, h);
    return -derivation_to_tensor(d);
}

} // namespace loopalg
