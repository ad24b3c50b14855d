#include "loopalg/expansion.hpp"

namespace loopalg {

namespace {

// Left-normed bracketing [[...[[X_{w_0}, X_{w_1}], X_{w_2}], ...], X_{w_last}].
TruncatedTensor left_normed(const HomologyRef &h, int trunc, const std::vector<int> &w) {
    TruncatedTensor t = TruncatedTensor::letter(h, trunc, w.at(0));
    for (std::size_t i = 1; i < w.size(); ++i)
        t = commutator(t, TruncatedTensor::letter(h, trunc, w[i]));
    return t;
}

// For homogeneous Lie-like delta of degree p, produce u_X per letter with
// delta = sum_X [u_X, X]. By Dynkin-Specht-Wever the left-normed bracketing
// of delta's own coefficients returns p * delta, and grouping the words by
// their last letter splits it into the required shape.
std::vector<TruncatedTensor> bracket_section(const TruncatedTensor &delta, int p) {
    const int rank = delta.rank();
    const auto &h = delta.basis();
    std::vector<TruncatedTensor> u(rank, TruncatedTensor(h, delta.trunc()));
    const auto &blk = delta.block(p);
    if (blk.empty() || p < 2) return u;
    const Rat inv_p(1, p);
    std::vector<int> w(p);
    for (std::size_t idx = 0; idx < blk.size(); ++idx) {
        if (blk[idx] == 0) continue;
        std::size_t rest = idx;
        for (int i = p - 1; i >= 0; --i) {
            w[i] = static_cast<int>(rest % rank);
            rest /= rank;
        }
        const int last = w[p - 1];
        std::vector<int> prefix(w.begin(), w.end() - 1);
        TruncatedTensor t = left_normed(h, delta.trunc(), prefix);
        t *= blk[idx] * inv_p;
        u[last] += t;
    }
    return u;
}

} // namespace

void Expansion::finish_from_logs() {
    img_deep_.clear();
    inv_deep_.clear();
    logimg_.clear();
    img_.clear();
    inv_.clear();
    for (const auto &l : logimg_deep_) {
        img_deep_.push_back(exp_t(l));
        inv_deep_.push_back(exp_t(-l));
        logimg_.push_back(l.truncated(trunc()));
        img_.push_back(img_deep_.back().truncated(trunc()));
        inv_.push_back(inv_deep_.back().truncated(trunc()));
    }
}

TruncatedTensor Expansion::evaluate_with(const std::vector<TruncatedTensor> &img,
                                         const std::vector<TruncatedTensor> &inv,
                                         const GroupWord &w) const {
    TruncatedTensor acc =
        TruncatedTensor::unit(homology_, img.empty() ? trunc() : img[0].trunc());
    for (std::size_t i = 0; i < w.length(); ++i) {
        const int s = w.symbol(i);
        acc = mul(acc, s > 0 ? img[s - 1] : inv[-s - 1]);
    }
    return acc;
}

TruncatedTensor Expansion::evaluate(const GroupWord &w) const {
    return evaluate_with(img_, inv_, w);
}

TruncatedTensor Expansion::evaluate_at_depth(const GroupWord &w) const {
    return evaluate_with(img_deep_, inv_deep_, w);
}

TruncatedTensor Expansion::evaluate(const GroupRingElement &u) const {
    TruncatedTensor acc(homology_, trunc());
    for (const auto &[w, c] : u.terms()) {
        TruncatedTensor t = evaluate(w);
        t *= c;
        acc += t;
    }
    return acc;
}

TruncatedTensor Expansion::evaluate_at_depth(const GroupRingElement &u) const {
    TruncatedTensor acc(homology_, depth());
    for (const auto &[w, c] : u.terms()) {
        TruncatedTensor t = evaluate_at_depth(w);
        t *= c;
        acc += t;
    }
    return acc;
}

Expansion exponential_expansion(const SurfaceSignature &sig) {
    Expansion e;
    e.sig_ = sig;
    e.kind_ = Expansion::Kind::exponential;
    e.gens_ = GenSet::surface(sig.genus, sig.boundary);
    e.homology_ = Homology::of_surface(sig.genus, sig.boundary);
    for (int i = 0; i < e.homology_->rank(); ++i)
        e.logimg_deep_.push_back(TruncatedTensor::letter(e.homology_, e.depth(), i));
    e.finish_from_logs();
    return e;
}

GroupWord curve_word(const GenSetRef &gens, const SurfaceSignature &sig,
                     const CurveCaseDescriptor &desc) {
    using Kind = CurveCaseDescriptor::Kind;
    auto gen = [&](int i) { return GroupWord::generator(gens, i); };
    switch (desc.kind) {
    case Kind::non_separating:
        if (sig.genus < 1) throw ConfigError("non-separating case needs g >= 1");
        return gen(0);
    case Kind::separating_nonnull: {
        if (sig.boundary < 2 || desc.k < 1 || desc.k > sig.boundary - 1 ||
            desc.h < 0 || desc.h > sig.genus)
            throw ConfigError("separating non-null case needs r >= 2, 1 <= k <= r-1, 0 <= h <= g");
        GroupWord w(gens);
        for (int j = desc.k + 1; j <= sig.boundary; ++j)
            w = w * gen(2 * sig.genus + (j - 2));
        for (int i = 0; i < desc.h; ++i)
            w = w * word_commutator(gen(2 * i), gen(2 * i + 1));
        return w;
    }
    case Kind::separating_null: {
        if (desc.h < 0 || desc.h > sig.genus)
            throw ConfigError("separating null case needs 0 <= h <= g");
        GroupWord w(gens);
        for (int i = 0; i < desc.h; ++i)
            w = w * word_commutator(gen(2 * i), gen(2 * i + 1));
        return w;
    }
    }
    throw ConfigError("unknown curve case");
}

// Shared engine: correct the log-images of a1..bh until
// log theta(prod_{i<=h} [a_i, b_i]) = sum_{i<=h} [A_i, B_i] through depth().
// A degree-(p-1) Lie-like shift a_i of log theta(a_i) (resp. b_i of
// log theta(b_i)) moves degree p of the product's log by exactly
// [a_i, B_i] + [A_i, b_i], so the bracket section removes the defect one
// degree at a time without touching lower degrees.
void Expansion::correct_commutator_product(Expansion &e, int h, const GroupWord &eta,
                                           const TruncatedTensor &target) {
    for (int p = 2; p <= e.depth(); ++p) {
        TruncatedTensor zl = log_t(e.evaluate_at_depth(eta));
        TruncatedTensor defect = (zl - target).degree_part(p);
        if (defect.is_zero()) continue;
        if (p == 2)
            throw ConvergenceError("degree-2 part of log theta(eta) must equal the target");
        auto u = bracket_section(defect, p);
        for (int i = 0; i < h; ++i) {
            e.logimg_deep_[2 * i] -= u[2 * i + 1]; // a_i gets -u_{B_i}
            e.logimg_deep_[2 * i + 1] += u[2 * i]; // b_i gets +u_{A_i}
        }
        e.finish_from_logs();
        if (!(log_t(e.evaluate_at_depth(eta)) - target).degree_part(p).is_zero())
            throw ConvergenceError("symplectic correction failed to cancel the defect");
    }
}

Expansion symplectic_expansion(const SurfaceSignature &sig) {
    if (sig.boundary != 1)
        throw ConfigError("symplectic expansions need r = 1");
    if (sig.trunc < 2) throw ConfigError("symplectic expansions need N >= 2");
    Expansion e = exponential_expansion(sig);
    e.kind_ = Expansion::Kind::symplectic;
    const GroupWord zeta = boundary_word(e.gens_, sig.genus, sig.boundary, 1);
    const TruncatedTensor omega = symplectic_form(e.homology_, e.depth());
    Expansion::correct_commutator_product(e, sig.genus, zeta, omega);
    return e;
}

Expansion curve_adapted_expansion(const SurfaceSignature &sig,
                                  const CurveCaseDescriptor &desc) {
    using Kind = CurveCaseDescriptor::Kind;
    Expansion e = exponential_expansion(sig);
    e.kind_ = Expansion::Kind::curve_adapted;
    e.case_ = desc;
    const GroupWord eta = curve_word(e.gens_, sig, desc);
    switch (desc.kind) {
    case Kind::non_separating:
        break; // theta(eta) = exp([eta]) already
    case Kind::separating_nonnull: {
        // Inductive correction on the last boundary generator: degree by
        // degree, subtract the defect of log theta(eta) from log theta(g_r).
        const int gr = 2 * sig.genus + (sig.boundary - 2);
        TruncatedTensor target(e.homology_, e.depth());
        for (int j = desc.k + 1; j <= sig.boundary; ++j)
            target += TruncatedTensor::letter(e.homology_, e.depth(),
                                              2 * sig.genus + (j - 2));
        for (int p = 2; p <= e.depth(); ++p) {
            TruncatedTensor defect =
                (log_t(e.evaluate_at_depth(eta)) - target).degree_part(p);
            if (defect.is_zero()) continue;
            e.logimg_deep_[gr] -= defect;
            e.finish_from_logs();
            if (!(log_t(e.evaluate_at_depth(eta)) - target).degree_part(p).is_zero())
                throw ConvergenceError("curve-adapted correction failed to cancel the defect");
        }
        break;
    }
    case Kind::separating_null: {
        TruncatedTensor target(e.homology_, e.depth());
        for (int i = 0; i < desc.h; ++i)
            target += commutator(TruncatedTensor::letter(e.homology_, e.depth(), 2 * i),
                                 TruncatedTensor::letter(e.homology_, e.depth(), 2 * i + 1));
        Expansion::correct_commutator_product(e, desc.h, eta, target);
        break;
    }
    }
    return e;
}

int filtration_degree(const GroupRingElement &u, const Expansion &theta) {
    return theta.evaluate(u).lowest_degree();
}

} // namespace loopalg
