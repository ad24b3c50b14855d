#include "loopalg/sac.hpp"
#include "loopalg/goldman.hpp"
#include "loopalg/linalg.hpp"

namespace loopalg {

namespace {
constexpr int kSeriesCap = 512;
}

GroupoidSpec GroupoidSpec::make(std::vector<std::string> objects,
                                std::vector<std::string> arc_names,
                                std::vector<std::string> loop_names, int trunc) {
    if (objects.empty()) throw ConfigError("groupoid needs at least one object");
    if (arc_names.size() + 1 != objects.size())
        throw ConfigError("groupoid needs exactly one tree arc per non-base object");
    GroupoidSpec s;
    s.objects = std::move(objects);
    s.arc_names = std::move(arc_names);
    s.loops = GenSet::named(loop_names);
    s.loop_basis = Homology::free_basis(std::move(loop_names));
    s.trunc = trunc;
    return s;
}

int GroupoidSpec::object_index(const std::string &name) const {
    for (int i = 0; i < object_count(); ++i)
        if (objects[i] == name) return i;
    throw ConfigError("unknown object '" + name + "'");
}

TruncatedTensor GroupoidSpec::embed(const GroupWord &w) const {
    TruncatedTensor acc = TruncatedTensor::unit(loop_basis, trunc);
    for (std::size_t i = 0; i < w.length(); ++i) {
        const int s = w.symbol(i);
        TruncatedTensor l = TruncatedTensor::letter(loop_basis, trunc, std::abs(s) - 1);
        if (s < 0) l *= Rat(-1);
        acc = mul(acc, exp_t(l));
    }
    return acc;
}

TruncatedTensor GroupoidSpec::embed(const GroupRingElement &payload) const {
    TruncatedTensor acc(loop_basis, trunc);
    for (const auto &[w, c] : payload.terms()) {
        TruncatedTensor t = embed(w);
        t *= c;
        acc += t;
    }
    return acc;
}

SacMorphism sac_identity(const GroupoidSpec &spec, int obj) {
    return {obj, obj, TruncatedTensor::unit(spec.loop_basis, spec.trunc)};
}

SacMorphism sac_arc(const GroupoidSpec &spec, int j, int sign) {
    if (j < 1 || j >= spec.object_count()) throw ConfigError("arc index out of range");
    SacMorphism m;
    m.payload = TruncatedTensor::unit(spec.loop_basis, spec.trunc);
    if (sign >= 0) { m.src = 0; m.tgt = j; }
    else { m.src = j; m.tgt = 0; }
    return m;
}

SacMorphism sac_loop(const GroupoidSpec &spec, const GroupWord &w) {
    return {0, 0, spec.embed(w)};
}

SacMorphism sac_of_ring(const GroupoidSpec &spec, int src, int tgt,
                        const GroupRingElement &payload) {
    return {src, tgt, spec.embed(payload)};
}

SacMorphism sac_compose(const GroupoidSpec &spec, const SacMorphism &u,
                        const SacMorphism &v) {
    (void)spec;
    if (u.tgt != v.src)
        throw ConfigError("composition needs target(u) = source(v)");
    return {u.src, v.tgt, mul(u.payload, v.payload)};
}

int sac_filtration_degree(const SacMorphism &u) { return u.payload.lowest_degree(); }

Rat sac_aug(const SacMorphism &u) { return u.payload.coef(0, 0); }

SacDerivation sac_zero_derivation(const GroupoidSpec &spec) {
    SacDerivation d;
    d.letter_values.assign(spec.loop_basis->rank(),
                           TruncatedTensor(spec.loop_basis, spec.trunc));
    d.arc_values.assign(spec.arc_names.size(),
                        TruncatedTensor(spec.loop_basis, spec.trunc));
    return d;
}

namespace {

Derivation loop_part(const GroupoidSpec &spec, const SacDerivation &d) {
    Derivation der(spec.loop_basis, spec.trunc);
    for (int i = 0; i < spec.loop_basis->rank(); ++i)
        der.set_value(i, d.letter_values.at(i));
    return der;
}

const TruncatedTensor &arc_value(const SacDerivation &d, int obj,
                                 TruncatedTensor &zero) {
    if (obj == 0) return zero;
    return d.arc_values.at(obj - 1);
}

} // namespace

SacMorphism sac_derive(const GroupoidSpec &spec, const SacDerivation &d,
                       const SacMorphism &u) {
    TruncatedTensor zero(spec.loop_basis, spec.trunc);
    const TruncatedTensor &vs = arc_value(d, u.src, zero);
    const TruncatedTensor &vt = arc_value(d, u.tgt, zero);
    TruncatedTensor payload = loop_part(spec, d).apply(u.payload);
    payload -= mul(vs, u.payload);
    payload += mul(u.payload, vt);
    return {u.src, u.tgt, payload};
}

void sac_check_exp_conditions(const GroupoidSpec &spec, const SacDerivation &d) {
    for (const auto &v : d.letter_values)
        if (v.coef(0, 0) != 0)
            throw ConvergenceError("exp(D): letter value has a degree-0 part");
    for (const auto &v : d.arc_values)
        if (v.coef(0, 0) != 0)
            throw ConvergenceError("exp(D): arc value has a degree-0 part");
    check_exp_conditions(loop_part(spec, d)); // nilpotence on gr_1
}

SacMorphism sac_exp_apply(const GroupoidSpec &spec, const SacDerivation &d,
                          const SacMorphism &u) {
    sac_check_exp_conditions(spec, d);
    SacMorphism acc = u;
    SacMorphism term = u;
    for (int k = 1; k <= kSeriesCap; ++k) {
        term = sac_derive(spec, d, term);
        term.payload *= Rat(1, k);
        if (term.payload.is_zero()) return acc;
        acc.payload += term.payload;
    }
    throw ConvergenceError("exp(D): series did not terminate at truncation");
}

SacMorphism sac_log_of_exp_apply(const GroupoidSpec &spec, const SacDerivation &d,
                                 const SacMorphism &u) {
    sac_check_exp_conditions(spec, d);
    // log(U)(u) = sum (-1)^{n-1}/n (U - id)^n (u) with U = exp(D)
    SacMorphism acc{u.src, u.tgt, TruncatedTensor(spec.loop_basis, spec.trunc)};
    SacMorphism pw = u;
    for (int n = 1; n <= kSeriesCap; ++n) {
        SacMorphism next = sac_exp_apply(spec, d, pw);
        next.payload -= pw.payload; // (U - id) pw
        if (next.payload.is_zero()) return acc;
        TruncatedTensor t = next.payload;
        t *= Rat((n % 2) ? 1 : -1, n);
        acc.payload += t;
        pw = std::move(next);
    }
    throw ConvergenceError("log(U): series did not terminate at truncation");
}

AbelianMorphism abelianize(const GroupoidSpec &spec, const SacMorphism &u) {
    AbelianMorphism a;
    a.src = u.src;
    a.tgt = u.tgt;
    a.eps = u.payload.coef(0, 0);
    a.cls.assign(spec.loop_basis->rank(), Rat(0));
    const auto &blk = u.payload.block(1);
    for (std::size_t i = 0; i < blk.size(); ++i) a.cls[i] = blk[i];
    return a;
}

SigmaBarSquare::SigmaBarSquare(const GroupoidSpec &spec, const GroupWord &x,
                               std::vector<Rat> loop_pair, std::vector<Rat> arc_pair)
    : loop_pair_(std::move(loop_pair)), arc_pair_(std::move(arc_pair)) {
    if (loop_pair_.size() != static_cast<std::size_t>(spec.loop_basis->rank()) ||
        arc_pair_.size() != spec.arc_names.size())
        throw ConfigError("sigma-bar: one pairing value per generating morphism");
    x_cls_ = homology_class(x, spec.loop_basis);
}

AbelianMorphism SigmaBarSquare::apply(const AbelianMorphism &u) const {
    // (x . u) = <x, loop class> + eps ((x . d_tgt) - (x . d_src))
    Rat inter(0);
    for (std::size_t l = 0; l < loop_pair_.size(); ++l) inter += u.cls[l] * loop_pair_[l];
    if (u.tgt != 0) inter += u.eps * arc_pair_[u.tgt - 1];
    if (u.src != 0) inter -= u.eps * arc_pair_[u.src - 1];
    AbelianMorphism out;
    out.src = u.src;
    out.tgt = u.tgt;
    out.eps = 0;
    out.cls.assign(x_cls_.size(), Rat(0));
    for (std::size_t l = 0; l < x_cls_.size(); ++l)
        out.cls[l] = 2 * inter * x_cls_[l];
    return out;
}

} // namespace loopalg
