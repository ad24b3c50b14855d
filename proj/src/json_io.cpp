#include "loopalg/json_io.hpp"

#include <fstream>

namespace loopalg {

Json tensor_to_json(const TruncatedTensor &t) {
    Json j;
    j["rank"] = t.rank();
    j["trunc"] = t.trunc();
    Json terms = Json::array();
    std::vector<int> w;
    const int rank = t.rank();
    for (int m = 0; m <= t.trunc(); ++m) {
        const auto &blk = t.block(m);
        for (std::size_t i = 0; i < blk.size(); ++i) {
            if (blk[i] == 0) continue;
            w.assign(m, 0);
            std::size_t rest = i;
            for (int pos = m - 1; pos >= 0; --pos) {
                w[pos] = static_cast<int>(rest % rank);
                rest /= rank;
            }
            Json word = Json::array();
            for (int l : w) word.push_back(t.basis()->label(l));
            terms.push_back({{"word", word}, {"coef", rat_str(blk[i])}});
        }
    }
    j["terms"] = std::move(terms);
    return j;
}

TruncatedTensor tensor_from_json(const Json &j, const HomologyRef &basis) {
    TruncatedTensor t(basis, j.at("trunc").get<int>());
    if (j.at("rank").get<int>() != basis->rank())
        throw ConfigError("tensor rank does not match the basis");
    for (const auto &term : j.at("terms")) {
        const auto &word = term.at("word");
        const int m = static_cast<int>(word.size());
        if (m > t.trunc()) throw ParseError("tensor term beyond the truncation");
        std::size_t idx = 0;
        for (const auto &lab : word) {
            const int l = basis->label_index(lab.get<std::string>());
            if (l < 0) throw ParseError("unknown basis label '" + lab.get<std::string>() + "'");
            idx = idx * basis->rank() + static_cast<std::size_t>(l);
        }
        t.add_coef(m, idx, rat_parse(term.at("coef").get<std::string>()));
    }
    return t;
}

Json expansion_to_json(const Expansion &e) {
    Json j;
    j["genus"] = e.signature().genus;
    j["boundary"] = e.signature().boundary;
    j["trunc"] = e.trunc();
    switch (e.kind()) {
    case Expansion::Kind::exponential: j["kind"] = "exponential"; break;
    case Expansion::Kind::symplectic: j["kind"] = "symplectic"; break;
    case Expansion::Kind::curve_adapted: j["kind"] = "curve-adapted"; break;
    }
    Json gens = Json::object();
    for (int i = 0; i < e.gens()->size(); ++i)
        gens[e.gens()->names[i]] = tensor_to_json(e.image(i));
    j["generators"] = std::move(gens);
    return j;
}

Json fig8_report_to_json(const FigureEightReport &rep) {
    Json j;
    j["z"] = rat_str(rep.z);
    j["b"] = rat_str(rep.b);
    j["c"] = rat_str(rep.c);
    j["residual2"] = rep.residual2.is_zero() ? "0" : rep.residual2.pretty();
    j["residual3"] = rep.residual3.is_zero()
                         ? "0"
                         : rat_str(rep.obstruction_coef) + "*[Y,[Y,X]]";
    j["residual3_tensor"] = tensor_to_json(rep.residual3);
    return j;
}

GroupoidSpec groupoid_spec_from_json(const Json &j) {
    std::vector<std::string> objects, arc_names, loops;
    for (const auto &o : j.at("objects")) objects.push_back(o.get<std::string>());
    std::vector<std::string> arc_targets;
    for (const auto &a : j.at("arcs")) {
        arc_names.push_back(a.at("name").get<std::string>());
        arc_targets.push_back(a.at("target").get<std::string>());
    }
    for (const auto &l : j.at("loops")) loops.push_back(l.get<std::string>());
    GroupoidSpec spec = GroupoidSpec::make(objects, arc_names, loops,
                                           j.at("trunc").get<int>());
    // arcs must target the non-base objects in order (star-shaped tree)
    for (std::size_t i = 0; i < arc_targets.size(); ++i)
        if (spec.object_index(arc_targets[i]) != static_cast<int>(i) + 1)
            throw ConfigError("arc " + arc_names[i] + " must target object #" +
                              std::to_string(i + 1));
    return spec;
}

GroupoidSpec groupoid_spec_from_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open groupoid spec file '" + path + "'");
    Json j;
    in >> j;
    return groupoid_spec_from_json(j);
}

} // namespace loopalg
