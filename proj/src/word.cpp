#include "loopalg/word.hpp"

#include <sstream>

namespace loopalg {

std::shared_ptr<const GenSet> GenSet::surface(int genus, int boundary) {
    if (genus < 0 || boundary < 1)
        throw ConfigError("surface generators need g >= 0, r >= 1");
    auto g = std::make_shared<GenSet>();
    for (int i = 1; i <= genus; ++i) {
        g->names.push_back("a" + std::to_string(i));
        g->names.push_back("b" + std::to_string(i));
    }
    for (int j = 2; j <= boundary; ++j)
        g->names.push_back("g" + std::to_string(j));
    return g;
}

std::shared_ptr<const GenSet> GenSet::named(std::vector<std::string> names) {
    auto g = std::make_shared<GenSet>();
    g->names = std::move(names);
    return g;
}

int GenSet::index(const std::string &name) const {
    for (int i = 0; i < size(); ++i)
        if (names[i] == name) return i;
    return -1;
}

GroupWord::GroupWord(GenSetRef gens, std::vector<int> raw_symbols)
    : gens_(std::move(gens)) {
    syms_.reserve(raw_symbols.size());
    for (int s : raw_symbols) {
        if (s == 0 || std::abs(s) > gens_->size())
            throw ParseError("symbol out of range");
        if (!syms_.empty() && syms_.back() == -s)
            syms_.pop_back();
        else
            syms_.push_back(s);
    }
}

GroupWord GroupWord::generator(GenSetRef gens, int index, int sign) {
    GroupWord w(std::move(gens));
    if (index < 0 || index >= w.gens_->size())
        throw ParseError("generator index out of range");
    w.syms_.push_back(sign >= 0 ? index + 1 : -(index + 1));
    return w;
}

GroupWord GroupWord::inverse() const {
    GroupWord w(gens_);
    w.syms_.reserve(syms_.size());
    for (auto it = syms_.rbegin(); it != syms_.rend(); ++it)
        w.syms_.push_back(-*it);
    return w;
}

GroupWord GroupWord::operator*(const GroupWord &o) const {
    std::vector<int> raw = syms_;
    raw.insert(raw.end(), o.syms_.begin(), o.syms_.end());
    return GroupWord(gens_ ? gens_ : o.gens_, std::move(raw));
}

GroupWord GroupWord::pow(int n) const {
    GroupWord base = (n >= 0) ? *this : inverse();
    GroupWord acc(gens_);
    for (int i = 0; i < std::abs(n); ++i) acc = acc * base;
    return acc;
}

bool GroupWord::operator<(const GroupWord &o) const {
    if (syms_.size() != o.syms_.size()) return syms_.size() < o.syms_.size();
    return syms_ < o.syms_;
}

GroupWord word_commutator(const GroupWord &u, const GroupWord &v) {
    return u * v * u.inverse() * v.inverse();
}

GroupWord parse_word(const GenSetRef &gens, const std::string &text) {
    std::istringstream in(text);
    std::vector<int> raw;
    std::string tok;
    while (in >> tok) {
        std::string name = tok;
        int exponent = 1;
        if (auto pos = tok.find('^'); pos != std::string::npos) {
            name = tok.substr(0, pos);
            const std::string e = tok.substr(pos + 1);
            try {
                std::size_t used = 0;
                exponent = std::stoi(e, &used);
                if (used != e.size()) throw std::invalid_argument(e);
            } catch (const std::exception &) {
                throw ParseError("bad exponent in token '" + tok + "'");
            }
        }
        const int idx = gens->index(name);
        if (idx < 0) throw ParseError("unknown generator '" + name + "'");
        for (int i = 0; i < std::abs(exponent); ++i)
            raw.push_back(exponent >= 0 ? idx + 1 : -(idx + 1));
    }
    return GroupWord(gens, std::move(raw));
}

std::string print_word(const GroupWord &w) {
    if (w.is_identity()) return "";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i) os << ' ';
        const int s = w.symbol(i);
        os << w.gens()->names[std::abs(s) - 1];
        if (s < 0) os << "^-1";
    }
    return os.str();
}

GroupWord boundary_word(const GenSetRef &gens, int genus, int boundary, int j) {
    if (j < 1 || j > boundary) throw DomainError("boundary index out of range");
    auto gen = [&](int i) { return GroupWord::generator(gens, i); };
    GroupWord prod(gens); // [a1,b1]...[ag,bg]
    for (int i = 0; i < genus; ++i)
        prod = prod * word_commutator(gen(2 * i), gen(2 * i + 1));
    if (j >= 2) return gen(2 * genus + (j - 2));
    if (boundary == 1) return prod; // zeta
    // relation prod * g1 * g2...gr = 1  =>  g1 = prod^-1 (g2...gr)^-1
    GroupWord rest(gens);
    for (int k = 2; k <= boundary; ++k)
        rest = rest * gen(2 * genus + (k - 2));
    return prod.inverse() * rest.inverse();
}

GroupWord apply_endomorphism(const std::vector<GroupWord> &images, const GroupWord &w) {
    GroupWord out = w;
    std::vector<int> raw;
    for (std::size_t i = 0; i < w.length(); ++i) {
        const int s = w.symbol(i);
        const GroupWord &img = images.at(std::abs(s) - 1);
        if (s > 0)
            raw.insert(raw.end(), img.symbols().begin(), img.symbols().end());
        else {
            const GroupWord inv = img.inverse();
            raw.insert(raw.end(), inv.symbols().begin(), inv.symbols().end());
        }
    }
    return GroupWord(w.gens(), std::move(raw));
}

std::vector<Rat> homology_class(const GroupWord &w, const HomologyRef &h) {
    std::vector<Rat> cls(h->rank(), Rat(0));
    for (std::size_t i = 0; i < w.length(); ++i) {
        const int s = w.symbol(i);
        cls.at(std::abs(s) - 1) += (s > 0) ? 1 : -1;
    }
    return cls;
}

} // namespace loopalg
