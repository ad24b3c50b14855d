#include "loopalg/homology.hpp"

namespace loopalg {

std::shared_ptr<const Homology> Homology::of_surface(int genus, int boundary) {
    if (genus < 0 || boundary < 1)
        throw ConfigError("homology: need g >= 0, r >= 1");
    auto h = std::make_shared<Homology>();
    h->genus = genus;
    h->boundary = boundary;
    for (int i = 1; i <= genus; ++i) {
        h->labels_.push_back("A" + std::to_string(i));
        h->labels_.push_back("B" + std::to_string(i));
    }
    for (int j = 2; j <= boundary; ++j)
        h->labels_.push_back("C" + std::to_string(j));
    const int n = h->rank();
    h->pairing_.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < genus; ++i) {
        h->pairing_[2 * i][2 * i + 1] = 1;
        h->pairing_[2 * i + 1][2 * i] = -1;
    }
    h->nondegenerate_ = (boundary == 1 && genus > 0);
    return h;
}

std::shared_ptr<const Homology> Homology::free_basis(std::vector<std::string> labels) {
    auto h = std::make_shared<Homology>();
    h->labels_ = std::move(labels);
    return h;
}

int Homology::label_index(const std::string &name) const {
    for (int i = 0; i < rank(); ++i)
        if (labels_[i] == name) return i;
    return -1;
}

const Rat &Homology::pair(int x, int y) const {
    if (!has_pairing()) throw ConfigError("homology basis has no pairing");
    return pairing_.at(x).at(y);
}

} // namespace loopalg
