#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loopalg/json_io.hpp"
#include "test_util.hpp"

using namespace loopalg;
using testutil::random_sparse;

TEST_CASE("tensor serialization round-trips and is canonical") {
    auto h = Homology::of_surface(1, 1);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto t = random_sparse(h, 4, rng, 10);
        const Json j = tensor_to_json(t);
        CHECK(tensor_from_json(j, h) == t);
        // canonical ordering: degree first, then lexicographic word
        std::vector<std::vector<std::string>> words;
        for (const auto &term : j["terms"]) {
            std::vector<std::string> w;
            for (const auto &l : term["word"]) w.push_back(l.get<std::string>());
            words.push_back(std::move(w));
        }
        for (std::size_t i = 1; i < words.size(); ++i) {
            const bool ordered =
                words[i - 1].size() < words[i].size() ||
                (words[i - 1].size() == words[i].size() && words[i - 1] <= words[i]);
            CHECK(ordered);
        }
        // deterministic bytes
        CHECK(tensor_to_json(t).dump() == j.dump());
    }
}

TEST_CASE("serialization rejects foreign labels and wrong ranks") {
    auto h = Homology::of_surface(1, 1);
    auto h2 = Homology::free_basis({"X", "Y", "Z"});
    const auto t = TruncatedTensor::letter(h, 3, 0);
    const Json j = tensor_to_json(t);
    CHECK_THROWS_AS((void)tensor_from_json(j, h2), ConfigError);
    Json bad = j;
    bad["terms"][0]["word"][0] = "Q7";
    CHECK_THROWS_AS((void)tensor_from_json(bad, h), ParseError);
}

TEST_CASE("coefficient strings are decimal-free rationals") {
    auto h = Homology::of_surface(1, 1);
    TruncatedTensor t(h, 2);
    t.add_coef(1, 0, Rat(-7, 2));
    const Json j = tensor_to_json(t);
    CHECK(j["terms"][0]["coef"] == "-7/2");
    CHECK(rat_parse("-7/2") == Rat(-7, 2));
    CHECK_THROWS_AS((void)rat_parse("0.5"), ParseError);
    CHECK_THROWS_AS((void)rat_parse("1/0"), ParseError);
}

TEST_CASE("expansion dump has one group-like table entry per generator") {
    const Expansion theta = symplectic_expansion(SurfaceSignature(1, 1, 3));
    const Json j = expansion_to_json(theta);
    CHECK(j["kind"] == "symplectic");
    CHECK(j["generators"].size() == 2);
    CHECK(tensor_from_json(j["generators"]["a1"], theta.homology()) == theta.image(0));
}

TEST_CASE("coproduct respects the filtration") {
    // Delta F_n lands in total degree >= n
    auto h = Homology::of_surface(1, 1);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        const auto t = random_sparse(h, 4, rng, 6, 2);
        const auto d = coproduct(t);
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; a + b <= 4; ++b) {
                if (a + b >= 2) continue;
                for (const auto &c : d.block(a, b)) CHECK(c == 0);
            }
    }
}

TEST_CASE("pretty printing") {
    auto h = Homology::of_surface(1, 1);
    TruncatedTensor t(h, 2);
    CHECK(t.pretty() == "0");
    t.add_coef(0, 0, Rat(1));
    t.add_coef(1, 1, Rat(-1));
    t.add_coef(2, 0, Rat(1, 2));
    CHECK(t.pretty() == "1 - B1 + 1/2*A1A1");
}
