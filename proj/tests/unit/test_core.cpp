#include "oracles.hpp"

#include <ramsey/degree_profile.hpp>
#include <ramsey/families.hpp>
#include <ramsey/text_io.hpp>

#include <doctest.h>

#include <sstream>

using namespace ramsey;

namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("hypergraph stores sorted edges and merges or counts duplicates")
{
    UniformHypergraph h{3, 5, {{2, 1, 0}, {4, 3, 2}, {0, 1, 2}}};
    CHECK(h.edge_count() == 2);
    CHECK(std::vector<Vertex>(h.edge(0).begin(), h.edge(0).end()) == std::vector<Vertex>{0, 1, 2});
    CHECK(h.degree(2) == 2);
    CHECK(h.find_edge(std::vector<Vertex>{2, 3, 4}) == 1);
    CHECK(h.find_edge(std::vector<Vertex>{1, 3, 4}) == -1);

    UniformHypergraph m{3, 5, {{2, 1, 0}, {4, 3, 2}, {0, 1, 2}}, UniformHypergraph::Duplicates::count};
    CHECK(m.edge_count() == 2);
    CHECK(m.multiplicity(0) == 2);
    CHECK(m.total_weight() == 3);
}

TEST_CASE("hypergraph rejects malformed edges")
{
    CHECK_THROWS_AS(UniformHypergraph(3, 4, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(UniformHypergraph(3, 4, {{0, 1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(UniformHypergraph(3, 4, {{0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(UniformHypergraph(1, 4, {}), std::invalid_argument);
}

TEST_CASE("induced subhypergraph and components")
{
    UniformHypergraph h{3, 7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {0, 3, 6}}};
    std::vector<Vertex> w{0, 1, 2, 3, 4};
    auto sub = induced(h, w);
    CHECK(sub.hypergraph.edge_count() == 2);
    CHECK(sub.original == w);
    CHECK(is_connected_within(h, w));
    std::vector<Vertex> split{0, 1, 2, 5};
    CHECK_FALSE(is_connected_within(h, split));
    auto comps = connected_components(induced(h, split).hypergraph);
    CHECK(comps.size() == 2);
}

TEST_CASE("graph atlas")
{
    CHECK(atlas::petersen().edge_count() == 15);
    for (Vertex v = 0; v < 10; ++v)
        CHECK(atlas::petersen().degree(v) == 3);
    CHECK(graph_from_spec("complete-bipartite:2,3").edge_count() == 6);
    CHECK(graph_from_spec("cycle:5") == atlas::cycle(5));
    CHECK_THROWS(graph_from_spec("wheel:5"));
    CHECK_THROWS(graph_from_spec("complete:x"));
}

TEST_CASE("pair index is a bijection onto the edges of K_n")
{
    const Vertex n = 9;
    auto k = atlas::complete(n);
    for (std::size_t i = 0; i < k.edge_count(); ++i) {
        auto [a, b] = k.edge(i);
        CHECK(pair_index(n, a, b) == i);
        CHECK(pair_index(n, b, a) == i);
        CHECK(pair_from_index(n, i) == k.edge(i));
    }
}

TEST_CASE("copies hypergraph edge counts")
{
    for (Vertex n = 3; n <= 8; ++n) {
        auto h = build_copies_hypergraph(atlas::complete(3), n);
        CHECK(h.uniformity() == 3);
        CHECK(h.vertex_count() == static_cast<Vertex>(choose(n, 2)));
        CHECK(h.edge_count() == choose(n, 3));
    }
    for (Vertex n = 4; n <= 7; ++n) {
        CHECK(build_copies_hypergraph(atlas::cycle(4), n).edge_count() == 3 * choose(n, 4));
        CHECK(build_copies_hypergraph(atlas::path(3), n).edge_count() == n * choose(n - 1, 2));
        CHECK(build_copies_hypergraph(atlas::complete(4), n).edge_count() == choose(n, 4));
    }
    // Each edge of copies(K_3, n) is a triangle of K_n.
    auto h = build_copies_hypergraph(atlas::complete(3), 6);
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        std::set<Vertex> touched;
        for (auto idx : h.edge(e)) {
            auto [a, b] = pair_from_index(6, static_cast<std::size_t>(idx));
            touched.insert(a);
            touched.insert(b);
        }
        CHECK(touched.size() == 3);
    }
}

TEST_CASE("copies hypergraph argument checks")
{
    CHECK_THROWS_AS(build_copies_hypergraph(Graph{3, {}}, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_copies_hypergraph(atlas::path(2), 5), std::invalid_argument);
    CHECK_THROWS_AS(build_copies_hypergraph(atlas::complete(4), 3), std::invalid_argument);
}

TEST_CASE("k-AP and Schur hypergraphs match direct enumeration")
{
    for (Vertex n : {7, 10, 11, 12, 13}) {
        std::set<std::vector<Vertex>> aps, sums;
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = x + 1; y < n; ++y)
                for (Vertex z = y + 1; z < n; ++z) {
                    auto has_mid = [&](Vertex a, Vertex m, Vertex b) { return (a + b) % n == (2 * m) % n; };
                    if (has_mid(x, y, z) || has_mid(y, x, z) || has_mid(x, z, y))
                        aps.insert({x, y, z});
                    auto sum = [&](Vertex a, Vertex b, Vertex c) { return (a + b) % n == c; };
                    if (sum(x, y, z) || sum(x, z, y) || sum(y, z, x))
                        sums.insert({x, y, z});
                }
        auto kap = build_kap_hypergraph(3, n);
        auto schur = build_schur_hypergraph(n);
        CHECK(kap.edge_count() == aps.size());
        CHECK(schur.edge_count() == sums.size());
        for (std::size_t e = 0; e < kap.edge_count(); ++e)
            CHECK(aps.count({kap.edge(e).begin(), kap.edge(e).end()}) == 1);
        for (std::size_t e = 0; e < schur.edge_count(); ++e)
            CHECK(sums.count({schur.edge(e).begin(), schur.edge(e).end()}) == 1);
    }
    // Prime modulus: N(N-1)/2 three-term progressions.
    CHECK(build_kap_hypergraph(3, 13).edge_count() == 13 * 12 / 2);
    CHECK_THROWS(build_kap_hypergraph(2, 10));
    CHECK_THROWS(build_kap_hypergraph(4, 4));
    CHECK_THROWS(build_schur_hypergraph(4));
}

TEST_CASE("Schur hypergraph without zero relabels residues")
{
    auto full = build_schur_hypergraph(11);
    auto shifted = build_schur_hypergraph(11, true);
    CHECK(shifted.vertex_count() == 10);
    std::size_t avoiding_zero = 0;
    for (std::size_t e = 0; e < full.edge_count(); ++e)
        if (full.edge(e)[0] != 0) {
            ++avoiding_zero;
            std::vector<Vertex> moved;
            for (auto v : full.edge(e))
                moved.push_back(v - 1);
            CHECK(shifted.find_edge(moved) >= 0);
        }
    CHECK(shifted.edge_count() == avoiding_zero);
}

TEST_CASE("degree profile against t-set enumeration")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 20; ++round) {
        int s = 3 + round % 2;
        Vertex n = 8;
        auto h = oracle::random_hypergraph(rng, s, n, 6 + round);
        auto profile = degree_profile(h);
        std::vector<Vertex> all(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            all[v] = v;
        for (int t = 1; t <= s; ++t) {
            std::uint64_t best = 0, occupied = 0;
            double squares = 0;
            for (const auto & set : oracle::subsets(all, static_cast<std::size_t>(t))) {
                std::uint64_t d = 0;
                for (std::size_t e = 0; e < h.edge_count(); ++e)
                    d += std::includes(h.edge(e).begin(), h.edge(e).end(), set.begin(), set.end());
                best = std::max(best, d);
                occupied += d > 0;
                squares += static_cast<double>(d * d);
            }
            CHECK(profile.max_degree[t] == best);
            CHECK(profile.occupied[t] == occupied);
            CHECK(profile.sum_squares[t] == doctest::Approx(squares));
            CHECK(max_t_degree(h, t) == best);
        }
        CHECK(profile.max_degree[s] == 1);
        CHECK(profile.p_h == doctest::Approx(std::pow(double(n) / double(h.edge_count()), 1.0 / (s - 1))));
    }
    CHECK_THROWS(degree_profile(UniformHypergraph{3, 4, {}}));
}

TEST_CASE("trim by degree removes m edges and never raises the degree")
{
    std::mt19937_64 rng(11);
    for (int round = 0; round < 10; ++round) {
        auto h = oracle::random_hypergraph(rng, 3, 9, 20);
        auto e = h.edge_count();
        for (std::uint64_t m : {0ull, 1ull, 5ull, static_cast<unsigned long long>(e)}) {
            auto trimmed = trim_by_degree(h, 2, m);
            CHECK(trimmed.edge_count() == e - std::min<std::uint64_t>(m, e));
            if (!trimmed.empty())
                CHECK(max_t_degree(trimmed, 2) <= max_t_degree(h, 2));
            for (std::size_t i = 0; i < trimmed.edge_count(); ++i)
                CHECK(h.find_edge(trimmed.edge(i)) >= 0);
        }
        CHECK(trim_by_degree(h, 2, e + 3).empty());
    }
}

TEST_CASE("text formats round-trip")
{
    auto g = atlas::petersen();
    std::stringstream gs;
    write_graph(gs, g);
    CHECK(read_graph(gs) == g);

    auto h = build_schur_hypergraph(9);
    std::stringstream hs;
    write_hypergraph(hs, h);
    CHECK(read_hypergraph(hs) == h);
}

TEST_CASE("malformed files report the offending line")
{
    auto line_of = [](const std::string & text, bool hyper) -> std::size_t {
        std::istringstream in(text);
        try {
            if (hyper)
                read_hypergraph(in);
            else
                read_graph(in);
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("# comment\n3 2\n0 1\n1 x\n", false) == 4);
    CHECK(line_of("3 2\n0 1\n1 3\n", false) == 3);
    CHECK(line_of("3 2\n0 1\n\n1 1\n", false) == 4);
    CHECK(line_of("3 2\n0 1\n", false) > 0);
    CHECK(line_of("3 5 1\n0 1\n", true) == 2);
    CHECK(line_of("3 5 1\n0 1 7\n", true) == 2);
    CHECK(line_of("3 5\n", true) == 1);
}
