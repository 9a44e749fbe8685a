#include "oracles.hpp"

#include <ramsey/choosability.hpp>
#include <ramsey/clots.hpp>
#include <ramsey/families.hpp>
#include <ramsey/reveal.hpp>

#include <json.hpp>

#include <doctest.h>

#include <sstream>

using namespace ramsey;

namespace {

// Nucleus {0,1,2}; pairs 01, 02, 12 each completed by two private vertices.
UniformHypergraph clot_fixture()
{
    return UniformHypergraph{3, 9, {{0, 1, 3}, {0, 1, 4}, {0, 2, 5}, {0, 2, 6}, {1, 2, 7}, {1, 2, 8}}};
}

UniformHypergraph fano()
{
    return UniformHypergraph{3, 7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}};
}

std::vector<Vertex> range(Vertex n)
{
    std::vector<Vertex> v(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i)
        v[i] = i;
    return v;
}

// Nuclei by definition: every (s-1)-subset has two completions inside W outside A.
std::vector<std::vector<Vertex>> brute_nuclei(const UniformHypergraph & h, const std::vector<Vertex> & w)
{
    const int s = h.uniformity();
    std::vector<std::vector<Vertex>> out;
    for (const auto & a : oracle::subsets(w, static_cast<std::size_t>(2 * s - 3))) {
        bool ok = true;
        for (const auto & part : oracle::subsets(a, static_cast<std::size_t>(s - 1))) {
            int found = 0;
            for (auto v : w) {
                if (std::find(a.begin(), a.end(), v) != a.end())
                    continue;
                auto e = part;
                e.push_back(v);
                found += oracle::is_edge(h, e);
            }
            if (found < 2) {
                ok = false;
                break;
            }
        }
        if (ok)
            out.push_back(a);
    }
    return out;
}

} // namespace

TEST_CASE("reveal: two edges through one vertex open two layers")
{
    UniformHypergraph h{3, 5, {{0, 1, 2}, {2, 3, 4}}};
    auto trace = reveal_layers(h, range(5));
    CHECK(trace.depth() == 3);
    CHECK(count_degenerate(trace) == 0);
    CHECK(trace.layers.back() == range(5));
    CHECK(trace.layers[0] == std::vector<Vertex>{0});
    CHECK(trace.layers[1] == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("reveal: an edge meeting the set twice is degenerate")
{
    UniformHypergraph h{3, 4, {{0, 1, 2}, {1, 2, 3}}};
    auto trace = reveal_layers(h, range(4));
    CHECK(trace.depth() == 2);
    CHECK(count_degenerate(trace) == 1);
    CHECK(trace.degenerate[3]);
    CHECK_FALSE(trace.degenerate[0]);
    CHECK(count_degenerate_steps(trace) == 1);
}

TEST_CASE("reveal: single vertex")
{
    UniformHypergraph h{3, 4, {{0, 1, 2}}};
    std::vector<Vertex> one{3};
    auto trace = reveal_layers(h, one);
    CHECK(trace.depth() == 1);
    CHECK(trace.layers[0] == one);
    CHECK(count_degenerate(trace) == 0);
}

TEST_CASE("reveal rejects disconnected sets")
{
    UniformHypergraph h{3, 6, {{0, 1, 2}, {3, 4, 5}}};
    CHECK_THROWS_AS(reveal_layers(h, range(6)), std::invalid_argument);
    CHECK_THROWS_AS(reveal_layers(h, std::vector<Vertex>{}), std::invalid_argument);
}

TEST_CASE("reveal invariants on random connected sets")
{
    std::mt19937_64 rng(61);
    int traces = 0;
    for (int round = 0; round < 80; ++round) {
        int s = 3 + round % 2;
        auto h = oracle::random_hypergraph(rng, s, 9, 5 + round % 8);
        for (const auto & set : connected_vertex_sets(h, 9)) {
            auto trace = reveal_layers(h, set);
            ++traces;
            CHECK(trace.layers.back() == set);
            for (std::size_t i = 1; i < trace.layers.size(); ++i)
                CHECK(std::includes(trace.layers[i].begin(), trace.layers[i].end(), trace.layers[i - 1].begin(),
                    trace.layers[i - 1].end()));
            const int degenerate = count_degenerate(trace);
            CHECK(degenerate == expected_degenerate(trace));
            if (degenerate >= s - 1)
                CHECK(trace.depth() * (s - 1) <= static_cast<int>(set.size()) - 1);
            CHECK(reveal_layers(h, set).steps.size() == trace.steps.size());

            // Halting at the (s-1)-th degenerate vertex leaves a connected prefix.
            auto prefix = halted_prefix(trace, s - 1);
            if (degenerate >= s - 1) {
                REQUIRE_FALSE(prefix.empty());
                CHECK(is_connected_within(h, prefix));
                auto again = reveal_layers(h, prefix);
                CHECK(count_degenerate(again) >= s - 1);
                CHECK(count_degenerate_steps(again) <= s - 1);
            }
            else
                CHECK(prefix.empty());
        }
    }
    CHECK(traces > 100);
}

TEST_CASE("reveal trace dump is one JSON object per step and deterministic")
{
    UniformHypergraph h{3, 4, {{0, 1, 2}, {1, 2, 3}}};
    auto trace = reveal_layers(h, range(4));
    std::ostringstream a, b;
    write_trace_jsonl(a, trace);
    write_trace_jsonl(b, reveal_layers(h, range(4)));
    CHECK(a.str() == b.str());
    std::istringstream lines(a.str());
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j.contains("step"));
        CHECK(j.contains("kind"));
        CHECK(j.contains("edge"));
        CHECK(j.contains("new_vertices"));
        CHECK(j.contains("layer"));
        ++count;
    }
    CHECK(count == trace.steps.size());
}

TEST_CASE("clot fixture has exactly one clot")
{
    auto h = clot_fixture();
    auto clots = find_clots(h, range(9));
    REQUIRE(clots.size() == 1);
    CHECK(clots[0].nucleus == std::vector<Vertex>{0, 1, 2});
    CHECK(clots[0].completions.size() == 3);
    CHECK(clots[0].support == range(9));
    for (const auto & c : clots[0].completions) {
        CHECK(c.first != c.second);
        auto e1 = c.subset;
        e1.push_back(c.first);
        auto e2 = c.subset;
        e2.push_back(c.second);
        CHECK(oracle::is_edge(h, e1));
        CHECK(oracle::is_edge(h, e2));
        CHECK(c.total == 2);
    }
    // Dropping one completion vertex destroys it.
    auto w = range(9);
    w.pop_back();
    CHECK(find_clots(h, w).empty());
}

TEST_CASE("linear hypergraphs have no clots")
{
    CHECK(find_clots(fano(), range(7)).empty());
    CHECK_THROWS(find_clots(UniformHypergraph{2, 3, {{0, 1}}}, range(3)));
}

TEST_CASE("clot detection agrees with a brute-force nucleus scan")
{
    std::mt19937_64 rng(67);
    for (int round = 0; round < 60; ++round) {
        int s = 3 + (round % 5 == 0);
        Vertex n = 7 + round % 4;
        auto h = oracle::random_hypergraph(rng, s, n, 10 + round % 15);
        std::vector<Vertex> w;
        for (Vertex v = 0; v < n; ++v)
            if (rng() % 5 != 0)
                w.push_back(v);
        std::vector<std::vector<Vertex>> found;
        for (const auto & c : find_clots(h, w))
            found.push_back(c.nucleus);
        CHECK(found == brute_nuclei(h, w));
    }
}

TEST_CASE("obstruction check")
{
    auto h = clot_fixture();
    // The fixture is a tree-like hypergraph, so it is 2-choosable: not applicable.
    auto report = check_obstruction(h, range(9), 4);
    CHECK(report.status == ObstructionStatus::not_applicable);

    auto f = check_obstruction(fano(), range(7), 4);
    CHECK(f.non_choosable);
    CHECK(f.minimal);
    CHECK(f.status == ObstructionStatus::holds);
    CHECK(f.degenerate >= 2);
    CHECK(f.layer_bound_ok);
}
