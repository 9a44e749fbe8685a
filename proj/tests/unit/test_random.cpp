#include "oracles.hpp"

#include <ramsey/families.hpp>
#include <ramsey/janson.hpp>
#include <ramsey/prestars.hpp>
#include <ramsey/sampling.hpp>
#include <ramsey/stars.hpp>
#include <ramsey/threshold.hpp>

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace ramsey;

namespace {

UniformHypergraph fano()
{
    return UniformHypergraph{3, 7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}};
}

// Stars by definition: (r-1)-subsets of edges pairwise meeting in the same single vertex.
struct BruteStar {
    Vertex centre;
    std::vector<std::size_t> edges;
};

std::vector<BruteStar> brute_stars(const UniformHypergraph & h, int r)
{
    std::vector<BruteStar> out;
    auto m = h.edge_count();
    if (r == 2) {
        for (std::size_t e = 0; e < m; ++e)
            for (auto v : h.edge(e))
                out.push_back({v, {e}});
        return out;
    }
    std::vector<Vertex> ids(m);
    for (std::size_t i = 0; i < m; ++i)
        ids[i] = static_cast<Vertex>(i);
    for (const auto & pick : oracle::subsets(ids, static_cast<std::size_t>(r - 1))) {
        std::optional<Vertex> centre;
        bool ok = true;
        for (std::size_t a = 0; a < pick.size() && ok; ++a)
            for (std::size_t b = a + 1; b < pick.size() && ok; ++b) {
                std::vector<Vertex> common;
                auto ea = h.edge(pick[a]), eb = h.edge(pick[b]);
                std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(common));
                if (common.size() != 1 || (centre && *centre != common[0]))
                    ok = false;
                else
                    centre = common[0];
            }
        if (ok)
            out.push_back({*centre, {pick.begin(), pick.end()}});
    }
    return out;
}

std::set<Vertex> support(const UniformHypergraph & h, const BruteStar & s)
{
    std::set<Vertex> out;
    for (auto e : s.edges)
        out.insert(h.edge(e).begin(), h.edge(e).end());
    return out;
}

// Missing colour of a rainbow star, 0 if not rainbow (definition-level).
int brute_rainbow(const UniformHypergraph & h, int r, const BruteStar & s, const PartialColouring & psi)
{
    std::set<int> colours;
    for (auto e : s.edges) {
        std::set<int> seen;
        for (auto v : h.edge(e))
            if (v != s.centre)
                seen.insert(psi[v]);
        if (seen.size() != 1 || *seen.begin() == 0)
            return 0;
        colours.insert(*seen.begin());
    }
    if (static_cast<int>(colours.size()) != r - 1)
        return 0;
    for (int i = 1; i <= r; ++i)
        if (!colours.count(i))
            return i;
    return 0;
}

// Constellations with a given missing colour (0: all), by brute force over star tuples.
std::uint64_t brute_constellations(const UniformHypergraph & h, int r, const PartialColouring * psi, int colour)
{
    auto stars = brute_stars(h, r);
    std::uint64_t total = 0;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        auto base = h.edge(e);
        std::vector<std::vector<const BruteStar *>> at(base.size());
        for (const auto & st : stars)
            for (std::size_t j = 0; j < base.size(); ++j)
                if (st.centre == base[j] && (!psi || brute_rainbow(h, r, st, *psi) == colour))
                    at[j].push_back(&st);
        std::vector<const BruteStar *> chosen;
        auto rec = [&](auto && self, std::size_t j) -> void {
            if (j == base.size()) {
                for (std::size_t a = 0; a < chosen.size(); ++a)
                    for (std::size_t b = a + 1; b < chosen.size(); ++b) {
                        auto sa = support(h, *chosen[a]), sb = support(h, *chosen[b]);
                        for (auto v : sa)
                            if (sb.count(v))
                                return;
                    }
                ++total;
                return;
            }
            for (auto st : at[j]) {
                chosen.push_back(st);
                self(self, j + 1);
                chosen.pop_back();
            }
        };
        rec(rec, 0);
    }
    return total;
}

} // namespace

TEST_CASE("sampling extremes and mean size")
{
    CHECK(sample_subset(50, 0.0, 1, 0).empty());
    CHECK(sample_subset(50, 1.0, 1, 0).size() == 50);
    CHECK_THROWS(sample_subset(5, 1.5, 1, 0));
    double total = 0;
    for (std::uint64_t t = 0; t < 100; ++t)
        total += static_cast<double>(sample_subset(10000, 0.3, 2024, t).size());
    double mean = total / 100;
    double sigma = std::sqrt(10000 * 0.3 * 0.7 / 100);
    CHECK(std::abs(mean - 3000) < 3 * sigma);
}

TEST_CASE("trial streams are pinned bit for bit")
{
    // splitmix64 reference outputs for seed 0 state increments.
    CHECK(mix64(0x9E3779B97F4A7C15ULL) == 0xE220A8397B1DCDAFULL);
    TrialStream a{42, 7}, b{42, 7}, c{42, 8};
    CHECK(a.bits(0) == b.bits(0));
    CHECK(a.bits(0) != c.bits(0));
    CHECK(a.uniform(3) >= 0.0);
    CHECK(a.uniform(3) < 1.0);
}

TEST_CASE("parallel map does not depend on the worker count")
{
    auto f = [](std::size_t i) { return mix64(i) % 1000; };
    CHECK(parallel_map(1000, 1, f) == parallel_map(1000, 8, f));
}

TEST_CASE("Wilson interval")
{
    auto i = wilson_interval(0, 10);
    CHECK(i.lo == 0.0);
    CHECK(i.hi > 0.2);
    auto j = wilson_interval(50, 100);
    CHECK(j.lo == doctest::Approx(0.4038).epsilon(1e-3));
    CHECK(j.hi == doctest::Approx(0.5962).epsilon(1e-3));
    auto k = wilson_interval(0, 0);
    CHECK(k.lo == 0.0);
    CHECK(k.hi == 1.0);
}

TEST_CASE("isotonic fit and crossings")
{
    auto fit = isotonic_fit({0.0, 0.4, 0.2, 0.8, 1.0}, {1, 1, 1, 1, 1});
    REQUIRE(fit.size() == 5);
    CHECK(fit[1] == doctest::Approx(0.3));
    CHECK(fit[2] == doctest::Approx(0.3));
    CHECK(fit[3] == 0.8);
    auto weighted = isotonic_fit({0.5, 0.1}, {3, 1});
    CHECK(weighted[0] == doctest::Approx(0.4));
    CHECK(weighted[1] == doctest::Approx(0.4));
    std::vector<double> grid{0.1, 0.2, 0.3, 0.4, 0.5};
    auto x = crossing(grid, fit, 0.5);
    REQUIRE(x);
    CHECK(*x == doctest::Approx(0.3 + 0.1 * 0.2 / 0.5));
    CHECK_FALSE(crossing(grid, {0.6, 0.7, 0.8, 0.9, 1.0}, 0.5));
    CHECK_FALSE(crossing(grid, {0.0, 0.1, 0.2, 0.3, 0.4}, 0.5));
}

TEST_CASE("Monte Carlo extremes")
{
    PropertySpec non2;
    auto all = monte_carlo(fano(), {1.0, 20, 5}, non2);
    CHECK(all.frequency == 1.0);
    CHECK(all.successes == 20);
    for (auto kind : {PropertyKind::non_colourable, PropertyKind::contains_clot, PropertyKind::has_degenerates,
             PropertyKind::non_choosable_subset, PropertyKind::list_schur, PropertyKind::list_vdw}) {
        PropertySpec spec;
        spec.kind = kind;
        auto h = kind == PropertyKind::list_vdw ? build_kap_hypergraph(3, 13) : build_schur_hypergraph(13);
        auto none = monte_carlo(h, {0.0, 10, 5}, spec);
        CHECK(none.successes == 0);
        CHECK(none.inconclusive == 0);
        CHECK(property_from_string(to_string(kind)) == kind);
    }
}

TEST_CASE("inconclusive trials are reported separately")
{
    PropertySpec spec;
    spec.limits.max_nodes = 1;
    auto h = build_copies_hypergraph(atlas::complete(3), 7);
    auto r = monte_carlo(h, {1.0, 4, 1}, spec);
    CHECK(r.inconclusive == 4);
    CHECK(r.successes == 0);
}

TEST_CASE("Monte Carlo output is identical across worker counts")
{
    auto h = build_schur_hypergraph(31);
    PropertySpec spec;
    spec.kind = PropertyKind::has_degenerates;
    auto a = monte_carlo(h, {0.3, 64, 99}, spec, 1);
    auto b = monte_carlo(h, {0.3, 64, 99}, spec, 8);
    CHECK(a.successes == b.successes);
    CHECK(a.inconclusive == b.inconclusive);
}

TEST_CASE("threshold curve rejects bad grids and is monotone after fitting")
{
    FamilySpec family;
    family.family = Family::kap;
    family.size = 31;
    family.k = 3;
    CHECK_THROWS(threshold_curve(family, {0.1, 1.2}, 5, 1));
    CHECK_THROWS(threshold_curve(family, {-0.1, 0.2}, 5, 1));
    CHECK_THROWS(threshold_curve(family, {0.3, 0.2}, 5, 1));
    auto curve = threshold_curve(family, {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}, 40, 7);
    CHECK(curve.points.front().result.successes == 0);
    CHECK(curve.points.back().result.frequency == 1.0);
    CHECK(std::is_sorted(curve.isotonic.begin(), curve.isotonic.end()));
    REQUIRE(curve.p_hat);
    CHECK(curve.exponent == 2.0);
    CHECK(*curve.scaled == doctest::Approx(*curve.p_hat * std::sqrt(31.0)));
    std::ostringstream csv;
    write_curve_csv(csv, curve);
    CHECK(csv.str().rfind("p,successes,trials,freq,wilson_lo,wilson_hi\n0,0,40,0,0,", 0) == 0);
}

TEST_CASE("experiment config")
{
    std::istringstream in("# schur run\nfamily = schur\nsize = 61\nr = 2\ngrid = 0:0.5:6\ntrials = 30\nseed = 12\n");
    auto config = read_experiment_config(in);
    CHECK(config.family.family == Family::schur);
    CHECK(config.family.size == 61);
    CHECK(config.grid.size() == 6);
    CHECK(config.grid[5] == 0.5);
    CHECK(config.trials == 30);
    CHECK(config.seed == 12u);
    std::istringstream bad("family = schur\nsize: 3\n");
    try {
        read_experiment_config(bad);
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(e.line() == 2);
    }
    CHECK(parse_grid("0.1,0.2,0.3") == std::vector<double>{0.1, 0.2, 0.3});
}

TEST_CASE("star counts")
{
    UniformHypergraph single{3, 3, {{0, 1, 2}}};
    CHECK(count_stars(single, 2) == 3);
    std::mt19937_64 rng(71);
    for (int round = 0; round < 20; ++round) {
        auto h = oracle::random_hypergraph(rng, 3, 8, 4 + round);
        CHECK(count_stars(h, 2) == 3 * h.edge_count());
        for (int r : {3, 4})
            CHECK(count_stars(h, r) == brute_stars(h, r).size());
    }
    CHECK(count_stars(fano(), 3) == brute_stars(fano(), 3).size());
    CHECK(count_stars(fano(), 3) == 21);
}

TEST_CASE("constellation counts agree with brute force")
{
    std::mt19937_64 rng(73);
    for (int round = 0; round < 15; ++round) {
        auto h = oracle::random_hypergraph(rng, 3, 10, 6 + round);
        for (int r : {2, 3})
            CHECK(count_constellations(h, r) == brute_constellations(h, r, nullptr, 0));
    }
    CHECK(count_constellations(fano(), 3) == 0);
}

TEST_CASE("rainbow counts")
{
    auto h = build_schur_hypergraph(13);
    PartialColouring ones(13, 1);
    auto all = count_rainbow(h, 2, ones);
    CHECK(all.stars.any == count_stars(h, 2));
    CHECK(all.stars.per_colour[1] == all.stars.any);
    CHECK(all.stars.per_colour[0] == 0);

    PartialColouring empty(13, 0);
    CHECK(count_rainbow(h, 2, empty).stars.any == 0);
    CHECK(count_rainbow(h, 3, empty).constellations.any == 0);

    std::mt19937_64 rng(79);
    for (int round = 0; round < 6; ++round) {
        int r = 2 + round % 2;
        PartialColouring psi(13);
        for (auto & c : psi)
            c = static_cast<int>(rng() % static_cast<unsigned>(r + 1));
        auto report = count_rainbow(h, r, psi);
        std::uint64_t any = 0;
        for (int i = 1; i <= r; ++i) {
            std::uint64_t stars = 0;
            for (const auto & st : brute_stars(h, r))
                stars += brute_rainbow(h, r, st, psi) == i;
            CHECK(report.stars.per_colour[static_cast<std::size_t>(i - 1)] == stars);
            any += stars;
            CHECK(report.constellations.per_colour[static_cast<std::size_t>(i - 1)]
                == brute_constellations(h, r, &psi, i));
        }
        CHECK(report.stars.any == any);
    }
}

TEST_CASE("prestar counts agree with enumeration")
{
    auto brute = [](const std::vector<std::vector<Vertex>> & y, Vertex n) {
        // Prestars (x, y, a): x_i, y_i in Y_i and a in {x_i+y_i, x_i-y_i, y_i-x_i}.
        std::vector<std::uint64_t> per(static_cast<std::size_t>(n), 1);
        for (Vertex a = 0; a < n; ++a)
            for (const auto & set : y) {
                std::uint64_t rays = 0;
                for (auto x : set)
                    for (auto z : set) {
                        bool ok = (x + z) % n == a || ((x - z) % n + n) % n == a || ((z - x) % n + n) % n == a;
                        rays += ok;
                    }
                per[a] *= rays;
            }
        std::uint64_t stars = 0, cons = 0;
        for (Vertex a = 0; a < n; ++a) {
            stars += per[a];
            for (Vertex b = 0; b < n; ++b)
                for (Vertex c = 0; c < n; ++c)
                    if ((b + c) % n == a)
                        cons += per[a] * per[b] * per[c];
        }
        return std::pair{stars, cons};
    };
    std::vector<std::vector<Vertex>> full{{0, 1, 2, 3, 4}};
    auto [s5, c5] = brute(full, 5);
    CHECK(count_prestars(full, 5) == s5);
    CHECK(count_preconstellations(full, 5) == c5);
    CHECK(count_prestars({{1, 2}, {}}, 7) == 0);

    std::mt19937_64 rng(83);
    for (int round = 0; round < 20; ++round) {
        Vertex n = 7 + round % 6;
        int t = 1 + round % 2;
        std::vector<std::vector<Vertex>> y(static_cast<std::size_t>(t));
        for (auto & set : y)
            for (Vertex v = 0; v < n; ++v)
                if (rng() % 3 == 0)
                    set.push_back(v);
        auto [stars, cons] = brute(y, n);
        auto p = count_prestars(y, n);
        auto q = count_preconstellations(y, n);
        CHECK(p == stars);
        CHECK(q == cons);
        CHECK(preconstellation_bound_holds(q, p, t, n));
    }
}

TEST_CASE("Janson fixtures")
{
    JansonInput singletons{10, {}, 0.5, 5.0};
    for (Vertex v = 0; v < 10; ++v)
        singletons.sets.push_back({v});
    auto r = janson_bound(singletons);
    CHECK(r.mu == doctest::Approx(5.0));
    CHECK(r.var_prime == doctest::Approx(5.0));
    CHECK(r.bound == doctest::Approx(std::exp(-2.5)));
    singletons.t = 0;
    CHECK(janson_bound(singletons).bound == 1.0);
    singletons.t = 6;
    CHECK_THROWS(janson_bound(singletons));
    singletons.t = -1;
    CHECK_THROWS(janson_bound(singletons));
}

TEST_CASE("Janson pseudo-variance agrees with pairwise summation")
{
    std::mt19937_64 rng(89);
    for (int round = 0; round < 30; ++round) {
        Vertex ground = 12;
        JansonInput in{ground, {}, 0.1 + 0.02 * round, 0};
        for (int i = 0; i < 15; ++i) {
            std::vector<Vertex> b;
            for (Vertex v = 0; v < ground; ++v)
                if (rng() % 4 == 0)
                    b.push_back(v);
            in.sets.push_back(b);
        }
        double mu = 0, var = 0;
        for (const auto & a : in.sets) {
            mu += std::pow(in.p, static_cast<double>(a.size()));
            for (const auto & b : in.sets) {
                std::set<Vertex> u(a.begin(), a.end());
                bool meet = false;
                for (auto v : b)
                    meet |= !u.insert(v).second;
                if (meet)
                    var += std::pow(in.p, static_cast<double>(u.size()));
            }
        }
        in.t = mu / 2;
        auto r = janson_bound(in);
        CHECK(r.mu == doctest::Approx(mu).epsilon(1e-12));
        CHECK(r.var_prime == doctest::Approx(var).epsilon(1e-12));
    }
}

TEST_CASE("Janson lower tail holds by simulation")
{
    auto h = build_schur_hypergraph(31);
    JansonInput in{31, h.edge_list(), 2.0 / std::sqrt(31.0), 0};
    in.t = janson_bound(in).mu;
    auto a = janson_monte_carlo(in, 400, 5, 1);
    auto b = janson_monte_carlo(in, 400, 5, 4);
    CHECK(a.within);
    CHECK(a.hits == b.hits);
}

TEST_CASE("local coarseness")
{
    std::vector<std::vector<Vertex>> singles;
    for (Vertex v = 0; v < 20; ++v)
        singles.push_back({v});
    auto r = local_coarseness_check(singles, 20, 0.1, 0.5, 4000, 3);
    CHECK(r.k == 1);
    CHECK(r.holds);
    CHECK(r.mu_p == doctest::Approx(1 - std::pow(0.9, 20)).epsilon(0.05));
    // Closed form: 1 - (1 - cp)^n >= c (1 - (1 - p)^n).
    CHECK(1 - std::pow(0.95, 20) >= 0.5 * (1 - std::pow(0.9, 20)));

    auto f = local_coarseness_check(fano().edge_list(), 7, 0.5, 0.5, 4000, 3);
    CHECK(f.k == 3);
    CHECK(f.holds);
    auto same = local_coarseness_check(fano().edge_list(), 7, 0.5, 1.0, 1000, 3);
    CHECK(same.mu_p == same.mu_cp);
    CHECK_THROWS(local_coarseness_check(singles, 20, 0.1, 0.0, 10, 1));
}
