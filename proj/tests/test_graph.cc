#include <iop/errors.hh>
#include <iop/graph.hh>

#include "fixtures.hh"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace fixtures;
using iop::check_proper;
using iop::in_out_degrees;
using iop::Orientation;
using iop::Side;

namespace {
Orientation orient(const Graph & g, std::vector<std::pair<int, int>> arcs)
{
    std::vector<bool> forward(g.size());
    for (auto [a, b] : arcs)
        forward[*g.find_edge(a, b)] = a < b;
    return Orientation(g, forward);
}
}

TEST_CASE("graph: canonical storage and rejection of bad input")
{
    Graph g(3, {{2, 0}, {1, 2}});
    CHECK(g.edge(0) == iop::Edge{0, 2});
    CHECK(g.edge(1) == iop::Edge{1, 2});
    CHECK(g.degree(2) == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g.find_edge(0, 2) == 0);
    CHECK(g.find_edge(2, 0) == 0);
    CHECK_FALSE(g.find_edge(0, 1));
    CHECK(g.incident(2)[0].neighbor == 0);

    CHECK_THROWS_AS(Graph(2, {{0, 0}}), iop::PreconditionError);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), iop::PreconditionError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), iop::PreconditionError);
    CHECK_THROWS_AS(Orientation(g, std::vector<bool>{true}), iop::PreconditionError);
}

TEST_CASE("in_out_degrees examples")
{
    auto c3 = cycle(3);
    CHECK(in_out_degrees(c3, orient(c3, {{0, 1}, {1, 2}, {2, 0}})) == std::vector<int>{0, 0, 0});
    auto k2 = complete(2);
    CHECK(in_out_degrees(k2, Orientation::all_forward(k2)) == std::vector<int>{-1, 1});
    auto s = star(3);
    CHECK(in_out_degrees(s, orient(s, {{1, 0}, {2, 0}, {3, 0}})) == std::vector<int>{3, -1, -1, -1});
}

TEST_CASE("check_proper examples")
{
    auto k2 = complete(2);
    auto r = check_proper(k2, Orientation::all_forward(k2));
    CHECK(r.proper);
    CHECK(r.width == 1);
    CHECK_FALSE(r.violating_edge);

    auto c3 = cycle(3);
    r = check_proper(c3, orient(c3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK_FALSE(r.proper);
    REQUIRE(r.violating_edge);
    CHECK(*r.violating_edge >= 0);
    CHECK(r.width == 0);

    auto c4 = cycle(4);
    auto d = orient(c4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}});
    r = check_proper(c4, d);
    CHECK(r.proper);
    CHECK(r.width == 2);
    CHECK(in_out_degrees(c4, d) == std::vector<int>{-2, 2, -2, 2});
}

TEST_CASE("reverse examples")
{
    auto k2 = complete(2);
    auto d = iop::reverse(Orientation::all_forward(k2));
    CHECK(d.tail(k2, 0) == 1);
    CHECK(in_out_degrees(k2, d) == std::vector<int>{1, -1});
    CHECK(iop::reverse(d) == Orientation::all_forward(k2));

    auto c4 = cycle(4);
    auto s = orient(c4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}});
    CHECK(in_out_degrees(c4, iop::reverse(s)) == std::vector<int>{2, -2, 2, -2});
    CHECK(check_proper(c4, iop::reverse(s)).width == 2);
}

TEST_CASE("degree invariants on random orientations")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(1 + trial % 9, 0.5, rng);
        std::vector<bool> forward(g.size());
        for (int e = 0; e < g.size(); ++e)
            forward[e] = rng() & 1;
        Orientation d(g, forward);
        auto value = in_out_degrees(g, d);
        CHECK(std::accumulate(value.begin(), value.end(), 0) == 0);
        for (int v = 0; v < g.order(); ++v) {
            CHECK(std::abs(value[v]) <= g.degree(v));
            CHECK((value[v] - g.degree(v)) % 2 == 0);
        }
        auto back = in_out_degrees(g, iop::reverse(d));
        for (int v = 0; v < g.order(); ++v)
            CHECK(back[v] == -value[v]);
        auto a = check_proper(g, d), b = check_proper(g, iop::reverse(d));
        CHECK(a.proper == b.proper);
        CHECK(a.width == b.width);
        CHECK(iop::reverse(iop::reverse(d)) == d);
    }
}

TEST_CASE("bipartition examples")
{
    auto c4 = iop::bipartition(cycle(4));
    REQUIRE(c4.bipartite());
    CHECK(c4.side == std::vector<Side>{Side::X, Side::Y, Side::X, Side::Y});

    auto c5 = iop::bipartition(cycle(5));
    CHECK_FALSE(c5.bipartite());
    CHECK(c5.odd_cycle.size() == 5);

    auto k33 = iop::bipartition(complete_bipartite(3, 3));
    REQUIRE(k33.bipartite());
    for (int v = 0; v < 6; ++v)
        CHECK(k33.side[v] == (v < 3 ? Side::X : Side::Y));
}

TEST_CASE("bipartition certificates on random graphs")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_graph(2 + trial % 10, 0.3, rng);
        auto b = iop::bipartition(g);
        if (b.bipartite()) {
            for (const auto & e : g.edges())
                CHECK(b.side[e.u] != b.side[e.v]);
            for (const auto & c : iop::components(g))
                CHECK(b.side[c.vertices.front()] == Side::X);
        }
        else {
            const auto & w = b.odd_cycle;
            CHECK(w.size() % 2 == 1);
            for (std::size_t i = 0; i < w.size(); ++i)
                CHECK(g.adjacent(w[i], w[(i + 1) % w.size()]));
        }
    }
}

TEST_CASE("components examples")
{
    auto parts = iop::components(disjoint(cycle(3), complete(2)));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].vertices.size() == 3);
    CHECK(parts[1].vertices == std::vector<int>{3, 4});
    CHECK(parts[1].graph.size() == 1);
    CHECK(parts[1].edges == std::vector<int>{3});

    CHECK(iop::components(petersen()).size() == 1);
    CHECK(iop::components(petersen())[0].vertices.size() == 10);

    auto singles = iop::components(Graph(4, {}));
    CHECK(singles.size() == 4);
    for (const auto & c : singles)
        CHECK(c.vertices.size() == 1);
}

TEST_CASE("line_graph examples and degree formula")
{
    auto l = iop::line_graph(star(3));
    CHECK(l.graph == complete(3));
    CHECK(l.edge_of == std::vector<int>{0, 1, 2});

    for (int n = 3; n <= 8; ++n) {
        auto lc = iop::line_graph(cycle(n)).graph;
        CHECK(lc.size() == n);
        for (int v = 0; v < n; ++v)
            CHECK(lc.degree(v) == 2);
        CHECK(iop::components(lc).size() == 1);
    }

    auto lk4 = iop::line_graph(complete(4)).graph;
    CHECK(lk4.order() == 6);
    CHECK(lk4.size() == 12);
    for (int v = 0; v < 6; ++v)
        CHECK(lk4.degree(v) == 4);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_graph(7, 0.4, rng);
        auto lg = iop::line_graph(g);
        CHECK(lg.graph.order() == g.size());
        for (int v = 0; v < lg.graph.order(); ++v) {
            const auto & e = g.edge(lg.edge_of[v]);
            CHECK(lg.graph.degree(v) == g.degree(e.u) + g.degree(e.v) - 2);
        }
    }
}

TEST_CASE("eulerian_orientation")
{
    auto c4 = cycle(4);
    CHECK(in_out_degrees(c4, iop::eulerian_orientation(c4)) == std::vector<int>(4, 0));
    auto k5 = complete(5);
    CHECK(in_out_degrees(k5, iop::eulerian_orientation(k5)) == std::vector<int>(5, 0));
    CHECK_THROWS_WITH_AS(iop::eulerian_orientation(path(3)), doctest::Contains("vertex 0"), iop::PreconditionError);
    auto empty = Graph(3, {});
    CHECK(iop::eulerian_orientation(empty).size() == 0);
}
