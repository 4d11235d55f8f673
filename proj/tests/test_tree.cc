#include <iop/errors.hh>
#include <iop/generators.hh>
#include <iop/tree.hh>

#include "fixtures.hh"
#include "oracle.hh"
#include "tree_props.hh"

#include <doctest.h>

using namespace fixtures;
using iop::RootedTree;

TEST_CASE("RootedTree::build")
{
    auto t = RootedTree::build(path(4), 1);
    CHECK(t.order == std::vector<int>{1, 0, 2, 3});
    CHECK(t.father == std::vector<int>{1, -1, 1, 2});
    CHECK(t.distance == std::vector<int>{1, 0, 1, 2});
    CHECK(t.father_edge[3] == 2);

    CHECK_THROWS_AS(RootedTree::build(cycle(3), 0), iop::PreconditionError);
    CHECK_THROWS_AS(RootedTree::build(disjoint(complete(2), complete(2)), 0), iop::PreconditionError);
    CHECK_THROWS_AS(RootedTree::build(path(3), 3), iop::PreconditionError);
}

TEST_CASE("orient_tree examples")
{
    auto s = star(3);
    auto d = iop::orient_tree(RootedTree::build(s, 0));
    CHECK(iop::in_out_degrees(s, d) == std::vector<int>{3, -1, -1, -1});
    CHECK(iop::check_proper(s, d).width == 3);
    CHECK(oracle::in_out_number(s) == 3);

    auto k2 = complete(2);
    auto e = iop::orient_tree(RootedTree::build(k2, 0));
    CHECK(iop::in_out_degrees(k2, e) == std::vector<int>{1, -1});

    auto one = Graph(1, {});
    CHECK(iop::orient_tree(RootedTree::build(one, 0)).size() == 0);
}

TEST_CASE("orient_any_tree examples")
{
    auto forest = disjoint(star(3), complete(2));
    auto d = iop::orient_any_tree(forest);
    auto r = iop::check_proper(forest, d);
    CHECK(r.proper);
    CHECK(r.width == 3);

    auto p5 = path(5);
    auto q = iop::check_proper(p5, iop::orient_any_tree(p5));
    CHECK(q.proper);
    CHECK(q.width <= 3);
    CHECK(q.width >= oracle::in_out_number(p5));

    auto empty = Graph(4, {});
    CHECK(iop::orient_any_tree(empty).size() == 0);
    CHECK_THROWS_WITH_AS(iop::orient_any_tree(disjoint(complete(2), cycle(3))), doctest::Contains("not a forest"),
                         iop::PreconditionError);
}

TEST_CASE("tree propositions on random trees and every root")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = iop::generate(iop::Family::Tree, 1 + static_cast<int>(seed % 40), seed);
        for (int root = 0; root < g.order(); root += 1 + g.order() / 5) {
            auto t = RootedTree::build(g, root);
            auto d = iop::orient_tree(t);
            INFO("seed " << seed << " root " << root);
            CHECK(props::tree_violation(t, d) == "");
        }
    }
}

TEST_CASE("long degree-2 runs and caterpillars")
{
    for (int n = 1; n <= 30; ++n) {
        auto t = RootedTree::build(path(n), 0);
        CHECK(props::tree_violation(t, iop::orient_tree(t)) == "");
        auto mid = RootedTree::build(path(n), n / 2);
        CHECK(props::tree_violation(mid, iop::orient_tree(mid)) == "");
    }
    // spine 0..9 with a leaf on every other spine vertex
    fixtures::Edges e;
    for (int v = 0; v < 9; ++v)
        e.emplace_back(v, v + 1);
    for (int v = 0; v < 10; v += 2)
        e.emplace_back(v, 10 + v / 2);
    Graph caterpillar(15, e);
    for (int root = 0; root < 15; ++root) {
        auto t = RootedTree::build(caterpillar, root);
        CHECK(props::tree_violation(t, iop::orient_tree(t)) == "");
    }
}

TEST_CASE("forest orientation is independent of the worker count")
{
    auto forest = disjoint(iop::generate(iop::Family::Tree, 50, 1), iop::generate(iop::Family::Tree, 30, 2));
    forest = disjoint(forest, star(5));
    auto one = iop::orient_any_tree(forest, 1);
    CHECK(iop::orient_any_tree(forest, 4) == one);
    CHECK(iop::check_proper(forest, one).proper);
}
