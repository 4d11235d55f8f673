#include <iop/errors.hh>
#include <iop/exact.hh>

#include "fixtures.hh"
#include "oracle.hh"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace fixtures;
using iop::check_proper;
using iop::VerdictKind;

namespace {
void check_certificate(const Graph & g, const iop::Verdict & v)
{
    REQUIRE(v.feasible());
    REQUIRE(v.certificate);
    auto r = check_proper(g, *v.certificate);
    CHECK(r.proper);
    CHECK(r.width <= v.width);
}
}

TEST_CASE("decide_width examples")
{
    CHECK(iop::decide_width(cycle(5), 1).kind == VerdictKind::Infeasible);
    auto c5 = iop::decide_width(cycle(5), 2);
    check_certificate(cycle(5), c5);
    CHECK(check_proper(cycle(5), *c5.certificate).width == 2);

    auto k2 = iop::decide_width(complete(2), 1);
    check_certificate(complete(2), k2);
    CHECK(k2.certificate->tail(complete(2), 0) == 0);

    CHECK_THROWS_AS(iop::decide_width(complete(2), -1), iop::PreconditionError);
}

TEST_CASE("decide_width reports the budget honestly")
{
    auto v = iop::decide_width(complete(7), 5, {10, 1});
    CHECK(v.kind == VerdictKind::BudgetExceeded);
    CHECK_FALSE(v.certificate);
    auto p = iop::decide_width(complete(7), 5, {10, 3});
    CHECK(p.kind == VerdictKind::BudgetExceeded);
    CHECK_THROWS_AS(iop::in_out_number(complete(6), {100, 1}), iop::BudgetExceeded);
}

TEST_CASE("in_out_number examples")
{
    CHECK(iop::in_out_number(cycle(6)).value == 2);
    CHECK(iop::in_out_number(complete(4)).value == 3);
    auto p3 = iop::in_out_number(path(3));
    CHECK(p3.value == 1);
    CHECK(p3.certificate == iop::Orientation::all_forward(path(3)));
    CHECK(iop::in_out_number(Graph(1, {})).value == 0);
    CHECK(iop::in_out_number(Graph(4, {})).value == 0);
}

TEST_CASE("chromatic_number examples and oracle agreement")
{
    CHECK(iop::chromatic_number(cycle(5)) == 3);
    CHECK(iop::chromatic_number(complete(4)) == 4);
    CHECK(iop::chromatic_number(complete_bipartite(3, 3)) == 2);
    CHECK(iop::chromatic_number(Graph(0, {})) == 0);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_graph(1 + trial % 7, 0.5, rng);
        CHECK(iop::chromatic_number(g) == oracle::chromatic_number(g));
    }
}

TEST_CASE("enumerate_proper examples")
{
    CHECK(iop::collect_proper(complete(2), 1).size() == 2);
    auto c3 = iop::collect_proper(cycle(3), 2);
    REQUIRE_FALSE(c3.empty());
    for (const auto & d : c3) {
        auto v = iop::in_out_degrees(cycle(3), d);
        std::sort(v.begin(), v.end());
        CHECK(v == std::vector<int>{-2, 0, 2});
    }
    CHECK(iop::collect_proper(star(3), 1).empty());

    int seen = 0;
    iop::enumerate_proper(cycle(4), 2, [&](const iop::Orientation &) { return ++seen < 1; });
    CHECK(seen == 1);
}

TEST_CASE("exact search matches brute force")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = random_sparse_graph(2 + trial % 7, 11, rng);
        int truth = oracle::in_out_number(g);
        auto result = iop::in_out_number(g);
        CHECK(result.value == truth);
        auto r = check_proper(g, result.certificate);
        CHECK(r.proper);
        CHECK(r.width == truth);
        CHECK(iop::in_out_lower_bound(g) <= truth);

        for (int k = 0; k <= 3; ++k) {
            auto listed = iop::collect_proper(g, k);
            auto expected = oracle::proper_orientations(g, k);
            REQUIRE(listed.size() == expected.size());
            for (std::size_t i = 0; i < listed.size(); ++i)
                CHECK(listed[i].directions() == expected[i]);
        }
    }
}

TEST_CASE("serial and parallel searches agree")
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 80; ++trial) {
        auto g = random_graph(3 + trial % 6, 0.5, rng);
        for (int k = 0; k <= 3; ++k) {
            auto serial = iop::decide_width_serial(g, k);
            for (int workers : {1, 2, 4}) {
                auto parallel = iop::decide_width_parallel(g, k, iop::default_budget, workers);
                CHECK(parallel.kind == serial.kind);
                if (parallel.feasible())
                    check_certificate(g, parallel);
            }
            auto all = iop::collect_proper(g, k);
            CHECK(iop::collect_proper_parallel(g, k, iop::default_budget, 3) == all);
        }
    }
}

TEST_CASE("monotonicity, parity and the sign lemma")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_sparse_graph(2 + trial % 7, 10, rng);
        bool before = false;
        for (int k = 0; k <= g.max_degree() + 1; ++k) {
            auto v = iop::decide_width(g, k);
            if (before)
                CHECK(v.feasible());
            before = v.feasible();
            if (v.feasible()) {
                auto value = iop::in_out_degrees(g, *v.certificate);
                for (int x = 0; x < g.order(); ++x)
                    CHECK((value[x] - g.degree(x)) % 2 == 0);
            }
        }
        if (g.size() == 0)
            continue;
        iop::enumerate_proper(g, g.max_degree(), [&](const iop::Orientation & d) {
            auto value = iop::in_out_degrees(g, d);
            CHECK(*std::max_element(value.begin(), value.end()) > 0);
            CHECK(*std::min_element(value.begin(), value.end()) < 0);
            return true;
        });
    }
}

TEST_CASE("search_order is a permutation of the edges")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_graph(8, 0.4, rng);
        auto order = iop::search_order(g);
        std::sort(order.begin(), order.end());
        std::vector<int> identity(g.size());
        std::iota(identity.begin(), identity.end(), 0);
        CHECK(order == identity);
    }
}
