#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsf/diagram_calculus.hpp"
#include "dsf/sweep.hpp"

using namespace dsf;

namespace {

const auto GL67 = SuperalgebraId::gl(6, 7);
const auto GL67_LAMBDA = Weight::ints({3, 3, 2, 1, 1, 0}, {0, -2, -2, -2, -3, -3, -6});
const auto OSP1110 = SuperalgebraId::osp(11, 10);
const auto OSP1110_LAMBDA = Weight::ints({9, 8, 4, 1, 0}, {8, 7, 3, 0, 0});
const auto OSP66 = SuperalgebraId::osp(6, 6);
const auto OSP66_LAMBDA = Weight::ints({6, 2, -1}, {6, 2, 1});
const auto P9 = SuperalgebraId::pn(9);
const auto P9_LAMBDA = Weight::ints({0, 0, 1, 3, 3, 6, 8, 8, 8});

std::string symbols(const WeightDiagram &d, int lo, int hi)
{
    std::string s;
    for (int p = lo; p <= hi; ++p)
        s += static_cast<char>(d.at(p));
    return s;
}

} // namespace

TEST_CASE("gl(6|7) example diagram")
{
    auto d = weight_diagram(GL67, GL67_LAMBDA);
    CHECK(symbols(d, -5, 4) == "xo<x>xoxxo");
    CHECK(symbols(d, 5, 7) == "oo>");
    CHECK(d.sym.rbegin()->first == 7);
    CHECK(atypicality(GL67, GL67_LAMBDA) == 5);
    CHECK(dex(GL67, GL67_LAMBDA) == 1);
    auto core = gl_core_free(d);
    CHECK(symbols(core, core.sym.begin()->first, core.sym.rbegin()->first) == "xoxxoxx");
    auto back = diagram_to_weight(d);
    CHECK(back.alg == GL67);
    CHECK(back.weight == GL67_LAMBDA);
}

TEST_CASE("arcs and maximal arcs")
{
    auto ad = build_arcs(weight_diagram(GL67, GL67_LAMBDA));
    CHECK(ad.arcs.size() == 5);
    CHECK(ad.maximal_arcs().size() == 2);
    for (auto &a : ad.arcs)
        CHECK(a.ends.size() == 1);

    auto ao = build_arcs(weight_diagram(OSP1110, OSP1110_LAMBDA));
    CHECK(ao.maximal_arcs().size() == 2);
    CHECK(ao.diagram.zero_stack == 2);

    auto ap = build_arcs(weight_diagram(P9, P9_LAMBDA));
    CHECK(ap.maximal_arcs().size() == 4);
}

TEST_CASE("osp invariants")
{
    CHECK(dex(OSP66, OSP66_LAMBDA) == 1);
    CHECK(dex(OSP1110, OSP1110_LAMBDA) == 0);
    CHECK(dex(SuperalgebraId::osp(10, 8), Weight::ints({8, 5, 2, 0, 0}, {8, 5, 2, 0})) == 0);
    auto d = weight_diagram(OSP66, OSP66_LAMBDA);
    CHECK(d.sign == -1);
    CHECK(d.needs_sign());
    CHECK(diagram_to_weight(d).weight == OSP66_LAMBDA);
}

TEST_CASE("removing a maximal arc")
{
    auto ad = build_arcs(weight_diagram(GL67, GL67_LAMBDA));
    std::vector<Weight> got;
    for (auto i : ad.maximal_arcs())
        got.push_back(diagram_to_weight(remove_maximal_arc(ad, i)).weight);
    std::sort(got.begin(), got.end());
    std::vector<Weight> want{Weight::ints({3, 3, 2, 0, -1}, {1, -2, -2, -3, -3, -6}),
                             Weight::ints({3, 3, 2, 1, 1}, {-2, -2, -2, -3, -3, -6})};
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("diagram round trip over dominant weights")
{
    for (auto alg : {SuperalgebraId::gl(2, 3), SuperalgebraId::osp(5, 4), SuperalgebraId::osp(6, 4),
                     SuperalgebraId::osp(4, 4), SuperalgebraId::pn(3)}) {
        long n = 0;
        for_each_dominant(alg, 4, [&](const Weight &w) {
            auto back = diagram_to_weight(weight_diagram(alg, w));
            CHECK(back.alg == alg);
            CHECK(back.weight == w);
            ++n;
        });
        CHECK(n > 0);
    }
}

TEST_CASE("ASCII rendering")
{
    auto gl = render(build_arcs(weight_diagram(SuperalgebraId::gl(2, 2), Weight::ints({0, 0}, {0, 0}))));
    CHECK(gl == "+--------+\n"
                "|  +--+  |\n"
                "x  x  o  o\n"
                "-1 0  1  2\n");
    auto osp = render(build_arcs(weight_diagram(OSP66, OSP66_LAMBDA)));
    CHECK(osp == "     +--------+\n"
                 "     |  +--+  |     +--+\n"
                 "- o  x  x  o  o  o  x  o\n"
                 "  0  1  2  3  4  5  6  7\n");
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(weight_diagram(GL67, Weight::ints({0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0})), domain_error);
    CHECK_THROWS_AS(weight_diagram(SuperalgebraId::qn(2), Weight::ints({0, 0})), domain_error);
    CHECK_THROWS_AS(dex(SuperalgebraId::pn(2), Weight::ints({0, 0})), domain_error);
}
