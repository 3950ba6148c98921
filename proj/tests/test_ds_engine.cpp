#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsf/ds_engine.hpp"
#include "dsf/oracle.hpp"
#include "dsf/sweep.hpp"

#include <random>

using namespace dsf;

namespace {

struct Want {
    Weight w;
    int shift;
    long long mult;
};

bool matches(const DSResult &R, std::vector<Want> want)
{
    if (R.entries.size() != want.size())
        return false;
    for (auto &e : R.entries) {
        bool found = false;
        for (auto it = want.begin(); it != want.end(); ++it)
            if (it->w == e.label.weight && it->shift == e.shift && it->mult == e.mult) {
                want.erase(it);
                found = true;
                break;
            }
        if (!found)
            return false;
    }
    return want.empty();
}

} // namespace

TEST_CASE("gl(6|7) example")
{
    auto R = ds1_simple(SuperalgebraId::gl(6, 7), Weight::ints({3, 3, 2, 1, 1, 0}, {0, -2, -2, -2, -3, -3, -6}));
    CHECK(R.input.convention == Convention::Even);
    CHECK(matches(R, {{Weight::ints({3, 3, 2, 1, 1}, {-2, -2, -2, -3, -3, -6}), 0, 1},
                      {Weight::ints({3, 3, 2, 0, -1}, {1, -2, -2, -3, -3, -6}), 0, 1}}));
    for (auto &e : R.entries)
        CHECK(e.label.alg == SuperalgebraId::gl(5, 6));
    // dex normalization: n_i = dex lambda - dex lambda_i = 1
    auto D = with_convention(R, Convention::Dex);
    for (auto &e : D.entries)
        CHECK(e.shift == 1);
    auto Ld = make_label(SuperalgebraId::gl(6, 7), Weight::ints({3, 3, 2, 1, 1, 0}, {0, -2, -2, -2, -3, -3, -6}));
    Ld.convention = Convention::Dex;
    CHECK(ds1_simple(Ld) == D);
}

TEST_CASE("osp(11|10) example")
{
    auto R = ds1_simple(SuperalgebraId::osp(11, 10), Weight::ints({9, 8, 4, 1, 0}, {8, 7, 3, 0, 0}));
    CHECK(matches(R, {{Weight::ints({9, 8, 4, 1}, {8, 7, 3, 0}), 0, 1}, {Weight::ints({9, 4, 1, 0}, {8, 3, 0, 0}), 1, 2}}));
}

TEST_CASE("osp(6|6) example")
{
    auto R = ds1_simple(SuperalgebraId::osp(6, 6), Weight::ints({6, 2, -1}, {6, 2, 1}));
    CHECK(matches(R, {{Weight::ints({6, 2}, {6, 2}), 1, 1},
                      {Weight::ints({6, -2}, {6, 2}), 1, 1},
                      {Weight::ints({2, 1}, {2, 1}), 0, 1},
                      {Weight::ints({2, -1}, {2, 1}), 0, 1}}));
}

TEST_CASE("osp t=2 example")
{
    auto R = ds1_simple(SuperalgebraId::osp(10, 8), Weight::ints({8, 5, 2, 0, 0}, {8, 5, 2, 0}));
    CHECK(matches(R, {{Weight::ints({8, 5, 2, 0}, {8, 5, 2}), 0, 1},
                      {Weight::ints({8, 2, 0, 0}, {8, 2, 0}), 0, 1},
                      {Weight::ints({5, 2, 0, 0}, {5, 2, 0}), 1, 2}}));
    CHECK(check_multiplicity(R, Family::OSP));
    CHECK(!check_multiplicity(R, Family::GL));
}

TEST_CASE("p(9) example")
{
    auto R = ds1_simple(SuperalgebraId::pn(9), Weight::ints({0, 0, 1, 3, 3, 6, 8, 8, 8}));
    CHECK(matches(R, {{Weight::ints({0, 2, 4, 4, 7, 9, 9, 9}), 1, 1},
                      {Weight::ints({0, 0, 4, 4, 7, 9, 9, 9}), 0, 1},
                      {Weight::ints({0, 0, 1, 3, 7, 9, 9, 9}), 0, 1},
                      {Weight::ints({0, 0, 1, 3, 3, 6, 8, 8}), 0, 1}}));
}

TEST_CASE("typical weights give zero")
{
    auto g = SuperalgebraId::gl(2, 1);
    CHECK(ds1_simple(g, Weight::ints({3, 0}, {1})).entries.empty());
    CHECK(ds1_simple(SuperalgebraId::gl(3, 0), Weight::ints({2, 1, 0}, {})).entries.empty());
}

TEST_CASE("gl(m|n) standard module")
{
    // V = L(eps_1); dex eps_1 = 1 so DS(L(eps_1)) = Pi L(eps_1) in the dex
    // normalization and the even copy of the standard in the other one
    auto g = SuperalgebraId::gl(2, 1);
    auto L = make_label(g, Weight::ints({1, 0}, {0}));
    CHECK(label_dex(L) == 1);
    auto R = ds1_simple(L);
    REQUIRE(R.entries.size() == 1);
    CHECK(R.entries[0].label.weight == Weight::ints({1}, {}));
    CHECK(R.entries[0].shift == 0);
    // the explicit module agrees
    auto V = standard_module(g);
    auto ds = ds_explicit(V, odd_operator(V, {unit_eps(2, 1, 1) - unit_delta(2, 1, 0)}));
    CHECK(ds.dim() == 1);
    CHECK(ds.sdim() == 1);
}

TEST_CASE("bracketings and composition")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-3, 3);
    auto g = SuperalgebraId::gl(3, 3);
    int tried = 0;
    while (tried < 20) {
        std::vector<int> e{c(rng), c(rng), c(rng)}, d{c(rng), c(rng), c(rng)};
        std::sort(e.rbegin(), e.rend());
        std::sort(d.rbegin(), d.rend());
        auto w = Weight::ints(e, d);
        if (!is_dominant(g, w))
            continue;
        ++tried;
        auto L = make_label(g, w);
        for (int r = 2; r <= 3; ++r)
            for (int s = 0; s <= r; ++s)
                CHECK(ds_r_simple(L, r, s) == ds_r_simple(L, r, r));
    }
    auto L = make_label(SuperalgebraId::gl(6, 7), Weight::ints({3, 3, 2, 1, 1, 0}, {0, -2, -2, -2, -3, -3, -6}));
    auto R2 = ds_r_simple(L, 2);
    CHECK(R2 == ds_r_simple(L, 2, 1));
    CHECK(R2 == ds1_apply(ds1_simple(L)));
    CHECK(!R2.entries.empty());
}

TEST_CASE("conventions round trip")
{
    auto R = ds1_simple(SuperalgebraId::osp(6, 6), Weight::ints({6, 2, -1}, {6, 2, 1}));
    CHECK(with_convention(with_convention(R, Convention::Even), Convention::Dex) == R);
}

TEST_CASE("purity sweeps, small bounds")
{
    for (auto alg : {SuperalgebraId::gl(2, 2), SuperalgebraId::gl(2, 3), SuperalgebraId::osp(5, 4),
                     SuperalgebraId::osp(6, 4), SuperalgebraId::osp(4, 4), SuperalgebraId::pn(3)}) {
        auto rep = purity_sweep(alg, 4);
        CHECK(rep.checked > 0);
        CHECK(rep.ok());
    }
}

TEST_CASE("exceptional blocks")
{
    auto d = exceptional_block(SuperalgebraId::d21a(1, 2), 0, 0);
    CHECK(d.graph == ExtGraph::D_inf);
    auto e0 = ds_exceptional(d);
    REQUIRE(e0.size() == 1);
    CHECK(e0[0].module.str() == "L_C(0)");
    auto e3 = ds_exceptional(exceptional_block(SuperalgebraId::d21a(1, 2), 3, 0));
    REQUIRE(e3.size() == 1);
    CHECK(e3[0].mult == 2);
    CHECK(e3[0].shift == 0);
    auto a = ds_exceptional(exceptional_block(SuperalgebraId::d21a(1, 2), -3, 2));
    REQUIRE(a.size() == 2);
    CHECK(a[0].module.hw[0] == -6);
    CHECK(a[1].module.hw[0] == 6);
    CHECK(a[0].shift == 1);

    auto g = ds_exceptional(exceptional_block(SuperalgebraId::g3(), 2, 3));
    REQUIRE(g.size() == 1);
    CHECK(g[0].module.str() == "L_sl2(6)");
    CHECK(g[0].shift == 1);
    CHECK(g[0].mult == 2);

    auto f = ds_exceptional(exceptional_block(SuperalgebraId::f4(), 4, 0, 4, 1));
    REQUIRE(f.size() == 2);
    CHECK(f[0].module.str() == "L_sl3(1,4)");
    CHECK(f[1].module.str() == "L_sl3(4,1)");
    CHECK(f[0].shift == 0);
    auto ff = ds_exceptional(exceptional_block(SuperalgebraId::f4(), 1, 0, 2, 2));
    REQUIRE(ff.size() == 1);
    CHECK(ff[0].mult == 1);

    CHECK_THROWS_AS(exceptional_block(SuperalgebraId::f4(), 0, 0, 2, 1), domain_error);
    CHECK_THROWS_AS(exceptional_block(SuperalgebraId::g3(), -1, 1), domain_error);
    CHECK_THROWS_AS(exceptional_block(SuperalgebraId::gl(1, 1), 0, 0), domain_error);
}
