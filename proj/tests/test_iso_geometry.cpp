#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsf/iso_geometry.hpp"

using namespace dsf;

namespace {

std::vector<std::size_t> orbit_counts(const SuperalgebraId &alg)
{
    std::vector<std::size_t> out;
    for (int k = 0; k <= defect(alg); ++k)
        out.push_back(w_orbits_on_iso_sets(alg, static_cast<std::size_t>(k)).size());
    return out;
}

} // namespace

TEST_CASE("iso-set enumeration")
{
    auto g = SuperalgebraId::gl(1, 1);
    CHECK(enumerate_iso_sets(g, 1).size() == 2);
    CHECK(enumerate_iso_sets(g, 2).empty());
    CHECK(enumerate_iso_sets(SuperalgebraId::gl(2, 2), 2).size() == 8);
    for (auto &A : enumerate_iso_sets(SuperalgebraId::osp(5, 4), 2))
        CHECK(detail::weight_rank(A.roots) == 2);
}

TEST_CASE("defect by enumeration")
{
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            CHECK(defect_by_enumeration(SuperalgebraId::gl(m, n)) == defect(SuperalgebraId::gl(m, n)));
    CHECK(defect_by_enumeration(SuperalgebraId::osp(5, 6)) == 2);
    CHECK(defect_by_enumeration(SuperalgebraId::osp(6, 4)) == 2);
    CHECK(defect_by_enumeration(SuperalgebraId::pn(3)) == 3);
    CHECK(defect_by_enumeration(SuperalgebraId::qn(5)) == 2);
    CHECK(defect_by_enumeration(SuperalgebraId::g3()) == 1);
}

TEST_CASE("orbit dimensions")
{
    auto g11 = SuperalgebraId::gl(1, 1);
    CHECK(orbit_dimension(g11, enumerate_iso_sets(g11, 1)[0].roots) == 1);
    auto g22 = SuperalgebraId::gl(2, 2);
    auto top = w_orbits_on_iso_sets(g22, 2);
    for (auto &o : top)
        CHECK(o.dimension == 4);
    CHECK(w_orbits_on_iso_sets(g22, 1).size() == 2);
    CHECK(orbit_counts(SuperalgebraId::gl(3, 3)) == std::vector<std::size_t>{1, 2, 3, 4});
    for (auto &o : w_orbits_on_iso_sets(SuperalgebraId::gl(3, 3), 3))
        CHECK(o.dimension == 9);
    auto o54 = SuperalgebraId::osp(5, 4);
    for (auto &o : w_orbits_on_iso_sets(o54, 2))
        CHECK(o.dimension == 10);
}

TEST_CASE("codimension")
{
    auto g21 = SuperalgebraId::gl(2, 1);
    CHECK(orbit_codimension(g21, {}) == 2);
    CHECK(orbit_codimension(g21, enumerate_iso_sets(g21, 1)[0].roots) == 0);
    CHECK(orbit_codimension(SuperalgebraId::gl(2, 2), {}) == 4);
    CHECK_THROWS_AS(orbit_codimension(SuperalgebraId::osp(3, 2), {}), domain_error);
}

TEST_CASE("exceptional algebras have two orbits")
{
    for (auto alg : {SuperalgebraId::d21a(1, 2), SuperalgebraId::g3(), SuperalgebraId::f4()}) {
        CHECK(defect_by_enumeration(alg) == 1);
        CHECK(w_orbits_on_iso_sets(alg, 0).size() + w_orbits_on_iso_sets(alg, 1).size() == 2);
    }
    CHECK(w_orbits_on_iso_sets(SuperalgebraId::d21a(1, 2), 1)[0].dimension == 4);
    CHECK(w_orbits_on_iso_sets(SuperalgebraId::g3(), 1)[0].dimension == 7);
    CHECK(w_orbits_on_iso_sets(SuperalgebraId::f4(), 1)[0].dimension == 8);
}

TEST_CASE("osp(2l|2n) top orbit splits")
{
    CHECK(w_orbits_on_iso_sets(SuperalgebraId::osp(6, 6), 3).size() == 2);
    CHECK(w_orbits_on_iso_sets(SuperalgebraId::osp(4, 4), 2).size() == 2);
    CHECK(w_orbits_on_iso_sets(SuperalgebraId::osp(2, 2), 1).size() == 2);
    CHECK(w_orbits_on_iso_sets(SuperalgebraId::osp(4, 2), 1).size() == 1);
    CHECK(w_orbits_on_iso_sets(SuperalgebraId::osp(5, 4), 2).size() == 1);
}

TEST_CASE("p(n) orbits and g_x")
{
    CHECK(orbit_counts(SuperalgebraId::pn(4)) == std::vector<std::size_t>{1, 3, 6, 3, 1});
    for (int n = 1; n <= 4; ++n)
        for (auto &o : p_orbit_representatives(n)) {
            auto rg = rank_and_gx(SuperalgebraId::pn(n), o.representative);
            auto ex = p_gx_explicit(n, o.representative);
            CHECK(rg.rank == o.r + 2 * o.s);
            CHECK(ex.rank_on_standard == rg.rank);
            const int rest = n - rg.rank;
            CHECK(ex.gx_even_dim == rest * rest);
            CHECK(ex.gx_odd_dim == rest * rest);
            CHECK(rg.gx == SuperalgebraId::pn(rest));
        }
}

TEST_CASE("rank and g_x for the other families")
{
    auto g = SuperalgebraId::gl(3, 2);
    auto A = enumerate_iso_sets(g, 2)[0].roots;
    CHECK(rank_and_gx(g, A).gx == SuperalgebraId::gl(1, 0));
    auto o = SuperalgebraId::osp(6, 4);
    CHECK(rank_and_gx(o, enumerate_iso_sets(o, 1)[0].roots).gx == SuperalgebraId::osp(4, 2));
    CHECK(rank_and_gx(SuperalgebraId::f4(), enumerate_iso_sets(SuperalgebraId::f4(), 1)[0].roots).gx ==
          SuperalgebraId::sl(3, 0));
    CHECK_THROWS_AS(rank_and_gx(SuperalgebraId::gl(1, 1), enumerate_iso_sets(SuperalgebraId::gl(2, 2), 2)[0].roots),
                    domain_error);
}
