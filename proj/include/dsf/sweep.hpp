// Bounded sweeps: vanishing of ds on Kac supercharacters, purity and
// multiplicity of DS on simples, and agreement of bracketings.
#pragma once

#include "char_ring.hpp"
#include "ds_engine.hpp"

#include <functional>
#include <string>
#include <vector>

namespace dsf {

struct SweepReport {
    std::string what;
    long checked = 0;
    long violations = 0;
    std::vector<std::string> samples; // first few violations

    void fail(const std::string &s)
    {
        ++violations;
        if (samples.size() < 5)
            samples.push_back(s);
    }
    bool ok() const { return violations == 0; }
};

// Nonincreasing sequences of length len with entries twice-coded in
// [lo, hi] stepping by 2.
inline void for_each_nonincreasing(std::size_t len, int lo, int hi,
                                   const std::function<void(const std::vector<int> &)> &fn)
{
    std::vector<int> v(len);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int top) {
        if (i == len) {
            fn(v);
            return;
        }
        for (int x = top; x >= lo; x -= 2) {
            v[i] = x;
            rec(i + 1, x);
        }
    };
    rec(0, hi);
}

inline Weight weight_from_twice(const SuperalgebraId &alg, const std::vector<int> &e, const std::vector<int> &d)
{
    Weight w(alg.eps_rank(), alg.delta_rank());
    for (std::size_t i = 0; i < e.size(); ++i)
        w.eps(i) = Half::from_twice(e[i]);
    for (std::size_t j = 0; j < d.size(); ++j)
        w.delta(j) = Half::from_twice(d[j]);
    return w;
}

// Every weight with coordinates in [-bound, bound] satisfying keep. Integral
// weights always; for odd orthogonal osp also the spin weights with all eps
// coordinates in 1/2 + Z.
inline void for_each_bounded_weight(const SuperalgebraId &alg, int bound,
                                    const std::function<bool(const Weight &)> &keep,
                                    const std::function<void(const Weight &)> &fn)
{
    const std::size_t ne = alg.eps_rank(), nd = alg.delta_rank(), R = ne + nd;
    std::vector<int> offsets{0};
    if (alg.family == Family::OSP && alg.m % 2 == 1 && ne > 0)
        offsets.push_back(1);
    for (int off : offsets) {
        std::vector<int> c(R);
        auto lo = [&](std::size_t i) { return i < ne && off ? -2 * bound + 1 : -2 * bound; };
        auto hi = [&](std::size_t i) { return i < ne && off ? 2 * bound - 1 : 2 * bound; };
        for (std::size_t i = 0; i < R; ++i)
            c[i] = lo(i);
        while (true) {
            Weight w(ne, nd);
            for (std::size_t i = 0; i < R; ++i)
                w[i] = Half::from_twice(c[i]);
            if (keep(w))
                fn(w);
            std::size_t i = 0;
            while (i < R && c[i] == hi(i)) {
                c[i] = lo(i);
                ++i;
            }
            if (i == R)
                break;
            c[i] += 2;
        }
    }
}

// ds^1 k(lambda) = 0 for g0-dominant lambda (shifted by rho_iso when asked)
// with coordinates bounded by bound.
inline SweepReport kernel_sweep(const SuperalgebraId &alg, int bound, bool iso_shifted)
{
    SweepReport rep;
    rep.what = "ds1(k(lambda)) = 0 over " + alg.name() + (iso_shifted ? ", lambda in P+(g0) + rho_iso" : ", lambda in P+(g0)");
    if (alg.family != Family::GL && alg.family != Family::OSP)
        throw domain_error("kernel sweep over k(lambda) is implemented for gl and osp");
    CharContext cx(alg);
    const auto r1 = standard_restriction(alg, 1);
    const Weight shift = iso_shifted ? rho_iso(alg) : alg.zero_weight();
    const KacForm how = alg.family == Family::GL ? KacForm::Product : KacForm::Alternating;
    for_each_bounded_weight(
        alg, bound, [&](const Weight &w) { return is_g0_dominant(alg, w); },
        [&](const Weight &w) {
            const Weight lam = w + shift;
            ++rep.checked;
            if (!ds_restrict(kac_supercharacter(cx, lam, iso_shifted, how), r1).is_zero())
                rep.fail(lam.str());
        });
    return rep;
}

// p(n): ds^1 k'(lambda) = 0 and ds^2 thin(lambda) = 0.
inline SweepReport p_kernel_sweep(int n, int bound)
{
    auto alg = SuperalgebraId::pn(n);
    SweepReport rep;
    rep.what = "ds1(k'(lambda)) = 0 and ds2(thin(lambda)) = 0 over " + alg.name();
    CharContext cx(alg);
    const auto r1 = standard_restriction(alg, 1);
    const auto r2 = n >= 2 ? std::optional(standard_restriction(alg, 2)) : std::nullopt;
    for_each_bounded_weight(
        alg, bound, [&](const Weight &w) { return is_g0_dominant(alg, w); },
        [&](const Weight &w) {
            ++rep.checked;
            auto k = p_kac_supercharacters(cx, w);
            if (!ds_restrict(k.kprime, r1).is_zero())
                rep.fail("k' " + w.str());
            if (r2 && !ds_restrict(k.thin, *r2).is_zero())
                rep.fail("thin " + w.str());
        });
    return rep;
}

// Dominant weights with coordinates in [-bound, bound]: gl and p enumerate
// monotone sequences; osp keeps the principal-block weights.
inline void for_each_dominant(const SuperalgebraId &alg, int bound, const std::function<void(const Weight &)> &fn)
{
    const std::size_t ne = alg.eps_rank(), nd = alg.delta_rank();
    switch (alg.family) {
    case Family::GL:
        for_each_nonincreasing(ne, -2 * bound, 2 * bound, [&](const std::vector<int> &e) {
            for_each_nonincreasing(nd, -2 * bound, 2 * bound, [&](const std::vector<int> &d) {
                Weight w = weight_from_twice(alg, e, d);
                if (is_dominant(alg, w))
                    fn(w);
            });
        });
        break;
    case Family::P:
        for_each_nonincreasing(ne, -2 * bound, 2 * bound, [&](const std::vector<int> &e) {
            std::vector<int> r(e.rbegin(), e.rend());
            Weight w = weight_from_twice(alg, r, {});
            if (is_dominant(alg, w))
                fn(w);
        });
        break;
    case Family::OSP:
        for_each_nonincreasing(ne, -2 * bound, 2 * bound, [&](const std::vector<int> &e) {
            for_each_nonincreasing(nd, 0, 2 * bound, [&](const std::vector<int> &d) {
                Weight w = weight_from_twice(alg, e, d);
                if (is_dominant(alg, w))
                    fn(w);
            });
        });
        break;
    default: throw domain_error("dominant sweeps are implemented for gl, osp and p");
    }
}

// Every DS^1 output over dominant weights is pure with bounded multiplicity.
inline SweepReport purity_sweep(const SuperalgebraId &alg, int bound)
{
    SweepReport rep;
    rep.what = "purity and multiplicity of DS1 over " + alg.name();
    for_each_dominant(alg, bound, [&](const Weight &w) {
        ++rep.checked;
        auto R = ds1_simple(alg, w);
        if (!check_purity(R))
            rep.fail("impure " + w.str());
        else if (!check_multiplicity(R, alg.family))
            rep.fail("multiplicity " + w.str());
    });
    return rep;
}

// DS^r computed as DS^1 of DS^{r-1} and as DS^{r-1} of DS^1 agree.
inline bool bracketings_agree(const SimpleLabel &L, int r)
{
    return ds_r_simple(L, r, r) == ds_r_simple(L, r, 1);
}

} // namespace dsf
