// Iso-sets of odd roots, their W-orbits, defect, rank, g_x and the orbit
// dimensions of the self-commuting cone.
#pragma once

#include "algebra_core.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

namespace dsf {

struct IsoSet {
    std::vector<std::size_t> idx; // indices into roots(alg).odd, increasing
    std::vector<Weight> roots;
    friend bool operator==(const IsoSet &a, const IsoSet &b) { return a.idx == b.idx; }
};

namespace detail {

inline bool contains_root(const std::vector<Root> &rs, const Weight &w)
{
    for (auto &r : rs)
        if (r.w == w)
            return true;
    return false;
}

inline std::size_t weight_rank(const std::vector<Weight> &ws)
{
    if (ws.empty())
        return 0;
    std::vector<std::vector<Rational>> rows;
    for (auto &w : ws) {
        std::vector<Rational> r;
        for (std::size_t i = 0; i < w.rank(); ++i)
            r.push_back(w[i].twice);
        rows.push_back(std::move(r));
    }
    return rank_of(rows, ws[0].rank());
}

} // namespace detail

// Adding beta to a partial iso-set keeps the pairwise condition: no sum of
// two elements of (A + beta) u -(A + beta) lying in Delta_1 is an even root.
inline bool iso_compatible(const RootSystem &rs, const std::vector<Weight> &A, const Weight &beta)
{
    std::vector<Weight> signed_set;
    for (auto &a : A) {
        signed_set.push_back(a);
        signed_set.push_back(-a);
    }
    std::vector<Weight> mine{beta, -beta};
    auto odd = [&](const Weight &w) { return detail::contains_root(rs.odd, w); };
    for (auto &b : mine) {
        if (!odd(b))
            continue;
        if (detail::contains_root(rs.even, b + b))
            return false;
        for (auto &a : signed_set)
            if (odd(a) && detail::contains_root(rs.even, a + b))
                return false;
    }
    return true;
}

// Any root in the span of A lies in A u -A.
inline bool span_closed(const RootSystem &rs, const std::vector<Weight> &A)
{
    const std::size_t r = detail::weight_rank(A);
    auto check = [&](const std::vector<Root> &list) {
        for (auto &x : list) {
            std::vector<Weight> ext = A;
            ext.push_back(x.w);
            if (detail::weight_rank(ext) == r) {
                bool in = false;
                for (auto &a : A)
                    if (a == x.w || a == -x.w)
                        in = true;
                if (!in)
                    return false;
            }
        }
        return true;
    };
    return check(rs.even) && check(rs.odd);
}

inline std::vector<IsoSet> enumerate_iso_sets(const SuperalgebraId &alg, std::size_t k)
{
    const RootSystem rs = roots(alg);
    std::vector<IsoSet> out;
    IsoSet cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (cur.idx.size() == k) {
            if (alg.is_basic() && !span_closed(rs, cur.roots))
                throw std::logic_error("iso-set whose span contains a root outside +-A");
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < rs.odd.size(); ++i) {
            const Weight &b = rs.odd[i].w;
            if (!iso_compatible(rs, cur.roots, b))
                continue;
            cur.roots.push_back(b);
            if (detail::weight_rank(cur.roots) == cur.roots.size()) {
                cur.idx.push_back(i);
                rec(i + 1);
                cur.idx.pop_back();
            }
            cur.roots.pop_back();
        }
    };
    rec(0);
    return out;
}

inline int defect(const SuperalgebraId &alg)
{
    switch (alg.family) {
    case Family::GL:
    case Family::SL: return std::min(alg.m, alg.n);
    case Family::OSP: return std::min(alg.m / 2, alg.n);
    case Family::P: return alg.n;
    case Family::Q: return alg.n / 2;
    case Family::D21a:
    case Family::G3:
    case Family::F4: return 1;
    }
    return 0;
}

inline int defect_by_enumeration(const SuperalgebraId &alg)
{
    int k = 0;
    while (!enumerate_iso_sets(alg, static_cast<std::size_t>(k + 1)).empty())
        ++k;
    return k;
}

// ---------------------------------------------------------------- orbits

struct OrbitDescriptor {
    IsoSet representative;
    std::size_t size = 0;
    std::optional<int> dimension;
};

// A-perp inside Delta_1, via the form; basic classical only.
inline std::vector<Weight> perp_by_form(const SuperalgebraId &alg, const std::vector<Weight> &A)
{
    auto g = gram(alg);
    std::vector<Weight> r;
    for (auto &x : roots(alg).odd) {
        bool ok = true;
        for (auto &b : A)
            if (sgn(form_with(g, x.w, b)) != 0)
                ok = false;
        if (ok)
            r.push_back(x.w);
    }
    return r;
}

// A-perp as the common kernel of the coroots of A.
inline std::vector<Weight> perp_by_coroots(const SuperalgebraId &alg, const std::vector<Weight> &A)
{
    std::vector<std::vector<Rational>> hs;
    for (auto &b : A)
        hs.push_back(coroot(alg, b));
    std::vector<Weight> r;
    for (auto &x : roots(alg).odd) {
        bool ok = true;
        for (auto &h : hs)
            if (sgn(pairing(x.w, h)) != 0)
                ok = false;
        if (ok)
            r.push_back(x.w);
    }
    return r;
}

inline std::size_t checked_perp_size(const SuperalgebraId &alg, const std::vector<Weight> &A)
{
    if (!alg.is_basic())
        throw domain_error(alg.name() + " has no invariant form on roots");
    auto f = perp_by_form(alg, A);
    auto c = perp_by_coroots(alg, A);
    if (f != c)
        throw std::logic_error("form and coroot descriptions of A-perp differ");
    return f.size();
}

inline int orbit_dimension(const SuperalgebraId &alg, const std::vector<Weight> &A)
{
    std::size_t n1 = roots(alg).odd.size();
    std::size_t perp = checked_perp_size(alg, A);
    return static_cast<int>((n1 - perp) / 2 + A.size());
}

inline bool all_odd_isotropic(const SuperalgebraId &alg)
{
    if (!alg.is_basic())
        return false;
    for (auto &r : roots(alg).odd)
        if (!r.isotropic)
            return false;
    return true;
}

inline int orbit_codimension(const SuperalgebraId &alg, const std::vector<Weight> &A)
{
    if (!all_odd_isotropic(alg))
        throw domain_error(alg.name() + " has non-isotropic odd roots; codimension formula does not apply");
    std::size_t perp = checked_perp_size(alg, A);
    return static_cast<int>(perp / 2) - static_cast<int>(A.size());
}

inline std::vector<OrbitDescriptor> w_orbits_on_iso_sets(const SuperalgebraId &alg, std::size_t k)
{
    const RootSystem rs = roots(alg);
    auto sets = enumerate_iso_sets(alg, k);
    std::map<Weight, std::size_t> root_index;
    for (std::size_t i = 0; i < rs.odd.size(); ++i)
        root_index[rs.odd[i].w] = i;
    std::map<std::vector<std::size_t>, std::size_t> set_index;
    for (std::size_t i = 0; i < sets.size(); ++i)
        set_index[sets[i].idx] = i;

    std::vector<std::size_t> parent(sets.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (auto &g : weyl_generators(alg))
        for (std::size_t i = 0; i < sets.size(); ++i) {
            std::vector<std::size_t> img;
            for (auto &b : sets[i].roots) {
                auto it = root_index.find(g.apply(b));
                if (it == root_index.end())
                    throw std::logic_error("Weyl group does not preserve the odd roots");
                img.push_back(it->second);
            }
            std::sort(img.begin(), img.end());
            auto jt = set_index.find(img);
            if (jt == set_index.end())
                throw std::logic_error("Weyl group does not preserve iso-sets");
            std::size_t a = find(i), b = find(jt->second);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<std::size_t, OrbitDescriptor> orbits;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        auto &o = orbits[find(i)];
        if (o.size == 0)
            o.representative = sets[i];
        ++o.size;
    }
    std::vector<OrbitDescriptor> out;
    for (auto &[r, o] : orbits) {
        if (alg.is_basic())
            o.dimension = orbit_dimension(alg, o.representative.roots);
        out.push_back(o);
    }
    return out;
}

// ---------------------------------------------------------------- rank and g_x

struct RankGx {
    int rank = 0;
    SuperalgebraId gx;
};

// Number of roots of the form 2 eps_i in a p(n) iso-set.
inline int p_long_roots(const std::vector<Weight> &A)
{
    int s = 0;
    for (auto &b : A)
        for (std::size_t i = 0; i < b.ne; ++i)
            if (b.eps(i) == Half(2))
                ++s;
    return s;
}

inline RankGx rank_and_gx(const SuperalgebraId &alg, const std::vector<Weight> &A)
{
    const int k = static_cast<int>(A.size());
    if (k > defect(alg))
        throw domain_error("iso-set larger than the defect of " + alg.name());
    switch (alg.family) {
    case Family::GL: return {k, SuperalgebraId::gl(alg.m - k, alg.n - k)};
    case Family::SL: return {k, SuperalgebraId::sl(alg.m - k, alg.n - k)};
    case Family::OSP: return {k, SuperalgebraId::osp(alg.m - 2 * k, 2 * (alg.n - k))};
    case Family::P: {
        int r = 2 * k - p_long_roots(A);
        if (r > alg.n)
            throw domain_error("rank exceeds n for " + alg.name());
        return {r, SuperalgebraId::pn(alg.n - r)};
    }
    case Family::Q: return {k, SuperalgebraId::qn(std::max(1, alg.n - 2 * k))};
    case Family::D21a:
        if (k == 0)
            return {0, alg};
        return {1, SuperalgebraId::gl(1, 0)};
    case Family::G3:
        if (k == 0)
            return {0, alg};
        return {1, SuperalgebraId::sl(2, 0)};
    case Family::F4:
        if (k == 0)
            return {0, alg};
        return {1, SuperalgebraId::sl(3, 0)};
    }
    throw std::logic_error("unreachable");
}

struct POrbit {
    int r = 0, s = 0;
    std::vector<Weight> representative;
};

// (r, s) with r + 2s <= n and the iso-set {2 eps_1..2 eps_r} together with
// -eps_{r+2j-1} - eps_{r+2j} for j = 1..s.
inline std::vector<POrbit> p_orbit_representatives(int n)
{
    if (n < 1)
        throw domain_error("p(n) needs n >= 1");
    std::vector<POrbit> out;
    for (int s = 0; 2 * s <= n; ++s)
        for (int r = 0; r + 2 * s <= n; ++r) {
            POrbit o{r, s, {}};
            const std::size_t N = static_cast<std::size_t>(n);
            for (int i = 0; i < r; ++i)
                o.representative.push_back(unit_eps(N, 0, i, 2));
            for (int j = 0; j < s; ++j)
                o.representative.push_back(-unit_eps(N, 0, r + 2 * j) - unit_eps(N, 0, r + 2 * j + 1));
            out.push_back(o);
        }
    std::sort(out.begin(), out.end(), [](const POrbit &a, const POrbit &b) {
        return std::tie(a.r, a.s) < std::tie(b.r, b.s);
    });
    return out;
}

// ---------------------------------------------------------------- explicit p(n)

// p(n) inside gl(n|n): [[A, B], [C, -A^t]] with B symmetric and C skew.
struct PMatrixModel {
    int n = 0;
    std::vector<Matrix> basis;
    std::vector<int> parity;

    explicit PMatrixModel(int n_) : n(n_)
    {
        const std::size_t N = 2 * static_cast<std::size_t>(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Matrix m(N, N);
                m(i, j) = 1;
                m(n + j, n + i) = -1;
                basis.push_back(m);
                parity.push_back(0);
            }
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                basis.push_back(root_vector(unit_eps(n, 0, i) + unit_eps(n, 0, j)));
                parity.push_back(1);
            }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                basis.push_back(root_vector(-unit_eps(n, 0, i) - unit_eps(n, 0, j)));
                parity.push_back(1);
            }
    }

    // x_{eps_i+eps_j} = E_{i,n+j} + E_{j,n+i}; x_{-eps_i-eps_j} = E_{n+i,j} - E_{n+j,i}
    Matrix root_vector(const Weight &b) const
    {
        const std::size_t N = 2 * static_cast<std::size_t>(n);
        Matrix m(N, N);
        std::vector<std::size_t> idx;
        int sign = 0;
        for (std::size_t i = 0; i < b.ne; ++i)
            for (int c = 0; c < std::abs(b.eps(i).as_int()); ++c) {
                idx.push_back(i);
                sign = b.eps(i).as_int() > 0 ? 1 : -1;
            }
        if (idx.size() != 2)
            throw domain_error("not an odd root of p(n): " + b.str());
        std::size_t i = idx[0], j = idx[1];
        if (sign > 0) {
            m(i, n + j) += 1;
            m(j, n + i) += 1;
        } else {
            if (i == j)
                throw domain_error("not an odd root of p(n): " + b.str());
            m(n + i, j) += 1;
            m(n + j, i) -= 1;
        }
        return m;
    }

    // coordinates of a matrix of p(n) in the basis, as a flat vector of entries
    std::vector<Rational> flatten(const Matrix &m) const
    {
        std::vector<Rational> v;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                v.push_back(m(i, j));
        return v;
    }
};

struct PGxReport {
    int rank_on_standard = 0;
    int gx_even_dim = 0, gx_odd_dim = 0;
};

// Rank of x on the standard module and the superdimension of
// ker(ad x) / im(ad x) for x = sum of root vectors of A.
inline PGxReport p_gx_explicit(int n, const std::vector<Weight> &A)
{
    PMatrixModel M(n);
    const std::size_t N = 2 * static_cast<std::size_t>(n);
    Matrix x(N, N);
    for (auto &b : A)
        x = x + M.root_vector(b);
    PGxReport rep;
    rep.rank_on_standard = static_cast<int>(rank_of(x));
    // ad x (y) = x y - (-1)^{|y|} y x, since x is odd
    auto ad = [&](std::size_t k) {
        Matrix y = M.basis[k];
        Matrix r = M.parity[k] ? x * y + y * x : x * y - y * x;
        return M.flatten(r);
    };
    const std::size_t dim = M.basis.size();
    std::vector<std::vector<Rational>> basis_rows;
    for (auto &b : M.basis)
        basis_rows.push_back(M.flatten(b));
    for (int par = 0; par < 2; ++par) {
        // kernel of ad x on the parity-par part, image from the other part
        std::vector<std::vector<Rational>> imgs_from_par, imgs_into_par;
        std::size_t cnt = 0;
        for (std::size_t k = 0; k < dim; ++k) {
            if (M.parity[k] == par) {
                imgs_from_par.push_back(ad(k));
                ++cnt;
            } else
                imgs_into_par.push_back(ad(k));
        }
        std::size_t rk_from = imgs_from_par.empty() ? 0 : rank_of(imgs_from_par, N * N);
        std::size_t rk_into = imgs_into_par.empty() ? 0 : rank_of(imgs_into_par, N * N);
        int d = static_cast<int>(cnt - rk_from - rk_into);
        (par == 0 ? rep.gx_even_dim : rep.gx_odd_dim) = d;
    }
    return rep;
}

} // namespace dsf
