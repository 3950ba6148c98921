// Explicit modules as exact matrices, square-zero odd operators and DS_x as
// kernel modulo image.
#pragma once

#include "char_ring.hpp"
#include "diagram_calculus.hpp"
#include "iso_geometry.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace dsf {

struct BasisVector {
    Weight weight;
    int parity = 0;
};

struct ExplicitModule {
    SuperalgebraId alg;
    std::vector<BasisVector> basis;
    std::map<std::string, Matrix> actions;
    std::map<std::string, int> gen_parity;

    std::size_t dim() const { return basis.size(); }

    SuperCharacter supercharacter() const
    {
        SuperCharacter::Terms t;
        for (auto &b : basis)
            t.push_back({b.weight, b.parity ? -1 : 1});
        return SuperCharacter::from_unsorted(std::move(t));
    }

    long long sdim() const
    {
        long long s = 0;
        for (auto &b : basis)
            s += b.parity ? -1 : 1;
        return s;
    }

    // Odd generators flip parity, even ones preserve it.
    void check_homogeneous() const
    {
        for (auto &[g, X] : actions) {
            if (X.rows() != dim() || X.cols() != dim())
                throw domain_error("action of " + g + " has the wrong size");
            int p = gen_parity.at(g);
            for (std::size_t i = 0; i < dim(); ++i)
                for (std::size_t j = 0; j < dim(); ++j)
                    if (sgn(X(i, j)) != 0 && ((basis[i].parity + basis[j].parity + p) & 1))
                        throw domain_error("action of " + g + " is not parity homogeneous");
        }
    }
};

inline constexpr std::size_t kMaxOracleDim = 4096;

// ---------------------------------------------------------------- gl(m|n)

inline std::string gl_gen(int a, int b) { return "E_" + std::to_string(a + 1) + "_" + std::to_string(b + 1); }

inline int gl_index_parity(const SuperalgebraId &alg, int a) { return a < alg.m ? 0 : 1; }

inline Weight gl_basis_weight(const SuperalgebraId &alg, int a)
{
    const std::size_t m = static_cast<std::size_t>(alg.m), n = static_cast<std::size_t>(alg.n);
    return a < alg.m ? unit_eps(m, n, a) : unit_delta(m, n, a - alg.m);
}

inline void require_gl(const SuperalgebraId &alg)
{
    if (alg.family != Family::GL)
        throw domain_error("explicit modules are built for gl(m|n); got " + alg.name());
}

inline ExplicitModule standard_module(const SuperalgebraId &alg)
{
    require_gl(alg);
    const int N = alg.m + alg.n;
    if (N < 1)
        throw domain_error("standard module needs m + n >= 1");
    ExplicitModule M;
    M.alg = alg;
    for (int a = 0; a < N; ++a)
        M.basis.push_back({gl_basis_weight(alg, a), gl_index_parity(alg, a)});
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            Matrix X(N, N);
            X(a, b) = 1;
            M.actions[gl_gen(a, b)] = X;
            M.gen_parity[gl_gen(a, b)] = (gl_index_parity(alg, a) + gl_index_parity(alg, b)) & 1;
        }
    return M;
}

// X (v (x) w) = Xv (x) w + (-1)^{|X||v|} v (x) Xw
inline ExplicitModule tensor(const ExplicitModule &A, const ExplicitModule &B)
{
    if (!(A.alg == B.alg) || A.gen_parity != B.gen_parity)
        throw domain_error("tensor factors must be modules over the same algebra");
    if (A.dim() * B.dim() > kMaxOracleDim)
        throw domain_error("tensor product exceeds " + std::to_string(kMaxOracleDim) + " dimensions");
    ExplicitModule M;
    M.alg = A.alg;
    M.gen_parity = A.gen_parity;
    const std::size_t da = A.dim(), db = B.dim();
    for (auto &u : A.basis)
        for (auto &v : B.basis)
            M.basis.push_back({u.weight + v.weight, (u.parity + v.parity) & 1});
    for (auto &[g, XA] : A.actions) {
        const Matrix &XB = B.actions.at(g);
        const int p = A.gen_parity.at(g);
        Matrix X(da * db, da * db);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < db; ++j) {
                const std::size_t col = i * db + j;
                for (std::size_t k = 0; k < da; ++k)
                    if (sgn(XA(k, i)) != 0)
                        X(k * db + j, col) += XA(k, i);
                const int s = (p && A.basis[i].parity) ? -1 : 1;
                for (std::size_t k = 0; k < db; ++k)
                    if (sgn(XB(k, j)) != 0)
                        X(i * db + k, col) += s * XB(k, j);
            }
        M.actions[g] = X;
    }
    return M;
}

// (X f)(v) = -(-1)^{|X||f|} f(Xv): on the dual basis D_ij = -(-1)^{|X||j|} X_ji
inline ExplicitModule dual(const ExplicitModule &A)
{
    ExplicitModule M;
    M.alg = A.alg;
    M.gen_parity = A.gen_parity;
    for (auto &u : A.basis)
        M.basis.push_back({-u.weight, u.parity});
    const std::size_t d = A.dim();
    for (auto &[g, X] : A.actions) {
        const int p = A.gen_parity.at(g);
        Matrix D(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (sgn(X(j, i)) != 0)
                    D(i, j) = ((p && A.basis[j].parity) ? 1 : -1) * X(j, i);
        M.actions[g] = D;
    }
    return M;
}

// One-dimensional module Ber^a: E_ii acts by a on the even block and by -a
// on the odd block.
inline ExplicitModule berezinian_power(const SuperalgebraId &alg, int a, int parity = 0)
{
    require_gl(alg);
    const int N = alg.m + alg.n;
    ExplicitModule M;
    M.alg = alg;
    Weight w(alg.m, alg.n);
    for (int i = 0; i < alg.m; ++i)
        w.eps(i) = Half(a);
    for (int j = 0; j < alg.n; ++j)
        w.delta(j) = Half(-a);
    M.basis.push_back({w, parity & 1});
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            Matrix X(1, 1);
            if (x == y)
                X(0, 0) = x < alg.m ? a : -a;
            M.actions[gl_gen(x, y)] = X;
            M.gen_parity[gl_gen(x, y)] = (gl_index_parity(alg, x) + gl_index_parity(alg, y)) & 1;
        }
    return M;
}

// rho([X, Y]) = [rho X, rho Y] for all matrix units.
inline bool gl_relations_hold(const ExplicitModule &M)
{
    require_gl(M.alg);
    const int N = M.alg.m + M.alg.n;
    const std::size_t d = M.dim();
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int e = 0; e < N; ++e) {
                    const Matrix &X = M.actions.at(gl_gen(a, b));
                    const Matrix &Y = M.actions.at(gl_gen(c, e));
                    const int px = M.gen_parity.at(gl_gen(a, b)), py = M.gen_parity.at(gl_gen(c, e));
                    Matrix lhs = (px && py) ? X * Y + Y * X : X * Y - Y * X;
                    Matrix rhs(d, d);
                    if (b == c)
                        rhs = rhs + M.actions.at(gl_gen(a, e));
                    if (e == a)
                        rhs = rhs - Rational((px && py) ? -1 : 1) * M.actions.at(gl_gen(c, b));
                    if (!(lhs == rhs))
                        return false;
                }
    // Cartan acts diagonally by the stated weights
    for (int a = 0; a < N; ++a) {
        const Matrix &H = M.actions.at(gl_gen(a, a));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Rational want = i == j ? M.basis[i].weight[static_cast<std::size_t>(a)].to_rational() : Rational(0);
                if (H(i, j) != want)
                    return false;
            }
    }
    return true;
}

// ---------------------------------------------------------------- Kac modules

namespace detail {

// Simple gl(k)-module for k <= 2, as weights and matrix units.
struct SmallGl {
    std::vector<std::vector<Half>> weights;
    std::vector<std::vector<Matrix>> E; // E[a][b]
};

inline SmallGl small_gl_simple(const std::vector<Half> &hw)
{
    SmallGl L;
    const std::size_t k = hw.size();
    if (k == 1) {
        L.weights = {hw};
        Matrix X(1, 1);
        X(0, 0) = hw[0].to_rational();
        L.E = {{X}};
        return L;
    }
    if (k != 2)
        throw domain_error("Kac modules are built for gl(m|n) with m, n <= 2");
    Half d2 = hw[0] - hw[1];
    if (!d2.is_integer() || d2.as_int() < 0)
        throw domain_error("highest weight is not dominant for gl(2)");
    const int d = d2.as_int();
    const std::size_t D = static_cast<std::size_t>(d + 1);
    L.E.assign(2, std::vector<Matrix>(2, Matrix(D, D)));
    for (int i = 0; i <= d; ++i) {
        L.weights.push_back({hw[0] - Half(i), hw[1] + Half(i)});
        L.E[0][0](i, i) = (hw[0] - Half(i)).to_rational();
        L.E[1][1](i, i) = (hw[1] + Half(i)).to_rational();
        if (i < d)
            L.E[1][0](i + 1, i) = 1;
        if (i > 0)
            L.E[0][1](i - 1, i) = i * (d - i + 1);
    }
    return L;
}

using KacVec = std::map<std::pair<std::uint32_t, std::size_t>, Rational>;

// x_t (x_s1 ... x_sk) for s1 < ... < sk, as sign and mask.
inline std::optional<std::pair<int, std::uint32_t>> lwedge(int t, std::uint32_t mask)
{
    if (mask >> t & 1U)
        return std::nullopt;
    int below = std::popcount(mask & ((1U << t) - 1U));
    return std::pair{below % 2 ? -1 : 1, mask | (1U << t)};
}

inline KacVec lwedge(int t, const KacVec &v)
{
    KacVec r;
    for (auto &[key, c] : v)
        if (auto w = lwedge(t, key.first))
            r[{w->second, key.second}] += w->first * c;
    return r;
}

inline void prune(KacVec &v)
{
    for (auto it = v.begin(); it != v.end();)
        it = sgn(it->second) == 0 ? v.erase(it) : std::next(it);
}

} // namespace detail

// K(lambda) = Lambda(g_{-1}) (x) L_0(lambda) with g_{+1} killing L_0(lambda).
inline ExplicitModule kac_module_explicit(const SuperalgebraId &alg, const Weight &lambda)
{
    require_gl(alg);
    const int m = alg.m, n = alg.n;
    if (m < 1 || n < 1 || m > 2 || n > 2)
        throw domain_error("explicit Kac modules are built for gl(m|n) with 1 <= m, n <= 2");
    auto LA = detail::small_gl_simple(lambda.eps_vec());
    auto LB = detail::small_gl_simple(lambda.delta_vec());
    const std::size_t da = LA.weights.size(), db = LB.weights.size(), d0 = da * db;
    const int N = m + n, nodd = m * n;
    const std::uint32_t masks = 1U << nodd;
    if (masks * d0 > kMaxOracleDim)
        throw domain_error("Kac module exceeds " + std::to_string(kMaxOracleDim) + " dimensions");

    // odd generator t = q*m + p is E_{m+q, p}, of weight delta_q - eps_p
    auto odd_weight = [&](int t) {
        return unit_delta(m, n, t / m) - unit_eps(m, n, t % m);
    };
    auto l0_act = [&](int a, int b, std::size_t v) {
        std::vector<std::pair<std::size_t, Rational>> r;
        const std::size_t i = v / db, j = v % db;
        if (a < m && b < m) {
            for (std::size_t k = 0; k < da; ++k)
                if (sgn(LA.E[a][b](k, i)) != 0)
                    r.push_back({k * db + j, LA.E[a][b](k, i)});
        } else {
            for (std::size_t k = 0; k < db; ++k)
                if (sgn(LB.E[a - m][b - m](k, j)) != 0)
                    r.push_back({i * db + k, LB.E[a - m][b - m](k, j)});
        }
        return r;
    };
    // product x_{seq[0]} ... x_{seq[k-1]} applied to mask-free vector (0, v)
    auto product = [&](const std::vector<int> &seq, detail::KacVec v) {
        for (auto it = seq.rbegin(); it != seq.rend(); ++it)
            v = detail::lwedge(*it, v);
        return v;
    };
    auto bits = [&](std::uint32_t mask) {
        std::vector<int> s;
        for (int t = 0; t < nodd; ++t)
            if (mask >> t & 1U)
                s.push_back(t);
        return s;
    };
    // even E_ab on a basis element: derivation on the wedge part plus L_0 action
    std::function<detail::KacVec(int, int, std::uint32_t, std::size_t)> even_act =
        [&](int a, int b, std::uint32_t mask, std::size_t v) {
            detail::KacVec r;
            auto seq = bits(mask);
            for (std::size_t s = 0; s < seq.size(); ++s) {
                const int t = seq[s], p = t % m, q = t / m;
                // [E_ab, E_{m+q,p}] = d_{b,m+q} E_{a,p} - d_{a,p} E_{m+q,b}
                auto replace = [&](int t2, const Rational &c) {
                    auto s2 = seq;
                    s2[s] = t2;
                    for (auto &[k, x] : product(s2, {{{0U, v}, Rational(1)}}))
                        r[k] += c * x;
                };
                if (b == m + q && a >= m)
                    replace((a - m) * m + p, 1);
                if (a == p && b < m)
                    replace(q * m + b, -1);
            }
            for (auto &[w, c] : l0_act(a, b, v))
                r[{mask, w}] += c;
            detail::prune(r);
            return r;
        };

    ExplicitModule M;
    M.alg = alg;
    for (std::uint32_t mask = 0; mask < masks; ++mask)
        for (std::size_t v = 0; v < d0; ++v) {
            Weight w(m, n);
            for (int i = 0; i < m; ++i)
                w.eps(i) = LA.weights[v / db][i];
            for (int j = 0; j < n; ++j)
                w.delta(j) = LB.weights[v % db][j];
            for (int t : bits(mask))
                w = w + odd_weight(t);
            M.basis.push_back({w, std::popcount(mask) & 1});
        }
    auto index = [&](std::uint32_t mask, std::size_t v) { return mask * d0 + v; };
    const std::size_t D = M.dim();

    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            Matrix X(D, D);
            const int pa = gl_index_parity(alg, a), pb = gl_index_parity(alg, b);
            for (std::uint32_t mask = 0; mask < masks; ++mask)
                for (std::size_t v = 0; v < d0; ++v) {
                    detail::KacVec out;
                    if (pa == pb) {
                        out = even_act(a, b, mask, v);
                    } else if (pa == 1) {
                        out = detail::lwedge((a - m) * m + b, detail::KacVec{{{mask, v}, Rational(1)}});
                    } else {
                        // y x_s1..x_sk v = sum_i (-1)^{i-1} x_s1..x_s{i-1} [y, x_si] x_s{i+1}..x_sk v
                        auto seq = bits(mask);
                        for (std::size_t s = 0; s < seq.size(); ++s) {
                            const int t = seq[s], p = t % m, q = t / m;
                            std::vector<int> pre(seq.begin(), seq.begin() + static_cast<long>(s));
                            std::uint32_t suffix = 0;
                            for (std::size_t u = s + 1; u < seq.size(); ++u)
                                suffix |= 1U << seq[u];
                            const Rational sign = s % 2 ? -1 : 1;
                            // [E_ab, E_{m+q,p}] = d_{b,m+q} E_{a,p} + d_{p,a} E_{m+q,b}
                            auto add_h = [&](int ha, int hb) {
                                for (auto &[k, c] : product(pre, even_act(ha, hb, suffix, v)))
                                    out[k] += sign * c;
                            };
                            if (b == m + q)
                                add_h(a, p);
                            if (p == a)
                                add_h(m + q, b);
                        }
                        detail::prune(out);
                    }
                    for (auto &[k, c] : out)
                        X(index(k.first, k.second), index(mask, v)) += c;
                }
            M.actions[gl_gen(a, b)] = X;
            M.gen_parity[gl_gen(a, b)] = (pa + pb) & 1;
        }
    return M;
}

// ---------------------------------------------------------------- p(n)

inline std::string p_gen(const Weight &root) { return "x" + root.str(); }

// Standard p(n)-module C^{n|n}: e_i of weight eps_i even, e_{n+i} of weight
// -eps_i odd; odd root vectors and the diagonal Cartan.
inline ExplicitModule p_standard_module(int n)
{
    PMatrixModel P(n);
    auto alg = SuperalgebraId::pn(n);
    const std::size_t N = static_cast<std::size_t>(n);
    ExplicitModule M;
    M.alg = alg;
    for (int i = 0; i < n; ++i)
        M.basis.push_back({unit_eps(N, 0, i), 0});
    for (int i = 0; i < n; ++i)
        M.basis.push_back({-unit_eps(N, 0, i), 1});
    for (int i = 0; i < n; ++i) {
        Matrix H(2 * N, 2 * N);
        H(i, i) = 1;
        H(n + i, n + i) = -1;
        std::string g = "h_" + std::to_string(i + 1);
        M.actions[g] = H;
        M.gen_parity[g] = 0;
    }
    for (auto &r : roots(alg).odd) {
        M.actions[p_gen(r.w)] = P.root_vector(r.w);
        M.gen_parity[p_gen(r.w)] = 1;
    }
    return M;
}

// ---------------------------------------------------------------- odd operators and DS

struct OddOperator {
    Matrix x;
    std::vector<Weight> iso;
    std::vector<Rational> coeffs;
};

inline std::string root_generator(const SuperalgebraId &alg, const Weight &beta)
{
    if (alg.family == Family::P)
        return p_gen(beta);
    require_gl(alg);
    auto e = nonzero_eps(beta);
    auto d = nonzero_delta(beta);
    if (e.size() != 1 || d.size() != 1)
        throw domain_error("not an odd root of " + alg.name() + ": " + beta.str());
    const int i = static_cast<int>(e[0]), j = alg.m + static_cast<int>(d[0]);
    if (beta.eps(e[0]) == Half(1) && beta.delta(d[0]) == Half(-1))
        return gl_gen(i, j);
    if (beta.eps(e[0]) == Half(-1) && beta.delta(d[0]) == Half(1))
        return gl_gen(j, i);
    throw domain_error("not an odd root of " + alg.name() + ": " + beta.str());
}

inline void require_square_zero(const Matrix &x)
{
    if (!(x * x).is_zero())
        throw domain_error("odd operator does not square to zero");
}

inline OddOperator odd_operator(const ExplicitModule &M, const std::vector<Weight> &iso,
                                std::vector<Rational> coeffs = {})
{
    if (coeffs.empty())
        coeffs.assign(iso.size(), Rational(1));
    if (coeffs.size() != iso.size())
        throw domain_error("one coefficient per root is required");
    OddOperator op{Matrix(M.dim(), M.dim()), iso, coeffs};
    for (std::size_t i = 0; i < iso.size(); ++i) {
        if (sgn(coeffs[i]) == 0)
            throw domain_error("coefficients must be nonzero");
        op.x = op.x + coeffs[i] * M.actions.at(root_generator(M.alg, iso[i]));
    }
    require_square_zero(op.x);
    return op;
}

// Small random nonzero integer coefficients.
inline std::vector<Rational> random_coefficients(std::size_t k, std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> d(1, 5), s(0, 1);
    std::vector<Rational> c;
    for (std::size_t i = 0; i < k; ++i)
        c.push_back(Rational(s(rng) ? d(rng) : -d(rng)));
    return c;
}

// Ker x / Im x, graded by the projected weight and parity.
struct DSExplicit {
    std::map<std::pair<Weight, int>, std::size_t> dims;

    std::size_t dim() const
    {
        std::size_t s = 0;
        for (auto &[k, d] : dims)
            s += d;
        return s;
    }
    long long sdim() const
    {
        long long s = 0;
        for (auto &[k, d] : dims)
            s += (k.second ? -1 : 1) * static_cast<long long>(d);
        return s;
    }
    SuperCharacter supercharacter() const
    {
        SuperCharacter::Terms t;
        for (auto &[k, d] : dims)
            t.push_back({k.first, (k.second ? -1 : 1) * static_cast<long long>(d)});
        return SuperCharacter::from_unsorted(std::move(t));
    }
};

// Coordinates touched by the roots of the operator are dropped.
inline Weight project_off(const Weight &w, const std::vector<Weight> &iso)
{
    std::vector<bool> drop(w.rank(), false);
    for (auto &b : iso)
        for (std::size_t i = 0; i < b.rank(); ++i)
            if (b[i].twice != 0)
                drop[i] = true;
    std::vector<Half> e, d;
    for (std::size_t i = 0; i < w.ne; ++i)
        if (!drop[i])
            e.push_back(w.eps(i));
    for (std::size_t j = 0; j < w.nd; ++j)
        if (!drop[w.ne + j])
            d.push_back(w.delta(j));
    return Weight(e, d);
}

inline DSExplicit ds_explicit(const ExplicitModule &M, const OddOperator &op)
{
    require_square_zero(op.x);
    std::map<Weight, std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < M.dim(); ++i)
        blocks[project_off(M.basis[i].weight, op.iso)].push_back(i);
    DSExplicit out;
    for (auto &[w, idx] : blocks) {
        std::vector<std::size_t> by_par[2];
        for (auto i : idx)
            by_par[M.basis[i].parity].push_back(i);
        auto rank_from = [&](const std::vector<std::size_t> &cols) {
            if (cols.empty())
                return std::size_t{0};
            return rank_of(op.x.submatrix(idx, cols));
        };
        const std::size_t r0 = rank_from(by_par[0]), r1 = rank_from(by_par[1]);
        for (int p = 0; p < 2; ++p) {
            std::size_t d = by_par[p].size() - (p ? r1 : r0) - (p ? r0 : r1);
            if (d)
                out.dims[{w, p}] = d;
        }
    }
    return out;
}

// ---------------------------------------------------------------- sub- and quotient modules

inline bool spans_submodule(const ExplicitModule &M, const std::vector<std::size_t> &sub)
{
    std::vector<bool> in(M.dim(), false);
    for (auto i : sub)
        in[i] = true;
    for (auto &[g, X] : M.actions)
        for (auto j : sub)
            for (std::size_t i = 0; i < M.dim(); ++i)
                if (!in[i] && sgn(X(i, j)) != 0)
                    return false;
    return true;
}

inline ExplicitModule restrict_to(const ExplicitModule &M, const std::vector<std::size_t> &idx)
{
    ExplicitModule R;
    R.alg = M.alg;
    R.gen_parity = M.gen_parity;
    for (auto i : idx)
        R.basis.push_back(M.basis[i]);
    for (auto &[g, X] : M.actions)
        R.actions[g] = X.submatrix(idx, idx);
    return R;
}

struct ShortExactSequence {
    ExplicitModule sub, total, quotient;
};

inline ShortExactSequence split_by_submodule(const ExplicitModule &M, const std::vector<std::size_t> &sub)
{
    if (!spans_submodule(M, sub))
        throw domain_error("basis subset is not a submodule");
    std::vector<bool> in(M.dim(), false);
    for (auto i : sub)
        in[i] = true;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < M.dim(); ++i)
        if (!in[i])
            rest.push_back(i);
    return {restrict_to(M, sub), M, restrict_to(M, rest)};
}

// ---------------------------------------------------------------- sl(1|1)

// C^{1|1} with z = 0 and x, y acting by the same nilpotent matrix.
inline ExplicitModule sl11_nonprojective_module()
{
    ExplicitModule M;
    M.alg.family = Family::SL;
    M.alg.m = 1;
    M.alg.n = 1;
    M.basis = {{Weight(1, 1), 0}, {Weight(1, 1), 1}};
    Matrix N(2, 2);
    N(0, 1) = 1;
    M.actions = {{"x", N}, {"y", N}, {"z", Matrix(2, 2)}};
    M.gen_parity = {{"x", 1}, {"y", 1}, {"z", 0}};
    return M;
}

inline OddOperator operator_from(const ExplicitModule &M, const std::vector<std::pair<std::string, Rational>> &combo)
{
    OddOperator op{Matrix(M.dim(), M.dim()), {}, {}};
    for (auto &[g, c] : combo) {
        if (M.gen_parity.at(g) != 1)
            throw domain_error(g + " is not odd");
        op.x = op.x + c * M.actions.at(g);
        op.coeffs.push_back(c);
    }
    require_square_zero(op.x);
    return op;
}

// ---------------------------------------------------------------- cross-checks

struct VerifyReport {
    bool pass = false;
    std::string what;
    SuperCharacter explicit_side, predicted;
};

inline VerifyReport verify_against_calculus(const ExplicitModule &M, const OddOperator &op,
                                            const SuperCharacter &predicted, std::string what = {})
{
    VerifyReport r;
    r.what = std::move(what);
    r.explicit_side = ds_explicit(M, op).supercharacter();
    r.predicted = predicted;
    r.pass = r.explicit_side == r.predicted;
    return r;
}

// Explicit DS against the restriction of the module's own supercharacter.
inline VerifyReport verify_restriction(const ExplicitModule &M, const OddOperator &op, std::string what = {})
{
    auto pred = ds_restrict(M.supercharacter(), restriction_for(M.alg, op.iso));
    auto r = verify_against_calculus(M, op, pred, std::move(what));
    r.pass = r.pass && ds_explicit(M, op).sdim() == M.sdim();
    return r;
}

// ---------------------------------------------------------------- standard suite

struct OracleSuiteReport {
    long checks = 0;
    long failures = 0;
    std::vector<std::string> lines;

    void record(bool ok, const std::string &what)
    {
        ++checks;
        if (!ok) {
            ++failures;
            lines.push_back("FAIL " + what);
        }
    }
    bool ok() const { return failures == 0; }
};

inline std::string iso_text(const std::vector<Weight> &iso)
{
    std::string s = "{";
    for (std::size_t i = 0; i < iso.size(); ++i)
        s += (i ? ", " : "") + iso[i].str();
    return s + "}";
}

// V, V (x) V and V (x) V* over gl(m|n) for 1 <= m, n <= max_mn, every iso-set
// up to max_rank with coefficients from rng (all ones at rank 1); Kac
// modules of gl(1|1) and gl(2|1) at a few weights, which vanish under DS_x
// for x in g_{-1}, and for every x when typical.
inline OracleSuiteReport oracle_suite(int max_mn, int max_rank, std::uint64_t seed)
{
    OracleSuiteReport rep;
    std::mt19937_64 rng(seed);
    for (int m = 1; m <= max_mn; ++m)
        for (int n = 1; n <= max_mn; ++n) {
            auto alg = SuperalgebraId::gl(m, n);
            auto V = standard_module(alg);
            std::vector<std::pair<std::string, ExplicitModule>> mods{
                {"V", V}, {"V(x)V", tensor(V, V)}, {"V(x)V*", tensor(V, dual(V))}};
            for (auto &[name, M] : mods)
                rep.record(gl_relations_hold(M), name + " over " + alg.name() + " is a representation");
            for (int k = 1; k <= std::min({m, n, max_rank}); ++k)
                for (auto &A : enumerate_iso_sets(alg, static_cast<std::size_t>(k))) {
                    auto coeffs = k == 1 ? std::vector<Rational>{} : random_coefficients(A.roots.size(), rng);
                    for (auto &[name, M] : mods) {
                        auto op = odd_operator(M, A.roots, coeffs);
                        rep.record(verify_restriction(M, op).pass,
                                   name + " over " + alg.name() + " at " + iso_text(A.roots));
                    }
                    // (V (x) V)_x = V_x (x) V_x on characters
                    auto vx = ds_explicit(V, odd_operator(V, A.roots, coeffs)).supercharacter();
                    auto vvx = ds_explicit(mods[1].second, odd_operator(mods[1].second, A.roots, coeffs)).supercharacter();
                    rep.record(vvx == vx * vx, "monoidality over " + alg.name() + " at " + iso_text(A.roots));
                }
        }
    std::vector<std::pair<SuperalgebraId, std::vector<Weight>>> kac{
        {SuperalgebraId::gl(1, 1), {Weight::ints({0}, {0}), Weight::ints({2}, {-2}), Weight::ints({3}, {1})}},
        {SuperalgebraId::gl(2, 1),
         {Weight::ints({0, 0}, {0}), Weight::ints({2, 0}, {-2}), Weight::ints({1, -1}, {1}), Weight::ints({3, 1}, {2})}}};
    for (auto &[alg, ws] : kac)
        for (auto &lam : ws) {
            auto K = kac_module_explicit(alg, lam);
            const std::string tag = "K" + lam.str() + " over " + alg.name();
            rep.record(gl_relations_hold(K), tag + " is a representation");
            rep.record(K.supercharacter() == kac_supercharacter(alg, lam), tag + " has character k(lambda)");
            for (auto &A : enumerate_iso_sets(alg, 1)) {
                auto op = odd_operator(K, A.roots);
                auto ds = ds_explicit(K, op);
                rep.record(ds.supercharacter().is_zero() && verify_restriction(K, op).pass,
                           tag + " has zero DS character at " + iso_text(A.roots));
                const bool lowering = A.roots[0].delta(nonzero_delta(A.roots[0])[0]) == Half(1);
                if (lowering || atypicality(alg, lam) == 0)
                    rep.record(ds.dim() == 0, tag + " has DS = 0 at " + iso_text(A.roots));
            }
        }
    return rep;
}

} // namespace dsf
