// Root data, invariant forms, Weyl groups, rho vectors and dominance for the
// supported classical Lie superalgebras.
#pragma once

#include "numeric.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dsf {

inline constexpr std::size_t kMaxRank = 24;

// Exact weight in the eps/delta coordinates of a Cartan dual.
struct Weight {
    std::uint8_t ne = 0, nd = 0;
    std::array<Half, kMaxRank> c{};

    Weight() = default;
    Weight(std::size_t n_eps, std::size_t n_delta)
    {
        if (n_eps + n_delta > kMaxRank)
            throw domain_error("weight rank exceeds " + std::to_string(kMaxRank));
        ne = static_cast<std::uint8_t>(n_eps);
        nd = static_cast<std::uint8_t>(n_delta);
    }
    Weight(const std::vector<Half> &eps, const std::vector<Half> &delta) : Weight(eps.size(), delta.size())
    {
        std::copy(eps.begin(), eps.end(), c.begin());
        std::copy(delta.begin(), delta.end(), c.begin() + ne);
    }
    static Weight ints(const std::vector<int> &eps, const std::vector<int> &delta = {})
    {
        return Weight(std::vector<Half>(eps.begin(), eps.end()), std::vector<Half>(delta.begin(), delta.end()));
    }

    std::size_t rank() const { return ne + nd; }
    Half &operator[](std::size_t i) { return c[i]; }
    Half operator[](std::size_t i) const { return c[i]; }
    Half &eps(std::size_t i) { return c[i]; }
    Half eps(std::size_t i) const { return c[i]; }
    Half &delta(std::size_t j) { return c[ne + j]; }
    Half delta(std::size_t j) const { return c[ne + j]; }

    std::vector<Half> eps_vec() const { return {c.begin(), c.begin() + ne}; }
    std::vector<Half> delta_vec() const { return {c.begin() + ne, c.begin() + ne + nd}; }

    bool is_zero() const
    {
        for (std::size_t i = 0; i < rank(); ++i)
            if (c[i].twice != 0)
                return false;
        return true;
    }
    bool is_integral() const
    {
        for (std::size_t i = 0; i < rank(); ++i)
            if (!c[i].is_integer())
                return false;
        return true;
    }

    Weight operator-() const
    {
        Weight w = *this;
        for (std::size_t i = 0; i < rank(); ++i)
            w.c[i] = -w.c[i];
        return w;
    }
    Weight &operator+=(const Weight &o)
    {
        same_shape(o);
        for (std::size_t i = 0; i < rank(); ++i)
            c[i] += o.c[i];
        return *this;
    }
    Weight &operator-=(const Weight &o)
    {
        same_shape(o);
        for (std::size_t i = 0; i < rank(); ++i)
            c[i] -= o.c[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight &b) { return a += b; }
    friend Weight operator-(Weight a, const Weight &b) { return a -= b; }
    friend Weight operator*(int k, Weight a)
    {
        for (std::size_t i = 0; i < a.rank(); ++i)
            a.c[i] = k * a.c[i];
        return a;
    }

    friend bool operator==(const Weight &, const Weight &) = default;
    friend auto operator<=>(const Weight &a, const Weight &b)
    {
        if (auto r = a.ne <=> b.ne; r != 0)
            return r;
        if (auto r = a.nd <=> b.nd; r != 0)
            return r;
        for (std::size_t i = 0; i < a.rank(); ++i)
            if (auto r = a.c[i] <=> b.c[i]; r != 0)
                return r;
        return std::strong_ordering::equal;
    }

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < ne; ++i)
            s += (i ? "," : "") + c[i].str();
        s += "|";
        for (std::size_t j = 0; j < nd; ++j)
            s += (j ? "," : "") + c[ne + j].str();
        return s + ")";
    }

  private:
    void same_shape(const Weight &o) const
    {
        if (ne != o.ne || nd != o.nd)
            throw std::invalid_argument("weights from different lattices");
    }
};

struct WeightHash {
    std::size_t operator()(const Weight &w) const noexcept
    {
        std::uint64_t h = 1469598103934665603ull ^ (std::uint64_t(w.ne) << 8 | w.nd);
        for (std::size_t i = 0; i < w.rank(); ++i) {
            h ^= static_cast<std::uint32_t>(w.c[i].twice);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

inline Weight unit_eps(std::size_t ne, std::size_t nd, std::size_t i, int k = 1)
{
    Weight w(ne, nd);
    w.eps(i) = Half(k);
    return w;
}
inline Weight unit_delta(std::size_t ne, std::size_t nd, std::size_t j, int k = 1)
{
    Weight w(ne, nd);
    w.delta(j) = Half(k);
    return w;
}

enum class Family { GL, SL, OSP, P, Q, D21a, G3, F4 };

// osp is stored as (m, n) for osp(m|2n); D(2|1;a) as a = p/q.
struct SuperalgebraId {
    Family family = Family::GL;
    int m = 0, n = 0;
    long p = 0, q = 1;

    static SuperalgebraId gl(int m, int n) { return make(Family::GL, m, n); }
    static SuperalgebraId sl(int m, int n) { return make(Family::SL, m, n); }
    // osp(m|n2), n2 even
    static SuperalgebraId osp(int m, int n2)
    {
        if (n2 % 2 != 0)
            throw domain_error("osp(m|2n) needs an even second parameter");
        return make(Family::OSP, m, n2 / 2);
    }
    static SuperalgebraId pn(int n) { return make(Family::P, 0, n); }
    static SuperalgebraId qn(int n) { return make(Family::Q, 0, n); }
    static SuperalgebraId d21a(long p, long q)
    {
        SuperalgebraId a;
        a.family = Family::D21a;
        a.p = p;
        a.q = q;
        a.validate();
        return a;
    }
    static SuperalgebraId g3() { return make(Family::G3, 0, 0); }
    static SuperalgebraId f4() { return make(Family::F4, 0, 0); }

    void validate() const
    {
        switch (family) {
        case Family::GL:
            if (m < 0 || n < 0)
                throw domain_error("gl(m|n) needs m,n >= 0");
            break;
        case Family::SL:
            if (m < 0 || n < 0 || m == n)
                throw domain_error("sl(m|n) is supported for m != n only");
            break;
        case Family::OSP:
            if (m < 0 || n < 0)
                throw domain_error("osp(m|2n) needs m,n >= 0");
            break;
        case Family::P:
            if (n < 0)
                throw domain_error(name() + ": n must be non-negative");
            break;
        case Family::Q:
            if (n < 1)
                throw domain_error(name() + ": n must be positive");
            break;
        case Family::D21a:
            if (!(p > 0 && q > 0 && p < q) || std::gcd(p, q) != 1)
                throw domain_error("D(2|1;a) needs a = p/q with 0 < a < 1 in lowest terms");
            break;
        case Family::G3:
        case Family::F4:
            break;
        }
        if (eps_rank() + delta_rank() > kMaxRank)
            throw domain_error(name() + " exceeds the supported rank");
    }

    std::string name() const
    {
        auto s = [](long v) { return std::to_string(v); };
        switch (family) {
        case Family::GL: return "gl(" + s(m) + "|" + s(n) + ")";
        case Family::SL: return "sl(" + s(m) + "|" + s(n) + ")";
        case Family::OSP: return "osp(" + s(m) + "|" + s(2 * n) + ")";
        case Family::P: return "p(" + s(n) + ")";
        case Family::Q: return "q(" + s(n) + ")";
        case Family::D21a: return "D(2|1;" + s(p) + "/" + s(q) + ")";
        case Family::G3: return "G(3)";
        case Family::F4: return "F(4)";
        }
        return "?";
    }

    std::size_t eps_rank() const
    {
        switch (family) {
        case Family::GL:
        case Family::SL: return static_cast<std::size_t>(m);
        case Family::OSP: return static_cast<std::size_t>(m / 2);
        case Family::P:
        case Family::Q: return static_cast<std::size_t>(n);
        case Family::D21a: return 3;
        case Family::G3: return 2;
        case Family::F4: return 3;
        }
        return 0;
    }
    std::size_t delta_rank() const
    {
        switch (family) {
        case Family::GL:
        case Family::SL:
        case Family::OSP: return static_cast<std::size_t>(n);
        case Family::G3:
        case Family::F4: return 1;
        default: return 0;
        }
    }
    std::size_t rank() const { return eps_rank() + delta_rank(); }
    Weight zero_weight() const { return Weight(eps_rank(), delta_rank()); }

    bool is_basic() const { return family != Family::P && family != Family::Q; }
    bool is_exceptional() const
    {
        return family == Family::D21a || family == Family::G3 || family == Family::F4;
    }
    Rational a_value() const { return Rational(p, q); }

    friend bool operator==(const SuperalgebraId &, const SuperalgebraId &) = default;
    friend auto operator<=>(const SuperalgebraId &, const SuperalgebraId &) = default;

  private:
    static SuperalgebraId make(Family f, int m, int n)
    {
        SuperalgebraId a;
        a.family = f;
        a.m = m;
        a.n = n;
        a.validate();
        return a;
    }
};

struct Root {
    Weight w;
    int parity = 0;
    bool isotropic = false;
    bool both_parities = false; // q(n): each root is even and odd
    friend bool operator==(const Root &, const Root &) = default;
};

struct RootSystem {
    std::vector<Root> even, odd;
};

// ---------------------------------------------------------------- forms

// Gram matrix of the invariant form on the coordinate basis.
inline std::vector<std::vector<Rational>> gram(const SuperalgebraId &alg)
{
    const std::size_t ne = alg.eps_rank(), nd = alg.delta_rank(), r = ne + nd;
    std::vector<std::vector<Rational>> g(r, std::vector<Rational>(r));
    switch (alg.family) {
    case Family::GL:
    case Family::SL:
    case Family::OSP:
        for (std::size_t i = 0; i < ne; ++i)
            g[i][i] = 1;
        for (std::size_t j = 0; j < nd; ++j)
            g[ne + j][ne + j] = -1;
        break;
    case Family::D21a: {
        Rational a = alg.a_value();
        g[0][0] = -(1 + a) / 2;
        g[1][1] = Rational(1, 2);
        g[2][2] = a / 2;
        break;
    }
    case Family::G3:
        g[0][0] = -2;
        g[1][1] = -2;
        g[0][1] = g[1][0] = 1;
        g[2][2] = 2;
        break;
    case Family::F4:
        g[0][0] = g[1][1] = g[2][2] = 1;
        g[3][3] = -3;
        break;
    case Family::P: throw domain_error("p(n) admits no nondegenerate invariant form");
    case Family::Q: throw domain_error("q(n): no invariant form on the Cartan dual is used");
    }
    for (auto &row : g)
        for (auto &x : row)
            x.canonicalize();
    return g;
}

inline Rational form_with(const std::vector<std::vector<Rational>> &g, const Weight &mu, const Weight &nu)
{
    Rational s = 0;
    for (std::size_t i = 0; i < mu.rank(); ++i) {
        if (mu[i].twice == 0)
            continue;
        for (std::size_t j = 0; j < nu.rank(); ++j)
            if (nu[j].twice != 0 && sgn(g[i][j]) != 0)
                s += g[i][j] * mu[i].to_rational() * nu[j].to_rational();
    }
    return s;
}

inline Rational form(const SuperalgebraId &alg, const Weight &mu, const Weight &nu)
{
    return form_with(gram(alg), mu, nu);
}

// Form used only to build reflections of the even Weyl group.
inline std::vector<std::vector<Rational>> even_gram(const SuperalgebraId &alg)
{
    if (alg.is_basic())
        return gram(alg);
    std::size_t r = alg.rank();
    std::vector<std::vector<Rational>> g(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i)
        g[i][i] = 1;
    return g;
}

// ---------------------------------------------------------------- roots

inline RootSystem roots(const SuperalgebraId &alg)
{
    const std::size_t ne = alg.eps_rank(), nd = alg.delta_rank();
    auto E = [&](std::size_t i, int k = 1) { return unit_eps(ne, nd, i, k); };
    auto D = [&](std::size_t j, int k = 1) { return unit_delta(ne, nd, j, k); };
    RootSystem rs;
    auto even = [&](const Weight &w) { rs.even.push_back({w, 0, false, false}); };
    auto odd = [&](const Weight &w) { rs.odd.push_back({w, 1, false, false}); };

    switch (alg.family) {
    case Family::GL:
    case Family::SL:
        for (std::size_t i = 0; i < ne; ++i)
            for (std::size_t j = 0; j < ne; ++j)
                if (i != j)
                    even(E(i) - E(j));
        for (std::size_t i = 0; i < nd; ++i)
            for (std::size_t j = 0; j < nd; ++j)
                if (i != j)
                    even(D(i) - D(j));
        for (std::size_t i = 0; i < ne; ++i)
            for (std::size_t j = 0; j < nd; ++j) {
                odd(E(i) - D(j));
                odd(D(j) - E(i));
            }
        break;
    case Family::OSP: {
        const bool odd_m = alg.m % 2 == 1;
        for (std::size_t i = 0; i < ne; ++i)
            for (std::size_t j = i + 1; j < ne; ++j)
                for (int s1 : {1, -1})
                    for (int s2 : {1, -1})
                        even(s1 * E(i) + s2 * E(j));
        if (odd_m)
            for (std::size_t i = 0; i < ne; ++i) {
                even(E(i));
                even(-E(i));
            }
        for (std::size_t i = 0; i < nd; ++i)
            for (std::size_t j = i + 1; j < nd; ++j)
                for (int s1 : {1, -1})
                    for (int s2 : {1, -1})
                        even(s1 * D(i) + s2 * D(j));
        for (std::size_t i = 0; i < nd; ++i) {
            even(D(i, 2));
            even(D(i, -2));
        }
        for (std::size_t i = 0; i < ne; ++i)
            for (std::size_t j = 0; j < nd; ++j)
                for (int s1 : {1, -1})
                    for (int s2 : {1, -1})
                        odd(s1 * E(i) + s2 * D(j));
        if (odd_m)
            for (std::size_t j = 0; j < nd; ++j) {
                odd(D(j));
                odd(-D(j));
            }
        break;
    }
    case Family::P:
        for (std::size_t i = 0; i < ne; ++i)
            for (std::size_t j = 0; j < ne; ++j)
                if (i != j)
                    even(E(i) - E(j));
        for (std::size_t i = 0; i < ne; ++i)
            for (std::size_t j = i; j < ne; ++j)
                odd(E(i) + E(j));
        for (std::size_t i = 0; i < ne; ++i)
            for (std::size_t j = i + 1; j < ne; ++j)
                odd(-E(i) - E(j));
        break;
    case Family::Q:
        for (std::size_t i = 0; i < ne; ++i)
            for (std::size_t j = 0; j < ne; ++j)
                if (i != j) {
                    even(E(i) - E(j));
                    rs.odd.push_back({E(i) - E(j), 1, false, true});
                }
        break;
    case Family::D21a:
        for (std::size_t i = 0; i < 3; ++i) {
            even(E(i, 2));
            even(E(i, -2));
        }
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1})
                    odd(s1 * E(0) + s2 * E(1) + s3 * E(2));
        break;
    case Family::G3: {
        // eps_3 = -eps_1 - eps_2
        std::vector<Weight> e = {E(0), E(1), -E(0) - E(1)};
        for (std::size_t i = 0; i < 3; ++i) {
            even(e[i]);
            even(-e[i]);
        }
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (i != j)
                    even(e[i] - e[j]);
        even(D(0, 2));
        even(D(0, -2));
        for (std::size_t i = 0; i < 3; ++i)
            for (int s1 : {1, -1})
                for (int s2 : {1, -1})
                    odd(s1 * e[i] + s2 * D(0));
        odd(D(0));
        odd(-D(0));
        break;
    }
    case Family::F4:
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                for (int s1 : {1, -1})
                    for (int s2 : {1, -1})
                        even(s1 * E(i) + s2 * E(j));
        for (std::size_t i = 0; i < 3; ++i) {
            even(E(i));
            even(-E(i));
        }
        even(D(0));
        even(-D(0));
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1})
                    for (int s4 : {1, -1}) {
                        Weight w(3, 1);
                        w[0] = Half::from_twice(s1);
                        w[1] = Half::from_twice(s2);
                        w[2] = Half::from_twice(s3);
                        w[3] = Half::from_twice(s4);
                        odd(w);
                    }
        break;
    }
    if (alg.is_basic()) {
        auto g = gram(alg);
        for (auto &r : rs.odd)
            r.isotropic = sgn(form_with(g, r.w, r.w)) == 0;
    }
    return rs;
}

// Coroot as a vector of t in the basis dual to the coordinates.
inline std::vector<Rational> coroot(const SuperalgebraId &alg, const Weight &alpha)
{
    std::size_t r = alg.rank();
    std::vector<Rational> h(r);
    if (alg.family == Family::Q) {
        // alpha = eps_i - eps_j  ->  h_i + h_j
        int hits = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (alpha[i].twice != 0) {
                h[i] = 1;
                ++hits;
            }
        if (hits != 2)
            throw domain_error("not a root of " + alg.name());
        return h;
    }
    if (alg.family == Family::P)
        throw domain_error("p(n): coroots are not defined via a form");
    auto g = gram(alg);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            h[i] += g[i][j] * alpha[j].to_rational();
    Rational n = form_with(g, alpha, alpha);
    if (sgn(n) != 0)
        for (auto &x : h)
            x = 2 * x / n;
    return h;
}

inline Rational pairing(const Weight &mu, const std::vector<Rational> &h)
{
    Rational s = 0;
    for (std::size_t i = 0; i < mu.rank(); ++i)
        if (mu[i].twice != 0)
            s += mu[i].to_rational() * h[i];
    return s;
}

// ---------------------------------------------------------------- Weyl group

// Integer matrix acting on coordinate vectors; signed permutations for the
// classical families, a genuine matrix for the G2 factor of G(3).
struct WeylElement {
    std::size_t dim = 0;
    std::vector<int> mat;
    int length = 0;

    static WeylElement identity(std::size_t d)
    {
        WeylElement w;
        w.dim = d;
        w.mat.assign(d * d, 0);
        for (std::size_t i = 0; i < d; ++i)
            w.mat[i * d + i] = 1;
        return w;
    }
    int at(std::size_t i, std::size_t j) const { return mat[i * dim + j]; }

    Weight apply(const Weight &mu) const
    {
        Weight r = mu;
        for (std::size_t i = 0; i < dim; ++i) {
            std::int32_t t = 0;
            for (std::size_t j = 0; j < dim; ++j)
                t += at(i, j) * mu[j].twice;
            r[i] = Half::from_twice(t);
        }
        return r;
    }
    // this * o
    WeylElement compose(const WeylElement &o) const
    {
        WeylElement r;
        r.dim = dim;
        r.mat.assign(dim * dim, 0);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = 0; k < dim; ++k)
                if (int a = at(i, k))
                    for (std::size_t j = 0; j < dim; ++j)
                        r.mat[i * dim + j] += a * o.at(k, j);
        r.length = -1;
        return r;
    }
    int sign() const { return length % 2 ? -1 : 1; }
    friend bool operator==(const WeylElement &a, const WeylElement &b) { return a.mat == b.mat; }
};

inline std::vector<Weight> simple_even_roots(const SuperalgebraId &alg)
{
    const std::size_t ne = alg.eps_rank(), nd = alg.delta_rank();
    auto E = [&](std::size_t i, int k = 1) { return unit_eps(ne, nd, i, k); };
    auto D = [&](std::size_t j, int k = 1) { return unit_delta(ne, nd, j, k); };
    std::vector<Weight> s;
    switch (alg.family) {
    case Family::GL:
    case Family::SL:
    case Family::P:
    case Family::Q:
        for (std::size_t i = 0; i + 1 < ne; ++i)
            s.push_back(E(i) - E(i + 1));
        for (std::size_t j = 0; j + 1 < nd; ++j)
            s.push_back(D(j) - D(j + 1));
        break;
    case Family::OSP:
        for (std::size_t i = 0; i + 1 < ne; ++i)
            s.push_back(E(i) - E(i + 1));
        if (alg.m % 2 == 1 && ne >= 1)
            s.push_back(E(ne - 1));
        if (alg.m % 2 == 0 && ne >= 2)
            s.push_back(E(ne - 2) + E(ne - 1));
        for (std::size_t j = 0; j + 1 < nd; ++j)
            s.push_back(D(j) - D(j + 1));
        if (nd >= 1)
            s.push_back(D(nd - 1, 2));
        break;
    case Family::D21a:
        for (std::size_t i = 0; i < 3; ++i)
            s.push_back(E(i, 2));
        break;
    case Family::G3:
        s.push_back(E(0));
        s.push_back(E(1) - E(0));
        s.push_back(D(0, 2));
        break;
    case Family::F4:
        s.push_back(E(0) - E(1));
        s.push_back(E(1) - E(2));
        s.push_back(E(2));
        s.push_back(D(0));
        break;
    }
    return s;
}

inline WeylElement reflection(const std::vector<std::vector<Rational>> &g, const Weight &alpha)
{
    std::size_t d = alpha.rank();
    Rational n = form_with(g, alpha, alpha);
    if (sgn(n) == 0)
        throw std::logic_error("reflection in an isotropic root");
    std::vector<Rational> ga(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            ga[i] += g[i][j] * alpha[j].to_rational();
    WeylElement w = WeylElement::identity(d);
    w.length = 1;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rational e = Rational(i == j ? 1 : 0) - 2 * alpha[i].to_rational() * ga[j] / n;
            e.canonicalize();
            if (e.get_den() != 1)
                throw std::logic_error("non-integral reflection matrix");
            w.mat[i * d + j] = static_cast<int>(e.get_num().get_si());
        }
    return w;
}

inline std::vector<WeylElement> weyl_generators(const SuperalgebraId &alg)
{
    auto g = even_gram(alg);
    std::vector<WeylElement> gens;
    for (auto &a : simple_even_roots(alg))
        gens.push_back(reflection(g, a));
    return gens;
}

// All elements of W with their lengths, by breadth-first closure.
inline std::vector<WeylElement> weyl_group(const SuperalgebraId &alg, std::size_t limit = 100000)
{
    auto gens = weyl_generators(alg);
    std::vector<WeylElement> all{WeylElement::identity(alg.rank())};
    std::set<std::vector<int>> seen{all[0].mat};
    for (std::size_t head = 0; head < all.size(); ++head)
        for (auto &s : gens) {
            WeylElement w = s.compose(all[head]);
            if (seen.insert(w.mat).second) {
                w.length = all[head].length + 1;
                all.push_back(std::move(w));
                if (all.size() > limit)
                    throw domain_error("Weyl group of " + alg.name() + " too large to enumerate");
            }
        }
    return all;
}

// ---------------------------------------------------------------- osp data

struct OspShape {
    int k = 0, t = 0, ell = 0;
};

inline OspShape osp_shape(const SuperalgebraId &alg)
{
    if (alg.family != Family::OSP)
        throw domain_error(alg.name() + " is not orthosymplectic");
    int t = alg.m - 2 * alg.n;
    if (t < 0 || t > 2)
        throw domain_error(alg.name() + " is not of the form osp(2k+t|2k), t in {0,1,2}");
    return {alg.n, t, t == 2 ? 1 : 0};
}

inline SuperalgebraId osp_principal(int k, int t) { return SuperalgebraId::osp(2 * k + t, 2 * k); }

// Principal-block data of a dominant weight: a_i = lambda_{delta_i}, sign xi
// (+1/-1, or 0 when the diagram carries no sign).
struct OspPrincipal {
    int k = 0, t = 0;
    std::vector<int> a;
    int xi = 0;
};

inline bool osp_needs_sign(int t, const std::vector<int> &a)
{
    if (a.empty())
        return false;
    if (t == 0)
        return a.back() != 0;
    if (t == 1)
        return a.back() == 0;
    return false;
}

// ---------------------------------------------------------------- rho

inline Weight rho(const SuperalgebraId &alg)
{
    const std::size_t ne = alg.eps_rank(), nd = alg.delta_rank();
    Weight r(ne, nd);
    switch (alg.family) {
    case Family::GL:
    case Family::SL:
        for (std::size_t i = 0; i < ne; ++i)
            r.eps(i) = Half(-static_cast<int>(i));
        for (std::size_t j = 0; j < nd; ++j)
            r.delta(j) = Half(alg.m - 1 - static_cast<int>(j));
        return r;
    case Family::OSP: {
        auto sh = osp_shape(alg);
        if (sh.t == 1) {
            for (std::size_t i = 0; i < ne; ++i)
                r.eps(i) = Half::from_twice(-1);
            for (std::size_t j = 0; j < nd; ++j)
                r.delta(j) = Half::from_twice(1);
        }
        return r;
    }
    case Family::P:
        for (std::size_t i = 0; i < ne; ++i)
            r.eps(i) = Half(static_cast<int>(i));
        return r;
    case Family::Q: return r;
    default: throw domain_error(alg.name() + ": no fixed Borel convention here");
    }
}

inline Weight osp_compose(int k, int t, const std::vector<int> &a, int xi)
{
    auto alg = osp_principal(k, t);
    Weight mu = alg.zero_weight();
    if (t == 0 || t == 2) {
        for (int i = 0; i < k; ++i) {
            mu.eps(i) = Half(a[i]);
            mu.delta(i) = Half(a[i]);
        }
        if (t == 0 && k > 0 && a[k - 1] != 0)
            mu.eps(k - 1) = Half(xi * a[k - 1]);
    } else {
        int s = k;
        for (int i = 0; i < k; ++i)
            if (a[i] == 0) {
                s = i;
                break;
            }
        for (int i = 0; i < k; ++i) {
            if (i < s) {
                mu.eps(i) = Half::from_twice(2 * a[i] + 1);
                mu.delta(i) = Half::from_twice(2 * a[i] + 1);
            } else if (i == s) {
                mu.eps(i) = Half::from_twice(xi);
                mu.delta(i) = Half::from_twice(1);
            } else {
                mu.eps(i) = Half::from_twice(-1);
                mu.delta(i) = Half::from_twice(1);
            }
        }
    }
    return mu - rho(alg);
}

inline std::optional<OspPrincipal> osp_decompose(const SuperalgebraId &alg, const Weight &lambda)
{
    auto sh = osp_shape(alg);
    if (lambda.ne != alg.eps_rank() || lambda.nd != alg.delta_rank())
        return std::nullopt;
    OspPrincipal d;
    d.k = sh.k;
    d.t = sh.t;
    for (int i = 0; i < sh.k; ++i) {
        Half x = lambda.delta(i);
        if (!x.is_integer() || x.as_int() < 0)
            return std::nullopt;
        d.a.push_back(x.as_int());
    }
    for (int i = 0; i + 1 < sh.k; ++i)
        if (!(d.a[i] > d.a[i + 1] || (d.a[i] == 0 && d.a[i + 1] == 0)))
            return std::nullopt;
    Weight mu = lambda + rho(alg);
    if (osp_needs_sign(sh.t, d.a)) {
        if (sh.t == 0) {
            Half e = mu.eps(sh.k - 1);
            d.xi = e == Half(d.a.back()) ? 1 : e == Half(-d.a.back()) ? -1 : 0;
        } else {
            int s = 0;
            while (d.a[s] != 0)
                ++s;
            Half e = mu.eps(s);
            d.xi = e.twice == 1 ? 1 : e.twice == -1 ? -1 : 0;
        }
        if (d.xi == 0)
            return std::nullopt;
    }
    if (osp_compose(d.k, d.t, d.a, d.xi) != lambda)
        return std::nullopt;
    return d;
}

// ---------------------------------------------------------------- dominance

inline bool is_dominant(const SuperalgebraId &alg, const Weight &lambda)
{
    if (lambda.ne != alg.eps_rank() || lambda.nd != alg.delta_rank())
        return false;
    switch (alg.family) {
    case Family::GL:
    case Family::SL: {
        if (!lambda.is_integral())
            return false;
        Weight mu = lambda + rho(alg);
        for (std::size_t i = 0; i + 1 < mu.ne; ++i)
            if (!(mu.eps(i) > mu.eps(i + 1)))
                return false;
        // b_j = -mu_delta_j strictly increasing
        for (std::size_t j = 0; j + 1 < mu.nd; ++j)
            if (!(mu.delta(j) > mu.delta(j + 1)))
                return false;
        return true;
    }
    case Family::OSP: return osp_decompose(alg, lambda).has_value();
    case Family::P: {
        if (!lambda.is_integral())
            return false;
        Weight mu = lambda + rho(alg);
        for (std::size_t i = 0; i + 1 < mu.ne; ++i)
            if (!(mu.eps(i) < mu.eps(i + 1)))
                return false;
        return true;
    }
    default: throw domain_error(alg.name() + ": dominance is only implemented for gl, osp and p");
    }
}

// Parity of a weight of the root lattice: sum of delta coefficients mod 2.
inline int weight_parity(const SuperalgebraId &alg, const Weight &mu)
{
    switch (alg.family) {
    case Family::GL:
    case Family::SL:
    case Family::OSP:
    case Family::P:
    case Family::G3: {
        int s = 0;
        for (std::size_t j = 0; j < mu.nd; ++j) {
            if (!mu.delta(j).is_integer())
                throw domain_error("weight_parity: non-integral delta part");
            s += mu.delta(j).as_int();
        }
        return ((s % 2) + 2) % 2;
    }
    default: throw domain_error(alg.name() + ": parity is not given by delta coefficients");
    }
}

// ---------------------------------------------------------------- distinguished Borel

struct PositiveSystem {
    std::vector<Weight> even, odd;
};

// Distinguished positive system (used for g0 characters and Kac modules).
// For p(n) the fixed Borel: even eps_j - eps_i (j>i), odd Delta(g^1).
inline PositiveSystem distinguished_positive(const SuperalgebraId &alg)
{
    const std::size_t ne = alg.eps_rank(), nd = alg.delta_rank();
    auto E = [&](std::size_t i, int k = 1) { return unit_eps(ne, nd, i, k); };
    auto D = [&](std::size_t j, int k = 1) { return unit_delta(ne, nd, j, k); };
    PositiveSystem ps;
    switch (alg.family) {
    case Family::GL:
    case Family::SL:
        for (std::size_t i = 0; i < ne; ++i)
            for (std::size_t j = i + 1; j < ne; ++j)
                ps.even.push_back(E(i) - E(j));
        for (std::size_t i = 0; i < nd; ++i)
            for (std::size_t j = i + 1; j < nd; ++j)
                ps.even.push_back(D(i) - D(j));
        for (std::size_t i = 0; i < ne; ++i)
            for (std::size_t j = 0; j < nd; ++j)
                ps.odd.push_back(E(i) - D(j));
        break;
    case Family::OSP: {
        const bool odd_m = alg.m % 2 == 1;
        for (std::size_t i = 0; i < ne; ++i)
            for (std::size_t j = i + 1; j < ne; ++j) {
                ps.even.push_back(E(i) - E(j));
                ps.even.push_back(E(i) + E(j));
            }
        if (odd_m)
            for (std::size_t i = 0; i < ne; ++i)
                ps.even.push_back(E(i));
        for (std::size_t i = 0; i < nd; ++i)
            for (std::size_t j = i + 1; j < nd; ++j) {
                ps.even.push_back(D(i) - D(j));
                ps.even.push_back(D(i) + D(j));
            }
        for (std::size_t i = 0; i < nd; ++i)
            ps.even.push_back(D(i, 2));
        for (std::size_t j = 0; j < nd; ++j) {
            for (std::size_t i = 0; i < ne; ++i) {
                ps.odd.push_back(D(j) - E(i));
                ps.odd.push_back(D(j) + E(i));
            }
            if (odd_m)
                ps.odd.push_back(D(j));
        }
        break;
    }
    case Family::P:
        for (std::size_t i = 0; i < ne; ++i)
            for (std::size_t j = i + 1; j < ne; ++j)
                ps.even.push_back(E(j) - E(i));
        for (std::size_t i = 0; i < ne; ++i)
            for (std::size_t j = i; j < ne; ++j)
                ps.odd.push_back(E(i) + E(j));
        break;
    default: throw domain_error(alg.name() + ": no distinguished Borel implemented");
    }
    return ps;
}

inline Weight half_sum(const std::vector<Weight> &ws, const Weight &zero)
{
    Weight s = zero;
    for (auto &w : ws)
        s += w;
    for (std::size_t i = 0; i < s.rank(); ++i) {
        if (s[i].twice % 2 != 0)
            throw std::logic_error("half sum leaves (1/2)Z");
        s[i] = Half::from_twice(s[i].twice / 2);
    }
    return s;
}

inline Weight rho_distinguished(const SuperalgebraId &alg)
{
    auto ps = distinguished_positive(alg);
    return half_sum(ps.even, alg.zero_weight()) - half_sum(ps.odd, alg.zero_weight());
}

// Half the sum of positive isotropic roots of the distinguished Borel.
inline Weight rho_iso(const SuperalgebraId &alg)
{
    auto ps = distinguished_positive(alg);
    auto g = gram(alg);
    std::vector<Weight> iso;
    for (auto &b : ps.odd)
        if (sgn(form_with(g, b, b)) == 0)
            iso.push_back(b);
    return half_sum(iso, alg.zero_weight());
}

// Dominance for g0 with respect to the distinguished even positive roots.
inline bool is_g0_dominant(const SuperalgebraId &alg, const Weight &lambda)
{
    if (lambda.ne != alg.eps_rank() || lambda.nd != alg.delta_rank())
        return false;
    auto g = even_gram(alg);
    for (auto &a : simple_even_roots(alg)) {
        if (alg.family == Family::P)
            continue;
        Rational v = 2 * form_with(g, lambda, a) / form_with(g, a, a);
        if (v.get_den() != 1 || sgn(v) < 0)
            return false;
    }
    if (alg.family == Family::P)
        for (std::size_t i = 0; i + 1 < lambda.ne; ++i)
            if (!(lambda.eps(i) <= lambda.eps(i + 1)) || !(lambda.eps(i + 1) - lambda.eps(i)).is_integer())
                return false;
    return true;
}

} // namespace dsf
