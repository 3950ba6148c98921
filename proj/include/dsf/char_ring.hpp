// Supercharacters as finitely supported integer functions on the weight
// lattice; Weyl and Kac characters; restriction to t_x; superdimension and
// the order at zero.
#pragma once

#include "algebra_core.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace dsf {

// Terms are kept sorted by weight in decreasing lexicographic order, with no
// zero coefficients. Translation preserves the order, so multiplication by a
// binomial is a linear merge.
class SuperCharacter {
  public:
    using Term = std::pair<Weight, long long>;
    using Terms = std::vector<Term>;

    SuperCharacter() = default;
    static SuperCharacter monomial(const Weight &w, long long c = 1)
    {
        SuperCharacter f;
        if (c != 0)
            f.t_.push_back({w, c});
        return f;
    }
    // 1 - e^alpha
    static SuperCharacter one_minus(const Weight &alpha)
    {
        SuperCharacter f = monomial(Weight(alpha.ne, alpha.nd));
        f.add(alpha, -1);
        return f;
    }
    static SuperCharacter from_unsorted(Terms v)
    {
        std::sort(v.begin(), v.end(), [](const Term &a, const Term &b) { return a.first > b.first; });
        SuperCharacter f;
        f.t_.reserve(v.size());
        for (auto &x : v) {
            if (!f.t_.empty() && f.t_.back().first == x.first)
                f.t_.back().second = detail::checked_add(f.t_.back().second, x.second);
            else {
                if (!f.t_.empty() && f.t_.back().second == 0)
                    f.t_.pop_back();
                f.t_.push_back(std::move(x));
            }
        }
        if (!f.t_.empty() && f.t_.back().second == 0)
            f.t_.pop_back();
        return f;
    }

    void add(const Weight &w, long long c)
    {
        if (c == 0)
            return;
        auto it = std::lower_bound(t_.begin(), t_.end(), w, [](const Term &a, const Weight &x) { return a.first > x; });
        if (it != t_.end() && it->first == w) {
            it->second = detail::checked_add(it->second, c);
            if (it->second == 0)
                t_.erase(it);
        } else
            t_.insert(it, {w, c});
    }
    long long coeff(const Weight &w) const
    {
        auto it = std::lower_bound(t_.begin(), t_.end(), w, [](const Term &a, const Weight &x) { return a.first > x; });
        return it != t_.end() && it->first == w ? it->second : 0;
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const Terms &terms() const { return t_; }

    SuperCharacter &operator+=(const SuperCharacter &o)
    {
        *this = merge(*this, 1, o, 1);
        return *this;
    }
    SuperCharacter &operator-=(const SuperCharacter &o)
    {
        *this = merge(*this, 1, o, -1);
        return *this;
    }
    friend SuperCharacter operator+(const SuperCharacter &a, const SuperCharacter &b) { return merge(a, 1, b, 1); }
    friend SuperCharacter operator-(const SuperCharacter &a, const SuperCharacter &b) { return merge(a, 1, b, -1); }
    friend SuperCharacter operator-(const SuperCharacter &a) { return merge(SuperCharacter(), 1, a, -1); }
    friend SuperCharacter operator*(long long k, const SuperCharacter &a) { return merge(SuperCharacter(), 1, a, k); }
    friend SuperCharacter operator*(const SuperCharacter &a, const SuperCharacter &b)
    {
        const SuperCharacter &small = a.size() <= b.size() ? a : b;
        const SuperCharacter &big = a.size() <= b.size() ? b : a;
        SuperCharacter r;
        for (auto &[u, c] : small.t_)
            r = merge(r, 1, big.shifted(u), c);
        return r;
    }
    SuperCharacter shifted(const Weight &mu) const
    {
        SuperCharacter r;
        r.t_.reserve(size());
        for (auto &[w, c] : t_)
            r.t_.push_back({w + mu, c});
        return r;
    }
    // this * (1 - e^alpha)
    SuperCharacter times_one_minus(const Weight &alpha) const { return merge(*this, 1, shifted(alpha), -1); }

    friend bool operator==(const SuperCharacter &a, const SuperCharacter &b) { return a.t_ == b.t_; }

    std::string str() const
    {
        if (t_.empty())
            return "0";
        std::string s;
        for (auto &[w, c] : t_) {
            if (!s.empty())
                s += c < 0 ? " - " : " + ";
            else if (c < 0)
                s += "-";
            long long a = c < 0 ? -c : c;
            if (a != 1)
                s += std::to_string(a) + "*";
            s += "e" + w.str();
        }
        return s;
    }

  private:
    Terms t_;

    static SuperCharacter merge(const SuperCharacter &a, long long ka, const SuperCharacter &b, long long kb)
    {
        SuperCharacter r;
        if (ka == 0 && kb == 0)
            return r;
        r.t_.reserve(a.size() + b.size());
        auto i = a.t_.begin(), j = b.t_.begin();
        auto push = [&](const Weight &w, long long c) {
            if (c != 0)
                r.t_.push_back({w, c});
        };
        while (i != a.t_.end() || j != b.t_.end()) {
            if (j == b.t_.end() || (i != a.t_.end() && i->first > j->first)) {
                push(i->first, detail::checked_mul(ka, i->second));
                ++i;
            } else if (i == a.t_.end() || j->first > i->first) {
                push(j->first, detail::checked_mul(kb, j->second));
                ++j;
            } else {
                push(i->first, detail::checked_add(detail::checked_mul(ka, i->second), detail::checked_mul(kb, j->second)));
                ++i;
                ++j;
            }
        }
        return r;
    }
};

namespace detail {

// floor(a / b) for b != 0
inline std::int32_t floor_div(std::int32_t a, std::int32_t b)
{
    std::int32_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

} // namespace detail

// Exact quotient f / (1 - e^gamma). With alpha = -gamma each alpha-string is solved from its top
// end by cumulative sums; a string with nonzero total has no Laurent
// polynomial quotient and raises std::logic_error.
inline SuperCharacter divide_one_minus(const SuperCharacter &f, const Weight &gamma)
{
    const Weight alpha = -gamma;
    std::size_t piv = alpha.rank();
    for (std::size_t i = 0; i < alpha.rank(); ++i)
        if (alpha[i].twice != 0) {
            piv = i;
            break;
        }
    if (piv == alpha.rank())
        throw std::logic_error("division by 1 - e^0");
    // g(nu) - g(nu + alpha) = f(nu), so g(nu) = sum_{j>=0} f(nu + j alpha)
    struct Entry {
        Weight key;
        std::int32_t t;
        long long c;
    };
    std::vector<Entry> es;
    es.reserve(f.size());
    for (auto &[w, c] : f.terms()) {
        std::int32_t t = detail::floor_div(w[piv].twice, alpha[piv].twice);
        Weight key = w;
        for (std::size_t i = 0; i < w.rank(); ++i)
            key[i].twice -= t * alpha[i].twice;
        es.push_back({key, t, c});
    }
    std::sort(es.begin(), es.end(), [](const Entry &a, const Entry &b) {
        if (auto r = a.key <=> b.key; r != 0)
            return r < 0;
        return a.t > b.t;
    });
    SuperCharacter::Terms out;
    for (std::size_t b = 0; b < es.size();) {
        std::size_t e = b;
        while (e < es.size() && es[e].key == es[b].key)
            ++e;
        long long cum = 0;
        std::size_t k = b;
        for (std::int32_t t = es[b].t; t >= es[e - 1].t; --t) {
            if (k < e && es[k].t == t)
                cum = detail::checked_add(cum, es[k++].c);
            if (cum != 0) {
                Weight w = es[b].key;
                for (std::size_t i = 0; i < w.rank(); ++i)
                    w[i].twice += t * alpha[i].twice;
                out.push_back({w, cum});
            }
        }
        if (cum != 0)
            throw std::logic_error("inexact division by 1 - e^alpha");
        b = e;
    }
    return SuperCharacter::from_unsorted(std::move(out));
}

// ---------------------------------------------------------------- Weyl and Kac characters

// Data reused across many characters of one algebra.
struct CharContext {
    SuperalgebraId alg;
    std::vector<WeylElement> W;
    PositiveSystem pos;
    Weight rho0, rho;

    explicit CharContext(const SuperalgebraId &a) : alg(a), W(weyl_group(a)), pos(distinguished_positive(a))
    {
        rho0 = half_sum(pos.even, a.zero_weight());
        rho = rho0 - half_sum(pos.odd, a.zero_weight());
    }
};

// Character of the simple g0-module of highest weight lambda (distinguished
// even Borel), as an alternant quotient with exact division.
inline SuperCharacter weyl_character(const CharContext &cx, const Weight &lambda)
{
    if (!is_g0_dominant(cx.alg, lambda))
        throw domain_error("weight " + lambda.str() + " is not dominant for g0 of " + cx.alg.name());
    SuperCharacter::Terms t;
    Weight mu = lambda + cx.rho0;
    for (auto &w : cx.W)
        t.push_back({w.apply(mu) - cx.rho0, w.sign()});
    SuperCharacter a = SuperCharacter::from_unsorted(std::move(t));
    for (auto &alpha : cx.pos.even)
        a = divide_one_minus(a, -alpha);
    return a;
}

inline SuperCharacter weyl_character(const SuperalgebraId &alg, const Weight &lambda)
{
    return weyl_character(CharContext(alg), lambda);
}

// k(lambda) from the alternating sum with the sign (-1)^{l(w) + p(w rho - rho)}
// and R = prod(1 - e^{-alpha}) over even positive roots divided by the same over
// odd positive roots.
inline SuperCharacter kac_alternating(const CharContext &cx, const Weight &lambda)
{
    SuperCharacter::Terms t;
    Weight mu = lambda + cx.rho;
    for (auto &w : cx.W) {
        int s = w.sign();
        if (weight_parity(cx.alg, w.apply(cx.rho) - cx.rho))
            s = -s;
        t.push_back({w.apply(mu) - cx.rho, s});
    }
    SuperCharacter a = SuperCharacter::from_unsorted(std::move(t));
    for (auto &beta : cx.pos.odd)
        a = a.times_one_minus(-beta);
    for (auto &alpha : cx.pos.even)
        a = divide_one_minus(a, -alpha);
    return a;
}

// sch L0(lambda) * prod over odd negative roots of (1 - e^alpha)
inline SuperCharacter kac_product(const CharContext &cx, const Weight &lambda)
{
    SuperCharacter f = weyl_character(cx, lambda);
    for (auto &beta : cx.pos.odd)
        f = f.times_one_minus(-beta);
    return f;
}

enum class KacForm { Alternating, Product, Both };

// The virtual supercharacter k(lambda). With iso_shifted, lambda is taken in
// P+(g0) + rho_iso. The product form exists for gl only; Both computes the
// two forms and compares them.
inline SuperCharacter kac_supercharacter(const CharContext &cx, const Weight &lambda, bool iso_shifted = false,
                                         KacForm how = KacForm::Alternating)
{
    const auto &alg = cx.alg;
    if (alg.family != Family::GL && alg.family != Family::OSP)
        throw domain_error("k(lambda) is implemented for gl and osp");
    Weight base = iso_shifted ? lambda - rho_iso(alg) : lambda;
    if (!is_g0_dominant(alg, base))
        throw domain_error("weight " + base.str() + " is not dominant for g0 of " + alg.name());
    if (alg.family != Family::GL)
        how = KacForm::Alternating;
    if (how == KacForm::Product)
        return kac_product(cx, lambda);
    SuperCharacter alt = kac_alternating(cx, lambda);
    if (how == KacForm::Both && !(kac_product(cx, lambda) == alt))
        throw std::logic_error("product and alternating forms of k(lambda) disagree");
    return alt;
}

inline SuperCharacter kac_supercharacter(const SuperalgebraId &alg, const Weight &lambda, bool iso_shifted = false,
                                         KacForm how = KacForm::Alternating)
{
    return kac_supercharacter(CharContext(alg), lambda, iso_shifted, how);
}

struct PKac {
    SuperCharacter thin, kprime;
};

// Thin Kac supercharacter and k'(lambda) for p(n).
inline PKac p_kac_supercharacters(const CharContext &cx, const Weight &lambda)
{
    if (cx.alg.family != Family::P)
        throw domain_error("thin Kac modules are defined here for p(n)");
    const std::size_t n = cx.alg.eps_rank();
    SuperCharacter thin = weyl_character(cx, lambda);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            thin = thin.times_one_minus(-unit_eps(n, 0, i) - unit_eps(n, 0, j));
    SuperCharacter kp = thin;
    for (std::size_t i = 0; i < n; ++i)
        kp = kp.times_one_minus(-unit_eps(n, 0, i));
    return {thin, kp};
}

inline PKac p_kac_supercharacters(int n, const Weight &lambda)
{
    return p_kac_supercharacters(CharContext(SuperalgebraId::pn(n)), lambda);
}

// ---------------------------------------------------------------- restriction

// Coordinate projection t* -> t_x* dropping the coordinates paired by an
// iso-set.
struct RestrictionMap {
    SuperalgebraId source;
    std::vector<std::size_t> drop_eps, drop_delta;
    int rank = 0;

    std::size_t target_ne() const { return source.eps_rank() - drop_eps.size(); }
    std::size_t target_nd() const { return source.delta_rank() - drop_delta.size(); }

    Weight apply(const Weight &w) const
    {
        Weight r(target_ne(), target_nd());
        std::size_t k = 0;
        for (std::size_t i = 0; i < w.ne; ++i)
            if (std::find(drop_eps.begin(), drop_eps.end(), i) == drop_eps.end())
                r[k++] = w.eps(i);
        for (std::size_t j = 0; j < w.nd; ++j)
            if (std::find(drop_delta.begin(), drop_delta.end(), j) == drop_delta.end())
                r[k++] = w.delta(j);
        return r;
    }

    // target algebra g_x
    SuperalgebraId target() const
    {
        switch (source.family) {
        case Family::GL: return SuperalgebraId::gl(source.m - rank, source.n - rank);
        case Family::OSP: return SuperalgebraId::osp(source.m - 2 * rank, 2 * (source.n - rank));
        case Family::P: return SuperalgebraId::pn(source.n - rank);
        default: throw domain_error("restriction implemented for gl, osp and p");
        }
    }
};

inline std::vector<std::size_t> nonzero_eps(const Weight &w)
{
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < w.ne; ++i)
        if (w.eps(i).twice != 0)
            r.push_back(i);
    return r;
}
inline std::vector<std::size_t> nonzero_delta(const Weight &w)
{
    std::vector<std::size_t> r;
    for (std::size_t j = 0; j < w.nd; ++j)
        if (w.delta(j).twice != 0)
            r.push_back(j);
    return r;
}

// Restriction for x = sum of root vectors of an iso-set.
inline RestrictionMap restriction_for(const SuperalgebraId &alg, const std::vector<Weight> &iso)
{
    RestrictionMap m;
    m.source = alg;
    auto push = [](std::vector<std::size_t> &v, std::size_t i) {
        if (std::find(v.begin(), v.end(), i) != v.end())
            throw domain_error("roots of the iso-set share a coordinate");
        v.push_back(i);
    };
    for (auto &b : iso) {
        auto e = nonzero_eps(b);
        auto d = nonzero_delta(b);
        switch (alg.family) {
        case Family::GL:
        case Family::OSP:
            if (e.size() != 1 || d.size() != 1 || b.eps(e[0]).twice * b.eps(e[0]).twice != 4 ||
                b.delta(d[0]).twice * b.delta(d[0]).twice != 4)
                throw domain_error("not an isotropic root of " + alg.name() + ": " + b.str());
            push(m.drop_eps, e[0]);
            push(m.drop_delta, d[0]);
            m.rank += 1;
            break;
        case Family::P:
            if (e.size() == 1 && b.eps(e[0]) == Half(2)) {
                push(m.drop_eps, e[0]);
                m.rank += 1;
            } else if (e.size() == 2 && b.eps(e[0]) == b.eps(e[1]) && (b.eps(e[0]) == Half(1) || b.eps(e[0]) == Half(-1))) {
                push(m.drop_eps, e[0]);
                push(m.drop_eps, e[1]);
                m.rank += 2;
            } else
                throw domain_error("not an odd root of " + alg.name() + ": " + b.str());
            break;
        default: throw domain_error("restriction implemented for gl, osp and p");
        }
    }
    std::sort(m.drop_eps.begin(), m.drop_eps.end());
    std::sort(m.drop_delta.begin(), m.drop_delta.end());
    return m;
}

// Standard rank-r restriction: gl drops eps_{m-1..}, delta_{0..}; osp drops
// eps_i, delta_i from the end; p drops eps from the end (r roots 2 eps_i).
inline RestrictionMap standard_restriction(const SuperalgebraId &alg, int r)
{
    std::vector<Weight> iso;
    const std::size_t ne = alg.eps_rank(), nd = alg.delta_rank();
    for (int s = 0; s < r; ++s) {
        switch (alg.family) {
        case Family::GL:
            if (static_cast<std::size_t>(s) >= ne || static_cast<std::size_t>(s) >= nd)
                throw domain_error("rank exceeds defect of " + alg.name());
            iso.push_back(unit_eps(ne, nd, ne - 1 - s) - unit_delta(ne, nd, s));
            break;
        case Family::OSP:
            if (static_cast<std::size_t>(s) >= ne || static_cast<std::size_t>(s) >= nd)
                throw domain_error("rank exceeds defect of " + alg.name());
            iso.push_back(unit_eps(ne, nd, ne - 1 - s) - unit_delta(ne, nd, nd - 1 - s));
            break;
        case Family::P:
            if (static_cast<std::size_t>(s) >= ne)
                throw domain_error("rank exceeds defect of " + alg.name());
            iso.push_back(unit_eps(ne, nd, ne - 1 - s, 2));
            break;
        default: throw domain_error("restriction implemented for gl, osp and p");
        }
    }
    return restriction_for(alg, iso);
}

inline SuperCharacter ds_restrict(const SuperCharacter &f, const RestrictionMap &m)
{
    SuperCharacter::Terms t;
    t.reserve(f.size());
    for (auto &[w, c] : f.terms())
        t.push_back({m.apply(w), c});
    return SuperCharacter::from_unsorted(std::move(t));
}

// Keep only weights orthogonal to every coroot of the iso-set, then project.
inline SuperCharacter ds_restrict_filtered(const SuperCharacter &f, const SuperalgebraId &alg,
                                           const std::vector<Weight> &iso)
{
    auto m = restriction_for(alg, iso);
    std::vector<std::vector<Rational>> hs;
    for (auto &b : iso)
        hs.push_back(coroot(alg, b));
    SuperCharacter::Terms t;
    for (auto &[w, c] : f.terms()) {
        bool keep = true;
        for (auto &h : hs)
            if (sgn(pairing(w, h)) != 0) {
                keep = false;
                break;
            }
        if (keep)
            t.push_back({m.apply(w), c});
    }
    return SuperCharacter::from_unsorted(std::move(t));
}

inline long long sdim(const SuperCharacter &f)
{
    long long s = 0;
    for (auto &[w, c] : f.terms())
        s = detail::checked_add(s, c);
    return s;
}

// Order at zero of h -> sum c_mu e^{mu(h)}: the least i for which the degree-i
// part sum c_mu mu(h)^i / i! is a nonzero polynomial, or nullopt if all parts
// below cap vanish.
inline std::optional<int> taylor_order(const SuperCharacter &f, int cap)
{
    if (f.is_zero())
        return std::nullopt;
    const std::size_t r = f.terms().begin()->first.rank();
    std::vector<std::pair<std::vector<mpz_class>, long long>> pts;
    for (auto &[w, c] : f.terms()) {
        std::vector<mpz_class> x(r);
        for (std::size_t i = 0; i < r; ++i)
            x[i] = w[i].twice;
        pts.push_back({std::move(x), c});
    }
    // degree-i part vanishes iff every moment sum c_mu prod mu_k^{e_k}, |e| = i, vanishes
    for (int deg = 0; deg < cap; ++deg) {
        std::vector<int> e(r, 0);
        bool nonzero = false;
        std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
            if (nonzero)
                return;
            if (k + 1 == r || r == 0) {
                if (r)
                    e[k] = left;
                mpz_class s = 0;
                for (auto &[x, c] : pts) {
                    mpz_class t = static_cast<long>(c);
                    for (std::size_t i = 0; i < r; ++i)
                        for (int p = 0; p < e[i]; ++p)
                            t *= x[i];
                    s += t;
                }
                if (s != 0)
                    nonzero = true;
                return;
            }
            for (int v = 0; v <= left; ++v) {
                e[k] = v;
                rec(k + 1, left - v);
            }
        };
        rec(0, deg);
        if (nonzero)
            return deg;
    }
    return std::nullopt;
}

} // namespace dsf
