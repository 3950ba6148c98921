// DS on simple modules: one step by maximal-arc removal, iterated steps, the
// exceptional blocks, and the purity and multiplicity checks.
#pragma once

#include "diagram_calculus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace dsf {

// Parity normalization of L(lambda): Dex puts the highest weight vector in
// parity dex(lambda), Even makes it even.
enum class Convention { Dex, Even };

inline Convention default_convention(const SuperalgebraId &alg)
{
    return alg.family == Family::OSP ? Convention::Dex : Convention::Even;
}

inline const char *convention_name(Convention c) { return c == Convention::Dex ? "dex" : "even"; }

struct SimpleLabel {
    SuperalgebraId alg;
    Weight weight;
    Convention convention = Convention::Even;

    friend bool operator==(const SimpleLabel &, const SimpleLabel &) = default;
    friend auto operator<=>(const SimpleLabel &a, const SimpleLabel &b)
    {
        return std::tie(a.alg, a.weight, a.convention) <=> std::tie(b.alg, b.weight, b.convention);
    }
};

inline SimpleLabel make_label(const SuperalgebraId &alg, const Weight &w)
{
    return {alg, w, default_convention(alg)};
}

struct DSEntry {
    SimpleLabel label;
    int shift = 0;
    long long mult = 1;
};

// Multiset of Pi^shift L(label) with multiplicities, merged and sorted.
struct DSResult {
    SimpleLabel input;
    std::vector<DSEntry> entries;

    void add(const SimpleLabel &l, int shift, long long mult)
    {
        shift &= 1;
        for (auto &e : entries)
            if (e.label == l && e.shift == shift) {
                e.mult = detail::checked_add(e.mult, mult);
                return;
            }
        entries.push_back({l, shift, mult});
    }
    void normalize()
    {
        std::sort(entries.begin(), entries.end(), [](const DSEntry &a, const DSEntry &b) {
            return std::tie(b.label, a.shift) < std::tie(a.label, b.shift);
        });
    }
    friend bool operator==(const DSResult &a, const DSResult &b)
    {
        DSResult x = a, y = b;
        x.normalize();
        y.normalize();
        if (x.entries.size() != y.entries.size())
            return false;
        for (std::size_t i = 0; i < x.entries.size(); ++i)
            if (!(x.entries[i].label == y.entries[i].label) || x.entries[i].shift != y.entries[i].shift ||
                x.entries[i].mult != y.entries[i].mult)
                return false;
        return true;
    }
};

// Weights of the two signed diagrams when d needs a sign and carries none.
inline std::vector<DiagramWeight> sign_variants(WeightDiagram d)
{
    if (!d.needs_sign() || d.sign != 0)
        return {diagram_to_weight(d)};
    std::vector<DiagramWeight> r;
    for (int s : {1, -1}) {
        d.sign = s;
        r.push_back(diagram_to_weight(d));
    }
    return r;
}

inline int label_dex(const SimpleLabel &l)
{
    return l.alg.family == Family::GL || l.alg.family == Family::OSP ? dex(l.alg, l.weight) : 0;
}

// Shift of an output factor after changing both labels from the dex
// normalization to the label's convention.
inline int convert_shift(int dex_shift, const SimpleLabel &in, const SimpleLabel &out)
{
    if (in.convention == Convention::Dex)
        return dex_shift & 1;
    return (dex_shift + label_dex(in) + label_dex(out)) & 1;
}

// Number of empty positions q, on no arc, with 0 <= q < left endpoint.
inline int osp_free_left(const ArcDiagram &ad, const Arc &removed)
{
    std::set<int> on_arc;
    for (auto &a : ad.arcs)
        for (int p : a.ends)
            on_arc.insert(p);
    int e = 0;
    for (int q = 0; q < removed.lo; ++q)
        if (ad.diagram.empty_at(q) && !on_arc.count(q))
            ++e;
    return e;
}

// DS_x for x of rank 1 on a simple module.
inline DSResult ds1_simple(const SimpleLabel &L)
{
    const auto &alg = L.alg;
    DSResult res;
    res.input = L;
    if (alg.family == Family::P && L.convention != Convention::Even)
        throw domain_error("p(n) simples use the even convention");
    auto ad = build_arcs(weight_diagram(alg, L.weight));
    for (std::size_t idx : ad.maximal_arcs()) {
        const Arc &arc = ad.arcs[idx];
        WeightDiagram reduced = remove_maximal_arc(ad, idx);
        switch (alg.family) {
        case Family::GL: {
            auto nu = diagram_to_weight(reduced);
            SimpleLabel out{nu.alg, nu.weight, L.convention};
            int s = label_dex(L) - label_dex(out);
            res.add(out, convert_shift(s, L, out), 1);
            break;
        }
        case Family::OSP: {
            int e = osp_free_left(ad, arc);
            int even = 0, odd = 0;
            if (ad.diagram.t == 0) {
                (e % 2 == 0 ? even : odd) = 1;
            } else if (e == 0) {
                even = 1;
            } else {
                (e % 2 == 0 ? even : odd) = 2;
            }
            for (auto &nu : sign_variants(reduced)) {
                SimpleLabel out{nu.alg, nu.weight, L.convention};
                if (even)
                    res.add(out, convert_shift(0, L, out), even);
                if (odd)
                    res.add(out, convert_shift(1, L, out), odd);
            }
            break;
        }
        case Family::P: {
            int z = 0;
            for (auto &a : ad.arcs)
                if (a.lo > arc.hi)
                    ++z;
            auto nu = diagram_to_weight(reduced);
            res.add({nu.alg, nu.weight, L.convention}, z, 1);
            break;
        }
        default: throw domain_error("ds1_simple is defined for gl, osp and p");
        }
    }
    res.normalize();
    return res;
}

inline DSResult ds1_simple(const SuperalgebraId &alg, const Weight &w) { return ds1_simple(make_label(alg, w)); }

// Apply DS^1 to every factor of R.
inline DSResult ds1_apply(const DSResult &R)
{
    DSResult out;
    out.input = R.input;
    for (auto &e : R.entries) {
        DSResult step = ds1_simple(e.label);
        for (auto &f : step.entries)
            out.add(f.label, e.shift + f.shift, detail::checked_mul(e.mult, f.mult));
    }
    out.normalize();
    return out;
}

inline DSResult ds_identity(const SimpleLabel &L)
{
    DSResult r;
    r.input = L;
    r.add(L, 0, 1);
    return r;
}

// DS^r as DS^{r-split} applied to every factor of DS^{split}, each side
// computed by iterating DS^1.
inline DSResult ds_r_simple(const SimpleLabel &L, int r, int split = -1)
{
    if (r < 0)
        throw domain_error("rank must be non-negative");
    if (split < 0 || split > r)
        split = r;
    DSResult first = ds_identity(L);
    for (int i = 0; i < split; ++i)
        first = ds1_apply(first);
    DSResult out;
    out.input = L;
    for (auto &e : first.entries) {
        DSResult rest = ds_identity(e.label);
        for (int i = split; i < r; ++i)
            rest = ds1_apply(rest);
        for (auto &f : rest.entries)
            out.add(f.label, e.shift + f.shift, detail::checked_mul(e.mult, f.mult));
    }
    out.normalize();
    return out;
}

// Express the result with every label in the given convention.
inline DSResult with_convention(const DSResult &R, Convention c)
{
    auto flip = [&](const SimpleLabel &l) { return l.convention == c ? 0 : label_dex(l); };
    DSResult out;
    out.input = R.input;
    int in_shift = flip(R.input);
    out.input.convention = c;
    for (auto &e : R.entries) {
        SimpleLabel l = e.label;
        int s = e.shift + flip(l) + in_shift;
        l.convention = c;
        out.add(l, s, e.mult);
    }
    out.normalize();
    return out;
}

// ---------------------------------------------------------------- checks

inline bool check_purity(const DSResult &R)
{
    for (std::size_t i = 0; i < R.entries.size(); ++i)
        for (std::size_t j = i + 1; j < R.entries.size(); ++j)
            if (R.entries[i].label == R.entries[j].label && R.entries[i].shift != R.entries[j].shift)
                return false;
    return true;
}

// Ungraded multiplicity at most 2, at most 1 for gl and p.
inline bool check_multiplicity(const DSResult &R, Family f)
{
    const long long bound = (f == Family::GL || f == Family::P) ? 1 : 2;
    std::map<SimpleLabel, long long> tot;
    for (auto &e : R.entries)
        tot[e.label] += e.mult;
    for (auto &[l, m] : tot)
        if (m > bound)
            return false;
    return true;
}

// ---------------------------------------------------------------- exceptional blocks

enum class ExtGraph { A_inf_inf, D_inf };

inline const char *graph_name(ExtGraph g) { return g == ExtGraph::A_inf_inf ? "A_inf^inf" : "D_inf"; }

struct ExceptionalBlockDescriptor {
    SuperalgebraId alg;
    ExtGraph graph = ExtGraph::D_inf;
    int k = 0;           // D21a, G3
    int i1 = 0, i2 = 0;  // F4
    long vertex = 0;
};

// g_x module: for C the value of h, for sl2 the highest weight 2k, for sl3
// the coordinates in the fundamental weights.
struct GxModule {
    std::string gx;
    std::vector<long> hw;
    friend bool operator==(const GxModule &, const GxModule &) = default;
    friend auto operator<=>(const GxModule &, const GxModule &) = default;
    std::string str() const
    {
        std::string s = "L_" + gx + "(";
        for (std::size_t i = 0; i < hw.size(); ++i)
            s += (i ? "," : "") + std::to_string(hw[i]);
        return s + ")";
    }
};

struct ExceptionalEntry {
    GxModule module;
    int shift = 0;
    long long mult = 1;
};

inline ExceptionalBlockDescriptor exceptional_block(const SuperalgebraId &alg, long vertex, int k, int i1 = 0, int i2 = 0)
{
    ExceptionalBlockDescriptor b;
    b.alg = alg;
    b.vertex = vertex;
    switch (alg.family) {
    case Family::D21a:
        if (k < 0)
            throw domain_error("D(2|1;a) block index must be non-negative");
        b.k = k;
        b.graph = k == 0 ? ExtGraph::D_inf : ExtGraph::A_inf_inf;
        break;
    case Family::G3:
        if (k < 0)
            throw domain_error("G(3) block index must be non-negative");
        b.k = k;
        b.graph = ExtGraph::D_inf;
        break;
    case Family::F4:
        if (i2 < 0 || i1 < i2 || (i1 - i2) % 3 != 0)
            throw domain_error("F(4) blocks need i1 >= i2 >= 0 with i1 - i2 divisible by 3");
        b.i1 = i1;
        b.i2 = i2;
        b.graph = i1 == i2 ? ExtGraph::D_inf : ExtGraph::A_inf_inf;
        break;
    default: throw domain_error(alg.name() + " is not exceptional");
    }
    if (b.graph == ExtGraph::D_inf && vertex < 0)
        throw domain_error("D_inf vertices are numbered from 0");
    return b;
}

inline std::vector<ExceptionalEntry> ds_exceptional(const ExceptionalBlockDescriptor &B)
{
    std::vector<GxModule> seed;
    switch (B.alg.family) {
    case Family::D21a:
        if (B.k == 0)
            seed = {{"C", {0}}};
        else {
            long h = static_cast<long>(B.k) * (B.alg.p + B.alg.q);
            seed = {{"C", {h}}, {"C", {-h}}};
        }
        break;
    case Family::G3: seed = {{"sl2", {2L * B.k}}}; break;
    case Family::F4:
        if (B.i1 == B.i2)
            seed = {{"sl3", {B.i1, B.i1}}};
        else
            seed = {{"sl3", {B.i1, B.i2}}, {"sl3", {B.i2, B.i1}}};
        break;
    default: throw domain_error(B.alg.name() + " is not exceptional");
    }
    std::sort(seed.begin(), seed.end());
    std::vector<ExceptionalEntry> out;
    const long i = B.vertex;
    for (auto &m : seed) {
        if (B.graph == ExtGraph::A_inf_inf)
            out.push_back({m, static_cast<int>(((i % 2) + 2) % 2), 1});
        else if (i <= 1)
            out.push_back({m, 0, 1});
        else
            out.push_back({m, static_cast<int>((i - 1) % 2), 2});
    }
    return out;
}

} // namespace dsf
