// Weight diagrams and arc diagrams for gl(m|n), principal blocks of
// osp(2k+t|2k), and p(n); atypicality, dex and ASCII rendering.
#pragma once

#include "algebra_core.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace dsf {

enum class DiagramKind { GL, OSP, P };

enum class Sym : char { Empty = 'o', Cross = 'x', Left = '<', Right = '>', Dot = '*' };

// Positions not stored carry the empty symbol. For osp the positive
// positions hold crosses, position 0 holds zero_stack crosses (and > when
// t = 2); sign is the xi decoration (0 when absent).
struct WeightDiagram {
    DiagramKind kind = DiagramKind::GL;
    std::map<int, Sym> sym;
    int zero_stack = 0;
    int t = 0;
    int sign = 0;

    Sym at(int p) const
    {
        auto it = sym.find(p);
        return it == sym.end() ? Sym::Empty : it->second;
    }
    // osp: position 0 counts as empty only when it carries no symbol
    bool empty_at(int p) const
    {
        if (kind == DiagramKind::OSP && p == 0)
            return zero_stack == 0 && t != 2;
        return at(p) == Sym::Empty;
    }
    int count(Sym s) const
    {
        int c = 0;
        for (auto &[p, x] : sym)
            c += x == s;
        return c;
    }
    int crosses() const { return count(Sym::Cross) + zero_stack; }
    bool needs_sign() const
    {
        if (kind != DiagramKind::OSP)
            return false;
        if (crosses() == 0)
            return false;
        if (t == 0)
            return zero_stack == 0;
        if (t == 1)
            return zero_stack > 0;
        return false;
    }
    friend bool operator==(const WeightDiagram &, const WeightDiagram &) = default;
};

struct Arc {
    int anchor = 0;        // position of the cross or dot
    std::vector<int> ends; // empty endpoints, increasing
    int lo = 0, hi = 0;    // span
    int stack_level = -1;  // osp zero stack level, 0 at the bottom
    int height = 0;        // 1 + largest height of arcs inside the span
    bool maximal = false;
};

struct ArcDiagram {
    WeightDiagram diagram;
    std::vector<Arc> arcs;

    std::vector<std::size_t> maximal_arcs() const
    {
        std::vector<std::size_t> r;
        for (std::size_t i = 0; i < arcs.size(); ++i)
            if (arcs[i].maximal)
                r.push_back(i);
        return r;
    }
};

// ---------------------------------------------------------------- weight -> diagram

inline void require_family(const SuperalgebraId &alg, Family f, const char *what)
{
    if (alg.family != f)
        throw domain_error(std::string(what) + " is not defined for " + alg.name());
}

inline WeightDiagram gl_weight_diagram(const SuperalgebraId &alg, const Weight &lambda)
{
    require_family(alg, Family::GL, "gl weight diagram");
    if (!is_dominant(alg, lambda))
        throw domain_error("weight " + lambda.str() + " is not dominant for " + alg.name());
    Weight mu = lambda + rho(alg);
    WeightDiagram d;
    d.kind = DiagramKind::GL;
    for (std::size_t i = 0; i < mu.ne; ++i)
        d.sym[mu.eps(i).as_int()] = Sym::Left;
    for (std::size_t j = 0; j < mu.nd; ++j) {
        int b = -mu.delta(j).as_int();
        auto it = d.sym.find(b);
        if (it != d.sym.end())
            it->second = Sym::Cross;
        else
            d.sym[b] = Sym::Right;
    }
    return d;
}

inline WeightDiagram osp_weight_diagram(const SuperalgebraId &alg, const Weight &lambda)
{
    auto dec = osp_decompose(alg, lambda);
    if (!dec)
        throw domain_error("weight " + lambda.str() + " is not a principal-block dominant weight of " + alg.name());
    WeightDiagram d;
    d.kind = DiagramKind::OSP;
    d.t = dec->t;
    d.sign = dec->xi;
    for (int a : dec->a) {
        if (a == 0)
            ++d.zero_stack;
        else
            d.sym[a] = Sym::Cross;
    }
    return d;
}

inline WeightDiagram p_weight_diagram(const SuperalgebraId &alg, const Weight &lambda)
{
    require_family(alg, Family::P, "p(n) weight diagram");
    if (!is_dominant(alg, lambda))
        throw domain_error("weight " + lambda.str() + " is not dominant for " + alg.name());
    Weight mu = lambda + rho(alg);
    WeightDiagram d;
    d.kind = DiagramKind::P;
    for (std::size_t i = 0; i < mu.ne; ++i)
        d.sym[mu.eps(i).as_int()] = Sym::Dot;
    return d;
}

inline WeightDiagram weight_diagram(const SuperalgebraId &alg, const Weight &lambda)
{
    switch (alg.family) {
    case Family::GL: return gl_weight_diagram(alg, lambda);
    case Family::OSP: return osp_weight_diagram(alg, lambda);
    case Family::P: return p_weight_diagram(alg, lambda);
    default: throw domain_error("weight diagrams are defined for gl, osp and p, not " + alg.name());
    }
}

// ---------------------------------------------------------------- diagram -> weight

struct DiagramWeight {
    SuperalgebraId alg;
    Weight weight;
};

inline DiagramWeight diagram_to_weight(const WeightDiagram &d)
{
    switch (d.kind) {
    case DiagramKind::GL: {
        std::vector<int> a, b;
        for (auto it = d.sym.rbegin(); it != d.sym.rend(); ++it)
            if (it->second == Sym::Cross || it->second == Sym::Left)
                a.push_back(it->first);
        for (auto &[p, s] : d.sym)
            if (s == Sym::Cross || s == Sym::Right)
                b.push_back(p);
            else if (s != Sym::Left)
                throw domain_error("gl diagram with symbol other than x, <, >");
        auto alg = SuperalgebraId::gl(static_cast<int>(a.size()), static_cast<int>(b.size()));
        Weight mu = alg.zero_weight();
        for (std::size_t i = 0; i < a.size(); ++i)
            mu.eps(i) = Half(a[i]);
        for (std::size_t j = 0; j < b.size(); ++j)
            mu.delta(j) = Half(-b[j]);
        return {alg, mu - rho(alg)};
    }
    case DiagramKind::OSP: {
        std::vector<int> a;
        for (auto it = d.sym.rbegin(); it != d.sym.rend(); ++it) {
            if (it->second != Sym::Cross || it->first <= 0)
                throw domain_error("osp diagram with a symbol other than x at a positive position");
            a.push_back(it->first);
        }
        for (int i = 0; i < d.zero_stack; ++i)
            a.push_back(0);
        int k = static_cast<int>(a.size());
        if (d.needs_sign() && d.sign == 0)
            throw domain_error("osp diagram requires a sign");
        int xi = osp_needs_sign(d.t, a) ? d.sign : 0;
        return {osp_principal(k, d.t), osp_compose(k, d.t, a, xi)};
    }
    case DiagramKind::P: {
        std::vector<int> a;
        for (auto &[p, s] : d.sym) {
            if (s != Sym::Dot)
                throw domain_error("p(n) diagram with a symbol other than *");
            a.push_back(p);
        }
        auto alg = SuperalgebraId::pn(static_cast<int>(a.size()));
        Weight mu = alg.zero_weight();
        for (std::size_t i = 0; i < a.size(); ++i)
            mu.eps(i) = Half(a[i]);
        return {alg, mu - rho(alg)};
    }
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------- arcs

inline void mark_maximal(std::vector<Arc> &arcs)
{
    std::vector<std::size_t> order(arcs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return arcs[x].hi - arcs[x].lo < arcs[y].hi - arcs[y].lo; });
    auto inside = [&](const Arc &a, const Arc &b) { return b.lo <= a.lo && a.hi <= b.hi; };
    for (std::size_t x : order) {
        int h = 0;
        bool covered = false;
        for (std::size_t y = 0; y < arcs.size(); ++y) {
            if (x == y)
                continue;
            if (inside(arcs[y], arcs[x]))
                h = std::max(h, arcs[y].height);
            if (inside(arcs[x], arcs[y]))
                covered = true;
        }
        arcs[x].height = h + 1;
        arcs[x].maximal = !covered;
    }
}

inline ArcDiagram build_arcs(const WeightDiagram &d)
{
    ArcDiagram ad;
    ad.diagram = d;
    auto &arcs = ad.arcs;
    switch (d.kind) {
    case DiagramKind::GL: {
        if (d.sym.empty())
            break;
        std::vector<int> open;
        int p = d.sym.begin()->first;
        int last = d.sym.rbegin()->first;
        for (; p <= last || !open.empty(); ++p) {
            Sym s = d.at(p);
            if (s == Sym::Cross)
                open.push_back(p);
            else if (s == Sym::Empty && !open.empty()) {
                Arc a;
                a.anchor = open.back();
                a.ends = {p};
                a.lo = a.anchor;
                a.hi = p;
                arcs.push_back(a);
                open.pop_back();
            }
        }
        break;
    }
    case DiagramKind::OSP: {
        std::set<int> used;
        std::vector<int> open;
        int last = d.sym.empty() ? 0 : d.sym.rbegin()->first;
        for (int p = 1; p <= last || !open.empty(); ++p) {
            Sym s = d.at(p);
            if (s == Sym::Cross)
                open.push_back(p);
            else if (!open.empty()) {
                Arc a;
                a.anchor = open.back();
                a.ends = {p};
                a.lo = a.anchor;
                a.hi = p;
                arcs.push_back(a);
                used.insert(p);
                open.pop_back();
            }
        }
        int scan = 1;
        auto next_free = [&]() {
            while (d.at(scan) != Sym::Empty || used.count(scan))
                ++scan;
            used.insert(scan);
            return scan;
        };
        for (int level = 0; level < d.zero_stack; ++level) {
            int take = (level == 0 && d.t != 2) ? 1 : 2;
            Arc a;
            a.anchor = 0;
            a.stack_level = level;
            for (int i = 0; i < take; ++i)
                a.ends.push_back(next_free());
            a.lo = 0;
            a.hi = a.ends.back();
            arcs.push_back(a);
        }
        break;
    }
    case DiagramKind::P: {
        if (d.sym.empty())
            break;
        std::vector<int> open;
        int first = d.sym.begin()->first - static_cast<int>(d.sym.size());
        int last = d.sym.rbegin()->first;
        for (int p = first; p <= last; ++p) {
            Sym s = d.at(p);
            if (s == Sym::Empty)
                open.push_back(p);
            else {
                if (open.empty())
                    throw std::logic_error("unmatched dot in p(n) diagram");
                Arc a;
                a.anchor = p;
                a.ends = {open.back()};
                a.lo = open.back();
                a.hi = p;
                arcs.push_back(a);
                open.pop_back();
            }
        }
        break;
    }
    }
    std::sort(arcs.begin(), arcs.end(), [](const Arc &a, const Arc &b) {
        return std::tie(a.lo, a.hi, a.stack_level) < std::tie(b.lo, b.hi, b.stack_level);
    });
    mark_maximal(arcs);
    return ad;
}

// The diagram with the cross (or dot) of a maximal arc replaced by the empty
// symbol. For osp the sign is kept for t = 1 and cleared otherwise.
inline WeightDiagram remove_maximal_arc(const ArcDiagram &ad, std::size_t idx)
{
    if (idx >= ad.arcs.size() || !ad.arcs[idx].maximal)
        throw domain_error("arc is not maximal");
    const Arc &a = ad.arcs[idx];
    WeightDiagram d = ad.diagram;
    if (d.kind == DiagramKind::OSP && a.stack_level >= 0)
        --d.zero_stack;
    else
        d.sym.erase(a.anchor);
    if (d.kind == DiagramKind::OSP) {
        if (d.t != 1)
            d.sign = 0;
        if (!d.needs_sign())
            d.sign = 0;
    }
    return d;
}

// ---------------------------------------------------------------- invariants

inline int atypicality(const SuperalgebraId &alg, const Weight &lambda)
{
    if (alg.family != Family::GL && alg.family != Family::OSP)
        throw domain_error("atypicality via diagrams is defined for gl and osp");
    return weight_diagram(alg, lambda).crosses();
}

// gl: move core symbols out of the way and read the crosses as a principal
// block weight of gl(k|k); osp: sum of a_i minus l(k - tail).
inline int dex(const SuperalgebraId &alg, const Weight &lambda)
{
    if (alg.family == Family::GL) {
        auto d = gl_weight_diagram(alg, lambda);
        std::vector<int> xs;
        int core = 0;
        for (auto &[p, s] : d.sym) {
            if (s == Sym::Cross)
                xs.push_back(p - core);
            else
                ++core;
        }
        const int k = static_cast<int>(xs.size());
        long s = 0;
        for (int j = 0; j < k; ++j)
            s += -xs[j] - (k - 1 - j);
        return static_cast<int>(((s % 2) + 2) % 2);
    }
    if (alg.family == Family::OSP) {
        auto dec = osp_decompose(alg, lambda);
        if (!dec)
            throw domain_error("weight " + lambda.str() + " is not a principal-block dominant weight of " + alg.name());
        int ell = dec->t == 2 ? 1 : 0;
        long s = 0;
        int tail = 0;
        for (int a : dec->a) {
            s += a;
            tail += a == 0;
        }
        s -= ell * (dec->k - tail);
        return static_cast<int>(((s % 2) + 2) % 2);
    }
    throw domain_error("dex is defined for gl and osp");
}

// The diagram of the reduced core weight: crosses only, shifted left past
// the core symbols.
inline WeightDiagram gl_core_free(const WeightDiagram &d)
{
    WeightDiagram r;
    r.kind = DiagramKind::GL;
    int core = 0;
    for (auto &[p, s] : d.sym) {
        if (s == Sym::Cross)
            r.sym[p - core] = Sym::Cross;
        else
            ++core;
    }
    return r;
}

// ---------------------------------------------------------------- rendering

inline std::string symbol_text(const WeightDiagram &d, int p)
{
    if (d.kind == DiagramKind::OSP && p == 0) {
        std::string s;
        if (d.zero_stack == 1)
            s = "x";
        else if (d.zero_stack > 1)
            s = "x^" + std::to_string(d.zero_stack);
        if (d.t == 2)
            return s.empty() ? ">" : s + ">";
        return s.empty() ? "o" : s;
    }
    return std::string(1, static_cast<char>(d.at(p)));
}

// One row per arc height above the symbol row and a row of positions below.
// Each position takes a cell of fixed width; arcs run between the first
// column of the cells of their endpoints.
inline std::string render(const ArcDiagram &ad)
{
    const WeightDiagram &d = ad.diagram;
    int lo, hi;
    if (d.kind == DiagramKind::OSP) {
        lo = 0;
        hi = d.sym.empty() ? 0 : d.sym.rbegin()->first;
    } else if (d.sym.empty()) {
        lo = hi = 0;
    } else {
        lo = d.sym.begin()->first;
        hi = d.sym.rbegin()->first;
    }
    for (auto &a : ad.arcs) {
        lo = std::min(lo, a.lo);
        hi = std::max(hi, a.hi);
    }
    int width = 3;
    for (int p = lo; p <= hi; ++p) {
        width = std::max<int>(width, static_cast<int>(symbol_text(d, p).size()) + 1);
        width = std::max<int>(width, static_cast<int>(std::to_string(p).size()) + 1);
    }
    const int cols = (hi - lo + 1) * width;
    const std::string lead = d.kind == DiagramKind::OSP ? (d.sign > 0 ? "+ " : d.sign < 0 ? "- " : "  ") : "";
    auto col = [&](int p) { return (p - lo) * width; };
    int top = 0;
    for (auto &a : ad.arcs)
        top = std::max(top, a.height);
    std::ostringstream os;
    for (int row = top; row >= 1; --row) {
        std::string line(cols, ' ');
        for (auto &a : ad.arcs) {
            std::vector<int> pts{a.anchor};
            pts.insert(pts.end(), a.ends.begin(), a.ends.end());
            if (a.height == row) {
                for (int c = col(a.lo); c <= col(a.hi); ++c)
                    if (line[c] == ' ' || line[c] == '|')
                        line[c] = '-';
                for (int p : pts)
                    line[col(p)] = '+';
            } else if (a.height > row) {
                for (int p : pts)
                    if (line[col(p)] == ' ')
                        line[col(p)] = '|';
            }
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        os << std::string(lead.size(), ' ') << line << "\n";
    }
    std::string syms, nums;
    for (int p = lo; p <= hi; ++p) {
        std::string s = symbol_text(d, p);
        syms += s + std::string(width - s.size(), ' ');
        std::string n = std::to_string(p);
        nums += n + std::string(width - n.size(), ' ');
    }
    while (!syms.empty() && syms.back() == ' ')
        syms.pop_back();
    while (!nums.empty() && nums.back() == ' ')
        nums.pop_back();
    os << lead << syms << "\n" << std::string(lead.size(), ' ') << nums << "\n";
    return os.str();
}

} // namespace dsf
