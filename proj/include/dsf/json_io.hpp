// Parsing of algebra and weight strings, text and JSON forms of weights,
// DS results, characters, orbit tables and explicit modules.
#pragma once

#include "ds_engine.hpp"
#include "iso_geometry.hpp"
#include "oracle.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

namespace dsf {

using json = nlohmann::ordered_json;

struct parse_error : domain_error {
    using domain_error::domain_error;
};

namespace detail {

inline parse_error parse_fail(const std::string &input, std::size_t col, const std::string &msg)
{
    return parse_error("parse error at column " + std::to_string(col + 1) + " of '" + input + "': " + msg);
}

class Cursor {
  public:
    explicit Cursor(const std::string &s) : s_(s) {}
    void skip_ws()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool eat(const std::string &tok)
    {
        skip_ws();
        if (s_.compare(i_, tok.size(), tok) == 0) {
            i_ += tok.size();
            return true;
        }
        return false;
    }
    void expect(const std::string &tok)
    {
        if (!eat(tok))
            throw parse_fail(s_, i_, "expected '" + tok + "'");
    }
    long integer()
    {
        skip_ws();
        std::size_t start = i_;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+'))
            ++i_;
        std::size_t digits = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        if (i_ == digits)
            throw parse_fail(s_, start, "expected an integer");
        try {
            return std::stol(s_.substr(start, i_ - start));
        } catch (const std::out_of_range &) {
            throw parse_fail(s_, start, "integer out of range");
        }
    }
    void finish()
    {
        skip_ws();
        if (i_ != s_.size())
            throw parse_fail(s_, i_, "unexpected trailing input");
    }
    std::size_t pos() const { return i_; }

  private:
    const std::string &s_;
    std::size_t i_ = 0;
};

} // namespace detail

// gl(m|n), sl(m|n), osp(m|2n), p(n), q(n), D(2|1;a) with a = p or p/q, G(3), F(4)
inline SuperalgebraId parse_algebra(const std::string &s)
{
    detail::Cursor c(s);
    SuperalgebraId a;
    auto pair = [&](auto make) {
        c.expect("(");
        long m = c.integer();
        c.expect("|");
        long n = c.integer();
        c.expect(")");
        c.finish();
        return make(static_cast<int>(m), static_cast<int>(n));
    };
    auto single = [&](auto make) {
        c.expect("(");
        long n = c.integer();
        c.expect(")");
        c.finish();
        return make(static_cast<int>(n));
    };
    if (c.eat("gl"))
        return pair([](int m, int n) { return SuperalgebraId::gl(m, n); });
    if (c.eat("sl"))
        return pair([](int m, int n) { return SuperalgebraId::sl(m, n); });
    if (c.eat("osp"))
        return pair([](int m, int n) { return SuperalgebraId::osp(m, n); });
    if (c.eat("p"))
        return single([](int n) { return SuperalgebraId::pn(n); });
    if (c.eat("q"))
        return single([](int n) { return SuperalgebraId::qn(n); });
    if (c.eat("D(2|1;")) {
        long p = c.integer(), q = 1;
        if (c.eat("/"))
            q = c.integer();
        c.expect(")");
        c.finish();
        return SuperalgebraId::d21a(p, q);
    }
    if (c.eat("G(3)")) {
        c.finish();
        return SuperalgebraId::g3();
    }
    if (c.eat("F(4)")) {
        c.finish();
        return SuperalgebraId::f4();
    }
    throw detail::parse_fail(s, c.pos(), "unknown algebra (gl, sl, osp, p, q, D(2|1;a), G(3), F(4))");
}

// "a,b|c,d": eps coordinates before the bar, delta coordinates after it.
inline Weight parse_weight(const SuperalgebraId &alg, const std::string &s)
{
    std::vector<Half> part[2];
    int side = 0;
    std::size_t start = 0;
    auto take = [&](std::size_t end) {
        std::string tok = s.substr(start, end - start);
        std::size_t lead = tok.find_first_not_of(' ');
        std::size_t trail = tok.find_last_not_of(' ');
        if (lead == std::string::npos)
            throw detail::parse_fail(s, start, "empty coordinate");
        tok = tok.substr(lead, trail - lead + 1);
        try {
            part[side].push_back(Half::from_rational(parse_rational(tok)));
        } catch (const domain_error &e) {
            throw detail::parse_fail(s, start + lead, e.what());
        }
    };
    bool empty_side = true;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',' || s[i] == '|') {
            bool blank = s.substr(start, i - start).find_first_not_of(' ') == std::string::npos;
            if (!(blank && empty_side && (i == s.size() || s[i] == '|')))
                take(i);
            empty_side = false;
            if (i < s.size() && s[i] == '|') {
                if (side == 1)
                    throw detail::parse_fail(s, i, "second '|'");
                side = 1;
                empty_side = true;
            }
            start = i + 1;
        }
    }
    if (part[0].size() != alg.eps_rank() || part[1].size() != alg.delta_rank())
        throw parse_error("weight '" + s + "' has " + std::to_string(part[0].size()) + "|" +
                          std::to_string(part[1].size()) + " coordinates; " + alg.name() + " needs " +
                          std::to_string(alg.eps_rank()) + "|" + std::to_string(alg.delta_rank()));
    return Weight(part[0], part[1]);
}

// ---------------------------------------------------------------- JSON

inline json weight_json(const Weight &w)
{
    json e = json::array(), d = json::array();
    for (std::size_t i = 0; i < w.ne; ++i)
        e.push_back(w.eps(i).str());
    for (std::size_t j = 0; j < w.nd; ++j)
        d.push_back(w.delta(j).str());
    return json{{"eps", e}, {"delta", d}};
}

inline Weight weight_from_json(const json &j)
{
    std::vector<Half> e, d;
    for (auto &x : j.at("eps"))
        e.push_back(Half::from_rational(parse_rational(x.get<std::string>())));
    for (auto &x : j.at("delta"))
        d.push_back(Half::from_rational(parse_rational(x.get<std::string>())));
    return Weight(e, d);
}

inline std::string sign_text(const SimpleLabel &l)
{
    if (l.alg.family != Family::OSP)
        return "none";
    auto d = weight_diagram(l.alg, l.weight);
    return d.sign > 0 ? "+" : d.sign < 0 ? "-" : "none";
}

inline json ds_result_json(const DSResult &R)
{
    json out = json::array();
    for (auto &e : R.entries)
        out.push_back({{"weight", weight_json(e.label.weight)},
                       {"shift", e.shift},
                       {"mult", e.mult},
                       {"sign", sign_text(e.label)}});
    json in{{"algebra", R.input.alg.name()},
            {"weight", weight_json(R.input.weight)},
            {"convention", convention_name(R.input.convention)}};
    return json{{"input", in}, {"output", out}};
}

inline json character_json(const SuperCharacter &f)
{
    json a = json::array();
    for (auto &[w, c] : f.terms())
        a.push_back({{"weight", weight_json(w)}, {"coeff", c}});
    return a;
}

inline SuperCharacter character_from_json(const json &j)
{
    SuperCharacter::Terms t;
    for (auto &x : j)
        t.push_back({weight_from_json(x.at("weight")), x.at("coeff").get<long long>()});
    return SuperCharacter::from_unsorted(std::move(t));
}

inline json matrix_json(const Matrix &m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.push_back(rational_str(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

inline json module_json(const ExplicitModule &M)
{
    json basis = json::array();
    for (auto &b : M.basis)
        basis.push_back({{"weight", weight_json(b.weight)}, {"parity", b.parity}});
    json acts = json::object();
    for (auto &[g, X] : M.actions)
        acts[g] = matrix_json(X);
    return json{{"basis", basis}, {"actions", acts}};
}

// Generator parities: taken from "parities" when present, otherwise from
// the parity change the matrix induces on the basis.
inline ExplicitModule module_from_json(const SuperalgebraId &alg, const json &j)
{
    ExplicitModule M;
    M.alg = alg;
    for (auto &b : j.at("basis")) {
        Weight w = weight_from_json(b.at("weight"));
        if (w.ne != alg.eps_rank() || w.nd != alg.delta_rank())
            throw domain_error("basis weight " + w.str() + " does not fit " + alg.name());
        int p = b.at("parity").get<int>();
        if (p != 0 && p != 1)
            throw domain_error("parity must be 0 or 1");
        M.basis.push_back({w, p});
    }
    const std::size_t d = M.dim();
    for (auto &[g, rows] : j.at("actions").items()) {
        if (rows.size() != d)
            throw domain_error("action of " + g + " has the wrong number of rows");
        Matrix X(d, d);
        for (std::size_t r = 0; r < d; ++r) {
            if (rows[r].size() != d)
                throw domain_error("action of " + g + " has a row of the wrong length");
            for (std::size_t c = 0; c < d; ++c) {
                const auto &v = rows[r][c];
                X(r, c) = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
            }
        }
        M.actions[g] = X;
        int par = -1;
        if (j.contains("parities") && j["parities"].contains(g))
            par = j["parities"][g].get<int>();
        else
            for (std::size_t r = 0; r < d && par < 0; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    if (sgn(X(r, c)) != 0) {
                        par = (M.basis[r].parity + M.basis[c].parity) & 1;
                        break;
                    }
        M.gen_parity[g] = par < 0 ? 0 : par;
    }
    M.check_homogeneous();
    return M;
}

// ---------------------------------------------------------------- text

inline std::string weight_text(const Weight &w)
{
    if (w.nd == 0) {
        std::string s = "(";
        for (std::size_t i = 0; i < w.ne; ++i)
            s += (i ? "," : "") + w.eps(i).str();
        return s + ")";
    }
    return w.str();
}

inline std::string ds_result_text(const DSResult &R, int r)
{
    std::ostringstream os;
    os << "DS^" << r << " L" << weight_text(R.input.weight) << " over " << R.input.alg.name() << " ["
       << convention_name(R.input.convention) << "]\n";
    if (R.entries.empty()) {
        os << "  0\n";
        return os.str();
    }
    os << "  over " << R.entries.front().label.alg.name() << ":\n";
    for (auto &e : R.entries) {
        os << "  " << (e.shift ? "Pi L" : "L") << weight_text(e.label.weight);
        if (e.mult != 1)
            os << "^" << e.mult;
        std::string s = sign_text(e.label);
        if (s != "none")
            os << "  sign " << s;
        os << "\n";
    }
    return os.str();
}

inline std::string character_text(const SuperCharacter &f)
{
    if (f.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (auto &[w, c] : f.terms()) {
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        long long a = c < 0 ? -c : c;
        if (a != 1)
            s += std::to_string(a) + " ";
        s += "e" + weight_text(w);
        first = false;
    }
    return s;
}

struct OrbitRow {
    int k = 0;
    std::vector<OrbitDescriptor> orbits;
};

inline std::vector<OrbitRow> orbit_table(const SuperalgebraId &alg, int only_k = -1)
{
    std::vector<OrbitRow> rows;
    const int top = defect(alg);
    if (only_k > top)
        throw domain_error("k exceeds the defect " + std::to_string(top) + " of " + alg.name());
    for (int k = 0; k <= top; ++k)
        if (only_k < 0 || k == only_k)
            rows.push_back({k, w_orbits_on_iso_sets(alg, static_cast<std::size_t>(k))});
    return rows;
}

inline json orbit_table_json(const std::vector<OrbitRow> &rows)
{
    json a = json::array();
    for (auto &r : rows) {
        json dims = json::array();
        for (auto &o : r.orbits)
            if (o.dimension)
                dims.push_back(*o.dimension);
            else
                dims.push_back(nullptr);
        a.push_back({{"k", r.k}, {"orbit_count", r.orbits.size()}, {"dims", dims}});
    }
    return a;
}

inline std::string orbit_table_text(const SuperalgebraId &alg, const std::vector<OrbitRow> &rows)
{
    std::ostringstream os;
    os << alg.name() << " defect " << defect(alg) << "\n";
    for (auto &r : rows) {
        os << "k=" << r.k << " orbits=" << r.orbits.size();
        bool any = false;
        for (auto &o : r.orbits)
            if (o.dimension) {
                os << (any ? "," : " dims=") << *o.dimension;
                any = true;
            }
        os << "\n";
        for (auto &o : r.orbits) {
            os << "  {";
            for (std::size_t i = 0; i < o.representative.roots.size(); ++i)
                os << (i ? ", " : "") << weight_text(o.representative.roots[i]);
            os << "} size " << o.size << "\n";
        }
    }
    return os.str();
}

} // namespace dsf
