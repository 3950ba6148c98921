// ds-calculus: DS on simple modules, arc diagrams, orbit tables, character
// operations, oracle verification and sweeps.

#include "dsf/dsf.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace dsf;

constexpr int kOk = 0, kDomain = 1, kVerify = 2;

struct Options {
    std::string algebra, weight, convention, kind, block, module_path;
    int rank = -1, bound = -1, t = -1, split = -1;
    long vertex = 0;
    std::uint64_t seed = 1;
    bool as_json = false;
};

SuperalgebraId algebra_of(const Options &o)
{
    auto alg = parse_algebra(o.algebra);
    if (o.t >= 0) {
        if (alg.family != Family::OSP)
            throw domain_error("--t applies to osp(2k+t|2k) only");
        if (alg.m - 2 * alg.n != o.t)
            throw domain_error(alg.name() + " is not of the form osp(2k+" + std::to_string(o.t) + "|2k)");
    }
    return alg;
}

Weight weight_of(const Options &o, const SuperalgebraId &alg)
{
    if (o.weight.empty())
        throw domain_error("--weight is required");
    return parse_weight(alg, o.weight);
}

void print(const json &j) { std::cout << j.dump(2) << "\n"; }

int run_ds(const Options &o)
{
    auto alg = algebra_of(o);
    if (alg.is_exceptional()) {
        int k = 0, i1 = 0, i2 = 0;
        if (!o.block.empty()) {
            detail::Cursor c(o.block);
            if (alg.family == Family::F4) {
                i1 = static_cast<int>(c.integer());
                c.expect(",");
                i2 = static_cast<int>(c.integer());
            } else
                k = static_cast<int>(c.integer());
            c.finish();
        }
        auto B = exceptional_block(alg, o.vertex, k, i1, i2);
        auto out = ds_exceptional(B);
        if (o.as_json) {
            json a = json::array();
            for (auto &e : out)
                a.push_back({{"gx", e.module.gx}, {"hw", e.module.hw}, {"shift", e.shift}, {"mult", e.mult}});
            print({{"algebra", alg.name()}, {"graph", graph_name(B.graph)}, {"vertex", B.vertex}, {"output", a}});
        } else {
            std::cout << "DS^1 of vertex " << B.vertex << " in the " << graph_name(B.graph) << " block of "
                      << alg.name() << "\n";
            for (auto &e : out) {
                std::cout << "  " << (e.shift ? "Pi " : "") << e.module.str();
                if (e.mult != 1)
                    std::cout << "^" << e.mult;
                std::cout << "\n";
            }
        }
        return kOk;
    }
    auto lam = weight_of(o, alg);
    if (!is_dominant(alg, lam))
        throw domain_error("weight " + lam.str() + " is not dominant for " + alg.name());
    SimpleLabel L = make_label(alg, lam);
    if (o.convention == "dex")
        L.convention = Convention::Dex;
    else if (o.convention == "even")
        L.convention = Convention::Even;
    else if (!o.convention.empty())
        throw domain_error("convention must be dex or even");
    const int r = o.rank < 0 ? 1 : o.rank;
    DSResult R = ds_r_simple(L, r, o.split);
    if (o.as_json)
        print(ds_result_json(R));
    else
        std::cout << ds_result_text(R, r);
    return kOk;
}

int run_diagram(const Options &o)
{
    auto alg = algebra_of(o);
    auto lam = weight_of(o, alg);
    auto ad = build_arcs(weight_diagram(alg, lam));
    if (o.as_json) {
        json sym = json::object(), arcs = json::array();
        for (auto &[p, s] : ad.diagram.sym)
            if (s != Sym::Empty)
                sym[std::to_string(p)] = std::string(1, static_cast<char>(s));
        for (auto &a : ad.arcs)
            arcs.push_back({{"anchor", a.anchor}, {"ends", a.ends}, {"maximal", a.maximal}});
        json j{{"algebra", alg.name()}, {"weight", weight_json(lam)}, {"symbols", sym}, {"arcs", arcs}};
        if (alg.family == Family::OSP) {
            j["zero_stack"] = ad.diagram.zero_stack;
            j["sign"] = ad.diagram.sign;
        }
        print(j);
    } else
        std::cout << render(ad);
    return kOk;
}

int run_orbits(const Options &o)
{
    auto alg = algebra_of(o);
    auto rows = orbit_table(alg, o.rank);
    if (o.as_json)
        print(orbit_table_json(rows));
    else
        std::cout << orbit_table_text(alg, rows);
    return kOk;
}

int run_char(const Options &o)
{
    auto alg = algebra_of(o);
    auto lam = weight_of(o, alg);
    std::vector<std::pair<std::string, SuperCharacter>> chars;
    if (alg.family == Family::P) {
        auto k = p_kac_supercharacters(alg.n, lam);
        chars = {{"thin", k.thin}, {"kprime", k.kprime}};
    } else
        chars = {{"k", kac_supercharacter(alg, lam)}};
    const int r = o.rank < 0 ? 1 : o.rank;
    json out = json::object();
    for (auto &[name, f] : chars) {
        if (o.kind == "kac") {
            if (o.as_json)
                out[name] = character_json(f);
            else
                std::cout << name << " = " << character_text(f) << "\n";
        } else if (o.kind == "restrict") {
            auto g = ds_restrict(f, standard_restriction(alg, r));
            if (o.as_json)
                out[name] = character_json(g);
            else
                std::cout << "ds^" << r << " " << name << " = " << character_text(g) << "\n";
        } else if (o.kind == "sdim") {
            if (o.as_json)
                out[name] = sdim(f);
            else
                std::cout << "sdim " << name << " = " << sdim(f) << "\n";
        } else if (o.kind == "order") {
            const int cap = o.bound < 0 ? 32 : o.bound;
            auto t = taylor_order(f, cap);
            if (o.as_json)
                out[name] = t ? json(*t) : json(nullptr);
            else
                std::cout << "order " << name << " = " << (t ? std::to_string(*t) : ">= " + std::to_string(cap))
                          << "\n";
        } else
            throw domain_error("char operation must be kac, restrict, sdim or order");
    }
    if (o.as_json)
        print(out);
    return kOk;
}

int run_verify(const Options &o)
{
    if (!o.module_path.empty()) {
        auto alg = algebra_of(o);
        std::ifstream in(o.module_path);
        if (!in)
            throw domain_error("cannot open " + o.module_path);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception &e) {
            throw domain_error(std::string("invalid module JSON: ") + e.what());
        }
        auto M = module_from_json(alg, j);
        long checks = 0, fails = 0;
        for (auto &r : roots(alg).odd) {
            if (!M.actions.count(root_generator(alg, r.w)))
                continue;
            auto rep = verify_restriction(M, odd_operator(M, {r.w}));
            ++checks;
            if (!rep.pass) {
                ++fails;
                std::cout << "FAIL at " << r.w.str() << ": explicit " << character_text(rep.explicit_side)
                          << ", restricted " << character_text(rep.predicted) << "\n";
            }
        }
        std::cout << checks << " checks, " << fails << " failures\n";
        return fails ? kVerify : kOk;
    }
    const int mn = o.bound < 0 ? 3 : o.bound;
    const int rk = o.rank < 0 ? mn : o.rank;
    auto rep = oracle_suite(mn, rk, o.seed);
    if (o.as_json)
        print({{"checks", rep.checks}, {"failures", rep.failures}, {"messages", rep.lines}});
    else {
        for (auto &l : rep.lines)
            std::cout << l << "\n";
        std::cout << rep.checks << " checks, " << rep.failures << " failures\n";
    }
    return rep.ok() ? kOk : kVerify;
}

int run_sweep(const Options &o)
{
    auto alg = algebra_of(o);
    const int b = o.bound < 0 ? 4 : o.bound;
    std::vector<SweepReport> reps;
    if (o.kind == "kernel") {
        if (alg.family == Family::P)
            reps.push_back(p_kernel_sweep(alg.n, b));
        else {
            reps.push_back(kernel_sweep(alg, b, false));
            reps.push_back(kernel_sweep(alg, b, true));
        }
    } else if (o.kind == "purity") {
        reps.push_back(purity_sweep(alg, b));
    } else if (o.kind == "bracket") {
        SweepReport rep;
        rep.what = "DS^r by both bracketings over " + alg.name();
        const int r = o.rank < 0 ? 2 : o.rank;
        for_each_dominant(alg, b, [&](const Weight &w) {
            ++rep.checked;
            if (!bracketings_agree(make_label(alg, w), r))
                rep.fail(w.str());
        });
        reps.push_back(rep);
    } else
        throw domain_error("sweep kind must be kernel, purity or bracket");
    bool ok = true;
    json a = json::array();
    for (auto &r : reps) {
        ok = ok && r.ok();
        if (o.as_json)
            a.push_back({{"what", r.what}, {"checked", r.checked}, {"violations", r.violations}, {"samples", r.samples}});
        else {
            std::cout << r.what << ": " << r.checked << " weights, " << r.violations << " violations\n";
            for (auto &s : r.samples)
                std::cout << "  " << s << "\n";
        }
    }
    if (o.as_json)
        print(a);
    return ok ? kOk : kVerify;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"DS functor calculus for Lie superalgebras"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App *s, bool needs_alg = true) {
        if (needs_alg)
            s->add_option("algebra", o.algebra, "gl(m|n), osp(m|2n), p(n), q(n), D(2|1;a), G(3), F(4)")->required();
        s->add_flag("--json", o.as_json, "JSON output");
        s->add_option("--t", o.t, "require osp(2k+t|2k)");
    };

    auto *ds = app.add_subcommand("ds", "DS^r of a simple module");
    common(ds);
    ds->add_option("--weight", o.weight, "highest weight a,b|c,d");
    ds->add_option("--rank", o.rank, "rank r of x");
    ds->add_option("--split", o.split, "compute as DS^(r-s) of DS^s");
    ds->add_option("--convention", o.convention, "dex or even");
    ds->add_option("--block", o.block, "exceptional block: k, or i1,i2 for F(4)");
    ds->add_option("--vertex", o.vertex, "vertex of the exceptional block");

    auto *dg = app.add_subcommand("diagram", "arc diagram of a weight");
    common(dg);
    dg->add_option("--weight", o.weight, "highest weight a,b|c,d")->required();

    auto *orb = app.add_subcommand("orbits", "W-orbits on iso-sets");
    common(orb);
    orb->add_option("--rank", o.rank, "only iso-sets of this size");

    auto *ch = app.add_subcommand("char", "supercharacter operations on k(lambda)");
    ch->add_option("op", o.kind, "kac, restrict, sdim or order")->required();
    common(ch);
    ch->add_option("--weight", o.weight, "highest weight a,b|c,d")->required();
    ch->add_option("--rank", o.rank, "rank for restrict");
    ch->add_option("--bound", o.bound, "largest order tried");

    auto *ver = app.add_subcommand("verify", "explicit-module cross-checks");
    ver->add_option("algebra", o.algebra, "algebra of --module");
    ver->add_flag("--json", o.as_json, "JSON output");
    ver->add_option("--module", o.module_path, "ExplicitModule JSON file");
    ver->add_option("--bound", o.bound, "largest m and n of gl(m|n)");
    ver->add_option("--rank", o.rank, "largest iso-set size");
    ver->add_option("--seed", o.seed, "seed for operator coefficients");

    auto *sw = app.add_subcommand("sweep", "bounded sweeps");
    sw->add_option("kind", o.kind, "kernel, purity or bracket")->required();
    common(sw);
    sw->add_option("--bound", o.bound, "coordinate bound");
    sw->add_option("--rank", o.rank, "rank for bracket");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kDomain;
    }

    try {
        if (*ds)
            return run_ds(o);
        if (*dg)
            return run_diagram(o);
        if (*orb)
            return run_orbits(o);
        if (*ch)
            return run_char(o);
        if (*ver) {
            if (!o.module_path.empty() && o.algebra.empty())
                throw domain_error("--module needs the algebra");
            return run_verify(o);
        }
        if (*sw)
            return run_sweep(o);
    } catch (const domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const json::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kVerify;
    }
    return kDomain;
}
