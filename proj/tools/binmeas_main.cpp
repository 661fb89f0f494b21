#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "binmeas/catalog.hpp"
#include "binmeas/derivable.hpp"
#include "binmeas/integration.hpp"
#include "binmeas/literal.hpp"
#include "binmeas/ls_measure.hpp"
#include "binmeas/verify.hpp"

namespace {

using namespace binmeas;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string trim_copy(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_ws_copy(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

LawPair parse_laws(const std::string& s) {
    if (s == "delta-cap") return LawPair::DeltaCap;
    if (s == "theta-cup") return LawPair::ThetaCup;
    throw UsageError("laws must be delta-cap or theta-cup");
}

int cmd_ring_check(const std::string& file, const std::string& laws_name, bool machine) {
    const ParsedFamily fam = parse_family(slurp(file));
    const LawPair laws = parse_laws(laws_name);
    Bit ring = 0;
    std::string note;
    try {
        ring = is_set_ring(fam.universe, fam.members, laws);
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    Bit algebra = 0;
    if (ring) algebra = is_set_algebra(fam.universe, fam.members, laws);
    if (machine) {
        std::cout << "CHECK ring " << (ring ? "PASS" : "FAIL") << "\n";
        std::cout << "CHECK algebra " << (algebra ? "PASS" : "FAIL") << "\n";
    } else {
        std::cout << "family of " << fam.members.size() << " subsets over "
                  << fam.universe.size() << " labels (" << laws_name << ")\n";
        std::cout << "set ring: " << (ring ? "yes" : "no") << note << "\n";
        std::cout << "set algebra: " << (ring ? (algebra ? "yes" : "no") : "n/a") << "\n";
    }
    return ring ? kExitOk : kExitCheckFailed;
}

int cmd_setfn_check_additive(const std::string& file, const std::string& laws_name,
                             bool machine) {
    const ParsedTabFn tab = parse_tabfn(slurp(file));
    const LawPair laws = parse_laws(laws_name);
    SetRingFamily ring(tab.universe, tab.members, laws);
    std::vector<Bit> values(ring.members().size());
    for (std::size_t i = 0; i < tab.members.size(); ++i)
        values[ring.index_of(tab.members[i])] = tab.values[i];
    TabulatedSetFunction mu(ring, values);
    const AdditivityReport r =
        laws == LawPair::DeltaCap ? check_additive(mu) : check_additive_star(mu);
    if (machine) {
        std::cout << "CHECK additive " << (r.verdict ? "PASS" : "FAIL");
        if (!r.verdict && r.witness)
            std::cout << " witness-pair " << r.witness->first.bits << " "
                      << r.witness->second.bits;
        std::cout << "\n";
    } else {
        std::cout << (laws == LawPair::DeltaCap ? "additive: " : "additive*: ")
                  << (r.verdict ? "yes" : "no") << "\n";
        if (!r.verdict && r.witness)
            std::cout << "witness masks: " << r.witness->first.bits << ", "
                      << r.witness->second.bits << "\n";
    }
    return r.verdict ? kExitOk : kExitCheckFailed;
}

// Named measure/family fixtures for the countable check.
int cmd_setfn_check_countable(const std::string& measure, const std::string& family,
                              std::size_t depth, bool machine) {
    CountableFamilyReport report;
    if (measure == "seq-limit" && family == "canonical-base") {
        report = check_countable_family(catalog::limit_functional(),
                                        catalog::canonical_base_family(), depth);
    } else if (measure == "seq-coord0" && family == "canonical-base") {
        report =
            check_countable_family(catalog::coord(0), catalog::canonical_base_family(), depth);
    } else if (measure == "sring-parity" && family == "telescope-313") {
        report = check_countable_family(catalog::step_ring_parity(),
                                        catalog::interval_313_family(), depth);
    } else if (measure == "ls-unit" && family == "telescope-01") {
        const BinaryStepFunction f = sf_normalize(0, {0, 1});  // indicator of (0, 1]
        const auto fam = ls_telescope_family(f, ExtendedRational(Rational(0)),
                                             ExtendedRational(Rational(1)));
        report = ls_structured_countable_check(LSMeasure{f}, fam,
                                               std::max(depth, fam.tail_index));
    } else {
        throw UsageError(
            "unknown measure/family pair; available: seq-limit/canonical-base, "
            "seq-coord0/canonical-base, sring-parity/telescope-313, ls-unit/telescope-01");
    }
    if (machine) {
        std::cout << "CHECK countable " << (report.pass() ? "PASS" : "FAIL") << " union="
                  << report.union_value << " xor=" << report.xor_sum << "\n";
    } else {
        std::cout << "finitely many ones: " << report.finitely_many_ones << "\n"
                  << "xor equality: " << report.xor_equality << " (union="
                  << report.union_value << ", xor-sum=" << report.xor_sum << ")\n";
    }
    return report.pass() ? kExitOk : kExitCheckFailed;
}

int cmd_catalog_run(const std::string& name, std::size_t depth, bool machine) {
    catalog::CounterexampleCase which;
    if (name == "seq-3-6")
        which = catalog::CounterexampleCase::Seq36;
    else if (name == "interval-3-13")
        which = catalog::CounterexampleCase::Interval313;
    else
        throw UsageError("case must be seq-3-6 or interval-3-13");
    const auto r = catalog::counterexample_divergence(which, depth);
    if (machine) {
        std::cout << "CHECK counterexample-" << name
                  << (r.countably_additive == 0 ? " PASS" : " FAIL") << " union="
                  << int(r.union_value) << " xor=" << int(r.xor_sum) << "\n";
    } else {
        std::cout << "union value: " << int(r.union_value) << "\n"
                  << "xor sum: " << int(r.xor_sum) << "\n"
                  << "countably additive: " << int(r.countably_additive) << "\n";
    }
    return kExitOk;
}

void cmd_catalog_list() {
    std::cout << "null                      zero measure on any carrier\n"
                 "finite_boolean            parity of |A| on finite subsets of R\n"
                 "dirac(x0)                 [x0 in A] on finite subsets\n"
                 "dirac_sum(x1,...)         XOR of diracs over a finite carrier set\n"
                 "restriction(finite_boolean; points=...)  base measure cut to a set\n"
                 "inferiorly_finite(alpha)  parity below the threshold\n"
                 "coord(k)                  k-th coordinate of a binary sequence\n"
                 "coord_sum(k1,...)         XOR of coordinates\n"
                 "limit                     limit functional (additive, not a measure)\n"
                 "seq_sum                   modulo-2 sum on sequences with tail 0\n"
                 "left_limit_eval(t)        f(t-0) on step functions\n"
                 "sym_sup                   1 iff sup A = inf on interval unions\n"
                 "indicator_integral(a,b)   parity of supp f in the window\n"
                 "indicator_integral()      parity of the whole support\n"
                 "step_ring_parity          parity measure of the ring S\n"
                 "cofinite_star             measure* on cofinite sets\n";
}

// `<name>` or `<name>(<args>)`.
std::pair<std::string, std::string> split_spec(const std::string& spec) {
    const auto open = spec.find('(');
    if (open == std::string::npos) return {spec, ""};
    if (spec.back() != ')') throw UsageError("unbalanced construction spec");
    return {spec.substr(0, open), spec.substr(open + 1, spec.size() - open - 2)};
}

int cmd_catalog_eval(const std::string& spec, const std::string& arg, bool machine) {
    const auto [name, params] = split_spec(spec);
    Bit value = 0;
    if (name == "null") {
        value = 0;
    } else if (name == "finite_boolean") {
        value = catalog::finite_boolean()(parse_points(arg));
    } else if (name == "dirac") {
        value = catalog::dirac(parse_rational(params))(parse_points(arg));
    } else if (name == "dirac_sum") {
        std::vector<Rational> h;
        std::istringstream in(params);
        std::string tok;
        while (std::getline(in, tok, ',')) h.push_back(parse_rational(tok));
        value = catalog::dirac_sum(h)(parse_points(arg));
    } else if (name == "restriction") {
        const auto semi = params.find(';');
        if (semi == std::string::npos)
            throw UsageError("restriction(<base>; points=...)");
        const std::string base = params.substr(0, semi);
        if (base != "finite_boolean")
            throw UsageError("only restriction(finite_boolean; ...) is exposed here");
        const auto a = parse_points(params.substr(semi + 1));
        value = catalog::restriction(catalog::finite_boolean(), a)(parse_points(arg));
    } else if (name == "inferiorly_finite") {
        value = catalog::inferiorly_finite(parse_rational(params))(parse_points(arg));
    } else if (name == "coord") {
        value = catalog::coord(std::stoull(params))(parse_sequence(arg));
    } else if (name == "coord_sum") {
        std::vector<std::uint64_t> h;
        std::istringstream in(params);
        std::string tok;
        while (std::getline(in, tok, ',')) h.push_back(std::stoull(tok));
        value = catalog::coord_sum(h)(parse_sequence(arg));
    } else if (name == "limit") {
        value = catalog::limit_functional()(parse_sequence(arg));
    } else if (name == "seq_sum") {
        value = catalog::seq_sum()(parse_sequence(arg));
    } else if (name == "left_limit_eval") {
        value = catalog::left_limit_eval(parse_extended_rational(params))(parse_stepfn(arg));
    } else if (name == "sym_sup") {
        value = catalog::sym_sup()(parse_interval(arg));
    } else if (name == "indicator_integral") {
        if (params.empty()) {
            value = catalog::indicator_integral_all()(parse_points(arg));
        } else {
            const auto comma = params.find(',');
            if (comma == std::string::npos) throw UsageError("indicator_integral(a,b)");
            const auto w = interval(parse_extended_rational(params.substr(0, comma)),
                                    parse_extended_rational(params.substr(comma + 1)));
            value = catalog::indicator_integral(w)(parse_points(arg));
        }
    } else if (name == "step_ring_parity") {
        value = catalog::step_ring_parity()(parse_sset(arg));
    } else if (name == "cofinite_star") {
        value = catalog::cofinite_star_eval(parse_cofinite(arg));
    } else {
        throw UsageError("unknown construction: " + name);
    }
    if (machine)
        std::cout << "VALUE " << int(value) << "\n";
    else
        std::cout << int(value) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary measure theory toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "text";
    app.add_option("--format", format, "text or machine")->capture_default_str();
    std::uint64_t seed = 1;
    std::size_t depth = 64;
    std::size_t samples = 1000;
    app.add_option("--seed", seed, "seed for every randomized suite")->capture_default_str();
    app.add_option("--depth", depth, "family evaluation depth")->capture_default_str();
    app.add_option("--samples", samples, "sample count for property suites")
        ->capture_default_str();

    // b2 table
    auto* b2 = app.add_subcommand("b2", "the two-element Boole algebra");
    auto* b2_table = b2->add_subcommand("table", "print the five-law truth table");

    // ring check
    auto* ring = app.add_subcommand("ring", "set ring recognition");
    auto* ring_check = ring->add_subcommand("check", "check a tabulated family file");
    std::string ring_file, ring_laws = "delta-cap";
    ring_check->add_option("--file", ring_file, "family file")->required();
    ring_check->add_option("--laws", ring_laws, "delta-cap or theta-cup")
        ->capture_default_str();

    // setfn
    auto* setfn = app.add_subcommand("setfn", "binary set functions");
    auto* setfn_add = setfn->add_subcommand("check-additive", "additivity of a tabulated file");
    std::string setfn_file, setfn_laws = "delta-cap";
    setfn_add->add_option("--file", setfn_file, "tabulated set function file")->required();
    setfn_add->add_option("--laws", setfn_laws, "delta-cap or theta-cup")
        ->capture_default_str();
    auto* setfn_cnt = setfn->add_subcommand("check-countable", "structured countable check");
    std::string cnt_measure, cnt_family;
    setfn_cnt->add_option("--measure", cnt_measure, "named measure")->required();
    setfn_cnt->add_option("--family", cnt_family, "named family")->required();

    // catalog
    auto* cat = app.add_subcommand("catalog", "the example constructions");
    auto* cat_list = cat->add_subcommand("list", "list the constructions");
    auto* cat_run = cat->add_subcommand("run", "run a counterexample case");
    std::string cat_case;
    cat_run->add_option("--case", cat_case, "seq-3-6 or interval-3-13")->required();
    auto* cat_eval = cat->add_subcommand("eval", "evaluate a construction");
    std::string cat_spec, cat_arg;
    cat_eval->add_option("--spec", cat_spec, "construction spec, e.g. dirac(1)")->required();
    cat_eval->add_option("--arg", cat_arg, "set literal for the carrier")->required();

    // interval
    auto* iv = app.add_subcommand("interval", "canonical interval unions");
    auto* iv_op_cmd = iv->add_subcommand("op", "set operation on interval literals");
    std::string iv_opname, iv_a, iv_b;
    iv_op_cmd->add_option("--op", iv_opname, "delta, cap or cup")->required();
    iv_op_cmd->add_option("--a", iv_a, "left operand")->required();
    iv_op_cmd->add_option("--b", iv_b, "right operand")->required();

    // stepfn
    auto* sf = app.add_subcommand("stepfn", "binary step functions");
    auto* sf_eval_cmd = sf->add_subcommand("eval", "evaluate a step function literal");
    std::string sf_f, sf_t;
    sf_eval_cmd->add_option("--f", sf_f, "step function literal")->required();
    sf_eval_cmd->add_option("--t", sf_t, "point (rational or inf)")->required();

    // ls
    auto* ls = app.add_subcommand("ls", "Lebesgue-Stieltjes measures");
    auto* ls_eval_cmd = ls->add_subcommand("eval", "measure of an interval union");
    std::string ls_f, ls_set;
    ls_eval_cmd->add_option("--f", ls_f, "step function literal")->required();
    ls_eval_cmd->add_option("--set", ls_set, "interval literal")->required();
    auto* ls_cdf_cmd = ls->add_subcommand("cdf", "the function t -> mu([[origin,t)))");
    std::string cdf_f, cdf_origin;
    bool cdf_emit = false;
    ls_cdf_cmd->add_option("--f", cdf_f, "step function literal")->required();
    ls_cdf_cmd->add_option("--origin", cdf_origin, "rational or -inf")->required();
    ls_cdf_cmd->add_flag("--emit", cdf_emit, "print the resulting step function literal");

    // parity / deriv
    auto* par = app.add_subcommand("parity", "parity measure of a locally finite set");
    std::string par_h, par_set;
    par->add_option("--H", par_h, "locally finite set literal")->required();
    par->add_option("--set", par_set, "box literal")->required();

    auto* der = app.add_subcommand("deriv", "derivative of the parity measure");
    std::string der_h, der_x;
    der->add_option("--H", der_h, "locally finite set literal")->required();
    der->add_option("--x", der_x, "point tuple, e.g. (1,2)")->required();

    // riemann / primitive / dual-riemann / integrate
    auto* rie = app.add_subcommand("riemann", "Riemann integral of a sparse function");
    std::string rie_f, rie_from, rie_to;
    rie->add_option("--f", rie_f, "points literal")->required();
    rie->add_option("--from", rie_from, "lower endpoint")->required();
    rie->add_option("--to", rie_to, "upper endpoint")->required();

    auto* prim = app.add_subcommand("primitive", "left primitive of a sparse function");
    std::string prim_f, prim_origin;
    bool prim_emit = false;
    prim->add_option("--f", prim_f, "points literal")->required();
    prim->add_option("--origin", prim_origin, "rational or -inf")->required();
    prim->add_flag("--emit", prim_emit, "print the resulting step function literal");

    auto* dual = app.add_subcommand("dual-riemann", "algebraic dual of the left integral");
    std::string dual_zeros, dual_from, dual_to;
    dual->add_option("--zeros", dual_zeros, "points literal of the zero set")->required();
    dual->add_option("--from", dual_from, "lower endpoint")->required();
    dual->add_option("--to", dual_to, "upper endpoint")->required();

    auto* integ = app.add_subcommand("integrate", "integral of f relative to a measure");
    std::string integ_space = "finite", integ_measure, integ_f, integ_on;
    integ->add_option("--space", integ_space, "finite, interval or box")
        ->capture_default_str();
    integ->add_option("--measure", integ_measure, "construction spec")->required();
    integ->add_option("--f", integ_f, "integrand literal")->required();
    integ->add_option("--on", integ_on, "restrict to a set literal");

    // verify
    auto* verify = app.add_subcommand("verify", "acceptance suite");
    auto* verify_all_cmd = verify->add_subcommand("all", "run every acceptance criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const bool machine = format == "machine";
    try {
        if (b2_table->parsed()) {
            std::cout << render_b2_table();
            return kExitOk;
        }
        if (ring_check->parsed()) return cmd_ring_check(ring_file, ring_laws, machine);
        if (setfn_add->parsed())
            return cmd_setfn_check_additive(setfn_file, setfn_laws, machine);
        if (setfn_cnt->parsed())
            return cmd_setfn_check_countable(cnt_measure, cnt_family, depth, machine);
        if (cat_list->parsed()) {
            cmd_catalog_list();
            return kExitOk;
        }
        if (cat_run->parsed()) return cmd_catalog_run(cat_case, depth, machine);
        if (cat_eval->parsed()) return cmd_catalog_eval(cat_spec, cat_arg, machine);
        if (iv_op_cmd->parsed()) {
            IvOp op;
            if (iv_opname == "delta")
                op = IvOp::Delta;
            else if (iv_opname == "cap")
                op = IvOp::Cap;
            else if (iv_opname == "cup")
                op = IvOp::Cup;
            else
                throw UsageError("op must be delta, cap or cup");
            std::cout << print_interval(iv_op(op, parse_interval(iv_a), parse_interval(iv_b)))
                      << "\n";
            return kExitOk;
        }
        if (sf_eval_cmd->parsed()) {
            std::cout << int(sf_eval(parse_stepfn(sf_f), parse_extended_rational(sf_t)))
                      << "\n";
            return kExitOk;
        }
        if (ls_eval_cmd->parsed()) {
            std::cout << int(ls_eval(LSMeasure{parse_stepfn(ls_f)}, parse_interval(ls_set)))
                      << "\n";
            return kExitOk;
        }
        if (ls_cdf_cmd->parsed()) {
            const BinaryStepFunction g =
                ls_cdf(LSMeasure{parse_stepfn(cdf_f)}, parse_extended_rational(cdf_origin));
            std::cout << print_stepfn(g) << "\n";
            return kExitOk;
        }
        if (par->parsed()) {
            const auto h = parse_locfin(par_h);
            std::cout << int(mu_locfin(h)(parse_box(par_set))) << "\n";
            return kExitOk;
        }
        if (der->parsed()) {
            const auto h = parse_locfin(der_h);
            Point x;
            const std::string t = der_x;
            if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
                for (const auto& tok : [&] {
                         std::vector<std::string> parts;
                         std::string cur;
                         for (char c : t.substr(1, t.size() - 2)) {
                             if (c == ',') {
                                 parts.push_back(cur);
                                 cur.clear();
                             } else
                                 cur += c;
                         }
                         parts.push_back(cur);
                         return parts;
                     }())
                    x.coords.push_back(parse_rational(tok));
            } else {
                x.coords.push_back(parse_rational(t));
            }
            std::cout << int(derivative_at(mu_locfin(h), x)) << "\n";
            return kExitOk;
        }
        if (rie->parsed()) {
            std::cout << int(left_integral(parse_points(rie_f), parse_extended_rational(rie_from),
                                           parse_extended_rational(rie_to)))
                      << "\n";
            return kExitOk;
        }
        if (prim->parsed()) {
            const BinaryStepFunction g =
                left_primitive(parse_points(prim_f), parse_extended_rational(prim_origin));
            std::cout << print_stepfn(g) << "\n";
            return kExitOk;
        }
        if (dual->parsed()) {
            std::cout << int(dual_left_integral(parse_points(dual_zeros),
                                                parse_extended_rational(dual_from),
                                                parse_extended_rational(dual_to)))
                      << "\n";
            return kExitOk;
        }
        if (integ->parsed()) {
            if (integ_space == "finite") {
                // The measure is a tabulated set-function file; f and the
                // optional window are subset lines over its universe.
                const ParsedTabFn tab = parse_tabfn(slurp(integ_measure));
                SetRingFamily ring(tab.universe, tab.members, LawPair::DeltaCap);
                std::vector<Bit> values(ring.members().size());
                for (std::size_t i = 0; i < tab.members.size(); ++i)
                    values[ring.index_of(tab.members[i])] = tab.values[i];
                const TabulatedSetFunction mu(ring, values);
                auto subset = [&](const std::string& text) {
                    SubsetMask m{};
                    if (trim_copy(text) != "{}")
                        for (const auto& label : split_ws_copy(text))
                            m.bits |= (1u << tab.universe.index_of(label));
                    return m;
                };
                const SubsetMask fs = subset(integ_f);
                if (!integ_on.empty())
                    std::cout << int(integral_on(subset(integ_on), fs, mu)) << "\n";
                else
                    std::cout << int(integral(fs, mu)) << "\n";
                return kExitOk;
            }
            if (integ_space == "interval") {
                const auto f = parse_points(integ_f);
                const auto [name, params] = split_spec(integ_measure);
                if (name != "finite_boolean")
                    throw UsageError("interval-space integration uses finite_boolean");
                if (!integ_on.empty())
                    std::cout << int(riemann_integral(f, parse_interval(integ_on))) << "\n";
                else
                    std::cout << int(full_integral(f)) << "\n";
                return kExitOk;
            }
            if (integ_space == "box") {
                const auto g = parse_locfin(integ_f);
                const auto [name, params] = split_spec(integ_measure);
                if (name != "parity")
                    throw UsageError("box-space integration uses parity(<locfin literal>)");
                const auto mu = mu_locfin(parse_locfin(params));
                if (!integ_on.empty())
                    std::cout << int(integral_on_derivable(parse_box(integ_on), g, mu)) << "\n";
                else
                    std::cout << int(integral_derivable(g, mu)) << "\n";
                return kExitOk;
            }
            throw UsageError("space must be finite, interval or box");
        }
        if (verify_all_cmd->parsed()) {
            VerifyConfig cfg;
            cfg.seed = seed;
            cfg.depth = depth;
            cfg.samples = samples;
            const VerifyReport report = verify_all(cfg);
            if (machine)
                std::cout << report.machine_text();
            else
                std::cout << report.human_text();
            return report.all_pass() ? kExitOk : kExitCheckFailed;
        }
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
