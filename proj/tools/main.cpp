#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "jackpoly/cms_ops.hpp"
#include "jackpoly/deformed.hpp"
#include "jackpoly/ideals.hpp"
#include "jackpoly/json_io.hpp"
#include "jackpoly/shifted.hpp"

using namespace jackpoly;
using nlohmann::json;

namespace {

Partition parse_partition_arg(const std::string& s) {
    if (s.empty()) return Partition();
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (...) {
            throw InvalidInput("cannot parse partition entry: " + item);
        }
        if (pos != item.size()) throw InvalidInput("cannot parse partition entry: " + item);
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

struct OutputOptions {
    std::string format = "text";
    std::string theta;
    std::optional<BigRational> theta_value() const {
        if (theta.empty()) return std::nullopt;
        return parse_rational(theta);
    }
};

RatFun maybe_specialize(const RatFun& c, const std::optional<BigRational>& t) {
    if (!t) return c;
    return RatFun(c.evaluate_at(*t));
}

SymFn specialize_symfn(const SymFn& f, const std::optional<BigRational>& t) {
    if (!t) return f;
    SymFn out(f.basis(), f.truncation_degree());
    for (const auto& [l, c] : f.terms()) out.add_term(l, maybe_specialize(c, t));
    return out;
}

MultiPoly specialize_multipoly(const MultiPoly& p, const std::optional<BigRational>& t) {
    if (!t) return p;
    MultiPoly out(p.vars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, maybe_specialize(c, t));
    return out;
}

void emit_symfn(const SymFn& f, const OutputOptions& opt) {
    SymFn out = specialize_symfn(f, opt.theta_value());
    if (opt.format == "json")
        std::cout << symfn_to_json(out).dump() << "\n";
    else
        std::cout << out.to_string() << "\n";
}

void emit_multipoly(const MultiPoly& p, const OutputOptions& opt) {
    MultiPoly out = specialize_multipoly(p, opt.theta_value());
    if (opt.format == "json")
        std::cout << multipoly_to_json(out).dump() << "\n";
    else
        std::cout << out.to_string() << "\n";
}

void emit_coeff_map(const std::map<Partition, RatFun>& coeffs, const OutputOptions& opt) {
    auto t = opt.theta_value();
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& [l, c] : coeffs)
            arr.push_back(json{{"partition", partition_to_json(l)},
                               {"coeff", ratfun_to_json(maybe_specialize(c, t))}});
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& [l, c] : coeffs)
            std::cout << "P" << l.to_string() << ": " << maybe_specialize(c, t).to_string() << "\n";
    }
}

SymFn read_symfn_input(const std::string& file, const std::string& power) {
    if (!power.empty()) {
        Partition lambda = parse_partition_arg(power);
        return basis_convert(SymFn::unit(Basis::p, lambda, std::max(lambda.weight(), 1)), Basis::m);
    }
    if (file.empty()) throw InvalidInput("provide --file or --power");
    std::ifstream in(file);
    if (!in) throw InvalidInput("cannot open " + file);
    json j;
    in >> j;
    return symfn_from_json(j);
}

struct SuiteResult {
    std::string name;
    bool pass = true;
    long checks = 0;
    std::string detail;
};

SuiteResult run_eigen(int maxw) {
    SuiteResult r{"eigen"};
    for (const auto& lambda : enumerate_partitions(maxw)) {
        const SymFn& p = jack(lambda);
        SymFn residual = apply_cms(p) - p * cms_eigenvalue(lambda);
        ++r.checks;
        if (!residual.is_zero()) {
            r.pass = false;
            r.detail = json{{"lambda", partition_to_json(lambda)}}.dump();
            return r;
        }
    }
    return r;
}

SuiteResult run_kernel(int n, int m, int maxw) {
    SuiteResult r{"kernel"};
    for (const auto& lambda : enumerate_partitions(maxw)) {
        ++r.checks;
        if (kernel_check(lambda, n, m) != !in_fat_hook(lambda, n, m)) {
            r.pass = false;
            r.detail = json{{"lambda", partition_to_json(lambda)}, {"n", n}, {"m", m}}.dump();
            return r;
        }
    }
    return r;
}

SuiteResult run_duality(int maxw) {
    SuiteResult r{"duality"};
    auto all = enumerate_partitions(maxw);
    for (const auto& lambda : all)
        for (const auto& mu : all) {
            ++r.checks;
            if (!check_duality(lambda, mu).is_zero()) {
                r.pass = false;
                r.detail = json{{"lambda", partition_to_json(lambda)},
                                {"mu", partition_to_json(mu)}}.dump();
                return r;
            }
        }
    return r;
}

SuiteResult run_tableau(int maxw) {
    SuiteResult r{"tableau"};
    int maxn = std::max(1, std::min(maxw, 5));
    for (const auto& lambda : enumerate_partitions(maxw))
        for (int N = 1; N <= maxn; ++N) {
            ++r.checks;
            if (jack_tableau(lambda, N, RatFun::theta()) != expand_in_variables(jack(lambda), N)) {
                r.pass = false;
                r.detail = json{{"lambda", partition_to_json(lambda)}, {"N", N}}.dump();
                return r;
            }
        }
    return r;
}

SuiteResult run_pieri(int maxw) {
    SuiteResult r{"pieri"};
    for (const auto& lambda : enumerate_partitions(maxw)) {
        for (int j = 1; j <= lambda.length() + 1; ++j) {
            if (j > 1 && lambda.part(j) == lambda.part(j - 1)) continue;
            ++r.checks;
            if (pieri_psi_box(lambda, lambda.with_part_increased(j)).is_zero()) {
                r.pass = false;
                r.detail = json{{"lambda", partition_to_json(lambda)}, {"row", j}}.dump();
                return r;
            }
        }
        if (lambda.weight() >= maxw) continue;
        for (int k = 1; k <= maxw - lambda.weight(); ++k) {
            ++r.checks;
            try {
                pieri_expand_e(lambda, k, maxw); // self-checks both routes
            } catch (const InternalInconsistency&) {
                r.pass = false;
                r.detail = json{{"lambda", partition_to_json(lambda)}, {"r", k}}.dump();
                return r;
            }
        }
    }
    return r;
}

SuiteResult run_integrals(int n, int m, int maxw) {
    SuiteResult r{"integrals"};
    int rmax = std::max(1, std::min(3, maxw));
    for (int p = 1; p <= 3; ++p)
        for (int k = 1; k <= rmax; ++k) {
            ++r.checks;
            auto out = quantum_integral_apply(p, deformed_newton(k, n, m));
            if (!is_in_deformed_algebra(out.poly, n, m)) {
                r.pass = false;
                r.detail = json{{"p", p}, {"r", k}}.dump();
                return r;
            }
        }
    for (int p = 1; p <= 3; ++p)
        for (int q = p + 1; q <= 3; ++q)
            for (int k = 1; k <= rmax; ++k) {
                ++r.checks;
                auto f = deformed_newton(k, n, m);
                if (quantum_integral_apply(p, quantum_integral_apply(q, f)).poly !=
                    quantum_integral_apply(q, quantum_integral_apply(p, f)).poly) {
                    r.pass = false;
                    r.detail = json{{"p", p}, {"q", q}, {"r", k}}.dump();
                    return r;
                }
            }
    for (const auto& lambda : enumerate_partitions(std::min(3, maxw))) {
        if (!in_fat_hook(lambda, n, m) || lambda.empty()) continue;
        const auto& sp = super_jack_cached(lambda, n, m);
        for (int p = 1; p <= 3; ++p) {
            ++r.checks;
            auto out = quantum_integral_apply(p, sp);
            const auto& [e0, c0] = *sp.poly.terms().begin();
            RatFun scalar = out.poly.coeff(e0) / c0;
            if (out.poly != sp.poly * scalar) {
                r.pass = false;
                r.detail = json{{"lambda", partition_to_json(lambda)}, {"p", p}}.dump();
                return r;
            }
        }
    }
    return r;
}

SuiteResult run_filters(int maxw) {
    SuiteResult r{"filters"};
    int genw = std::max(1, std::min(4, maxw - 1));
    for (const auto& g : enumerate_partitions(genw)) {
        if (g.empty()) continue;
        ++r.checks;
        if (!verify_ideal_closure(Filter({g}), maxw)) {
            r.pass = false;
            r.detail = json{{"generator", partition_to_json(g)}}.dump();
            return r;
        }
    }
    return r;
}

int run_verify(const std::string& suite, int n, int m, int maxw) {
    std::vector<SuiteResult> results;
    auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
    if (want("eigen")) results.push_back(run_eigen(maxw));
    if (want("kernel")) results.push_back(run_kernel(n, m, maxw));
    if (want("duality")) results.push_back(run_duality(maxw));
    if (want("tableau")) results.push_back(run_tableau(maxw));
    if (want("pieri")) results.push_back(run_pieri(maxw));
    if (want("integrals")) results.push_back(run_integrals(n, m, maxw));
    if (want("filters")) results.push_back(run_filters(maxw));
    if (results.empty()) throw InvalidInput("unknown suite: " + suite);
    bool all_pass = true;
    for (const auto& r : results) {
        if (r.pass) {
            std::cout << "PASS " << r.name << ": " << r.checks << " checks\n";
        } else {
            all_pass = false;
            std::cout << "FAIL " << r.name << ": counterexample " << r.detail << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Jack, shifted Jack, super-Jack and shifted super-Jack calculator over Q(theta)"};
    app.require_subcommand(1);

    OutputOptions opt;
    std::string lambda_arg, method_arg, convention_arg = "flat", basis_arg = "m";
    std::string suite_arg = "all", file_arg, power_arg, filter_arg;
    int n = 1, m = 1, vars = -1, rr = 1, degree_arg = -1, max_weight = 4;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--theta", opt.theta, "specialize theta to a rational p/q");
    };

    auto* cjack = app.add_subcommand("jack", "Jack polynomial P_lambda");
    cjack->add_option("--lambda", lambda_arg)->required();
    cjack->add_option("--basis", basis_arg)->check(CLI::IsMember({"m", "p", "e", "h", "jack"}));
    cjack->add_option("--vars", vars, "expand in this many variables");
    add_output(cjack);

    auto* cshifted = app.add_subcommand("shifted-jack", "shifted Jack polynomial P*_lambda");
    cshifted->add_option("--lambda", lambda_arg)->required();
    cshifted->add_option("--vars", vars);
    cshifted->add_option("--method", method_arg)
        ->check(CLI::IsMember({"branching", "vanishing", "tableau"}));
    add_output(cshifted);

    auto* csuper = app.add_subcommand("superjack", "super-Jack polynomial SP_lambda");
    csuper->add_option("--lambda", lambda_arg)->required();
    csuper->add_option("--n", n);
    csuper->add_option("--m", m);
    csuper->add_option("--method", method_arg)->check(CLI::IsMember({"skew", "bitableau", "phi"}));
    add_output(csuper);

    auto* cshsuper = app.add_subcommand("shifted-superjack", "shifted super-Jack polynomial");
    cshsuper->add_option("--lambda", lambda_arg)->required();
    cshsuper->add_option("--n", n);
    cshsuper->add_option("--m", m);
    cshsuper->add_option("--convention", convention_arg)->check(CLI::IsMember({"natural", "flat"}));
    add_output(cshsuper);

    auto* cnewton = app.add_subcommand("newton", "deformed Newton sum p_r(x,y,theta)");
    cnewton->add_option("--r", rr)->required();
    cnewton->add_option("--n", n);
    cnewton->add_option("--m", m);
    add_output(cnewton);

    auto* cpieri = app.add_subcommand("pieri", "expansion of P_lambda e_r in the Jack basis");
    cpieri->add_option("--lambda", lambda_arg)->required();
    cpieri->add_option("--r", rr);
    cpieri->add_option("--degree", degree_arg);
    add_output(cpieri);

    auto* cexpand = app.add_subcommand("expand", "Jack-basis expansion of a symmetric function");
    cexpand->add_option("--file", file_arg, "SymFn JSON input");
    cexpand->add_option("--power", power_arg, "use the power sum p_lambda as input");
    add_output(cexpand);

    auto* cproject = app.add_subcommand("project", "projection onto the ideal of a filter");
    cproject->add_option("--file", file_arg, "SymFn JSON input");
    cproject->add_option("--power", power_arg);
    cproject->add_option("--filter", filter_arg, "filter generators, e.g. [[2],[1,1]]")->required();
    add_output(cproject);

    auto* cverify = app.add_subcommand("verify", "run verification sweeps");
    cverify->add_option("suite", suite_arg)
        ->check(CLI::IsMember({"eigen", "kernel", "duality", "tableau", "pieri", "integrals",
                               "filters", "all"}));
    cverify->add_option("--n", n);
    cverify->add_option("--m", m);
    cverify->add_option("--max-weight", max_weight);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cjack->parsed()) {
            Partition lambda = parse_partition_arg(lambda_arg);
            if (vars >= 0) {
                emit_multipoly(expand_in_variables(jack(lambda), vars), opt);
            } else if (basis_arg == "jack") {
                SymFn out(Basis::jack, std::max(lambda.weight(), 1));
                out.add_term(lambda, RatFun(1));
                emit_symfn(out, opt);
            } else {
                emit_symfn(basis_convert(jack(lambda), parse_basis(basis_arg)), opt);
            }
        } else if (cshifted->parsed()) {
            Partition lambda = parse_partition_arg(lambda_arg);
            int N = vars >= 0 ? vars : std::max(1, lambda.length());
            ShiftedMethod method = ShiftedMethod::branching;
            if (method_arg == "vanishing") method = ShiftedMethod::vanishing;
            if (method_arg == "tableau") method = ShiftedMethod::tableau;
            emit_multipoly(shifted_jack(lambda, N, method).poly, opt);
        } else if (csuper->parsed()) {
            Partition lambda = parse_partition_arg(lambda_arg);
            SuperJackMethod method = SuperJackMethod::skew_expansion;
            if (method_arg == "bitableau") method = SuperJackMethod::bitableau;
            if (method_arg == "phi") method = SuperJackMethod::via_phi;
            DeformedPoly sp = super_jack(lambda, n, m, method);
            emit_multipoly(sp.poly, opt);
            if (sp.poly.is_zero() && !in_fat_hook(lambda, n, m))
                std::cerr << "note: diagram exceeds the fat (" << n << "," << m
                          << ")-hook, so the polynomial vanishes identically\n";
        } else if (cshsuper->parsed()) {
            Partition lambda = parse_partition_arg(lambda_arg);
            ShiftConvention conv =
                convention_arg == "natural" ? ShiftConvention::natural : ShiftConvention::flat;
            emit_multipoly(shifted_super_jack(lambda, n, m, conv), opt);
        } else if (cnewton->parsed()) {
            emit_multipoly(deformed_newton(rr, n, m).poly, opt);
        } else if (cpieri->parsed()) {
            Partition lambda = parse_partition_arg(lambda_arg);
            int d = degree_arg >= 0 ? degree_arg : lambda.weight() + rr;
            emit_coeff_map(pieri_expand_e(lambda, rr, d), opt);
        } else if (cexpand->parsed()) {
            emit_coeff_map(expand_in_jack_basis(read_symfn_input(file_arg, power_arg)), opt);
        } else if (cproject->parsed()) {
            Filter filter = filter_from_json(json::parse(filter_arg));
            emit_symfn(ideal_project(read_symfn_input(file_arg, power_arg), filter), opt);
        } else if (cverify->parsed()) {
            return run_verify(suite_arg, n, m, max_weight);
        }
    } catch (const PoleAtTheta& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
