// Command-line front end for the toolkit: sign bookkeeping for inner
// forms, parameter classification, normalizer diagrams, endoscopic
// enumeration, the Weil-group representation ring, and the numeric
// verification suites.  All output is JSON on stdout.
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 malformed
// input or configuration.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "arthurlab/acceptance.hpp"
#include "arthurlab/endoscopy.hpp"
#include "arthurlab/intertwining.hpp"
#include "arthurlab/json_io.hpp"
#include "arthurlab/kottwitz.hpp"
#include "arthurlab/levi_diagram.hpp"
#include "arthurlab/parameters.hpp"
#include "arthurlab/so_structure.hpp"
#include "arthurlab/weil_real.hpp"

namespace {

using nlohmann::json;
namespace al = arthurlab;

int g_exit_code = 0;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> grid;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        grid.push_back(std::stod(item));
    }
    if (grid.empty()) throw std::invalid_argument("empty grid");
    return grid;
}

std::vector<al::kottwitz::SignCharacter> parse_signs(const std::string& csv) {
    std::vector<al::kottwitz::SignCharacter> signs;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        int v = std::stoi(item);
        if (v != 1 && v != -1) throw std::invalid_argument("signs must be +1 or -1");
        signs.push_back(al::kottwitz::SignCharacter(v));
    }
    return signs;
}

int thread_budget() {
    const char* env = std::getenv("ARTHURLAB_THREADS");
    if (!env) return 1;
    int t = std::atoi(env);
    return t >= 1 ? t : 1;
}

// ----------------------------------------------------------------------

void add_kottwitz(CLI::App& app) {
    auto* cmd = app.add_subcommand("kottwitz", "inner-form sign bookkeeping");
    cmd->require_subcommand(1);

    auto* alpha = cmd->add_subcommand("alpha", "character of an inner form");
    static std::vector<int> real_pq;
    static std::string padic;
    alpha->add_option("--real", real_pq, "signature p q")->expected(2);
    alpha->add_option("--padic", padic, "split|nonsplit");
    alpha->callback([] {
        if (!real_pq.empty()) {
            emit({{"sign", al::kottwitz::alpha_real(real_pq[0], real_pq[1]).value}});
        } else if (!padic.empty()) {
            emit({{"sign", al::kottwitz::alpha_padic(padic == "split").value}});
        } else {
            throw CLI::ValidationError("alpha", "need --real p q or --padic split|nonsplit");
        }
    });

    auto* product = cmd->add_subcommand("product", "global product formula");
    static std::string signs_csv;
    product->add_option("--signs", signs_csv, "comma-separated +1/-1 list")->required();
    product->callback([] {
        bool ok = al::kottwitz::product_formula(parse_signs(signs_csv));
        emit({{"globalizable", ok}});
    });

    auto* sign = cmd->add_subcommand("sign", "Kottwitz sign e(G)");
    static std::vector<int> sign_pq;
    static std::string sign_padic;
    sign->add_option("--real", sign_pq, "signature p q")->expected(2);
    sign->add_option("--padic", sign_padic, "split|nonsplit");
    sign->callback([] {
        al::kottwitz::LocalFormDescriptor form;
        if (!sign_pq.empty())
            form = al::kottwitz::LocalFormDescriptor::real(sign_pq[0], sign_pq[1]);
        else if (!sign_padic.empty())
            form = al::kottwitz::LocalFormDescriptor::padic(sign_padic == "split");
        else
            throw CLI::ValidationError("sign", "need --real p q or --padic split|nonsplit");
        emit({{"sign", al::kottwitz::kottwitz_sign(form).value}});
    });
}

void add_param(CLI::App& app) {
    auto* cmd = app.add_subcommand("param", "local parameter analysis");
    auto* classify = cmd->add_subcommand("classify", "classify a parameter");
    static std::string spec;
    classify->add_option("--spec", spec, "parameter JSON")->required();
    classify->callback([] {
        al::params::LocalParameter p = al::json_io::parameter_from_json(json::parse(spec));
        json out{{"class", al::params::to_string(al::params::classify(p))},
                 {"rank", p.rank()},
                 {"centralizer", al::json_io::centralizer_to_json(al::params::centralizer(p))},
                 {"component_group_order", al::params::component_group(p).order()},
                 {"center_image", al::json_io::group_element_to_json(al::params::center_image(p))},
                 {"s_psi_image", al::json_io::group_element_to_json(al::params::s_psi_image(p))}};
        emit(out);
    });
}

void add_diagram(CLI::App& app) {
    auto* cmd = app.add_subcommand("diagram", "normalizer diagram of a Levi shape");
    static std::string shape_json;
    static std::string report_mode = "json";
    cmd->add_option("--shape", shape_json, "shape JSON")->required();
    cmd->add_option("--report", report_mode, "output mode (json)");
    cmd->callback([] {
        al::levi::LeviShape shape = al::json_io::shape_from_json(json::parse(shape_json));
        al::levi::DiagramReport rep = al::levi::diagram_report(shape);
        json out = al::json_io::diagram_report_to_json(rep);
        out["n"] = shape.n;
        out["n0"] = shape.n0;
        out["t1"] = shape.t1.size();
        out["t2"] = shape.t2.size();
        out["t3_pairs"] = shape.t3_pairs.size();
        emit(out);
        if (!(rep.exact_rows && rep.exact_columns)) g_exit_code = 1;
    });
}

void add_endoscopy(CLI::App& app) {
    auto* cmd = app.add_subcommand("endoscopy", "elliptic endoscopic data");
    cmd->require_subcommand(1);

    auto* list = cmd->add_subcommand("list", "representatives of elliptic triples");
    static int n = 0;
    static bool strict = false;
    list->add_option("--n", n, "rank")->required();
    list->add_flag("--strict", strict, "strict isomorphism classes");
    list->callback([] {
        json arr = json::array();
        for (const auto& t : al::endoscopy::elliptic_triples(n, strict))
            arr.push_back({{"n1", t.n1},
                           {"n2", t.n2},
                           {"factors", "SO" + std::to_string(2 * t.n1 + 1) + " x SO" +
                                           std::to_string(2 * t.n2 + 1)}});
        emit({{"count", arr.size()}, {"triples", arr}});
    });

    auto* corr = cmd->add_subcommand("correspond", "split a parameter along a sign class");
    static std::string param_json, signs_json;
    corr->add_option("--param", param_json, "parameter JSON")->required();
    corr->add_option("--signs", signs_json, "signature JSON array")->required();
    corr->callback([] {
        al::params::LocalParameter p = al::json_io::parameter_from_json(json::parse(param_json));
        al::endoscopy::SemisimpleSignature s =
            al::json_io::signature_from_json(json::parse(signs_json));
        al::endoscopy::Correspondence c = al::endoscopy::correspond(p, s);
        emit({{"triple", {{"n1", c.triple.n1}, {"n2", c.triple.n2}}},
              {"factor1", al::json_io::parameter_to_json(c.factor1)},
              {"factor2", al::json_io::parameter_to_json(c.factor2)}});
    });
}

void add_weil(CLI::App& app) {
    auto* cmd = app.add_subcommand("weil", "representation ring of the real Weil group");
    cmd->require_subcommand(1);

    auto* dec = cmd->add_subcommand("decompose", "ring operations");
    static std::string op = "tensor", a_json, b_json;
    dec->add_option("--op", op, "tensor|sym2|wedge2|dual")->required();
    dec->add_option("--a", a_json, "first operand JSON")->required();
    dec->add_option("--b", b_json, "second operand JSON (tensor only)");
    dec->callback([] {
        al::weil::WeilRealRep a = al::json_io::rep_from_json(json::parse(a_json));
        al::weil::WeilRealRep out;
        if (op == "tensor") {
            if (b_json.empty()) throw CLI::ValidationError("decompose", "tensor needs --b");
            out = al::weil::tensor(a, al::json_io::rep_from_json(json::parse(b_json)));
        } else if (op == "sym2") {
            out = al::weil::sym2(a);
        } else if (op == "wedge2") {
            out = al::weil::wedge2(a);
        } else if (op == "dual") {
            out = al::weil::dual(a);
        } else {
            throw CLI::ValidationError("decompose", "unknown op " + op);
        }
        emit(al::json_io::rep_to_json(out));
    });

    auto* lf = cmd->add_subcommand("lfactor", "L- and epsilon-factors");
    static std::string rep_json;
    static double s_value = 0.0;
    lf->add_option("--rep", rep_json, "representation JSON")->required();
    lf->add_option("--s", s_value, "evaluation point")->required();
    lf->callback([] {
        al::weil::WeilRealRep rep = al::json_io::rep_from_json(json::parse(rep_json));
        al::gamma::GammaValue v = al::weil::l_factor(rep, s_value);
        std::complex<double> eps = al::weil::epsilon_factor(rep);
        json out{{"s", s_value}, {"epsilon", {eps.real(), eps.imag()}}};
        if (v.pole) {
            out["pole"] = true;
        } else {
            out["L"] = {v.value.real(), v.value.imag()};
            if (v.logscale) out["logscale"] = *v.logscale;
        }
        emit(out);
    });
}

void add_structure(CLI::App& app) {
    auto* cmd = app.add_subcommand("structure", "matrix-model fixtures");
    auto* fx = cmd->add_subcommand("fixtures", "export a fixture bundle as JSON");
    static std::string which = "so14";
    fx->add_option("--case", which, "so14|so25")->required();
    fx->callback([] {
        using al::json_io::matrix_to_json;
        if (which == "so14") {
            al::so_structure::So14Fixtures f = al::so_structure::so14_fixtures();
            emit({{"alpha_scaled", matrix_to_json(f.alpha)},
                  {"z_rho", matrix_to_json(f.z_rho)},
                  {"w_tilde", matrix_to_json(f.w_tilde)},
                  {"w_breve", matrix_to_json(f.w_breve)},
                  {"gram", matrix_to_json(f.gram_d)},
                  {"measure_factor", f.measure_factor.str()}});
        } else if (which == "so25") {
            al::so_structure::So25Fixtures f = al::so_structure::so25_fixtures();
            emit({{"alpha_scaled", matrix_to_json(f.alpha)},
                  {"z_rho", matrix_to_json(f.z_rho)},
                  {"w_tilde", matrix_to_json(f.w_tilde)},
                  {"w_breve", matrix_to_json(f.w_breve)},
                  {"gram", matrix_to_json(f.gram_d)}});
        } else {
            throw CLI::ValidationError("fixtures", "case must be so14 or so25");
        }
    });
}

json report_array(const std::vector<al::intertwining::IdentityReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(al::json_io::identity_report_to_json(r));
    return arr;
}

void add_verify(CLI::App& app) {
    auto* cmd = app.add_subcommand("verify", "numeric verification suites");
    cmd->require_subcommand(1);

    static std::string lambda_grid = "0.3,0.5,1,2,3.5";
    static std::string s_grid = "0.5,1,2,3,4";
    static std::string limit_grid = "1e-2,1e-3,1e-4";
    static double tol = 1e-8;

    auto* so14 = cmd->add_subcommand("so14", "3d kernel identity");
    so14->add_option("--lambda-grid", lambda_grid, "comma-separated grid");
    so14->add_option("--tol", tol, "absolute tolerance");
    so14->callback([] {
        if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
        std::vector<al::intertwining::IdentityReport> reports;
        bool all = true;
        for (double l : parse_grid(lambda_grid)) {
            reports.push_back(al::intertwining::m_so14(l, tol));
            all = all && reports.back().pass;
        }
        emit({{"identity", "so14-kernel"}, {"pass", all}, {"reports", report_array(reports)}});
        if (!all) g_exit_code = 1;
    });

    auto* mc = cmd->add_subcommand("mc", "central-root kernel identity");
    mc->add_option("--s-grid", s_grid, "comma-separated grid");
    mc->add_option("--tol", tol, "absolute tolerance");
    mc->callback([] {
        if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
        std::vector<al::intertwining::IdentityReport> reports;
        bool all = true;
        for (double s : parse_grid(s_grid)) {
            reports.push_back(al::intertwining::m_c(s, tol));
            all = all && reports.back().pass;
        }
        emit({{"identity", "central-kernel"}, {"pass", all}, {"reports", report_array(reports)}});
        if (!all) g_exit_code = 1;
    });

    auto* so25 = cmd->add_subcommand("so25", "composite operator limits");
    so25->add_option("--limit-grid", limit_grid, "lambda grid approaching 0+");
    so25->callback([] {
        json arr = json::array();
        bool all = true;
        for (double l : parse_grid(limit_grid)) {
            double d14 = std::abs(al::intertwining::so14_composite(l) + 1.0);
            double d25 = std::abs(al::intertwining::so25_composite(l) + 1.0);
            bool ok = d14 <= 5.0 * l && d25 <= 50.0 * l;
            all = all && ok;
            arr.push_back({{"lambda", l},
                           {"so14_defect", d14},
                           {"so25_defect", d25},
                           {"bound_so14", 5.0 * l},
                           {"bound_so25", 50.0 * l},
                           {"pass", ok}});
        }
        emit({{"identity", "composite-limits"}, {"pass", all}, {"reports", arr}});
        if (!all) g_exit_code = 1;
    });

    auto* dup = cmd->add_subcommand("gamma-duplication", "Gamma_R/Gamma_C duplication");
    dup->callback([] {
        json arr = json::array();
        bool all = true;
        for (double s : {0.3, 0.7, 1.5, 2.2, 3.9}) {
            std::complex<double> lhs =
                std::exp(al::gamma::lgamma_r(s) + al::gamma::lgamma_r(s + 1.0));
            std::complex<double> rhs = std::exp(al::gamma::lgamma_c(s));
            double rel = std::abs(lhs - rhs) / std::abs(rhs);
            bool ok = rel <= 1e-12;
            all = all && ok;
            arr.push_back({{"s", s}, {"rel_error", rel}, {"pass", ok}});
        }
        emit({{"identity", "gamma-duplication"}, {"pass", all}, {"reports", arr}});
        if (!all) g_exit_code = 1;
    });
}

void add_verify_all(CLI::App& app) {
    auto* cmd = app.add_subcommand("verify-all", "run the full acceptance suite");
    static bool quick = false;
    static std::uint64_t seed = 12345;
    cmd->add_flag("--quick", quick, "acceptance-sized random batches");
    cmd->add_option("--seed", seed, "seed for randomized property batches");
    cmd->callback([] {
        al::acceptance::Options opts;
        opts.seed = seed;
        opts.quick = quick;
        opts.threads = thread_budget();
        auto results = al::acceptance::run_all(opts);
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back({{"id", r.id},
                           {"module", r.module},
                           {"pass", r.pass},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
        bool all = al::acceptance::all_passed(results);
        emit({{"pass", all}, {"checks", arr}});
        if (!all) g_exit_code = 1;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational toolkit for odd special orthogonal groups"};
    app.require_subcommand(1);
    add_kottwitz(app);
    add_param(app);
    add_diagram(app);
    add_endoscopy(app);
    add_weil(app);
    add_structure(app);
    add_verify(app);
    add_verify_all(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit_code;
}
