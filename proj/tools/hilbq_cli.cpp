// Command-line front end: generating series of Euler characteristics of
// Hilbert/Quot schemes of points on surfaces with A_n singularities, theta
// series of positive-definite quadratic forms, the cyclotomic decomposition
// algorithm, and the Young-diagram cross-validation suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "hilbq/hilbquot.hpp"
#include "hilbq/qspecial.hpp"
#include "hilbq/serialize.hpp"
#include "hilbq/theta.hpp"
#include "hilbq/young.hpp"

namespace {

using hilbq::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_surface_type(const std::string& type) {
    if (type.size() < 2 || (type[0] != 'A' && type[0] != 'a'))
        throw UsageError("malformed --type '" + type + "': expected A<n> with n >= 0");
    for (size_t i = 1; i < type.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(type[i])))
            throw UsageError("malformed --type '" + type + "': expected A<n> with n >= 0");
    return std::stoi(type.substr(1));
}

hilbq::QuadraticForm parse_form_spec(const std::string& spec) {
    if (spec.rfind("diag(", 0) == 0 && spec.back() == ')') {
        std::vector<long long> diag;
        std::stringstream body(spec.substr(5, spec.size() - 6));
        std::string tok;
        while (std::getline(body, tok, ',')) {
            if (tok.empty()) throw UsageError("malformed diagonal form spec '" + spec + "'");
            diag.push_back(std::stoll(tok));
        }
        if (diag.empty()) throw UsageError("malformed diagonal form spec '" + spec + "'");
        return hilbq::QuadraticForm::diagonal(diag);
    }
    std::ifstream in(spec);
    if (!in) throw UsageError("cannot open form file '" + spec + "'");
    json j;
    in >> j;
    return hilbq::quadform_from_json(j);
}

std::vector<int> parse_sing_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream body(s);
    std::string tok;
    while (std::getline(body, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

enum class Format { text, json, csv };

Format parse_format(const std::string& f) {
    if (f == "text") return Format::text;
    if (f == "json") return Format::json;
    if (f == "csv") return Format::csv;
    throw UsageError("unknown --format '" + f + "' (expected text|json|csv)");
}

// ---- output envelope -------------------------------------------------------

struct Envelope {
    std::string command;
    json parameters = json::object();
    json result;
    // text/csv renderers per result kind
    std::string kind;  // "series" | "count" | "terms" | "report" | "listing"
    hilbq::QSeries series{0};
    long count = 0;
    std::vector<hilbq::DecompositionTerm> terms;
    std::vector<std::pair<std::string, hilbq::CheckReport>> reports;
    std::vector<std::string> listing;
};

void print_series_text(const hilbq::QSeries& s) {
    if (s.offset() != 0) std::cout << "offset: " << s.offset().get_str() << "\n";
    std::cout << "coeffs: ";
    for (int i = 0; i <= s.order(); ++i) std::cout << (i ? "," : "") << s[i].get_str();
    std::cout << "\n";
}

void print_series_csv(const hilbq::QSeries& s) {
    std::cout << "q_power,coefficient\n";
    for (int i = 0; i <= s.order(); ++i) std::cout << i << "," << s[i].get_str() << "\n";
}

int emit(const Envelope& e, Format fmt) {
    bool all_pass = true;
    for (const auto& [name, r] : e.reports) all_pass = all_pass && r.pass;
    if (fmt == Format::json) {
        json out{{"command", e.command},
                 {"parameters", e.parameters},
                 {"result", e.result},
                 {"format_version", "1"}};
        std::cout << out.dump(2) << "\n";
    } else if (e.kind == "series") {
        if (fmt == Format::csv) print_series_csv(e.series);
        else print_series_text(e.series);
    } else if (e.kind == "count") {
        if (fmt == Format::csv) std::cout << "count\n" << e.count << "\n";
        else std::cout << e.count << "\n";
    } else if (e.kind == "listing") {
        if (fmt == Format::csv) std::cout << "count\n" << e.count << "\n";
        else {
            std::cout << e.count << "\n";
            for (const std::string& line : e.listing) std::cout << line << "\n";
        }
    } else if (e.kind == "terms") {
        if (fmt == Format::csv) {
            std::cout << "coefficient,form\n";
            for (const auto& t : e.terms)
                std::cout << t.coefficient.get_str() << ",\"" << t.form.to_string() << "\"\n";
        } else {
            for (const auto& t : e.terms)
                std::cout << t.coefficient.get_str() << " * Theta[" << t.form.to_string()
                          << "]\n";
        }
    } else if (e.kind == "report") {
        if (fmt == Format::csv) {
            std::cout << "check,pass,detail\n";
            for (const auto& [name, r] : e.reports)
                std::cout << name << "," << (r.pass ? "pass" : "fail") << ",\"" << r.detail
                          << "\"\n";
        } else {
            for (const auto& [name, r] : e.reports)
                std::cout << name << ": " << (r.pass ? "pass" : "fail")
                          << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
        }
    }
    return all_pass ? 0 : kExitFailure;
}

json reports_to_json(const std::vector<std::pair<std::string, hilbq::CheckReport>>& reports) {
    json out = json::array();
    for (const auto& [name, r] : reports)
        out.push_back(json{{"check", name}, {"pass", r.pass}, {"detail", r.detail}});
    return out;
}

// ---- commands --------------------------------------------------------------

int run_hilb(const std::string& type, int order, Format fmt) {
    const int n_sing = parse_surface_type(type);
    Envelope e;
    e.command = "hilb";
    e.parameters = {{"type", "A" + std::to_string(n_sing)}, {"order", std::to_string(order)}};
    e.kind = "series";
    e.series = hilbq::hilb_series_A(n_sing, order);
    e.result = hilbq::qseries_to_json(e.series);
    return emit(e, fmt);
}

int run_quot(const std::string& type, int j, long k, int order, Format fmt) {
    const int n_sing = parse_surface_type(type);
    const int n = n_sing + 1;  // product-formula parameter: the A_{n-1} model
    if (j < 0 || j > n - 1)
        throw UsageError("--j must be in 0.." + std::to_string(n - 1) + " for type A" +
                         std::to_string(n_sing));
    Envelope e;
    e.command = "quot";
    e.parameters = {{"type", "A" + std::to_string(n_sing)},
                    {"j_sheaf", std::to_string(j)},
                    {"j_appendix", std::to_string((n - j) % n)},
                    {"k", std::to_string(k)},
                    {"order", std::to_string(order)}};
    e.kind = "series";
    e.series = hilbq::quot_series_A(n, j, k, order);
    e.result = hilbq::qseries_to_json(e.series);
    return emit(e, fmt);
}

int run_theta(int n, const std::string& form_spec, long modulus, int order, Format fmt) {
    Envelope e;
    e.command = "theta";
    e.kind = "series";
    if (n > 0) {
        e.parameters = {{"n", std::to_string(n)}, {"order", std::to_string(order)}};
        e.series = hilbq::theta_n(n, order);
    } else {
        const hilbq::QuadraticForm q = parse_form_spec(form_spec);
        e.parameters = {{"form", hilbq::quadform_to_json(q)}, {"order", std::to_string(order)}};
        if (modulus > 1) {
            e.parameters["modulus"] = std::to_string(modulus);
            e.series = hilbq::theta_twisted(q, modulus, order);
        } else {
            e.series = hilbq::theta_form(q, order);
        }
    }
    e.result = hilbq::qseries_to_json(e.series);
    return emit(e, fmt);
}

int run_decompose(int n, const std::string& form_spec, long modulus, int check_order,
                  Format fmt) {
    Envelope e;
    e.command = "decompose";
    e.kind = "terms";
    hilbq::QuadraticForm q = hilbq::QuadraticForm::diagonal({1});
    long m = modulus;
    if (n > 0) {
        const hilbq::BaseChange bc = hilbq::base_change_form(n);
        q = bc.form;
        m = bc.modulus;
        e.parameters = {{"n", std::to_string(n)}};
    } else {
        q = parse_form_spec(form_spec);
        if (m < 1) throw UsageError("--modulus is required with --form");
        e.parameters = {{"form", hilbq::quadform_to_json(q)}};
    }
    e.parameters["modulus"] = std::to_string(m);
    e.parameters["check_order"] = std::to_string(check_order);
    try {
        e.terms = hilbq::decompose_theta(q, m, check_order);
    } catch (const std::invalid_argument& err) {
        // invariance/consistency failures are computation errors, not usage errors
        throw std::runtime_error(err.what());
    }
    e.result = json{{"terms", hilbq::terms_to_json(e.terms)},
                    {"residual_check", "pass"},
                    {"check_order", std::to_string(check_order)}};
    return emit(e, fmt);
}

int run_oracle(const std::string& type, int j, int m, bool list, Format fmt) {
    const int n_sing = parse_surface_type(type);
    const int n = n_sing + 1;
    if (j < 0 || j > n - 1)
        throw UsageError("--j must be in 0.." + std::to_string(n - 1) + " for type A" +
                         std::to_string(n_sing));
    Envelope e;
    e.command = "oracle";
    e.parameters = {{"type", "A" + std::to_string(n_sing)},
                    {"j_sheaf", std::to_string(j)},
                    {"j_appendix", std::to_string((n - j) % n)},
                    {"m", std::to_string(m)}};
    const int j_appendix = (n - j) % n;
    const auto tuples = hilbq::enumerate_tuples(n, j_appendix, m);
    e.count = static_cast<long>(tuples.size());
    e.kind = list ? "listing" : "count";
    json jtuples = json::array();
    if (list) {
        for (const auto& tuple : tuples) {
            std::ostringstream line;
            json jt = json::array();
            for (size_t i = 0; i < tuple.size(); ++i) {
                if (i) line << " ";
                line << "[";
                json rows = json::array();
                for (size_t b = 0; b < tuple[i].rows.size(); ++b) {
                    if (b) line << ",";
                    line << tuple[i].rows[b];
                    rows.push_back(std::to_string(tuple[i].rows[b]));
                }
                line << "]";
                jt.push_back(std::move(rows));
            }
            e.listing.push_back(line.str());
            jtuples.push_back(std::move(jt));
        }
    }
    e.result = json{{"count", std::to_string(e.count)}};
    if (list) e.result["tuples"] = std::move(jtuples);
    return emit(e, fmt);
}

int run_surface(std::optional<long> chi_res, std::optional<long> chi_surf,
                const std::string& sing, int order, bool normalized, Format fmt) {
    hilbq::SurfaceSpec spec{chi_res, chi_surf, parse_sing_list(sing)};
    const auto chi = spec.resolve();  // surfaces usage errors for bad data
    Envelope e;
    e.command = "surface";
    e.parameters = {{"chi_resolution", std::to_string(chi.chi_resolution)},
                    {"chi_surface", std::to_string(chi.chi_surface)},
                    {"singularities", sing},
                    {"order", std::to_string(order)},
                    {"normalized", normalized}};
    e.kind = "series";
    const hilbq::SurfaceSeries out = hilbq::surface_hilb_series(spec, order, normalized);
    e.series = out.series;
    e.result = json{{"series", hilbq::qseries_to_json(out.series)},
                    {"modular_weight_num", hilbq::to_string(out.modular_weight.get_num())},
                    {"modular_weight_den", hilbq::to_string(out.modular_weight.get_den())}};
    return emit(e, fmt);
}

int run_verify(const std::string& suite, int order, Format fmt) {
    Envelope e;
    e.command = "verify";
    e.parameters = {{"suite", suite}, {"order", std::to_string(order)}};
    e.kind = "report";
    const bool all = suite == "all";

    if (all || suite == "table1") {
        for (int n = 1; n <= 4; ++n)
            e.reports.emplace_back("table1 n=" + std::to_string(n),
                                   hilbq::verify_table1(n, order));
    }
    if (all || suite == "jacobi") {
        e.reports.emplace_back("jacobi", hilbq::jacobi_triple_check(order, order));
    }
    if (all || suite == "oracle-vs-product") {
        const int m_max = std::min(order, 6);
        for (int n = 1; n <= 4; ++n) {
            for (int j = 0; j < n; ++j) {
                hilbq::CheckReport r = hilbq::CheckReport::ok();
                const hilbq::QSeries s = hilbq::quot_series_A(n, j, 0, m_max);
                for (int m = 0; m <= m_max; ++m) {
                    const long tuples = hilbq::quot_count(n, j, m);
                    const long ideals =
                        hilbq::ideal_oracle(n, (n - j) % n, m);
                    if (s[m] != tuples || tuples != ideals) {
                        r = hilbq::CheckReport::fail(
                            "m=" + std::to_string(m) + ": product " + s[m].get_str() +
                            ", tuples " + std::to_string(tuples) + ", ideals " +
                            std::to_string(ideals));
                        break;
                    }
                }
                e.reports.emplace_back(
                    "oracle-vs-product n=" + std::to_string(n) + " j=" + std::to_string(j), r);
            }
        }
    }
    if (all || suite == "form-a") {
        for (int n = 1; n <= 4; ++n) {
            const hilbq::QSeries lhs = hilbq::theta_from_hilb(n, order);
            const hilbq::QSeries rhs = hilbq::theta_n(n, order);
            hilbq::CheckReport r = hilbq::CheckReport::ok();
            for (int i = 0; i <= order; ++i)
                if (lhs[i] != rhs[i]) {
                    r = hilbq::CheckReport::fail("differs at q^" + std::to_string(i));
                    break;
                }
            e.reports.emplace_back("form-a n=" + std::to_string(n), r);
        }
    }
    if (all || suite == "k-independence") {
        for (int n = 1; n <= 4; ++n)
            for (int j = 0; j < n; ++j)
                e.reports.emplace_back(
                    "k-independence n=" + std::to_string(n) + " j=" + std::to_string(j),
                    hilbq::k_independence_check(n, j, 2, std::min(order, 12)));
    }
    if (e.reports.empty())
        throw UsageError("unknown --suite '" + suite +
                         "' (expected table1|jacobi|oracle-vs-product|form-a|k-independence|all)");
    e.result = reports_to_json(e.reports);
    return emit(e, fmt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generating series of Euler characteristics of Hilbert/Quot schemes of "
                 "points on surfaces with A_n singularities"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --format after the subcommand
    std::string format = "text";
    app.add_option("--format", format, "Output format: text|json|csv")->capture_default_str();

    int order = 20;
    std::string type, form_spec, sing, suite = "all";
    int j = 0, n = 0, m = 0;
    long k = 0, modulus = 0;
    int check_order = 36;
    bool list = false, normalized = false;
    std::optional<long> chi_res, chi_surf;

    CLI::App* hilb = app.add_subcommand("hilb", "Hilbert-scheme series of a local A_n model");
    hilb->add_option("--type", type, "Singularity type A<n> (A0 = smooth)")->required();
    hilb->add_option("--order", order, "Truncation order M")->capture_default_str();

    CLI::App* quot = app.add_subcommand("quot", "Quot-scheme series for the sheaf O(jD)");
    quot->add_option("--type", type)->required();
    quot->add_option("--j", j, "Sheaf index j of O(jD)")->required();
    quot->add_option("--k", k, "Twist slot (result is k-independent)");
    quot->add_option("--order", order)->capture_default_str();

    CLI::App* theta = app.add_subcommand("theta", "Theta series: Theta_n or a quadratic form");
    theta->add_option("--n", n, "Singularity parameter n of Theta_n");
    theta->add_option("--form", form_spec, "Form: diag(a,b,...) or a JSON file");
    theta->add_option("--modulus", modulus, "Twist by xi_m^{k1} (with --form)");
    theta->add_option("--order", order)->capture_default_str();

    CLI::App* decompose =
        app.add_subcommand("decompose", "Decompose a Galois-invariant twisted theta series");
    decompose->add_option("--n", n, "Use the base-changed form of Theta_n");
    decompose->add_option("--form", form_spec);
    decompose->add_option("--modulus", modulus, "Root-of-unity modulus m (with --form)");
    decompose->add_option("--check-order", check_order)->capture_default_str();

    CLI::App* oracle = app.add_subcommand("oracle", "Young-diagram tuple counts");
    oracle->add_option("--type", type)->required();
    oracle->add_option("--j", j, "Sheaf index j of O(jD)")->required();
    oracle->add_option("--m", m, "Number of points")->required();
    oracle->add_flag("--list", list, "List the tuples (row lengths, bottom row first)");

    CLI::App* surface = app.add_subcommand("surface", "Surface-level Hilbert-scheme series");
    surface->add_option("--chi-resolution", chi_res, "Euler number of the minimal resolution");
    surface->add_option("--chi", chi_surf, "Euler number of the surface itself");
    surface->add_option("--sing", sing, "Comma-separated A_n indices (may be empty)");
    surface->add_option("--order", order)->capture_default_str();
    surface->add_flag("--normalized", normalized, "Strip the q^{-chi/24} prefactor");

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite,
                       "table1|jacobi|oracle-vs-product|form-a|k-independence|all")
        ->capture_default_str();
    verify->add_option("--order", order)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) return app.exit(err);  // --help
        app.exit(err);
        return kExitUsage;
    }

    try {
        const Format fmt = parse_format(format);
        if (hilb->parsed()) return run_hilb(type, order, fmt);
        if (quot->parsed()) return run_quot(type, j, k, order, fmt);
        if (theta->parsed()) {
            if ((n > 0) == !form_spec.empty())
                throw UsageError("theta: exactly one of --n / --form is required");
            return run_theta(n, form_spec, modulus, order, fmt);
        }
        if (decompose->parsed()) {
            if ((n > 0) == !form_spec.empty())
                throw UsageError("decompose: exactly one of --n / --form is required");
            return run_decompose(n, form_spec, modulus, check_order, fmt);
        }
        if (oracle->parsed()) return run_oracle(type, j, m, list, fmt);
        if (surface->parsed()) {
            if (!chi_res && !chi_surf)
                throw UsageError("surface: one of --chi-resolution / --chi is required");
            return run_surface(chi_res, chi_surf, sing, order, normalized, fmt);
        }
        if (verify->parsed()) return run_verify(suite, order, fmt);
        throw UsageError("no subcommand given");
    } catch (const UsageError& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitFailure;
    }
}
