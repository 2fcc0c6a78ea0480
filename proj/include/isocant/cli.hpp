#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "isocant/body_sampling.hpp"
#include "isocant/mahler.hpp"

namespace isocant {

namespace cli_detail {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 0x5EED1500CA47ull;
constexpr std::uint64_t kDefaultSamples = 1'000'000;

// Bad invocation (malformed value, contradictory flags): exit code 2, as
// opposed to well-formed parameters outside the domain (exit code 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational parse_flag(const std::string& text, const std::string& flag) {
    try {
        return parse_rational(text);
    } catch (const BadParams&) {
        throw UsageError(flag + " expects a rational such as 3, 0.75 or 7/2; got '" +
                         text + "'");
    }
}

// Shortest round-trip form, the same one the JSON writer uses.
inline std::string dump_double(double x) { return Json(x).dump(); }

inline std::uint64_t default_samples() {
    const char* env = std::getenv("ISOCANT_MC_SAMPLES");
    if (env == nullptr || *env == '\0') return kDefaultSamples;
    if (*env == '-') throw UsageError("ISOCANT_MC_SAMPLES must be a positive integer");
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0' || v == 0)
        throw UsageError("ISOCANT_MC_SAMPLES must be a positive integer");
    return v;
}

struct Record {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::string exact;
    double decimal = 0;
    Json extras = Json::object();
    std::vector<std::string> lines; // text-mode body
};

inline void emit(const Record& r, bool as_json, std::ostream& out) {
    if (as_json) {
        Json j;
        j["command"] = r.command;
        Json p = Json::object();
        for (const auto& [k, v] : r.params) p[k] = v;
        j["params"] = std::move(p);
        j["exact"] = r.exact;
        j["decimal"] = r.decimal;
        j["extras"] = r.extras;
        out << j.dump() << "\n";
        return;
    }
    out << r.command;
    for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
    out << "\n";
    for (const auto& line : r.lines) out << line << "\n";
    out << "exact: " << r.exact << "\n";
    out << "decimal: " << dump_double(r.decimal) << "\n";
}

inline std::string tuple_string(const Point& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ", ";
        s += to_string(x[i]);
    }
    return s + ")";
}

inline Json coord_array(const Point& x) {
    Json a = Json::array();
    for (const auto& v : x) a.push_back(to_string(v));
    return a;
}

} // namespace cli_detail

// Front end behind the isocant binary; takes argv without the program
// name. Exit codes: 0 success, 1 domain error, 2 usage error, 3 failed
// verification.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"exact volumes, polar duals and Mahler certificates of canted cubes",
                 "isocant"};
    app.require_subcommand(1);
    const auto format_check = CLI::IsMember({"text", "json"});

    struct {
        int d = 3;
        std::string ell, a, format = "text";
    } vol_cfg;
    auto* vol_cmd = app.add_subcommand("volume", "volume of the canted cube");
    vol_cmd->add_option("--d", vol_cfg.d, "dimension")->required();
    vol_cmd->add_option("--ell", vol_cfg.ell, "cube edge, rational")->required();
    vol_cmd->add_option("--a", vol_cfg.a, "cant depth, rational")->required();
    vol_cmd->add_option("--format", vol_cfg.format, "text or json")->check(format_check);

    struct {
        int d = 3;
        std::string b, c, ell, a, format = "text";
    } dual_cfg;
    auto* dual_cmd = app.add_subcommand("dual-volume", "volume of the polar dual");
    dual_cmd->add_option("--d", dual_cfg.d, "dimension")->required();
    dual_cmd->add_option("--b", dual_cfg.b, "dual parameter b, rational");
    dual_cmd->add_option("--c", dual_cfg.c, "dual parameter c, rational");
    dual_cmd->add_option("--ell", dual_cfg.ell, "cube edge, rational");
    dual_cmd->add_option("--a", dual_cfg.a, "cant depth, rational");
    dual_cmd->add_option("--format", dual_cfg.format, "text or json")->check(format_check);

    struct {
        int d = 2;
        std::string ell, a, format = "text";
        bool dual = false;
    } vert_cfg;
    auto* vert_cmd = app.add_subcommand("vertices", "vertex coordinates");
    vert_cmd->add_option("--d", vert_cfg.d, "dimension")->required();
    vert_cmd->add_option("--ell", vert_cfg.ell, "cube edge, rational")->required();
    vert_cmd->add_option("--a", vert_cfg.a, "cant depth, rational")->required();
    vert_cmd->add_flag("--dual", vert_cfg.dual, "list the polar dual's vertices instead");
    vert_cmd->add_option("--format", vert_cfg.format, "text or json")->check(format_check);

    struct {
        int d = 3;
        std::string format = "text";
    } fvec_cfg;
    auto* fvec_cmd = app.add_subcommand("fvector", "face counts of the polar dual");
    fvec_cmd->add_option("--d", fvec_cfg.d, "dimension")->required();
    fvec_cmd->add_option("--format", fvec_cfg.format, "text or json")->check(format_check);

    struct {
        int d = 3;
        std::string b, c, ell, a, format = "text";
        bool primal = false;
    } fac_cfg;
    auto* fac_cmd = app.add_subcommand("facets", "supporting hyperplanes");
    fac_cmd->add_option("--d", fac_cfg.d, "dimension")->required();
    fac_cmd->add_option("--b", fac_cfg.b, "dual parameter b, rational");
    fac_cmd->add_option("--c", fac_cfg.c, "dual parameter c, rational");
    fac_cmd->add_option("--ell", fac_cfg.ell, "cube edge, rational");
    fac_cmd->add_option("--a", fac_cfg.a, "cant depth, rational");
    fac_cmd->add_flag("--primal", fac_cfg.primal, "facets of the canted cube itself");
    fac_cmd->add_option("--format", fac_cfg.format, "text or json")->check(format_check);

    struct {
        int C = 1, V = 1;
        std::string ell1, ell2, h, section, format = "text";
    } roof_cfg;
    auto* roof_cmd = app.add_subcommand("roof", "roof volumes and sections");
    roof_cmd->set_help_flag("--help", "print help"); // frees -h for the height flag
    roof_cmd->add_option("--C", roof_cfg.C, "crest-side simplex count")->required();
    roof_cmd->add_option("--V", roof_cfg.V, "base-side simplex count")->required();
    roof_cmd->add_option("--ell1", roof_cfg.ell1, "base edge, rational")->required();
    roof_cmd->add_option("--ell2", roof_cfg.ell2, "crest edge, rational")->required();
    roof_cmd->add_option("--h", roof_cfg.h, "height, rational")->required();
    roof_cmd->add_option("--section", roof_cfg.section,
                         "cross-section volume at this height fraction instead");
    roof_cmd->add_option("--format", roof_cfg.format, "text or json")->check(format_check);

    struct {
        int d = 2;
        bool certificate = false;
        std::string format = "text";
    } mah_cfg;
    auto* mah_cmd = app.add_subcommand("mahler", "volume-product positivity certificate");
    mah_cmd->add_option("--d", mah_cfg.d, "dimension")->required();
    mah_cmd->add_flag("--certificate", mah_cfg.certificate, "include certificate details");
    mah_cmd->add_option("--format", mah_cfg.format, "text or json")->check(format_check);

    struct {
        int d = 2;
        std::string wait = "1/6", format = "text";
    } prob_cfg;
    auto* prob_cmd = app.add_subcommand("probability", "chance that d+1 walkers meet");
    prob_cmd->add_option("--d", prob_cfg.d, "number of walkers minus one")->required();
    prob_cmd->add_option("--wait", prob_cfg.wait, "waiting time as a fraction of the day");
    prob_cmd->add_option("--format", prob_cfg.format, "text or json")->check(format_check);

    struct {
        int d = 3;
        std::string ell, a, format = "text";
    } met_cfg;
    auto* met_cmd = app.add_subcommand("metric-check", "four-point condition of the"
                                                       " star metric");
    met_cmd->add_option("--d", met_cfg.d, "number of leaves")->required();
    met_cmd->add_option("--ell", met_cfg.ell, "cube edge, rational")->required();
    met_cmd->add_option("--a", met_cfg.a, "cant depth, rational")->required();
    met_cmd->add_option("--format", met_cfg.format, "text or json")->check(format_check);

    struct {
        int d = 0;
        std::string ell = "2", a = "1", body = "both", format = "text";
        std::uint64_t samples = 0, seed = kDefaultSeed;
        double sigmas = 5.0;
    } ver_cfg;
    auto* ver_cmd =
        app.add_subcommand("verify", "Monte Carlo concordance with the closed forms");
    ver_cmd->add_option("--d", ver_cfg.d, "dimension; 0 sweeps 2 through 6");
    ver_cmd->add_option("--ell", ver_cfg.ell, "cube edge, rational");
    ver_cmd->add_option("--a", ver_cfg.a, "cant depth, rational");
    ver_cmd->add_option("--body", ver_cfg.body, "primal, dual or both")
        ->check(CLI::IsMember({"primal", "dual", "both"}));
    ver_cmd->add_option("--samples", ver_cfg.samples,
                        "sample count; default ISOCANT_MC_SAMPLES or 1000000");
    ver_cmd->add_option("--seed", ver_cfg.seed, "stream seed");
    ver_cmd->add_option("--sigmas", ver_cfg.sigmas, "acceptance band in standard errors");
    ver_cmd->add_option("--format", ver_cfg.format, "text or json")->check(format_check);

    struct {
        std::string sweep = "a";
        int d = 3, dmin = 2, dmax = 10, steps = 8;
        std::string ell = "2", a = "1", format = "text";
    } tab_cfg;
    auto* tab_cmd = app.add_subcommand("table", "volume table swept over a or d");
    tab_cmd->add_option("--sweep", tab_cfg.sweep, "a or d")
        ->check(CLI::IsMember({"a", "d"}));
    tab_cmd->add_option("--d", tab_cfg.d, "dimension for the a sweep");
    tab_cmd->add_option("--dmin", tab_cfg.dmin, "first dimension for the d sweep");
    tab_cmd->add_option("--dmax", tab_cfg.dmax, "last dimension for the d sweep");
    tab_cmd->add_option("--steps", tab_cfg.steps, "rows in the a sweep: a = ell k/steps");
    tab_cmd->add_option("--ell", tab_cfg.ell, "cube edge, rational");
    tab_cmd->add_option("--a", tab_cfg.a, "cant depth for the d sweep, rational");
    tab_cmd->add_option("--format", tab_cfg.format, "csv (default) or json lines")
        ->check(format_check);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));

        if (vol_cmd->parsed()) {
            Rational ell = parse_flag(vol_cfg.ell, "--ell");
            Rational a = parse_flag(vol_cfg.a, "--a");
            IsocantedParams p(vol_cfg.d, ell, a);
            Rational v = volume(p);
            Record r;
            r.command = "volume";
            r.params = {{"d", std::to_string(p.d)}, {"ell", to_string(ell)}, {"a", to_string(a)}};
            r.exact = to_string(v);
            r.decimal = to_double(v);
            emit(r, vol_cfg.format == "json", out);
            return 0;
        }

        if (dual_cmd->parsed()) {
            const bool any_bc = !dual_cfg.b.empty() || !dual_cfg.c.empty();
            const bool any_primal = !dual_cfg.ell.empty() || !dual_cfg.a.empty();
            if (any_bc && any_primal)
                throw UsageError("give either --b/--c or --ell/--a, not both");
            Record r;
            r.command = "dual-volume";
            if (any_bc) {
                if (dual_cfg.b.empty() || dual_cfg.c.empty())
                    throw UsageError("needs both --b and --c");
                DualParams p(dual_cfg.d, parse_flag(dual_cfg.b, "--b"),
                             parse_flag(dual_cfg.c, "--c"));
                Rational v = dual_volume(p);
                r.params = {{"d", std::to_string(p.d)},
                            {"b", to_string(p.b)},
                            {"c", to_string(p.c)}};
                r.exact = to_string(v);
                r.decimal = to_double(v);
                if (p.b >= p.c / 2) {
                    IsocantedParams back = to_primal(p);
                    r.extras["ell"] = to_string(back.ell);
                    r.extras["a"] = to_string(back.a);
                }
            } else {
                if (dual_cfg.ell.empty() || dual_cfg.a.empty())
                    throw UsageError("needs both --b and --c, or both --ell and --a");
                Rational ell = parse_flag(dual_cfg.ell, "--ell");
                Rational a = parse_flag(dual_cfg.a, "--a");
                Rational v = dual_volume_primal_params(dual_cfg.d, ell, a);
                r.params = {{"d", std::to_string(dual_cfg.d)},
                            {"ell", to_string(ell)},
                            {"a", to_string(a)}};
                r.exact = to_string(v);
                r.decimal = to_double(v);
                r.extras["b"] = to_string(Rational(1) / (ell - a));
                r.extras["c"] = to_string(Rational(2) / ell);
            }
            emit(r, dual_cfg.format == "json", out);
            return 0;
        }

        if (vert_cmd->parsed()) {
            IsocantedParams p(vert_cfg.d, parse_flag(vert_cfg.ell, "--ell"),
                              parse_flag(vert_cfg.a, "--a"));
            std::vector<Point> points;
            if (vert_cfg.dual)
                for (const auto& m : molecules(from_primal(p))) points.push_back(m.coords);
            if (!vert_cfg.dual) points = vertices(p);
            Record r;
            r.command = "vertices";
            r.params = {{"d", std::to_string(p.d)},
                        {"ell", to_string(p.ell)},
                        {"a", to_string(p.a)},
                        {"body", vert_cfg.dual ? "dual" : "primal"}};
            r.exact = std::to_string(points.size());
            r.decimal = static_cast<double>(points.size());
            Json list = Json::array();
            for (const auto& x : points) {
                r.lines.push_back(tuple_string(x));
                list.push_back(coord_array(x));
            }
            r.extras["vertices"] = std::move(list);
            emit(r, vert_cfg.format == "json", out);
            return 0;
        }

        if (fvec_cmd->parsed()) {
            auto f = f_vector(fvec_cfg.d);
            Record r;
            r.command = "fvector";
            r.params = {{"d", std::to_string(fvec_cfg.d)}};
            BigInt total = 0;
            Json list = Json::array();
            for (std::size_t k = 0; k < f.size(); ++k) {
                if (k) r.exact += ",";
                r.exact += f[k].str();
                total += f[k];
                list.push_back(f[k].str());
                r.lines.push_back("f_" + std::to_string(k) + " = " + f[k].str());
            }
            r.decimal = to_double(Rational(total));
            r.extras["f_vector"] = std::move(list);
            emit(r, fvec_cfg.format == "json", out);
            return 0;
        }

        if (fac_cmd->parsed()) {
            const bool any_bc = !fac_cfg.b.empty() || !fac_cfg.c.empty();
            const bool any_primal = !fac_cfg.ell.empty() || !fac_cfg.a.empty();
            if (any_bc && any_primal)
                throw UsageError("give either --b/--c or --ell/--a, not both");
            if (fac_cfg.primal && any_bc)
                throw UsageError("--primal takes --ell/--a parameters");
            Record r;
            r.command = "facets";
            if (fac_cfg.primal) {
                if (fac_cfg.ell.empty() || fac_cfg.a.empty())
                    throw UsageError("needs both --ell and --a");
                IsocantedParams p(fac_cfg.d, parse_flag(fac_cfg.ell, "--ell"),
                                  parse_flag(fac_cfg.a, "--a"));
                auto sys = halfspaces(p);
                r.params = {{"d", std::to_string(p.d)},
                            {"ell", to_string(p.ell)},
                            {"a", to_string(p.a)},
                            {"body", "primal"}};
                r.exact = std::to_string(sys.halfspaces.size());
                r.decimal = static_cast<double>(sys.halfspaces.size());
                Json list = Json::array();
                for (const auto& h : sys.halfspaces) {
                    r.lines.push_back("normal=" + tuple_string(h.normal) +
                                      " offset=" + to_string(h.offset));
                    Json one;
                    one["normal"] = coord_array(h.normal);
                    one["offset"] = to_string(h.offset);
                    list.push_back(std::move(one));
                }
                r.extras["halfspaces"] = std::move(list);
            } else {
                DualParams p = [&] {
                    if (any_bc) {
                        if (fac_cfg.b.empty() || fac_cfg.c.empty())
                            throw UsageError("needs both --b and --c");
                        return DualParams(fac_cfg.d, parse_flag(fac_cfg.b, "--b"),
                                          parse_flag(fac_cfg.c, "--c"));
                    }
                    if (fac_cfg.ell.empty() || fac_cfg.a.empty())
                        throw UsageError("needs both --b and --c, or both --ell and --a");
                    return from_primal(IsocantedParams(fac_cfg.d,
                                                       parse_flag(fac_cfg.ell, "--ell"),
                                                       parse_flag(fac_cfg.a, "--a")));
                }();
                r.params = {{"d", std::to_string(p.d)},
                            {"b", to_string(p.b)},
                            {"c", to_string(p.c)},
                            {"body", "dual"}};
                auto ids = facet_ids(p);
                r.exact = std::to_string(ids.size());
                r.decimal = static_cast<double>(ids.size());
                Json list = Json::array();
                for (const auto& f : ids) {
                    Halfspace h = facet_hyperplane(p, f);
                    r.lines.push_back("mask=" + std::to_string(f.mask) +
                                      " sign=" + (f.sign > 0 ? std::string("+1") : "-1") +
                                      " normal=" + tuple_string(h.normal) +
                                      " offset=" + to_string(h.offset));
                    Json one;
                    one["mask"] = f.mask;
                    one["sign"] = f.sign;
                    one["normal"] = coord_array(h.normal);
                    one["offset"] = to_string(h.offset);
                    list.push_back(std::move(one));
                }
                r.extras["facets"] = std::move(list);
            }
            emit(r, fac_cfg.format == "json", out);
            return 0;
        }

        if (roof_cmd->parsed()) {
            RoofSpec spec(roof_cfg.C, roof_cfg.V, Surd(parse_flag(roof_cfg.ell1, "--ell1")),
                          Surd(parse_flag(roof_cfg.ell2, "--ell2")),
                          Surd(parse_flag(roof_cfg.h, "--h")));
            Record r;
            r.command = "roof";
            r.params = {{"C", std::to_string(spec.C)},
                        {"V", std::to_string(spec.V)},
                        {"ell1", to_string(spec.ell1)},
                        {"ell2", to_string(spec.ell2)},
                        {"h", to_string(spec.h)}};
            Surd value;
            if (roof_cfg.section.empty()) {
                value = roof_volume(spec);
            } else {
                Rational t = parse_flag(roof_cfg.section, "--section");
                r.params.emplace_back("section", to_string(t));
                value = section_volume(spec, t);
            }
            r.exact = to_string(value);
            r.decimal = to_double(value);
            r.extras["dim"] = spec.dim();
            r.extras["ell3"] = to_string(ell3(spec));
            emit(r, roof_cfg.format == "json", out);
            return 0;
        }

        if (mah_cmd->parsed()) {
            MahlerCertificate cert = positivity_certificate(mah_cfg.d);
            std::string coeffs, signs;
            for (const auto& c : cert.coefficients) {
                if (!coeffs.empty()) coeffs += ",";
                coeffs += to_string(c);
                signs += c == 0 ? '0' : (c > 0 ? '+' : '-');
            }
            if (mah_cfg.format == "json") {
                Json j;
                j["d"] = cert.d;
                Json list = Json::array();
                for (const auto& c : cert.coefficients) list.push_back(to_string(c));
                j["coeffs"] = std::move(list);
                j["k_threshold"] = cert.k_threshold;
                j["verdict"] = cert.verdict;
                if (mah_cfg.certificate) {
                    Json detail;
                    detail["sign_changes"] = cert.sign_change_count;
                    detail["value_at_one"] = to_string(cert.value_at_one);
                    detail["constant_term"] =
                        cert.a0_case == MahlerCertificate::ConstantTerm::positive
                            ? "positive"
                            : "zero_factorable";
                    j["certificate"] = std::move(detail);
                }
                out << j.dump() << "\n";
            } else {
                out << "mahler d=" << cert.d << "\n";
                out << "coefficients: " << coeffs << "\n";
                out << "sign pattern: " << signs << "\n";
                out << "k_threshold: " << cert.k_threshold << "\n";
                if (mah_cfg.certificate) {
                    out << "sign changes after factoring: " << cert.sign_change_count
                        << "\n";
                    out << "value at 1: " << to_string(cert.value_at_one) << "\n";
                    out << "constant term: "
                        << (cert.a0_case == MahlerCertificate::ConstantTerm::positive
                                ? "positive"
                                : "zero_factorable")
                        << "\n";
                }
                out << "verdict: " << (cert.verdict ? "positive on (0,1)" : "failed")
                    << "\n";
            }
            return 0;
        }

        if (prob_cmd->parsed()) {
            Rational wait = parse_flag(prob_cfg.wait, "--wait");
            Rational prob = meeting_probability(prob_cfg.d, wait);
            Record r;
            r.command = "probability";
            r.params = {{"d", std::to_string(prob_cfg.d)}, {"wait", to_string(wait)}};
            r.exact = to_string(prob);
            r.decimal = to_double(prob);
            emit(r, prob_cfg.format == "json", out);
            return 0;
        }

        if (met_cmd->parsed()) {
            Rational ell = parse_flag(met_cfg.ell, "--ell");
            Rational a = parse_flag(met_cfg.a, "--a");
            bool ok = four_point_check(metric_space(met_cfg.d, ell, a));
            Record r;
            r.command = "metric-check";
            r.params = {{"d", std::to_string(met_cfg.d)},
                        {"ell", to_string(ell)},
                        {"a", to_string(a)}};
            r.exact = ok ? "true" : "false";
            r.decimal = ok ? 1 : 0;
            r.extras["points"] = met_cfg.d + 1;
            r.lines.push_back(std::string("four-point condition: ") +
                              (ok ? "satisfied" : "violated"));
            emit(r, met_cfg.format == "json", out);
            return ok ? 0 : 3;
        }

        if (ver_cmd->parsed()) {
            const std::uint64_t samples =
                ver_cfg.samples ? ver_cfg.samples : default_samples();
            Rational ell = parse_flag(ver_cfg.ell, "--ell");
            Rational a = parse_flag(ver_cfg.a, "--a");
            std::vector<int> dims;
            if (ver_cfg.d == 0)
                dims = {2, 3, 4, 5, 6};
            else
                dims = {ver_cfg.d};
            Record r;
            r.command = "verify";
            r.params = {{"ell", to_string(ell)},
                        {"a", to_string(a)},
                        {"body", ver_cfg.body},
                        {"samples", std::to_string(samples)},
                        {"seed", std::to_string(ver_cfg.seed)}};
            Json checks = Json::array();
            int failures = 0;
            auto record_check = [&](const std::string& body, int d, const Rational& exact,
                                    const McEstimate& est) {
                const double target = to_double(exact);
                const bool ok =
                    std::abs(est.estimate - target) <= ver_cfg.sigmas * est.std_error;
                if (!ok) ++failures;
                Json one;
                one["body"] = body;
                one["d"] = d;
                one["exact"] = to_string(exact);
                one["estimate"] = est.estimate;
                one["std_error"] = est.std_error;
                one["ok"] = ok;
                checks.push_back(std::move(one));
                r.lines.push_back(body + " d=" + std::to_string(d) + ": exact=" +
                                  to_string(exact) + " estimate=" +
                                  dump_double(est.estimate) + " std_error=" +
                                  dump_double(est.std_error) + (ok ? " ok" : " FAIL"));
            };
            for (int d : dims) {
                IsocantedParams p(d, ell, a);
                if (ver_cfg.body != "dual")
                    record_check("primal", d, volume(p),
                                 mc_isocanted_volume(p, samples, ver_cfg.seed));
                if (ver_cfg.body != "primal") {
                    DualParams q = from_primal(p);
                    record_check("dual", d, dual_volume(q),
                                 mc_dual_volume(q, samples, ver_cfg.seed));
                }
            }
            r.exact = failures == 0 ? "pass" : "fail";
            r.decimal = failures;
            r.extras["checks"] = std::move(checks);
            emit(r, ver_cfg.format == "json", out);
            return failures == 0 ? 0 : 3;
        }

        if (tab_cmd->parsed()) {
            std::vector<std::pair<int, std::pair<Rational, Rational>>> rows;
            if (tab_cfg.sweep == "a") {
                if (tab_cfg.steps < 1) throw UsageError("--steps must be at least 1");
                Rational ell = parse_flag(tab_cfg.ell, "--ell");
                for (int k = 0; k < tab_cfg.steps; ++k)
                    rows.push_back({tab_cfg.d, {ell, ell * Rational(k, tab_cfg.steps)}});
            } else {
                if (tab_cfg.dmin < 2 || tab_cfg.dmax < tab_cfg.dmin)
                    throw UsageError("needs 2 <= dmin <= dmax");
                Rational ell = parse_flag(tab_cfg.ell, "--ell");
                Rational a = parse_flag(tab_cfg.a, "--a");
                for (int d = tab_cfg.dmin; d <= tab_cfg.dmax; ++d)
                    rows.push_back({d, {ell, a}});
            }
            const bool as_json = tab_cfg.format == "json";
            if (!as_json)
                out << "d,ell,a,b,c,vol_primal,vol_dual,product,mahler_lower_bound,margin\n";
            for (const auto& [d, body] : rows) {
                const auto& [ell, a] = body;
                IsocantedParams p(d, ell, a);
                Rational b = Rational(1) / (ell - a);
                Rational c = Rational(2) / ell;
                Rational primal = volume(p);
                Rational dual = dual_volume_primal_params(d, ell, a);
                Rational product = primal * dual;
                Rational bound(BigInt(1) << (2 * d), factorial(d));
                Rational margin = product - bound;
                if (as_json) {
                    Json j;
                    j["d"] = d;
                    j["ell"] = to_string(ell);
                    j["a"] = to_string(a);
                    j["b"] = to_string(b);
                    j["c"] = to_string(c);
                    j["vol_primal"] = to_string(primal);
                    j["vol_dual"] = to_string(dual);
                    j["product"] = to_string(product);
                    j["mahler_lower_bound"] = to_string(bound);
                    j["margin"] = to_string(margin);
                    out << j.dump() << "\n";
                } else {
                    out << d << "," << to_string(ell) << "," << to_string(a) << ","
                        << to_string(b) << "," << to_string(c) << "," << to_string(primal)
                        << "," << to_string(dual) << "," << to_string(product) << ","
                        << to_string(bound) << "," << to_string(margin) << "\n";
                }
            }
            return 0;
        }

        throw UsageError("no subcommand handled");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        err << "run 'isocant --help' for usage\n";
        return 2;
    } catch (const CertificateFailure& e) {
        err << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace isocant
