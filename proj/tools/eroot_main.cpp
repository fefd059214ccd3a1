#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "eroot/bounds.hpp"
#include "eroot/certify.hpp"
#include "eroot/compare.hpp"
#include "eroot/json_io.hpp"
#include "eroot/pade.hpp"
#include "eroot/verify.hpp"

namespace {

using eroot::ordered_json;

struct CommonOpts {
    long precision_bits = 0;  // 0 = per-module default
    int jobs = 1;
    std::string format = "json";
    std::string out_path;
    std::string archive_path;
    std::string variant = "d=0.17";
    bool lambda0_bounded = false;
    bool deep = false;
};

eroot::DConstant variant_of(const std::string& v)
{
    if (v == "d=0.17") return eroot::DConstant::c017;
    if (v == "d=0.174") return eroot::DConstant::c0174;
    throw CLI::ValidationError("--variant must be d=0.17 or d=0.174");
}

// Defaults may come from a JSON config file named by EROOT_CONFIG.
void load_env_config(CommonOpts& opts)
{
    const char* path = std::getenv("EROOT_CONFIG");
    if (path == nullptr || *path == '\0') return;
    std::ifstream in(path);
    if (!in) return;
    ordered_json cfg = ordered_json::parse(in, nullptr, false);
    if (cfg.is_discarded()) return;
    if (cfg.contains("precision_bits")) opts.precision_bits = cfg["precision_bits"].get<long>();
    if (cfg.contains("jobs")) opts.jobs = cfg["jobs"].get<int>();
    if (cfg.contains("format")) opts.format = cfg["format"].get<std::string>();
    if (cfg.contains("archive")) opts.archive_path = cfg["archive"].get<std::string>();
}

void emit(const CommonOpts& opts, const std::string& text)
{
    if (opts.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(opts.out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + opts.out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

int emit_checks(const CommonOpts& opts, const std::vector<eroot::CheckResult>& checks)
{
    if (opts.format == "json") {
        ordered_json doc;
        ordered_json arr = ordered_json::array();
        int failed = 0;
        for (const auto& c : checks) {
            if (!c.pass) ++failed;
            arr.push_back(eroot::check_to_json(c));
        }
        doc["checks"] = std::move(arr);
        doc["passed"] = checks.size() - failed;
        doc["failed"] = failed;
        emit(opts, doc.dump(2));
        return failed == 0 ? 0 : 1;
    }
    std::string text;
    int failed = 0;
    for (const auto& c : checks) {
        text += (c.pass ? "[pass] " : "[FAIL] ") + c.name;
        if (!c.detail.empty()) text += "  (" + c.detail + ")";
        text += '\n';
        if (!c.pass) ++failed;
    }
    text += std::to_string(checks.size() - failed) + " passed, " + std::to_string(failed) +
            " failed\n";
    emit(opts, text);
    return failed == 0 ? 0 : 1;
}

int run_construct(const CommonOpts& opts, int n, int k, long ell, long ell_hi)
{
    ordered_json out = ordered_json::array();
    if (ell_hi < ell) ell_hi = ell;
    for (long l = ell; l <= ell_hi; ++l) {
        eroot::ApproximationSystem sys = eroot::normalize_system(n, k, l, opts.jobs);
        ordered_json doc = eroot::system_to_json(sys);
        if (doc["determinant"] == "0") {
            ordered_json fail;
            fail["error"] = "check-failed";
            fail["invariant"] = "determinant-nonzero";
            fail["n"] = n;
            fail["k"] = k;
            fail["ell"] = l;
            emit(opts, fail.dump(2));
            return 1;
        }
        out.push_back(std::move(doc));
    }
    emit(opts, out.size() == 1 ? out[0].dump(2) : out.dump(2));
    return 0;
}

int run_verify(const CommonOpts& opts, const std::string& grid, int n, int k, long ell)
{
    eroot::GridSpec spec;
    if (grid == "default") {
        spec = eroot::GridSpec::default_grid();
    } else if (grid == "small") {
        spec.nk = {{2, 2}, {2, 3}};
        spec.ell_hi = 4;
    } else {
        spec.nk = {{n, k}};
        spec.ell_lo = ell;
        spec.ell_hi = ell;
    }
    eroot::DConstant variant = variant_of(opts.variant);

    std::vector<eroot::CheckResult> checks = eroot::structural_suite(spec, opts.jobs, variant);
    auto absorb = [&checks](std::vector<eroot::CheckResult> more) {
        for (auto& c : more) checks.push_back(std::move(c));
    };
    absorb(eroot::maxima_table_suite(eroot::Ball::kDefaultPrec, false));
    absorb(eroot::max_product_suite());
    absorb(eroot::theorem_consistency_suite());
    absorb(eroot::z_inverse_suite());
    absorb(eroot::comparison_suite());
    if (opts.deep) {
        long deep_ell = (grid == "single" && ell >= 2) ? ell : 2200;
        mpfr_prec_t prec = opts.precision_bits > 0
                               ? static_cast<mpfr_prec_t>(opts.precision_bits)
                               : 25000;
        absorb(eroot::deep_bound_suite(deep_ell, prec, opts.jobs));
        for (auto [cn, ck] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}}) {
            for (long long sample : {1000000LL, 1000000000LL, 1000000000000LL}) {
                absorb(eroot::proof_chain_suite(cn, ck, sample, 256, variant));
            }
        }
    }
    return emit_checks(opts, checks);
}

int run_bounds(const CommonOpts& opts, int n, int k, double loglogH, double logH, long ell)
{
    eroot::DConstant variant = variant_of(opts.variant);
    const mpfr_prec_t prec = opts.precision_bits > 0
                                 ? static_cast<mpfr_prec_t>(opts.precision_bits)
                                 : eroot::Ball::kDefaultPrec;
    ordered_json arr = ordered_json::array();
    auto add = [&](const std::string& quantity, double value, bool log_scale,
                   bool hypothesis, ordered_json extra = {}) {
        ordered_json rec;
        rec["n"] = n;
        rec["k"] = k;
        if (ell > 0) rec["ell"] = ell;
        if (loglogH > 0) rec["log_logH"] = loglogH;
        else if (logH > 0) rec["logH"] = logH;
        rec["quantity"] = quantity;
        rec["value"] = value;
        rec["log_scale"] = log_scale;
        rec["hypothesis_satisfied"] = hypothesis;
        if (!extra.is_null()) rec["paper_constant"] = extra;
        arr.push_back(std::move(rec));
    };

    if (ell > 0) {
        eroot::Ball s = eroot::s_func(n, k, prec);
        bool ell_hyp = std::log(static_cast<double>(ell)) >= s.mid_double();
        add("q", eroot::q_func(ell, n, k, prec).mid_double(), true, ell_hyp);
        add("r", eroot::r_func(ell, n, k, prec, variant).mid_double(), true, ell_hyp);
        add("a_u0_bound", eroot::a_u0_bound(k, ell, prec).mid_double(), true, ell_hyp);
        add("sum_L_bound", eroot::sum_L_bound(n, k, ell, prec).mid_double(), true, ell_hyp);
    }
    if (logH > 0 || loglogH > 0) {
        eroot::Ball logHb = loglogH > 0
                                ? eroot::Ball::exp(eroot::Ball::from_double(loglogH, prec))
                                : eroot::Ball::from_double(logH, prec);
        eroot::OmegaResult om = eroot::omega_theorem(k, logHb, n, prec);
        add("omega", om.value.mid_double(), false, om.hypothesis_satisfied,
            eroot::d_constant(k));
        eroot::BoundParams params = eroot::BoundParams::compute(n, k, prec, variant);
        eroot::EpsilonResult eps = eroot::epsilon_H(logHb, params, prec);
        add("epsilon", eps.value.mid_double(), false, eps.hypothesis_satisfied);
        add("s", params.s.mid_double(), false, true);
        add("B", params.B.mid_double(), false, true);
        add("v", params.v.mid_double(), false, true);
    }
    emit(opts, arr.dump(2));
    return 0;
}

int run_compare(const CommonOpts& opts, int n, int k, std::vector<double> loglogH)
{
    auto rows = eroot::compare_report(n, k, loglogH);
    if (opts.format == "csv") {
        emit(opts, eroot::comparison_rows_to_csv(rows));
        return 0;
    }
    if (opts.format == "text") {
        std::string text = "n k log_logH exp_this exp_mahler exp_ehlm winner\n";
        for (const auto& r : rows) {
            char buf[256];
            std::snprintf(buf, sizeof buf, "%d %d %.6g %.8f %.8f %.8f %s\n", r.n, r.k,
                          r.log_logH, r.exp_this_paper, r.exp_mahler, r.exp_ehlm,
                          r.winner.c_str());
            text += buf;
        }
        emit(opts, text);
        return 0;
    }
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) arr.push_back(eroot::comparison_row_to_json(r));
    emit(opts, arr.dump(2));
    return 0;
}

int run_certify(const CommonOpts& opts, int n, int k, std::vector<long long> Hs)
{
    auto records = eroot::empirical_omega_curve(
        n, k, Hs, static_cast<mpfr_prec_t>(opts.precision_bits), opts.jobs,
        opts.lambda0_bounded);
    ordered_json arr = ordered_json::array();
    bool all_verdicts = true;
    for (const auto& r : records) {
        ordered_json doc = eroot::certificate_to_json(r);
        if (!opts.archive_path.empty()) eroot::append_ndjson(opts.archive_path, doc);
        all_verdicts = all_verdicts && r.verdict;
        arr.push_back(std::move(doc));
    }
    emit(opts, arr.size() == 1 ? arr[0].dump(2) : arr.dump(2));
    return all_verdicts ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"explicit simultaneous-approximation toolkit for powers of e^{1/n}"};
    app.require_subcommand(1);

    CommonOpts opts;
    load_env_config(opts);
    app.add_option("--precision-bits", opts.precision_bits, "working precision (0 = default)");
    app.add_option("--jobs", opts.jobs, "parallelism degree")->check(CLI::PositiveNumber);
    app.add_option("--format", opts.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", opts.out_path, "output file (default stdout)");
    app.add_option("--archive", opts.archive_path, "append certificates to this NDJSON file");
    app.add_option("--variant", opts.variant, "decay-constant variant: d=0.17 or d=0.174")
        ->check(CLI::IsMember({"d=0.17", "d=0.174"}));
    app.add_flag("--lambda0-bounded", opts.lambda0_bounded,
                 "also clamp lambda_0 to [-H, H] in the certifier");
    app.add_flag("--deep", opts.deep, "include the large-ell exact checks");

    int n = 2, k = 2;
    long ell = 2, ell_hi = 0;
    double loglogH = 0, logH = 0;
    std::string grid = "default";
    std::vector<double> loglogH_list;
    std::vector<long long> H_list;

    CLI::App* construct = app.add_subcommand("construct", "build a normalized system");
    construct->fallthrough();
    construct->add_option("--n", n)->required();
    construct->add_option("--k", k)->required();
    construct->add_option("--ell", ell)->required();
    construct->add_option("--ell-hi", ell_hi, "emit systems for ell..ell-hi");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    verify->fallthrough();
    verify->add_option("--grid", grid, "default|small|single")
        ->check(CLI::IsMember({"default", "small", "single"}));
    verify->add_option("--n", n);
    verify->add_option("--k", k);
    verify->add_option("--ell", ell);

    CLI::App* bounds = app.add_subcommand("bounds", "evaluate the analytic bounds");
    bounds->fallthrough();
    bounds->add_option("--n", n);
    bounds->add_option("--k", k)->required();
    bounds->add_option("--loglogH", loglogH);
    bounds->add_option("--logH", logH);
    bounds->add_option("--ell", ell);

    CLI::App* compare = app.add_subcommand("compare", "compare against the older bounds");
    compare->fallthrough();
    compare->add_option("--n", n)->required();
    compare->add_option("--k", k)->required();
    compare->add_option("--loglogH", loglogH_list, "log log H values")->required();

    CLI::App* certify = app.add_subcommand("certify", "exhaustive linear-form certificates");
    certify->fallthrough();
    certify->add_option("--n", n)->required();
    certify->add_option("--k", k)->required();
    certify->add_option("--H", H_list, "height bounds")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return run_construct(opts, n, k, ell, ell_hi);
        if (verify->parsed()) return run_verify(opts, grid, n, k, ell);
        if (bounds->parsed()) {
            bool ell_given = bounds->count("--ell") > 0;
            return run_bounds(opts, n, k, loglogH, logH, ell_given ? ell : 0);
        }
        if (compare->parsed()) return run_compare(opts, n, k, loglogH_list);
        if (certify->parsed()) return run_certify(opts, n, k, H_list);
    } catch (const std::domain_error& e) {
        ordered_json err;
        err["error"] = "input-domain";
        err["message"] = e.what();
        std::cerr << err.dump() << '\n';
        return 2;
    } catch (const eroot::construction_error& e) {
        ordered_json err;
        err["error"] = "construction-contract";
        err["invariant"] = e.what();
        std::cerr << err.dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        ordered_json err;
        err["error"] = "runtime";
        err["message"] = e.what();
        std::cerr << err.dump() << '\n';
        return 1;
    }
    return 0;
}
