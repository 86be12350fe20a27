// Command-line front end: every computation exposed with reproducible,
// machine-readable output. Exit codes: 0 success, 2 usage/input error,
// 3 mathematical violation (integrality/sign/parity/support/mismatch),
// with the diagnostic serialized as JSON on stderr.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ovq/json_io.hpp"
#include "ovq/ov.hpp"
#include "ovq/quiver.hpp"
#include "ovq/rr.hpp"

namespace {

using ovq::Json;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<int> parse_csv_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

int rows_needed(int variant, int order) {
    int m = variant == 1 ? order - 1 : (order - 1) / 2;
    return std::max(3, m);
}

struct Args {
    long tau = 0;
    int max_degree = 0;
    std::string partition;
    int variant = 1;
    int order = 0;
    std::string quiver_path;
    std::string dim_bound;
    int n = 0;
    int k = 0;
    long long p = 0;
    int alpha = 0;
    std::string format = "json";
};

int run_compute(const Args& a) {
    ovq::OVTable t = ovq::ov_table(a.tau, a.max_degree);
    if (a.format == "csv") {
        std::cout << ovq::ov_table_to_csv(t);
    } else if (a.format == "text") {
        std::cout << "tau=" << t.tau << " max_degree=" << t.max_degree << "\n";
        for (int m = 1; m <= t.max_degree; ++m)
            std::cout << "f_" << m << " = " << t.row_poly(m).to_string() << "\n";
    } else {
        emit(ovq::ov_table_to_json(t));
    }
    return 0;
}

int run_fmu(const Args& a) {
    ovq::Partition mu = ovq::Partition::from_string(a.partition);
    int cap = a.max_degree > 0 ? a.max_degree : mu.weight();
    ovq::IntLaurent f = ovq::ov_f_mu(a.tau, mu, cap);
    if (a.format == "text") {
        std::cout << "f_" << mu.to_string() << " = " << f.to_string() << "\n";
    } else {
        Json j;
        j["tau"] = a.tau;
        j["mu"] = mu.to_string();
        j["exponent_note"] = ovq::kExponentNote;
        j["f"] = ovq::laurent_to_json(f);
        emit(j);
    }
    return 0;
}

int run_product_check(const Args& a) {
    ovq::OVTable t = ovq::ov_table(a.tau, a.max_degree);
    int l = ovq::min_l_trunc(t, a.max_degree, a.order);
    ovq::ProductReport rep = ovq::product_verify(t, a.max_degree, a.order, l);
    emit(ovq::product_report_to_json(rep));
    return rep.ok ? 0 : 3;
}

int run_gpoly(const Args& a) {
    if (a.max_degree > 14)
        throw ovq::InputError("gpoly: degrees above 14 exceed the cost guard");
    ovq::OVTable t = ovq::ov_table(1, a.max_degree);
    if (a.format == "text") {
        for (int m = 1; m <= a.max_degree; ++m)
            std::cout << "g_" << m << " = "
                      << ovq::g_poly_from_table(t, m).poly.to_string() << "\n";
        return 0;
    }
    Json arr = Json::array();
    for (int m = 1; m <= a.max_degree; ++m)
        arr.push_back(ovq::gpoly_to_json(ovq::g_poly_from_table(t, m)));
    Json j;
    j["exponent_note"] = ovq::kExponentNote;
    j["g_polynomials"] = std::move(arr);
    emit(j);
    return 0;
}

int run_rr(const Args& a) {
    int m = rows_needed(a.variant, a.order);
    if (m > 14)
        throw ovq::InputError("rr: order needs table rows beyond the cost guard (m = " +
                              std::to_string(m) + ")");
    ovq::OVTable t = ovq::ov_table(1, m);
    ovq::RRReport rep = ovq::rr_verify(a.variant, a.order, t);
    emit(ovq::rr_report_to_json(rep));
    return rep.ok ? 0 : 3;
}

int run_f_one(const Args& a) {
    ovq::BigInt v = ovq::f_at_one(a.n, a.tau);
    if (a.format == "text") {
        std::cout << v.get_str() << "\n";
        return 0;
    }
    Json j;
    j["m"] = a.n;
    j["tau"] = a.tau;
    j["value"] = v.get_str();
    emit(j);
    return 0;
}

int run_gw(const Args& a) {
    ovq::BigRat v = ovq::disk_gw(a.n, a.tau);
    if (a.format == "text") {
        std::cout << v.get_str() << "\n";
        return 0;
    }
    Json j;
    j["m"] = a.n;
    j["tau"] = a.tau;
    j["num"] = v.get_num().get_str();
    j["den"] = v.get_den().get_str();
    emit(j);
    return 0;
}

int run_hua(const Args& a) {
    ovq::Quiver q = ovq::load_quiver(a.quiver_path);
    std::vector<int> bound = parse_csv_ints(a.dim_bound);
    ovq::KacTable t = ovq::hua_kac(q, bound);
    if (a.format == "text") {
        for (const auto& [v, poly] : t.values) {
            std::cout << "A(";
            for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
            std::cout << ") = " << poly.to_string() << "\n";
        }
        return 0;
    }
    emit(ovq::kac_table_to_json(t));
    return 0;
}

int run_betti(const Args& a) {
    int degree = std::max(a.n, a.max_degree);
    ovq::OVTable t = ovq::ov_table(a.tau, degree);
    auto betti = ovq::betti_extract(a.n, a.tau, t);
    Json j;
    j["n"] = a.n;
    j["tau"] = a.tau;
    j["dimension"] = ovq::leg_quiver_dim(a.n, static_cast<int>(1 - a.tau));
    j["betti"] = ovq::betti_to_json(betti);
    emit(j);
    return 0;
}

int run_hlrv_check(const Args& a) {
    ovq::HlrvReport rep = ovq::hlrv_special_check(a.k, a.max_degree);
    emit(ovq::hlrv_report_to_json(rep));
    return rep.ok ? 0 : 3;
}

int run_fp(const Args& a) {
    if (a.alpha > 0) {
        ovq::DivisibilityReport rep = ovq::divisibility_checks(a.p, a.alpha, a.n, a.tau);
        emit(ovq::divisibility_report_to_json(rep));
        return rep.all_hold() ? 0 : 3;
    }
    ovq::BigInt v = ovq::fp_function(a.n, a.p);
    Json j;
    j["p"] = a.p;
    j["n"] = a.n;
    j["value"] = v.get_str();
    emit(j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of the framed vertex: integer BPS tables, Kac "
                 "polynomials of quivers, Rogers-Ramanujan checks"};
    app.require_subcommand(1);
    Args a;

    auto add_format = [&](CLI::App* cmd, bool with_csv) {
        auto set = with_csv ? std::vector<std::string>{"json", "csv", "text"}
                            : std::vector<std::string>{"json", "text"};
        cmd->add_option("--format", a.format, "output format")
            ->check(CLI::IsMember(set))
            ->capture_default_str();
    };

    CLI::App* compute = app.add_subcommand("compute", "integer table N_{m,k} at a framing");
    compute->add_option("--tau", a.tau, "framing")->required();
    compute->add_option("--max-degree", a.max_degree, "largest x-degree m")
        ->required()
        ->check(CLI::PositiveNumber);
    add_format(compute, true);

    CLI::App* fmu = app.add_subcommand("fmu", "invariant attached to a partition mu");
    fmu->add_option("--tau", a.tau, "framing")->required();
    fmu->add_option("--partition", a.partition, "comma-separated parts, e.g. 2,1")->required();
    fmu->add_option("--max-degree", a.max_degree, "series cap (default |mu|)")
        ->check(CLI::PositiveNumber);
    add_format(fmu, false);

    CLI::App* pc = app.add_subcommand("product-check",
                                      "expand the infinite product and compare with the series");
    pc->add_option("--tau", a.tau, "framing")->required();
    pc->add_option("--max-degree", a.max_degree, "largest x-degree")
        ->required()
        ->check(CLI::PositiveNumber);
    pc->add_option("--order", a.order, "u-exponent window to compare")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* gp = app.add_subcommand("gpoly", "sign-flipped framing-1 rows g_m");
    gp->add_option("--max-degree", a.max_degree, "largest row m")
        ->required()
        ->check(CLI::PositiveNumber);
    add_format(gp, false);

    CLI::App* rr = app.add_subcommand("rr", "Rogers-Ramanujan verification");
    rr->add_option("--variant", a.variant, "1 (x=q^{1/2}) or 2 (x=q^{3/2})")
        ->required()
        ->check(CLI::Range(1, 2));
    rr->add_option("--order", a.order, "q-truncation order")->required()->check(CLI::PositiveNumber);

    CLI::App* fone = app.add_subcommand("f-one", "f_m(1) by the Moebius/binomial formula");
    fone->add_option("--n", a.n, "index m")->required()->check(CLI::PositiveNumber);
    fone->add_option("--tau", a.tau, "framing")->required();
    add_format(fone, false);

    CLI::App* gw = app.add_subcommand("gw", "genus-zero degree-m disk invariant");
    gw->add_option("--n", a.n, "degree m")->required()->check(CLI::PositiveNumber);
    gw->add_option("--tau", a.tau, "framing")->required();
    add_format(gw, false);

    CLI::App* hua = app.add_subcommand("hua", "Kac polynomials of a quiver");
    hua->add_option("--quiver", a.quiver_path, "path to quiver JSON")->required();
    hua->add_option("--dim-bound", a.dim_bound, "componentwise bound, e.g. 2,1")->required();
    add_format(hua, false);

    CLI::App* betti = app.add_subcommand("betti", "Betti numbers read from row n (tau <= 0)");
    betti->add_option("--n", a.n, "row")->required()->check(CLI::PositiveNumber);
    betti->add_option("--tau", a.tau, "framing (<= 0)")->required();
    betti->add_option("--max-degree", a.max_degree, "table degree (default n)");

    CLI::App* hlrv = app.add_subcommand("hlrv-check",
                                        "one-vertex k-leg series vs the framed series");
    hlrv->add_option("--k", a.k, "number of legs")->required()->check(CLI::PositiveNumber);
    hlrv->add_option("--max-degree", a.max_degree, "largest degree n")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* fp = app.add_subcommand("fp", "f_p products and divisibility checks");
    fp->add_option("--p", a.p, "prime")->required();
    fp->add_option("--n", a.n, "argument (multiplier/cofactor a when --alpha is set)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    fp->add_option("--alpha", a.alpha, "run the p^{2 alpha} divisibility checks");
    fp->add_option("--tau", a.tau, "framing for the binomial lemma (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*compute) return run_compute(a);
        if (*fmu) return run_fmu(a);
        if (*pc) return run_product_check(a);
        if (*gp) return run_gpoly(a);
        if (*rr) return run_rr(a);
        if (*fone) return run_f_one(a);
        if (*gw) return run_gw(a);
        if (*hua) return run_hua(a);
        if (*betti) return run_betti(a);
        if (*hlrv) return run_hlrv_check(a);
        if (*fp) return run_fp(a);
    } catch (const ovq::Error& e) {
        std::cerr << ovq::error_to_json(e).dump(2) << "\n";
        return e.math_violation() ? 3 : 2;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = "InternalError";
        j["message"] = e.what();
        std::cerr << j.dump(2) << "\n";
        return 2;
    }
    return 2;
}
