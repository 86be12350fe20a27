#include "ovq/json_io.hpp"

#include <fstream>
#include <sstream>

namespace ovq {

Json laurent_to_json(const IntLaurent& p) {
    Json arr = Json::array();
    p.for_each_term([&](int e, const BigInt& c) { arr.push_back(Json::array({e, c.get_str()})); });
    return arr;
}

IntLaurent laurent_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("laurent value must be an array of [exponent, coeff] pairs");
    IntLaurent p;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw InputError("laurent term must be a [exponent, coeff] pair");
        int e = pair[0].get<int>();
        BigInt c(pair[1].get<std::string>());
        p += IntLaurent::monomial(c, e);
    }
    return p;
}

Json ratfn_to_json(const RationalFn& f) {
    Json j;
    j["num"] = laurent_to_json(f.num());
    j["den"] = laurent_to_json(f.den());
    return j;
}

RationalFn ratfn_from_json(const Json& j) {
    return RationalFn(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

Json xseries_to_json(const XSeries& s) {
    Json arr = Json::array();
    for (int n = 0; n <= s.policy().cap; ++n) arr.push_back(ratfn_to_json(s.coeff(n)));
    return arr;
}

XSeries xseries_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw InputError("series value must be a nonempty array");
    XSeries s(XPolicy{static_cast<int>(j.size()) - 1});
    for (int n = 0; n < static_cast<int>(j.size()); ++n)
        s.set_coeff(n, ratfn_from_json(j[static_cast<std::size_t>(n)]));
    return s;
}

Json ov_table_to_json(const OVTable& t) {
    Json j;
    j["tau"] = t.tau;
    j["max_degree"] = t.max_degree;
    j["exponent_note"] = kExponentNote;
    Json entries = Json::array();
    for (const auto& [mk, n] : t.entries)
        entries.push_back(Json::array({mk.first, mk.second, n.get_str()}));
    j["entries"] = std::move(entries);
    return j;
}

OVTable ov_table_from_json(const Json& j) {
    OVTable t;
    t.tau = j.at("tau").get<long>();
    t.max_degree = j.at("max_degree").get<int>();
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3) throw InputError("table entry must be [m, k, N]");
        BigInt n(e[2].get<std::string>());
        if (n == 0) throw InputError("table entries must be nonzero");
        t.entries[{e[0].get<int>(), e[1].get<int>()}] = std::move(n);
    }
    return t;
}

std::string ov_table_to_csv(const OVTable& t) {
    std::ostringstream os;
    os << "m,k,N\n";
    for (const auto& [mk, n] : t.entries)
        os << mk.first << "," << mk.second << "," << n.get_str() << "\n";
    return os.str();
}

Json quiver_to_json(const Quiver& q) {
    Json j;
    j["vertices"] = q.vertex_count;
    Json edges = Json::array();
    for (const auto& [t, h] : q.edges) edges.push_back(Json::array({t, h}));
    j["edges"] = std::move(edges);
    return j;
}

Quiver quiver_from_json(const Json& j) {
    Quiver q;
    if (!j.is_object()) throw InputError("quiver file must hold a JSON object");
    if (!j.contains("vertices") || !j["vertices"].is_number_integer())
        throw InputError("quiver field 'vertices' must be an integer");
    q.vertex_count = j["vertices"].get<int>();
    if (q.vertex_count <= 0) throw InputError("quiver field 'vertices' must be positive");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw InputError("quiver field 'edges' must be an array");
    int idx = 0;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw InputError("quiver edge #" + std::to_string(idx) +
                             " must be a [tail, head] pair of integers");
        q.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        ++idx;
    }
    q.validate();
    return q;
}

Quiver load_quiver(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open quiver file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return quiver_from_json(j);
}

Json kac_table_to_json(const KacTable& t) {
    Json j;
    j["quiver"] = quiver_to_json(t.quiver);
    Json bound = Json::array();
    for (int b : t.bound) bound.push_back(b);
    j["dim_bound"] = std::move(bound);
    j["exponent_note"] = kExponentNote;
    Json values = Json::array();
    for (const auto& [v, poly] : t.values) {
        Json row;
        Json dim = Json::array();
        for (int x : v) dim.push_back(x);
        row["v"] = std::move(dim);
        row["kac_polynomial"] = laurent_to_json(poly);
        values.push_back(std::move(row));
    }
    j["values"] = std::move(values);
    return j;
}

Json gpoly_to_json(const GPoly& g) {
    Json j;
    j["m"] = g.m;
    j["g"] = laurent_to_json(g.poly);
    return j;
}

Json betti_to_json(const std::vector<std::pair<int, BigInt>>& betti) {
    Json arr = Json::array();
    for (const auto& [deg, dim] : betti) arr.push_back(Json::array({deg, dim.get_str()}));
    return arr;
}

Json product_report_to_json(const ProductReport& r) {
    Json j;
    j["tau"] = r.tau;
    j["max_degree"] = r.max_degree;
    j["u_trunc"] = r.u_trunc;
    j["l_trunc"] = r.l_trunc;
    j["status"] = r.ok ? "verified" : "mismatch";
    if (!r.ok) {
        Json m;
        m["n"] = r.mismatch.n;
        m["exponent"] = r.mismatch.exponent;
        m["product"] = r.mismatch.product_coeff;
        m["series"] = r.mismatch.series_coeff;
        j["mismatch"] = std::move(m);
    }
    return j;
}

Json rr_report_to_json(const RRReport& r) {
    Json j;
    j["variant"] = r.variant;
    j["order"] = r.order;
    j["status"] = r.status;
    if (!r.ok) {
        Json m;
        m["sides"] = r.mismatch.sides;
        m["exponent"] = r.mismatch.exponent;
        m["lhs"] = r.mismatch.lhs;
        m["rhs"] = r.mismatch.rhs;
        j["mismatch"] = std::move(m);
    }
    return j;
}

Json deformed_report_to_json(const DeformedReport& r) {
    Json j;
    j["max_degree"] = r.max_degree;
    j["u_trunc"] = r.u_trunc;
    j["l_trunc"] = r.l_trunc;
    j["arrangements_equal"] = r.arrangements_equal;
    j["status"] = r.ok ? "verified" : "mismatch";
    return j;
}

Json hlrv_report_to_json(const HlrvReport& r) {
    Json j;
    j["k"] = r.k;
    j["max_degree"] = r.max_degree;
    j["status"] = r.ok ? "verified" : "mismatch";
    return j;
}

Json divisibility_report_to_json(const DivisibilityReport& r) {
    Json j;
    j["p"] = r.p;
    j["alpha"] = r.alpha;
    j["a"] = r.a;
    j["tau"] = r.tau;
    Json fp;
    fp["checked"] = r.fp_checked;
    fp["holds"] = r.fp_holds;
    fp["congruence_form"] = r.fp_congruence_form;
    if (!r.fp_skip_reason.empty()) fp["skip_reason"] = r.fp_skip_reason;
    j["fp_lemma"] = std::move(fp);
    Json bn;
    bn["checked"] = r.binom_checked;
    bn["holds"] = r.binom_holds;
    if (!r.binom_skip_reason.empty()) bn["skip_reason"] = r.binom_skip_reason;
    j["binomial_lemma"] = std::move(bn);
    j["status"] = r.all_hold() ? "verified" : "violated";
    return j;
}

Json error_to_json(const Error& e) {
    Json j;
    j["error"] = e.kind();
    j["message"] = e.what();
    if (!e.detail().empty()) {
        Json d;
        for (const auto& [k, v] : e.detail()) d[k] = v;
        j["detail"] = std::move(d);
    }
    return j;
}

}  // namespace ovq
