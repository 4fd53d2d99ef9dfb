#include "edgetangent/report_io.hpp"

#include <charconv>
#include <sstream>

#include "edgetangent/errors.hpp"
#include "edgetangent/matrices.hpp"
#include "edgetangent/square_matrix.hpp"

namespace edgetangent::io {

const std::vector<std::string_view> kMetricsKeys = {
    "command", "backend", "n",     "radii",          "sums",     "realizable",       "margin",
    "rho_sq",  "R_sq",    "V_sq",  "og_sq",          "ratio_R_rho_sq", "inradius", "routes",
    "all_routes_agree"};

const std::vector<std::string_view> kValidateKeys = {
    "command",  "backend",  "n",        "circumscriptible",  "radii",    "realizable",
    "margin",   "cayley_menger_det",    "cayley_menger_sign_ok", "volume_sq", "diagnostic"};

const std::vector<std::string_view> kVerifyKeys = {"command", "config", "total_violations", "dimensions"};

const std::vector<std::string_view> kDimensionKeys = {
    "n",                    "instances",          "violations",        "proof_bound_failures",
    "route_disagreements",  "ill_conditioned",    "embedding_failures", "rejections",
    "min_slack_left",       "min_slack_right",    "min_ratio_floor",   "min_slack_euler",
    "min_slack_rho_r",      "worst_oracle_delta", "worst_embedding_delta", "worst_backend_deviation",
    "violation_details"};

namespace {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

json radii_json(const BalloonRadii& radii) {
    json out = json::array();
    for (const Scalar& x : radii.values()) out.push_back(scalar_to_json(x));
    return out;
}

json routed_json(const RoutedValue& v) {
    json out = {{"closed", scalar_to_json(v.closed)}};
    if (v.determinant) out["determinant"] = scalar_to_json(*v.determinant);
    if (v.volume) out["volume"] = scalar_to_json(*v.volume);
    out["route"] = std::string(to_string(v.route));
    out["agree"] = v.route != Route::disagree;
    out["delta"] = v.delta;
    return out;
}

json extreme_json(const SlackExtreme& e) {
    return {{"value", e.value}, {"approx", e.approx}, {"index", e.index}, {"radii", e.radii}};
}

std::string scalar_csv(const Scalar& s) {
    return s.to_string();
}

}  // namespace

json scalar_to_json(const Scalar& value) {
    if (value.is_exact()) {
        return value.to_string();
    }
    return value.to_double();
}

Scalar scalar_from_json(const json& value, Backend backend) {
    if (value.is_string()) {
        return Scalar::parse(value.get<std::string>(), backend);
    }
    if (value.is_number()) {
        return Scalar::parse(value.dump(), backend);
    }
    throw ParseError("expected a number or a \"p/q\" string, got " + value.dump());
}

std::vector<Scalar> parse_scalar_list(std::string_view text, Backend backend) {
    std::vector<Scalar> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(Scalar::parse(text.substr(start, end - start), backend));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

InputDocument parse_input_document(const json& doc, Backend backend) {
    if (!doc.is_object()) {
        throw ParseError("input document must be a JSON object");
    }
    for (const auto& [key, _] : doc.items()) {
        if (key != "n" && key != "radii" && key != "edges") {
            throw ParseError("unknown key '" + key + "' in input document");
        }
    }
    const bool has_radii = doc.contains("radii");
    const bool has_edges = doc.contains("edges");
    if (has_radii == has_edges) {
        throw ParseError("input document needs exactly one of \"radii\" and \"edges\"");
    }
    InputDocument in;
    if (doc.contains("n")) {
        if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
        in.n = doc["n"].get<int>();
    }
    if (has_radii) {
        if (!doc["radii"].is_array()) throw ParseError("\"radii\" must be an array");
        for (const json& v : doc["radii"]) in.radii.push_back(scalar_from_json(v, backend));
        if (!doc.contains("n")) in.n = static_cast<int>(in.radii.size()) - 1;
        if (static_cast<int>(in.radii.size()) != in.n + 1) {
            throw ParseError("\"n\" = " + std::to_string(in.n) + " needs " + std::to_string(in.n + 1) + " radii");
        }
    } else {
        if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array of rows");
        for (const json& row : doc["edges"]) {
            if (!row.is_array()) throw ParseError("\"edges\" must be an array of rows");
            auto& out = in.edges.emplace_back();
            for (const json& v : row) out.push_back(scalar_from_json(v, backend));
        }
        if (!doc.contains("n")) in.n = static_cast<int>(in.edges.size()) - 1;
        if (static_cast<int>(in.edges.size()) != in.n + 1) {
            throw ParseError("\"n\" = " + std::to_string(in.n) + " needs " + std::to_string(in.n + 1) +
                             " edge rows");
        }
    }
    return in;
}

json metrics_document(const BalloonRadii& radii, const SimplexMetrics& m) {
    const SymmetricSums s = symmetric_sums(radii);
    json doc;
    doc["command"] = "metrics";
    doc["backend"] = std::string(to_string(m.backend));
    doc["n"] = m.n;
    doc["radii"] = radii_json(radii);
    doc["sums"] = {{"M", scalar_to_json(s.M)},   {"N", scalar_to_json(s.N)},   {"P", scalar_to_json(s.P)},
                   {"Q", scalar_to_json(s.Q)},   {"X1", scalar_to_json(s.X1)}, {"X2", scalar_to_json(s.X2)},
                   {"X3", scalar_to_json(s.X3)}};
    doc["realizable"] = s.X2.sign() > 0;
    doc["margin"] = scalar_to_json(s.X2);
    doc["rho_sq"] = scalar_to_json(m.rho_sq.value());
    doc["R_sq"] = scalar_to_json(m.R_sq.value());
    doc["V_sq"] = scalar_to_json(m.V_sq.value());
    doc["og_sq"] = scalar_to_json(m.og_sq.value());
    doc["ratio_R_rho_sq"] = scalar_to_json(m.ratio_R_rho_sq);
    doc["inradius"] = m.inradius ? json(m.inradius->to_double()) : json(nullptr);
    doc["routes"] = {{"rho_sq", routed_json(m.rho_sq)},
                     {"R_sq", routed_json(m.R_sq)},
                     {"V_sq", routed_json(m.V_sq)},
                     {"og_sq", routed_json(m.og_sq)}};
    doc["all_routes_agree"] = m.routes_agree();
    return doc;
}

std::string metrics_csv(const BalloonRadii& radii, const SimplexMetrics& m) {
    std::ostringstream out;
    out << "quantity,route,value\n";
    for (std::size_t i = 0; i < radii.size(); ++i) out << "x" << i << ",input," << scalar_csv(radii[i]) << "\n";
    auto emit = [&](const char* name, const RoutedValue& v) {
        out << name << ",closed," << scalar_csv(v.closed) << "\n";
        if (v.determinant) out << name << ",determinant," << scalar_csv(*v.determinant) << "\n";
        if (v.volume) out << name << ",volume," << scalar_csv(*v.volume) << "\n";
    };
    emit("rho_sq", m.rho_sq);
    emit("R_sq", m.R_sq);
    emit("V_sq", m.V_sq);
    emit("og_sq", m.og_sq);
    out << "ratio_R_rho_sq,closed," << scalar_csv(m.ratio_R_rho_sq) << "\n";
    if (m.inradius) out << "inradius,facets," << format_double(m.inradius->to_double()) << "\n";
    return out.str();
}

ValidationResult validate_edges(const EdgeLengthMatrix& edges, const Tolerance& tol) {
    ValidationResult r;
    r.n = edges.dimension();
    r.backend = edges.backend();
    r.cayley_menger_det = determinant(build_cayley_menger(edges));
    r.volume_sq = volume_sq_cm(edges);
    r.cayley_menger_sign_ok = !volume_is_degenerate(r.volume_sq, edges, tol);
    try {
        BalloonRadii radii = radii_from_edges(edges, tol);
        r.circumscriptible = true;
        r.realizability = is_realizable(radii);
        r.radii = std::move(radii);
    } catch (const NotCircumscriptible& e) {
        r.circumscriptible = false;
        r.diagnostic = e.what();
    }
    return r;
}

json validation_document(const ValidationResult& r) {
    json doc;
    doc["command"] = "validate";
    doc["backend"] = std::string(to_string(r.backend));
    doc["n"] = r.n;
    doc["circumscriptible"] = r.circumscriptible;
    doc["radii"] = r.radii ? radii_json(*r.radii) : json(nullptr);
    doc["realizable"] = r.realizability ? json(r.realizability->realizable) : json(nullptr);
    doc["margin"] = r.realizability ? scalar_to_json(r.realizability->margin) : json(nullptr);
    doc["cayley_menger_det"] = scalar_to_json(r.cayley_menger_det);
    doc["cayley_menger_sign_ok"] = r.cayley_menger_sign_ok;
    doc["volume_sq"] = scalar_to_json(r.volume_sq);
    doc["diagnostic"] = r.diagnostic.empty() ? json(nullptr) : json(r.diagnostic);
    return doc;
}

std::string validation_csv(const ValidationResult& r) {
    std::ostringstream out;
    out << "field,value\n";
    out << "n," << r.n << "\n";
    out << "circumscriptible," << (r.circumscriptible ? "true" : "false") << "\n";
    if (r.radii) {
        for (std::size_t i = 0; i < r.radii->size(); ++i) out << "x" << i << "," << scalar_csv((*r.radii)[i]) << "\n";
    }
    if (r.realizability) {
        out << "realizable," << (r.realizability->realizable ? "true" : "false") << "\n";
        out << "margin," << scalar_csv(r.realizability->margin) << "\n";
    }
    out << "cayley_menger_det," << scalar_csv(r.cayley_menger_det) << "\n";
    out << "cayley_menger_sign_ok," << (r.cayley_menger_sign_ok ? "true" : "false") << "\n";
    out << "volume_sq," << scalar_csv(r.volume_sq) << "\n";
    return out.str();
}

json campaign_document(const CampaignSummary& summary) {
    const CampaignConfig& c = summary.config;
    json doc;
    doc["command"] = "verify";
    doc["config"] = {{"n_min", c.n_min},
                     {"n_max", c.n_max},
                     {"count", c.count},
                     {"seed", c.seed},
                     {"profile", std::string(to_string(c.profile))},
                     {"backend", std::string(to_string(c.backend))},
                     {"oracles", c.oracles},
                     {"tolerance", c.tolerance.relative}};
    doc["total_violations"] = summary.total_violations();
    json dims = json::array();
    for (const DimensionSummary& d : summary.dimensions) {
        dims.push_back({{"n", d.n},
                        {"instances", d.instances},
                        {"violations", d.violations},
                        {"proof_bound_failures", d.proof_bound_failures},
                        {"route_disagreements", d.route_disagreements},
                        {"ill_conditioned", d.ill_conditioned},
                        {"embedding_failures", d.embedding_failures},
                        {"rejections", d.rejections},
                        {"min_slack_left", extreme_json(d.min_slack_left)},
                        {"min_slack_right", extreme_json(d.min_slack_right)},
                        {"min_ratio_floor", extreme_json(d.min_ratio_floor)},
                        {"min_slack_euler", d.min_slack_euler},
                        {"min_slack_rho_r", d.min_slack_rho_r},
                        {"worst_oracle_delta", d.worst_oracle_delta},
                        {"worst_embedding_delta", d.worst_embedding_delta},
                        {"worst_backend_deviation", d.worst_backend_deviation},
                        {"violation_details", d.violation_details}});
    }
    doc["dimensions"] = std::move(dims);
    return doc;
}

std::string campaign_csv(const CampaignSummary& summary) {
    std::ostringstream out;
    out << "n,instances,violations,proof_bound_failures,route_disagreements,ill_conditioned,embedding_failures,"
           "rejections,min_slack_left,min_slack_right,min_ratio_floor,min_slack_euler,min_slack_rho_r,"
           "worst_oracle_delta,worst_embedding_delta,worst_backend_deviation\n";
    for (const DimensionSummary& d : summary.dimensions) {
        out << d.n << ',' << d.instances << ',' << d.violations << ',' << d.proof_bound_failures << ','
            << d.route_disagreements << ',' << d.ill_conditioned << ',' << d.embedding_failures << ','
            << d.rejections << ',' << d.min_slack_left.value << ',' << d.min_slack_right.value << ','
            << d.min_ratio_floor.value << ',' << format_double(d.min_slack_euler) << ','
            << format_double(d.min_slack_rho_r) << ',' << format_double(d.worst_oracle_delta) << ','
            << format_double(d.worst_embedding_delta) << ',' << format_double(d.worst_backend_deviation) << '\n';
    }
    return out.str();
}

std::vector<std::string> recheck_metrics_document(const json& doc) {
    std::vector<std::string> problems;
    if (doc.value("backend", "") != "exact") {
        problems.push_back("only exact documents are self-certifying");
        return problems;
    }
    std::vector<Scalar> x;
    for (const json& v : doc.at("radii")) x.push_back(scalar_from_json(v, Backend::exact));
    const BalloonRadii radii(std::move(x));
    const SimplexMetrics m = compute_metrics(radii);

    auto check = [&](const std::string& where, const json& stored, const Scalar& expected) {
        if (!stored.is_string() || Scalar::parse(stored.get<std::string>(), Backend::exact) != expected) {
            problems.push_back(where + ": stored " + stored.dump() + ", recomputed " + expected.to_string());
        }
    };
    check("rho_sq", doc.at("rho_sq"), m.rho_sq.value());
    check("R_sq", doc.at("R_sq"), m.R_sq.value());
    check("V_sq", doc.at("V_sq"), m.V_sq.value());
    check("og_sq", doc.at("og_sq"), m.og_sq.value());
    check("ratio_R_rho_sq", doc.at("ratio_R_rho_sq"), m.ratio_R_rho_sq);

    // Every stored route must equal the stored closed value: that is the identity being certified.
    for (const auto& [name, routes] : doc.at("routes").items()) {
        const Scalar closed = Scalar::parse(routes.at("closed").get<std::string>(), Backend::exact);
        if (closed != Scalar::parse(doc.at(name).get<std::string>(), Backend::exact)) {
            problems.push_back("routes." + name + ".closed differs from top-level " + name);
        }
        for (const char* route : {"determinant", "volume"}) {
            if (!routes.contains(route)) continue;
            if (Scalar::parse(routes.at(route).get<std::string>(), Backend::exact) != closed) {
                problems.push_back("routes." + name + "." + route + " disagrees with the closed form");
            }
        }
    }
    return problems;
}

}  // namespace edgetangent::io
