#include "edgetangent/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "edgetangent/errors.hpp"
#include "edgetangent/matrices.hpp"
#include "edgetangent/metrics.hpp"
#include "edgetangent/report_io.hpp"
#include "edgetangent/simplex.hpp"
#include "edgetangent/square_matrix.hpp"
#include "edgetangent/verify.hpp"

namespace edgetangent::cli {

namespace {

using io::json;

struct RunConfig {
    std::string backend = "exact";
    std::string format = "json";
    double tolerance = 1e-9;
    std::string radii;
    std::string edges_path;
    std::string input_path;
    bool random = false;
    std::string n;
    std::size_t count = 1000;
    std::uint64_t seed = 42;
    std::string profile = "uniform";
    unsigned workers = 1;
    bool no_oracles = false;
    std::size_t repetitions = 25;
};

struct ResolvedInput {
    std::optional<BalloonRadii> radii;
    std::optional<EdgeLengthMatrix> edges;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

EdgeLengthMatrix edges_from_rows(const std::vector<std::vector<Scalar>>& rows) {
    return EdgeLengthMatrix(SquareMatrix::from_rows(rows));
}

ResolvedInput resolve_input(const RunConfig& cfg, Backend backend) {
    const int sources = !cfg.radii.empty() + !cfg.edges_path.empty() + !cfg.input_path.empty() + cfg.random;
    if (sources != 1) {
        throw ParseError("give exactly one input source: --radii, --edges, --input or --random");
    }
    ResolvedInput in;
    if (!cfg.radii.empty()) {
        in.radii = BalloonRadii(io::parse_scalar_list(cfg.radii, backend));
        if (!cfg.n.empty() && std::stoi(cfg.n) != in.radii->dimension()) {
            throw ParseError("--n " + cfg.n + " does not match " + std::to_string(in.radii->size()) + " radii");
        }
        return in;
    }
    if (cfg.random) {
        const int n = cfg.n.empty() ? 3 : parse_dimension_range(cfg.n).min;
        in.radii = random_radii(n, cfg.seed, parse_profile(cfg.profile), backend).radii;
        return in;
    }
    json doc = read_json_file(cfg.edges_path.empty() ? cfg.input_path : cfg.edges_path);
    if (doc.is_array()) {
        doc = json{{"edges", doc}};
    }
    const io::InputDocument parsed = io::parse_input_document(doc, backend);
    if (!parsed.radii.empty()) {
        in.radii = BalloonRadii(parsed.radii);
    } else {
        in.edges = edges_from_rows(parsed.edges);
    }
    return in;
}

void emit(std::ostream& out, const json& doc) {
    out << doc.dump(2) << '\n';
}

int cmd_metrics(const RunConfig& cfg, std::ostream& out) {
    const Backend backend = parse_backend(cfg.backend);
    const Tolerance tol{cfg.tolerance, 1e-12};
    ResolvedInput in = resolve_input(cfg, backend);
    const BalloonRadii radii = in.radii ? *in.radii : radii_from_edges(*in.edges, tol);
    const SimplexMetrics m = compute_metrics(radii, {true, true, tol});
    if (cfg.format == "csv") {
        out << io::metrics_csv(radii, m);
    } else {
        emit(out, io::metrics_document(radii, m));
    }
    return kOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
    const Backend backend = parse_backend(cfg.backend);
    const Tolerance tol{cfg.tolerance, 1e-12};
    ResolvedInput in = resolve_input(cfg, backend);
    const EdgeLengthMatrix edges = in.edges ? *in.edges : edges_from_radii(*in.radii);
    const io::ValidationResult result = io::validate_edges(edges, tol);
    if (cfg.format == "csv") {
        out << io::validation_csv(result);
    } else {
        emit(out, io::validation_document(result));
    }
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const DimensionRange range = parse_dimension_range(cfg.n.empty() ? "2..8" : cfg.n);
    CampaignConfig campaign;
    campaign.n_min = range.min;
    campaign.n_max = range.max;
    campaign.count = cfg.count;
    campaign.seed = cfg.seed;
    campaign.profile = parse_profile(cfg.profile);
    campaign.backend = parse_backend(cfg.backend);
    campaign.workers = cfg.workers;
    campaign.oracles = !cfg.no_oracles;
    campaign.tolerance = Tolerance{cfg.tolerance, 1e-12};

    const CampaignSummary summary = run_campaign(campaign);
    if (cfg.format == "csv") {
        out << io::campaign_csv(summary);
    } else {
        emit(out, io::campaign_document(summary));
    }
    return summary.total_violations() == 0 ? kOk : kViolation;
}

template <typename F>
std::int64_t median_ns(std::size_t repetitions, F&& f) {
    std::vector<std::int64_t> samples;
    samples.reserve(repetitions);
    for (std::size_t r = 0; r < repetitions; ++r) {
        const auto start = std::chrono::steady_clock::now();
        f();
        const auto stop = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    }
    std::nth_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2),
                     samples.end());
    return samples[samples.size() / 2];
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
    const DimensionRange range = parse_dimension_range(cfg.n.empty() ? "2..8" : cfg.n);
    const Backend backend = parse_backend(cfg.backend);
    struct Row {
        int n;
        std::string route;
        std::int64_t median;
        std::size_t max_bits;
        std::string value;
    };
    std::vector<Row> rows;
    for (int n = range.min; n <= range.max; ++n) {
        const BalloonRadii radii =
            random_radii(n, instance_seed(cfg.seed, n, 0), Profile::uniform, backend).radii;

        Scalar closed;
        std::size_t closed_bits = 0;
        const auto closed_ns = median_ns(cfg.repetitions, [&] {
            const SymmetricSums s = symmetric_sums(radii);
            closed = det_D_closed(radii, s);
            closed_bits = 0;
            for (const Scalar* v : std::initializer_list<const Scalar*>{&s.M, &s.N, &s.P, &s.Q, &s.X1, &s.X2, &s.X3, &closed}) {
                closed_bits = std::max(closed_bits, v->bit_length());
            }
        });

        Scalar eliminated;
        DeterminantStats stats;
        const auto elim_ns = median_ns(cfg.repetitions, [&] { eliminated = determinant(build_D(radii), &stats); });

        if (!approx_equal(closed, eliminated, {cfg.tolerance, 1e-12})) {
            throw Error("closed and eliminated determinants of D disagree at n=" + std::to_string(n) + ": " +
                        closed.to_string() + " vs " + eliminated.to_string());
        }
        rows.push_back({n, "closed", closed_ns, closed_bits, closed.to_string()});
        rows.push_back({n, backend == Backend::exact ? "bareiss" : "lu", elim_ns, stats.max_bits,
                        eliminated.to_string()});
    }

    if (cfg.format == "json") {
        json doc = json::array();
        for (const Row& r : rows) {
            doc.push_back({{"n", r.n}, {"route", r.route}, {"median_ns", r.median}, {"max_bits", r.max_bits},
                           {"value", r.value}});
        }
        emit(out, doc);
    } else {
        out << "n,route,median_ns,max_bits,value\n";
        for (const Row& r : rows) {
            out << r.n << ',' << r.route << ',' << r.median << ',' << r.max_bits << ',' << r.value << '\n';
        }
    }
    return kOk;
}

json diagnostic(std::string_view kind, const std::string& message) {
    return {{"error", std::string(kind)}, {"message", message}};
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--backend", cfg.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--tolerance", cfg.tolerance, "relative tolerance for the float backend")
        ->check(CLI::PositiveNumber);
}

void add_inputs(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--radii", cfg.radii, "comma-separated balloon radii, e.g. 1,2,3 or 1/10,1,1,1");
    sub->add_option("--edges", cfg.edges_path, "JSON file holding an edge matrix");
    sub->add_option("--input", cfg.input_path, "JSON document {\"n\", \"radii\"} or {\"n\", \"edges\"}");
    sub->add_flag("--random", cfg.random, "generate radii from --n/--seed/--profile");
    sub->add_option("--n", cfg.n, "dimension");
    sub->add_option("--seed", cfg.seed, "generator seed");
    sub->add_option("--profile", cfg.profile, "uniform, log-uniform or near-boundary");
}

}  // namespace

DimensionRange parse_dimension_range(std::string_view text) {
    auto to_int = [&](std::string_view part) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size()) {
            throw ParseError("malformed dimension range '" + std::string(text) + "'");
        }
        return v;
    };
    DimensionRange r;
    if (auto dots = text.find(".."); dots != std::string_view::npos) {
        r.min = to_int(text.substr(0, dots));
        r.max = to_int(text.substr(dots + 2));
    } else {
        r.min = r.max = to_int(text);
    }
    if (r.min < 2 || r.max < r.min) {
        throw ParseError("dimension range '" + std::string(text) + "' must satisfy 2 <= min <= max");
    }
    return r;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("EDGETANGENT_SEED"); env != nullptr && *env != '\0') {
        std::uint64_t v = 0;
        const std::string_view text(env);
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            throw ParseError("EDGETANGENT_SEED='" + std::string(text) + "' is not an unsigned 64-bit integer");
        }
        return v;
    }
    return 42;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg.seed = default_seed();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kMalformedInput;
    }
    cfg.workers = std::max(1U, std::thread::hardware_concurrency());

    CLI::App app{"Metric invariants and inequality checks for edge-tangent simplices", "edgetangent"};
    app.require_subcommand(1);

    auto* metrics = app.add_subcommand("metrics", "compute every metric along every route");
    add_common(metrics, cfg);
    add_inputs(metrics, cfg);

    auto* validate = app.add_subcommand("validate", "check circumscriptibility and realizability of an edge set");
    add_common(validate, cfg);
    add_inputs(validate, cfg);

    auto* verify = app.add_subcommand("verify", "randomized inequality-chain campaign");
    add_common(verify, cfg);
    verify->add_option("--n", cfg.n, "dimension or range, e.g. 3 or 2..8");
    verify->add_option("--count", cfg.count, "instances per dimension")->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg.seed, "campaign seed");
    verify->add_option("--profile", cfg.profile, "uniform, log-uniform or near-boundary");
    verify->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--no-oracles", cfg.no_oracles, "skip determinant routes and the embedding oracle");

    auto* bench = app.add_subcommand("bench", "time the closed |D| formula against elimination");
    add_common(bench, cfg);
    bench->add_option("--n", cfg.n, "dimension or range");
    bench->add_option("--repetitions", cfg.repetitions, "timed repetitions per route")->check(CLI::PositiveNumber);
    bench->add_option("--seed", cfg.seed, "seed for the benchmarked radii");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kMalformedInput;
    }
    if (bench->parsed() && bench->count("--format") == 0) {
        cfg.format = "csv";
    }

    try {
        if (metrics->parsed()) return cmd_metrics(cfg, out);
        if (validate->parsed()) return cmd_validate(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        return cmd_bench(cfg, out);
    } catch (const NotCircumscriptible& e) {
        json d = diagnostic("NotCircumscriptible", e.what());
        d["edge"] = {e.row(), e.col()};
        emit(out, d);
        err << "error: " << e.what() << '\n';
        return kDomainRejection;
    } catch (const NotRealizable& e) {
        json d = diagnostic("NotRealizable", e.what());
        d["margin"] = e.margin();
        emit(out, d);
        err << "error: " << e.what() << '\n';
        return kDomainRejection;
    } catch (const DegenerateSimplex& e) {
        emit(out, diagnostic("DegenerateSimplex", e.what()));
        err << "error: " << e.what() << '\n';
        return kDomainRejection;
    } catch (const DegenerateBorder& e) {
        emit(out, diagnostic("DegenerateBorder", e.what()));
        err << "error: " << e.what() << '\n';
        return kDomainRejection;
    } catch (const SamplingBudgetExhausted& e) {
        err << "error: " << e.what() << '\n';
        return kResourceExhausted;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kMalformedInput;
    } catch (const InvalidRadii& e) {
        err << "error: " << e.what() << '\n';
        return kMalformedInput;
    } catch (const InvalidEdges& e) {
        err << "error: " << e.what() << '\n';
        return kMalformedInput;
    } catch (const OrderMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kMalformedInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kMalformedInput;
    }
}

}  // namespace edgetangent::cli
