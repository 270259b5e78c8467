#include "orbitcodes/commands.hpp"

#include <stdexcept>

#include "orbitcodes/error.hpp"
#include "orbitcodes/io.hpp"
#include "orbitcodes/pluecker.hpp"

namespace orbitcodes {

using ordered_json = nlohmann::ordered_json;

namespace {

fq_t field_size(const RunConfig& c) {
    if (c.q > 0xFFFFFFFFu || !is_prime(c.q)) throw InvalidArgument("--q must be prime; got " + std::to_string(c.q));
    return static_cast<fq_t>(c.q);
}

PolyFq parse_polynomial(const RunConfig& c) {
    if (c.polynomial.empty()) throw InvalidArgument("--poly is required for '" + c.subcommand + "'");
    const PolyFq p = PolyFq::parse(c.polynomial, field_size(c));
    if (p.degree() < 1) throw InvalidArgument("--poly must have degree >= 1");
    if (c.n && static_cast<std::size_t>(p.degree()) != *c.n)
        throw InvalidArgument("--poly has degree " + std::to_string(p.degree()) + " but --n is " + std::to_string(*c.n));
    return p;
}

// Irreducibility failures are mathematical, not usage errors.
ExtField make_field(const PolyFq& p, const RunConfig& c) {
    if (p[0] == 0 || !is_irreducible(p)) throw PreconditionError("polynomial " + p.to_string() + " is not irreducible with p(0) != 0");
    return ExtField(p, c.log_table_cap);
}

Subspace parse_subspace(const std::string& text, const RunConfig& c, std::size_t n, const char* what) {
    const MatFq rows = parse_rows(text, field_size(c));
    if (rows.cols() != n)
        throw InvalidArgument(std::string(what) + " have length " + std::to_string(rows.cols()) + " but n is " + std::to_string(n));
    const std::size_t r = rank(rows);
    if (r == 0) throw InvalidArgument(std::string(what) + " span the zero space (rank 0)");
    if (c.k && r != *c.k)
        throw InvalidArgument(std::string(what) + " have rank " + std::to_string(r) + " but --k is " + std::to_string(*c.k));
    return subspace_from_rows(rows);
}

ordered_json rows_json(const Subspace& s) { return matrix_row_strings(s.basis()); }

ordered_json multiset_json(const DifferenceMultiset& d) {
    ordered_json mult = ordered_json::object();
    for (const auto& [residue, count] : d.counts) mult[std::to_string(residue)] = count;
    return ordered_json{{"modulus", d.modulus},
                        {"total", d.total()},
                        {"distinct_residues", d.counts.size()},
                        {"max_multiplicity", d.max_multiplicity()},
                        {"multiplicities", std::move(mult)}};
}

ordered_json predictor_json(const PredictedParams& p, const OrbitCode& oracle) {
    ordered_json j{{"cardinality", p.cardinality}, {"min_distance", p.min_distance}, {"d", p.d}, {"degenerate", p.degenerate}};
    if (p.degenerate) {
        j["reduced_d"] = *p.reduced_d;
        j["least_full_difference"] = *p.least_full_difference;
        // The alternative "m - 1" reading of the cardinality, kept visible.
        j["cardinality_m_minus_one"] = *p.cardinality_m_minus_one;
        j["m_minus_one_matches_oracle"] = *p.cardinality_m_minus_one == oracle.cardinality();
    }
    j["all_distinct_orbits"] = p.all_distinct_orbits;
    j["differences"] = multiset_json(p.differences);
    return j;
}

bool predictor_agrees(const PredictedParams& p, const OrbitCode& oracle) {
    if (p.cardinality != oracle.cardinality()) return false;
    return !oracle.min_distance || *oracle.min_distance == p.min_distance;
}

ordered_json optional_int(const std::optional<int>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

}  // namespace

ordered_json orbit_code_json(const OrbitCode& code, const PolyFq& generator_polynomial) {
    ordered_json words = ordered_json::array();
    for (const Subspace& w : code.codewords) words.push_back(rows_json(w));
    return ordered_json{{"q", code.starting_point.q()},
                        {"n", code.starting_point.n()},
                        {"k", code.starting_point.k()},
                        {"generator_polynomial", generator_polynomial.to_string()},
                        {"generator_order", code.generator_order},
                        {"starting_point", rows_json(code.starting_point)},
                        {"period", code.period},
                        {"cardinality", code.cardinality()},
                        {"min_distance", optional_int(code.min_distance)},
                        {"codewords", std::move(words)}};
}

ordered_json cmd_spread(const RunConfig& c) {
    const fq_t q = field_size(c);
    if (!c.k) throw InvalidArgument("--k is required for 'spread'");
    const PolyFq p = parse_polynomial(c);
    const auto n = static_cast<std::size_t>(p.degree());
    const std::size_t k = *c.k;
    if (k == 0 || k > n || n % k != 0)
        throw InvalidArgument("spread codes need k | n; got k = " + std::to_string(k) + ", n = " + std::to_string(n));
    const ExtField field = make_field(p, c);

    const OrbitCode code = build_spread_code(field, k);
    const std::uint64_t formula_card = (field.size() - 1) / (checked_power(q, static_cast<unsigned>(k)) - 1);
    const int formula_dist = 2 * static_cast<int>(k);
    const PredictedParams pred = predict_params_primitive(code.starting_point, field);

    ordered_json report{{"command", "spread"}};
    report.update(orbit_code_json(code, field.modulus()));
    report["primitive"] = field.is_primitive();
    report["min_distance_pairwise"] = optional_int(code.cardinality() >= 2 ? std::optional<int>(min_distance_pairwise(code)) : std::nullopt);
    report["formula"] = ordered_json{{"cardinality", formula_card}, {"min_distance", formula_dist}};
    report["predictor"] = predictor_json(pred, code);
    report["agreement"] = code.cardinality() == formula_card && code.min_distance == formula_dist && predictor_agrees(pred, code);
    return report;
}

ordered_json cmd_analyze(const RunConfig& c) {
    if (!c.rows) throw InvalidArgument("--rows is required for 'analyze'");
    const PolyFq p = parse_polynomial(c);
    const auto n = static_cast<std::size_t>(p.degree());
    const Subspace u = parse_subspace(*c.rows, c, n, "--rows");
    const ExtField field = make_field(p, c);

    const OrbitCode code = enumerate_orbit(u, companion_matrix(field.modulus()));
    const PredictedParams pred = predict_params(u, field);

    ordered_json report{{"command", "analyze"}};
    report.update(orbit_code_json(code, field.modulus()));
    report["primitive"] = field.is_primitive();
    report["min_distance_pairwise"] = optional_int(code.cardinality() >= 2 ? std::optional<int>(min_distance_pairwise(code)) : std::nullopt);
    report["predictor"] = predictor_json(pred, code);
    report["agreement"] = predictor_agrees(pred, code);
    return report;
}

ordered_json cmd_pluecker(const RunConfig& c) {
    if (!c.rows) throw InvalidArgument("--rows is required for 'pluecker'");
    const PolyFq p = parse_polynomial(c);
    const auto n = static_cast<std::size_t>(p.degree());
    const Subspace u = parse_subspace(*c.rows, c, n, "--rows");
    const ExtField field = make_field(p, c);

    const PlueckerPoint start = pluecker_embed(u);
    const std::vector<PlueckerPoint> orbit = pluecker_orbit(u, field);
    const OrbitCode code = enumerate_orbit(u, companion_matrix(field.modulus()));

    ordered_json wedge = ordered_json::array();
    ordered_json matrix_side = ordered_json::array();
    bool square = orbit.size() == code.cardinality();
    for (std::size_t i = 0; i < code.cardinality(); ++i) {
        const PlueckerPoint embedded = pluecker_embed(code.codewords[i]);
        matrix_side.push_back(embedded.to_string());
        if (i < orbit.size() && !(orbit[i] == embedded)) square = false;
    }
    for (const PlueckerPoint& pt : orbit) wedge.push_back(pt.to_string());

    return ordered_json{{"command", "pluecker"},
                        {"q", u.q()},
                        {"n", u.n()},
                        {"k", u.k()},
                        {"generator_polynomial", field.modulus().to_string()},
                        {"starting_point", rows_json(u)},
                        {"indices", start.index_legend()},
                        {"pluecker", start.to_string()},
                        {"orbit_length", orbit.size()},
                        {"cardinality", code.cardinality()},
                        {"pluecker_orbit", std::move(wedge)},
                        {"embedded_codewords", std::move(matrix_side)},
                        {"commuting_square", square},
                        {"agreement", square}};
}

ordered_json cmd_ball(const RunConfig& c) {
    const fq_t q = field_size(c);
    if (!c.t) throw InvalidArgument("--t is required for 'ball'");
    std::optional<std::size_t> n = c.n;
    if (!n && c.rows) n = parse_rows(*c.rows, q).cols();
    if (!n && c.center) n = parse_rows(*c.center, q).cols();
    if (!n) throw InvalidArgument("'ball' needs --rows, --center or --n");

    std::optional<Subspace> center;
    if (c.center) center = parse_subspace(*c.center, c, *n, "--center");
    std::optional<Subspace> candidate;
    if (c.rows) candidate = parse_subspace(*c.rows, c, *n, "--rows");
    std::optional<std::size_t> k = c.k;
    if (!k && center) k = center->k();
    if (!k && candidate) k = candidate->k();
    if (!k) throw InvalidArgument("'ball' needs --k when neither --rows nor --center is given");
    if (*k == 0 || *k > *n) throw InvalidArgument("need 1 <= k <= n");
    if (!center) center = standard_subspace(q, *k, *n);
    if (candidate && candidate->k() != *k) throw InvalidArgument("center and candidate have different dimensions");
    const std::size_t t = *c.t;
    if (t > *k) throw InvalidArgument("--t must satisfy 0 <= t <= k");
    if (!candidate && !c.count) throw InvalidArgument("'ball' needs --rows or --count");

    ordered_json report{{"command", "ball"},     {"q", q}, {"n", *n}, {"k", *k}, {"t", t},
                        {"radius", 2 * t},       {"center", rows_json(*center)},
                        {"ball_index", ball_multi_index(*k, *n, t).to_string()}};
    bool agreement = true;
    if (candidate) {
        const BallVerdict v = ball_membership(*candidate, *center, t);
        const int distance = subspace_distance(*center, *candidate);
        const bool by_distance = distance <= 2 * static_cast<int>(t);
        report["candidate"] = rows_json(*candidate);
        report["distance"] = distance;
        report["intersection_dim"] = v.intersection_dim;
        report["member"] = v.member();
        report["member_by_intersection"] = v.by_intersection;
        report["member_by_pluecker"] = v.by_pluecker;
        report["member_by_distance"] = by_distance;
        report["violated_index"] = v.violated_index ? ordered_json(v.violated_index->to_string()) : ordered_json(nullptr);
        agreement = agreement && v.agree() && v.by_intersection == by_distance;
    }
    if (c.count) {
        std::uint64_t by_intersection = 0, by_pluecker = 0, by_distance = 0, total = 0;
        for (const Subspace& v : all_subspaces(q, *k, *n)) {
            const BallVerdict verdict = ball_membership(v, *center, t);
            by_intersection += verdict.by_intersection;
            by_pluecker += verdict.by_pluecker;
            by_distance += subspace_distance(*center, v) <= 2 * static_cast<int>(t);
            ++total;
        }
        report["grassmannian_size"] = total;
        report["ball_size_by_intersection"] = by_intersection;
        report["ball_size_by_pluecker"] = by_pluecker;
        report["ball_size_by_distance"] = by_distance;
        agreement = agreement && by_intersection == by_pluecker && by_pluecker == by_distance;
    }
    report["agreement"] = agreement;
    return report;
}

ordered_json cmd_design(const RunConfig& c) {
    if (!c.k) throw InvalidArgument("--k is required for 'design'");
    if (!c.target) throw InvalidArgument("--target is required for 'design'");
    const PolyFq p = parse_polynomial(c);
    const ExtField field = make_field(p, c);
    const DesignResult result = design_starting_point(field, *c.k, *c.target, DesignOptions{c.node_budget});

    ordered_json report{{"command", "design"},
                        {"q", field.q()},
                        {"n", field.n()},
                        {"k", *c.k},
                        {"generator_polynomial", field.modulus().to_string()},
                        {"target_distance", *c.target},
                        {"node_budget", c.node_budget},
                        {"nodes_explored", result.nodes_explored},
                        {"found", result.subspace.has_value()}};
    if (!result.subspace) {
        report["budget_exhausted"] = result.budget_exhausted;
        return report;
    }
    const PredictedParams pred = predict_params(*result.subspace, field);
    report["starting_point"] = rows_json(*result.subspace);
    report["cardinality"] = result.cardinality;
    report["min_distance"] = result.min_distance;
    report["predictor"] = ordered_json{{"cardinality", pred.cardinality}, {"min_distance", pred.min_distance}};
    report["agreement"] = pred.cardinality == result.cardinality && pred.min_distance == result.min_distance;
    return report;
}

namespace {

void render(const ordered_json& value, const std::string& indent, std::string& out) {
    for (const auto& [key, item] : value.items()) {
        if (item.is_object()) {
            out += indent + key + ":\n";
            render(item, indent + "  ", out);
        } else if (item.is_array() && !item.empty() && item.front().is_array()) {
            out += indent + key + ":\n";
            for (std::size_t i = 0; i < item.size(); ++i) {
                out += indent + "  [" + std::to_string(i) + "]";
                for (const auto& leaf : item[i]) out += ' ' + (leaf.is_string() ? leaf.get<std::string>() : leaf.dump());
                out += '\n';
            }
        } else if (item.is_array()) {
            out += indent + key + ":";
            for (const auto& leaf : item) out += ' ' + (leaf.is_string() ? leaf.get<std::string>() : leaf.dump());
            out += '\n';
        } else {
            out += indent + key + ": " + (item.is_string() ? item.get<std::string>() : item.dump()) + '\n';
        }
    }
}

}  // namespace

std::string render_text(const ordered_json& report) {
    std::string out;
    render(report, "", out);
    return out;
}

CommandResult run_command(const RunConfig& config) {
    CommandResult result;
    try {
        if (config.subcommand == "spread") {
            result.report = cmd_spread(config);
        } else if (config.subcommand == "analyze") {
            result.report = cmd_analyze(config);
        } else if (config.subcommand == "pluecker") {
            result.report = cmd_pluecker(config);
        } else if (config.subcommand == "ball") {
            result.report = cmd_ball(config);
        } else if (config.subcommand == "design") {
            result.report = cmd_design(config);
            if (!result.report.at("found").get<bool>()) result.exit_code = kExitNotFound;
        } else {
            throw InvalidArgument("unknown subcommand '" + config.subcommand + "'");
        }
    } catch (const InvalidArgument& e) {
        result.exit_code = kExitUsage;
        result.error = e.what();
    } catch (const PreconditionError& e) {
        result.exit_code = kExitPrecondition;
        result.error = e.what();
    } catch (const std::exception& e) {
        result.exit_code = kExitInternal;
        result.error = e.what();
    }
    if (!result.report.is_null()) {
        result.output = config.format == OutputFormat::json ? result.report.dump(2) + '\n' : render_text(result.report);
    }
    return result;
}

bool verify_orbit_report(const nlohmann::json& report) {
    const auto q = report.at("q").get<fq_t>();
    const PolyFq p = PolyFq::parse(report.at("generator_polynomial").get<std::string>(), q);
    std::string rows;
    for (const auto& r : report.at("starting_point")) rows += (rows.empty() ? "" : ",") + r.get<std::string>();
    const Subspace u = subspace_from_rows(parse_rows(rows, q));
    const OrbitCode code = enumerate_orbit(u, companion_matrix(p.monic()));

    if (report.at("period").get<std::uint64_t>() != code.period) return false;
    const auto& dist = report.at("min_distance");
    if (dist.is_null() != !code.min_distance) return false;
    if (code.min_distance && dist.get<int>() != *code.min_distance) return false;
    const auto& words = report.at("codewords");
    if (words.size() != code.codewords.size()) return false;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].get<std::vector<std::string>>() != matrix_row_strings(code.codewords[i].basis())) return false;
    }
    return true;
}

}  // namespace orbitcodes
