// qbruhat: graph export, QLS enumeration, degree tables and oracle runs.
//
// Exit codes: 0 success, 1 invalid path / verification failure / internal
// error, 2 bad input or refused size, 3 verification inconclusive (no failures).

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "qbruhat/affine_oracle.hpp"
#include "qbruhat/degree.hpp"
#include "qbruhat/io.hpp"
#include "qbruhat/problem.hpp"

namespace {

using namespace qbruhat;

constexpr int kOk = 0, kFail = 1, kBadInput = 2, kInconclusive = 3;

struct Config {
    std::string type;
    std::string lambda;
    std::optional<std::string> parabolic;
    std::string format;
    std::optional<Int> window;
    std::size_t cap = 1'000'000;
    std::optional<std::string> path;
    std::string variant = "hat";
};

struct Outcome {
    int code = kOk;
    std::string out;
};

std::string pick_format(const Config& c, std::initializer_list<const char*> allowed) {
    if (c.format.empty()) return *allowed.begin();
    for (const char* f : allowed)
        if (c.format == f) return c.format;
    std::string names;
    for (const char* f : allowed) names += (names.empty() ? "" : "|") + std::string(f);
    throw InvalidInput("--format must be one of " + names + " for this command");
}

std::unique_ptr<Problem> make_problem(const Config& c, bool allow_subset) {
    const auto rank = FiniteType::parse(c.type).rank;
    std::optional<NodeMask> J;
    if (c.parabolic) J = io::parse_nodes(*c.parabolic, rank);
    auto p = std::make_unique<Problem>(c.type, io::parse_multiplicities(c.lambda), J);
    if (!allow_subset && !p->default_parabolic())
        throw InvalidInput("QLS paths require J = " + format_nodes(p->shape.parabolic, rank) +
                           "; --parabolic may only restate it for this command");
    return p;
}

EnumerationOptions enum_options(const Config& c) {
    EnumerationOptions o;
    o.cap = c.cap;
    return o;
}

Outcome cmd_qbg(const Config& c) {
    auto p = make_problem(c, true);
    const auto fmt = pick_format(c, {"dot", "json"});
    std::ostringstream os;
    if (fmt == "dot")
        write_dot(os, p->g, p->shape.classical);
    else
        os << io::graph_json(p->g, p->shape).dump(2) << '\n';
    return {kOk, os.str()};
}

Outcome cmd_qls(const Config& c) {
    auto p = make_problem(c, false);
    const auto fmt = pick_format(c, {"text", "json"});
    Variant variant;
    if (c.variant == "hat")
        variant = Variant::Hat;
    else if (c.variant == "tilde")
        variant = Variant::Tilde;
    else
        throw InvalidInput("--variant must be hat or tilde");
    const auto paths = enumerate_qls(p->shape, p->g, variant, enum_options(c));
    std::ostringstream os;
    if (fmt == "json") {
        os << io::paths_json(paths, p->g, p->shape, variant).dump(2) << '\n';
    } else {
        for (const auto& eta : paths) os << io::format_path_literal(eta, p->g) << '\n';
    }
    return {kOk, os.str()};
}

Outcome cmd_degree(const Config& c) {
    auto p = make_problem(c, false);
    const auto fmt = pick_format(c, {"csv", "json"});
    std::vector<QLSPath> paths;
    if (c.path) {
        QLSPath eta = io::parse_path(*c.path, p->g);
        if (auto k = first_invalid_segment(eta, p->shape, p->g, Variant::Hat)) {
            std::ostringstream err;
            err << "not a quantum LS path: no shortest " << eta.times[k].str() << "-admissible path from "
                << format_word(p->group, p->g.element(eta.dirs[k])) << " to "
                << format_word(p->group, p->g.element(eta.dirs[k - 1])) << " (segment " << k << ")\n";
            std::cerr << err.str();
            return {kFail, ""};
        }
        paths.push_back(std::move(eta));
    } else {
        paths = enumerate_hat(p->shape, p->g, enum_options(c));
    }
    EnergyCache cache(p->g, p->shape.classical);
    const auto rows = degree_table(paths, cache);
    std::ostringstream os;
    if (fmt == "json")
        os << io::degree_json(rows, p->g, p->shape).dump(2) << '\n';
    else
        io::write_degree_csv(os, rows, p->g);
    return {kOk, os.str()};
}

Outcome cmd_verify(const Config& c) {
    auto p = make_problem(c, false);
    const auto fmt = pick_format(c, {"text", "json"});
    if (c.window && *c.window < 0) throw InvalidInput("--window must be nonnegative");

    io::VerifyReport r;
    const auto hat = enumerate_hat(p->shape, p->g, enum_options(c));
    const auto tilde = enumerate_tilde(p->shape, p->g, enum_options(c));
    r.hat_count = hat.size();
    r.tilde_count = tilde.size();
    r.hat_equals_tilde = hat == tilde;

    EnergyCache cache(p->g, p->shape.classical);
    std::vector<AffineLSPath> lifts;
    Int top = 0;
    for (const auto& eta : hat) {
        lifts.push_back(lift(eta, cache));
        for (const auto& w : lifts.back().weights) top = std::max(top, w.delta);
    }
    // default: the smallest window holding every lift, but never below 5
    r.window = c.window.value_or(std::max<Int>(5, top));

    AffineOrbit orbit(p->cs, p->shape, r.window);
    r.covers = orbit.covers_to_edges(p->g);
    r.paths.resize(hat.size());
    parallel_for(hat.size(), [&](std::size_t i) {
        auto& pc = r.paths[i];
        pc.path = hat[i];
        pc.ls = orbit.verify_ls_path(lifts[i]);
        pc.degree = degree(hat[i], cache);
        pc.endpoint_delta = endpoint_delta(lifts[i]);
        pc.agree = pc.endpoint_delta == -pc.degree;
    });

    const std::size_t failures = r.failures(), inconclusive = r.inconclusive();
    const int code = failures ? kFail : (inconclusive ? kInconclusive : kOk);
    std::ostringstream os;
    if (fmt == "json") {
        os << io::verify_json(r, p->g, p->shape).dump(2) << '\n';
        return {code, os.str()};
    }
    std::size_t pass = 0, fail = 0, agree = 0;
    for (const auto& pc : r.paths) {
        pass += pc.ls.verdict == Verdict::Pass;
        fail += pc.ls.verdict == Verdict::Fail;
        agree += pc.agree;
    }
    os << "type " << p->rs.type().name() << ", lambda " << c.lambda << ", J "
       << format_nodes(p->cs.J(), p->rs.rank()) << ", window " << r.window << '\n';
    os << "covers_to_edges: " << r.covers.covers << " covers, " << r.covers.edges << " edges, "
       << r.covers.edge_checks << " edge checks, " << r.covers.skipped << " skipped, "
       << r.covers.mismatches.size() << " mismatches\n";
    for (const auto& m : r.covers.mismatches) os << "  mismatch: " << m << '\n';
    os << "hat = tilde: " << r.hat_count << " hat, " << r.tilde_count << " tilde, "
       << (r.hat_equals_tilde ? "equal" : "DIFFERENT") << '\n';
    os << "lift is LS: " << pass << " pass, " << fail << " fail, " << inconclusive << " inconclusive\n";
    os << "Deg = -endpoint delta: " << agree << " agree, " << r.paths.size() - agree << " disagree\n";
    for (const auto& pc : r.paths) {
        if (pc.ls.verdict == Verdict::Pass && pc.agree) continue;
        os << "  " << to_string(pc.ls.verdict) << ' ' << io::format_path_literal(pc.path, p->g);
        if (pc.ls.verdict != Verdict::Pass) os << " pair " << pc.ls.pair << ": " << pc.ls.reason;
        if (!pc.agree) os << " Deg " << pc.degree << " vs endpoint delta " << pc.endpoint_delta;
        os << '\n';
    }
    os << "status: " << (failures ? "fail" : (inconclusive ? "inconclusive" : "pass")) << '\n';
    return {code, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parabolic quantum Bruhat graphs, quantum LS paths and their degrees"};
    app.require_subcommand(1);
    app.fallthrough();

    Config c;
    app.add_option("--type", c.type, "Cartan type, e.g. A2, C3, G2")->required();
    app.add_option("--lambda", c.lambda, "multiplicities m_i of lambda = sum m_i w_i, e.g. 2,1")->required();
    app.add_option("--parabolic", c.parabolic, "explicit J as 1-based nodes (subset of {j : m_j = 0})");
    app.add_option("--format", c.format, "dot|json for qbg, text|json for qls and verify, csv|json for degree");
    app.add_option("--window", c.window, "delta window for verify");
    app.add_option("--cap", c.cap, "maximum number of enumerated paths")->check(CLI::PositiveNumber);

    auto* qbg = app.add_subcommand("qbg", "export the parabolic quantum Bruhat graph");
    auto* qls = app.add_subcommand("qls", "enumerate quantum LS paths");
    qls->add_option("--variant", c.variant, "hat (shortest paths) or tilde");
    auto* deg = app.add_subcommand("degree", "degree table, or one row with --path");
    deg->add_option("--path", c.path, "path literal \"w;w|0,s,1\" or JSON {\"dirs\":[...],\"times\":[...]}");
    auto* verify = app.add_subcommand("verify", "cross-check the degree formula against the affine oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        Outcome r;
        if (qbg->parsed())
            r = cmd_qbg(c);
        else if (qls->parsed())
            r = cmd_qls(c);
        else if (deg->parsed())
            r = cmd_degree(c);
        else if (verify->parsed())
            r = cmd_verify(c);
        std::cout << r.out << std::flush;
        return r.code;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kFail;
    }
}
