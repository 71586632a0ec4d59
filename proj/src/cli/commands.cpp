#include "okb/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <vector>

#include "json.hpp"
#include "okb/convex.hpp"
#include "okb/elliptic.hpp"
#include "okb/errors.hpp"
#include "okb/okounkov.hpp"
#include "okb/varieties.hpp"

namespace okb::cli {

namespace {

void validate(const RunConfig& cfg) {
    if (cfg.c < 1) throw InvalidArgument("--c must be at least 1");
    if (cfg.max_level < 1) throw InvalidArgument("--max-level must be at least 1");
    if (cfg.kind != "powers" && cfg.kind != "complete" && cfg.kind != "both") {
        throw InvalidArgument("--kind must be powers, complete or both");
    }
}

std::vector<SystemKind> kinds_of(const RunConfig& cfg) {
    if (cfg.kind == "both") return {SystemKind::Powers, SystemKind::Complete};
    return {parse_kind(cfg.kind)};
}

CaseStudy load_case(const RunConfig& cfg) {
    if (cfg.fixture) {
        CaseStudy cs = load_case_fixture(*cfg.fixture);
        cs.c = static_cast<unsigned>(cfg.c);
        return cs;
    }
    return make_case(cfg.case_name, static_cast<unsigned>(cfg.c));
}

/// Fixtures must pass verify_flag before anything is computed on them.
bool guard_fixture(const RunConfig& cfg, const CaseStudy& cs, std::ostream& out) {
    if (!cfg.fixture) return true;
    const FlagReport report = verify_flag(cs);
    if (report.passed()) return true;
    out << "flag verification failed for fixture '" << cs.name << "'; refusing to continue\n";
    for (const auto& c : report.checks) {
        if (!c.passed) out << "  FAIL " << c.name << ": " << c.detail << "\n";
    }
    return false;
}

std::string render_vertices(const RationalPolytope& p) {
    std::string s;
    for (const auto& v : p.vertices()) {
        if (!s.empty()) s += " ";
        s += "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += v[i].to_string();
        }
        s += ")";
    }
    return s;
}

std::string render_vector(const ValuationVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::filesystem::path output_file(const RunConfig& cfg, const CaseStudy& cs, const std::string& suffix) {
    std::filesystem::path dir(cfg.out);
    std::filesystem::create_directories(dir);
    return dir / (cs.name + "_c" + std::to_string(cs.c) + "_" + suffix + ".json");
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write '" + path.string() + "'");
    f << text << "\n";
}

struct KindRun {
    SystemKind kind;
    OkounkovSemigroup gamma;
    RationalPolytope body;
};

std::vector<KindRun> run_kinds(const CaseStudy& cs, const std::vector<SystemKind>& kinds, unsigned M) {
    const FlagValuation val(cs.flag);
    std::vector<KindRun> runs;
    for (SystemKind k : kinds) {
        OkounkovSemigroup gamma = semigroup(GradedSystem(cs, k), val, M);
        RationalPolytope body = body_estimate(gamma);
        runs.push_back({k, std::move(gamma), std::move(body)});
    }
    return runs;
}

/// Every enumerated value/level inside the predicted simplex.
bool within(const OkounkovSemigroup& gamma, const RationalPolytope& simplex) {
    const HRepresentation h = h_representation(simplex);
    for (const auto& gp : gamma.points()) {
        RatPoint x = to_rat_point(gp.value);
        for (auto& xi : x) xi = xi / Rat(static_cast<long>(gp.level));
        if (!contains(h, x)) return false;
    }
    return true;
}

struct Certification {
    bool vertex_criterion = false;
    bool outer_bound = false;
    std::optional<unsigned> generation_degree;
    bool certified() const { return vertex_criterion && outer_bound; }
};

Certification certify_run(const KindRun& run, const RationalPolytope& predicted) {
    Certification c;
    c.vertex_criterion = vertex_criterion(predicted, run.gamma.levels.at(1));
    c.outer_bound = within(run.gamma, predicted);
    c.generation_degree = generation_degree(run.gamma, run.gamma.max_level);
    return c;
}

std::string render_degree(const std::optional<unsigned>& k) { return k ? std::to_string(*k) : "not found"; }

}  // namespace

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    const CaseStudy cs = load_case(cfg);
    if (!guard_fixture(cfg, cs, out)) return kRejected;
    const unsigned M = static_cast<unsigned>(cfg.max_level);
    const RationalPolytope predicted = theorem_simplex(cs.n, cs.c, cs.d);
    bool all_equal = true;
    for (const auto& run : run_kinds(cs, kinds_of(cfg), M)) {
        const std::string kind = kind_name(run.kind);
        const auto sg_path = output_file(cfg, cs, kind + "_semigroup");
        const auto body_path = output_file(cfg, cs, kind + "_body");
        write_file(sg_path, semigroup_to_json(run.gamma));
        write_file(body_path, polytope_to_json(run.body));
        const bool equal = polytope_equal(run.body, predicted);
        all_equal = all_equal && equal;
        out << cs.name << " c=" << cs.c << " M=" << M << " kind=" << kind << "\n";
        for (const auto& [m, values] : run.gamma.levels) {
            out << "  level " << m << ": " << values.size() << " values";
            if (cfg.verbose) {
                out << " {";
                bool first = true;
                for (const auto& v : values) {
                    out << (first ? "" : " ") << render_vector(v);
                    first = false;
                }
                out << "}";
            }
            out << "\n";
        }
        out << "  body estimate:    " << render_vertices(run.body) << "\n";
        out << "  theorem simplex:  " << render_vertices(predicted) << "\n";
        out << "  " << (equal ? "EQUAL" : "MISMATCH") << " (exact vertex comparison)\n";
        out << "  wrote " << sg_path.string() << ", " << body_path.string() << "\n";
    }
    return all_equal ? kOk : kRejected;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    const CaseStudy cs = load_case(cfg);
    if (!guard_fixture(cfg, cs, out)) return kRejected;
    const unsigned M = static_cast<unsigned>(cfg.max_level);
    const RationalPolytope predicted = theorem_simplex(cs.n, cs.c, cs.d);
    const auto runs = run_kinds(cs, kinds_of(cfg), M);
    bool all = true;
    for (const auto& run : runs) {
        const Certification c = certify_run(run, predicted);
        all = all && c.certified();
        out << cs.name << " c=" << cs.c << " M=" << M << " kind=" << kind_name(run.kind) << "\n";
        out << "  level-1 values: " << run.gamma.levels.at(1).size() << "\n";
        out << "  simplex vertices in level-1 values: " << (c.vertex_criterion ? "yes" : "no") << "\n";
        out << "  enumerated points inside simplex: " << (c.outer_bound ? "yes" : "no") << "\n";
        out << "  " << (c.certified() ? "CERTIFIED finitely generated (vertex criterion)" : "NOT CERTIFIED") << "\n";
        out << "  empirical generation degree k = " << render_degree(c.generation_degree) << " (levels <= " << M
            << ")\n";
    }
    if (runs.size() == 2) {
        const bool same = runs[0].gamma.levels == runs[1].gamma.levels;
        out << "value sets identical across kinds: " << (same ? "yes" : "no") << "\n";
        all = all && same;
    }
    return all ? kOk : kRejected;
}

int cmd_verify_flag(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    const CaseStudy cs = load_case(cfg);
    const FlagReport report = verify_flag(cs);
    out << "flag of " << cs.name << " (n=" << cs.n << ", d=" << cs.d << ")\n";
    for (const auto& c : report.checks) {
        out << "  " << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    }
    out << (report.passed() ? "flag verified" : "flag rejected") << "\n";
    return report.passed() ? kOk : kRejected;
}

int cmd_lemma_ec(const RunConfig& cfg, std::ostream& out) {
    if (cfg.d < 1) throw InvalidArgument("--d must be at least 1");
    if (cfg.samples < 0) throw InvalidArgument("--samples must be nonnegative");
    const EllipticCurveFp E(cfg.p, cfg.a, cfg.b);
    const auto count = static_cast<std::int64_t>(E.order());
    const std::int64_t trace = count - (E.p() + 1);
    const bool hasse = static_cast<double>(trace * trace) <= 4.0 * static_cast<double>(E.p());
    out << "E: y^2 = x^3 + " << E.a() << "*x + " << E.b() << " over F_" << E.p() << "\n";
    out << "  #E(F_p) = " << count << " (Hasse bound " << (hasse ? "holds" : "VIOLATED") << ")\n";

    const LemmaSweep sweep =
        lemma_sweep(E, static_cast<unsigned>(cfg.d), static_cast<unsigned>(cfg.samples), cfg.seed);
    if (cfg.verbose) {
        for (const auto& s : sweep.details) {
            out << "  D =";
            for (const auto& t : s.divisor) out << " " << t.point.to_string();
            out << "  sigma = " << s.sigma.to_string() << "  P = "
                << (s.witness ? s.witness->to_string() : std::string("no F_p-witness")) << "\n";
        }
    }
    out << "  d = " << sweep.d << ", samples = " << sweep.samples << "\n";
    out << "  witnesses: " << sweep.witnesses << " (verified d*P = sigma(D): " << sweep.verified << ")\n";
    out << "  no F_p-witness: " << sweep.no_witness << "\n";
    return hasse && sweep.verified == sweep.witnesses ? kOk : kRejected;
}

int cmd_export_toric(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    const CaseStudy cs = load_case(cfg);
    if (!guard_fixture(cfg, cs, out)) return kRejected;
    const auto runs = run_kinds(cs, kinds_of(cfg), static_cast<unsigned>(cfg.max_level));
    const RationalPolytope& body = runs.front().body;
    for (const auto& run : runs) {
        if (!polytope_equal(run.body, body)) {
            out << "bodies differ between kinds; refusing to export\n";
            return kRejected;
        }
    }
    const auto rays = normal_fan_rays(body);
    nlohmann::ordered_json j;
    j["case"] = cs.name;
    j["c"] = cs.c;
    j["M"] = cfg.max_level;
    j["polytope"] = nlohmann::ordered_json::parse(polytope_to_json(body));
    j["rays"] = rays;
    const auto path = output_file(cfg, cs, "toric");
    write_file(path, j.dump(2));
    out << cs.name << " c=" << cs.c << " body " << render_vertices(body) << "\n";
    out << "  normal fan rays:";
    for (const auto& r : rays) {
        out << " (";
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
        out << ")";
    }
    out << "\n  wrote " << path.string() << "\n";
    return kOk;
}

int cmd_demo(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    const unsigned M = static_cast<unsigned>(cfg.max_level);
    bool all = true;
    out << "case | n | r | c | d | predicted simplex | computed body | certified | generation degree\n";
    for (const auto& name : case_names()) {
        const auto start = std::chrono::steady_clock::now();
        const CaseStudy cs = make_case(name, static_cast<unsigned>(cfg.c));
        const RationalPolytope predicted = theorem_simplex(cs.n, cs.c, cs.d);
        const auto runs = run_kinds(cs, kinds_of(cfg), M);
        bool certified = true;
        bool equal = true;
        std::optional<unsigned> degree = 0;
        for (const auto& run : runs) {
            const Certification c = certify_run(run, predicted);
            certified = certified && c.certified();
            equal = equal && polytope_equal(run.body, predicted);
            if (!c.generation_degree || !degree) {
                degree.reset();
            } else {
                degree = std::max(*degree, *c.generation_degree);
            }
        }
        all = all && certified && equal;
        out << cs.name << " | " << cs.n << " | " << cs.r << " | " << cs.c << " | " << cs.d << " | "
            << render_vertices(predicted) << " | " << render_vertices(runs.front().body) << " | "
            << (certified ? "yes" : "no") << " | " << render_degree(degree) << "\n";
        if (cfg.verbose) {
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            out << "  (" << secs << " s, M = " << M << ")\n";
        }
    }
    return all ? kOk : kRejected;
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "compute") return cmd_compute(cfg, out);
        if (cfg.command == "certify") return cmd_certify(cfg, out);
        if (cfg.command == "verify-flag") return cmd_verify_flag(cfg, out);
        if (cfg.command == "lemma-ec") return cmd_lemma_ec(cfg, out);
        if (cfg.command == "export-toric") return cmd_export_toric(cfg, out);
        if (cfg.command == "demo") return cmd_demo(cfg, out);
        err << "error: unknown command '" << cfg.command << "'\n";
        return kUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "computation failed: " << e.what() << "\n";
        return kComputational;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace okb::cli
