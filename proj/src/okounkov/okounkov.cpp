#include "okb/okounkov.hpp"

#include <algorithm>
#include <mutex>

#include "json.hpp"
#include "okb/errors.hpp"
#include "okb/linalg.hpp"

namespace okb {

std::string kind_name(SystemKind kind) { return kind == SystemKind::Powers ? "powers" : "complete"; }

SystemKind parse_kind(std::string_view name) {
    if (name == "powers") return SystemKind::Powers;
    if (name == "complete") return SystemKind::Complete;
    throw InvalidArgument("unknown system kind '" + std::string(name) + "'");
}

std::vector<Exponent> standard_monomials(const CaseStudy& cs, unsigned degree) {
    std::vector<Exponent> out;
    for (auto& e : graded_monomials(cs.ambient_vars(), degree)) {
        if (!cs.relation || !divisible_by_leading(e, *cs.relation)) out.push_back(std::move(e));
    }
    return out;
}

struct GradedSystem::Cache {
    std::mutex mutex;
    std::map<unsigned, std::vector<Section>> bases;
};

GradedSystem::GradedSystem(CaseStudy cs, SystemKind kind)
    : cs_(std::move(cs)), kind_(kind), cache_(std::make_shared<Cache>()) {
    if (cs_.c < 1) throw InvalidArgument("graded system: c must be at least 1");
}

const std::vector<Section>& GradedSystem::basis(unsigned m) const {
    if (m < 1) throw InvalidArgument("graded system: level must be at least 1");
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->bases.find(m);
        if (it != cache_->bases.end()) return it->second;
    }
    // Powers recurse into lower levels; build outside the lock.
    std::vector<Section> built = build(m);
    std::lock_guard lock(cache_->mutex);
    return cache_->bases.try_emplace(m, std::move(built)).first->second;
}

std::vector<Section> GradedSystem::build(unsigned m) const {
    const unsigned degree = m * cs_.c;
    const auto standard = standard_monomials(cs_, degree);
    std::vector<Section> out;
    if (kind_ == SystemKind::Complete || m == 1) {
        for (const auto& e : standard) out.push_back(HomogPoly::monomial(e));
        return out;
    }
    const auto& lower = basis(m - 1);
    const auto& first = basis(1);
    IndependenceFilter filter(standard.size());
    for (const auto& a : lower) {
        for (const auto& b : first) {
            Section prod = poly_mul(a, b);
            if (cs_.relation) prod = reduce_modulo(prod, *cs_.relation);
            if (prod.is_zero()) continue;
            if (filter.insert(coefficient_vector(prod, standard))) out.push_back(std::move(prod));
            // The span cannot exceed the graded piece.
            if (out.size() == standard.size()) return out;
        }
    }
    return out;
}

std::vector<Section> graded_system_basis(const CaseStudy& cs, SystemKind kind, unsigned m) {
    return GradedSystem(cs, kind).basis(m);
}

std::vector<TriangularElement> triangularize(std::vector<Section> basis, const FlagValuation& val) {
    const unsigned d = val.final_curve() ? val.final_curve()->degree() : 1;
    std::vector<TriangularElement> elems;
    elems.reserve(basis.size());
    auto evaluate = [&](const Section& s) {
        try {
            return val.evaluate(s);
        } catch (const ValuationUndefined&) {
            throw InvalidArgument("value_set: basis is linearly dependent modulo the relation");
        }
    };
    auto check_bound = [&](const TriangularElement& e) {
        const unsigned bound = e.section.degree() * d;
        for (unsigned v : e.result.value) {
            if (v > bound) throw InternalConsistency("value_set: valuation exceeds the degree bound");
        }
    };
    for (auto& s : basis) {
        Section r = val.reduce(s);
        FlagValuation::Result res = evaluate(r);
        elems.push_back({std::move(r), std::move(res)});
        check_bound(elems.back());
    }
    while (true) {
        std::map<ValuationVector, std::vector<std::size_t>> buckets;
        for (std::size_t i = 0; i < elems.size(); ++i) buckets[elems[i].result.value].push_back(i);
        auto clash = std::find_if(buckets.begin(), buckets.end(), [](const auto& kv) { return kv.second.size() > 1; });
        if (clash == buckets.end()) break;
        const TriangularElement& pivot = elems[clash->second[0]];
        TriangularElement& later = elems[clash->second[1]];
        const Rat ratio = later.result.leading_unit / pivot.result.leading_unit;
        Section next = val.reduce(later.section - ratio * pivot.section);
        if (next.is_zero()) throw InvalidArgument("value_set: basis is linearly dependent modulo the relation");
        FlagValuation::Result res = evaluate(next);
        if (!(later.result.value < res.value)) {
            throw InternalConsistency("value_set: cancellation did not raise the valuation");
        }
        later = {std::move(next), std::move(res)};
        check_bound(later);
    }
    return elems;
}

std::set<ValuationVector> value_set(const std::vector<Section>& basis, const FlagValuation& val) {
    std::set<ValuationVector> out;
    for (auto& e : triangularize(basis, val)) out.insert(std::move(e.result.value));
    return out;
}

std::set<ValuationVector> value_set(const std::vector<Section>& basis, const Flag& flag) {
    return value_set(basis, FlagValuation(flag));
}

std::vector<GradedPoint> OkounkovSemigroup::points() const {
    std::vector<GradedPoint> out;
    for (const auto& [m, values] : levels) {
        for (const auto& v : values) out.push_back({v, m});
    }
    return out;
}

OkounkovSemigroup semigroup(const GradedSystem& system, const FlagValuation& val, unsigned M) {
    if (M < 1) throw InvalidArgument("semigroup: M must be at least 1");
    OkounkovSemigroup gamma;
    gamma.kind = system.kind();
    gamma.max_level = M;
    gamma.n = val.dimension();
    for (unsigned m = 1; m <= M; ++m) gamma.levels[m] = value_set(system.basis(m), val);
    return gamma;
}

OkounkovSemigroup semigroup(const CaseStudy& cs, SystemKind kind, unsigned M) {
    return semigroup(GradedSystem(cs, kind), FlagValuation(cs.flag), M);
}

RationalPolytope body_estimate(const OkounkovSemigroup& gamma) {
    const auto pts = gamma.points();
    return cone_slice(pts);
}

bool vertex_criterion(const RationalPolytope& candidate, const std::set<ValuationVector>& level1) {
    for (const auto& v : candidate.vertices()) {
        ValuationVector iv;
        for (const auto& x : v) {
            if (!x.is_integer() || x.sign() < 0) return false;
            iv.push_back(static_cast<unsigned>(x.numerator().get_ui()));
        }
        if (!level1.contains(iv)) return false;
    }
    return true;
}

namespace {

ValuationVector add(const ValuationVector& a, const ValuationVector& b) {
    ValuationVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

bool generated_in_degree(const OkounkovSemigroup& gamma, unsigned k) {
    // reach[m]: level-m points that are sums of points of levels <= k.
    std::map<unsigned, std::set<ValuationVector>> reach;
    for (const auto& [m, values] : gamma.levels) {
        if (m <= k) {
            reach[m] = values;
            continue;
        }
        std::set<ValuationVector> got;
        for (unsigned j = 1; j <= k && j < m; ++j) {
            auto gen = gamma.levels.find(j);
            auto rest = reach.find(m - j);
            if (gen == gamma.levels.end() || rest == reach.end()) continue;
            for (const auto& g : gen->second) {
                for (const auto& r : rest->second) {
                    auto s = add(g, r);
                    if (values.contains(s)) got.insert(std::move(s));
                }
            }
        }
        if (got.size() != values.size()) return false;
        reach[m] = std::move(got);
    }
    return true;
}

}  // namespace

std::optional<unsigned> generation_degree(const OkounkovSemigroup& gamma, unsigned kmax) {
    for (unsigned k = 1; k <= kmax; ++k) {
        if (generated_in_degree(gamma, k)) return k;
    }
    return std::nullopt;
}

std::string semigroup_to_json(const OkounkovSemigroup& gamma) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(gamma.kind);
    j["M"] = gamma.max_level;
    nlohmann::ordered_json levels = nlohmann::ordered_json::object();
    for (const auto& [m, values] : gamma.levels) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& v : values) arr.push_back(v);
        levels[std::to_string(m)] = std::move(arr);
    }
    j["levels"] = std::move(levels);
    return j.dump(2);
}

}  // namespace okb
