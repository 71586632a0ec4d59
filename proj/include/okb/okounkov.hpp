#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "okb/convex.hpp"
#include "okb/valuation.hpp"
#include "okb/varieties.hpp"

namespace okb {

/// powers: V_m spanned by m-fold products of degree-c forms (V_m = m|D|).
/// complete: V_m the whole degree-mc graded piece (|mD|).
enum class SystemKind { Powers, Complete };

std::string kind_name(SystemKind kind);
/// Accepts "powers" and "complete"; throws InvalidArgument otherwise.
SystemKind parse_kind(std::string_view name);

/// Monomials of degree `degree` not divisible by the lex-leading monomial of
/// the relation: a basis of the graded piece of the coordinate ring.
std::vector<Exponent> standard_monomials(const CaseStudy& cs, unsigned degree);

/// Graded linear system of a case study, bases cached per level. Copies
/// share the cache; basis() is safe to call concurrently.
class GradedSystem {
public:
    GradedSystem(CaseStudy cs, SystemKind kind);

    const CaseStudy& case_study() const { return cs_; }
    SystemKind kind() const { return kind_; }

    /// Basis of V_m (m >= 1), each element reduced modulo the relation.
    const std::vector<Section>& basis(unsigned m) const;
    std::size_t dimension(unsigned m) const { return basis(m).size(); }

private:
    struct Cache;
    std::vector<Section> build(unsigned m) const;

    CaseStudy cs_;
    SystemKind kind_;
    std::shared_ptr<Cache> cache_;
};

std::vector<Section> graded_system_basis(const CaseStudy& cs, SystemKind kind, unsigned m);

/// Basis element with its valuation and leading unit after triangularization.
struct TriangularElement {
    Section section;
    FlagValuation::Result result;
};

/// Triangularizes the basis until all valuations are distinct: while two
/// elements share a value, take the lexicographically smallest shared
/// value and replace the later element by later - (u_later / u_pivot) pivot.
/// Throws InvalidArgument if the basis is dependent modulo the relation and
/// InternalConsistency if a value exceeds the a priori bound.
std::vector<TriangularElement> triangularize(std::vector<Section> basis, const FlagValuation& val);

/// { nu(E) : E in span(basis), E != 0 }, exactly dim span(basis) vectors.
std::set<ValuationVector> value_set(const std::vector<Section>& basis, const FlagValuation& val);
std::set<ValuationVector> value_set(const std::vector<Section>& basis, const Flag& flag);

/// Levels 1..M of Gamma(V_.) for one case study and kind.
struct OkounkovSemigroup {
    SystemKind kind = SystemKind::Complete;
    unsigned max_level = 0;
    std::size_t n = 0;
    std::map<unsigned, std::set<ValuationVector>> levels;

    std::vector<GradedPoint> points() const;
};

OkounkovSemigroup semigroup(const CaseStudy& cs, SystemKind kind, unsigned M);
OkounkovSemigroup semigroup(const GradedSystem& system, const FlagValuation& val, unsigned M);

/// cone_slice over every enumerated graded point.
RationalPolytope body_estimate(const OkounkovSemigroup& gamma);

/// True iff every vertex of the candidate is an integer point in level1.
bool vertex_criterion(const RationalPolytope& candidate, const std::set<ValuationVector>& level1);

/// Minimal k <= kmax such that every point at levels k < m <= M is a sum of
/// points at levels <= k; nullopt if none. k = 1 when M = 1.
std::optional<unsigned> generation_degree(const OkounkovSemigroup& gamma, unsigned kmax);

/// {"kind": ..., "M": ..., "levels": {"1": [[...], ...], ...}}
std::string semigroup_to_json(const OkounkovSemigroup& gamma);

}  // namespace okb
