#include "braidmetric/certify.hpp"

#include <algorithm>

namespace braidmetric {

std::string_view to_string(CertificateMethod method) {
    switch (method) {
        case CertificateMethod::flip_criterion: return "flip_criterion";
        case CertificateMethod::bound_match: return "bound_match";
    }
    throw ConsistencyError("unhandled CertificateMethod");
}

Certificate optimality_certificate(const Derivation& d) {
    const std::vector<BraidWord> words = validate_derivation(d);
    const BraidWord& first = words.front();
    const BraidWord& last = words.back();
    if (!first.is_positive() || !last.is_positive())
        throw PreconditionError("optimality certificates need positive endpoint words");

    const LowerBoundReport bound = lower_bound(first, last);
    if (!bound.multiset_equal)
        throw ConsistencyError(
            "derivation endpoints are equivalent positive words with different name multisets");
    const std::size_t length = d.length();
    if (length < bound.bound)
        throw ConsistencyError("a derivation is shorter than the proven lower bound");

    const bool all_positive =
        std::all_of(words.begin(), words.end(), [](const BraidWord& w) { return w.is_positive(); });
    if (all_positive) {
        SeparatrixReport flips = separatrix_report(d);
        if (flips.max_flip_count <= 1) {
            // Each pair flips at most once, so flips equal endpoint
            // inversions and the move count is exactly D + M.
            if (length != bound.bound_simple)
                throw ConsistencyError(
                    "flip criterion holds but derivation length differs from D + M");
            return Certificate{true, length, CertificateMethod::flip_criterion, 0, {}};
        }
    }

    if (length == bound.bound)
        return Certificate{true, length, CertificateMethod::bound_match, 0, {}};

    Certificate cert;
    cert.gap = length - bound.bound;
    cert.reason = "length " + std::to_string(length) + " exceeds the lower bound " +
                  std::to_string(bound.bound);
    return cert;
}

std::optional<Derivation> lcm_derivation(int m, const SearchLimits& limits) {
    DistanceResult result = exact_distance(family_word(FamilyKind::prop1_left, m),
                                           family_word(FamilyKind::lcm_right, m), limits);
    switch (result.status) {
        case DistanceStatus::exact: return std::move(result.witness);
        case DistanceStatus::unknown: return std::nullopt;
        case DistanceStatus::not_equivalent:
            throw ConsistencyError("the lcm family words must be equivalent");
    }
    throw ConsistencyError("unhandled DistanceStatus");
}

}  // namespace braidmetric
