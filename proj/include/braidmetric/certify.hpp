#pragma once

#include <optional>

#include "braidmetric/derivation.hpp"
#include "braidmetric/metric.hpp"

namespace braidmetric {

enum class CertificateMethod { flip_criterion, bound_match };

std::string_view to_string(CertificateMethod method);

/// Outcome of optimality_certificate. When certified, `distance` is proven
/// to be the exact combinatorial distance between the endpoints; otherwise
/// `gap` is how far the derivation length sits above the known lower bound.
struct Certificate {
    bool certified = false;
    std::size_t distance = 0;                                    // certified only
    CertificateMethod method = CertificateMethod::bound_match;   // certified only
    std::size_t gap = 0;                                         // inconclusive only
    std::string reason;                                          // inconclusive only
};

/// Tries to prove a derivation between positive endpoints optimal.
///
/// flip_criterion: if no name pair flips more than once along the trace,
/// every flip is an endpoint inversion, so the move count equals the D + M
/// of the endpoint lower bound and nothing shorter can exist. Only tried
/// when every intermediate word is positive.
///
/// bound_match: if the derivation length equals the endpoint lower bound,
/// it is optimal outright.
///
/// Both are sufficient conditions, not necessary ones; failing both yields
/// an inconclusive certificate with the remaining gap.
Certificate optimality_certificate(const Derivation& d);

/// A shortest derivation from prop1_left(m) to lcm_right(m), found by
/// breadth-first search; it has 4m^2 moves. Guaranteed to fit the default
/// limits for m <= 2 (and comfortably for m = 3); returns nullopt when the
/// limits bind first.
std::optional<Derivation> lcm_derivation(int m, const SearchLimits& limits = {});

}  // namespace braidmetric
