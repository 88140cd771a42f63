/** @file recurrence.hpp
 *  @brief Return times and the exact return-time identity.
 *
 *  For a validated transformation T and a set E, the return time of x in E is
 *  the least n >= 1 with T^n(x) in E. This module computes the function
 *  n_E on E, its exact integral against the space's measure, and verifies the
 *  identity
 *
 *      integral over E of n_E  =  mu(I_E),
 *
 *  where I_E is the invariant closure of E, together with every intermediate
 *  step: the series terms a_n = mu((U_{v=1..n} T^{-v}E)^c n E) and their
 *  push-forwards b_n = mu((U_{v=0..n-1} T^v E)^c n T^n E), the disjoint
 *  decomposition of the forward union, the induced (first-return) map on E,
 *  and the tower over E keyed by return time.
 *
 *  ReturnTime keeps an INFINITE state even though a permutation of a finite
 *  set always returns: the interface describes the general setting honestly,
 *  and poincare_check exists to make the almost-everywhere finiteness claim
 *  executable (in this finite model it holds unconditionally).
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "recur/dynamics.hpp"

namespace recur {

class ReturnTime {
public:
    static ReturnTime finite(long long steps);
    static ReturnTime infinite() { return ReturnTime(); }

    bool is_finite() const { return steps_ > 0; }

    /// Number of steps; only valid when finite.
    long long steps() const;

    friend bool operator==(const ReturnTime& lhs, const ReturnTime& rhs) = default;

private:
    ReturnTime() = default;
    long long steps_ = 0;  // 0 encodes INFINITE
};

/// n_E restricted to E: one entry per member of E.
using ReturnTimeFunction = std::map<int, ReturnTime>;

/// First return time of x to e; x must belong to e.
ReturnTime return_time(const Transformation& t, const PointSet& e, int x);

/// n_E on all of e at once.
ReturnTimeFunction return_times(const Transformation& t, const PointSet& e);

/// Exact integral of n_E over e: sum of n_E(x) * weight(x).
Rational return_integral(const FiniteMeasureSpace& space, const Transformation& t,
                         const PointSet& e);

struct VerificationReport {
    Rational lhs;                            // integral of n_E over E
    Rational rhs;                            // mu(I_E)
    PointSet rhs_set;                        // I_E
    bool equal = false;                      // lhs == rhs, exactly
    std::optional<Rational> normalized_lhs;  // lhs / total measure, when total > 0
};

/// Checks the identity: lhs = integral, rhs = mu(invariant closure). An
/// unequal verdict is reported, not thrown; it signals an implementation bug.
VerificationReport kac_check(const FiniteMeasureSpace& space, const Transformation& t,
                             const PointSet& e);

struct SeriesReport {
    Rational mu_E;
    std::vector<Rational> terms_a;       // a_n, n = 1..horizon
    std::vector<Rational> terms_b;       // b_n, n = 1..horizon
    std::vector<Rational> partial_sums;  // mu(E) + sum of a_1..a_n
};

/// Series terms of the identity's proof. The horizon defaults to the space
/// size, beyond which every term is zero, so the last partial sum is mu(I_E).
SeriesReport series_terms(const FiniteMeasureSpace& space, const Transformation& t,
                          const PointSet& e, std::optional<long long> horizon = std::nullopt);

/// Pieces D_0 = E, D_n = (U_{v<n} T^v E)^c n T^n E, truncated at the first
/// empty piece: pairwise disjoint with union I_E.
std::vector<PointSet> disjoint_decomposition(const Transformation& t, const PointSet& e);

/// The first-return system on e: points of e with inherited weights under
/// x -> T^{n_E(x)}(x). `points` lists the original indices in induced order.
struct InducedSystem {
    FiniteMeasureSpace space;
    Transformation map;
    std::vector<int> points;
};

InducedSystem induced_map(const FiniteMeasureSpace& space, const Transformation& t,
                          const PointSet& e);

struct TowerColumn {
    long long return_time = 0;     // r
    PointSet base;                 // E_r = {x in E : n_E(x) = r}
    std::vector<PointSet> levels;  // T^k(E_r), k = 0..r-1
};

/// Partition of I_E into columns keyed by the distinct return times of E.
struct Tower {
    std::vector<TowerColumn> columns;
};

Tower kakutani_tower(const FiniteMeasureSpace& space, const Transformation& t, const PointSet& e);

/// mass(k) = mu({x in E : n_E(x) = k}), one entry per occurring return time.
std::vector<std::pair<long long, Rational>> return_time_distribution(
    const FiniteMeasureSpace& space, const Transformation& t, const PointSet& e);

struct RecurrenceReport {
    bool all_return = false;
    PointSet exceptional;  // positive-weight points of E that never return
};

/// Almost-every-point recurrence, stated executably: collects positive-weight
/// points of e with infinite return time. Always empty for validated
/// permutation systems, where recurrence is unconditional.
RecurrenceReport poincare_check(const FiniteMeasureSpace& space, const Transformation& t,
                                const PointSet& e);

}  // namespace recur
