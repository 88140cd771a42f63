/** @file iet.hpp
 *  @brief Rational interval exchange transformations.
 *
 *  An Iet cuts [0, total) into m half-open intervals of positive rational
 *  length and reorders them by translation; it is an invertible bijection of
 *  [0, total) preserving length measure. Every datum is rational, so a rational
 *  IET compiles exactly onto the finite permutation backend: the grid of
 *  q equal cells, q the least common multiple of the denominators of all
 *  breakpoints (and of any set endpoints) after scaling by the total, carries
 *  a permutation that agrees with the exchange cell by cell. The compiled
 *  pair is where the return-time identity is verified exactly.
 *
 *  Intervals are uniformly half-open [a, b), which makes the exchange a true
 *  bijection with no endpoint ambiguity.
 */
#pragma once

#include <utility>
#include <vector>

#include "recur/dynamics.hpp"

namespace recur {

class Iet {
public:
    /// Validates lengths (positive) and the arrangement (a permutation:
    /// arrangement[k] is the interval occupying slot k after the exchange).
    Iet(std::vector<Rational> lengths, std::vector<int> arrangement);

    int interval_count() const { return static_cast<int>(lengths_.size()); }
    const std::vector<Rational>& lengths() const { return lengths_; }
    const std::vector<int>& arrangement() const { return arrangement_; }
    const Rational& total() const { return total_; }

    /// Left endpoint of interval i in the domain.
    const Rational& domain_start(int i) const { return domain_starts_[static_cast<size_t>(i)]; }

    /// Translation applied to interval i by the exchange.
    const Rational& displacement(int i) const { return displacements_[static_cast<size_t>(i)]; }

    /// The exchange at x; requires 0 <= x < total.
    Rational apply(const Rational& x) const;

private:
    std::vector<Rational> lengths_;
    std::vector<int> arrangement_;        // slot -> interval
    std::vector<Rational> domain_starts_;  // per interval
    std::vector<Rational> displacements_;  // per interval
    Rational total_;
};

/// The rotation x -> x + alpha (mod total) as a two-interval exchange.
Iet rotation(const Rational& alpha, const Rational& total);

/// A finite union of disjoint half-open rational intervals within [0, total).
class IntervalSet {
public:
    /// Sorts the intervals and validates them: nondegenerate, disjoint,
    /// inside [0, total].
    IntervalSet(std::vector<std::pair<Rational, Rational>> intervals, const Rational& total);

    static IntervalSet full(const Rational& total);

    const std::vector<std::pair<Rational, Rational>>& intervals() const { return intervals_; }
    const Rational& total() const { return total_; }
    bool is_empty() const { return intervals_.empty(); }

    /// Sum of interval lengths.
    Rational total_length() const;

private:
    std::vector<std::pair<Rational, Rational>> intervals_;
    Rational total_;
};

/// Exact reduction of an Iet to the permutation backend. Cell k covers
/// [k * cell_width, (k+1) * cell_width); the compiled map sends cell k onto
/// the cell its interval's translation carries it to, and the space gives
/// every cell weight cell_width, so measure equals length.
struct Compilation {
    long long grid_order = 0;  // q
    Rational cell_width;       // total / q
    FiniteMeasureSpace space;  // q cells of weight cell_width
    Transformation map;

    Rational cell_start(long long k) const { return Rational(k) * cell_width; }
    long long cell_of(const Rational& x) const;
};

/// Compiles the exchange on the minimal common grid of its breakpoints and of
/// all endpoints of `sets`; each set becomes the PointSet of its grid cells.
std::pair<Compilation, std::vector<PointSet>> compile_iet(const Iet& iet,
                                                          const std::vector<IntervalSet>& sets);

/// The first-return exchange on e, re-coordinatized to [0, length of e):
/// compile, induce on the cell image of e, and regroup consecutive cells of
/// equal displacement into maximal intervals.
Iet induced_iet(const Iet& iet, const IntervalSet& e);

}  // namespace recur
