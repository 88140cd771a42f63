/** @file measure.hpp
 *  @brief Finite measure spaces and their subsets.
 *
 *  A FiniteMeasureSpace is a finite point set {0..size-1} with nonnegative
 *  rational weights; its sigma-algebra is the full power set, so every
 *  PointSet is measurable and every measure is an exact Rational. A PointSet
 *  is a sorted, duplicate-free list of indices bound to a space size; its
 *  membership test is the characteristic function of the set.
 */
#pragma once

#include <vector>

#include "recur/rational.hpp"

namespace recur {

class FiniteMeasureSpace {
public:
    /// Validates that weights are nonempty and nonnegative.
    explicit FiniteMeasureSpace(std::vector<Rational> weights);

    int size() const { return static_cast<int>(weights_.size()); }
    const Rational& weight(int i) const { return weights_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& weights() const { return weights_; }
    const Rational& total_measure() const { return total_; }

private:
    std::vector<Rational> weights_;
    Rational total_;
};

class PointSet {
public:
    /// The empty set in a zero-point space; useful as a placeholder.
    PointSet() = default;

    /// Canonicalizes (sorts, removes duplicates) and range-checks members.
    PointSet(std::vector<int> members, int space_size);

    static PointSet empty(int space_size);
    static PointSet full(int space_size);

    /// Builds from a vector already sorted, unique and in range.
    static PointSet from_sorted(std::vector<int> members, int space_size);

    int space_size() const { return space_size_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool is_empty() const { return members_.empty(); }

    /// chi_A: membership test.
    bool contains(int i) const;

    const std::vector<int>& members() const { return members_; }

    friend bool operator==(const PointSet& lhs, const PointSet& rhs) = default;

private:
    std::vector<int> members_;
    int space_size_ = 0;
};

/// mu(A): exact sum of the weights of A's members.
Rational measure(const FiniteMeasureSpace& space, const PointSet& a);

PointSet complement(const PointSet& a);
PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersect(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);
bool is_subset(const PointSet& a, const PointSet& b);

}  // namespace recur
