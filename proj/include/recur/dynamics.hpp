/** @file dynamics.hpp
 *  @brief Invertible measure-preserving transformations of finite spaces.
 *
 *  A Transformation is a permutation of {0..size-1} validated against a
 *  space so that every point maps onto one of equal weight; that pointwise
 *  equality is exactly measure preservation in both directions. On top of it
 *  sit iteration of sets, orbits, the invariant closure of a set, an
 *  ergodicity test, and generators for stock test systems.
 *
 *  Ergodicity is defined for these finite systems as: exactly one orbit
 *  carries positive measure (a space of total measure zero is not ergodic).
 *
 *  Note on closures: the smallest invariant set containing E is the union of
 *  the full two-sided orbits meeting E. For a permutation of a finite set
 *  this coincides exactly with the forward union of images of E; in the
 *  general measure-theoretic setting the two agree only up to null sets.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "recur/measure.hpp"

namespace recur {

class Transformation {
public:
    int size() const { return static_cast<int>(forward_.size()); }

    /// T(x).
    int apply(int x) const { return forward_[static_cast<size_t>(x)]; }

    /// T^{-1}(x).
    int apply_inverse(int x) const { return inverse_[static_cast<size_t>(x)]; }

    const std::vector<int>& forward() const { return forward_; }
    const std::vector<int>& inverse() const { return inverse_; }

private:
    friend Transformation make_transformation(const FiniteMeasureSpace& space,
                                              std::vector<int> forward);
    Transformation(std::vector<int> forward, std::vector<int> inverse)
        : forward_(std::move(forward)), inverse_(std::move(inverse)) {}

    std::vector<int> forward_;
    std::vector<int> inverse_;
};

/// Validates forward as a weight-preserving permutation of the space and
/// derives the inverse. Throws NotBijective or NotMeasurePreserving.
Transformation make_transformation(const FiniteMeasureSpace& space, std::vector<int> forward);

/// The permutation T^n as a plain map array; n may be negative.
std::vector<int> power_map(const Transformation& t, long long n);

/// Image of a set under T^n (negative n iterates the inverse).
PointSet iterate_set(const Transformation& t, const PointSet& a, long long n);

struct OrbitInfo {
    PointSet points;
    int period = 0;
};

/// The cycle through x and its length.
OrbitInfo orbit(const Transformation& t, int x);

/// Smallest T-invariant set containing e: the union of all orbits meeting e.
PointSet invariant_closure(const Transformation& t, const PointSet& e);

/// True iff exactly one orbit of t has positive measure.
bool is_ergodic(const FiniteMeasureSpace& space, const Transformation& t);

/// A space paired with a validated transformation of it.
struct System {
    FiniteMeasureSpace space;
    Transformation map;
};

/// The n-cycle 0 -> 1 -> ... -> n-1 -> 0 with uniform weights total/n.
System make_cycle(int n, const Rational& total = Rational(1));

/// Seeded random permutation with a random rational weight per cycle.
///
/// Fully determined by the seed: a Fisher-Yates shuffle driven by
/// std::mt19937_64(seed) with modulo bounding, then one weight per cycle
/// (cycles visited in order of their smallest member) drawn from the same
/// stream: zero with probability 1/8, otherwise p/q with p in [1,999] and
/// q in [1,max_denominator].
System make_random_permutation(int n, std::uint64_t seed, long long max_denominator = 1000000);

/// The hyperbolic torus automorphism (i,j) -> (2i+j mod q, i+j mod q) on the
/// q x q grid, cell (i,j) at index i*q+j, uniform weights 1/q^2.
System make_cat_map(int q);

}  // namespace recur
