#include "recur/measure.hpp"

#include <algorithm>
#include <iterator>

namespace recur {

namespace {

void require_same_space(const PointSet& a, const PointSet& b) {
    if (a.space_size() != b.space_size()) {
        throw SpaceMismatch("sets bound to spaces of sizes " + std::to_string(a.space_size()) +
                            " and " + std::to_string(b.space_size()));
    }
}

}  // namespace

FiniteMeasureSpace::FiniteMeasureSpace(std::vector<Rational> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw EmptySpace("a measure space needs at least one point");
    }
    for (size_t i = 0; i < weights_.size(); ++i) {
        if (weights_[i].is_negative()) {
            throw NegativeWeight("weight at index " + std::to_string(i) + " is negative: " +
                                 weights_[i].str());
        }
        total_ += weights_[i];
    }
}

PointSet::PointSet(std::vector<int> members, int space_size) {
    if (space_size < 0) {
        throw BadParam("space size must be nonnegative");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int m : members) {
        if (m < 0 || m >= space_size) {
            throw IndexOutOfRange("point " + std::to_string(m) + " outside space of size " +
                                  std::to_string(space_size));
        }
    }
    members_ = std::move(members);
    space_size_ = space_size;
}

PointSet PointSet::empty(int space_size) {
    return PointSet({}, space_size);
}

PointSet PointSet::full(int space_size) {
    std::vector<int> all(static_cast<size_t>(space_size));
    for (int i = 0; i < space_size; ++i) all[static_cast<size_t>(i)] = i;
    return from_sorted(std::move(all), space_size);
}

PointSet PointSet::from_sorted(std::vector<int> members, int space_size) {
    PointSet s;
    s.members_ = std::move(members);
    s.space_size_ = space_size;
    return s;
}

bool PointSet::contains(int i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

Rational measure(const FiniteMeasureSpace& space, const PointSet& a) {
    if (a.space_size() != space.size()) {
        throw SpaceMismatch("set bound to space of size " + std::to_string(a.space_size()) +
                            ", expected " + std::to_string(space.size()));
    }
    Rational sum;
    for (int m : a.members()) sum += space.weight(m);
    return sum;
}

PointSet complement(const PointSet& a) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(a.space_size() - a.size()));
    auto it = a.members().begin();
    for (int i = 0; i < a.space_size(); ++i) {
        if (it != a.members().end() && *it == i) {
            ++it;
        } else {
            out.push_back(i);
        }
    }
    return PointSet::from_sorted(std::move(out), a.space_size());
}

PointSet set_union(const PointSet& a, const PointSet& b) {
    require_same_space(a, b);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(a.size() + b.size()));
    std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                   std::back_inserter(out));
    return PointSet::from_sorted(std::move(out), a.space_size());
}

PointSet set_intersect(const PointSet& a, const PointSet& b) {
    require_same_space(a, b);
    std::vector<int> out;
    std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                          b.members().end(), std::back_inserter(out));
    return PointSet::from_sorted(std::move(out), a.space_size());
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
    require_same_space(a, b);
    std::vector<int> out;
    std::set_difference(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
    return PointSet::from_sorted(std::move(out), a.space_size());
}

bool is_subset(const PointSet& a, const PointSet& b) {
    require_same_space(a, b);
    return std::includes(b.members().begin(), b.members().end(), a.members().begin(),
                         a.members().end());
}

}  // namespace recur
