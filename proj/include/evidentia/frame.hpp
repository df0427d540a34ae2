/*
 * Frames of discernment and focal elements.
 *
 * A Frame is a finite ground universe of labelled elements together with
 * named possibilities, each possibility a nonempty subset of the ground.
 * Possibilities are allowed to overlap; nothing in the library assumes
 * disjointness.
 *
 * A FocalElement is what a body of evidence assigns mass to: either a
 * nonempty subset of the ground, or one of two distinguished labels:
 *
 *   theta: open-world ignorance. Deliberately NOT identified with the
 *          full ground set: mass on theta is reserved for possibilities
 *          nobody has thought of yet, so it supports no named
 *          possibility and is tracked as its own symbol.
 *   empty: the conflict label of the open-world regime.
 *
 * Intersection convention: subset∩subset is bitmask intersection (empty
 * when the masks are disjoint), X∩theta = X, theta∩theta = theta, and
 * anything∩empty = empty.
 */

#pragma once

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "subset.hpp"

namespace evidentia {

class Frame {
public:
    // Subset operations stay a handful of words up to this bound.
    static constexpr std::size_t max_ground_size = 4096;

    Frame(std::vector<std::string> ground,
          const std::map<std::string, std::vector<std::string>>& possibilities)
        : ground_(std::move(ground)) {
        if (ground_.empty())
            raise(Errc::invalid_argument, "ground universe must contain at least one element");
        if (ground_.size() > max_ground_size)
            raise(Errc::frame_too_large,
                  "ground universe exceeds " + std::to_string(max_ground_size) + " elements");
        for (std::size_t i = 0; i < ground_.size(); ++i) {
            if (ground_[i].empty())
                raise(Errc::invalid_argument,
                      "ground label at index " + std::to_string(i) + " is empty");
            if (!index_.emplace(ground_[i], i).second)
                raise(Errc::duplicate_label, "duplicate ground label '" + ground_[i] + "'");
        }
        for (const auto& [name, labels] : possibilities) {
            if (labels.empty())
                raise(Errc::empty_possibility, "possibility '" + name + "' is empty");
            possibilities_.emplace(name, mask_of(labels));
        }
    }

    std::size_t size() const { return ground_.size(); }

    const std::vector<std::string>& ground() const { return ground_; }

    const std::map<std::string, SubsetMask>& possibilities() const { return possibilities_; }

    bool has_element(const std::string& label) const { return index_.count(label) != 0; }

    std::size_t index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end())
            raise(Errc::unknown_label, "unknown ground label '" + label + "'");
        return it->second;
    }

    bool has_possibility(const std::string& name) const { return possibilities_.count(name) != 0; }

    const SubsetMask& possibility(const std::string& name) const {
        auto it = possibilities_.find(name);
        if (it == possibilities_.end())
            raise(Errc::unknown_label, "unknown possibility '" + name + "'");
        return it->second;
    }

    SubsetMask mask_of(std::span<const std::string> labels) const {
        SubsetMask mask(ground_.size());
        for (const auto& label : labels) mask.set(index_of(label));
        return mask;
    }

    SubsetMask mask_of(const std::vector<std::string>& labels) const {
        return mask_of(std::span<const std::string>(labels));
    }

    SubsetMask full_mask() const {
        SubsetMask mask(ground_.size());
        for (std::size_t i = 0; i < ground_.size(); ++i) mask.set(i);
        return mask;
    }

    std::vector<std::string> labels_of(const SubsetMask& mask) const {
        std::vector<std::string> out;
        for (auto i : mask.indices()) out.push_back(ground_[i]);
        return out;
    }

    bool operator==(const Frame& other) const {
        return ground_ == other.ground_ && possibilities_ == other.possibilities_;
    }

private:
    std::vector<std::string> ground_;
    std::map<std::string, std::size_t> index_;
    std::map<std::string, SubsetMask> possibilities_;
};

using FramePtr = std::shared_ptr<const Frame>;

inline FramePtr make_frame(std::vector<std::string> ground,
                           const std::map<std::string, std::vector<std::string>>& possibilities) {
    return std::make_shared<Frame>(std::move(ground), possibilities);
}

/// Frames are immutable; two bodies live on the same frame if they share
/// the object or the frames compare structurally equal.
inline bool same_frame(const FramePtr& a, const FramePtr& b) {
    return a == b || (a && b && *a == *b);
}

class FocalElement {
public:
    enum class Kind { empty, subset, theta };

    static FocalElement subset(SubsetMask mask) {
        if (mask.none())
            raise(Errc::empty_subset_focal,
                  "a subset focal element must be nonempty; use the empty label for conflict mass");
        FocalElement f;
        f.kind_ = Kind::subset;
        f.mask_ = std::move(mask);
        return f;
    }

    static FocalElement theta() {
        FocalElement f;
        f.kind_ = Kind::theta;
        return f;
    }

    static FocalElement empty() {
        FocalElement f;
        f.kind_ = Kind::empty;
        return f;
    }

    Kind kind() const { return kind_; }
    bool is_subset() const { return kind_ == Kind::subset; }
    bool is_theta() const { return kind_ == Kind::theta; }
    bool is_empty() const { return kind_ == Kind::empty; }

    const SubsetMask& mask() const { return mask_; }

    friend FocalElement intersect(const FocalElement& a, const FocalElement& b) {
        if (a.is_empty() || b.is_empty()) return empty();
        if (a.is_theta()) return b;
        if (b.is_theta()) return a;
        SubsetMask meet = a.mask() & b.mask();
        if (meet.none()) return empty();
        return subset(std::move(meet));
    }

    bool operator==(const FocalElement& other) const {
        return kind_ == other.kind_ && (kind_ != Kind::subset || mask_ == other.mask_);
    }

    // empty < subsets (by mask) < theta; gives mass maps a deterministic
    // iteration order.
    std::strong_ordering operator<=>(const FocalElement& other) const {
        if (kind_ != other.kind_) return rank() <=> other.rank();
        if (kind_ == Kind::subset) return mask_ <=> other.mask_;
        return std::strong_ordering::equal;
    }

private:
    int rank() const { return kind_ == Kind::empty ? 0 : kind_ == Kind::subset ? 1 : 2; }

    Kind kind_ = Kind::theta;
    SubsetMask mask_;
};

/// Focal element for a named possibility of the frame.
inline FocalElement possibility_focal(const Frame& frame, const std::string& name) {
    return FocalElement::subset(frame.possibility(name));
}

/// Focal element for the intersection of several named possibilities.
inline FocalElement intersection_focal(const Frame& frame, std::span<const std::string> names) {
    if (names.empty())
        raise(Errc::empty_subset_focal, "focal element needs at least one possibility name");
    SubsetMask mask = frame.possibility(names.front());
    for (std::size_t i = 1; i < names.size(); ++i) mask = mask & frame.possibility(names[i]);
    if (mask.none())
        raise(Errc::empty_subset_focal, "named possibilities have empty intersection");
    return FocalElement::subset(std::move(mask));
}

/// Human-readable rendering, e.g. "{c1 c4}", "theta", "empty".
inline std::string focal_label(const Frame& frame, const FocalElement& focal) {
    switch (focal.kind()) {
        case FocalElement::Kind::theta: return "theta";
        case FocalElement::Kind::empty: return "empty";
        case FocalElement::Kind::subset: {
            std::string out = "{";
            bool first = true;
            for (const auto& label : frame.labels_of(focal.mask())) {
                if (!first) out += ' ';
                out += label;
                first = false;
            }
            out += '}';
            return out;
        }
    }
    return "?";
}

} // namespace evidentia
