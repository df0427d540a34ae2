/*
 * Re-describing a frame at coarser or finer granularity.
 *
 * coarsen merges ground elements through a total surjective label map;
 * subset focal elements and possibilities map to their images, masses of
 * focal elements with equal images are summed. refine replaces each
 * ground element by a nonempty set of fresh labels (pairwise disjoint
 * across elements); focal elements map to the union of their elements'
 * images and masses travel unchanged. theta and empty map to themselves
 * under both.
 */

#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "body.hpp"
#include "errors.hpp"
#include "frame.hpp"

namespace evidentia {

template <class M>
std::pair<FramePtr, BodyOfEvidence<M>> coarsen(const BodyOfEvidence<M>& body,
                                               const std::map<std::string, std::string>& merge_map) {
    const Frame& frame = *body.frame();

    // Coarse ground keeps the order of first appearance along the
    // original ground, so the identity map is an identity.
    std::vector<std::string> coarse_ground;
    std::map<std::string, std::size_t> coarse_index;
    std::vector<std::size_t> image_of(frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i) {
        auto it = merge_map.find(frame.ground()[i]);
        if (it == merge_map.end())
            raise(Errc::partial_merge_map,
                  "merge map does not cover ground label '" + frame.ground()[i] + "'");
        auto [pos, inserted] = coarse_index.emplace(it->second, coarse_ground.size());
        if (inserted) coarse_ground.push_back(it->second);
        image_of[i] = pos->second;
    }

    auto image_mask = [&](const SubsetMask& mask) {
        SubsetMask out(coarse_ground.size());
        for (auto i : mask.indices()) out.set(image_of[i]);
        return out;
    };

    std::map<std::string, std::vector<std::string>> coarse_possibilities;
    for (const auto& [name, mask] : frame.possibilities()) {
        std::vector<std::string> labels;
        for (auto i : image_mask(mask).indices()) labels.push_back(coarse_ground[i]);
        coarse_possibilities.emplace(name, std::move(labels));
    }
    FramePtr coarse = make_frame(coarse_ground, coarse_possibilities);

    std::vector<std::pair<FocalElement, M>> assignments;
    for (const auto& [focal, mass] : body.masses()) {
        if (focal.is_subset())
            assignments.emplace_back(FocalElement::subset(image_mask(focal.mask())), mass);
        else
            assignments.emplace_back(focal, mass);
    }
    return {coarse, BodyOfEvidence<M>::make(coarse, assignments, body.regime())};
}

template <class M>
std::pair<FramePtr, BodyOfEvidence<M>>
refine(const BodyOfEvidence<M>& body,
       const std::map<std::string, std::vector<std::string>>& refinement_map) {
    const Frame& frame = *body.frame();

    std::vector<std::string> fine_ground;
    std::set<std::string> seen;
    std::vector<std::vector<std::size_t>> images_of(frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i) {
        auto it = refinement_map.find(frame.ground()[i]);
        if (it == refinement_map.end() || it->second.empty())
            raise(Errc::empty_image,
                  "ground label '" + frame.ground()[i] + "' has no refinement image");
        for (const auto& fine : it->second) {
            if (!seen.insert(fine).second)
                raise(Errc::overlapping_images,
                      "fine label '" + fine + "' appears in more than one image");
            images_of[i].push_back(fine_ground.size());
            fine_ground.push_back(fine);
        }
    }

    auto image_mask = [&](const SubsetMask& mask) {
        SubsetMask out(fine_ground.size());
        for (auto i : mask.indices())
            for (auto j : images_of[i]) out.set(j);
        return out;
    };

    std::map<std::string, std::vector<std::string>> fine_possibilities;
    for (const auto& [name, mask] : frame.possibilities()) {
        std::vector<std::string> labels;
        for (auto i : image_mask(mask).indices()) labels.push_back(fine_ground[i]);
        fine_possibilities.emplace(name, std::move(labels));
    }
    FramePtr fine = make_frame(fine_ground, fine_possibilities);

    std::vector<std::pair<FocalElement, M>> assignments;
    for (const auto& [focal, mass] : body.masses()) {
        if (focal.is_subset())
            assignments.emplace_back(FocalElement::subset(image_mask(focal.mask())), mass);
        else
            assignments.emplace_back(focal, mass);
    }
    return {fine, BodyOfEvidence<M>::make(fine, assignments, body.regime())};
}

} // namespace evidentia
