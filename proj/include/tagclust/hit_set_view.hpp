// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

/**
 * @file hit_set_view.hpp
 * @brief Tag statistics restricted to the bookmarks matching a query.
 *
 * Clustering never looks at the global index: a, b and g are recounted over
 * the hit set only.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tagclust/corpus.hpp"
#include "tagclust/ranking.hpp"
#include "tagclust/similarity.hpp"

namespace tagclust {

/// Dense id of a tag inside one view. Ordered like the tag strings.
using ViewTag = std::uint32_t;

class HitSetView {
public:
    /// `hits` must be ids of `index`; they are sorted and deduplicated.
    HitSetView(const FolksonomyIndex& index, std::vector<BookmarkId> hits);

    std::span<const BookmarkId> hits() const noexcept { return hits_; }
    std::vector<HitRef> hit_refs() const;
    bool empty() const noexcept { return hits_.empty(); }

    std::size_t tag_count() const noexcept { return names_.size(); }
    const std::string& name(ViewTag t) const { return names_.at(t); }
    std::optional<ViewTag> find(std::string_view tag) const;

    /// Bookmarks in the hit set carrying the tag.
    std::uint32_t frequency(ViewTag t) const { return freq_.at(t); }
    std::uint32_t cooccurrence(ViewTag x, ViewTag y) const;
    double similarity(Measure m, ViewTag x, ViewTag y) const;

    /// All view tags by descending frequency, then by name.
    std::span<const ViewTag> candidate_order() const noexcept { return candidates_; }
    /// Tags sharing at least one hit with `t`, in candidate order.
    std::span<const ViewTag> neighbors(ViewTag t) const { return neighbors_.at(t); }

    const HitSetStats& stats() const noexcept { return stats_; }

private:
    static std::uint64_t pair_key(ViewTag x, ViewTag y);

    std::vector<BookmarkId> hits_;
    std::vector<HitRef> refs_;
    std::vector<std::string> names_;
    std::vector<std::uint32_t> freq_;
    std::unordered_map<std::uint64_t, std::uint32_t> cooc_;
    std::vector<ViewTag> candidates_;
    std::vector<std::vector<ViewTag>> neighbors_;
    HitSetStats stats_;
};

}  // namespace tagclust
