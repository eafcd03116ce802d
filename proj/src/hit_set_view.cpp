// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

#include "tagclust/hit_set_view.hpp"

#include <algorithm>

namespace tagclust {

HitSetView::HitSetView(const FolksonomyIndex& index, std::vector<BookmarkId> hits)
    : hits_(std::move(hits)) {
    std::sort(hits_.begin(), hits_.end());
    hits_.erase(std::unique(hits_.begin(), hits_.end()), hits_.end());

    // Global tag ids present in the hits, ascending (hence name order).
    std::vector<TagId> present;
    for (BookmarkId id : hits_) {
        auto tags = index.tags_of(id);
        present.insert(present.end(), tags.begin(), tags.end());
    }
    std::sort(present.begin(), present.end());
    present.erase(std::unique(present.begin(), present.end()), present.end());

    std::unordered_map<TagId, ViewTag> local;
    local.reserve(present.size());
    names_.reserve(present.size());
    for (TagId tid : present) {
        local.emplace(tid, static_cast<ViewTag>(names_.size()));
        names_.push_back(index.tag_name(tid));
    }
    freq_.assign(names_.size(), 0);

    std::vector<ViewTag> row;
    for (BookmarkId id : hits_) {
        row.clear();
        for (TagId tid : index.tags_of(id)) row.push_back(local.at(tid));
        for (std::size_t i = 0; i < row.size(); ++i) {
            ++freq_[row[i]];
            for (std::size_t j = i + 1; j < row.size(); ++j) ++cooc_[pair_key(row[i], row[j])];
        }
        refs_.push_back({id, &index.bookmark(id)});
    }
    stats_ = compute_stats(refs_);

    candidates_.resize(names_.size());
    for (ViewTag t = 0; t < candidates_.size(); ++t) candidates_[t] = t;
    // Ids are already in name order, so a stable sort on frequency suffices.
    std::stable_sort(candidates_.begin(), candidates_.end(),
                     [this](ViewTag x, ViewTag y) { return freq_[x] > freq_[y]; });

    std::vector<std::uint32_t> position(names_.size());
    for (std::size_t i = 0; i < candidates_.size(); ++i) position[candidates_[i]] = i;
    neighbors_.resize(names_.size());
    for (const auto& [key, g] : cooc_) {
        auto x = static_cast<ViewTag>(key >> 32);
        auto y = static_cast<ViewTag>(key & 0xffffffffu);
        neighbors_[x].push_back(y);
        neighbors_[y].push_back(x);
    }
    for (auto& list : neighbors_)
        std::sort(list.begin(), list.end(),
                  [&position](ViewTag x, ViewTag y) { return position[x] < position[y]; });
}

std::vector<HitRef> HitSetView::hit_refs() const { return refs_; }

std::optional<ViewTag> HitSetView::find(std::string_view tag) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), tag);
    if (it == names_.end() || *it != tag) return std::nullopt;
    return static_cast<ViewTag>(it - names_.begin());
}

std::uint64_t HitSetView::pair_key(ViewTag x, ViewTag y) {
    if (x > y) std::swap(x, y);
    return (static_cast<std::uint64_t>(x) << 32) | y;
}

std::uint32_t HitSetView::cooccurrence(ViewTag x, ViewTag y) const {
    if (x == y) return 0;
    auto it = cooc_.find(pair_key(x, y));
    return it == cooc_.end() ? 0 : it->second;
}

double HitSetView::similarity(Measure m, ViewTag x, ViewTag y) const {
    return coincidence(m, {freq_.at(x), freq_.at(y), cooccurrence(x, y)});
}

}  // namespace tagclust
