// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

/**
 * @file ranking.hpp
 * @brief Hit ordering by accumulated tag frequency or by WDF*ITF.
 *
 *   WDF(t, b) = log2(freq(t, b) + 1) / log2(L(b))      (1 when L(b) == 1)
 *   ITF(t)    = log2(M / m(t)) + 1
 *
 * M and m(t) are counted over the initial hit set of a query, never over the
 * whole corpus.
 */

#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <optional>
#include <vector>

#include "tagclust/corpus.hpp"

namespace tagclust {

enum class Ranking { absolute, wdf_itf };

std::string_view to_string(Ranking r);
std::optional<Ranking> parse_ranking(std::string_view name);

struct HitRef {
    BookmarkId id = 0;
    const Bookmark* bookmark = nullptr;
};

/// Tag-token statistics of a hit set.
struct HitSetStats {
    long long total_tokens = 0;                    // M
    std::map<std::string, long long> occurrences;  // m(t)

    long long occurrences_of(std::string_view tag) const;
};

HitSetStats compute_stats(std::span<const HitRef> hits);

struct RankedHit {
    BookmarkId id = 0;
    double score = 0.0;
    std::size_t rank = 0;  // 1-based
};

double wdf(int freq, int total_tags);
double itf(long long total_tokens, long long occurrences);

/// Score = sum over query tags of freq(t, b). Throws std::invalid_argument
/// for an empty tag list.
std::vector<RankedHit> rank_absolute(std::span<const HitRef> hits,
                                     std::span<const std::string> query_tags);

/// Score = sum over query tags of WDF(t, b) * ITF(t). Throws
/// std::invalid_argument for an empty tag list or a query tag absent from
/// `stats`.
std::vector<RankedHit> rank_wdf_itf(std::span<const HitRef> hits,
                                    std::span<const std::string> query_tags,
                                    const HitSetStats& stats);

}  // namespace tagclust
