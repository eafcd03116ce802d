// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

#include "tagclust/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tagclust {

std::string_view to_string(Ranking r) {
    return r == Ranking::absolute ? "absolute" : "wdf_itf";
}

std::optional<Ranking> parse_ranking(std::string_view name) {
    if (name == "absolute") return Ranking::absolute;
    if (name == "wdf_itf") return Ranking::wdf_itf;
    return std::nullopt;
}

long long HitSetStats::occurrences_of(std::string_view tag) const {
    auto it = occurrences.find(std::string(tag));
    return it == occurrences.end() ? 0 : it->second;
}

HitSetStats compute_stats(std::span<const HitRef> hits) {
    HitSetStats stats;
    for (const auto& hit : hits) {
        for (const auto& [tag, count] : hit.bookmark->tag_counts) {
            stats.occurrences[tag] += count;
            stats.total_tokens += count;
        }
    }
    return stats;
}

double wdf(int freq, int total_tags) {
    if (total_tags <= 1) return 1.0;
    return std::log2(static_cast<double>(freq) + 1.0) / std::log2(static_cast<double>(total_tags));
}

double itf(long long total_tokens, long long occurrences) {
    if (occurrences <= 0 || occurrences > total_tokens)
        throw std::invalid_argument("tag occurrences must lie in [1, M]");
    return std::log2(static_cast<double>(total_tokens) / static_cast<double>(occurrences)) + 1.0;
}

namespace {

struct Scored {
    HitRef hit;
    double score;
    int total_tags;
};

std::vector<RankedHit> order(std::vector<Scored> scored) {
    std::sort(scored.begin(), scored.end(), [](const Scored& x, const Scored& y) {
        if (x.score != y.score) return x.score > y.score;
        if (x.total_tags != y.total_tags) return x.total_tags > y.total_tags;
        return x.hit.bookmark->url < y.hit.bookmark->url;
    });
    std::vector<RankedHit> ranked;
    ranked.reserve(scored.size());
    for (std::size_t i = 0; i < scored.size(); ++i)
        ranked.push_back({scored[i].hit.id, scored[i].score, i + 1});
    return ranked;
}

void require_tags(std::span<const std::string> query_tags) {
    if (query_tags.empty()) throw std::invalid_argument("ranking needs at least one query tag");
}

}  // namespace

std::vector<RankedHit> rank_absolute(std::span<const HitRef> hits,
                                     std::span<const std::string> query_tags) {
    require_tags(query_tags);
    std::vector<Scored> scored;
    scored.reserve(hits.size());
    for (const auto& hit : hits) {
        double score = 0.0;
        for (const auto& tag : query_tags) score += hit.bookmark->count_of(tag);
        scored.push_back({hit, score, hit.bookmark->total_tags()});
    }
    return order(std::move(scored));
}

std::vector<RankedHit> rank_wdf_itf(std::span<const HitRef> hits,
                                    std::span<const std::string> query_tags,
                                    const HitSetStats& stats) {
    require_tags(query_tags);
    std::vector<double> itfs;
    for (const auto& tag : query_tags) {
        long long m = stats.occurrences_of(tag);
        if (m == 0) throw std::invalid_argument("query tag \"" + tag + "\" missing from hit-set statistics");
        itfs.push_back(itf(stats.total_tokens, m));
    }

    std::vector<Scored> scored;
    scored.reserve(hits.size());
    for (const auto& hit : hits) {
        const int total = hit.bookmark->total_tags();
        double score = 0.0;
        for (std::size_t i = 0; i < query_tags.size(); ++i) {
            int freq = hit.bookmark->count_of(query_tags[i]);
            if (freq > 0) score += wdf(freq, total) * itfs[i];
        }
        scored.push_back({hit, score, total});
    }
    return order(std::move(scored));
}

}  // namespace tagclust
