// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

/**
 * @file query_engine.hpp
 * @brief One query round trip: AND retrieval, hit-set view, cluster, ranking
 *        and display model.
 *
 * Refinement is purely additive. Clicking a vertex ANDs one tag onto the
 * query, clicking an edge ANDs both endpoints.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tagclust/clustering.hpp"
#include "tagclust/corpus.hpp"
#include "tagclust/ranking.hpp"
#include "tagclust/viz_model.hpp"

namespace tagclust {

struct Query {
    std::string base;
    std::vector<std::string> refinements;

    /// base followed by refinements.
    std::vector<std::string> terms() const;

    friend bool operator==(const Query&, const Query&) = default;
};

/// Normalizes every term like corpus tags, drops duplicates and repeats of
/// the base. Throws std::invalid_argument when the base normalizes to empty.
Query make_query(std::string_view base, const std::vector<std::string>& refinements = {});

Query refine_vertex(Query query, std::string_view tag);
/// Throws std::invalid_argument when both endpoints are the same tag.
Query refine_edge(Query query, std::string_view tag_a, std::string_view tag_b);

inline constexpr std::size_t kDefaultPageSize = 20;

struct QueryOptions {
    ClusterParams cluster;
    Ranking ranking = Ranking::absolute;
    std::size_t page = 1;  // 1-based
    std::size_t page_size = kDefaultPageSize;

    /// Throws std::invalid_argument on bad cluster params or zero page values.
    void validate() const;
};

struct ResultHit {
    std::size_t rank = 0;
    BookmarkId id = 0;
    std::string url;
    std::optional<std::string> title;
    double score = 0.0;
};

struct QueryResult {
    Query query;
    QueryOptions options;
    std::size_t hit_count = 0;
    std::vector<ResultHit> hits;  // requested page only
    std::optional<SeedPair> seeds;
    DisplayGraph graph;
};

/// Bookmark ids carrying every query term, ascending. Empty if any term is
/// unknown to the index.
std::vector<BookmarkId> match_all(const FolksonomyIndex& index, const Query& query);

QueryResult execute(const FolksonomyIndex& index, const Query& query, const QueryOptions& options);

/// Stable JSON shape shared by the CLI and the HTTP service.
std::string to_json(const QueryResult& result);
/// rank, score (6 decimals) and url per line under a header row.
std::string to_table(const QueryResult& result);

}  // namespace tagclust
