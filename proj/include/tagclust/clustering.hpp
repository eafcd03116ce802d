// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

/**
 * @file clustering.hpp
 * @brief Growth of a single tag cluster around the most similar seed pair.
 *
 * All three methods start from a seed pair (A, B) and admit candidate tags
 * in a fixed order: descending hit-set frequency, then by name. A candidate
 * is admitted through an edge only when the pair co-occurs at least once and
 * its coincidence value reaches the threshold (inclusive).
 *
 *  - single link:   admit a tag similar enough to ANY member; the admitting
 *                   edge is recorded. Result is a tree rooted at the seed edge.
 *  - complete link: admit a tag similar enough to EVERY member; the result
 *                   carries all pairwise edges between members.
 *  - group average: run single link, average the admitting similarities,
 *                   cap the mean at phi(A, B) and re-run single link with it.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tagclust/hit_set_view.hpp"
#include "tagclust/similarity.hpp"

namespace tagclust {

enum class Linkage { single_link, complete_link, group_average };

std::string_view to_string(Linkage l);
/// Accepts "single", "complete", "group_average" and the *_link spellings.
std::optional<Linkage> parse_linkage(std::string_view name);

struct ClusterParams {
    Measure measure = Measure::cosine;
    Linkage method = Linkage::single_link;
    double threshold = 0.5;
    std::uint32_t support_floor = 50;

    /// Throws std::invalid_argument on a threshold outside [0, 1] or a zero floor.
    void validate() const;
};

struct TagVertex {
    std::string tag;
    std::uint32_t freq = 0;

    friend bool operator==(const TagVertex&, const TagVertex&) = default;
};

struct TagEdge {
    std::string a;  // a < b
    std::string b;
    double phi = 0.0;

    friend bool operator==(const TagEdge&, const TagEdge&) = default;
};

/// Undirected weighted tag graph. Vertices keep discovery order.
struct TagGraph {
    std::vector<TagVertex> vertices;
    std::vector<TagEdge> edges;

    bool contains(std::string_view tag) const;
    /// Vertex names, sorted.
    std::vector<std::string> vertex_names() const;
    const TagEdge* find_edge(std::string_view x, std::string_view y) const;

    friend bool operator==(const TagGraph&, const TagGraph&) = default;
};

struct SeedPair {
    std::string first;  // first < second
    std::string second;

    friend bool operator==(const SeedPair&, const SeedPair&) = default;
};

class NoSeedPair : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Complete link cannot start from seeds that fail the threshold themselves.
class SeedBelowThreshold : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pair with the highest coincidence value among pairs co-occurring in at
/// least `support_floor` hits. Ties: larger co-occurrence, then name order.
SeedPair select_seed_pair(const HitSetView& view, Measure measure, std::uint32_t support_floor);

TagGraph single_link(const HitSetView& view, const SeedPair& seeds, const ClusterParams& params);
TagGraph complete_link(const HitSetView& view, const SeedPair& seeds, const ClusterParams& params);
TagGraph group_average(const HitSetView& view, const SeedPair& seeds, const ClusterParams& params);

/// Threshold used by the final single-link pass of group average, or nullopt
/// when the first pass admits nothing.
std::optional<double> group_average_threshold(const HitSetView& view, const SeedPair& seeds,
                                              const ClusterParams& params);

/// Dispatches on params.method.
TagGraph grow_cluster(const HitSetView& view, const SeedPair& seeds, const ClusterParams& params);

}  // namespace tagclust
