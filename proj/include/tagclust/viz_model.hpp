// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

/**
 * @file viz_model.hpp
 * @brief Display model of a tag cluster: ten font-size classes for vertices,
 *        ten line-width classes for edges, serialized as JSON or DOT.
 *
 * Classes come from min-max normalization over the graph being displayed:
 *
 *     bin = 1 + floor(9 * (x - min) / (max - min)),  x == max -> 10
 *
 * A degenerate range (max == min) puts everything in class 5.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tagclust/clustering.hpp"

namespace tagclust {

inline constexpr int kBinCount = 10;
inline constexpr int kDegenerateBin = 5;

struct DisplayVertex {
    std::string tag;
    std::uint32_t freq = 0;
    int size_bin = kDegenerateBin;

    friend bool operator==(const DisplayVertex&, const DisplayVertex&) = default;
};

struct DisplayEdge {
    std::string a;
    std::string b;
    double phi = 0.0;
    int width_bin = kDegenerateBin;

    friend bool operator==(const DisplayEdge&, const DisplayEdge&) = default;
};

/// Vertices sorted by tag, edges by (a, b).
struct DisplayGraph {
    std::vector<DisplayVertex> vertices;
    std::vector<DisplayEdge> edges;

    bool empty() const noexcept { return vertices.empty(); }

    friend bool operator==(const DisplayGraph&, const DisplayGraph&) = default;
};

/// Min-max class of every value, in input order.
std::vector<int> min_max_bins(std::span<const double> values);

std::vector<int> bin_vertices(const TagGraph& graph);
std::vector<int> bin_edges(const TagGraph& graph);

DisplayGraph to_display(const TagGraph& graph);

/// Canonical JSON; phi rounded to 6 decimals.
std::string to_json(const DisplayGraph& dg);
/// Inverse of to_json. Throws std::invalid_argument on schema violations.
DisplayGraph display_graph_from_json(const std::string& text);

/// Undirected DOT graph, fontsize = 8 + 2 * size_bin, penwidth = width_bin.
std::string to_dot(const DisplayGraph& dg);

}  // namespace tagclust
