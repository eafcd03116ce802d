// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

/**
 * @file similarity.hpp
 * @brief Coincidence values between two tags from bookmark co-occurrence counts.
 *
 * For tags A and B: a bookmarks carry A, b carry B, g carry both.
 *
 *   dice     = 2g / (a + b)
 *   cosine   = g / sqrt(a * b)
 *   jaccard  = g / (a + b - g)      (Jaccard-Sneath)
 *
 * All three lie in [0, 1]; 0 iff g == 0, 1 iff a == b == g.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace tagclust {

enum class Measure { dice, cosine, jaccard };

std::string_view to_string(Measure m);
std::optional<Measure> parse_measure(std::string_view name);

struct SimilarityInput {
    std::uint64_t a = 0;  // bookmarks containing tag A, >= 1
    std::uint64_t b = 0;  // bookmarks containing tag B, >= 1
    std::uint64_t g = 0;  // bookmarks containing both, <= min(a, b)
};

/// Throws std::domain_error when the counts are inconsistent.
void validate(const SimilarityInput& in);

double dice(const SimilarityInput& in);
double cosine(const SimilarityInput& in);
double jaccard(const SimilarityInput& in);

double coincidence(Measure m, const SimilarityInput& in);

}  // namespace tagclust
