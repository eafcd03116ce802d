// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

#include "tagclust/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tagclust {

std::string_view to_string(Measure m) {
    switch (m) {
        case Measure::dice: return "dice";
        case Measure::cosine: return "cosine";
        case Measure::jaccard: return "jaccard";
    }
    return "unknown";
}

std::optional<Measure> parse_measure(std::string_view name) {
    if (name == "dice") return Measure::dice;
    if (name == "cosine") return Measure::cosine;
    if (name == "jaccard") return Measure::jaccard;
    return std::nullopt;
}

void validate(const SimilarityInput& in) {
    if (in.a == 0 || in.b == 0)
        throw std::domain_error("tag counts a and b must be positive");
    if (in.g > std::min(in.a, in.b))
        throw std::domain_error("co-occurrence g=" + std::to_string(in.g) +
                                " exceeds min(a, b)");
}

double dice(const SimilarityInput& in) {
    validate(in);
    return 2.0 * static_cast<double>(in.g) / static_cast<double>(in.a + in.b);
}

double cosine(const SimilarityInput& in) {
    validate(in);
    if (in.a == in.b) return static_cast<double>(in.g) / static_cast<double>(in.a);
    return static_cast<double>(in.g) /
           std::sqrt(static_cast<double>(in.a) * static_cast<double>(in.b));
}

double jaccard(const SimilarityInput& in) {
    validate(in);
    return static_cast<double>(in.g) / static_cast<double>(in.a + in.b - in.g);
}

double coincidence(Measure m, const SimilarityInput& in) {
    switch (m) {
        case Measure::dice: return dice(in);
        case Measure::cosine: return cosine(in);
        case Measure::jaccard: return jaccard(in);
    }
    throw std::invalid_argument("unknown similarity measure");
}

}  // namespace tagclust
