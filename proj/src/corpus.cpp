// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

#include "tagclust/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unordered_set>

#include <json.hpp>
#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

namespace tagclust {

using json = nlohmann::json;

int Bookmark::total_tags() const {
    int total = 0;
    for (const auto& [tag, count] : tag_counts) total += count;
    return total;
}

int Bookmark::count_of(std::string_view tag) const {
    auto it = tag_counts.find(std::string(tag));
    return it == tag_counts.end() ? 0 : it->second;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n\f\v";
    auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

void add_tag(std::map<std::string, int>& counts, std::string_view raw, int count) {
    std::string tag = normalize_tag(raw);
    if (tag.empty()) return;
    counts[tag] += count;
}

Bookmark parse_record(const std::string& line, std::size_t line_no) {
    json record;
    try {
        record = json::parse(line);
    } catch (const json::parse_error& e) {
        throw ParseError(line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!record.is_object()) throw ParseError(line_no, "record is not a JSON object");

    Bookmark bookmark;
    auto url = record.find("url");
    if (url == record.end() || !url->is_string())
        throw ParseError(line_no, "missing string field \"url\"");
    bookmark.url = std::string(trim(url->get_ref<const std::string&>()));
    if (bookmark.url.empty()) throw ParseError(line_no, "empty \"url\"");

    if (auto title = record.find("title"); title != record.end() && !title->is_null()) {
        if (!title->is_string()) throw ParseError(line_no, "\"title\" must be a string");
        bookmark.title = title->get<std::string>();
    }

    auto tags = record.find("tags");
    if (tags == record.end()) throw ParseError(line_no, "missing field \"tags\"");
    if (tags->is_array()) {
        for (const auto& tag : *tags) {
            if (!tag.is_string()) throw ParseError(line_no, "tag list entries must be strings");
            add_tag(bookmark.tag_counts, tag.get_ref<const std::string&>(), 1);
        }
    } else if (tags->is_object()) {
        for (const auto& [tag, count] : tags->items()) {
            if (!count.is_number_integer() || count.get<long long>() < 1 ||
                count.get<long long>() > 1'000'000'000)
                throw ParseError(line_no, "count for tag \"" + tag + "\" must be a positive integer");
            add_tag(bookmark.tag_counts, tag, count.get<int>());
        }
    } else {
        throw ParseError(line_no, "\"tags\" must be an object or an array");
    }
    return bookmark;
}

}  // namespace

std::string normalize_tag(std::string_view raw) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) throw std::runtime_error("ICU NFC normalizer unavailable");

    icu::UnicodeString text = icu::UnicodeString::fromUTF8(
        icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
    icu::UnicodeString normalized = nfc->normalize(text, status);
    if (U_FAILURE(status)) throw std::runtime_error("NFC normalization failed");
    normalized.trim();
    normalized.toLower(icu::Locale::getRoot());
    // Lowercasing can produce non-NFC sequences for a few code points.
    normalized = nfc->normalize(normalized, status);
    if (U_FAILURE(status)) throw std::runtime_error("NFC normalization failed");

    std::string out;
    normalized.toUTF8String(out);
    return std::string(trim(out));
}

Corpus load_corpus(std::istream& in) {
    Corpus corpus;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        Bookmark bookmark = parse_record(line, line_no);
        if (bookmark.tag_counts.empty()) {
            ++corpus.malformed_dropped;
            continue;
        }
        if (!seen.insert(bookmark.url).second) {
            ++corpus.duplicates_dropped;
            continue;
        }
        corpus.bookmarks.push_back(std::move(bookmark));
    }
    return corpus;
}

Corpus load_corpus(std::string_view text) {
    std::istringstream in{std::string(text)};
    return load_corpus(in);
}

Corpus load_corpus_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::system_error(std::make_error_code(std::errc::no_such_file_or_directory),
                                path.string());
    return load_corpus(in);
}

FolksonomyIndex::FolksonomyIndex(Corpus corpus) : corpus_(std::move(corpus)) {
    for (const auto& bookmark : corpus_.bookmarks)
        for (const auto& [tag, count] : bookmark.tag_counts) tags_.push_back(tag);
    std::sort(tags_.begin(), tags_.end());
    tags_.erase(std::unique(tags_.begin(), tags_.end()), tags_.end());

    postings_.resize(tags_.size());
    bookmark_tags_.resize(corpus_.bookmarks.size());
    for (BookmarkId id = 0; id < corpus_.bookmarks.size(); ++id) {
        auto& ids = bookmark_tags_[id];
        // tag_counts is an ordered map, so ids come out ascending.
        for (const auto& [tag, count] : corpus_.bookmarks[id].tag_counts) {
            TagId tid = *find_tag(tag);
            ids.push_back(tid);
            postings_[tid].push_back(id);
        }
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j) ++cooc_[pair_key(ids[i], ids[j])];
    }
}

std::optional<TagId> FolksonomyIndex::find_tag(std::string_view tag) const {
    auto it = std::lower_bound(tags_.begin(), tags_.end(), tag);
    if (it == tags_.end() || *it != tag) return std::nullopt;
    return static_cast<TagId>(it - tags_.begin());
}

std::span<const BookmarkId> FolksonomyIndex::postings(std::string_view tag) const {
    auto id = find_tag(tag);
    if (!id) return {};
    return postings_[*id];
}

std::uint64_t FolksonomyIndex::pair_key(TagId a, TagId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::uint32_t FolksonomyIndex::cooccurrence(TagId a, TagId b) const {
    if (a == b) return 0;
    auto it = cooc_.find(pair_key(a, b));
    return it == cooc_.end() ? 0 : it->second;
}

std::uint32_t FolksonomyIndex::cooccurrence(std::string_view a, std::string_view b) const {
    auto ia = find_tag(a);
    auto ib = find_tag(b);
    if (!ia || !ib) return 0;
    return cooccurrence(*ia, *ib);
}

FolksonomyIndex build_index(Corpus corpus) { return FolksonomyIndex(std::move(corpus)); }

}  // namespace tagclust
