// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tagclust Contributors

#include "tagclust/service.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <httplib.h>
#include <json.hpp>

namespace tagclust {

using json = nlohmann::json;

namespace {

template <typename T>
bool parse_number(std::string_view text, T& out) {
    if (text.empty()) return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size();
}

HttpResponse json_response(int status, const json& body) { return {status, body.dump()}; }

HttpResponse field_error(const FieldError& e) {
    return json_response(422, {{"error", e.what()}, {"field", e.field()}});
}

const std::string* single(const QueryParams& params, const std::string& key) {
    auto it = params.find(key);
    return it == params.end() ? nullptr : &it->second;
}

std::size_t parse_positive(const QueryParams& params, const std::string& key, std::size_t fallback) {
    const std::string* raw = single(params, key);
    if (!raw) return fallback;
    long long value = 0;
    if (!parse_number(*raw, value) || value < 1)
        throw FieldError(key, key + " must be an integer >= 1");
    return static_cast<std::size_t>(value);
}

const char* env(const char* name) {
    const char* value = std::getenv(name);
    return value && *value ? value : nullptr;
}

}  // namespace

FieldError::FieldError(std::string field, const std::string& message)
    : std::invalid_argument(message), field_(std::move(field)) {}

void ServiceConfig::validate() const {
    if (port < 0 || port > 65535) throw std::invalid_argument("port must lie in [0, 65535]");
    if (max_corpus_bytes == 0) throw std::invalid_argument("max corpus bytes must be positive");
    defaults.validate();
}

ServiceConfig ServiceConfig::from_env(ServiceConfig base) {
    if (const char* v = env("LISTEN_PORT")) {
        if (!parse_number(std::string_view(v), base.port))
            throw std::invalid_argument("LISTEN_PORT is not an integer");
    }
    if (const char* v = env("MAX_CORPUS_BYTES")) {
        if (!parse_number(std::string_view(v), base.max_corpus_bytes))
            throw std::invalid_argument("MAX_CORPUS_BYTES is not an integer");
    }
    if (const char* v = env("DEFAULT_THRESHOLD")) {
        if (!parse_number(std::string_view(v), base.defaults.cluster.threshold))
            throw std::invalid_argument("DEFAULT_THRESHOLD is not a number");
    }
    if (const char* v = env("DEFAULT_MEASURE")) {
        auto m = parse_measure(v);
        if (!m) throw std::invalid_argument("DEFAULT_MEASURE must be dice, cosine or jaccard");
        base.defaults.cluster.measure = *m;
    }
    if (const char* v = env("DEFAULT_METHOD")) {
        auto l = parse_linkage(v);
        if (!l) throw std::invalid_argument("DEFAULT_METHOD must be single, complete or group_average");
        base.defaults.cluster.method = *l;
    }
    if (const char* v = env("DEFAULT_RANKING")) {
        auto r = parse_ranking(v);
        if (!r) throw std::invalid_argument("DEFAULT_RANKING must be absolute or wdf_itf");
        base.defaults.ranking = *r;
    }
    if (const char* v = env("SUPPORT_FLOOR")) {
        if (!parse_number(std::string_view(v), base.defaults.cluster.support_floor))
            throw std::invalid_argument("SUPPORT_FLOOR is not an integer");
    }
    base.validate();
    return base;
}

ServiceConfig ServiceConfig::from_env() { return from_env(ServiceConfig{}); }

ParsedQuery parse_query_params(const QueryParams& params, const QueryOptions& defaults) {
    ParsedQuery parsed;
    parsed.options = defaults;
    auto& cluster = parsed.options.cluster;

    if (const std::string* v = single(params, "measure")) {
        auto m = parse_measure(*v);
        if (!m) throw FieldError("measure", "measure must be one of dice, cosine, jaccard");
        cluster.measure = *m;
    }
    if (const std::string* v = single(params, "method")) {
        auto l = parse_linkage(*v);
        if (!l) throw FieldError("method", "method must be one of single, complete, group_average");
        cluster.method = *l;
    }
    if (const std::string* v = single(params, "threshold")) {
        double t = 0.0;
        if (!parse_number(std::string_view(*v), t) || !(t >= 0.0 && t <= 1.0))
            throw FieldError("threshold", "threshold must be a number in [0, 1]");
        cluster.threshold = t;
    }
    if (const std::string* v = single(params, "ranking")) {
        auto r = parse_ranking(*v);
        if (!r) throw FieldError("ranking", "ranking must be one of absolute, wdf_itf");
        parsed.options.ranking = *r;
    }
    cluster.support_floor =
        static_cast<std::uint32_t>(parse_positive(params, "support_floor", cluster.support_floor));
    parsed.options.page = parse_positive(params, "page", parsed.options.page);
    parsed.options.page_size = parse_positive(params, "page_size", parsed.options.page_size);

    const std::string* q = single(params, "q");
    if (!q) throw FieldError("q", "missing query term q");
    std::vector<std::string> refinements;
    auto [first, last] = params.equal_range("and");
    for (auto it = first; it != last; ++it) refinements.push_back(it->second);
    try {
        parsed.query = make_query(*q, refinements);
    } catch (const std::invalid_argument& e) {
        throw FieldError(normalize_tag(*q).empty() ? "q" : "and", e.what());
    }
    return parsed;
}

Service::Service(ServiceConfig config) : config_(std::move(config)) { config_.validate(); }

std::shared_ptr<const FolksonomyIndex> Service::snapshot() const {
    std::shared_lock lock(mutex_);
    return index_;
}

void Service::replace_index(FolksonomyIndex index) {
    auto next = std::make_shared<const FolksonomyIndex>(std::move(index));
    std::unique_lock lock(mutex_);
    index_ = std::move(next);
}

HttpResponse Service::post_corpus(std::string_view body) {
    if (body.size() > config_.max_corpus_bytes)
        return json_response(413, {{"error", "corpus exceeds " +
                                                 std::to_string(config_.max_corpus_bytes) +
                                                 " bytes"}});
    Corpus corpus;
    try {
        corpus = load_corpus(body);
    } catch (const ParseError& e) {
        return json_response(400, {{"error", e.what()}, {"line", e.line()}});
    }
    FolksonomyIndex index = build_index(std::move(corpus));
    json summary = {{"bookmarks", index.bookmarks().size()},
                    {"tags", index.tag_count()},
                    {"duplicates_dropped", index.corpus().duplicates_dropped},
                    {"malformed_dropped", index.corpus().malformed_dropped}};
    replace_index(std::move(index));
    return json_response(200, summary);
}

HttpResponse Service::get_query(const QueryParams& params) const {
    ParsedQuery parsed;
    try {
        parsed = parse_query_params(params, config_.defaults);
    } catch (const FieldError& e) {
        return field_error(e);
    }
    auto index = snapshot();
    static const FolksonomyIndex empty_index;
    QueryResult result = execute(index ? *index : empty_index, parsed.query, parsed.options);
    return {200, to_json(result)};
}

HttpResponse Service::get_top_tags(const QueryParams& params) const {
    std::size_t n = 0;
    try {
        n = parse_positive(params, "n", 10);
    } catch (const FieldError& e) {
        return field_error(e);
    }
    json out = json::array();
    auto index = snapshot();
    if (!index) return json_response(200, out);

    std::vector<TagId> ids(index->tag_count());
    for (TagId t = 0; t < ids.size(); ++t) ids[t] = t;
    // Ids follow name order, so stability gives the lexicographic tie-break.
    std::stable_sort(ids.begin(), ids.end(), [&index](TagId x, TagId y) {
        return index->postings(x).size() > index->postings(y).size();
    });
    ids.resize(std::min(n, ids.size()));
    for (TagId t : ids) out.push_back({{"tag", index->tag_name(t)}, {"freq", index->postings(t).size()}});
    return json_response(200, out);
}

HttpResponse Service::get_health() const {
    return json_response(200, {{"status", "ok"}, {"corpus_loaded", snapshot() != nullptr}});
}

struct HttpServer::Impl {
    Service& service;
    httplib::Server server;

    explicit Impl(Service& s) : service(s) {}
};

namespace {

QueryParams to_params(const httplib::Request& req) {
    return QueryParams(req.params.begin(), req.params.end());
}

void reply(httplib::Response& res, const HttpResponse& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json; charset=utf-8");
}

}  // namespace

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>(service)) {
    auto& server = impl_->server;
    Service& svc = impl_->service;
    const auto& config = svc.config();

    // The library default sets SO_REUSEPORT, which lets a second instance share the port.
    server.set_socket_options([](socket_t sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
    });
    server.set_payload_max_length(config.max_corpus_bytes);
    server.set_default_headers({{"Access-Control-Allow-Origin", config.cors_origin},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    server.Post("/corpus", [&svc](const httplib::Request& req, httplib::Response& res) {
        reply(res, svc.post_corpus(req.body));
    });
    server.Get("/query", [&svc](const httplib::Request& req, httplib::Response& res) {
        reply(res, svc.get_query(to_params(req)));
    });
    server.Get("/tags/top", [&svc](const httplib::Request& req, httplib::Response& res) {
        reply(res, svc.get_top_tags(to_params(req)));
    });
    server.Get("/healthz", [&svc](const httplib::Request&, httplib::Response& res) {
        reply(res, svc.get_health());
    });
    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (res.body.empty()) {
            json body = {{"error", httplib::status_message(res.status)}};
            res.set_content(body.dump(), "application/json; charset=utf-8");
        }
    });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
    if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace tagclust
