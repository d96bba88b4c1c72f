// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#include "cban/registry/server.hpp"

#include "cban/core/canonical_json.hpp"
#include "cban/core/fsutil.hpp"

namespace cban::registry {

using nlohmann::json;

int http_status_for(Errc code) {
  switch (code) {
    case Errc::not_owner:
    case Errc::not_authorized:
      return 403;
    case Errc::unknown_package:
    case Errc::unknown_author:
      return 404;
    case Errc::duplicate_version:
    case Errc::duplicate_author:
      return 409;
    case Errc::store_corrupt:
    case Errc::io_error:
      return 500;
    default:
      return 400;
  }
}

namespace {

void send_error(httplib::Response& res, Errc code, const std::string& message) {
  res.status = http_status_for(code);
  res.set_content(
      canonical_encode({{"code", std::string(errc_name(code))}, {"message", message}}),
      "application/json");
}

void send_json(httplib::Response& res, const json& doc) {
  res.set_content(canonical_encode(doc), "application/json");
}

template <typename Fn>
void guarded(httplib::Response& res, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    send_error(res, e.code(), e.detail());
  } catch (const std::exception& e) {
    send_error(res, Errc::io_error, e.what());
  }
}

// Path captures are re-parsed through the strict grammars before they
// go anywhere near the filesystem.
PackageCoord coord_from(const httplib::Request& req, int ns_group, int name_group) {
  return PackageCoord::parse(req.matches[ns_group].str() + "/" +
                             req.matches[name_group].str());
}

}  // namespace

void attach_routes(Registry& registry, httplib::Server& server) {
  server.set_payload_max_length(registry.config().max_archive_bytes + (1 << 20));

  server.Get("/root.json", [&registry](const httplib::Request&, httplib::Response& res) {
    guarded(res, [&] { res.set_content(registry.root_bytes(), "application/json"); });
  });

  server.Get(R"(^/meta/([^/]+)/([^/]+)/([^/]+)\.json$)",
             [&registry](const httplib::Request& req, httplib::Response& res) {
               guarded(res, [&] {
                 PackageCoord coord = coord_from(req, 1, 2);
                 Version version = Version::parse(req.matches[3].str());
                 auto bytes = read_file_if_exists(registry.manifest_path(coord, version));
                 if (!bytes) {
                   throw Error(Errc::unknown_package,
                               "no manifest for " + coord.str() + "@" + version.str());
                 }
                 res.set_content(*bytes, "application/json");
               });
             });

  server.Get(R"(^/pkg/([^/]+)/([^/]+)/([^/]+)\.tar\.gz$)",
             [&registry](const httplib::Request& req, httplib::Response& res) {
               guarded(res, [&] {
                 PackageCoord coord = coord_from(req, 1, 2);
                 Version version = Version::parse(req.matches[3].str());
                 auto bytes = read_file_if_exists(registry.archive_path(coord, version));
                 if (!bytes) {
                   throw Error(Errc::unknown_package,
                               "no archive for " + coord.str() + "@" + version.str());
                 }
                 res.set_content(*bytes, "application/gzip");
               });
             });

  server.Get(R"(^/audit/([^/]+)/([^/]+)\.json$)",
             [&registry](const httplib::Request& req, httplib::Response& res) {
               guarded(res, [&] {
                 PackageCoord coord = coord_from(req, 1, 2);
                 json arr = json::array();
                 for (const AuditEvent& e : registry.audit_log(coord)) {
                   arr.push_back(e.to_json());
                 }
                 send_json(res, arr);
               });
             });

  server.Get("/search", [&registry](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      std::string query = req.get_param_value("q");
      json arr = json::array();
      for (const PackageEntry& e : registry.search(query)) arr.push_back(e.to_json());
      send_json(res, arr);
    });
  });

  server.Post("/publish", [&registry](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      std::string author = req.get_header_value("X-Author");
      if (author.empty()) {
        throw Error(Errc::policy_violation, "missing X-Author header");
      }
      PackageEntry entry = registry.publish(req.body, author);
      send_json(res, entry.to_json());
    });
  });

  server.Post("/transfer", [&registry](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      std::string actor = req.get_header_value("X-Actor");
      if (actor.empty()) {
        throw Error(Errc::not_authorized, "missing X-Actor header");
      }
      json body = json::parse(req.body, nullptr, false);
      if (body.is_discarded() || !body.is_object()) {
        throw Error(Errc::malformed_document, "transfer body must be a JSON object");
      }
      PackageCoord coord = PackageCoord::parse(body.at("namespace").get<std::string>() +
                                               "/" + body.at("name").get<std::string>());
      OwnershipRecord rec = registry.transfer_ownership(
          coord, body.at("new_owner").get<std::string>(), actor);
      send_json(res, {{"created_at", rec.created_at},
                      {"name", rec.coord.name},
                      {"namespace", rec.coord.ns},
                      {"owner_id", rec.owner_id}});
    });
  });

  server.Post("/register-author",
              [&registry](const httplib::Request& req, httplib::Response& res) {
                guarded(res, [&] {
                  std::string actor = req.get_header_value("X-Actor");
                  if (actor.empty()) {
                    throw Error(Errc::not_authorized, "missing X-Actor header");
                  }
                  json body = json::parse(req.body, nullptr, false);
                  if (body.is_discarded() || !body.is_object()) {
                    throw Error(Errc::malformed_document,
                                "register-author body must be a JSON object");
                  }
                  auto authors = registry.register_author(
                      body.at("author_id").get<std::string>(),
                      body.at("public_key").get<std::string>(), actor);
                  json out = json::object();
                  for (const auto& [id, key] : authors) out[id] = key;
                  send_json(res, out);
                });
              });
}

}  // namespace cban::registry
