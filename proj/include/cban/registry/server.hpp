// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <httplib.h>

#include "cban/registry/registry.hpp"

namespace cban::registry {

// Registers the full endpoint set on an httplib server:
//   GET  /root.json                      exact signed root bytes
//   GET  /meta/{ns}/{name}/{ver}.json    exact manifest bytes
//   GET  /pkg/{ns}/{name}/{ver}.tar.gz   exact archive bytes
//   GET  /audit/{ns}/{name}.json         audit event list
//   GET  /search?q=...                   latest matching entries
//   POST /publish                        archive body, X-Author header
//   POST /transfer                       JSON body, X-Actor header
//   POST /register-author                JSON body, X-Actor header
// Errors come back as canonical JSON {code, message}.
void attach_routes(Registry& registry, httplib::Server& server);

int http_status_for(Errc code);

}  // namespace cban::registry
