/*
 * Copyright 2026 The adaudit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "adaudit/http_server.h"

#include "adaudit/domain.h"
#include "adaudit/query_service.h"
#include "httplib.h"

namespace adaudit {

struct HttpServer::Impl {
  QueryService& service;
  httplib::Server server;

  explicit Impl(QueryService& s) : service(s) {}

  void Forward(const httplib::Request& req, httplib::Response& res) {
    ApiRequest api;
    api.method = req.method;
    api.path = req.path;
    for (const auto& [k, v] : req.params) api.query.emplace(k, v);
    for (const auto& [k, v] : req.headers) api.headers.emplace(AsciiLower(k), v);
    api.body = req.body;
    api.client = req.remote_addr;
    ApiResponse r = service.Handle(api);
    res.status = r.http_status;
    res.set_content(r.body, "application/json");
  }
};

HttpServer::HttpServer(QueryService& service,
                       std::optional<std::filesystem::path> static_dir)
    : impl_(std::make_unique<Impl>(service)) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    impl_->Forward(req, res);
  };
  impl_->server.Get(R"(/api/v1/.*)", handler);
  impl_->server.Post(R"(/api/v1/.*)", handler);
  if (static_dir) impl_->server.set_mount_point("/", static_dir->string());
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::Bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::Run() { return impl_->server.listen_after_bind(); }

void HttpServer::Stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

bool HttpServer::running() const { return impl_->server.is_running(); }

}  // namespace adaudit
