// Copyright 2026 The evoharness Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "evo/gateway/http.hpp"

#include <cstdlib>

#include <httplib.h>

namespace evo::gateway {

HttpBackendConfig HttpBackendConfig::from_json(const nlohmann::json& j) {
  HttpBackendConfig c;
  c.endpoint = j.at("endpoint").get<std::string>();
  c.model = j.at("model").get<std::string>();
  c.api_key_env = j.value("api_key_env", c.api_key_env);
  c.timeout_seconds = j.value("timeout_seconds", c.timeout_seconds);
  return c;
}

HttpBackend::HttpBackend(HttpBackendConfig config)
    : config_(std::move(config)) {
  std::string url = config_.endpoint;
  std::string rest;
  if (url.rfind("http://", 0) == 0) {
    rest = url.substr(7);
    port_ = 80;
  } else if (url.rfind("https://", 0) == 0) {
    throw std::invalid_argument(
        "https endpoints need a TLS-terminating proxy; use http://");
  } else {
    throw std::invalid_argument("endpoint must start with http://");
  }
  size_t slash = rest.find('/');
  std::string authority = slash == std::string::npos ? rest : rest.substr(0, slash);
  path_ = slash == std::string::npos ? "/" : rest.substr(slash);
  size_t colon = authority.find(':');
  if (colon == std::string::npos) {
    host_ = authority;
  } else {
    host_ = authority.substr(0, colon);
    port_ = std::stoi(authority.substr(colon + 1));
  }
  if (host_.empty()) throw std::invalid_argument("endpoint host missing");
}

BackendResponse HttpBackend::complete(const std::string& prompt,
                                      const SamplingParams& params,
                                      const CallContext& /*ctx*/) {
  params.validate();
  nlohmann::json body{
      {"model", config_.model},
      {"messages",
       nlohmann::json::array({{{"role", "user"}, {"content", prompt}}})},
      {"temperature", params.temperature},
      {"top_p", params.top_p},
      {"max_tokens", params.max_output_tokens},
  };
  if (params.thinking_budget_tokens > 0) {
    body["thinking_budget_tokens"] = params.thinking_budget_tokens;
  }

  httplib::Client client(host_, port_);
  client.set_connection_timeout(std::chrono::milliseconds(
      static_cast<int64_t>(config_.timeout_seconds * 1000)));
  client.set_read_timeout(std::chrono::milliseconds(
      static_cast<int64_t>(config_.timeout_seconds * 1000)));

  httplib::Headers headers;
  if (const char* key = std::getenv(config_.api_key_env.c_str())) {
    headers.emplace("Authorization", std::string("Bearer ") + key);
  }

  auto res = client.Post(path_, headers, body.dump(), "application/json");
  if (!res) {
    throw TransportError("request to " + host_ + " failed: " +
                         httplib::to_string(res.error()));
  }
  if (res->status >= 500) {
    throw TransportError("server error " + std::to_string(res->status));
  }
  if (res->status != 200) {
    throw ProviderError("provider returned status " +
                        std::to_string(res->status) + ": " + res->body);
  }

  try {
    nlohmann::json j = nlohmann::json::parse(res->body);
    BackendResponse out;
    out.text =
        j.at("choices").at(0).at("message").at("content").get<std::string>();
    const auto& usage = j.at("usage");
    out.usage.tokens_in = usage.at("prompt_tokens").get<int64_t>();
    out.usage.tokens_out = usage.at("completion_tokens").get<int64_t>();
    if (usage.contains("completion_tokens_details")) {
      out.usage.thinking_tokens = usage.at("completion_tokens_details")
                                      .value("reasoning_tokens", int64_t{0});
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ProviderError(std::string("malformed provider response: ") +
                        e.what());
  }
}

}  // namespace evo::gateway
