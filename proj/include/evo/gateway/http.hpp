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

#pragma once

#include "evo/gateway/backend.hpp"

namespace evo::gateway {

struct HttpBackendConfig {
  std::string endpoint;  // e.g. http://host:port/v1/chat/completions
  std::string model;
  std::string api_key_env = "EVO_API_KEY";  // env var holding the key
  double timeout_seconds = 120.0;

  static HttpBackendConfig from_json(const nlohmann::json& j);
};

// Chat-completions client for OpenAI-shaped endpoints. Connection errors
// and 5xx responses surface as TransportError (retried by the gateway);
// anything else unexpected is a ProviderError.
class HttpBackend : public ChatBackend {
 public:
  explicit HttpBackend(HttpBackendConfig config);
  BackendResponse complete(const std::string& prompt,
                           const SamplingParams& params,
                           const CallContext& ctx) override;
  std::string model() const override { return config_.model; }

 private:
  HttpBackendConfig config_;
  std::string host_;
  int port_ = 80;
  std::string path_;
};

}  // namespace evo::gateway
