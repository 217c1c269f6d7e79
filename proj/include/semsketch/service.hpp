#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "semsketch/store.hpp"

namespace semsketch {

struct HttpResponse {
  int status = 200;
  std::string body;  // UTF-8 JSON
};

using QueryParams = std::multimap<std::string, std::string>;

// Read-only /v1 API over a loaded sketch set. Stateless and immutable after
// construction, so one instance serves concurrent requests.
//
//   GET /v1/manifest
//   GET /v1/languages
//   GET /v1/lexemes?lang&prefix
//   GET /v1/sketch/{lang}/{lemma}/{semclass}?top&measure
//   GET /v1/sketch/{lang}/{lemma}/{semclass}/slot/{role}?offset&limit&measure
//   GET /v1/pairs?semclass
//   GET /v1/pair/{lang}/{lemma}/{semclass}/{lang}/{lemma}/{semclass}/diff
//   GET /v1/classes/{name}/report?role&left&right
class SketchService {
 public:
  explicit SketchService(SketchSetData data);

  // `raw_path` is the undecoded request path; each segment is
  // percent-decoded separately so encoded '/' inside a lemma survives.
  HttpResponse get(std::string_view raw_path, const QueryParams& params) const;

  // Convenience for a raw request target "path?query".
  HttpResponse get(std::string_view target) const;

  const SketchSetData& data() const { return data_; }

 private:
  SketchSetData data_;
  std::string manifest_body_;
};

// HTTP front end for a SketchService. GET only, CORS open; other methods
// get 405.
class SketchServer {
 public:
  explicit SketchServer(const SketchService& service);
  ~SketchServer();
  SketchServer(const SketchServer&) = delete;
  SketchServer& operator=(const SketchServer&) = delete;

  // Port 0 picks a free port. Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  // Blocks until stop() is called from another thread.
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Binds and blocks. Returns false when the address cannot be bound.
bool serve(const SketchService& service, const std::string& host, int port);

}  // namespace semsketch
