// Copyright 2026 The lrsumm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// A child process speaking line-delimited JSON over its standard streams.
//
// The child announces itself with {"ready": true}; requests are then written
// as {"id", "text", "j"} lines and answered by {"id", "hypotheses"} lines in
// any order.

#ifndef LRSUMM_SUBPROCESS_H_
#define LRSUMM_SUBPROCESS_H_

#include <string>
#include <sys/types.h>
#include <vector>

namespace lrsumm {

struct GeneratorRequest {
  std::string id;
  std::string text;
  int j = 1;
};

struct GeneratorResponse {
  std::string id;
  std::vector<std::string> hypotheses;
};

// Encodes a request as one JSON line without the trailing newline.
std::string encode_request(const GeneratorRequest &request);
// Throws ProtocolError when the line is not a response object.
GeneratorResponse decode_response(const std::string &line);

class GeneratorProcess {
 public:
  // Runs `command` through /bin/sh and waits for the ready line. Throws
  // ProtocolError when the child fails to start or says something else.
  explicit GeneratorProcess(const std::string &command);
  ~GeneratorProcess();

  GeneratorProcess(const GeneratorProcess &) = delete;
  GeneratorProcess &operator=(const GeneratorProcess &) = delete;

  // Sends every request, pipelined, and returns responses in request order.
  // Request ids must be distinct. Throws ProtocolError on an unknown or
  // repeated response id, a malformed line, or the child closing its output
  // while requests are pending; the message names the first pending id.
  std::vector<GeneratorResponse> exchange(
      const std::vector<GeneratorRequest> &requests);

 private:
  bool read_line(std::string &line, int timeout_ms);
  void close_stdin();
  void shutdown();

  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
  bool eof_ = false;
};

}  // namespace lrsumm

#endif  // LRSUMM_SUBPROCESS_H_
