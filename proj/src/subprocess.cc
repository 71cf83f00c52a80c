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

#include "lrsumm/subprocess.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "json.hpp"
#include "lrsumm/error.h"

extern char **environ;

namespace lrsumm {
namespace {

constexpr int kReadyTimeoutMs = 60000;

void ignore_sigpipe_once() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

std::string errno_text(const char *what) {
  return std::string(what) + ": " + std::strerror(errno);
}

void close_fd(int &fd) {
  if (fd >= 0) ::close(fd);
  fd = -1;
}

}  // namespace

std::string encode_request(const GeneratorRequest &request) {
  return nlohmann::json{{"id", request.id}, {"text", request.text}, {"j", request.j}}
      .dump();
}

GeneratorResponse decode_response(const std::string &line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error &) {
    throw ProtocolError("malformed response line: " + line);
  }
  if (!j.is_object() || !j.contains("id") || !j["id"].is_string() ||
      !j.contains("hypotheses") || !j["hypotheses"].is_array())
    throw ProtocolError("response lacks string 'id' or array 'hypotheses': " + line);
  GeneratorResponse r;
  r.id = j["id"].get<std::string>();
  for (const auto &h : j["hypotheses"]) {
    if (!h.is_string())
      throw ProtocolError("non-string hypothesis in response '" + r.id + "'");
    r.hypotheses.push_back(h.get<std::string>());
  }
  return r;
}

GeneratorProcess::GeneratorProcess(const std::string &command) {
  ignore_sigpipe_once();
  int in_pipe[2], out_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) throw ProtocolError(errno_text("pipe"));
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw ProtocolError(errno_text("pipe"));
  }

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, in_pipe[0], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, out_pipe[1], STDOUT_FILENO);
  const char *argv[] = {"/bin/sh", "-c", command.c_str(), nullptr};
  int rc = ::posix_spawn(&pid_, "/bin/sh", &actions, nullptr,
                         const_cast<char **>(argv), environ);
  posix_spawn_file_actions_destroy(&actions);
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
  if (rc != 0) {
    pid_ = -1;
    close_fd(to_child_);
    close_fd(from_child_);
    throw ProtocolError("cannot start '" + command + "': " + std::strerror(rc));
  }

  try {
    std::string line;
    if (!read_line(line, kReadyTimeoutMs))
      throw ProtocolError("generator '" + command + "' exited before ready");
    nlohmann::json ready = nlohmann::json::parse(line, nullptr, false);
    if (!ready.is_object() || !ready.contains("ready") || ready["ready"] != true)
      throw ProtocolError("generator '" + command +
                          "' sent no ready line, got: " + line);
  } catch (...) {
    shutdown();
    throw;
  }
}

GeneratorProcess::~GeneratorProcess() { shutdown(); }

void GeneratorProcess::shutdown() {
  close_stdin();
  close_fd(from_child_);
  if (pid_ <= 0) return;
  int status = 0;
  for (int i = 0; i < 200; ++i) {
    if (::waitpid(pid_, &status, WNOHANG) != 0) {
      pid_ = -1;
      return;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  ::kill(pid_, SIGKILL);
  ::waitpid(pid_, &status, 0);
  pid_ = -1;
}

void GeneratorProcess::close_stdin() { close_fd(to_child_); }

bool GeneratorProcess::read_line(std::string &line, int timeout_ms) {
  for (;;) {
    size_t nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return true;
    }
    if (eof_) return false;
    pollfd p{from_child_, POLLIN, 0};
    int r = ::poll(&p, 1, timeout_ms);
    if (r < 0 && errno == EINTR) continue;
    if (r <= 0) throw ProtocolError("timed out waiting for generator output");
    char chunk[65536];
    ssize_t n = ::read(from_child_, chunk, sizeof(chunk));
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) {
      eof_ = true;
      continue;
    }
    buffer_.append(chunk, static_cast<size_t>(n));
  }
}

std::vector<GeneratorResponse> GeneratorProcess::exchange(
    const std::vector<GeneratorRequest> &requests) {
  std::unordered_map<std::string, size_t> slot;
  std::string outgoing;
  for (size_t i = 0; i < requests.size(); ++i) {
    if (!slot.emplace(requests[i].id, i).second)
      throw std::invalid_argument("duplicate request id '" + requests[i].id + "'");
    outgoing += encode_request(requests[i]);
    outgoing.push_back('\n');
  }

  std::vector<GeneratorResponse> out(requests.size());
  std::vector<uint8_t> done(requests.size(), 0);
  size_t pending = requests.size();
  size_t written = 0;
  bool writable = to_child_ >= 0;
  if (writable) ::fcntl(to_child_, F_SETFL, ::fcntl(to_child_, F_GETFL) | O_NONBLOCK);

  auto first_pending = [&]() -> std::string {
    for (size_t i = 0; i < done.size(); ++i)
      if (!done[i]) return requests[i].id;
    return {};
  };
  auto take_lines = [&] {
    size_t nl;
    while ((nl = buffer_.find('\n')) != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (line.empty()) continue;
      GeneratorResponse r = decode_response(line);
      auto it = slot.find(r.id);
      if (it == slot.end() || done[it->second])
        throw ProtocolError("response for unknown id '" + r.id +
                            "'; first pending request '" + first_pending() + "'");
      done[it->second] = 1;
      out[it->second] = std::move(r);
      --pending;
    }
  };

  take_lines();
  while (pending > 0) {
    if (eof_)
      throw ProtocolError("generator closed its output with " +
                          std::to_string(pending) +
                          " requests pending; first pending request '" +
                          first_pending() + "'");
    pollfd fds[2] = {{from_child_, POLLIN, 0}, {to_child_, POLLOUT, 0}};
    const bool want_write = writable && written < outgoing.size();
    int r = ::poll(fds, want_write ? 2 : 1, -1);
    if (r < 0) {
      if (errno == EINTR) continue;
      throw ProtocolError(errno_text("poll"));
    }
    if (want_write && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      ssize_t n = ::write(to_child_, outgoing.data() + written,
                          outgoing.size() - written);
      if (n > 0) {
        written += static_cast<size_t>(n);
      } else if (n < 0 && errno != EAGAIN && errno != EINTR) {
        writable = false;  // Child is gone; drain what it already said.
      }
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      char chunk[65536];
      ssize_t n = ::read(from_child_, chunk, sizeof(chunk));
      if (n > 0)
        buffer_.append(chunk, static_cast<size_t>(n));
      else if (n == 0 || (errno != EINTR && errno != EAGAIN))
        eof_ = true;
      take_lines();
    }
  }
  return out;
}

}  // namespace lrsumm
