#include "equivguard/support/subprocess.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace equivguard::support {

namespace {

void set_nonblocking(int fd) {
  int flags = fcntl(fd, F_GETFL, 0);
  fcntl(fd, F_SETFL, flags | O_NONBLOCK);
}

} // namespace

std::vector<std::string> split_command(const std::string& command) {
  std::vector<std::string> parts;
  std::istringstream is(command);
  std::string part;
  while (is >> part) parts.push_back(part);
  return parts;
}

ProcessResult run_process(const std::vector<std::string>& argv,
                          const std::string& stdin_data,
                          std::optional<std::chrono::milliseconds> timeout) {
  if (argv.empty()) throw std::invalid_argument("empty argv");

  int in_pipe[2], out_pipe[2], err_pipe[2];
  if (pipe(in_pipe) || pipe(out_pipe) || pipe(err_pipe))
    throw std::runtime_error("pipe() failed");

  pid_t pid = fork();
  if (pid < 0) throw std::runtime_error("fork() failed");

  if (pid == 0) {
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(err_pipe[1], STDERR_FILENO);
    close(in_pipe[0]); close(in_pipe[1]);
    close(out_pipe[0]); close(out_pipe[1]);
    close(err_pipe[0]); close(err_pipe[1]);
    std::vector<char*> args;
    args.reserve(argv.size() + 1);
    for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
    args.push_back(nullptr);
    execvp(args[0], args.data());
    perror("execvp");
    _exit(127);
  }

  close(in_pipe[0]);
  close(out_pipe[1]);
  close(err_pipe[1]);
  set_nonblocking(in_pipe[1]);
  set_nonblocking(out_pipe[0]);
  set_nonblocking(err_pipe[0]);

  ProcessResult result;
  size_t written = 0;
  bool stdin_open = true;
  if (stdin_data.empty()) {
    close(in_pipe[1]);
    stdin_open = false;
  }

  auto deadline = timeout ? std::optional(std::chrono::steady_clock::now() + *timeout)
                          : std::nullopt;
  bool out_open = true, err_open = true;
  char buf[65536];

  while (out_open || err_open || stdin_open) {
    struct pollfd fds[3];
    int nfds = 0;
    int out_idx = -1, err_idx = -1, in_idx = -1;
    if (out_open) { fds[nfds] = {out_pipe[0], POLLIN, 0}; out_idx = nfds++; }
    if (err_open) { fds[nfds] = {err_pipe[0], POLLIN, 0}; err_idx = nfds++; }
    if (stdin_open) { fds[nfds] = {in_pipe[1], POLLOUT, 0}; in_idx = nfds++; }

    int wait_ms = -1;
    if (deadline) {
      auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
          *deadline - std::chrono::steady_clock::now());
      wait_ms = static_cast<int>(std::max<long long>(0, left.count()));
    }
    int rc = poll(fds, nfds, wait_ms);
    if (rc < 0 && errno != EINTR) break;
    if (deadline && std::chrono::steady_clock::now() >= *deadline) {
      result.timed_out = true;
      kill(pid, SIGKILL);
      break;
    }
    if (rc <= 0) continue;

    if (out_idx >= 0 && (fds[out_idx].revents & (POLLIN | POLLHUP))) {
      ssize_t n = read(out_pipe[0], buf, sizeof(buf));
      if (n > 0) result.out.append(buf, static_cast<size_t>(n));
      else if (n == 0 || (n < 0 && errno != EAGAIN)) { close(out_pipe[0]); out_open = false; }
    }
    if (err_idx >= 0 && (fds[err_idx].revents & (POLLIN | POLLHUP))) {
      ssize_t n = read(err_pipe[0], buf, sizeof(buf));
      if (n > 0) result.err.append(buf, static_cast<size_t>(n));
      else if (n == 0 || (n < 0 && errno != EAGAIN)) { close(err_pipe[0]); err_open = false; }
    }
    if (in_idx >= 0 && (fds[in_idx].revents & (POLLOUT | POLLERR | POLLHUP))) {
      if (fds[in_idx].revents & (POLLERR | POLLHUP)) {
        close(in_pipe[1]);
        stdin_open = false;
      } else {
        ssize_t n = write(in_pipe[1], stdin_data.data() + written,
                          stdin_data.size() - written);
        if (n > 0) written += static_cast<size_t>(n);
        if (written == stdin_data.size() || (n < 0 && errno != EAGAIN)) {
          close(in_pipe[1]);
          stdin_open = false;
        }
      }
    }
  }

  if (stdin_open) close(in_pipe[1]);
  if (out_open) close(out_pipe[0]);
  if (err_open) close(err_pipe[0]);

  int status = 0;
  waitpid(pid, &status, 0);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  else if (WIFSIGNALED(status)) result.exit_code = 128 + WTERMSIG(status);
  return result;
}

} // namespace equivguard::support
