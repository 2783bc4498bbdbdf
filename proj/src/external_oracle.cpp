#include "laqe/external_oracle.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>

#include "laqe/log.hpp"
#include "laqe/qasm.hpp"

namespace laqe {

namespace detail {

namespace {

void set_nonblocking(int fd) { fcntl(fd, F_SETFL, fcntl(fd, F_GETFL) | O_NONBLOCK); }

}  // namespace

SubprocessResult run_subprocess(const std::string& command, const std::string& input,
                                double timeout_s) {
    // a child may exit without reading its stdin; surface that as EPIPE
    // on write rather than dying on SIGPIPE
    static const bool sigpipe_ignored = [] {
        signal(SIGPIPE, SIG_IGN);
        return true;
    }();
    (void)sigpipe_ignored;

    int in_pipe[2], out_pipe[2], err_pipe[2];
    if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0 || pipe(err_pipe) != 0)
        throw OracleError("pipe() failed: " + std::string(std::strerror(errno)));

    pid_t pid = fork();
    if (pid < 0) throw OracleError("fork() failed: " + std::string(std::strerror(errno)));

    if (pid == 0) {
        dup2(in_pipe[0], STDIN_FILENO);
        dup2(out_pipe[1], STDOUT_FILENO);
        dup2(err_pipe[1], STDERR_FILENO);
        for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1], err_pipe[0], err_pipe[1]})
            close(fd);
        execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }

    close(in_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[1]);
    set_nonblocking(in_pipe[1]);
    set_nonblocking(out_pipe[0]);
    set_nonblocking(err_pipe[0]);

    SubprocessResult result;
    std::size_t written = 0;
    bool stdin_open = true, stdout_open = true, stderr_open = true;
    const auto deadline =
        std::chrono::steady_clock::now() + std::chrono::duration<double>(timeout_s);

    // Interleave writing stdin with draining stdout/stderr so a chatty
    // child cannot deadlock against a full pipe.
    while (stdin_open || stdout_open || stderr_open) {
        auto now = std::chrono::steady_clock::now();
        if (now >= deadline) {
            result.timed_out = true;
            kill(pid, SIGKILL);
            break;
        }
        int wait_ms = static_cast<int>(
            std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count());
        wait_ms = std::max(1, std::min(wait_ms, 200));

        struct pollfd fds[3];
        nfds_t nfds = 0;
        int idx_in = -1, idx_out = -1, idx_err = -1;
        if (stdin_open) {
            idx_in = static_cast<int>(nfds);
            fds[nfds++] = {in_pipe[1], POLLOUT, 0};
        }
        if (stdout_open) {
            idx_out = static_cast<int>(nfds);
            fds[nfds++] = {out_pipe[0], POLLIN, 0};
        }
        if (stderr_open) {
            idx_err = static_cast<int>(nfds);
            fds[nfds++] = {err_pipe[0], POLLIN, 0};
        }
        int rc = poll(fds, nfds, wait_ms);
        if (rc < 0 && errno != EINTR) break;

        char buf[4096];
        if (idx_out >= 0 && (fds[idx_out].revents & (POLLIN | POLLHUP))) {
            ssize_t got = read(out_pipe[0], buf, sizeof buf);
            if (got > 0) result.out.append(buf, static_cast<std::size_t>(got));
            else if (got == 0 || (got < 0 && errno != EAGAIN)) {
                close(out_pipe[0]);
                stdout_open = false;
            }
        }
        if (idx_err >= 0 && (fds[idx_err].revents & (POLLIN | POLLHUP))) {
            ssize_t got = read(err_pipe[0], buf, sizeof buf);
            if (got > 0) result.err.append(buf, static_cast<std::size_t>(got));
            else if (got == 0 || (got < 0 && errno != EAGAIN)) {
                close(err_pipe[0]);
                stderr_open = false;
            }
        }
        if (idx_in >= 0 && (fds[idx_in].revents & (POLLOUT | POLLERR | POLLHUP))) {
            if (fds[idx_in].revents & (POLLERR | POLLHUP)) {
                close(in_pipe[1]);
                stdin_open = false;
            } else {
                ssize_t put = write(in_pipe[1], input.data() + written, input.size() - written);
                if (put > 0) written += static_cast<std::size_t>(put);
                else if (put < 0 && errno != EAGAIN) {
                    close(in_pipe[1]);
                    stdin_open = false;
                }
                if (written == input.size()) {
                    close(in_pipe[1]);
                    stdin_open = false;
                }
            }
        }
    }
    if (stdin_open) close(in_pipe[1]);
    if (stdout_open) close(out_pipe[0]);
    if (stderr_open) close(err_pipe[0]);

    int status = 0;
    waitpid(pid, &status, 0);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    else if (WIFSIGNALED(status)) result.exit_code = 128 + WTERMSIG(status);
    return result;
}

}  // namespace detail

namespace {

std::string stderr_excerpt(const std::string& err) {
    if (err.empty()) return "(no stderr)";
    constexpr std::size_t kMax = 400;
    if (err.size() <= kMax) return err;
    return err.substr(0, kMax) + "...";
}

}  // namespace

Circuit external_oracle_optimize(const Circuit& c, const ExternalOracleConfig& cfg,
                                 const CostFn& f, bool* fell_back) {
    if (fell_back) *fell_back = false;
    if (cfg.timeout_s <= 0) throw std::invalid_argument("external oracle timeout must be > 0");

    auto result = detail::run_subprocess(cfg.command, qasm::to_string(c), cfg.timeout_s);
    if (result.timed_out)
        throw OracleError("external oracle timed out after " + std::to_string(cfg.timeout_s) +
                          "s: " + cfg.command);
    if (result.exit_code != 0)
        throw OracleError("external oracle exited with code " +
                          std::to_string(result.exit_code) + "; stderr: " +
                          stderr_excerpt(result.err));

    Circuit out(1);
    try {
        out = qasm::parse_string(result.out);
    } catch (const qasm::ParseError& e) {
        throw OracleError(std::string("external oracle produced unparsable QASM (") + e.what() +
                          "); stderr: " + stderr_excerpt(result.err));
    }
    if (out.num_qubits() != c.num_qubits())
        throw OracleError("external oracle changed the qubit count from " +
                          std::to_string(c.num_qubits()) + " to " +
                          std::to_string(out.num_qubits()));

    if (f.eval(out) > f.eval(c)) {
        // Contract enforcement: never hand back a costlier circuit.
        if (fell_back) *fell_back = true;
        LAQE_WARN("external oracle increased cost (%llu -> %llu); returning input",
                  static_cast<unsigned long long>(f.eval(c)),
                  static_cast<unsigned long long>(f.eval(out)));
        return c;
    }
    return out;
}

ExternalOracle::ExternalOracle(ExternalOracleConfig cfg, CostFn cost)
    : cfg_(std::move(cfg)), cost_(std::move(cost)) {
    if (cfg_.timeout_s <= 0) throw std::invalid_argument("external oracle timeout must be > 0");
}

Circuit ExternalOracle::do_optimize(const Circuit& c) {
    bool fell_back = false;
    Circuit out = external_oracle_optimize(c, cfg_, cost_, &fell_back);
    if (fell_back) fallbacks_.fetch_add(1, std::memory_order_relaxed);
    return out;
}

}  // namespace laqe
