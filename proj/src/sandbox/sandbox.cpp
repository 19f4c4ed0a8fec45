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

#include "evo/sandbox/sandbox.hpp"

#include <fcntl.h>
#include <sched.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "evo/core/parallel.hpp"

extern char** environ;

namespace evo::sandbox {

namespace fs = std::filesystem;

std::string serialization_footer(const std::string& schema_id) {
  if (schema_id == "circle_packing") {
    return R"(

if __name__ == "__main__":
    import json as _json, os as _os
    _result = pack_circles()
    _centers, _radii = _result[0], _result[1]
    _rows = [[float(_centers[_i][0]), float(_centers[_i][1]), float(_radii[_i])]
             for _i in range(len(_radii))]
    with open(_os.environ["EVO_SOLUTION_PATH"], "w") as _f:
        _json.dump({"circles": _rows}, _f)
)";
  }
  if (schema_id == "points") {
    return R"(

if __name__ == "__main__":
    import json as _json, os as _os
    _points = place_points()
    _rows = [[float(_p[0]), float(_p[1])] for _p in _points]
    with open(_os.environ["EVO_SOLUTION_PATH"], "w") as _f:
        _json.dump({"points": _rows}, _f)
)";
  }
  if (schema_id == "kissing") {
    return R"(

if __name__ == "__main__":
    import json as _json, os as _os
    _vectors = find_kissing_vectors()
    _rows = [[int(_x) for _x in _v] for _v in _vectors]
    with open(_os.environ["EVO_SOLUTION_PATH"], "w") as _f:
        _json.dump({"vectors": _rows}, _f)
)";
  }
  if (schema_id == "uncertainty") {
    return R"(

if __name__ == "__main__":
    import json as _json, os as _os
    _coeffs, _basis = find_coefficients()
    with open(_os.environ["EVO_SOLUTION_PATH"], "w") as _f:
        _json.dump({"coefficients": [float(_c) for _c in _coeffs],
                    "basis": str(_basis)}, _f)
)";
  }
  throw std::invalid_argument("no serialization footer for schema: " +
                              schema_id);
}

namespace {

struct ScratchDir {
  fs::path path;
  explicit ScratchDir(const std::string& base) {
    std::string tmpl = (fs::path(base) / "evo-eval-XXXXXX").string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    if (!mkdtemp(buf.data())) {
      throw InfrastructureError("mkdtemp failed: " +
                                std::string(std::strerror(errno)));
    }
    path = buf.data();
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string read_file_excerpt(const fs::path& p, size_t max_bytes) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return "";
  std::string data(max_bytes, '\0');
  in.read(data.data(), static_cast<std::streamsize>(max_bytes));
  data.resize(static_cast<size_t>(in.gcount()));
  return data;
}

struct ChildResult {
  bool timed_out = false;
  int exit_status = 0;   // waitpid status word
  double wall_time = 0.0;
};

// Fork/exec with the child in its own process group; on deadline the whole
// group gets SIGKILL.
ChildResult run_child(const std::vector<std::string>& argv_strings,
                      const fs::path& cwd, const fs::path& stderr_path,
                      const std::string& solution_path, double time_limit,
                      int64_t memory_limit, bool network_allowed) {
  std::vector<char*> argv;
  for (const auto& s : argv_strings) argv.push_back(const_cast<char*>(s.c_str()));
  argv.push_back(nullptr);

  // Environment assembled before fork (no allocation afterwards).
  std::string solution_env = "EVO_SOLUTION_PATH=" + solution_path;
  std::vector<char*> envp;
  for (char** e = environ; *e; ++e) envp.push_back(*e);
  envp.push_back(const_cast<char*>(solution_env.c_str()));
  envp.push_back(nullptr);

  std::string cwd_str = cwd.string();
  std::string stderr_str = stderr_path.string();

  auto start = std::chrono::steady_clock::now();
  pid_t pid = fork();
  if (pid < 0) {
    throw InfrastructureError("fork failed: " +
                              std::string(std::strerror(errno)));
  }
  if (pid == 0) {
    setpgid(0, 0);
    if (memory_limit > 0) {
      rlimit rl{static_cast<rlim_t>(memory_limit),
                static_cast<rlim_t>(memory_limit)};
      setrlimit(RLIMIT_AS, &rl);
    }
    if (!network_allowed) {
      unshare(CLONE_NEWNET);  // best effort; needs privileges
    }
    if (chdir(cwd_str.c_str()) != 0) _exit(127);
    int devnull = open("/dev/null", O_RDWR);
    if (devnull >= 0) {
      dup2(devnull, STDIN_FILENO);
      dup2(devnull, STDOUT_FILENO);
    }
    int errfd = open(stderr_str.c_str(), O_CREAT | O_WRONLY | O_TRUNC, 0600);
    if (errfd >= 0) dup2(errfd, STDERR_FILENO);
    execvpe(argv[0], argv.data(), envp.data());
    _exit(127);
  }

  setpgid(pid, pid);  // also from the parent side to close the race

  ChildResult result;
  auto deadline = start + std::chrono::duration_cast<
                              std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(time_limit));
  int status = 0;
  while (true) {
    pid_t r = waitpid(pid, &status, WNOHANG);
    if (r == pid) break;
    if (r < 0) {
      throw InfrastructureError("waitpid failed: " +
                                std::string(std::strerror(errno)));
    }
    if (std::chrono::steady_clock::now() >= deadline) {
      result.timed_out = true;
      kill(-pid, SIGKILL);
      waitpid(pid, &status, 0);
      break;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  // Reap any group stragglers the candidate spawned.
  kill(-pid, SIGKILL);
  while (waitpid(-pid, nullptr, WNOHANG) > 0) {
  }

  result.exit_status = status;
  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

EvaluationOutcome evaluate_once(const std::string& source_text,
                                const ProblemSpec& problem,
                                const SandboxConfig& config,
                                const verifiers::VerifierRegistry& registry) {
  if (source_text.empty()) {
    throw std::invalid_argument("candidate source is empty");
  }
  const auto& entry = registry.at(problem.verifier_id);

  ScratchDir scratch(config.scratch_dir);
  fs::path source_path = scratch.path / "candidate.py";
  fs::path solution_path = scratch.path / "solution.json";
  fs::path stderr_path = scratch.path / "stderr.txt";
  {
    std::ofstream out(source_path, std::ios::binary);
    out << source_text << serialization_footer(entry.schema_id);
    if (!out) {
      throw InfrastructureError("cannot write candidate source to scratch");
    }
  }

  std::vector<std::string> argv;
  for (const auto& part : config.interpreter_command) {
    if (part == "{source_path}") {
      argv.push_back(source_path.string());
    } else {
      argv.push_back(part);
    }
  }

  ChildResult child = run_child(argv, scratch.path, stderr_path,
                                solution_path.string(), config.time_limit,
                                config.memory_limit_bytes,
                                config.network_allowed);

  EvaluationOutcome outcome;
  outcome.wall_time = config.record_wall_time ? child.wall_time : 0.0;
  outcome.stderr_excerpt = read_file_excerpt(stderr_path, 4096);

  if (child.timed_out) {
    outcome.status = EvalStatus::timeout;
    return outcome;
  }
  if (!WIFEXITED(child.exit_status) || WEXITSTATUS(child.exit_status) != 0) {
    outcome.status = EvalStatus::runtime_error;
    return outcome;
  }

  std::ifstream payload_in(solution_path, std::ios::binary);
  if (!payload_in) {
    outcome.status = EvalStatus::parse_failure;
    outcome.stderr_excerpt = "no solution payload written";
    return outcome;
  }
  json payload;
  try {
    payload_in >> payload;
  } catch (const json::exception& e) {
    outcome.status = EvalStatus::parse_failure;
    outcome.stderr_excerpt = std::string("payload is not valid JSON: ") +
                             e.what();
    return outcome;
  }

  try {
    verifiers::VerifierResult result = entry.score(payload);
    outcome.solution = payload;
    if (!result.valid) {
      outcome.status = EvalStatus::invalid_solution;
      outcome.stderr_excerpt = "invalid: " + result.reason;
      return outcome;
    }
    outcome.status = EvalStatus::success;
    outcome.score = result.score;
    return outcome;
  } catch (const verifiers::SchemaError& e) {
    outcome.status = EvalStatus::parse_failure;
    outcome.stderr_excerpt = std::string("schema mismatch: ") + e.what();
    return outcome;
  }
}

}  // namespace

EvaluationOutcome evaluate(const std::string& source_text,
                           const ProblemSpec& problem,
                           const SandboxConfig& config,
                           const verifiers::VerifierRegistry& registry) {
  try {
    return evaluate_once(source_text, problem, config, registry);
  } catch (const InfrastructureError&) {
    // One retry; harness-side trouble must not score against the candidate.
    return evaluate_once(source_text, problem, config, registry);
  }
}

std::vector<EvaluationOutcome> evaluate_batch(
    const std::vector<std::string>& sources, const ProblemSpec& problem,
    const SandboxConfig& config,
    const verifiers::VerifierRegistry& registry) {
  std::vector<EvaluationOutcome> outcomes(sources.size());
  parallel_for(sources.size(), config.worker_count, [&](size_t i) {
    outcomes[i] = evaluate(sources[i], problem, config, registry);
  });
  return outcomes;
}

}  // namespace evo::sandbox
