#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lff/reps.hpp"

namespace lff {

struct SessionError : std::runtime_error {
  int line;
  SessionError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct SessionCommand {
  enum Kind {
    lfactor_lin,
    lfactor_pair,
    galois_side,
    classify,
    verify_main,
    cosets,
    general_position
  };
  Kind kind;
  std::vector<std::string> args;
  int line = 0;

  std::string str() const;
};

// A parsed session: declarations in source order plus the command list.
// Declarations keep their source ids so the canonical print round-trips.
struct SessionSpec {
  struct CuspDecl {
    std::string id;
    Cuspidal c;
    int line = 0;
  };
  struct SegDecl {
    std::string cusp;
    int k = 1;
    Frac e = 0;
  };
  struct RepDecl {
    std::string id;
    std::vector<SegDecl> segs;
    GLRep rep;
    int line = 0;
  };

  std::vector<CuspDecl> cuspidals;  // r = 1 characters and abstract bases
  std::vector<RepDecl> reps;
  std::vector<SessionCommand> commands;

  const CuspDecl* find_cuspidal(const std::string& id) const;
  const RepDecl* find_rep(const std::string& id) const;

  // Canonical rendering; parsing it back yields an equal spec.
  std::string print() const;
};

SessionSpec parse_session(const std::string& text);

struct RunResult {
  std::string report;
  int exit_code = 0;  // 0 all pass, 1 any FAIL or computational error
};

// Executes the commands in order, deterministically. Module errors are
// rendered in place with the offending command and turn the exit code to 1.
RunResult run(const SessionSpec& spec, bool color = false);

}  // namespace lff
