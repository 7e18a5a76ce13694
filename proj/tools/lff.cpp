#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lff/session.hpp"
#include "lff/suites.hpp"

namespace {

bool color_enabled() {
  const char* v = std::getenv("LFF_COLOR");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

std::string paint(const std::string& s, bool ok) {
  if (!color_enabled()) return s;
  return (ok ? "\033[32m" : "\033[31m") + s + "\033[0m";
}

int read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open '" << path << "'\n";
    return 2;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return 0;
}

int cmd_run(const std::string& path) {
  std::string text;
  if (int rc = read_file(path, text)) return rc;
  try {
    auto spec = lff::parse_session(text);
    auto result = lff::run(spec, color_enabled());
    std::cout << result.report;
    return result.exit_code;
  } catch (const lff::SessionError& ex) {
    std::cerr << path << ":" << ex.what() << "\n";
    return 2;
  }
}

int cmd_fmt(const std::string& path) {
  std::string text;
  if (int rc = read_file(path, text)) return rc;
  try {
    std::cout << lff::parse_session(text).print();
    return 0;
  } catch (const lff::SessionError& ex) {
    std::cerr << path << ":" << ex.what() << "\n";
    return 2;
  }
}

int report_suite(const lff::SuiteResult& res) {
  for (const auto& c : res.cases)
    if (!c.pass) std::cout << paint("FAIL", false) << " " << c.name << "\n  " << c.detail << "\n";
  std::cout << paint(res.pass() ? "PASS" : "FAIL", res.pass()) << " " << res.summary() << "\n";
  return res.pass() ? 0 : 1;
}

int cmd_verify(const std::string& name, int max_n, int jobs) {
  std::vector<std::string> names;
  if (name == "all")
    names = lff::suite_names();
  else
    names.push_back(name);
  int rc = 0;
  for (const auto& n : names) {
    try {
      rc |= report_suite(lff::run_suite_parallel(n, max_n, jobs));
    } catch (const std::invalid_argument& ex) {
      std::cerr << ex.what() << "\n";
      return 2;
    }
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact local L-factor engine for linear periods on GL(n)"};
  app.require_subcommand(1);

  std::string run_path;
  auto* run = app.add_subcommand("run", "execute a session file");
  run->add_option("file", run_path, "session file")->required();

  std::string fmt_path;
  auto* fmt = app.add_subcommand("fmt", "reprint a session file canonically");
  fmt->add_option("file", fmt_path, "session file")->required();

  std::string suite_name;
  int max_n = 0, jobs = 0;
  auto* verify = app.add_subcommand("verify-suite", "run a named verification sweep");
  verify->add_option("name", suite_name, "suite name or 'all'")->required();
  verify->add_option("--max-n", max_n, "cap the dimension bound");
  verify->add_option("--jobs", jobs, "worker threads (0 = default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (run->parsed()) return cmd_run(run_path);
  if (fmt->parsed()) return cmd_fmt(fmt_path);
  return cmd_verify(suite_name, max_n, jobs);
}
