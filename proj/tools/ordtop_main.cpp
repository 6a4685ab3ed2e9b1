#include <chrono>
#include <iostream>

#include "ordtop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto start = std::chrono::steady_clock::now();
  ordtop::cli_result res = ordtop::cli_run(args);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

  // the report itself stays byte-stable across runs; timing goes to stderr
  std::cout << res.report.dump(2) << "\n";
  if (!res.message.empty()) std::cerr << res.message << "\n";
  std::cerr << "elapsed: " << elapsed.count() << " ms\n";
  return res.exit_code;
}
