#include <cstdio>

#include "nilq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  nilq::cli::CliResult res = nilq::cli::run(args);
  std::fputs(res.out.c_str(), stdout);
  std::fputs(res.err.c_str(), stderr);
  return res.code;
}
