// Verification suite: one line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>

#include "steiner/verify.hpp"

int main(int argc, char** argv) {
  steiner::VerifyOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--k-max") == 0 && i + 1 < argc) {
      options.k_max = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      options.only = argv[++i];
    } else if (std::strcmp(argv[i], "--instances") == 0 && i + 1 < argc) {
      options.random_instances = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--k-max K] [--only NAME] [--instances N]\n");
      return 2;
    }
  }
  auto results = steiner::run_acceptance(options, &std::cout);
  if (results.empty()) {
    std::fprintf(stderr, "no criteria matched\n");
    return 1;
  }
  bool all_pass = true;
  for (const auto& result : results) all_pass = all_pass && result.pass;
  return all_pass ? 0 : 1;
}
