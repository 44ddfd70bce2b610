// Reproduction suite runner: one pass/fail line per check, nonzero exit on
// any failure. The same checks back the CLI `reproduce` subcommand.
#include <cstdio>
#include <thread>

#include "torcomb/reproduce.hpp"

#ifndef TORCOMB_DATA_DIR
#define TORCOMB_DATA_DIR "data"
#endif

int main(int argc, char** argv) {
  const std::string data_dir = (argc > 1) ? argv[1] : TORCOMB_DATA_DIR;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  torcomb::Corpus corpus;
  try {
    corpus = torcomb::load_corpus(data_dir);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "cannot load corpus from %s: %s\n", data_dir.c_str(),
                 e.what());
    return 2;
  }
  auto results = torcomb::run_reproduction(corpus, "", jobs);
  bool all = true;
  double total = 0.0;
  for (const auto& r : results) {
    std::printf("[%s] %-30s (%6.2fs)  %s\n", r.pass ? "pass" : "FAIL",
                r.name.c_str(), r.seconds, r.detail.c_str());
    all = all && r.pass;
    total += r.seconds;
  }
  std::printf("%zu checks, %.2fs total\n", results.size(), total);
  return all ? 0 : 1;
}
