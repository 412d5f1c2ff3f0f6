#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ccgcomment/pipeline.hpp"

int main(int argc, char** argv) {
  ccgc::RunConfig cfg;
  cfg.lexicon_path = CCGCOMMENT_DEFAULT_LEXICON;
  std::string mode = "annotate";

  CLI::App app{"Generate English comments for Python statements"};
  app.add_option("file", cfg.input_path, "Python source, or a .json AST")->required();
  app.add_option("--lexicon", cfg.lexicon_path, "Grammar file")->capture_default_str();
  app.add_option("--mode", mode, "Output mode")
      ->check(CLI::IsMember({"annotate", "jsonl", "emit-lf", "parse-debug"}))
      ->capture_default_str();
  app.add_option("--roots", cfg.roots, "Root categories, e.g. \"S[imp],S[ger]\"");
  app.add_option("--max-words", cfg.limits.max_words, "Longest comment in words")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--expansions", cfg.limits.max_expansions,
                 "Search budget per statement")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--variants", cfg.variants, "Realizations per statement (jsonl)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--verify", cfg.verify, "Parse every comment back to its goal");
  app.add_option("--jobs", cfg.jobs, "Worker threads, 0 for one per core")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  cfg.mode = *ccgc::mode_from_string(mode);
  if (const char* profile = std::getenv("CCGCOMMENT_PROFILE");
      profile != nullptr && std::string(profile) == "ci") {
    cfg.verify = true;
  }

  const ccgc::RunResult res = ccgc::run(cfg);
  std::cout << res.output << std::flush;
  std::cerr << res.diagnostics << std::flush;
  return res.exit_code;
}
