#pragma once

#include <string>
#include <vector>

#include "run_config.hpp"

namespace raagham::cli {

struct Inputs {
  std::string graph;
  std::vector<std::string> words;  // file paths, or literal word text when no such file exists
  std::string cover;
  bool integrated = false;
  RunConfig cfg;
};

// Each returns the process exit code: 0 success, 1 verification failure.
// Invalid input and resource caps surface as exceptions.
int cmd_normal_form(const Inputs& in);
int cmd_word_eq(const Inputs& in);
int cmd_double(const Inputs& in);
int cmd_check_cover(const Inputs& in);
int cmd_emulator(const Inputs& in);
int cmd_certificate(const Inputs& in);
int cmd_build_config(const Inputs& in);
int cmd_build_rep(const Inputs& in);
int cmd_simulate(const Inputs& in);
int cmd_verify(const Inputs& in);
int cmd_probe_faithful(const Inputs& in);
int cmd_lambda_decay(const Inputs& in);
int cmd_smooth_study(const Inputs& in);
int cmd_polydisk(const Inputs& in);

}  // namespace raagham::cli
