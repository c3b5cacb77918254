#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "flatkit/oracle.hpp"
#include "flatkit/problem_file.hpp"

namespace flatkit::cli {

enum ExitCode : int {
  Ok = 0,
  NotFlat = 1,
  InputError = 2,
  ResourceLimit = 3,
  CertificateError = 4,
};

/// Runs one command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Corpus entry from a parsed problem file: expected verdict and oracle
/// bounds as recorded (witness degree 1 and the recommended multiplier
/// degree when absent).
CorpusEntry corpus_entry(const std::string& name, const ProblemFile& file,
                         const ResourceLimits& limits = {});

/// Every *.prob file in `dir`, sorted by file name.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir,
                                     const ResourceLimits& limits = {});

}  // namespace flatkit::cli
