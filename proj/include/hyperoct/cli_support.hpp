#pragma once

// Implementations behind the CLI subcommands, plus the persistent cache
// of computed tables. Kept out of the binary so the exit codes, formats
// and cache behavior are directly testable.

#include "hyperoct/burnside.hpp"
#include "hyperoct/mr_algebra.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace hyperoct::cli {

constexpr int kSchemaVersion = 1;

struct Options {
  int n = 0;
  std::string format;     // per-command default when empty
  std::string out;        // output file, stdout when empty
  std::string cache_dir;  // --cache-dir
  bool no_cache = false;
  int max_n = -1;  // --max-n override; -1 keeps the per-command default
};

// --cache-dir flag, else HYPEROCT_CACHE, else a per-user cache directory.
std::filesystem::path resolve_cache_dir(const Options& opt);
std::string fnv1a_hex(const std::string& data);
std::optional<nlohmann::json> cache_load(const Options& opt, int n, const std::string& kind);
void cache_store(const Options& opt, int n, const std::string& kind, const nlohmann::json& payload);

nlohmann::json marks_payload(const Options& opt);
nlohmann::json mr_payload(const Options& opt);

struct ElementQuery {
  std::string word;    // "s7 t3 s3 s1 t10"
  std::string window;  // "-2,1"
  std::string comp;    // optional ambient composition "-2,3,-1,-3,1"
};

int cmd_marks(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_idempotents(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_classes(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_typesn(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_element(const Options& opt, const ElementQuery& q, std::ostream& out, std::ostream& err);
int cmd_verify(const Options& opt, const std::string& suite, bool long_tests, std::ostream& out,
               std::ostream& err);
int cmd_export_mr(const Options& opt, std::ostream& out, std::ostream& err);

}  // namespace hyperoct::cli
