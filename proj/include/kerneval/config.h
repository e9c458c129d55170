#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kerneval {

// Line-oriented `key = value` file with optional `[section]` headers and `#`
// comments. Keys inside a section are addressed as `section.key`. The same
// format backs both task manifests and run configs.
class LineConfig {
 public:
  static LineConfig parse_file(const std::filesystem::path& path);
  static LineConfig parse_text(const std::string& text, const std::string& origin = "<text>");

  bool has(const std::string& key) const;
  const std::string& origin() const { return origin_; }

  // Accessors throw MissingField naming the file and key; typed accessors
  // throw ConfigError on unparseable values.
  std::string get_string(const std::string& key) const;
  std::string get_string_or(const std::string& key, const std::string& fallback) const;
  int64_t get_int(const std::string& key) const;
  int64_t get_int_or(const std::string& key, int64_t fallback) const;
  double get_double(const std::string& key) const;
  double get_double_or(const std::string& key, double fallback) const;
  bool get_bool_or(const std::string& key, bool fallback) const;

  std::vector<std::string> keys_with_prefix(const std::string& prefix) const;
  std::vector<std::string> section_names() const;
  std::vector<std::string> all_keys() const;

  // Consumption tracking: the CLI rejects config files containing keys that
  // nothing ever read ("unknown key" instead of a silent typo).
  void mark_consumed(const std::string& key) const;
  std::vector<std::string> unconsumed_keys() const;

  void set(const std::string& key, const std::string& value);

 private:
  std::string origin_;
  std::map<std::string, std::string> values_;
  mutable std::set<std::string> consumed_;
};

// Splits "a, b, c" (or whitespace-separated) into trimmed tokens.
std::vector<std::string> split_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text, const std::string& context);
std::vector<int64_t> parse_int_list(const std::string& text, const std::string& context);
std::string trim(const std::string& s);
std::string to_lower(std::string s);

}  // namespace kerneval
