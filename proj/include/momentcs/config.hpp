#ifndef MOMENTCS_CONFIG_HPP
#define MOMENTCS_CONFIG_HPP

#include <string>
#include <string_view>
#include <vector>

namespace momentcs {

/// One `key = value` line from a config file.
struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};

/// Parses line-oriented `key = value` text. Blank lines and lines starting
/// with '#' are skipped; keys and values are trimmed. Throws
/// std::invalid_argument on lines without '=' or with an empty key.
std::vector<ConfigEntry> parse_config_text(std::string_view text);

/// parse_config_text over a file's contents.
std::vector<ConfigEntry> parse_config_file(const std::string& path);

}  // namespace momentcs

#endif
