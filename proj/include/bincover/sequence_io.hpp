#pragma once

#include <bincover/core.hpp>

#include <filesystem>
#include <iosfwd>
#include <string_view>

namespace bincover {

// Text format: optional first line `# bincover v1`, then one item per line as
// `num/den` or a decimal literal. Blank lines and `#` comments are ignored.

Sequence parse_sequence(std::string_view text, std::string provenance = {});
Sequence read_sequence(const std::filesystem::path& path);

void write_sequence(std::ostream& os, const Sequence& seq);
void write_sequence(const std::filesystem::path& path, const Sequence& seq);

}  // namespace bincover
