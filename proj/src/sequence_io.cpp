#include <bincover/sequence_io.hpp>

#include <fstream>
#include <sstream>

namespace bincover {

Sequence parse_sequence(std::string_view text, std::string provenance) {
  Sequence seq;
  seq.provenance = std::move(provenance);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      seq.items.emplace_back(parse_rational(line));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return seq;
}

Sequence read_sequence(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_sequence(buf.str(), path.filename().string());
}

void write_sequence(std::ostream& os, const Sequence& seq) {
  os << "# bincover v1\n";
  if (!seq.provenance.empty()) os << "# " << seq.provenance << '\n';
  for (const auto& item : seq.items) os << to_string(item) << '\n';
}

void write_sequence(const std::filesystem::path& path, const Sequence& seq) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  write_sequence(out, seq);
}

}  // namespace bincover
