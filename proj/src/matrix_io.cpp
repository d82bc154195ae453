#include "anscombe/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace anscombe {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

VoterMatrix parse_matrix(std::string_view text) {
  std::vector<VoterRow> rows;
  int topics = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::uint64_t weight = 1;
    if (std::isdigit(static_cast<unsigned char>(line.front()))) {
      const char* begin = line.data();
      const char* end = line.data() + line.size();
      auto [ptr, ec] = std::from_chars(begin, end, weight);
      if (ec != std::errc{}) throw MalformedInput("weight out of range", line_no);
      if (ptr == end || *ptr != 'x') throw MalformedInput("expected 'x' after weight", line_no);
      ++ptr;
      if (ptr == end || !std::isspace(static_cast<unsigned char>(*ptr))) {
        throw MalformedInput("expected whitespace between weight and opinions", line_no);
      }
      if (weight == 0) throw MalformedInput("weight must be at least 1", line_no);
      line = trim(std::string_view(ptr, static_cast<std::size_t>(end - ptr)));
    }

    OpinionVector opinions;
    try {
      opinions = OpinionVector::parse(line);
    } catch (const Error& e) {
      throw MalformedInput(e.what(), line_no);
    }
    if (topics == 0) topics = opinions.topics();
    if (opinions.topics() != topics) {
      throw MalformedInput("row has " + std::to_string(opinions.topics()) + " topics, expected " +
                               std::to_string(topics),
                           line_no);
    }
    rows.push_back({opinions, weight});
  }
  if (rows.empty()) throw MalformedInput("no voter lines");
  try {
    return VoterMatrix(topics, std::move(rows));
  } catch (const ResourceLimit& e) {
    throw MalformedInput(e.what());
  }
}

VoterMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string format_matrix(const VoterMatrix& v, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  for (const auto& row : v.rows()) {
    if (row.weight != 1) out += std::to_string(row.weight) + "x ";
    out += row.opinions.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace anscombe
