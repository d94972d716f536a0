#include "covstream/stream.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "covstream/errors.hpp"

namespace covstream {

namespace {

bool parse_i64(std::string_view token, int64_t& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int64_t parse_header_field(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key ||
      token[key.size()] != '=')
    throw ValidationError("bad SETSTREAM header field: expected " + std::string(key) + "=<int>");
  int64_t v = 0;
  if (!parse_i64(token.substr(key.size() + 1), v) || v < 0)
    throw ValidationError("bad SETSTREAM header value for " + std::string(key));
  return v;
}

}  // namespace

void validate_record(const SetRecord& rec, uint32_t n, const std::string& context) {
  if (rec.elements.empty())
    throw ValidationError(context + ": empty sets are rejected");
  uint32_t prev = 0;
  bool first = true;
  for (uint32_t e : rec.elements) {
    if (e >= n)
      throw ValidationError(context + ": element " + std::to_string(e) +
                            " outside universe [0," + std::to_string(n) + ")");
    if (!first && e <= prev)
      throw ValidationError(context + ": elements must be strictly increasing");
    prev = e;
    first = false;
  }
}

ParsedStream parse_setstream(std::istream& in) {
  ParsedStream out;
  std::string line;
  bool have_header = false;
  size_t event_index = 0;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (!have_header) {
      if (tokens.size() != 4 || tokens[0] != "SETSTREAM" || tokens[1] != "v1")
        throw ValidationError("line " + std::to_string(line_no) +
                              ": expected header 'SETSTREAM v1 n=<int> k=<int>'");
      out.n = static_cast<uint32_t>(parse_header_field(tokens[2], "n"));
      out.k = static_cast<uint32_t>(parse_header_field(tokens[3], "k"));
      if (out.k < 1) throw ValidationError("header: k must be >= 1");
      have_header = true;
      continue;
    }
    StreamEvent ev;
    if (tokens[0] == "+") {
      ev.op = StreamOp::kInsert;
    } else if (tokens[0] == "-") {
      ev.op = StreamOp::kDelete;
    } else {
      throw ValidationError("line " + std::to_string(line_no) + ": expected '+' or '-' event");
    }
    if (tokens.size() < 3)
      throw ValidationError("line " + std::to_string(line_no) +
                            ": event needs an id and at least one element");
    if (!parse_i64(tokens[1], ev.set.id))
      throw ValidationError("line " + std::to_string(line_no) + ": bad set id");
    ev.set.elements.reserve(tokens.size() - 2);
    for (size_t t = 2; t < tokens.size(); ++t) {
      int64_t e = 0;
      if (!parse_i64(tokens[t], e) || e < 0)
        throw ValidationError("line " + std::to_string(line_no) + ": bad element token");
      ev.set.elements.push_back(static_cast<uint32_t>(e));
    }
    validate_record(ev.set, out.n, "event " + std::to_string(event_index));
    out.events.push_back(std::move(ev));
    ++event_index;
  }
  if (!have_header) throw ValidationError("missing SETSTREAM v1 header");
  return out;
}

ParsedStream parse_setstream_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open stream file: " + path);
  return parse_setstream(in);
}

void write_setstream(std::ostream& out, const ParsedStream& stream, const std::string& comment) {
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string l;
    while (std::getline(lines, l)) out << "# " << l << "\n";
  }
  out << "SETSTREAM v1 n=" << stream.n << " k=" << stream.k << "\n";
  for (const auto& ev : stream.events) {
    out << (ev.op == StreamOp::kInsert ? '+' : '-') << ' ' << ev.set.id;
    for (uint32_t e : ev.set.elements) out << ' ' << e;
    out << "\n";
  }
}

void write_setstream_file(const std::string& path, const ParsedStream& stream,
                          const std::string& comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open output file: " + path);
  write_setstream(out, stream, comment);
}

}  // namespace covstream
