#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace covstream {

/// One input set: an id and a strictly increasing element list over [0, n).
struct SetRecord {
  int64_t id = 0;
  std::vector<uint32_t> elements;

  uint32_t size() const { return static_cast<uint32_t>(elements.size()); }
  bool operator==(const SetRecord&) const = default;
};

enum class StreamOp : uint8_t { kInsert, kDelete };

struct StreamEvent {
  StreamOp op = StreamOp::kInsert;
  SetRecord set;
};

struct ParsedStream {
  uint32_t n = 0;
  uint32_t k = 0;
  std::vector<StreamEvent> events;
};

// SETSTREAM v1 text format:
//   # comment
//   SETSTREAM v1 n=<int> k=<int>
//   + <id> <e1> <e2> ...
//   - <id> <e1> <e2> ...
// Elements sorted ascending, no duplicates, all in [0, n). Empty sets are
// rejected at parse time.
ParsedStream parse_setstream(std::istream& in);
ParsedStream parse_setstream_file(const std::string& path);

void write_setstream(std::ostream& out, const ParsedStream& stream,
                     const std::string& comment = "");
void write_setstream_file(const std::string& path, const ParsedStream& stream,
                          const std::string& comment = "");

/// Validates a single record against universe size n (sorted, in-range,
/// nonempty). Throws ValidationError with `context` in the message.
void validate_record(const SetRecord& rec, uint32_t n, const std::string& context);

}  // namespace covstream
