#pragma once

#include <iosfwd>
#include <string>

#include "covstream/count_min.hpp"
#include "covstream/f0_sketch.hpp"
#include "covstream/l0_sampler.hpp"

namespace covstream {

// Binary sketch container: 4-byte magic "CVSK", version byte, type byte,
// then a type-specific parameter block followed by little-endian state.
// Used by the CLI to checkpoint per-set sketches at the end of a stream.
class SketchCodec {
 public:
  static constexpr char kMagic[4] = {'C', 'V', 'S', 'K'};
  static constexpr uint8_t kVersion = 1;
  enum Type : uint8_t { kF0 = 1, kCountMin = 2, kL0 = 3 };

  static void write(std::ostream& out, const F0Sketch& sketch);
  static void write(std::ostream& out, const CountMinSketch& sketch);
  static void write(std::ostream& out, const L0Sampler& sampler);

  /// Peeks the type byte after validating magic and version.
  static Type peek_type(std::istream& in);

  static F0Sketch read_f0(std::istream& in);
  static CountMinSketch read_count_min(std::istream& in);
  static L0Sampler read_l0(std::istream& in);
};

}  // namespace covstream
