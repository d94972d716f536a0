#include "covstream/sketch_io.hpp"

#include <bit>
#include <cstring>
#include <istream>
#include <ostream>

#include "covstream/errors.hpp"

namespace covstream {

namespace {

void put_u64(std::ostream& out, uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(buf, 8);
}

void put_u32(std::ostream& out, uint32_t v) {
  char buf[4];
  for (int i = 0; i < 4; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(buf, 4);
}

void put_f64(std::ostream& out, double v) { put_u64(out, std::bit_cast<uint64_t>(v)); }

uint64_t get_u64(std::istream& in) {
  unsigned char buf[8];
  in.read(reinterpret_cast<char*>(buf), 8);
  if (!in) throw ValidationError("sketch io: truncated input");
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(buf[i]) << (8 * i);
  return v;
}

uint32_t get_u32(std::istream& in) {
  unsigned char buf[4];
  in.read(reinterpret_cast<char*>(buf), 4);
  if (!in) throw ValidationError("sketch io: truncated input");
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(buf[i]) << (8 * i);
  return v;
}

double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

void put_header(std::ostream& out, SketchCodec::Type type) {
  out.write(SketchCodec::kMagic, 4);
  out.put(static_cast<char>(SketchCodec::kVersion));
  out.put(static_cast<char>(type));
}

SketchCodec::Type read_header(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, SketchCodec::kMagic, 4) != 0)
    throw ValidationError("sketch io: bad magic");
  const int version = in.get();
  if (version != SketchCodec::kVersion)
    throw ValidationError("sketch io: unsupported version " + std::to_string(version));
  const int type = in.get();
  if (type != SketchCodec::kF0 && type != SketchCodec::kCountMin && type != SketchCodec::kL0)
    throw ValidationError("sketch io: unknown sketch type " + std::to_string(type));
  return static_cast<SketchCodec::Type>(type);
}

}  // namespace

void SketchCodec::write(std::ostream& out, const F0Sketch& sketch) {
  put_header(out, kF0);
  put_f64(out, sketch.params().epsilon);
  put_f64(out, sketch.params().delta);
  put_u64(out, sketch.params().seed);
  put_u32(out, sketch.repetitions());
  for (const auto& kept : sketch.repetition_values()) {
    put_u64(out, kept.size());
    for (uint64_t v : kept) put_u64(out, v);
  }
}

F0Sketch SketchCodec::read_f0(std::istream& in) {
  if (read_header(in) != kF0) throw ValidationError("sketch io: expected an F0 sketch");
  F0Params params;
  params.epsilon = get_f64(in);
  params.delta = get_f64(in);
  params.seed = get_u64(in);
  F0Sketch sketch(params);
  const uint32_t reps = get_u32(in);
  if (reps != sketch.repetitions())
    throw ValidationError("sketch io: repetition count mismatch");
  for (uint32_t j = 0; j < reps; ++j) {
    const uint64_t count = get_u64(in);
    if (count > sketch.buckets()) throw ValidationError("sketch io: oversized repetition");
    auto& kept = sketch.reps_values_[j];
    for (uint64_t i = 0; i < count; ++i) kept.insert(get_u64(in));
  }
  return sketch;
}

void SketchCodec::write(std::ostream& out, const CountMinSketch& sketch) {
  put_header(out, kCountMin);
  put_u32(out, sketch.width());
  put_u32(out, sketch.depth());
  put_u64(out, sketch.key_width());
  put_u64(out, sketch.seed_);
  for (const auto& cell : sketch.cells_) {
    put_u64(out, static_cast<uint64_t>(cell.count));
    put_u64(out, cell.fp_sum);
  }
  for (uint64_t w : sketch.sums_) put_u64(out, w);
}

CountMinSketch SketchCodec::read_count_min(std::istream& in) {
  if (read_header(in) != kCountMin) throw ValidationError("sketch io: expected a count-min sketch");
  const uint32_t width = get_u32(in);
  const uint32_t depth = get_u32(in);
  const uint64_t key_width = get_u64(in);
  const uint64_t seed = get_u64(in);
  CountMinSketch sketch(width, depth, key_width, seed);
  for (auto& cell : sketch.cells_) {
    cell.count = static_cast<int64_t>(get_u64(in));
    cell.fp_sum = get_u64(in);
  }
  for (auto& w : sketch.sums_) w = get_u64(in);
  return sketch;
}

void SketchCodec::write(std::ostream& out, const L0Sampler& sampler) {
  put_header(out, kL0);
  put_u64(out, sampler.key_width());
  put_f64(out, sampler.delta_);
  put_u64(out, sampler.seed_);
  put_u32(out, sampler.levels());
  for (const auto& cell : sampler.cells_) {
    put_u64(out, static_cast<uint64_t>(cell.count));
    put_u64(out, cell.fp_sum);
  }
  for (uint64_t w : sampler.sums_) put_u64(out, w);
}

L0Sampler SketchCodec::read_l0(std::istream& in) {
  if (read_header(in) != kL0) throw ValidationError("sketch io: expected an l0 sampler");
  const uint64_t key_width = get_u64(in);
  const double delta = get_f64(in);
  const uint64_t seed = get_u64(in);
  const uint32_t levels = get_u32(in);
  L0Sampler sampler(key_width, delta, seed, levels);
  for (auto& cell : sampler.cells_) {
    cell.count = static_cast<int64_t>(get_u64(in));
    cell.fp_sum = get_u64(in);
  }
  for (auto& w : sampler.sums_) w = get_u64(in);
  return sampler;
}

SketchCodec::Type SketchCodec::peek_type(std::istream& in) {
  const auto pos = in.tellg();
  const Type t = read_header(in);
  in.seekg(pos);
  return t;
}

}  // namespace covstream
