#include "nga/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "nga/errors.hpp"
#include "nga/rng.hpp"

namespace nga {

namespace {

constexpr char kMagic[8] = {'N', 'G', 'A', 'S', 'N', 'A', 'P', 'F'};
constexpr std::uint32_t kFormatVersion = 1;

std::uint64_t fnv1a_bytes(const char* data, std::size_t size) {
  std::uint64_t h = 14695981039346656037ull;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= 1099511628211ull;
  }
  return h;
}

class Writer {
 public:
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void bytes(const char* data, std::size_t size) { buf_.insert(buf_.end(), data, data + size); }
  void str(const std::string& s) {
    u64(s.size());
    bytes(s.data(), s.size());
  }
  void f64_array(const std::vector<double>& v) {
    for (const double x : v) f64(x);
  }
  std::vector<char>& buffer() { return buf_; }

 private:
  std::vector<char> buf_;
};

class Reader {
 public:
  Reader(const char* data, std::size_t size) : data_(data), size_(size) {}

  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(byte()) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(byte()) << (8 * i);
    return v;
  }
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  double f64() { return std::bit_cast<double>(u64()); }
  std::string str() {
    const std::uint64_t len = u64();
    need(len);
    std::string s(data_ + pos_, len);
    pos_ += len;
    return s;
  }
  void f64_array(std::vector<double>& out, std::size_t count) {
    out.resize(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = f64();
  }
  void raw(char* out, std::size_t count) {
    need(count);
    std::memcpy(out, data_ + pos_, count);
    pos_ += count;
  }
  std::size_t position() const { return pos_; }

 private:
  unsigned char byte() { return static_cast<unsigned char>(data_[pos_++]); }
  void need(std::uint64_t count) const {
    if (pos_ + count > size_) throw RuntimeError("snapshot: truncated file");
  }
  const char* data_;
  std::size_t size_;
  std::size_t pos_ = 0;
};

}  // namespace

void save_snapshot(const std::filesystem::path& file, const SnapshotState& s) {
  const std::size_t n = s.graph.neuron_count;
  const std::size_t r = s.graph.size();
  const std::size_t a = s.abstraction_weights.size();

  Writer w;
  w.bytes(kMagic, sizeof(kMagic));
  w.u32(kFormatVersion);
  w.u32(0);  // reserved
  w.str(s.config_text);
  w.u64(s.master_seed);
  w.u64(s.presentations);
  w.u32(s.current_letter);
  w.u32(static_cast<std::uint32_t>(n));
  w.u64(r);
  w.u64(a);
  w.u64(s.repertoire_draws);
  w.u64(s.abstraction_draws);
  w.u64(s.letter_draws);
  w.u64(s.recognition_degenerate);
  w.u64(s.abstraction_degenerate);

  for (const auto& m : s.graph.groups) w.f64_array(m.raw());
  for (const auto& adj : s.graph.neighbors) {
    w.u32(static_cast<std::uint32_t>(adj.size()));
    for (const auto v : adj) w.u32(v);
  }
  for (const auto p : s.graph.parent) w.i64(p);
  for (const auto l : s.graph.layer) w.u32(l);
  w.f64_array(s.excitations);
  for (const auto q : s.last_flips) w.u64(q);

  for (const auto& m : s.abstraction_weights) w.f64_array(m.raw());
  for (const auto anchor : s.abstraction_map.anchors) w.u64(anchor);
  for (const auto& conn : s.abstraction_map.connections) {
    w.u32(static_cast<std::uint32_t>(conn.size()));
    for (const auto v : conn) w.u32(v);
  }

  const std::uint64_t checksum = fnv1a_bytes(w.buffer().data(), w.buffer().size());
  w.u64(checksum);

  std::ofstream out(file, std::ios::binary);
  if (!out) throw RuntimeError("cannot write snapshot: " + file.string());
  out.write(w.buffer().data(), static_cast<std::streamsize>(w.buffer().size()));
  if (!out) throw RuntimeError("snapshot write failed: " + file.string());
}

SnapshotState load_snapshot(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary | std::ios::ate);
  if (!in) throw RuntimeError("cannot open snapshot: " + file.string());
  const std::streamsize size = in.tellg();
  in.seekg(0);
  std::vector<char> bytes(static_cast<std::size_t>(size));
  in.read(bytes.data(), size);
  if (!in) throw RuntimeError("snapshot read failed: " + file.string());

  if (bytes.size() < sizeof(kMagic) + 12 ||
      std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0) {
    throw RuntimeError("snapshot: bad magic header in " + file.string());
  }
  Reader r(bytes.data(), bytes.size());
  char magic[8];
  r.raw(magic, 8);
  const std::uint32_t version = r.u32();
  if (version != kFormatVersion) {
    throw RuntimeError("snapshot: unsupported format version " + std::to_string(version));
  }
  r.u32();  // reserved

  SnapshotState s;
  s.config_text = r.str();
  s.master_seed = r.u64();
  s.presentations = r.u64();
  s.current_letter = r.u32();
  const std::size_t n = r.u32();
  const std::size_t rr = r.u64();
  const std::size_t a = r.u64();
  s.repertoire_draws = r.u64();
  s.abstraction_draws = r.u64();
  s.letter_draws = r.u64();
  s.recognition_degenerate = r.u64();
  s.abstraction_degenerate = r.u64();

  s.graph.neuron_count = n;
  s.graph.groups.reserve(rr);
  for (std::size_t i = 0; i < rr; ++i) {
    WeightMatrix m(n);
    r.f64_array(m.raw(), n * n);
    s.graph.groups.push_back(std::move(m));
  }
  s.graph.neighbors.resize(rr);
  for (auto& adj : s.graph.neighbors) {
    adj.resize(r.u32());
    for (auto& v : adj) v = r.u32();
  }
  s.graph.parent.resize(rr);
  for (auto& p : s.graph.parent) p = r.i64();
  s.graph.layer.resize(rr);
  for (auto& l : s.graph.layer) l = r.u32();
  r.f64_array(s.excitations, rr);
  s.last_flips.resize(rr);
  for (auto& q : s.last_flips) q = r.u64();

  s.abstraction_weights.reserve(a);
  for (std::size_t i = 0; i < a; ++i) {
    WeightMatrix m(n);
    r.f64_array(m.raw(), n * n);
    s.abstraction_weights.push_back(std::move(m));
  }
  s.abstraction_map.anchors.resize(a);
  for (auto& anchor : s.abstraction_map.anchors) anchor = r.u64();
  s.abstraction_map.connections.resize(a);
  for (auto& conn : s.abstraction_map.connections) {
    conn.resize(r.u32());
    for (auto& v : conn) v = r.u32();
  }

  const std::size_t body_end = r.position();
  const std::uint64_t checksum = r.u64();
  if (checksum != fnv1a_bytes(bytes.data(), body_end)) {
    throw RuntimeError("snapshot: checksum mismatch (corrupt file?) in " + file.string());
  }
  return s;
}

std::uint64_t file_fingerprint(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw RuntimeError("cannot open file: " + file.string());
  std::uint64_t h = 14695981039346656037ull;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace nga
