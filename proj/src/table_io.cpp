#include <array>
#include <cstring>
#include <fstream>
#include <ostream>
#include <string>

#include "slownim/table.hpp"

namespace slownim {

namespace {

constexpr std::array<char, 8> kMagic{'S', 'L', 'O', 'W', 'N', 'I', 'M', '1'};
constexpr std::size_t kHeaderBytes = 8 + 4 * 4 + 8;

class Fnv1a {
 public:
  void update(const unsigned char* p, std::size_t len) noexcept {
    for (std::size_t i = 0; i < len; ++i) {
      h_ ^= p[i];
      h_ *= 1099511628211ull;
    }
  }
  std::uint64_t digest() const noexcept { return h_; }

 private:
  std::uint64_t h_ = 1469598103934665603ull;
};

template <typename T>
void put_le(std::string& buf, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

template <typename T>
T get_le(const unsigned char* p) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(static_cast<T>(p[i]) << (8 * i));
  return v;
}

[[noreturn]] void corrupt(const std::string& why) {
  throw Error(ErrorKind::corrupt_table, "corrupt table: " + why);
}

TableHeader parse_header(const unsigned char* p) {
  if (std::memcmp(p, kMagic.data(), kMagic.size()) != 0) corrupt("bad magic");
  const auto n = get_le<std::uint32_t>(p + 8);
  const auto k = get_le<std::uint32_t>(p + 12);
  const auto version = get_le<std::uint32_t>(p + 16);
  const auto cap = get_le<std::uint32_t>(p + 20);
  const auto count = get_le<std::uint64_t>(p + 24);
  if (version > 1) corrupt("unknown play version " + std::to_string(version));
  if (n < 1 || n > kMaxPiles || k < 1 || k > n) corrupt("bad pile counts");
  if (cap > static_cast<std::uint32_t>(kMaxPileValue)) corrupt("bad cap");
  TableHeader h;
  h.spec = GameSpec{static_cast<int>(n), static_cast<int>(k), static_cast<Version>(version)};
  h.cap = static_cast<int>(cap);
  h.count = count;
  if (count != box_size(h.spec.n, h.cap)) corrupt("entry count does not match the box");
  return h;
}

}  // namespace

void save_table(const SolveTable& table, std::ostream& out) {
  std::string buf;
  buf.reserve(kHeaderBytes + table.size() * 2 + 8);
  buf.append(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(table.spec().n));
  put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(table.spec().k));
  put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(table.spec().version));
  put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(table.cap()));
  put_le<std::uint64_t>(buf, table.size());
  for (Remoteness v : table.values()) put_le<std::uint16_t>(buf, v);
  Fnv1a sum;
  sum.update(reinterpret_cast<const unsigned char*>(buf.data()), buf.size());
  put_le<std::uint64_t>(buf, sum.digest());
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw Error(ErrorKind::resource, "failed writing table");
}

void save_table(const SolveTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::resource, "cannot open " + path.string() + " for writing");
  save_table(table, out);
}

SolveTable load_table(std::istream& in) {
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto* p = reinterpret_cast<const unsigned char*>(buf.data());
  if (buf.size() < kHeaderBytes) corrupt("truncated header");
  const TableHeader h = parse_header(p);
  const std::size_t expected = kHeaderBytes + h.count * 2 + 8;
  if (buf.size() < expected) corrupt("truncated payload");
  if (buf.size() > expected) corrupt("trailing bytes");
  Fnv1a sum;
  sum.update(p, expected - 8);
  if (sum.digest() != get_le<std::uint64_t>(p + expected - 8)) corrupt("checksum mismatch");
  std::vector<Remoteness> values(h.count);
  for (std::size_t i = 0; i < h.count; ++i) values[i] = get_le<std::uint16_t>(p + kHeaderBytes + 2 * i);
  return SolveTable(h.spec, h.cap, std::move(values));
}

SolveTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::corrupt_table, "cannot open " + path.string());
  return load_table(in);
}

TableHeader read_table_header(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::array<unsigned char, kHeaderBytes> head{};
  in.read(reinterpret_cast<char*>(head.data()), head.size());
  if (in.gcount() != static_cast<std::streamsize>(head.size())) corrupt("truncated header");
  return parse_header(head.data());
}

void export_jsonl(const SolveTable& table, std::ostream& out) {
  Rank r = 0;
  std::string line;
  for (const Position& x : enumerate_box(table.spec().n, table.cap())) {
    const Remoteness v = table.at_rank(r++);
    line = "{\"piles\":[" + x.to_string() + "],\"remoteness\":" + std::to_string(v) +
           ",\"winner\":\"" + to_char(winner_from_remoteness(v)) + "\"}\n";
    out << line;
  }
}

void export_csv(const SolveTable& table, std::ostream& out) {
  for (int i = 1; i <= table.spec().n; ++i) out << 'x' << i << ',';
  out << "remoteness,winner\n";
  Rank r = 0;
  for (const Position& x : enumerate_box(table.spec().n, table.cap())) {
    const Remoteness v = table.at_rank(r++);
    out << x.to_string() << ',' << v << ',' << to_char(winner_from_remoteness(v)) << '\n';
  }
}

}  // namespace slownim
