#include "slownim/position.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace slownim {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::illegal_move: return "illegal-move";
    case ErrorKind::unsupported_spec: return "unsupported-spec";
    case ErrorKind::out_of_box: return "out-of-box";
    case ErrorKind::no_moves: return "no-moves";
    case ErrorKind::resource: return "resource";
    case ErrorKind::corrupt_table: return "corrupt-table";
    case ErrorKind::not_an_exception: return "not-an-exception";
    case ErrorKind::not_in_catalog: return "not-in-catalog";
  }
  return "unknown";
}

Position::Position(std::initializer_list<int> raw)
    : Position(canonicalize(std::span<const int>(raw.begin(), raw.size()))) {}

Position Position::canonicalize(std::span<const int> raw) {
  if (raw.empty()) throw Error(ErrorKind::invalid_input, "position must have at least one pile");
  if (raw.size() > kMaxPiles) {
    throw Error(ErrorKind::invalid_input,
                "at most " + std::to_string(kMaxPiles) + " piles are supported");
  }
  Position p;
  p.size_ = static_cast<std::uint8_t>(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0 || raw[i] > kMaxPileValue) {
      throw Error(ErrorKind::invalid_input, "pile size out of range: " + std::to_string(raw[i]));
    }
    p.piles_[i] = static_cast<Pile>(raw[i]);
  }
  std::sort(p.piles_.begin(), p.piles_.begin() + p.size_);
  return p;
}

Position Position::from_sorted(std::span<const Pile> piles) {
  Position p;
  p.size_ = static_cast<std::uint8_t>(piles.size());
  std::copy(piles.begin(), piles.end(), p.piles_.begin());
  return p;
}

Position Position::parse(std::string_view text) {
  std::vector<int> raw;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(ErrorKind::invalid_input, "malformed pile list: '" + std::string(text) + "'");
    }
    raw.push_back(value);
    pos = comma + 1;
  }
  return canonicalize(raw);
}

long long Position::sum() const noexcept {
  long long s = 0;
  for (Pile v : *this) s += v;
  return s;
}

std::size_t Position::nonzero_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(begin(), end(), [](Pile v) { return v != 0; }));
}

Position Position::prefix(std::size_t count) const {
  if (count == 0 || count > size_) throw Error(ErrorKind::invalid_input, "bad prefix length");
  Position p = *this;
  std::fill(p.piles_.begin() + count, p.piles_.end(), Pile{0});
  p.size_ = static_cast<std::uint8_t>(count);
  return p;
}

Position Position::extended(Pile value) const {
  if (size_ >= kMaxPiles) throw Error(ErrorKind::invalid_input, "too many piles");
  if (size_ > 0 && value < back()) {
    throw Error(ErrorKind::invalid_input, "appended pile must not be smaller than the last one");
  }
  Position p = *this;
  p.piles_[p.size_++] = value;
  return p;
}

std::vector<int> Position::to_vector() const { return {begin(), end()}; }

std::string Position::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) out += ',';
    out += std::to_string(piles_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Position& a, const Position& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Position PositionBuilder::sorted() && {
  std::sort(p_.piles_.begin(), p_.piles_.begin() + p_.size_);
  return p_;
}

std::size_t PositionHash::operator()(const Position& p) const noexcept {
  // FNV-1a over the pile values.
  std::uint64_t h = 1469598103934665603ull ^ p.size();
  for (Pile v : p) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string_view to_string(Version v) noexcept {
  return v == Version::normal ? "normal" : "misere";
}

Version parse_version(std::string_view text) {
  if (text == "normal") return Version::normal;
  if (text == "misere" || text == "misère") return Version::misere;
  throw Error(ErrorKind::invalid_input, "unknown play version: '" + std::string(text) + "'");
}

GameSpec GameSpec::make(int n, int k, Version version) {
  if (n < 1 || n > static_cast<int>(kMaxPiles)) {
    throw Error(ErrorKind::invalid_input, "pile count must be in 1.." + std::to_string(kMaxPiles));
  }
  if (k < 1 || k > n) throw Error(ErrorKind::invalid_input, "need 1 <= k <= n");
  return GameSpec{n, k, version};
}

std::string GameSpec::to_string() const {
  std::ostringstream os;
  os << "(n=" << n << ", k=" << k << ", " << slownim::to_string(version) << ")";
  return os.str();
}

int MoveChoice::count() const noexcept { return std::popcount(reduced); }

std::vector<int> MoveChoice::reduced_indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (reduced & (1u << i)) out.push_back(i);
  return out;
}

int MoveChoice::kept_index(int n) const noexcept {
  const std::uint32_t all = n >= 32 ? ~0u : ((1u << n) - 1);
  const std::uint32_t left = all & ~reduced;
  if (std::popcount(left) != 1) return -1;
  return std::countr_zero(left);
}

MoveChoice MoveChoice::keep(int kept, int n) noexcept {
  return MoveChoice{((1u << n) - 1) & ~(1u << kept)};
}

namespace {

void require_length(const Position& x, const GameSpec& spec) {
  if (static_cast<int>(x.size()) != spec.n) {
    throw Error(ErrorKind::invalid_input, "position " + x.to_string() + " has " +
                                              std::to_string(x.size()) + " piles, spec expects " +
                                              std::to_string(spec.n));
  }
}

}  // namespace

bool is_terminal(const Position& x, const GameSpec& spec) {
  require_length(x, spec);
  return static_cast<int>(x.nonzero_count()) < spec.k;
}

std::vector<Move> successors(const Position& x, const GameSpec& spec) {
  require_length(x, spec);
  std::vector<Move> out;
  for_each_successor(x, spec.k, [&](MoveChoice c, const Position& y) { out.push_back({c, y}); });
  return out;
}

Position apply_keep(const Position& x, int kept_index, const GameSpec& spec) {
  require_length(x, spec);
  if (!spec.is_keep_one()) {
    throw Error(ErrorKind::unsupported_spec, "keep moves need k = n - 1, got " + spec.to_string());
  }
  if (kept_index < 0 || kept_index >= spec.n) {
    throw Error(ErrorKind::illegal_move, "keep index out of range: " + std::to_string(kept_index));
  }
  PositionBuilder b(x);
  for (int i = 0; i < spec.n; ++i) {
    if (i == kept_index) continue;
    if (x[i] == 0) {
      throw Error(ErrorKind::illegal_move, "keeping index " + std::to_string(kept_index) + " of " +
                                               x.to_string() + " reduces an empty pile");
    }
    b.decrement(i);
  }
  return std::move(b).sorted();
}

}  // namespace slownim
