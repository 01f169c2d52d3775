#include "slownim/solver.hpp"

#include <algorithm>
#include <mutex>

namespace slownim {

namespace {

constexpr std::size_t kShards = 64;

struct MexFold {
  void add(std::uint32_t v) {
    if (v >= seen.size()) seen.resize(v + 1, false);
    seen[v] = true;
  }
  std::uint32_t result(Version) const {
    std::uint32_t m = 0;
    while (m < seen.size() && seen[m]) ++m;
    return m;
  }
  std::vector<bool> seen;
};

}  // namespace

int representative_keep(const Position& x, MoveChoice choice) {
  const int n = static_cast<int>(x.size());
  int kept = choice.kept_index(n);
  if (kept < 0) return -1;
  while (kept + 1 < n && x[kept + 1] == x[kept]) ++kept;
  return kept;
}

struct Solver::Shard {
  mutable std::shared_mutex mutex;
  std::unordered_map<Position, std::uint32_t, PositionHash> values;

  std::optional<std::uint32_t> find(const Position& x) const {
    std::shared_lock lock(mutex);
    auto it = values.find(x);
    if (it == values.end()) return std::nullopt;
    return it->second;
  }
  void publish(const Position& x, std::uint32_t v) {
    std::unique_lock lock(mutex);
    values.try_emplace(x, v);
  }
};

Solver::Solver(GameSpec spec)
    : spec_(GameSpec::make(spec.n, spec.k, spec.version)),
      remoteness_memo_(std::make_unique<Shard[]>(kShards)),
      sg_memo_(std::make_unique<Shard[]>(kShards)) {}

Solver::~Solver() = default;

template <typename Fold, typename Value>
Value Solver::evaluate(const Position& x, std::unique_ptr<Shard[]>& memo) {
  auto shard = [&](const Position& p) -> Shard& { return memo[PositionHash{}(p) % kShards]; };
  if (auto v = shard(x).find(x)) return static_cast<Value>(*v);

  struct Frame {
    Position pos;
    std::vector<Position> next;
    std::size_t cursor = 0;
    Fold fold;
  };
  auto make_frame = [&](const Position& p) {
    Frame f{p, {}, 0, {}};
    for_each_successor(p, spec_.k, [&](MoveChoice, const Position& y) { f.next.push_back(y); });
    return f;
  };

  std::vector<Frame> stack;
  stack.push_back(make_frame(x));
  std::uint32_t last = 0;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.cursor < top.next.size()) {
      const Position& y = top.next[top.cursor];
      if (auto v = shard(y).find(y)) {
        top.fold.add(static_cast<Value>(*v));
        ++top.cursor;
      } else {
        Frame child = make_frame(y);
        stack.push_back(std::move(child));
      }
      continue;
    }
    last = static_cast<std::uint32_t>(top.fold.result(spec_.version));
    shard(top.pos).publish(top.pos, last);
    stack.pop_back();
    if (!stack.empty()) {
      stack.back().fold.add(static_cast<Value>(last));
      ++stack.back().cursor;
    }
  }
  return static_cast<Value>(last);
}

Remoteness Solver::remoteness(const Position& x) {
  is_terminal(x, spec_);  // length check
  return evaluate<RemotenessFold, Remoteness>(x, remoteness_memo_);
}

std::vector<Move> Solver::optimal_moves(const Position& x) {
  if (is_terminal(x, spec_)) {
    throw Error(ErrorKind::no_moves, x.to_string() + " is terminal");
  }
  const Remoteness target = static_cast<Remoteness>(remoteness(x) - 1);
  std::vector<Move> out;
  for (Move& m : successors(x, spec_)) {
    if (remoteness(m.next) == target) out.push_back(std::move(m));
  }
  return out;
}

std::vector<int> Solver::optimal_keeps(const Position& x) {
  if (!spec_.is_keep_one()) {
    throw Error(ErrorKind::unsupported_spec, "keep indices need k = n - 1");
  }
  std::vector<int> keeps;
  for (const Move& m : optimal_moves(x)) keeps.push_back(representative_keep(x, m.choice));
  std::sort(keeps.begin(), keeps.end());
  return keeps;
}

int Solver::sg_value(const Position& x) {
  if (spec_.version != Version::normal) {
    throw Error(ErrorKind::unsupported_spec, "Sprague-Grundy values are computed for normal play only");
  }
  is_terminal(x, spec_);
  return static_cast<int>(evaluate<MexFold, std::uint32_t>(x, sg_memo_));
}

std::size_t Solver::cached_positions() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < kShards; ++i) {
    std::shared_lock lock(remoteness_memo_[i].mutex);
    total += remoteness_memo_[i].values.size();
  }
  return total;
}

Remoteness remoteness(const Position& x, const GameSpec& spec) { return Solver(spec).remoteness(x); }
Winner winner(const Position& x, const GameSpec& spec) { return Solver(spec).winner(x); }
std::vector<Move> optimal_moves(const Position& x, const GameSpec& spec) {
  return Solver(spec).optimal_moves(x);
}
int sg_value(const Position& x, const GameSpec& spec) { return Solver(spec).sg_value(x); }

}  // namespace slownim
