#include "multibase/counting.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

#include "multibase/bases.hpp"
#include "multibase/error.hpp"

namespace multibase {

namespace {

using Key = std::vector<Rational>;
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

Integer floor_of(const Rational& r) {
  Integer z;
  mpz_fdiv_q(z.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return z;
}

Integer ceil_of(const Rational& r) {
  Integer z;
  mpz_cdiv_q(z.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return z;
}

/// allowed_digits without the membership check on x.
std::vector<int> digits_from(const FieldElement& x, const BaseContext& ctx) {
  const int M = ctx.alphabet.M;
  FieldElement t = ctx.q_elem * x;
  Interval te = t.enclosure();
  Interval ue = ctx.upper.enclosure();
  long lo = std::max<long>(0, ceil_of(te.lo - ue.hi).get_si());
  long hi = std::min<long>(M, floor_of(te.hi).get_si());
  std::vector<int> out;
  for (long d = lo; d <= hi; ++d) {
    FieldElement y = t - Rational(d);
    if (sign_of(y) >= 0 && compare(ctx.upper, y) >= 0) out.push_back(static_cast<int>(d));
  }
  return out;
}

void require_in_interval(const FieldElement& x, const BaseContext& ctx) {
  require_same_field(x, ctx.q_elem);
  if (sign_of(x) < 0 || compare(x, ctx.upper) > 0) {
    throw Error(ErrorCode::OutOfInterval, "x lies outside [0, M/(q-1)]");
  }
}

}  // namespace

SwitchRegion switch_region(const BaseContext& ctx) {
  SwitchRegion region;
  const FieldElement& qi = ctx.q_inv;
  FieldElement top = ctx.upper * qi;
  for (int k = 1; k <= ctx.alphabet.M; ++k) {
    region.overlaps.push_back({k, Rational(k) * qi, Rational(k - 1) * qi + top});
  }
  return region;
}

std::vector<int> allowed_digits(const FieldElement& x, const BaseContext& ctx) {
  require_in_interval(x, ctx);
  return digits_from(x, ctx);
}

UniqueCertificate certify_unique(const FieldElement& x, const BaseContext& ctx, int depth_cap) {
  require_in_interval(x, ctx);
  UniqueCertificate cert;
  std::map<Key, int> seen;
  Word digits;
  FieldElement r = x;
  for (int step = 0; step <= depth_cap; ++step) {
    auto [it, fresh] = seen.emplace(r.coeffs(), step);
    if (!fresh) {
      size_t start = static_cast<size_t>(it->second);
      cert.status = UniqueStatus::Unique;
      cert.expansion = DigitSeq(Word(digits.begin(), digits.begin() + static_cast<long>(start)),
                                Word(digits.begin() + static_cast<long>(start), digits.end()));
      cert.steps = step;
      return cert;
    }
    if (step == depth_cap) break;
    std::vector<int> ds = digits_from(r, ctx);
    if (ds.size() != 1) {
      cert.status = UniqueStatus::NotUnique;
      cert.steps = step;
      return cert;
    }
    digits.push_back(ds[0]);
    r = ctx.q_elem * r - Rational(ds[0]);
  }
  cert.status = UniqueStatus::Unknown;
  cert.steps = depth_cap;
  return cert;
}

std::string_view count_kind_name(CountKind kind) {
  switch (kind) {
    case CountKind::Exactly: return "Exactly";
    case CountKind::AtLeast: return "AtLeast";
    case CountKind::Undecided: return "Undecided";
  }
  return "?";
}

namespace {

struct Node {
  FieldElement x;
  int dist = 0;
  bool expanded = false;
  int parent = -1;
  int parent_digit = -1;
  std::vector<std::pair<int, int>> edges;  // (digit, target)
};

/// Iterative Tarjan; components come out in reverse topological order.
std::vector<std::vector<int>> strongly_connected(const std::vector<Node>& nodes) {
  const int n = static_cast<int>(nodes.size());
  std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<char> on_stack(static_cast<size_t>(n), 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;
  struct Frame {
    int v;
    size_t next;
  };
  for (int s = 0; s < n; ++s) {
    if (index[static_cast<size_t>(s)] != -1) continue;
    std::vector<Frame> call{{s, 0}};
    index[static_cast<size_t>(s)] = low[static_cast<size_t>(s)] = counter++;
    stack.push_back(s);
    on_stack[static_cast<size_t>(s)] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& edges = nodes[static_cast<size_t>(f.v)].edges;
      if (f.next < edges.size()) {
        int w = edges[f.next++].second;
        if (index[static_cast<size_t>(w)] == -1) {
          index[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = counter++;
          stack.push_back(w);
          on_stack[static_cast<size_t>(w)] = 1;
          call.push_back({w, 0});
        } else if (on_stack[static_cast<size_t>(w)]) {
          low[static_cast<size_t>(f.v)] = std::min(low[static_cast<size_t>(f.v)], index[static_cast<size_t>(w)]);
        }
        continue;
      }
      int v = f.v;
      call.pop_back();
      if (!call.empty()) {
        int u = call.back().v;
        low[static_cast<size_t>(u)] = std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(v)]);
      }
      if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<size_t>(w)] = 0;
          comp.push_back(w);
        } while (w != v);
        comps.push_back(std::move(comp));
      }
    }
  }
  return comps;
}

Word path_to(const std::vector<Node>& nodes, int v) {
  Word w;
  for (; nodes[static_cast<size_t>(v)].parent != -1; v = nodes[static_cast<size_t>(v)].parent) {
    w.push_back(nodes[static_cast<size_t>(v)].parent_digit);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

constexpr size_t kMaxReportedBranches = 256;

}  // namespace

CountResult count_expansions(const FieldElement& x, const BaseContext& ctx, const CountOptions& options) {
  require_in_interval(x, ctx);
  const int depth_cap = std::max(0, options.depth_cap);

  std::vector<Node> nodes;
  std::map<Key, int> index_of;
  nodes.push_back({x, 0, false, -1, -1, {}});
  index_of.emplace(x.coeffs(), 0);
  int budget_dist = std::numeric_limits<int>::max();
  bool closed = true;

  for (size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].dist >= depth_cap) {
      closed = false;
      continue;
    }
    if (nodes.size() >= options.state_budget) {
      closed = false;
      budget_dist = std::min(budget_dist, nodes[head].dist);
      continue;
    }
    FieldElement here = nodes[head].x;
    const int dist = nodes[head].dist;
    nodes[head].expanded = true;
    for (int d : digits_from(here, ctx)) {
      FieldElement child = ctx.q_elem * here - Rational(d);
      auto [it, fresh] = index_of.emplace(child.coeffs(), static_cast<int>(nodes.size()));
      if (fresh) nodes.push_back({std::move(child), dist + 1, false, static_cast<int>(head), d, {}});
      nodes[head].edges.emplace_back(d, it->second);
    }
  }

  CountResult result;
  result.states = nodes.size();
  result.graph_closed = closed;
  const int valid_depth = std::min(depth_cap, budget_dist);
  result.depth_used = valid_depth;

  // distinct prefixes of each length = labelled paths of that length
  std::vector<std::uint64_t> ways(nodes.size(), 0), next(nodes.size(), 0);
  ways[0] = 1;
  result.prefix_counts.push_back(1);
  for (int n = 1; n <= valid_depth; ++n) {
    std::fill(next.begin(), next.end(), 0);
    for (size_t v = 0; v < nodes.size(); ++v) {
      if (ways[v] == 0) continue;
      for (const auto& [d, w] : nodes[v].edges) next[static_cast<size_t>(w)] = sat_add(next[static_cast<size_t>(w)], ways[v]);
    }
    std::swap(ways, next);
    std::uint64_t total = 0;
    for (auto c : ways) total = sat_add(total, c);
    result.prefix_counts.push_back(total);
  }

  auto comps = strongly_connected(nodes);
  std::vector<int> comp_of(nodes.size(), -1);
  std::vector<char> cyclic(comps.size(), 0);
  for (size_t c = 0; c < comps.size(); ++c) {
    for (int v : comps[c]) comp_of[static_cast<size_t>(v)] = static_cast<int>(c);
  }
  for (size_t c = 0; c < comps.size(); ++c) {
    if (comps[c].size() > 1) {
      cyclic[c] = 1;
      continue;
    }
    int v = comps[c][0];
    for (const auto& e : nodes[static_cast<size_t>(v)].edges) {
      if (e.second == v) cyclic[c] = 1;
    }
  }
  for (size_t v = 0; v < nodes.size(); ++v) {
    if (cyclic[static_cast<size_t>(comp_of[v])] && nodes[v].edges.size() >= 2) result.infinite_proven = true;
  }

  for (size_t v = 0; v < nodes.size() && result.branches.size() < kMaxReportedBranches; ++v) {
    if (nodes[v].edges.size() < 2) continue;
    Word opts;
    for (const auto& e : nodes[v].edges) opts.push_back(e.first);
    result.branches.push_back({path_to(nodes, static_cast<int>(v)), opts});
  }
  std::sort(result.branches.begin(), result.branches.end(),
            [](const BranchEvent& a, const BranchEvent& b) { return a.prefix < b.prefix; });

  if (result.infinite_proven) {
    result.kind = CountKind::AtLeast;
    result.count = result.prefix_counts.back();
    return result;
  }
  if (!closed) {
    result.kind = CountKind::Undecided;
    result.count = result.prefix_counts.back();
    return result;
  }

  // Closed and no branching on cycles: every cyclic component is an exit-free
  // simple cycle, each contributing one expansion.
  std::vector<std::uint64_t> paths(nodes.size(), 0);
  for (size_t c = 0; c < comps.size(); ++c) {
    for (int v : comps[c]) {
      if (cyclic[c]) {
        paths[static_cast<size_t>(v)] = 1;
        continue;
      }
      std::uint64_t sum = 0;
      for (const auto& e : nodes[static_cast<size_t>(v)].edges) sum = sat_add(sum, paths[static_cast<size_t>(e.second)]);
      paths[static_cast<size_t>(v)] = sum;
    }
  }
  result.count = paths[0];
  if (result.count > options.branch_cap) {
    result.kind = CountKind::AtLeast;
    return result;
  }
  result.kind = CountKind::Exactly;

  Word prefix;
  std::function<void(int)> walk = [&](int v) {
    if (cyclic[static_cast<size_t>(comp_of[static_cast<size_t>(v)])]) {
      Word cycle;
      int w = v;
      do {
        const auto& e = nodes[static_cast<size_t>(w)].edges.front();
        cycle.push_back(e.first);
        w = e.second;
      } while (w != v);
      result.leaves.push_back({prefix, DigitSeq({}, cycle)});
      return;
    }
    for (const auto& [d, w] : nodes[static_cast<size_t>(v)].edges) {
      prefix.push_back(d);
      walk(w);
      prefix.pop_back();
    }
  };
  walk(0);
  return result;
}

const BaseContext& golden_context_M2() {
  static const BaseContext ctx = make_context(2, q2(2));
  return ctx;
}

ConstructedPoint construct_xk(int k) {
  if (k < 1) throw Error(ErrorCode::ParseError, "k must be >= 1");
  const BaseContext& ctx = golden_context_M2();
  Word pre{1};
  pre.insert(pre.end(), static_cast<size_t>(2 * (k - 1)), 0);
  DigitSeq seq(pre, {1});
  return {evaluate(seq, ctx), ctx, seq};
}

std::vector<DigitSeq> expansions_of_one_M2(int j_max) {
  const BaseContext& ctx = golden_context_M2();
  std::vector<DigitSeq> out{DigitSeq({}, {2, 0})};
  for (int j = 0; j <= j_max; ++j) {
    Word head;
    for (int i = 0; i < j; ++i) {
      head.push_back(2);
      head.push_back(0);
    }
    Word a(head), b(head);
    a.insert(a.end(), {2, 1});
    b.push_back(1);
    out.emplace_back(a, Word{0});
    out.emplace_back(b, Word{2});
  }
  FieldElement one = ctx.field->one();
  for (const auto& s : out) {
    if (!(evaluate(s, ctx) == one)) {
      throw Error(ErrorCode::VerificationFailed, s.to_string() + " does not evaluate to 1");
    }
  }
  return out;
}

}  // namespace multibase
