#include "thmc/markov.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace thmc {

Marginal Marginal::of(Model model, int T, IntVec b) {
  const std::int64_t cs = column_sum(model, T);
  const std::int64_t total = sum(b);
  require(is_nonnegative(b) && total > 0 && total % cs == 0, ErrorCode::invalid_argument,
          "marginal sum must be a positive multiple of the column sum");
  Marginal m;
  m.degree = total / cs;
  m.b = std::move(b);
  return m;
}

namespace {

struct WordTable {
  std::vector<Word> words;
  std::vector<IntVec> columns;
};

WordTable word_table(Model model, int S, int T, std::size_t max_words) {
  const WordSpace space = word_space(model, S, T);
  require(space.size() <= max_words, ErrorCode::cap_exceeded,
          "word count " + std::to_string(space.size()) + " exceeds the cap " + std::to_string(max_words));
  WordTable t;
  for_each_column(model, S, T, [&](const Word& w, const IntVec& c) {
    t.words.push_back(w);
    t.columns.push_back(c);
  });
  return t;
}

// Multisets (non-decreasing index lists) of `degree` items whose columns sum to `target`.
void multisets_with_sum(const std::vector<IntVec>& columns, std::int64_t degree, const IntVec& target,
                        const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> chosen;
  IntVec rest = target;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<std::int64_t>(chosen.size()) == degree) {
      if (std::all_of(rest.begin(), rest.end(), [](auto x) { return x == 0; })) fn(chosen);
      return;
    }
    for (std::size_t c = from; c < columns.size(); ++c) {
      bool fits = true;
      for (std::size_t i = 0; i < rest.size() && fits; ++i) fits = columns[c][i] <= rest[i];
      if (!fits) continue;
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= columns[c][i];
      chosen.push_back(c);
      rec(c);
      chosen.pop_back();
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] += columns[c][i];
    }
  };
  rec(0);
}

// All multisets of `degree` items, grouped by column sum.
std::map<IntVec, std::vector<std::vector<std::size_t>>> group_multisets(const std::vector<IntVec>& columns,
                                                                        std::int64_t degree) {
  std::map<IntVec, std::vector<std::vector<std::size_t>>> groups;
  std::vector<std::size_t> chosen;
  IntVec acc(columns.front().size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<std::int64_t>(chosen.size()) == degree) {
      groups[acc].push_back(chosen);
      return;
    }
    for (std::size_t c = from; c < columns.size(); ++c) {
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += columns[c][i];
      chosen.push_back(c);
      rec(c);
      chosen.pop_back();
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= columns[c][i];
    }
  };
  rec(0);
  return groups;
}

IntVec counts_of(const std::vector<std::size_t>& multiset, std::size_t n) {
  IntVec u(n, 0);
  for (auto i : multiset) ++u[i];
  return u;
}

IntVec canonical_sign(IntVec z) {
  for (auto x : z) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : z) y = -y;
    break;
  }
  return z;
}

std::int64_t positive_part(const IntVec& z) {
  std::int64_t p = 0;
  for (auto x : z)
    if (x > 0) p += x;
  return p;
}

// Size of the multiset intersection of two sorted index lists.
std::size_t common_count(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::size_t i = 0, j = 0, n = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++n;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return n;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

Fiber enumerate_fiber(Model model, int S, int T, const Marginal& b, const MarkovCaps& caps) {
  require(b.b.size() == row_count(model, S), ErrorCode::dimension_mismatch, "marginal has the wrong length");
  require(b.degree <= caps.max_degree, ErrorCode::degree_cap_exceeded,
          "fiber degree " + std::to_string(b.degree) + " exceeds the cap " + std::to_string(caps.max_degree));
  const WordTable table = word_table(model, S, T, caps.max_words);
  Fiber f;
  f.model = model;
  f.S = S;
  f.T = T;
  f.marginal = b;
  multisets_with_sum(table.columns, b.degree, b.b, [&](const std::vector<std::size_t>& ms) {
    f.elements.push_back(counts_of(ms, table.words.size()));
  });
  for (const auto& u : f.elements) {
    IntVec check(b.b.size(), 0);
    for (std::size_t w = 0; w < u.size(); ++w)
      for (std::size_t i = 0; i < check.size(); ++i) check[i] += u[w] * table.columns[w][i];
    require(check == b.b, ErrorCode::internal, "fiber element has the wrong marginal");
  }
  std::sort(f.elements.begin(), f.elements.end());
  return f;
}

std::vector<Move> moves_up_to_degree(Model model, int S, int T, std::int64_t k, const MarkovCaps& caps) {
  require(k >= 1, ErrorCode::invalid_argument, "move degree must be positive");
  require(k <= caps.max_degree, ErrorCode::degree_cap_exceeded, "move degree exceeds the cap");
  const WordTable table = word_table(model, S, T, caps.max_words);
  std::set<IntVec> seen;
  for (std::int64_t d = 1; d <= k; ++d) {
    auto groups = group_multisets(table.columns, d);
    for (const auto& [b, members] : groups) {
      for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          IntVec z = subtract(counts_of(members[x], table.words.size()), counts_of(members[y], table.words.size()));
          seen.insert(canonical_sign(std::move(z)));
          require(seen.size() <= caps.max_moves, ErrorCode::cap_exceeded, "too many moves");
        }
      }
    }
  }
  std::vector<Move> out;
  for (const auto& z : seen) out.push_back({z, positive_part(z)});
  return out;
}

FiberConnectivity fiber_connected(const Fiber& fiber, const std::vector<Move>& moves) {
  FiberConnectivity out;
  const std::size_t n = fiber.elements.size();
  if (n == 0) return out;
  std::map<IntVec, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(fiber.elements[i], i);
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    const IntVec& u = fiber.elements[i];
    for (const auto& m : moves) {
      require(m.z.size() == u.size(), ErrorCode::dimension_mismatch, "move length differs from data vector length");
      for (int sign : {1, -1}) {
        IntVec v(u.size());
        bool ok = true;
        for (std::size_t t = 0; t < u.size() && ok; ++t) {
          v[t] = u[t] + sign * m.z[t];
          ok = v[t] >= 0;
        }
        if (!ok) continue;
        auto it = index.find(v);
        require(it != index.end(), ErrorCode::internal, "move left the fiber");
        uf.unite(i, it->second);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < n; ++i) comps[uf.find(i)].push_back(i);
  for (auto& [root, members] : comps) out.components.push_back(std::move(members));
  out.connected = out.components.size() == 1;
  return out;
}

std::vector<IntVec> ConnectivityReport::disconnected_at(std::int64_t k) const {
  std::vector<IntVec> out;
  for (const auto& f : fibers)
    if (f.connected_at_k > k) out.push_back(f.b);
  return out;
}

ConnectivityReport minimal_connecting_degree(Model model, int S, int T, std::int64_t D, const MarkovCaps& caps) {
  require(D >= 1, ErrorCode::invalid_argument, "fiber degree cap must be positive");
  require(D <= caps.max_degree, ErrorCode::degree_cap_exceeded, "fiber degree cap exceeds the configured maximum");
  ConnectivityReport rep;
  rep.model = model;
  rep.S = S;
  rep.T = T;
  rep.D = D;

  // One representative word per distinct column, taken from a full word scan.
  const WordTable table = word_table(model, S, T, caps.max_words);
  std::map<IntVec, std::size_t> first_word;
  for (std::size_t w = 0; w < table.words.size(); ++w) first_word.emplace(table.columns[w], w);
  std::vector<IntVec> columns;
  std::vector<std::size_t> rep_word;
  for (const auto& [col, w] : first_word) {
    columns.push_back(col);
    rep_word.push_back(w);
  }
  require(columns == distinct_columns(model, S, T), ErrorCode::internal, "distinct columns disagree with the word scan");

  rep.minimal_k = 1;
  for (std::int64_t d = 1; d <= D; ++d) {
    auto groups = group_multisets(columns, d);
    for (const auto& [b, members] : groups) {
      ++rep.fibers_checked;
      if (members.size() == 1) continue;
      struct Edge {
        std::int64_t w;
        std::size_t a, b;
      };
      std::vector<Edge> edges;
      for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x + 1; y < members.size(); ++y)
          edges.push_back({d - static_cast<std::int64_t>(common_count(members[x], members[y])), x, y});
      std::stable_sort(edges.begin(), edges.end(), [](const Edge& p, const Edge& q) { return p.w < q.w; });
      UnionFind uf(members.size());
      std::int64_t bottleneck = 1;
      std::size_t joined = 0;
      for (const auto& e : edges) {
        if (!uf.unite(e.a, e.b)) continue;
        bottleneck = std::max(bottleneck, e.w);
        ++joined;

        // Replay the edge as a word-level move u -> u + z.
        std::map<std::size_t, std::int64_t> u, z;
        for (auto c : members[e.a]) ++u[rep_word[c]];
        for (auto c : members[e.b]) ++z[rep_word[c]];
        for (auto c : members[e.a]) --z[rep_word[c]];
        IntVec Az(columns.front().size(), 0);
        std::int64_t plus = 0, minus = 0;
        bool walk_ok = true;
        for (const auto& [w, coef] : z) {
          const IntVec col = column_of_word(model, S, T, table.words[w]);
          for (std::size_t i = 0; i < Az.size(); ++i) Az[i] += coef * col[i];
          if (coef > 0) plus += coef;
          if (coef < 0) minus -= coef;
          auto it = u.find(w);
          if ((it == u.end() ? 0 : it->second) + coef < 0) walk_ok = false;
        }
        ++rep.moves_verified;
        if (std::any_of(Az.begin(), Az.end(), [](auto x) { return x != 0; })) ++rep.kernel_violations;
        if (plus != minus || plus != e.w) ++rep.balance_violations;
        if (!walk_ok) ++rep.walk_violations;
      }
      require(joined + 1 == members.size(), ErrorCode::internal, "fiber spanning tree is incomplete");
      rep.fibers.push_back({b, d, members.size(), bottleneck});
      rep.minimal_k = std::max(rep.minimal_k, bottleneck);
    }
  }
  return rep;
}

std::size_t shift_orbit_count(Model model, int S, int T, const std::vector<Move>& moves) {
  const auto words = enumerate_words(S, T, forbids_loops(model));
  std::set<std::vector<std::pair<std::vector<int>, std::int64_t>>> classes;
  for (const auto& m : moves) {
    require(m.z.size() == words.size(), ErrorCode::dimension_mismatch, "move length differs from word count");
    std::vector<std::size_t> support;
    for (std::size_t w = 0; w < m.z.size(); ++w)
      if (m.z[w] != 0) support.push_back(w);
    if (support.empty()) continue;
    std::size_t lcp = static_cast<std::size_t>(T);
    for (auto w : support) {
      const auto& a = words[support.front()].states();
      const auto& b = words[w].states();
      std::size_t l = 0;
      while (l < a.size() && a[l] == b[l]) ++l;
      lcp = std::min(lcp, l);
    }
    std::vector<std::pair<std::vector<int>, std::int64_t>> key;
    for (auto w : support) {
      const auto& s = words[w].states();
      key.emplace_back(std::vector<int>(s.begin() + static_cast<std::ptrdiff_t>(lcp), s.end()), m.z[w]);
    }
    std::sort(key.begin(), key.end());
    // Identify a move with its negative.
    auto neg = key;
    for (auto& [s, c] : neg) c = -c;
    std::sort(neg.begin(), neg.end());
    classes.insert(std::min(key, neg));
  }
  return classes.size();
}

nlohmann::ordered_json connectivity_to_json(const ConnectivityReport& r) {
  nlohmann::ordered_json j;
  j["model"] = std::string(1, model_letter(r.model));
  j["S"] = r.S;
  j["T"] = r.T;
  j["D"] = r.D;
  j["minimal_k"] = r.minimal_k;
  j["fibers_checked"] = r.fibers_checked;
  j["moves_verified"] = r.moves_verified;
  j["moves_sound"] = r.moves_sound();
  auto fibers = nlohmann::ordered_json::array();
  for (const auto& f : r.fibers) fibers.push_back({{"b", f.b}, {"size", f.size}, {"connected_at_k", f.connected_at_k}});
  j["fibers"] = fibers;
  return j;
}

std::string moves_to_text(const std::vector<Move>& moves) {
  std::ostringstream out;
  for (const auto& m : moves) out << format_vector(m.z) << '\n';
  return out.str();
}

}  // namespace thmc
