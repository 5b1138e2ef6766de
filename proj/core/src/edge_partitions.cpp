#include "c2lab/edge_partitions.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "c2lab/error.hpp"
#include "c2lab/finite_field.hpp"

namespace c2lab {

bool is_valid_bipartition(const Graph& g, const EdgeBipartition& b) {
  if (b.psi.intersects(b.phi)) return false;
  if ((b.psi | b.phi) != EdgeSet::full(g.num_edges())) return false;
  if (!is_spanning_tree(g, b.psi)) return false;
  const auto shape = analyze_forest(g, b.phi);
  return shape.acyclic && shape.num_components == 2;
}

std::uint64_t count_bipartitions(const Graph& g, const VertexPartition& parts) {
  if (parts.size() != 2) throw InvalidInput("bipartition counts need a 2-part partition");
  validate_partition(g, parts);
  if (g.num_vertices() == 0 || !g.is_connected()) return 0;
  std::uint64_t n = 0;
  for_each_spanning_tree(g, [&](const EdgeSet& t) {
    if (is_compatible_forest(g, t.complement(), parts)) ++n;
  });
  return n;
}

BipartitionCatalog::BipartitionCatalog(const Graph& g, std::vector<Vertex> marked)
    : graph_(g), marked_(std::move(marked)) {
  if (marked_.empty() || marked_.size() > 32) throw InvalidInput("catalog needs 1..32 marked vertices");
  validate_partition(g, {marked_});
  if (g.num_vertices() == 0 || !g.is_connected()) return;
  for_each_spanning_tree(g, [&](const EdgeSet& t) {
    EdgeSet phi = t.complement();
    const auto shape = analyze_forest(g, phi);
    if (!shape.acyclic || shape.num_components != 2) return;
    std::uint32_t mask = 0;
    const auto home = shape.component[marked_[0]];
    for (std::size_t k = 0; k < marked_.size(); ++k) {
      if (shape.component[marked_[k]] == home) mask |= 1U << k;
    }
    items_.push_back({t, phi});
    masks_.push_back(mask);
  });
}

bool BipartitionCatalog::compatible(std::uint32_t mask, std::uint32_t part0, std::uint32_t part1) {
  if (part0 == 0 || part1 == 0) return false;
  const std::uint32_t m0 = mask & part0;
  const std::uint32_t m1 = mask & part1;
  if (m0 != 0 && m0 != part0) return false;
  if (m1 != 0 && m1 != part1) return false;
  return (m0 != 0) != (m1 != 0);
}

std::pair<std::uint32_t, std::uint32_t> BipartitionCatalog::part_masks(
    const VertexPartition& parts) const {
  if (parts.size() != 2) throw InvalidInput("catalog queries need a 2-part partition");
  validate_partition(graph_, parts);
  std::uint32_t out[2] = {0, 0};
  for (std::size_t i = 0; i < 2; ++i) {
    for (Vertex x : parts[i]) {
      const auto it = std::find(marked_.begin(), marked_.end(), x);
      if (it == marked_.end()) throw InvalidInput("vertex " + std::to_string(x) + " is not marked");
      out[i] |= 1U << static_cast<std::uint32_t>(it - marked_.begin());
    }
  }
  return {out[0], out[1]};
}

std::uint64_t BipartitionCatalog::count(const VertexPartition& parts) const {
  const auto [p0, p1] = part_masks(parts);
  return static_cast<std::uint64_t>(std::count_if(
      masks_.begin(), masks_.end(), [&](std::uint32_t m) { return compatible(m, p0, p1); }));
}

std::vector<std::size_t> BipartitionCatalog::members(const VertexPartition& parts) const {
  const auto [p0, p1] = part_masks(parts);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    if (compatible(masks_[i], p0, p1)) out.push_back(i);
  }
  return out;
}

std::optional<std::uint32_t> BipartitionCatalog::mask_of(const EdgeBipartition& b) const {
  if (!is_valid_bipartition(graph_, b)) return std::nullopt;
  const auto shape = analyze_forest(graph_, b.phi);
  std::uint32_t mask = 0;
  for (std::size_t k = 0; k < marked_.size(); ++k) {
    if (shape.component[marked_[k]] == shape.component[marked_[0]]) mask |= 1U << k;
  }
  return mask;
}

std::size_t GeneralEdgePartitionHash::operator()(const GeneralEdgePartition& g) const noexcept {
  std::size_t h = 0;
  for (const auto& t : g.trees) h = h * 1000003U ^ t.hash();
  for (const auto& f : g.forests) h = h * 998244353U ^ f.hash();
  return h;
}

bool is_valid_general_partition(const Graph& g, const GeneralEdgePartition& gp,
                                const std::vector<VertexPartition>& forest_parts) {
  const std::size_t k = gp.trees.size();
  if (k == 0 || gp.forests.size() != k || forest_parts.size() != k) return false;
  std::vector<std::size_t> use(g.num_edges(), 0);
  auto tally = [&](const EdgeSet& s) { s.for_each([&](EdgeId e) { ++use[e]; }); };
  for (const auto& t : gp.trees) {
    if (!is_spanning_tree(g, t)) return false;
    tally(t);
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!is_compatible_forest(g, gp.forests[i], forest_parts[i])) return false;
    tally(gp.forests[i]);
  }
  return std::all_of(use.begin(), use.end(), [&](std::size_t u) { return u == k; });
}

void for_each_partition_tuple(const Graph& g, std::size_t num_trees,
                              const std::vector<VertexPartition>& forest_parts,
                              const std::function<void(const GeneralEdgePartition&)>& visit,
                              std::uint64_t budget) {
  const std::size_t k = num_trees;
  if (k == 0 || forest_parts.size() != k) {
    throw InvalidInput("need one forest partition per tree slot");
  }
  for (const auto& p : forest_parts) {
    if (p.size() != 2) throw InvalidInput("forest partitions must have two parts");
    validate_partition(g, p);
  }
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  if (n < 2 || !g.is_connected() || 2 * n - 3 != m) return;

  const auto trees = enumerate_spanning_trees(g);
  const std::unordered_set<EdgeSet, EdgeSetHash> tree_lookup(trees.begin(), trees.end());
  std::vector<std::vector<EdgeSet>> forests(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto same = std::find(forest_parts.begin(), forest_parts.begin() + static_cast<std::ptrdiff_t>(i),
                                forest_parts[i]);
    forests[i] = same != forest_parts.begin() + static_cast<std::ptrdiff_t>(i)
                     ? forests[static_cast<std::size_t>(same - forest_parts.begin())]
                     : enumerate_compatible_forests(g, forest_parts[i]);
  }

  // Slots 0..k-1 hold forests, k..2k-1 trees; the last tree is looked up.
  const std::size_t slots = 2 * k;
  GeneralEdgePartition current;
  current.trees.assign(k, EdgeSet(m));
  current.forests.assign(k, EdgeSet(m));
  std::vector<std::size_t> use(m, 0);
  std::uint64_t nodes = 0;

  std::function<void(std::size_t)> rec = [&](std::size_t slot) {
    const std::size_t remaining = slots - slot;
    if (remaining == 1) {
      EdgeSet need(m);
      for (std::size_t e = 0; e < m; ++e) {
        if (use[e] + 1 == k) need.insert(static_cast<EdgeId>(e));
      }
      if (tree_lookup.count(need) != 0) {
        current.trees[k - 1] = need;
        visit(current);
      }
      return;
    }
    const auto& choices = slot < k ? forests[slot] : trees;
    for (const auto& s : choices) {
      if (++nodes > budget) throw BudgetExceeded("partition tuple enumeration", nodes, budget);
      bool ok = true;
      s.for_each([&](EdgeId e) { ok = ok && use[e] < k; });
      if (!ok) continue;
      s.for_each([&](EdgeId e) { ++use[e]; });
      // Every edge still needs k - use copies among the remaining slots.
      const std::size_t left = remaining - 1;
      for (std::size_t e = 0; e < m && ok; ++e) ok = k - use[e] <= left;
      if (ok) {
        if (slot < k) {
          current.forests[slot] = s;
        } else {
          current.trees[slot - k] = s;
        }
        rec(slot + 1);
      }
      s.for_each([&](EdgeId e) { --use[e]; });
    }
  };
  rec(0);
}

std::uint64_t count_partition_tuples(const Graph& g, std::size_t num_trees,
                                     const std::vector<VertexPartition>& forest_parts,
                                     std::uint64_t budget) {
  std::uint64_t n = 0;
  for_each_partition_tuple(g, num_trees, forest_parts, [&](const GeneralEdgePartition&) { ++n; },
                           budget);
  return n;
}

namespace {

struct LabelSplit {
  std::vector<std::string> parts;
};

LabelSplit parse_label_spec(std::string_view spec) {
  LabelSplit out;
  std::string cur;
  for (char ch : spec) {
    if (ch == '|') {
      out.parts.push_back(cur);
      cur.clear();
    } else if (ch >= 'a' && ch <= 'z') {
      cur.push_back(ch);
    } else {
      throw InvalidInput("bad label spec '" + std::string(spec) + "'");
    }
  }
  out.parts.push_back(cur);
  for (auto& p : out.parts) {
    if (p.empty()) throw InvalidInput("empty part in label spec '" + std::string(spec) + "'");
    std::sort(p.begin(), p.end());
  }
  return out;
}

std::string normalize_label(std::string_view spec) {
  auto split = parse_label_spec(spec);
  std::sort(split.parts.begin(), split.parts.end(), [](const std::string& x, const std::string& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  std::string out;
  for (std::size_t i = 0; i < split.parts.size(); ++i) {
    if (i > 0) out.push_back('|');
    out += split.parts[i];
  }
  return out;
}

std::uint32_t residue(std::int64_t x, std::uint32_t p) {
  const std::int64_t r = x % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

void add_count(CountReport& rep, std::string_view spec, std::uint64_t value) {
  rep.counts.push_back({normalize_label(spec), value});
}

std::int64_t sum_of(const CountReport& rep, std::initializer_list<std::string_view> specs) {
  std::int64_t s = 0;
  for (auto spec : specs) s += static_cast<std::int64_t>(rep.count(spec));
  return s;
}

// All 2-part splits of the first n letters, smaller part first.
std::vector<std::string> all_splits(std::size_t n) {
  std::vector<std::string> out;
  for (std::uint32_t mask = 1; mask + 1 < (1U << n); ++mask) {
    if (mask & 1U) continue;  // count each split once: letter 'a' on the right
    std::string left;
    std::string right;
    for (std::size_t i = 0; i < n; ++i) {
      ((mask >> i) & 1U ? left : right).push_back(static_cast<char>('a' + i));
    }
    out.push_back(normalize_label(left + "|" + right));
  }
  std::sort(out.begin(), out.end(), [](const std::string& x, const std::string& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

VertexPartition partition_from_labels(const PairGraph& pg, std::string_view spec) {
  VertexPartition out;
  for (const auto& part : parse_label_spec(spec).parts) {
    VertexPart vp;
    for (char ch : part) vp.push_back(pg.marked_label(ch));
    out.push_back(std::move(vp));
  }
  validate_partition(pg.graph, out);
  return out;
}

std::string format_label_partition(std::string_view spec) {
  std::string out;
  const auto split = parse_label_spec(spec);
  for (std::size_t i = 0; i < split.parts.size(); ++i) {
    if (i > 0) out.push_back(',');
    out.push_back('{');
    for (std::size_t j = 0; j < split.parts[i].size(); ++j) {
      if (j > 0) out.push_back(',');
      out.push_back(split.parts[i][j]);
    }
    out.push_back('}');
  }
  return out;
}

std::uint64_t CountReport::count(std::string_view label) const {
  const auto key = normalize_label(label);
  for (const auto& c : counts) {
    if (c.label == key) return c.count;
  }
  throw InvalidInput("no count recorded for " + key);
}

bool CountReport::all_hold() const {
  return std::all_of(identities.begin(), identities.end(),
                     [](const CountIdentity& i) { return i.holds(); });
}

CountReport s_case_counts(const PairGraph& s) {
  if (s.label.kind != PairCase::S) throw InvalidInput("s_case_counts needs an S-case pair");
  const BipartitionCatalog cat(s.graph, s.marked);
  CountReport rep;
  rep.kind = PairCase::S;
  rep.prime = 2;
  for (const auto& spec : all_splits(5)) add_count(rep, spec, cat.count(partition_from_labels(s, spec)));
  for (std::string_view spec : {"c|ab", "c|de"}) {
    add_count(rep, spec, cat.count(partition_from_labels(s, spec)));
  }
  rep.c2_v = residue(static_cast<std::int64_t>(rep.count("c|ab")), 2);
  rep.c2_w = residue(static_cast<std::int64_t>(rep.count("c|de")), 2);

  const auto six = sum_of(rep, {"cd|abe", "ce|abd", "ab|cde", "ac|bde", "bc|ade", "de|abc"});
  rep.identities.push_back({"difference equals six-term sum", 2, residue(six, 2),
                            residue(static_cast<std::int64_t>(*rep.c2_v) - *rep.c2_w, 2)});
  rep.identities.push_back({"six-term sum", 2, residue(six, 2), 0});
  rep.identities.push_back({"swap at c", 2, residue(sum_of(rep, {"abc|de", "ab|cde"}), 2), 0});
  rep.identities.push_back(
      {"control vertex, 1|4 sets", 2, residue(sum_of(rep, {"a|bcde", "b|acde", "d|abce", "e|abcd"}), 2), 0});
  rep.identities.push_back(
      {"control vertex, 2|3 sets", 2, residue(sum_of(rep, {"ac|bde", "bc|ade", "cd|abe", "ce|abd"}), 2), 0});
  rep.identities.push_back(
      {"c2(G-v) = c2(G-w)", 2, residue(static_cast<std::int64_t>(*rep.c2_v) - *rep.c2_w, 2), 0});
  return rep;
}

CountReport r_case_counts(const PairGraph& r) {
  if (r.label.kind != PairCase::R) throw InvalidInput("r_case_counts needs an R-case pair");
  const BipartitionCatalog cat(r.graph, r.marked);
  CountReport rep;
  rep.kind = PairCase::R;
  rep.prime = 2;
  for (const auto& spec : all_splits(6)) add_count(rep, spec, cat.count(partition_from_labels(r, spec)));
  for (std::string_view spec : {"a|bc", "b|ac", "c|ab", "d|ef", "e|df", "f|de"}) {
    add_count(rep, spec, cat.count(partition_from_labels(r, spec)));
  }
  rep.c2_v = residue(sum_of(rep, {"a|bc", "b|ac", "c|ab"}), 2);
  rep.c2_w = residue(sum_of(rep, {"d|ef", "e|df", "f|de"}), 2);

  const auto control = sum_of(rep, {"ab|cdef", "ac|bdef", "bc|adef", "de|abcf", "df|abce", "ef|abcd"});
  const auto two_control = sum_of(rep, {"a|bcdef", "b|acdef", "c|abdef", "d|abcef", "e|abcdf", "f|abcde"});
  rep.identities.push_back({"difference equals twelve-term sum", 2, residue(control + two_control, 2),
                            residue(static_cast<std::int64_t>(*rep.c2_v) - *rep.c2_w, 2)});
  rep.identities.push_back({"twelve-term sum", 2, residue(control + two_control, 2), 0});
  rep.identities.push_back({"one control vertex, 2|4 sets", 2, residue(control, 2), 0});
  rep.identities.push_back({"two control vertices, 1|5 sets", 2, residue(two_control, 2), 0});
  rep.identities.push_back(
      {"c2(G-v) = c2(G-w)", 2, residue(static_cast<std::int64_t>(*rep.c2_v) - *rep.c2_w, 2), 0});
  return rep;
}

CountReport t_case_counts(const PairGraph& t, std::uint32_t p, std::uint64_t budget) {
  if (t.label.kind != PairCase::T) throw InvalidInput("t_case_counts needs a T-case pair");
  if (p < 2 || !is_prime(p)) throw InvalidInput("t_case_counts needs a prime");
  const std::size_t k = p - 1;
  const auto P = partition_from_labels(t, "a|bcd");
  const auto Pp = partition_from_labels(t, "d|abc");
  const auto Q = partition_from_labels(t, "ad|bc");
  const auto Pb = partition_from_labels(t, "ab|cd");

  CountReport rep;
  rep.kind = PairCase::T;
  rep.prime = p;
  auto tuple = [&](const VertexPartition& first, std::size_t l) {
    std::vector<VertexPartition> parts(l, first);
    parts.insert(parts.end(), k - l, Q);
    return count_partition_tuples(t.graph, k, parts, budget);
  };
  auto label = [&](const char* name, std::size_t l) {
    return std::string("t[") + name + "^" + std::to_string(l) + ",Q^" + std::to_string(k - l) + "]";
  };
  std::vector<std::uint64_t> tp(k + 1), tpp(k + 1), tpb(k + 1);
  for (std::size_t l = 0; l <= k; ++l) {
    tp[l] = tuple(P, l);
    tpp[l] = l == 0 ? tp[0] : tuple(Pp, l);
    tpb[l] = l == 0 ? tp[0] : tuple(Pb, l);
    rep.counts.push_back({label("P", l), tp[l]});
    rep.counts.push_back({label("P'", l), tpp[l]});
    rep.counts.push_back({label("Pb", l), tpb[l]});
  }
  std::int64_t sv = 0;
  std::int64_t sw = 0;
  for (std::size_t l = 0; l <= k; ++l) {
    const auto w = static_cast<std::int64_t>(binomial(k, l) % p);
    sv += w * static_cast<std::int64_t>(tp[l] % p);
    sw += w * static_cast<std::int64_t>(tpp[l] % p);
  }
  rep.c2_v = residue(-sv, p);
  rep.c2_w = residue(-sw, p);
  for (std::size_t l = 1; l <= k; ++l) {
    const auto L = std::to_string(l);
    rep.identities.push_back({"t[P^" + L + "] = t[P'^" + L + "]", p,
                              residue(static_cast<std::int64_t>(tp[l] % p), p),
                              residue(static_cast<std::int64_t>(tpp[l] % p), p)});
    const std::int64_t sign = l % 2 == 0 ? 1 : -1;
    rep.identities.push_back({"t[P^" + L + "] = (-1)^" + L + " t[Pb^" + L + "]", p,
                              residue(static_cast<std::int64_t>(tp[l] % p), p),
                              residue(sign * static_cast<std::int64_t>(tpb[l] % p), p)});
    rep.identities.push_back({"t[P'^" + L + "] = (-1)^" + L + " t[Pb^" + L + "]", p,
                              residue(static_cast<std::int64_t>(tpp[l] % p), p),
                              residue(sign * static_cast<std::int64_t>(tpb[l] % p), p)});
  }
  rep.identities.push_back({"c2(G-v) = c2(G-w)", p, *rep.c2_v, *rep.c2_w});
  return rep;
}

}  // namespace c2lab
