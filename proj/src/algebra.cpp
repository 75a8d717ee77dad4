#include "uasc/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace uasc {

int Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols.size(); ++i)
    if (symbols[i].name == name) return static_cast<int>(i);
  return -1;
}

bool Signature::has_constants() const {
  return std::any_of(symbols.begin(), symbols.end(),
                     [](const Symbol& s) { return s.arity == 0; });
}

std::vector<int> Signature::name_ranks() const {
  std::vector<int> order(symbols.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return symbols[static_cast<std::size_t>(a)].name <
           symbols[static_cast<std::size_t>(b)].name;
  });
  std::vector<int> rank(symbols.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return rank;
}

int FiniteAlgebra::apply(int op, std::span<const int> args) const {
  long idx = 0;
  for (int a : args) idx = idx * size + a;
  return tables[static_cast<std::size_t>(op)][static_cast<std::size_t>(idx)];
}

namespace {

long power_or_negative(long base, int exp, long cap) {
  long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > cap / (base == 0 ? 1 : base)) return -1;
    r *= base;
    if (r > cap) return -1;
  }
  return r;
}

}  // namespace

std::vector<Defect> validate(const FiniteAlgebra& alg) {
  std::vector<Defect> defects;
  if (alg.size < 1) {
    defects.push_back({"", -1, "carrier must be nonempty"});
    return defects;
  }
  if (alg.tables.size() != alg.sig.symbols.size()) {
    defects.push_back({"", -1, "one table per symbol required"});
    return defects;
  }
  std::set<std::string> seen;
  for (const auto& sym : alg.sig.symbols) {
    if (!seen.insert(sym.name).second)
      defects.push_back({sym.name, -1, "duplicate symbol name"});
    if (sym.arity < 0)
      defects.push_back({sym.name, -1, "negative arity"});
  }
  for (std::size_t i = 0; i < alg.tables.size(); ++i) {
    const auto& sym = alg.sig.symbols[i];
    if (sym.arity < 0) continue;
    long want = power_or_negative(alg.size, sym.arity, 1L << 40);
    if (want < 0) {
      defects.push_back({sym.name, -1, "table size overflows"});
      continue;
    }
    const auto& tbl = alg.tables[i];
    if (static_cast<long>(tbl.size()) != want) {
      defects.push_back({sym.name, -1,
                         "table not total: expected " + std::to_string(want) +
                             " entries, got " + std::to_string(tbl.size())});
      continue;
    }
    for (std::size_t j = 0; j < tbl.size(); ++j) {
      if (tbl[j] < 0 || tbl[j] >= alg.size)
        defects.push_back({sym.name, static_cast<long>(j),
                           "value out of range: " + std::to_string(tbl[j])});
    }
  }
  return defects;
}

void require_valid(const FiniteAlgebra& alg) {
  auto defects = validate(alg);
  if (defects.empty()) return;
  std::string msg = "invalid algebra:";
  for (const auto& d : defects) {
    msg += "\n  ";
    if (!d.symbol.empty()) msg += d.symbol + ": ";
    msg += d.message;
    if (d.position >= 0) msg += " at entry " + std::to_string(d.position);
  }
  throw Error(msg);
}

FiniteAlgebra direct_product(std::span<const FiniteAlgebra> factors,
                             const Limits& limits) {
  if (factors.empty()) throw Error("direct product of an empty family");
  const Signature& sig = factors.front().sig;
  for (const auto& f : factors)
    if (!(f.sig == sig)) throw Error("product factors must share a signature");

  std::size_t size = 1;
  for (const auto& f : factors) {
    size *= static_cast<std::size_t>(f.size);
    if (size > limits.product_size_cap)
      throw CapacityError("product carrier exceeds cap",
                          limits.product_size_cap, size);
  }

  const int m = static_cast<int>(factors.size());
  const int n = static_cast<int>(size);
  // strides for the mixed-radix encoding, leftmost factor most significant
  std::vector<long> stride(static_cast<std::size_t>(m), 1);
  for (int i = m - 2; i >= 0; --i)
    stride[static_cast<std::size_t>(i)] =
        stride[static_cast<std::size_t>(i + 1)] * factors[static_cast<std::size_t>(i + 1)].size;

  FiniteAlgebra prod;
  prod.sig = sig;
  prod.size = n;
  prod.tables.resize(sig.symbols.size());
  std::vector<int> args;
  std::vector<int> comp;
  for (std::size_t op = 0; op < sig.symbols.size(); ++op) {
    const int r = sig.symbols[op].arity;
    long cells = power_or_negative(n, r, static_cast<long>(limits.table_cells_cap));
    if (cells < 0)
      throw CapacityError("product table exceeds cap", limits.table_cells_cap,
                          static_cast<std::size_t>(-1));
    auto& tbl = prod.tables[op];
    tbl.resize(static_cast<std::size_t>(cells));
    args.assign(static_cast<std::size_t>(r), 0);
    for (long idx = 0; idx < cells; ++idx) {
      long rest = idx;
      for (int j = r - 1; j >= 0; --j) {
        args[static_cast<std::size_t>(j)] = static_cast<int>(rest % n);
        rest /= n;
      }
      long value = 0;
      for (int i = 0; i < m; ++i) {
        comp.assign(static_cast<std::size_t>(r), 0);
        for (int j = 0; j < r; ++j)
          comp[static_cast<std::size_t>(j)] = static_cast<int>(
              (args[static_cast<std::size_t>(j)] / stride[static_cast<std::size_t>(i)]) %
              factors[static_cast<std::size_t>(i)].size);
        value += stride[static_cast<std::size_t>(i)] *
                 factors[static_cast<std::size_t>(i)].apply(op, comp);
      }
      tbl[static_cast<std::size_t>(idx)] = static_cast<int>(value);
    }
  }
  return prod;
}

std::vector<int> generated_subuniverse(const FiniteAlgebra& alg,
                                       std::span<const int> seed) {
  if (seed.empty() && !alg.sig.has_constants())
    throw Error("empty seed needs a constant in the signature");
  std::vector<char> in(static_cast<std::size_t>(alg.size), 0);
  std::vector<int> members;
  auto add = [&](int e) {
    if (!in[static_cast<std::size_t>(e)]) {
      in[static_cast<std::size_t>(e)] = 1;
      members.push_back(e);
    }
  };
  for (int e : seed) {
    if (e < 0 || e >= alg.size) throw Error("seed element out of range");
    add(e);
  }
  for (std::size_t op = 0; op < alg.sig.symbols.size(); ++op)
    if (alg.sig.symbols[op].arity == 0) add(alg.tables[op][0]);

  // fixpoint: keep applying every operation to tuples of current members
  std::size_t frontier = 0;
  std::vector<int> tuple;
  while (frontier < members.size()) {
    std::size_t upto = members.size();
    for (std::size_t op = 0; op < alg.sig.symbols.size(); ++op) {
      const int r = alg.sig.symbols[op].arity;
      if (r == 0) continue;
      tuple.assign(static_cast<std::size_t>(r), 0);
      // odometer over member indices; require one index >= frontier
      std::vector<std::size_t> ix(static_cast<std::size_t>(r), 0);
      while (true) {
        bool fresh = false;
        for (auto v : ix) fresh = fresh || v >= frontier;
        if (fresh) {
          for (int j = 0; j < r; ++j)
            tuple[static_cast<std::size_t>(j)] = members[ix[static_cast<std::size_t>(j)]];
          add(alg.apply(static_cast<int>(op), tuple));
        }
        int j = r - 1;
        while (j >= 0 && ++ix[static_cast<std::size_t>(j)] == upto) {
          ix[static_cast<std::size_t>(j)] = 0;
          --j;
        }
        if (j < 0) break;
      }
    }
    frontier = upto;
  }
  std::sort(members.begin(), members.end());
  return members;
}

Congruence Congruence::from_blocks(std::span<const int> raw) {
  Congruence c;
  c.block_of.assign(raw.size(), -1);
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, fresh] = relabel.try_emplace(raw[i], c.block_count);
    if (fresh) ++c.block_count;
    c.block_of[i] = it->second;
  }
  return c;
}

bool is_congruence(const FiniteAlgebra& alg, const Congruence& c) {
  if (c.block_of.size() != static_cast<std::size_t>(alg.size)) return false;
  // check single-coordinate compatibility; transitivity gives the rest
  std::vector<int> tuple;
  for (std::size_t op = 0; op < alg.sig.symbols.size(); ++op) {
    const int r = alg.sig.symbols[op].arity;
    if (r == 0) continue;
    long contexts = 1;
    for (int j = 0; j < r - 1; ++j) contexts *= alg.size;
    for (int pos = 0; pos < r; ++pos) {
      for (long ctx = 0; ctx < contexts; ++ctx) {
        tuple.assign(static_cast<std::size_t>(r), 0);
        long rest = ctx;
        for (int j = r - 1; j >= 0; --j) {
          if (j == pos) continue;
          tuple[static_cast<std::size_t>(j)] = static_cast<int>(rest % alg.size);
          rest /= alg.size;
        }
        for (int a = 0; a < alg.size; ++a)
          for (int b = a + 1; b < alg.size; ++b) {
            if (c.block_of[static_cast<std::size_t>(a)] !=
                c.block_of[static_cast<std::size_t>(b)])
              continue;
            tuple[static_cast<std::size_t>(pos)] = a;
            int fa = alg.apply(static_cast<int>(op), tuple);
            tuple[static_cast<std::size_t>(pos)] = b;
            int fb = alg.apply(static_cast<int>(op), tuple);
            if (c.block_of[static_cast<std::size_t>(fa)] !=
                c.block_of[static_cast<std::size_t>(fb)])
              return false;
          }
      }
    }
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

}  // namespace

Congruence congruence_generated(const FiniteAlgebra& alg,
                                std::span<const std::pair<int, int>> pairs) {
  UnionFind uf(alg.size);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= alg.size || b < 0 || b >= alg.size)
      throw Error("congruence generator pair out of range");
    uf.merge(a, b);
  }
  // one-step propagation to fixpoint: substituting equivalent elements in
  // a single argument position must give equivalent results
  bool changed = true;
  std::vector<int> tuple;
  while (changed) {
    changed = false;
    for (std::size_t op = 0; op < alg.sig.symbols.size(); ++op) {
      const int r = alg.sig.symbols[op].arity;
      if (r == 0) continue;
      long contexts = 1;
      for (int j = 0; j < r - 1; ++j) contexts *= alg.size;
      for (int pos = 0; pos < r; ++pos) {
        for (long ctx = 0; ctx < contexts; ++ctx) {
          tuple.assign(static_cast<std::size_t>(r), 0);
          long rest = ctx;
          for (int j = r - 1; j >= 0; --j) {
            if (j == pos) continue;
            tuple[static_cast<std::size_t>(j)] = static_cast<int>(rest % alg.size);
            rest /= alg.size;
          }
          // within each current class, chain-merge the images
          std::vector<int> first_image(static_cast<std::size_t>(alg.size), -1);
          for (int a = 0; a < alg.size; ++a) {
            tuple[static_cast<std::size_t>(pos)] = a;
            int img = alg.apply(static_cast<int>(op), tuple);
            int root = uf.find(a);
            int& anchor = first_image[static_cast<std::size_t>(root)];
            if (anchor < 0)
              anchor = img;
            else if (uf.merge(anchor, img))
              changed = true;
          }
        }
      }
    }
  }
  std::vector<int> roots(static_cast<std::size_t>(alg.size));
  for (int i = 0; i < alg.size; ++i) roots[static_cast<std::size_t>(i)] = uf.find(i);
  return Congruence::from_blocks(roots);
}

bool is_simple(const FiniteAlgebra& alg) {
  if (alg.size < 2) return false;
  for (int a = 0; a < alg.size; ++a)
    for (int b = a + 1; b < alg.size; ++b) {
      std::pair<int, int> p{a, b};
      if (!congruence_generated(alg, {&p, 1}).is_total()) return false;
    }
  return true;
}

FiniteAlgebra quotient(const FiniteAlgebra& alg, const Congruence& c) {
  if (!is_congruence(alg, c)) throw Error("partition is not a congruence");
  FiniteAlgebra q;
  q.sig = alg.sig;
  q.size = c.block_count;
  q.tables.resize(alg.sig.symbols.size());
  // representative of each block: first occurrence
  std::vector<int> rep(static_cast<std::size_t>(c.block_count), -1);
  for (int e = 0; e < alg.size; ++e) {
    int b = c.block_of[static_cast<std::size_t>(e)];
    if (rep[static_cast<std::size_t>(b)] < 0) rep[static_cast<std::size_t>(b)] = e;
  }
  std::vector<int> tuple;
  for (std::size_t op = 0; op < alg.sig.symbols.size(); ++op) {
    const int r = alg.sig.symbols[op].arity;
    long cells = 1;
    for (int j = 0; j < r; ++j) cells *= q.size;
    auto& tbl = q.tables[op];
    tbl.resize(static_cast<std::size_t>(cells));
    for (long idx = 0; idx < cells; ++idx) {
      tuple.assign(static_cast<std::size_t>(r), 0);
      long rest = idx;
      for (int j = r - 1; j >= 0; --j) {
        tuple[static_cast<std::size_t>(j)] =
            rep[static_cast<std::size_t>(rest % q.size)];
        rest /= q.size;
      }
      tbl[static_cast<std::size_t>(idx)] =
          c.block_of[static_cast<std::size_t>(alg.apply(static_cast<int>(op), tuple))];
    }
  }
  return q;
}

bool is_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                     std::span<const int> map) {
  if (map.size() != static_cast<std::size_t>(src.size)) return false;
  for (int v : map)
    if (v < 0 || v >= dst.size) return false;
  std::vector<int> tuple, image;
  for (std::size_t op = 0; op < src.sig.symbols.size(); ++op) {
    const int r = src.sig.symbols[op].arity;
    long cells = 1;
    for (int j = 0; j < r; ++j) cells *= src.size;
    for (long idx = 0; idx < cells; ++idx) {
      tuple.assign(static_cast<std::size_t>(r), 0);
      long rest = idx;
      for (int j = r - 1; j >= 0; --j) {
        tuple[static_cast<std::size_t>(j)] = static_cast<int>(rest % src.size);
        rest /= src.size;
      }
      image.assign(static_cast<std::size_t>(r), 0);
      for (int j = 0; j < r; ++j)
        image[static_cast<std::size_t>(j)] =
            map[static_cast<std::size_t>(tuple[static_cast<std::size_t>(j)])];
      if (map[static_cast<std::size_t>(src.apply(static_cast<int>(op), tuple))] !=
          dst.apply(static_cast<int>(op), image))
        return false;
    }
  }
  return true;
}

namespace {

/// Backtracking state for the homomorphism search.
struct HomSearch {
  const FiniteAlgebra& src;
  const FiniteAlgebra& dst;
  bool injective;
  std::span<const std::pair<int, int>> distinct;
  std::vector<int> img;
  std::vector<int> used;  // image multiplicity for the injective mode

  HomSearch(const FiniteAlgebra& s, const FiniteAlgebra& d, bool inj,
            std::span<const std::pair<int, int>> di)
      : src(s), dst(d), injective(inj), distinct(di),
        img(static_cast<std::size_t>(s.size), -1),
        used(static_cast<std::size_t>(d.size), 0) {}

  bool constraints_ok() const {
    for (auto [a, b] : distinct) {
      int ia = img[static_cast<std::size_t>(a)];
      int ib = img[static_cast<std::size_t>(b)];
      if (ia >= 0 && ib >= 0 && ia == ib) return false;
    }
    return true;
  }

  /// Checks every fully assigned tuple and force-propagates implied images.
  /// Returns the list of forced assignments (for undo), or nullopt on
  /// conflict.
  std::optional<std::vector<int>> propagate() {
    std::vector<int> forced;
    bool again = true;
    std::vector<int> tuple, image;
    while (again) {
      again = false;
      for (std::size_t op = 0; op < src.sig.symbols.size(); ++op) {
        const int r = src.sig.symbols[op].arity;
        long cells = 1;
        for (int j = 0; j < r; ++j) cells *= src.size;
        for (long idx = 0; idx < cells; ++idx) {
          tuple.assign(static_cast<std::size_t>(r), 0);
          long rest = idx;
          bool all = true;
          for (int j = r - 1; j >= 0; --j) {
            int e = static_cast<int>(rest % src.size);
            rest /= src.size;
            tuple[static_cast<std::size_t>(j)] = e;
            all = all && img[static_cast<std::size_t>(e)] >= 0;
          }
          if (!all) continue;
          image.assign(static_cast<std::size_t>(r), 0);
          for (int j = 0; j < r; ++j)
            image[static_cast<std::size_t>(j)] =
                img[static_cast<std::size_t>(tuple[static_cast<std::size_t>(j)])];
          int out = src.apply(static_cast<int>(op), tuple);
          int want = dst.apply(static_cast<int>(op), image);
          int& cur = img[static_cast<std::size_t>(out)];
          if (cur < 0) {
            if (injective && used[static_cast<std::size_t>(want)]) {
              undo(forced);
              return std::nullopt;
            }
            cur = want;
            ++used[static_cast<std::size_t>(want)];
            forced.push_back(out);
            again = true;
          } else if (cur != want) {
            undo(forced);
            return std::nullopt;
          }
        }
      }
    }
    if (!constraints_ok()) {
      undo(forced);
      return std::nullopt;
    }
    return forced;
  }

  void undo(const std::vector<int>& forced) {
    for (int e : forced) {
      --used[static_cast<std::size_t>(img[static_cast<std::size_t>(e)])];
      img[static_cast<std::size_t>(e)] = -1;
    }
  }

  bool solve() {
    int next = -1;
    for (int e = 0; e < src.size; ++e)
      if (img[static_cast<std::size_t>(e)] < 0) {
        next = e;
        break;
      }
    if (next < 0) return true;
    for (int v = 0; v < dst.size; ++v) {
      if (injective && used[static_cast<std::size_t>(v)]) continue;
      img[static_cast<std::size_t>(next)] = v;
      ++used[static_cast<std::size_t>(v)];
      if (constraints_ok()) {
        auto forced = propagate();
        if (forced) {
          if (solve()) return true;
          undo(*forced);
        }
      }
      --used[static_cast<std::size_t>(v)];
      img[static_cast<std::size_t>(next)] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Homomorphism> find_homomorphism(
    const FiniteAlgebra& src, const FiniteAlgebra& dst, bool injective,
    std::span<const std::pair<int, int>> distinct_images) {
  if (!(src.sig == dst.sig))
    throw Error("homomorphism search requires a shared signature");
  if (injective && src.size > dst.size) return std::nullopt;
  HomSearch search(src, dst, injective, distinct_images);
  // constants force their images before any choice is made
  if (!search.propagate()) return std::nullopt;
  if (!search.solve()) return std::nullopt;
  return Homomorphism{std::move(search.img)};
}

bool are_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!(a.sig == b.sig)) return false;
  if (a.size != b.size) return false;
  return find_homomorphism(a, b, /*injective=*/true).has_value();
}

FiniteAlgebra induced_subalgebra(const FiniteAlgebra& alg,
                                 std::span<const int> universe) {
  std::vector<int> pos(static_cast<std::size_t>(alg.size), -1);
  for (std::size_t i = 0; i < universe.size(); ++i)
    pos[static_cast<std::size_t>(universe[i])] = static_cast<int>(i);
  FiniteAlgebra sub;
  sub.sig = alg.sig;
  sub.size = static_cast<int>(universe.size());
  sub.tables.resize(alg.sig.symbols.size());
  std::vector<int> tuple;
  for (std::size_t op = 0; op < alg.sig.symbols.size(); ++op) {
    const int r = alg.sig.symbols[op].arity;
    long cells = 1;
    for (int j = 0; j < r; ++j) cells *= sub.size;
    auto& tbl = sub.tables[op];
    tbl.resize(static_cast<std::size_t>(cells));
    for (long idx = 0; idx < cells; ++idx) {
      tuple.assign(static_cast<std::size_t>(r), 0);
      long rest = idx;
      for (int j = r - 1; j >= 0; --j) {
        tuple[static_cast<std::size_t>(j)] =
            universe[static_cast<std::size_t>(rest % sub.size)];
        rest /= sub.size;
      }
      int out = alg.apply(static_cast<int>(op), tuple);
      if (pos[static_cast<std::size_t>(out)] < 0)
        throw Error("universe is not closed under " + alg.sig.symbols[op].name);
      tbl[static_cast<std::size_t>(idx)] = pos[static_cast<std::size_t>(out)];
    }
  }
  return sub;
}

std::vector<std::vector<int>> all_subuniverses(const FiniteAlgebra& alg,
                                               const Limits& limits) {
  if (alg.size > limits.subset_carrier_cap)
    throw CapacityError("subset enumeration carrier cap",
                        static_cast<std::size_t>(limits.subset_carrier_cap),
                        static_cast<std::size_t>(alg.size));
  std::set<std::vector<int>> found;
  std::vector<int> seed;
  const unsigned long total = 1UL << alg.size;
  for (unsigned long mask = 0; mask < total; ++mask) {
    seed.clear();
    for (int e = 0; e < alg.size; ++e)
      if (mask & (1UL << e)) seed.push_back(e);
    if (seed.empty() && !alg.sig.has_constants()) continue;
    auto closed = generated_subuniverse(alg, seed);
    if (!closed.empty()) found.insert(std::move(closed));
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<Subalgebra> subalgebras_up_to_iso(const FiniteAlgebra& alg,
                                              const Limits& limits) {
  std::vector<Subalgebra> reps;
  for (auto& universe : all_subuniverses(alg, limits)) {
    FiniteAlgebra induced = induced_subalgebra(alg, universe);
    bool fresh = true;
    for (const auto& rep : reps)
      if (are_isomorphic(rep.algebra, induced)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back({std::move(universe), std::move(induced)});
  }
  return reps;
}

}  // namespace uasc
