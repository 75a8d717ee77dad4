#include "uasc/free_algebra.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

namespace uasc {

GeneratingClass::GeneratingClass(std::vector<FiniteAlgebra> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw Error("generating class must be nonempty");
  for (const auto& m : members_) {
    require_valid(m);
    if (!(m.sig == members_.front().sig))
      throw Error("generating class members must share a signature");
    if (m.size > 255)
      throw Error("generating class members are limited to 255 elements");
  }
}

int GeneratingClass::max_member_size() const {
  int m = 0;
  for (const auto& a : members_) m = std::max(m, a.size);
  return m;
}

bool GeneratingClass::has_nontrivial_member() const {
  return std::any_of(members_.begin(), members_.end(),
                     [](const FiniteAlgebra& a) { return a.size > 1; });
}

const Signature& TermFunctionAlgebra::signature() const {
  return members_.front().sig;
}

const std::vector<FiniteAlgebra>& TermFunctionAlgebra::members() const {
  return members_;
}

const std::uint8_t* TermFunctionAlgebra::vector_data(int element) const {
  return arena_.data() + static_cast<std::size_t>(element) * columns_.size();
}

std::span<const std::uint8_t> TermFunctionAlgebra::function_vector(
    int element) const {
  return {vector_data(element), columns_.size()};
}

namespace {

std::uint64_t fnv1a(const std::uint8_t* data, std::size_t len) {
  std::uint64_t h = 14695981039346656037ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

void TermFunctionAlgebra::rebuild_lookup() {
  lookup_.clear();
  lookup_.reserve(vector_count_ * 2);
  for (std::size_t e = 0; e < vector_count_; ++e)
    lookup_[fnv1a(vector_data(static_cast<int>(e)), columns_.size())]
        .push_back(static_cast<int>(e));
}

std::optional<int> TermFunctionAlgebra::index_of(
    std::span<const std::uint8_t> vec) const {
  if (vec.size() != columns_.size()) return std::nullopt;
  auto it = lookup_.find(fnv1a(vec.data(), vec.size()));
  if (it == lookup_.end()) return std::nullopt;
  for (int e : it->second)
    if (vec.empty() ||
        std::memcmp(vector_data(e), vec.data(), vec.size()) == 0)
      return e;
  return std::nullopt;
}

int TermFunctionAlgebra::apply(int op, std::span<const int> args) const {
  const std::size_t C = columns_.size();
  std::vector<std::uint8_t> out(C);
  for (std::size_t c = 0; c < C; ++c) {
    const FiniteAlgebra& m = members_[static_cast<std::size_t>(columns_[c].member)];
    long idx = 0;
    for (int a : args)
      idx = idx * m.size + vector_data(a)[c];
    out[c] = static_cast<std::uint8_t>(
        m.tables[static_cast<std::size_t>(op)][static_cast<std::size_t>(idx)]);
  }
  auto found = index_of(out);
  if (!found) throw Error("term-function algebra is not closed (internal)");
  return *found;
}

int TermFunctionAlgebra::eval(const Term& t,
                              std::span<const int> var_to_element) const {
  if (t.is_var()) {
    int v = t.var_index();
    if (v < 0 || static_cast<std::size_t>(v) >= var_to_element.size())
      throw Error("unbound variable x" + std::to_string(v));
    return var_to_element[static_cast<std::size_t>(v)];
  }
  int op = signature().find(t.symbol());
  if (op < 0) throw Error("unknown symbol '" + t.symbol() + "'");
  if (signature().arity(op) != static_cast<int>(t.args().size()))
    throw Error("arity mismatch for '" + t.symbol() + "'");
  std::vector<int> args(t.args().size());
  for (std::size_t i = 0; i < t.args().size(); ++i)
    args[i] = eval(t.args()[i], var_to_element);
  return apply(op, args);
}

Term TermFunctionAlgebra::witness(int element) const {
  if (nodes_[static_cast<std::size_t>(element)] >
      static_cast<std::int64_t>(limits_.witness_node_cap))
    throw CapacityError("witness term too large to materialize",
                        limits_.witness_node_cap,
                        static_cast<std::size_t>(nodes_[static_cast<std::size_t>(element)]));
  const Derivation& d = derivations_[static_cast<std::size_t>(element)];
  if (d.op < 0) return Term::var(static_cast<int>(d.args_begin));
  const int arity = signature().arity(d.op);
  std::vector<Term> args;
  args.reserve(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i)
    args.push_back(witness(arg_pool_[d.args_begin + static_cast<std::size_t>(i)]));
  return Term::app(signature().name(d.op), std::move(args));
}

std::int64_t TermFunctionAlgebra::witness_nodes(int element) const {
  return nodes_[static_cast<std::size_t>(element)];
}

std::optional<int> TermFunctionAlgebra::find_idempotent() const {
  const int ops = signature().op_count();
  std::vector<int> diag;
  for (std::size_t e = 0; e < vector_count_; ++e) {
    bool fixed = true;
    for (int op = 0; op < ops && fixed; ++op) {
      diag.assign(static_cast<std::size_t>(signature().arity(op)),
                  static_cast<int>(e));
      fixed = apply(op, diag) == static_cast<int>(e);
    }
    if (fixed) return static_cast<int>(e);
  }
  return std::nullopt;
}

FiniteAlgebra TermFunctionAlgebra::induced_algebra(const Limits& limits) const {
  const int n = static_cast<int>(vector_count_);
  const Signature& sig = signature();
  std::size_t cells = 0;
  for (const auto& sym : sig.symbols) {
    std::size_t t = 1;
    for (int j = 0; j < sym.arity; ++j) {
      t *= static_cast<std::size_t>(n);
      if (t > limits.table_cells_cap)
        throw CapacityError("induced algebra table cells cap",
                            limits.table_cells_cap, t);
    }
    cells += t;
    if (cells > limits.table_cells_cap)
      throw CapacityError("induced algebra table cells cap",
                          limits.table_cells_cap, cells);
  }
  FiniteAlgebra alg;
  alg.sig = sig;
  alg.size = n;
  alg.tables.resize(sig.symbols.size());
  std::vector<int> tuple;
  for (std::size_t op = 0; op < sig.symbols.size(); ++op) {
    const int r = sig.symbols[op].arity;
    std::size_t t = 1;
    for (int j = 0; j < r; ++j) t *= static_cast<std::size_t>(n);
    auto& tbl = alg.tables[op];
    tbl.resize(t);
    for (std::size_t idx = 0; idx < t; ++idx) {
      tuple.assign(static_cast<std::size_t>(r), 0);
      std::size_t rest = idx;
      for (int j = r - 1; j >= 0; --j) {
        tuple[static_cast<std::size_t>(j)] = static_cast<int>(rest % static_cast<std::size_t>(n));
        rest /= static_cast<std::size_t>(n);
      }
      tbl[idx] = apply(static_cast<int>(op), tuple);
    }
  }
  return alg;
}

namespace {

std::uint64_t hash_bytes(const std::uint8_t* data, std::size_t len) {
  // FNV-1a
  std::uint64_t h = 14695981039346656037ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= 1099511628211ULL;
  }
  return h;
}

/// Open-addressing index over rows stored in an external arena.
class RowIndex {
 public:
  explicit RowIndex(std::size_t row_len) : row_len_(row_len) { rehash(1024); }

  int find(const std::uint8_t* row, const std::uint8_t* arena) const {
    std::uint64_t h = hash_bytes(row, row_len_);
    std::size_t mask = slots_.size() - 1;
    std::size_t i = static_cast<std::size_t>(h) & mask;
    while (slots_[i] >= 0) {
      const std::uint8_t* candidate =
          arena + static_cast<std::size_t>(slots_[i]) * row_len_;
      if (row_len_ == 0 || std::memcmp(candidate, row, row_len_) == 0)
        return slots_[i];
      i = (i + 1) & mask;
    }
    return -1;
  }

  void insert(int id, const std::uint8_t* row, const std::uint8_t* arena) {
    if ((count_ + 1) * 10 >= slots_.size() * 7) grow(arena);
    std::uint64_t h = hash_bytes(row, row_len_);
    std::size_t mask = slots_.size() - 1;
    std::size_t i = static_cast<std::size_t>(h) & mask;
    while (slots_[i] >= 0) i = (i + 1) & mask;
    slots_[i] = id;
    ++count_;
  }

 private:
  void rehash(std::size_t n) { slots_.assign(n, -1); }

  void grow(const std::uint8_t* arena) {
    std::vector<int> old;
    old.reserve(count_);
    for (int s : slots_)
      if (s >= 0) old.push_back(s);
    rehash(slots_.size() * 2);
    count_ = 0;
    for (int id : old) {
      const std::uint8_t* row = arena + static_cast<std::size_t>(id) * row_len_;
      std::uint64_t h = hash_bytes(row, row_len_);
      std::size_t mask = slots_.size() - 1;
      std::size_t i = static_cast<std::size_t>(h) & mask;
      while (slots_[i] >= 0) i = (i + 1) & mask;
      slots_[i] = id;
      ++count_;
    }
  }

  std::size_t row_len_;
  std::size_t count_ = 0;
  std::vector<int> slots_;
};

}  // namespace

/// Round-based closure of the projection vectors under all operations
/// applied pointwise. Witness derivations get minimal depth by
/// construction; within a round new elements are ordered by (witness node
/// count, symbol name rank, argument element indices).
class ClosureBuilder {
 public:
  ClosureBuilder(const GeneratingClass& K, int rank,
                 std::vector<TermFunctionAlgebra::Column> columns,
                 const Limits& limits)
      : K_(K), limits_(limits), rank_(rank), row_(columns.size()) {
    tfa_.members_ = K.members();
    tfa_.columns_ = std::move(columns);
    tfa_.rank_ = rank;
    tfa_.name_rank_ = K.signature().name_ranks();
    tfa_.limits_ = limits;
  }

  detail::ClosureSearch run(const std::vector<std::uint8_t>* target) {
    const std::size_t C = tfa_.columns_.size();
    RowIndex index(C);
    RowIndex cands(C);

    // generators: restricted projections, deduplicated
    tfa_.generators_.clear();
    for (int g = 0; g < rank_; ++g) {
      for (std::size_t c = 0; c < C; ++c)
        row_[c] = tfa_.columns_[c].assignment[static_cast<std::size_t>(g)];
      int found = index.find(row_.data(), tfa_.arena_.data());
      if (found < 0) {
        found = append_element(row_, {-1, static_cast<std::uint32_t>(g)}, 1);
        index.insert(found, tfa_.arena_.data() + static_cast<std::size_t>(found) * C,
                     tfa_.arena_.data());
      }
      tfa_.generators_.push_back(found);
    }
    // rank 0 with no generators: seed with constants below; a signature
    // without constants cannot close over an empty seed
    if (rank_ == 0 && !K_.signature().has_constants())
      throw Error("rank-0 closure needs a constant in the signature");

    const Signature& sig = K_.signature();
    const int ops = sig.op_count();
    bool capacity = false;
    std::size_t applications = 0;

    struct Cand {
      std::vector<std::uint8_t> vec;
      int op;
      std::vector<int> args;
      std::int64_t nodes;
    };
    std::vector<Cand> pool;
    std::vector<int> cand_at;  // candidate id per arena row in `cands`

    std::size_t round_start = 0;
    bool first_round = true;
    while (true) {
      std::size_t frontier = round_start;
      std::size_t existing = tfa_.vector_count_;
      round_start = existing;
      pool.clear();
      std::vector<std::uint8_t> cand_arena;
      RowIndex cand_index(C);
      std::vector<int> cand_ids;

      auto consider = [&](int op, std::span<const int> args) -> bool {
        // pointwise application into row_
        for (std::size_t c = 0; c < C; ++c) {
          const FiniteAlgebra& m =
              tfa_.members_[static_cast<std::size_t>(tfa_.columns_[c].member)];
          long idx = 0;
          for (int a : args)
            idx = idx * m.size +
                  tfa_.arena_[static_cast<std::size_t>(a) * C + c];
          row_[c] = static_cast<std::uint8_t>(
              m.tables[static_cast<std::size_t>(op)][static_cast<std::size_t>(idx)]);
        }
        if (index.find(row_.data(), tfa_.arena_.data()) >= 0) return true;
        std::int64_t nodes = 1;
        for (int a : args) nodes += tfa_.nodes_[static_cast<std::size_t>(a)];
        int at = cand_index.find(row_.data(), cand_arena.data());
        if (at >= 0) {
          Cand& c = pool[static_cast<std::size_t>(cand_ids[static_cast<std::size_t>(at)])];
          if (candidate_less(nodes, op, args, c))
            c = Cand{row_, op, {args.begin(), args.end()}, nodes};
          return true;
        }
        if (tfa_.vector_count_ + pool.size() + 1 > limits_.free_element_cap) {
          capacity = true;
          return false;
        }
        int row_id = static_cast<int>(cand_ids.size());
        cand_arena.insert(cand_arena.end(), row_.begin(), row_.end());
        cand_index.insert(row_id, cand_arena.data() + static_cast<std::size_t>(row_id) * C,
                          cand_arena.data());
        cand_ids.push_back(static_cast<int>(pool.size()));
        pool.push_back(Cand{row_, op, {args.begin(), args.end()}, nodes});
        return true;
      };

      bool aborted = false;
      for (int op = 0; op < ops && !aborted; ++op) {
        const int r = sig.arity(op);
        if (r == 0) {
          if (first_round)
            if (!consider(op, {})) aborted = true;
          continue;
        }
        if (existing == 0) continue;
        // tuples over current elements with at least one frontier component
        std::vector<int> args(static_cast<std::size_t>(r), 0);
        while (!aborted) {
          bool fresh = first_round;
          for (int a : args) fresh = fresh || static_cast<std::size_t>(a) >= frontier;
          if (fresh) {
            if (++applications > limits_.free_application_cap) {
              capacity = true;
              aborted = true;
              break;
            }
            if (!consider(op, args)) {
              aborted = true;
              break;
            }
          }
          int j = r - 1;
          while (j >= 0 &&
                 ++args[static_cast<std::size_t>(j)] == static_cast<int>(existing)) {
            args[static_cast<std::size_t>(j)] = 0;
            --j;
          }
          if (j < 0) break;
        }
      }
      first_round = false;

      // canonical round order
      std::vector<int> order(pool.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Cand& ca = pool[static_cast<std::size_t>(a)];
        const Cand& cb = pool[static_cast<std::size_t>(b)];
        if (ca.nodes != cb.nodes) return ca.nodes < cb.nodes;
        int ra = tfa_.name_rank_[static_cast<std::size_t>(ca.op)];
        int rb = tfa_.name_rank_[static_cast<std::size_t>(cb.op)];
        if (ra != rb) return ra < rb;
        return ca.args < cb.args;
      });

      if (capacity || aborted) {
        // a target seen among the candidates is still a sound hit
        detail::ClosureSearch out;
        if (target) {
          for (int i : order) {
            const Cand& c = pool[static_cast<std::size_t>(i)];
            if (c.vec == *target) {
              out.target_witness = materialize(c.op, c.args);
              break;
            }
          }
          if (!out.target_witness) {
            if (auto e = find_target(*target)) {
              out.target_element = e;
              out.target_witness = tfa_.witness(*e);
            }
          }
        }
        tfa_.rebuild_lookup();
        out.algebra = std::move(tfa_);
        out.complete = false;
        return out;
      }

      if (pool.empty()) break;  // fixpoint

      for (int i : order) {
        Cand& c = pool[static_cast<std::size_t>(i)];
        int id = append_candidate(c);
        index.insert(id, tfa_.arena_.data() + static_cast<std::size_t>(id) * C,
                     tfa_.arena_.data());
      }
      if (target) {
        if (auto e = find_target(*target)) {
          detail::ClosureSearch out;
          out.target_element = e;
          out.target_witness = tfa_.witness(*e);
          tfa_.rebuild_lookup();
          out.algebra = std::move(tfa_);
          out.complete = false;
          return out;
        }
      }
    }

    detail::ClosureSearch out;
    if (target) {
      if (auto e = find_target(*target)) {
        out.target_element = e;
        out.target_witness = tfa_.witness(*e);
      }
    }
    tfa_.rebuild_lookup();
    out.algebra = std::move(tfa_);
    out.complete = true;
    return out;
  }

 private:
  using Derivation = TermFunctionAlgebra::Derivation;

  bool candidate_less(std::int64_t nodes, int op, std::span<const int> args,
                      const auto& cand) const {
    if (nodes != cand.nodes) return nodes < cand.nodes;
    int ra = tfa_.name_rank_[static_cast<std::size_t>(op)];
    int rb = tfa_.name_rank_[static_cast<std::size_t>(cand.op)];
    if (ra != rb) return ra < rb;
    return std::lexicographical_compare(args.begin(), args.end(),
                                        cand.args.begin(), cand.args.end());
  }

  int append_element(const std::vector<std::uint8_t>& vec, Derivation d,
                     std::int64_t nodes) {
    tfa_.arena_.insert(tfa_.arena_.end(), vec.begin(), vec.end());
    tfa_.derivations_.push_back(d);
    tfa_.nodes_.push_back(nodes);
    return static_cast<int>(tfa_.vector_count_++);
  }

  int append_candidate(auto& c) {
    Derivation d;
    d.op = c.op;
    d.args_begin = static_cast<std::uint32_t>(tfa_.arg_pool_.size());
    tfa_.arg_pool_.insert(tfa_.arg_pool_.end(), c.args.begin(), c.args.end());
    return append_element(c.vec, d, c.nodes);
  }

  std::optional<int> find_target(const std::vector<std::uint8_t>& target) const {
    const std::size_t C = tfa_.columns_.size();
    if (target.size() != C) return std::nullopt;
    for (std::size_t e = 0; e < tfa_.vector_count_; ++e)
      if (std::memcmp(tfa_.arena_.data() + e * C, target.data(), C) == 0)
        return static_cast<int>(e);
    return std::nullopt;
  }

  Term materialize(int op, const std::vector<int>& args) const {
    std::vector<Term> ts;
    ts.reserve(args.size());
    for (int a : args) ts.push_back(tfa_.witness(a));
    return Term::app(K_.signature().name(op), std::move(ts));
  }

  const GeneratingClass& K_;
  Limits limits_;
  int rank_;
  std::vector<std::uint8_t> row_;
  TermFunctionAlgebra tfa_;
};

namespace detail {

std::vector<TermFunctionAlgebra::Column> free_columns(const GeneratingClass& K,
                                                      int rank) {
  std::vector<TermFunctionAlgebra::Column> columns;
  for (int m = 0; m < K.member_count(); ++m) {
    const int n = K.member(m).size;
    std::size_t total = 1;
    for (int j = 0; j < rank; ++j) total *= static_cast<std::size_t>(n);
    for (std::size_t t = 0; t < total; ++t) {
      TermFunctionAlgebra::Column col;
      col.member = m;
      col.assignment.resize(static_cast<std::size_t>(rank));
      std::size_t rest = t;
      for (int j = rank - 1; j >= 0; --j) {
        col.assignment[static_cast<std::size_t>(j)] =
            static_cast<std::uint8_t>(rest % static_cast<std::size_t>(n));
        rest /= static_cast<std::size_t>(n);
      }
      columns.push_back(std::move(col));
    }
  }
  return columns;
}

ClosureSearch close_term_functions(const GeneratingClass& K, int rank,
                                   const std::vector<std::uint8_t>* target,
                                   const Limits& limits) {
  ClosureBuilder builder(K, rank, free_columns(K, rank), limits);
  return builder.run(target);
}

}  // namespace detail

TermFunctionAlgebra free_algebra(const GeneratingClass& K, int rank,
                                 const Limits& limits) {
  if (rank < 0) throw Error("free algebra rank must be non-negative");
  auto result = detail::close_term_functions(K, rank, nullptr, limits);
  if (!result.complete)
    throw CapacityError("free algebra closure exceeded caps",
                        limits.free_element_cap, result.algebra.size());
  return std::move(result.algebra);
}

TermFunctionAlgebra fp_algebra(const GeneratingClass& K,
                               std::span<const Equation> premises, int rank,
                               const Limits& limits) {
  if (rank < 0) {
    rank = 0;
    for (const auto& eq : premises) {
      rank = std::max(rank, eq.lhs.max_var() + 1);
      rank = std::max(rank, eq.rhs.max_var() + 1);
    }
  }
  // columns: assignments satisfying every premise, member by member
  std::vector<TermFunctionAlgebra::Column> columns;
  std::vector<int> assignment(static_cast<std::size_t>(rank), 0);
  for (int m = 0; m < K.member_count(); ++m) {
    const FiniteAlgebra& A = K.member(m);
    std::size_t total = 1;
    for (int j = 0; j < rank; ++j) total *= static_cast<std::size_t>(A.size);
    for (std::size_t t = 0; t < total; ++t) {
      std::size_t rest = t;
      for (int j = rank - 1; j >= 0; --j) {
        assignment[static_cast<std::size_t>(j)] =
            static_cast<int>(rest % static_cast<std::size_t>(A.size));
        rest /= static_cast<std::size_t>(A.size);
      }
      bool sat = true;
      for (const auto& eq : premises)
        if (eval_term(A, eq.lhs, assignment) != eval_term(A, eq.rhs, assignment)) {
          sat = false;
          break;
        }
      if (!sat) continue;
      TermFunctionAlgebra::Column col;
      col.member = m;
      col.assignment.assign(assignment.begin(), assignment.end());
      columns.push_back(std::move(col));
    }
  }
  if (columns.empty() && rank == 0 && !K.signature().has_constants())
    throw Error("rank-0 presentation needs a constant in the signature");
  ClosureBuilder builder(K, rank, std::move(columns), limits);
  auto result = builder.run(nullptr);
  if (!result.complete)
    throw CapacityError("presented algebra closure exceeded caps",
                        limits.free_element_cap, result.algebra.size());
  return std::move(result.algebra);
}

bool is_trivial(const TermFunctionAlgebra& t) { return t.trivial(); }

std::optional<int> find_idempotent(const FiniteAlgebra& alg) {
  std::vector<int> diag;
  for (int e = 0; e < alg.size; ++e) {
    bool fixed = true;
    for (int op = 0; op < alg.sig.op_count() && fixed; ++op) {
      diag.assign(static_cast<std::size_t>(alg.sig.arity(op)), e);
      fixed = alg.apply(op, diag) == e;
    }
    if (fixed) return e;
  }
  return std::nullopt;
}

FreeSatisfaction satisfiable_in_free(const TermFunctionAlgebra& free_rank1,
                                     std::span<const Equation> equations,
                                     const Limits& limits) {
  std::vector<int> vars;
  for (const auto& eq : equations) {
    eq.lhs.collect_vars(vars);
    eq.rhs.collect_vars(vars);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  const int k = static_cast<int>(vars.size());
  const std::size_t n = free_rank1.size();

  double space = 1;
  for (int i = 0; i < k; ++i) space *= static_cast<double>(n);
  if (space > static_cast<double>(limits.assignment_cap))
    throw CapacityError("free satisfiability assignment cap",
                        limits.assignment_cap, static_cast<std::size_t>(space));

  std::vector<int> slot(vars.empty() ? 0 : static_cast<std::size_t>(vars.back()) + 1, 0);
  std::vector<int> choice(static_cast<std::size_t>(k), 0);
  while (true) {
    for (int i = 0; i < k; ++i)
      slot[static_cast<std::size_t>(vars[static_cast<std::size_t>(i)])] =
          choice[static_cast<std::size_t>(i)];
    bool sat = true;
    for (const auto& eq : equations)
      if (free_rank1.eval(eq.lhs, slot) != free_rank1.eval(eq.rhs, slot)) {
        sat = false;
        break;
      }
    if (sat) {
      FreeSatisfaction out;
      out.satisfiable = true;
      for (int i = 0; i < k; ++i)
        out.witness.emplace_back(
            vars[static_cast<std::size_t>(i)],
            free_rank1.witness(choice[static_cast<std::size_t>(i)]));
      return out;
    }
    int j = k - 1;
    while (j >= 0 &&
           ++choice[static_cast<std::size_t>(j)] == static_cast<int>(n)) {
      choice[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return {};
}

FreeSatisfaction satisfiable_in_free(const GeneratingClass& K,
                                     std::span<const Equation> equations,
                                     const Limits& limits) {
  TermFunctionAlgebra f1 = free_algebra(K, 1, limits);
  return satisfiable_in_free(f1, equations, limits);
}

}  // namespace uasc
