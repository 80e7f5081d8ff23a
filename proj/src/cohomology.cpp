#include "cosetal/cohomology.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cosetal/disjoint_set.hpp"

namespace cosetal {

FactorTable::FactorTable(Index h_size, std::vector<Index> map)
    : h_size_(h_size), map_(std::move(map)) {
  if (h_size == 0 || map_.size() != h_size * h_size) {
    throw Error(ErrorCode::SizeMismatch, "factor table needs " + std::to_string(h_size * h_size) +
                                             " entries, got " + std::to_string(map_.size()));
  }
}

FactorTable FactorTable::constant(Index h_size, Index value) {
  return FactorTable(h_size, std::vector<Index>(h_size * h_size, value));
}

std::vector<std::vector<Index>> FactorTable::rows() const {
  std::vector<std::vector<Index>> out(h_size_);
  for (Index h = 0; h < h_size_; ++h) {
    for (Index hp = 0; hp < h_size_; ++hp) out[h].push_back((*this)(h, hp));
  }
  return out;
}

namespace {

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t bound,
                          const char* what) {
  // Saturates instead of overflowing so the message can name the count.
  constexpr std::size_t kMax = static_cast<std::size_t>(-1);
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    out = (base != 0 && out > kMax / base) ? kMax : out * base;
  }
  if (out > bound) {
    const std::string count = out == kMax ? "more than 2^64" : std::to_string(out);
    throw Error(ErrorCode::TooLarge, std::string(what) + " " + std::to_string(base) + "^" +
                                         std::to_string(exponent) + " = " + count +
                                         " exceeds the bound " + std::to_string(bound) +
                                         "; needs bound >= " + count);
  }
  return out;
}

void require_table_fits(const FactorTable& g, const ExtensionData& data) {
  if (g.h_size() != data.quotient().size()) {
    throw Error(ErrorCode::SizeMismatch, "factor table is not over H x H");
  }
  for (Index i = 0; i < g.map().size(); ++i) {
    if (g.map()[i] >= data.kernel().size()) {
      throw Error(ErrorCode::OutOfRange, "factor table entry", {i / g.h_size(), i % g.h_size()});
    }
  }
}

// Advances `digits` as an odometer with the last position least significant.
bool next_digits(std::vector<Index>& digits, Index radix) {
  for (Index i = digits.size(); i > 0; --i) {
    if (++digits[i - 1] < radix) return true;
    digits[i - 1] = 0;
  }
  return false;
}

}  // namespace

ConditionCheck is_factor_set(const FactorTable& g, const ExtensionData& data) {
  require_table_fits(g, data);
  const FiniteAbelianGroup& n = data.kernel();
  const FiniteMonoid& h = data.quotient();
  const ActionTable& phi = data.action();
  const Index one = h.identity();
  for (Index x = 0; x < h.size(); ++x) {
    if (g(x, one) != n.identity() || g(one, x) != n.identity()) {
      return ConditionCheck{false, 1, {x}};
    }
  }
  for (Index x = 0; x < h.size(); ++x) {
    for (Index y = 0; y < h.size(); ++y) {
      const Index xy = h.mul(x, y);
      for (Index z = 0; z < h.size(); ++z) {
        const Index yz = h.mul(y, z);
        const Index xyz = h.mul(xy, z);
        const Index lhs = n.mul(g(x, y), g(xy, z));
        const Index rhs = n.mul(phi(x, g(y, z)), g(x, yz));
        if (data.cls(lhs, xyz) != data.cls(rhs, xyz)) return ConditionCheck{false, 2, {x, y, z}};
      }
    }
  }
  return {};
}

FactorTable extract_factor_set(const KernelDiagram& d, const Section& s) {
  const FiniteMonoid& h = d.quotient();
  const FiniteMonoid& g = d.total();
  const Index H = h.size();
  std::vector<Index> map(H * H, d.kernel().identity());
  for (Index x = 0; x < H; ++x) {
    for (Index y = 0; y < H; ++y) {
      if (x == h.identity() || y == h.identity()) continue;
      const Index target = g.mul(s(x), s(y));
      const Index base = s(h.mul(x, y));
      Index found = kNone;
      for (Index n = 0; n < d.kernel().size(); ++n) {
        if (d.translate(n, base) == target) {
          found = n;
          break;
        }
      }
      if (found == kNone) throw Error(ErrorCode::NotCosetal, "no factor at", {x, y});
      map[x * H + y] = found;
    }
  }
  FactorTable out(H, std::move(map));
  const ExtensionData data = extract_data(d, s);
  if (const auto check = is_factor_set(out, data); !check) {
    throw Error(ErrorCode::IllFormed,
                "extracted factor set breaks condition " + std::to_string(check.condition),
                check.witness);
  }
  return out;
}

ExtensionDiagram build_extension(const ExtensionData& data, const FactorTable& g) {
  if (const auto check = is_factor_set(g, data); !check) {
    throw Error(ErrorCode::IllFormed,
                "not a factor set (condition " + std::to_string(check.condition) + ")",
                check.witness);
  }
  const FiniteAbelianGroup& n = data.kernel();
  const FiniteMonoid& h = data.quotient();
  const ActionTable& phi = data.action();
  const PairPartition& e = data.partition();
  const Index N = n.size();
  const Index H = h.size();
  const Index classes = e.num_classes();

  auto product = [&](Index a, Index x, Index b, Index y) {
    return e.class_of(n.mul(n.mul(a, phi(x, b)), g(x, y)), h.mul(x, y));
  };

  std::vector<Index> table(classes * classes);
  for (Index i = 0; i < classes; ++i) {
    const auto [a, x] = e.representative(i);
    for (Index j = 0; j < classes; ++j) {
      const auto [b, y] = e.representative(j);
      table[i * classes + j] = product(a, x, b, y);
    }
  }
  // Well-definedness on classes: every representative pair agrees.
  for (Index a = 0; a < N; ++a) {
    for (Index x = 0; x < H; ++x) {
      for (Index b = 0; b < N; ++b) {
        for (Index y = 0; y < H; ++y) {
          if (product(a, x, b, y) != table[e.class_of(a, x) * classes + e.class_of(b, y)]) {
            throw Error(ErrorCode::IllFormed, "multiplication is not well defined on classes",
                        {a, x, b, y});
          }
        }
      }
    }
  }

  try {
    FiniteMonoid carrier = validate_monoid(classes, table, e.class_of(n.identity(), h.identity()));
    std::vector<Index> k_map(N);
    for (Index m = 0; m < N; ++m) k_map[m] = e.class_of(m, h.identity());
    std::vector<Index> e_map(classes);
    for (Index i = 0; i < classes; ++i) e_map[i] = e.representative(i).second;
    MonoidHom k = validate_hom(k_map, n.monoid(), carrier);
    MonoidHom proj = validate_hom(e_map, carrier, h);
    ExtensionDiagram out = validate_extension(n, carrier, h, k, proj);
    if (!is_cosetal(out)) throw Error(ErrorCode::IllFormed, "constructed extension is not cosetal");
    return out;
  } catch (const Error& err) {
    if (err.code() == ErrorCode::IllFormed) throw;
    throw Error(ErrorCode::IllFormed, std::string("construction failed: ") + err.what());
  }
}

bool factor_sets_equivalent(const FactorTable& g, const FactorTable& g_prime,
                            const ExtensionData& data) {
  const FiniteMonoid& h = data.quotient();
  for (Index x = 0; x < h.size(); ++x) {
    for (Index y = 0; y < h.size(); ++y) {
      const Index level = h.mul(x, y);
      if (data.cls(g(x, y), level) != data.cls(g_prime(x, y), level)) return false;
    }
  }
  return true;
}

FactorTable multiply(const FactorTable& g, const FactorTable& g_prime,
                     const FiniteAbelianGroup& n) {
  if (g.h_size() != g_prime.h_size()) throw Error(ErrorCode::SizeMismatch, "factor tables differ in size");
  std::vector<Index> map(g.map().size());
  for (Index i = 0; i < map.size(); ++i) map[i] = n.mul(g.map()[i], g_prime.map()[i]);
  return FactorTable(g.h_size(), std::move(map));
}

FactorTable inverse(const FactorTable& g, const FiniteAbelianGroup& n) {
  std::vector<Index> map(g.map().size());
  for (Index i = 0; i < map.size(); ++i) map[i] = n.inverse(g.map()[i]);
  return FactorTable(g.h_size(), std::move(map));
}

FactorTable inner_factor_set(std::span<const Index> t, const ExtensionData& data) {
  const FiniteAbelianGroup& n = data.kernel();
  const FiniteMonoid& h = data.quotient();
  const Index H = h.size();
  if (t.size() != H) throw Error(ErrorCode::SizeMismatch, "translation must be defined on all of H");
  for (Index x = 0; x < H; ++x) {
    if (t[x] >= n.size()) throw Error(ErrorCode::OutOfRange, "translation value", {x});
  }
  if (t[h.identity()] != n.identity()) {
    throw Error(ErrorCode::IllFormed, "translation must preserve the identity");
  }
  std::vector<Index> map(H * H, n.identity());
  for (Index x = 0; x < H; ++x) {
    for (Index y = 0; y < H; ++y) {
      if (x == h.identity() || y == h.identity()) continue;
      const Index a = data.action()(x, t[y]);
      map[x * H + y] = n.mul(n.mul(a, n.inverse(t[h.mul(x, y)])), t[x]);
    }
  }
  FactorTable out(H, std::move(map));
  if (const auto check = is_factor_set(out, data); !check) {
    throw Error(ErrorCode::IllFormed, "inner factor set breaks condition " +
                                          std::to_string(check.condition),
                check.witness);
  }
  return out;
}

std::vector<std::vector<Index>> enumerate_translations(const ExtensionData& data,
                                                       std::size_t bound) {
  const Index H = data.quotient().size();
  const Index one = data.quotient().identity();
  const Index N = data.kernel().size();
  const std::size_t count = checked_power(N, H - 1, bound, "translation count");
  std::vector<std::vector<Index>> out;
  out.reserve(count);
  std::vector<Index> digits(H - 1, 0);
  do {
    std::vector<Index> t(H, data.kernel().identity());
    for (Index x = 0, i = 0; x < H; ++x) {
      if (x != one) t[x] = digits[i++];
    }
    out.push_back(std::move(t));
  } while (next_digits(digits, N));
  return out;
}

Index FactorSetGroup::index_of(const FactorTable& g) const {
  auto it = index_.find(g);
  return it == index_.end() ? kNone : it->second;
}

Index FactorSetGroup::multiply(Index a, Index b) const {
  return index_of(cosetal::multiply(elements_[a], elements_[b], data_.kernel()));
}

FactorSetGroup enumerate_factor_sets(const ExtensionData& data, std::size_t bound) {
  const FiniteAbelianGroup& n = data.kernel();
  const FiniteMonoid& h = data.quotient();
  const Index H = h.size();
  const Index free_cells = (H - 1) * (H - 1);
  checked_power(n.size(), free_cells, bound, "factor table count");

  std::vector<Index> cells;
  for (Index x = 0; x < H; ++x) {
    for (Index y = 0; y < H; ++y) {
      if (x != h.identity() && y != h.identity()) cells.push_back(x * H + y);
    }
  }
  FactorSetGroup out;
  out.data_ = data;
  std::vector<Index> digits(free_cells, 0);
  std::vector<Index> map(H * H, n.identity());
  do {
    for (Index i = 0; i < free_cells; ++i) map[cells[i]] = digits[i];
    FactorTable candidate(H, map);
    if (is_factor_set(candidate, data)) {
      out.index_.emplace(candidate, out.elements_.size());
      out.elements_.push_back(std::move(candidate));
    }
  } while (next_digits(digits, n.size()));

  out.identity_ = out.index_of(FactorTable::constant(H, n.identity()));
  if (out.identity_ == kNone) throw Error(ErrorCode::IllFormed, "constant identity is not a factor set");
  for (const FactorTable& g : out.elements_) {
    if (out.index_of(inverse(g, n)) == kNone) {
      throw Error(ErrorCode::IllFormed, "factor sets are not closed under inverses");
    }
  }
  // Exhaustive closure certificate while it stays cheap.
  if (out.size() <= 2048) {
    for (Index a = 0; a < out.size(); ++a) {
      for (Index b = a; b < out.size(); ++b) {
        if (out.multiply(a, b) == kNone) {
          throw Error(ErrorCode::IllFormed, "factor sets are not closed under products", {a, b});
        }
      }
    }
  }
  return out;
}

std::vector<FactorTable> enumerate_inner(const ExtensionData& data, std::size_t bound) {
  std::set<FactorTable> distinct;
  for (const auto& t : enumerate_translations(data, bound)) {
    distinct.insert(inner_factor_set(t, data));
  }
  return {distinct.begin(), distinct.end()};
}

std::vector<Index> invariant_factors(std::span<const Index> cayley, Index order, Index identity) {
  if (order <= 1) return {};
  auto mul = [&](Index a, Index b) { return cayley[a * order + b]; };
  Index best = identity;
  Index best_order = 1;
  for (Index x = 0; x < order; ++x) {
    Index k = 1;
    for (Index p = x; p != identity; p = mul(p, x)) ++k;
    if (x == identity) k = 1;
    if (k > best_order) {
      best = x;
      best_order = k;
    }
  }
  std::vector<Index> span{identity};
  for (Index p = best; p != identity; p = mul(p, best)) span.push_back(p);

  // Quotient by the cyclic subgroup generated by `best`.
  std::vector<Index> coset_of(order, kNone);
  std::vector<Index> reps;
  for (Index x = 0; x < order; ++x) {
    if (coset_of[x] != kNone) continue;
    for (Index s : span) coset_of[mul(x, s)] = reps.size();
    reps.push_back(x);
  }
  const Index q = reps.size();
  std::vector<Index> quotient(q * q);
  for (Index i = 0; i < q; ++i) {
    for (Index j = 0; j < q; ++j) quotient[i * q + j] = coset_of[mul(reps[i], reps[j])];
  }
  std::vector<Index> out = invariant_factors(quotient, q, coset_of[identity]);
  out.push_back(best_order);
  return out;
}

Index CohomologyGroup::class_of(const FactorTable& g) const {
  const Index i = factor_sets_.index_of(g);
  if (i == kNone) throw Error(ErrorCode::IllFormed, "table is not a factor set for this data");
  return class_of_[i];
}

CohomologyGroup cohomology_group(const ExtensionData& data, std::size_t bound) {
  CohomologyGroup out;
  out.factor_sets_ = enumerate_factor_sets(data, bound);
  out.inner_ = enumerate_inner(data, bound);
  const FactorSetGroup& fs = out.factor_sets_;
  const FiniteMonoid& h = data.quotient();
  const Index size = fs.size();

  DisjointSet dsu(size);
  // F: tables whose entries agree class-wise at level hh'.
  std::map<std::vector<Index>, Index> by_key;
  for (Index i = 0; i < size; ++i) {
    const FactorTable& g = fs.elements()[i];
    std::vector<Index> key;
    key.reserve(g.map().size());
    for (Index x = 0; x < h.size(); ++x) {
      for (Index y = 0; y < h.size(); ++y) key.push_back(data.cls(g(x, y), h.mul(x, y)));
    }
    auto [it, inserted] = by_key.emplace(std::move(key), i);
    if (!inserted) dsu.unite(it->second, i);
  }
  for (Index i = 0; i < size; ++i) {
    for (const FactorTable& delta : out.inner_) {
      const Index j = fs.index_of(multiply(delta, fs.elements()[i], data.kernel()));
      if (j == kNone) throw Error(ErrorCode::IllFormed, "inner translate left the factor sets");
      dsu.unite(i, j);
    }
  }

  // Class 0 holds the identity; the rest by first appearance.
  std::vector<Index> root_class(size, kNone);
  out.class_of_.assign(size, kNone);
  root_class[dsu.find(fs.identity())] = 0;
  out.representatives_.push_back(fs.identity());
  for (Index i = 0; i < size; ++i) {
    const Index r = dsu.find(i);
    if (root_class[r] == kNone) {
      root_class[r] = out.representatives_.size();
      out.representatives_.push_back(i);
    }
    out.class_of_[i] = root_class[r];
  }
  const Index order = out.representatives_.size();
  std::vector<Index> class_size(order, 0);
  for (Index c : out.class_of_) ++class_size[c];
  if (std::adjacent_find(class_size.begin(), class_size.end(), std::not_equal_to<>()) !=
      class_size.end()) {
    throw Error(ErrorCode::IllFormed, "cohomology classes are not cosets of one subgroup");
  }

  out.cayley_.assign(order * order, kNone);
  for (Index a = 0; a < order; ++a) {
    for (Index b = 0; b < order; ++b) {
      const Index p = fs.multiply(out.representatives_[a], out.representatives_[b]);
      if (p == kNone) throw Error(ErrorCode::IllFormed, "factor sets are not closed under products");
      out.cayley_[a * order + b] = out.class_of_[p];
    }
  }
  if (size <= 2048) {
    for (Index i = 0; i < size; ++i) {
      for (Index j = 0; j < size; ++j) {
        if (out.class_of_[fs.multiply(i, j)] != out.mul(out.class_of_[i], out.class_of_[j])) {
          throw Error(ErrorCode::IllFormed, "class multiplication is not well defined", {i, j});
        }
      }
    }
  }
  out.invariant_factors_ = invariant_factors(out.cayley_, order, 0);
  return out;
}

namespace {

bool same_base(const KernelDiagram& a, const KernelDiagram& b) {
  return a.kernel() == b.kernel() && a.quotient() == b.quotient();
}

bool is_extension_morphism(const KernelDiagram& a, const KernelDiagram& b,
                           const std::vector<Index>& f) {
  const FiniteMonoid& g = a.total();
  const FiniteMonoid& gp = b.total();
  std::vector<bool> hit(gp.size(), false);
  for (Index x = 0; x < g.size(); ++x) {
    if (f[x] >= gp.size() || hit[f[x]]) return false;
    hit[f[x]] = true;
  }
  for (Index x = 0; x < g.size(); ++x) {
    for (Index y = 0; y < g.size(); ++y) {
      if (f[g.mul(x, y)] != gp.mul(f[x], f[y])) return false;
    }
  }
  for (Index n = 0; n < a.kernel().size(); ++n) {
    if (f[a.k()(n)] != b.k()(n)) return false;
  }
  for (Index x = 0; x < g.size(); ++x) {
    if (b.e()(f[x]) != a.e()(x)) return false;
  }
  return f[g.identity()] == gp.identity();
}

// Every g = k(n) s(e(g)), so f is fixed by the images of s(h).
std::optional<std::vector<Index>> cosetal_search(const KernelDiagram& a, const KernelDiagram& b) {
  const FiniteMonoid& h = a.quotient();
  const Section s = first_section(a);
  const Index G = a.total().size();
  std::vector<Index> n_of(G, kNone);
  for (Index x = 0; x < G; ++x) {
    const Index base = s(a.e()(x));
    for (Index n = 0; n < a.kernel().size(); ++n) {
      if (a.translate(n, base) == x) {
        n_of[x] = n;
        break;
      }
    }
  }
  std::vector<Index> free_h;
  for (Index y = 0; y < h.size(); ++y) {
    if (y != h.identity()) free_h.push_back(y);
  }
  std::vector<Index> choice(free_h.size(), 0);
  std::vector<Index> image_of_s(h.size(), b.total().identity());
  std::vector<Index> f(G);
  while (true) {
    for (Index i = 0; i < free_h.size(); ++i) image_of_s[free_h[i]] = b.fiber(free_h[i])[choice[i]];
    bool consistent = true;
    for (Index x = 0; x < G; ++x) f[x] = b.translate(n_of[x], image_of_s[a.e()(x)]);
    for (Index y = 0; y < h.size() && consistent; ++y) {
      for (Index n = 0; n < a.kernel().size() && consistent; ++n) {
        consistent = f[a.translate(n, s(y))] == b.translate(n, image_of_s[y]);
      }
    }
    if (consistent && is_extension_morphism(a, b, f)) return f;
    Index i = free_h.size();
    bool advanced = false;
    while (i > 0) {
      --i;
      if (++choice[i] < b.fiber(free_h[i]).size()) {
        advanced = true;
        break;
      }
      choice[i] = 0;
    }
    if (!advanced) return std::nullopt;
  }
}

bool extend_fiberwise(const KernelDiagram& a, const KernelDiagram& b, std::vector<Index>& f,
                      std::vector<bool>& used, Index next) {
  const FiniteMonoid& g = a.total();
  const FiniteMonoid& gp = b.total();
  while (next < g.size() && f[next] != kNone) ++next;
  if (next == g.size()) return is_extension_morphism(a, b, f);
  for (Index y : b.fiber(a.e()(next))) {
    if (used[y]) continue;
    f[next] = y;
    used[y] = true;
    bool ok = true;
    for (Index u = 0; u < g.size() && ok; ++u) {
      if (f[u] == kNone) continue;
      for (Index v = 0; v < g.size() && ok; ++v) {
        if (f[v] == kNone) continue;
        const Index uv = g.mul(u, v);
        if (f[uv] != kNone && f[uv] != gp.mul(f[u], f[v])) ok = false;
      }
    }
    if (ok && extend_fiberwise(a, b, f, used, next + 1)) return true;
    f[next] = kNone;
    used[y] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Index>> extensions_isomorphic(const KernelDiagram& a,
                                                        const KernelDiagram& b) {
  if (!same_base(a, b)) {
    throw Error(ErrorCode::DataMismatch, "extensions of different N or H are not comparable");
  }
  if (a.total().size() != b.total().size()) return std::nullopt;
  for (Index y = 0; y < a.quotient().size(); ++y) {
    if (a.fiber(y).size() != b.fiber(y).size()) return std::nullopt;
  }
  const bool a_cosetal = is_cosetal(a).holds;
  const bool b_cosetal = is_cosetal(b).holds;
  if (a_cosetal != b_cosetal) return std::nullopt;
  if (a_cosetal) return cosetal_search(a, b);

  std::vector<Index> f(a.total().size(), kNone);
  std::vector<bool> used(b.total().size(), false);
  for (Index n = 0; n < a.kernel().size(); ++n) {
    f[a.k()(n)] = b.k()(n);
    used[b.k()(n)] = true;
  }
  if (!extend_fiberwise(a, b, f, used, 0)) return std::nullopt;
  return f;
}

ZetaResult zeta(const KernelDiagram& d, const CohomologyGroup& group) {
  const Section s = first_section(d);
  ExtensionData data = extract_data(d, s);
  if (!data_equivalent(data, group.data())) {
    throw Error(ErrorCode::DataMismatch, "extension data differ from the cohomology group's data");
  }
  FactorTable g = extract_factor_set(d, s);
  const Index cls = group.class_of(g);
  return ZetaResult{std::move(data), std::move(g), cls};
}

ZetaWithGroup zeta(const KernelDiagram& d, std::size_t bound) {
  CohomologyGroup group = cohomology_group(extract_data(d, first_section(d)), bound);
  ZetaResult result = zeta(d, group);
  return ZetaWithGroup{std::move(result), std::move(group)};
}

ExtensionDiagram baer_sum(const KernelDiagram& a, const KernelDiagram& b) {
  if (!same_base(a, b)) throw Error(ErrorCode::DataMismatch, "extensions of different N or H");
  const Section sa = first_section(a);
  const Section sb = first_section(b);
  const ExtensionData da = extract_data(a, sa);
  const ExtensionData db = extract_data(b, sb);
  if (!data_equivalent(da, db)) {
    throw Error(ErrorCode::DataMismatch, "extracted partitions or action classes differ");
  }
  return build_extension(da, multiply(extract_factor_set(a, sa), extract_factor_set(b, sb),
                                      da.kernel()));
}

std::vector<ClassRepresentative> classify(const CohomologyGroup& group) {
  std::vector<ClassRepresentative> out;
  for (Index c = 0; c < group.order(); ++c) {
    ExtensionDiagram ext = build_extension(group.data(), group.representative(c));
    if (zeta(ext, group).class_id != c) {
      throw Error(ErrorCode::IllFormed, "representative does not return to its class", {c});
    }
    out.push_back(ClassRepresentative{c, group.representative(c), std::move(ext)});
  }
  for (Index i = 0; i < out.size(); ++i) {
    for (Index j = i + 1; j < out.size(); ++j) {
      if (extensions_isomorphic(out[i].extension, out[j].extension)) {
        throw Error(ErrorCode::IllFormed, "distinct classes gave isomorphic extensions", {i, j});
      }
    }
  }
  return out;
}

std::vector<ClassRepresentative> classify(const ExtensionData& data, std::size_t bound) {
  return classify(cohomology_group(data, bound));
}

}  // namespace cosetal
