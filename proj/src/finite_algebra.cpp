#include "cosetal/finite_algebra.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "cosetal/disjoint_set.hpp"

namespace cosetal {

std::vector<std::vector<Index>> FiniteMonoid::rows() const {
  std::vector<std::vector<Index>> out(size_);
  for (Index x = 0; x < size_; ++x) {
    out[x].assign(table_.begin() + static_cast<std::ptrdiff_t>(x * size_),
                  table_.begin() + static_cast<std::ptrdiff_t>((x + 1) * size_));
  }
  return out;
}

bool FiniteMonoid::is_commutative() const noexcept {
  for (Index x = 0; x < size_; ++x) {
    for (Index y = x + 1; y < size_; ++y) {
      if (mul(x, y) != mul(y, x)) return false;
    }
  }
  return true;
}

FiniteMonoid validate_monoid(Index size, std::span<const Index> table, Index identity) {
  if (size == 0) throw Error(ErrorCode::SizeMismatch, "monoid must be non-empty");
  if (table.size() != size * size) {
    throw Error(ErrorCode::SizeMismatch, "table has " + std::to_string(table.size()) +
                                             " entries, expected " + std::to_string(size * size));
  }
  if (identity >= size) throw Error(ErrorCode::OutOfRange, "identity index", {identity});
  for (Index x = 0; x < size; ++x) {
    for (Index y = 0; y < size; ++y) {
      if (table[x * size + y] >= size) throw Error(ErrorCode::NotClosed, "", {x, y});
    }
  }
  auto at = [&](Index x, Index y) { return table[x * size + y]; };
  for (Index x = 0; x < size; ++x) {
    if (at(identity, x) != x || at(x, identity) != x) {
      throw Error(ErrorCode::BadIdentity, "", {x});
    }
  }
  for (Index x = 0; x < size; ++x) {
    for (Index y = 0; y < size; ++y) {
      const Index xy = at(x, y);
      for (Index z = 0; z < size; ++z) {
        if (at(xy, z) != at(x, at(y, z))) {
          throw Error(ErrorCode::NotAssociative, "", {x, y, z});
        }
      }
    }
  }
  return FiniteMonoid(size, std::vector<Index>(table.begin(), table.end()), identity);
}

FiniteMonoid validate_monoid(const std::vector<std::vector<Index>>& rows, Index identity) {
  const Index size = rows.size();
  std::vector<Index> flat;
  flat.reserve(size * size);
  for (const auto& row : rows) {
    if (row.size() != size) {
      throw Error(ErrorCode::SizeMismatch, "row length " + std::to_string(row.size()) +
                                               " differs from " + std::to_string(size));
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_monoid(size, flat, identity);
}

FiniteAbelianGroup validate_abelian_group(const FiniteMonoid& m) {
  for (Index x = 0; x < m.size(); ++x) {
    for (Index y = x + 1; y < m.size(); ++y) {
      if (m.mul(x, y) != m.mul(y, x)) throw Error(ErrorCode::NotCommutative, "", {x, y});
    }
  }
  std::vector<Index> inverse(m.size(), kNone);
  for (Index x = 0; x < m.size(); ++x) {
    for (Index y = 0; y < m.size(); ++y) {
      if (m.mul(x, y) == m.identity()) {
        inverse[x] = y;
        break;
      }
    }
    if (inverse[x] == kNone) throw Error(ErrorCode::NoInverse, "", {x});
  }
  return FiniteAbelianGroup(m, std::move(inverse));
}

MonoidHom validate_hom(std::span<const Index> map, const FiniteMonoid& domain,
                       const FiniteMonoid& codomain) {
  if (map.size() != domain.size()) {
    throw Error(ErrorCode::SizeMismatch, "map has " + std::to_string(map.size()) +
                                             " entries, domain has " +
                                             std::to_string(domain.size()));
  }
  for (Index x = 0; x < map.size(); ++x) {
    if (map[x] >= codomain.size()) throw Error(ErrorCode::OutOfRange, "", {x});
  }
  if (map[domain.identity()] != codomain.identity()) {
    throw Error(ErrorCode::IdentityNotPreserved, "");
  }
  for (Index x = 0; x < domain.size(); ++x) {
    for (Index y = 0; y < domain.size(); ++y) {
      if (map[domain.mul(x, y)] != codomain.mul(map[x], map[y])) {
        throw Error(ErrorCode::NotHom, "", {x, y});
      }
    }
  }
  return MonoidHom(domain, codomain, std::vector<Index>(map.begin(), map.end()));
}

bool MonoidHom::is_injective() const { return image().size() == map_.size(); }

bool MonoidHom::is_surjective() const { return image().size() == codomain_.size(); }

std::vector<Index> MonoidHom::image() const {
  std::vector<Index> out(map_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Index> MonoidHom::preimage(Index y) const {
  std::vector<Index> out;
  for (Index x = 0; x < map_.size(); ++x) {
    if (map_[x] == y) out.push_back(x);
  }
  return out;
}

MonoidHom identity_hom(const FiniteMonoid& m) {
  std::vector<Index> map(m.size());
  for (Index x = 0; x < m.size(); ++x) map[x] = x;
  return validate_hom(map, m, m);
}

MonoidHom compose(const MonoidHom& outer, const MonoidHom& inner) {
  if (!(inner.codomain() == outer.domain())) {
    throw Error(ErrorCode::DataMismatch, "composition of non-composable homomorphisms");
  }
  std::vector<Index> map(inner.domain().size());
  for (Index x = 0; x < map.size(); ++x) map[x] = outer(inner(x));
  return validate_hom(map, inner.domain(), outer.codomain());
}

std::vector<Index> normalize_partition(std::span<const Index> labels) {
  std::vector<Index> out(labels.size());
  std::vector<std::pair<Index, Index>> seen;  // (label, id)
  for (Index i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& p) { return p.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], seen.size());
      out[i] = seen.size() - 1;
    } else {
      out[i] = it->second;
    }
  }
  return out;
}

std::vector<Index> kernel_partition(const MonoidHom& f) { return normalize_partition(f.map()); }

Congruence::Congruence(FiniteMonoid monoid, std::vector<Index> class_of)
    : monoid_(std::move(monoid)), class_of_(normalize_partition(class_of)) {
  num_classes_ = class_of_.empty() ? 0 : *std::max_element(class_of_.begin(), class_of_.end()) + 1;
}

std::vector<std::vector<Index>> Congruence::classes() const {
  std::vector<std::vector<Index>> out(num_classes_);
  for (Index x = 0; x < class_of_.size(); ++x) out[class_of_[x]].push_back(x);
  return out;
}

Congruence validate_congruence(const FiniteMonoid& m, std::span<const Index> labels) {
  if (labels.size() != m.size()) {
    throw Error(ErrorCode::SizeMismatch, "congruence labels must cover the monoid");
  }
  std::vector<Index> ids = normalize_partition(labels);
  for (Index a = 0; a < m.size(); ++a) {
    for (Index b = a + 1; b < m.size(); ++b) {
      if (ids[a] != ids[b]) continue;
      for (Index x = 0; x < m.size(); ++x) {
        if (ids[m.mul(x, a)] != ids[m.mul(x, b)] || ids[m.mul(a, x)] != ids[m.mul(b, x)]) {
          throw Error(ErrorCode::IllFormed, "not compatible with multiplication", {a, b, x});
        }
      }
    }
  }
  return Congruence(m, std::move(ids));
}

Congruence congruence_closure(const FiniteMonoid& m,
                              std::span<const std::pair<Index, Index>> seeds) {
  DisjointSet dsu(m.size());
  std::deque<std::pair<Index, Index>> work;
  for (const auto& [a, b] : seeds) {
    if (a >= m.size() || b >= m.size()) throw Error(ErrorCode::OutOfRange, "seed pair", {a, b});
    work.emplace_back(a, b);
  }
  while (!work.empty()) {
    const auto [a, b] = work.front();
    work.pop_front();
    if (!dsu.unite(a, b)) continue;
    for (Index x = 0; x < m.size(); ++x) {
      work.emplace_back(m.mul(x, a), m.mul(x, b));
      work.emplace_back(m.mul(a, x), m.mul(b, x));
    }
  }
  return Congruence(m, dsu.labels());
}

Quotient quotient_monoid(const FiniteMonoid& m, const Congruence& c) {
  const Index k = c.num_classes();
  std::vector<Index> rep(k, kNone);
  for (Index x = 0; x < m.size(); ++x) {
    if (rep[c.class_of(x)] == kNone) rep[c.class_of(x)] = x;
  }
  std::vector<Index> table(k * k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) table[i * k + j] = c.class_of(m.mul(rep[i], rep[j]));
  }
  FiniteMonoid q = validate_monoid(k, table, c.class_of(m.identity()));
  std::vector<Index> proj(c.class_of().begin(), c.class_of().end());
  MonoidHom projection = validate_hom(proj, m, q);
  return Quotient{std::move(q), std::move(projection)};
}

FiniteMonoid cyclic_group(Index n) {
  if (n == 0) throw Error(ErrorCode::SizeMismatch, "cyclic group order must be positive");
  std::vector<Index> table(n * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) table[x * n + y] = (x + y) % n;
  }
  return validate_monoid(n, table, 0);
}

FiniteMonoid meet_semilattice(Index n) {
  if (n == 0) throw Error(ErrorCode::SizeMismatch, "chain length must be positive");
  std::vector<Index> table(n * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) table[x * n + y] = std::max(x, y);
  }
  return validate_monoid(n, table, 0);
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  const Index n = a.size() * b.size();
  std::vector<Index> table(n * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const Index first = a.mul(x / b.size(), y / b.size());
      const Index second = b.mul(x % b.size(), y % b.size());
      table[x * n + y] = first * b.size() + second;
    }
  }
  return validate_monoid(n, table, a.identity() * b.size() + b.identity());
}

MonoidHom product_projection_first(const FiniteMonoid& a, const FiniteMonoid& b) {
  std::vector<Index> map(a.size() * b.size());
  for (Index x = 0; x < map.size(); ++x) map[x] = x / b.size();
  return validate_hom(map, direct_product(a, b), a);
}

MonoidHom product_projection_second(const FiniteMonoid& a, const FiniteMonoid& b) {
  std::vector<Index> map(a.size() * b.size());
  for (Index x = 0; x < map.size(); ++x) map[x] = x % b.size();
  return validate_hom(map, direct_product(a, b), b);
}

FiniteMonoid adjoin_absorbing(const FiniteMonoid& m) {
  const Index n = m.size() + 1;
  const Index inf = m.size();
  std::vector<Index> table(n * n, inf);
  for (Index x = 0; x < m.size(); ++x) {
    for (Index y = 0; y < m.size(); ++y) table[x * n + y] = m.mul(x, y);
  }
  return validate_monoid(n, table, m.identity());
}

namespace {

bool extend_isomorphism(const FiniteMonoid& a, const FiniteMonoid& b,
                        std::vector<Index>& f, std::vector<bool>& used, Index next) {
  const Index n = a.size();
  while (next < n && f[next] != kNone) ++next;
  if (next == n) return true;
  for (Index y = 0; y < n; ++y) {
    if (used[y]) continue;
    f[next] = y;
    used[y] = true;
    bool ok = true;
    for (Index u = 0; u < n && ok; ++u) {
      if (f[u] == kNone) continue;
      for (Index v = 0; v < n && ok; ++v) {
        if (f[v] == kNone) continue;
        const Index uv = a.mul(u, v);
        if (f[uv] != kNone && f[uv] != b.mul(f[u], f[v])) ok = false;
      }
    }
    if (ok && extend_isomorphism(a, b, f, used, next + 1)) return true;
    f[next] = kNone;
    used[y] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Index>> find_isomorphism(const FiniteMonoid& a, const FiniteMonoid& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<Index> f(a.size(), kNone);
  std::vector<bool> used(b.size(), false);
  f[a.identity()] = b.identity();
  used[b.identity()] = true;
  if (!extend_isomorphism(a, b, f, used, 0)) return std::nullopt;
  return f;
}

std::vector<FiniteMonoid> enumerate_monoids(Index size) {
  if (size == 0) throw Error(ErrorCode::SizeMismatch, "monoid order must be positive");
  if (size > 4) throw Error(ErrorCode::TooLarge, "monoid enumeration is limited to order 4");
  // The identity is 0, so only the (size-1)^2 products among non-identity
  // elements are free.
  const Index free_cells = (size - 1) * (size - 1);
  std::vector<Index> digits(free_cells, 0);
  std::vector<FiniteMonoid> found;
  std::vector<Index> table(size * size);
  while (true) {
    for (Index x = 0; x < size; ++x) {
      table[x] = x;
      table[x * size] = x;
    }
    for (Index i = 0; i < free_cells; ++i) {
      const Index x = i / (size - 1) + 1;
      const Index y = i % (size - 1) + 1;
      table[x * size + y] = digits[i];
    }
    bool associative = true;
    for (Index x = 1; x < size && associative; ++x) {
      for (Index y = 1; y < size && associative; ++y) {
        for (Index z = 1; z < size && associative; ++z) {
          if (table[table[x * size + y] * size + z] != table[x * size + table[y * size + z]]) {
            associative = false;
          }
        }
      }
    }
    if (associative) {
      FiniteMonoid m = validate_monoid(size, table, 0);
      const bool fresh = std::none_of(found.begin(), found.end(), [&](const FiniteMonoid& other) {
        return find_isomorphism(m, other).has_value();
      });
      if (fresh) found.push_back(std::move(m));
    }
    // Odometer, last cell least significant.
    Index i = free_cells;
    while (i > 0) {
      --i;
      if (++digits[i] < size) break;
      digits[i] = 0;
      if (i == 0) return found;
    }
    if (free_cells == 0) return found;
  }
}

}  // namespace cosetal
