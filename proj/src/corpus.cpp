#include "cosetal/corpus.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

namespace cosetal::corpus {

namespace {

std::size_t power_or_throw(std::size_t base, std::size_t exponent, std::size_t bound,
                           const char* what) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > bound / base) {
      throw Error(ErrorCode::TooLarge, std::string(what) + " exceeds the bound of " +
                                           std::to_string(bound));
    }
    out *= base;
  }
  return out;
}

bool odometer(std::vector<Index>& digits, Index radix) {
  for (Index i = digits.size(); i > 0; --i) {
    if (++digits[i - 1] < radix) return true;
    digits[i - 1] = 0;
  }
  return false;
}

// Restricted growth strings of length n: every set partition exactly once.
std::vector<std::vector<Index>> set_partitions(Index n) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> rgs(n, 0);
  auto rec = [&](auto&& self, Index i, Index max_label) -> void {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (Index v = 0; v <= max_label + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(max_label, v));
    }
  };
  if (n == 0) return {{}};
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

}  // namespace

std::vector<MonoidHom> enumerate_homs(const FiniteMonoid& dom, const FiniteMonoid& cod,
                                      std::size_t bound) {
  power_or_throw(cod.size(), dom.size() - 1, bound, "hom candidate count");
  std::vector<Index> free;
  for (Index x = 0; x < dom.size(); ++x) {
    if (x != dom.identity()) free.push_back(x);
  }
  std::vector<MonoidHom> out;
  std::vector<Index> digits(free.size(), 0);
  std::vector<Index> map(dom.size(), cod.identity());
  do {
    for (Index i = 0; i < free.size(); ++i) map[free[i]] = digits[i];
    bool hom = true;
    for (Index x = 0; x < dom.size() && hom; ++x) {
      for (Index y = 0; y < dom.size() && hom; ++y) {
        hom = map[dom.mul(x, y)] == cod.mul(map[x], map[y]);
      }
    }
    if (hom) out.push_back(validate_hom(map, dom, cod));
  } while (odometer(digits, cod.size()));
  return out;
}

std::vector<PairPartition> enumerate_admissible(const FiniteAbelianGroup& n,
                                                const FiniteMonoid& h) {
  const Index N = n.size();
  const Index H = h.size();
  const auto columns = set_partitions(N);
  std::vector<Index> others;
  for (Index y = 0; y < H; ++y) {
    if (y != h.identity()) others.push_back(y);
  }
  std::vector<PairPartition> out;
  std::vector<Index> choice(others.size(), 0);
  std::vector<Index> labels(N * H);
  do {
    // Column y gets labels offset by y * N so columns never share a class.
    for (Index m = 0; m < N; ++m) labels[m * H + h.identity()] = h.identity() * N + m;
    for (Index i = 0; i < others.size(); ++i) {
      const Index y = others[i];
      for (Index m = 0; m < N; ++m) labels[m * H + y] = y * N + columns[choice[i]][m];
    }
    PairPartition e(N, H, labels);
    if (is_admissible(e, n, h)) out.push_back(std::move(e));
  } while (odometer(choice, columns.size()));
  return out;
}

std::vector<ActionTable> enumerate_compatible_actions(const FiniteAbelianGroup& n,
                                                      const FiniteMonoid& h,
                                                      const PairPartition& e,
                                                      std::size_t bound) {
  const Index N = n.size();
  const Index H = h.size();
  power_or_throw(N, N * (H - 1), bound, "action candidate count");
  std::vector<Index> cells;
  for (Index y = 0; y < H; ++y) {
    if (y == h.identity()) continue;
    for (Index m = 0; m < N; ++m) cells.push_back(y * N + m);
  }
  std::vector<Index> map(H * N);
  for (Index m = 0; m < N; ++m) map[h.identity() * N + m] = m;
  std::vector<Index> digits(cells.size(), 0);
  std::set<std::vector<Index>> seen;
  std::vector<ActionTable> out;
  do {
    for (Index i = 0; i < cells.size(); ++i) map[cells[i]] = digits[i];
    ActionTable phi(H, N, map);
    if (!is_compatible(phi, e, n, h)) continue;
    std::vector<Index> key(H * N);
    for (Index y = 0; y < H; ++y) {
      for (Index m = 0; m < N; ++m) key[y * N + m] = e.class_of(phi(y, m), y);
    }
    if (seen.insert(std::move(key)).second) out.push_back(std::move(phi));
  } while (odometer(digits, N));
  return out;
}

std::vector<ExtensionData> enumerate_data(const FiniteAbelianGroup& n, const FiniteMonoid& h,
                                          std::size_t bound) {
  std::vector<ExtensionData> out;
  for (const PairPartition& e : enumerate_admissible(n, h)) {
    for (const ActionTable& phi : enumerate_compatible_actions(n, h, e, bound)) {
      out.push_back(validate_data(n, h, e, phi));
    }
  }
  return out;
}

std::vector<FiniteAbelianGroup> kernels(Index max_order) {
  std::vector<FiniteAbelianGroup> out;
  for (Index n = 1; n <= max_order; ++n) out.push_back(validate_abelian_group(cyclic_group(n)));
  return out;
}

std::vector<FiniteMonoid> quotients(Index max_order) {
  std::vector<FiniteMonoid> out;
  for (Index n = 1; n <= max_order; ++n) {
    for (FiniteMonoid& m : enumerate_monoids(n)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<FiniteMonoid> middles(Index max_order) {
  std::vector<FiniteMonoid> pool;
  std::vector<FiniteMonoid> base;
  for (Index n = 1; n <= max_order; ++n) {
    base.push_back(cyclic_group(n));
    base.push_back(meet_semilattice(n));
  }
  pool = base;
  for (const FiniteMonoid& a : base) {
    for (const FiniteMonoid& b : base) {
      if (a.size() > 1 && b.size() > 1 && a.size() * b.size() <= max_order) {
        pool.push_back(direct_product(a, b));
      }
    }
  }
  for (Index n = 1; n <= std::min<Index>(4, max_order); ++n) {
    for (FiniteMonoid& m : enumerate_monoids(n)) pool.push_back(std::move(m));
  }
  const Index existing = pool.size();
  for (Index i = 0; i < existing; ++i) {
    if (pool[i].size() < max_order) pool.push_back(adjoin_absorbing(pool[i]));
  }

  std::vector<FiniteMonoid> out;
  for (FiniteMonoid& m : pool) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const FiniteMonoid& o) {
      return o.size() == m.size() && find_isomorphism(o, m).has_value();
    });
    if (!dup) out.push_back(std::move(m));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const FiniteMonoid& a, const FiniteMonoid& b) { return a.size() < b.size(); });
  return out;
}

std::vector<Entry> census(Index max_total) {
  const auto ns = kernels();
  const auto hs = quotients();
  const auto gs = middles(max_total);
  std::vector<Entry> out;
  using Key = std::tuple<std::vector<Index>, std::vector<Index>, std::vector<Index>,
                         std::vector<Index>, Index>;
  std::set<Key> seen;
  auto add = [&](std::string label, Index hid, ExtensionDiagram ext) {
    Key key{std::vector<Index>(ext.total().table().begin(), ext.total().table().end()),
            std::vector<Index>(ext.k().map().begin(), ext.k().map().end()),
            std::vector<Index>(ext.e().map().begin(), ext.e().map().end()),
            {ext.total().identity()},
            hid * 16 + ext.kernel().size()};
    if (seen.insert(std::move(key)).second) out.push_back(Entry{std::move(label), hid, std::move(ext)});
  };

  for (Index gi = 0; gi < gs.size(); ++gi) {
    const FiniteMonoid& g = gs[gi];
    for (Index hid = 0; hid < hs.size(); ++hid) {
      const FiniteMonoid& h = hs[hid];
      if (h.size() > g.size()) continue;
      std::vector<MonoidHom> es;
      for (MonoidHom& e : enumerate_homs(g, h)) {
        if (e.is_surjective()) es.push_back(std::move(e));
      }
      if (es.empty()) continue;
      for (const FiniteAbelianGroup& n : ns) {
        for (const MonoidHom& k : enumerate_homs(n.monoid(), g)) {
          if (!k.is_injective()) continue;
          for (const MonoidHom& e : es) {
            try {
              ExtensionDiagram ext = validate_extension(n, g, h, k, e);
              add("builder G" + std::to_string(gi), hid, std::move(ext));
            } catch (const Error&) {
            }
          }
        }
      }
    }
  }

  for (Index hid = 0; hid < hs.size(); ++hid) {
    for (const FiniteAbelianGroup& n : ns) {
      for (const ExtensionData& data : enumerate_data(n, hs[hid])) {
        if (data.partition().num_classes() > max_total) continue;
        const FactorSetGroup fs = enumerate_factor_sets(data);
        for (Index i = 0; i < fs.size(); ++i) {
          add("rho N" + std::to_string(n.size()) + " H" + std::to_string(hid) + " g" +
                  std::to_string(i),
              hid, build_extension(data, fs.elements()[i]));
        }
      }
    }
  }
  return out;
}

}  // namespace cosetal::corpus
