#include "cosetal/equiv_action.hpp"

#include <algorithm>
#include <string>

namespace cosetal {

PairPartition::PairPartition(Index n_size, Index h_size, std::span<const Index> labels)
    : n_size_(n_size), h_size_(h_size) {
  if (n_size == 0 || h_size == 0 || labels.size() != n_size * h_size) {
    throw Error(ErrorCode::SizeMismatch, "partition needs " + std::to_string(n_size * h_size) +
                                             " class ids, got " + std::to_string(labels.size()));
  }
  class_of_ = normalize_partition(labels);
  num_classes_ = *std::max_element(class_of_.begin(), class_of_.end()) + 1;
  first_.assign(num_classes_, kNone);
  for (Index f = 0; f < class_of_.size(); ++f) {
    if (first_[class_of_[f]] == kNone) first_[class_of_[f]] = f;
  }
}

PairPartition PairPartition::discrete(Index n_size, Index h_size) {
  std::vector<Index> labels(n_size * h_size);
  for (Index i = 0; i < labels.size(); ++i) labels[i] = i;
  return PairPartition(n_size, h_size, labels);
}

ActionTable::ActionTable(Index h_size, Index n_size, std::vector<Index> map)
    : h_size_(h_size), n_size_(n_size), map_(std::move(map)) {
  if (h_size == 0 || n_size == 0 || map_.size() != h_size * n_size) {
    throw Error(ErrorCode::SizeMismatch, "action table needs " + std::to_string(h_size * n_size) +
                                             " entries, got " + std::to_string(map_.size()));
  }
  for (Index i = 0; i < map_.size(); ++i) {
    if (map_[i] >= n_size) throw Error(ErrorCode::OutOfRange, "action entry", {i / n_size, i % n_size});
  }
}

ActionTable ActionTable::trivial(Index h_size, Index n_size) {
  std::vector<Index> map(h_size * n_size);
  for (Index i = 0; i < map.size(); ++i) map[i] = i % n_size;
  return ActionTable(h_size, n_size, std::move(map));
}

std::vector<std::vector<Index>> ActionTable::rows() const {
  std::vector<std::vector<Index>> out(h_size_);
  for (Index h = 0; h < h_size_; ++h) {
    for (Index n = 0; n < n_size_; ++n) out[h].push_back((*this)(h, n));
  }
  return out;
}

namespace {

void require_sizes(const PairPartition& e, const FiniteAbelianGroup& n, const FiniteMonoid& h) {
  if (e.n_size() != n.size() || e.h_size() != h.size()) {
    throw Error(ErrorCode::SizeMismatch, "partition is not over N x H");
  }
}

ConditionCheck fail(int condition, std::vector<Index> witness) {
  return ConditionCheck{false, condition, std::move(witness)};
}

}  // namespace

ConditionCheck is_admissible(const PairPartition& e, const FiniteAbelianGroup& n,
                             const FiniteMonoid& h) {
  require_sizes(e, n, h);
  const Index one = h.identity();
  for (Index a = 0; a < n.size(); ++a) {
    for (Index b = a + 1; b < n.size(); ++b) {
      if (e.related(a, one, b, one)) return fail(1, {a, b});
    }
  }
  const Index total = n.size() * h.size();
  for (Index i = 0; i < total; ++i) {
    for (Index j = i + 1; j < total; ++j) {
      if (e.class_of()[i] == e.class_of()[j] && i % h.size() != j % h.size()) {
        return fail(2, {i / h.size(), i % h.size(), j / h.size(), j % h.size()});
      }
    }
  }
  for (Index y = 0; y < h.size(); ++y) {
    for (Index a = 0; a < n.size(); ++a) {
      for (Index b = a + 1; b < n.size(); ++b) {
        if (!e.related(a, y, b, y)) continue;
        for (Index x = 0; x < n.size(); ++x) {
          if (!e.related(n.mul(x, a), y, n.mul(x, b), y)) return fail(3, {a, b, y, x});
        }
      }
    }
  }
  for (Index y = 0; y < h.size(); ++y) {
    for (Index a = 0; a < n.size(); ++a) {
      for (Index b = a + 1; b < n.size(); ++b) {
        if (!e.related(a, y, b, y)) continue;
        for (Index x = 0; x < h.size(); ++x) {
          if (!e.related(a, h.mul(y, x), b, h.mul(y, x))) return fail(4, {a, b, y, x});
        }
      }
    }
  }
  return {};
}

ConditionCheck is_compatible(const ActionTable& phi, const PairPartition& e,
                             const FiniteAbelianGroup& n, const FiniteMonoid& h) {
  require_sizes(e, n, h);
  if (phi.h_size() != h.size() || phi.n_size() != n.size()) {
    throw Error(ErrorCode::SizeMismatch, "action is not a map H x N -> N");
  }
  const Index N = n.size();
  const Index H = h.size();
  for (Index y = 0; y < H; ++y) {
    for (Index a = 0; a < N; ++a) {
      for (Index b = 0; b < N; ++b) {
        if (!e.related(a, y, b, y)) continue;
        for (Index m = 0; m < N; ++m) {
          if (!e.related(n.mul(a, phi(y, m)), y, n.mul(b, phi(y, m)), y)) {
            return fail(1, {a, b, y, m});
          }
        }
      }
    }
  }
  for (Index yp = 0; yp < H; ++yp) {
    for (Index a = 0; a < N; ++a) {
      for (Index b = 0; b < N; ++b) {
        if (!e.related(a, yp, b, yp)) continue;
        for (Index y = 0; y < H; ++y) {
          const Index level = h.mul(y, yp);
          if (!e.related(phi(y, a), level, phi(y, b), level)) return fail(2, {a, b, yp, y});
        }
      }
    }
  }
  for (Index y = 0; y < H; ++y) {
    for (Index a = 0; a < N; ++a) {
      for (Index b = 0; b < N; ++b) {
        if (!e.related(phi(y, n.mul(a, b)), y, n.mul(phi(y, a), phi(y, b)), y)) {
          return fail(3, {y, a, b});
        }
      }
    }
  }
  for (Index y = 0; y < H; ++y) {
    for (Index yp = 0; yp < H; ++yp) {
      const Index level = h.mul(y, yp);
      for (Index a = 0; a < N; ++a) {
        if (!e.related(phi(level, a), level, phi(y, phi(yp, a)), level)) {
          return fail(4, {y, yp, a});
        }
      }
    }
  }
  for (Index y = 0; y < H; ++y) {
    if (!e.related(phi(y, n.identity()), y, n.identity(), y)) return fail(5, {y});
  }
  for (Index a = 0; a < N; ++a) {
    if (!e.related(phi(h.identity(), a), h.identity(), a, h.identity())) return fail(6, {a});
  }
  return {};
}

ExtensionData validate_data(const FiniteAbelianGroup& n, const FiniteMonoid& h,
                            const PairPartition& e, const ActionTable& phi) {
  if (const auto adm = is_admissible(e, n, h); !adm) {
    throw Error(ErrorCode::IllFormed,
                "admissibility condition " + std::to_string(adm.condition) + " fails",
                adm.witness);
  }
  if (const auto comp = is_compatible(phi, e, n, h); !comp) {
    throw Error(ErrorCode::IllFormed,
                "compatibility condition " + std::to_string(comp.condition) + " fails",
                comp.witness);
  }
  return ExtensionData(n, h, e, phi);
}

Index star_left(const PairPartition& e, const FiniteAbelianGroup& n, Index x, Index cls) {
  const auto [m, y] = e.representative(cls);
  return e.class_of(n.mul(x, m), y);
}

Index star_right(const PairPartition& e, const FiniteMonoid& h, Index cls, Index x) {
  const auto [m, y] = e.representative(cls);
  return e.class_of(m, h.mul(y, x));
}

PairPartition extract_equivalence(const KernelDiagram& d, const Section& s) {
  const Index N = d.kernel().size();
  const Index H = d.quotient().size();
  std::vector<Index> labels(N * H);
  for (Index n = 0; n < N; ++n) {
    for (Index h = 0; h < H; ++h) labels[n * H + h] = d.translate(n, s(h));
  }
  PairPartition e(N, H, labels);
  if (const auto adm = is_admissible(e, d.kernel(), d.quotient()); !adm) {
    throw Error(ErrorCode::IllFormed,
                "extracted relation breaks admissibility condition " +
                    std::to_string(adm.condition),
                adm.witness);
  }
  return e;
}

namespace {

ActionTable solve_action(const KernelDiagram& d, const Section& s) {
  const Index N = d.kernel().size();
  const Index H = d.quotient().size();
  const FiniteMonoid& g = d.total();
  std::vector<Index> map(H * N, kNone);
  for (Index h = 0; h < H; ++h) {
    for (Index n = 0; n < N; ++n) {
      const Index target = g.mul(s(h), d.k()(n));
      for (Index m = 0; m < N; ++m) {
        if (d.translate(m, s(h)) == target) {
          map[h * N + n] = m;
          break;
        }
      }
      if (map[h * N + n] == kNone) {
        throw Error(ErrorCode::NotCosetal, "s(h)k(n) is not in the coset of s(h)", {h, n});
      }
    }
  }
  return ActionTable(H, N, std::move(map));
}

}  // namespace

ActionTable extract_action(const KernelDiagram& d, const Section& s) {
  ActionTable phi = solve_action(d, s);
  const PairPartition e = extract_equivalence(d, s);
  if (const auto comp = is_compatible(phi, e, d.kernel(), d.quotient()); !comp) {
    throw Error(ErrorCode::IllFormed,
                "extracted action breaks compatibility condition " +
                    std::to_string(comp.condition),
                comp.witness);
  }
  return phi;
}

ExtensionData extract_data(const KernelDiagram& d, const Section& s) {
  return validate_data(d.kernel(), d.quotient(), extract_equivalence(d, s), solve_action(d, s));
}

bool actions_equivalent(const ActionTable& phi, const ActionTable& phi_prime,
                        const PairPartition& e) {
  if (phi.h_size() != phi_prime.h_size() || phi.n_size() != phi_prime.n_size() ||
      phi.h_size() != e.h_size() || phi.n_size() != e.n_size()) {
    return false;
  }
  for (Index h = 0; h < phi.h_size(); ++h) {
    for (Index n = 0; n < phi.n_size(); ++n) {
      if (!e.related(phi(h, n), h, phi_prime(h, n), h)) return false;
    }
  }
  return true;
}

bool data_equivalent(const ExtensionData& a, const ExtensionData& b) {
  return a.kernel() == b.kernel() && a.quotient() == b.quotient() &&
         a.partition() == b.partition() &&
         actions_equivalent(a.action(), b.action(), a.partition());
}

bool compare_data(const ExtensionData& d, const ExtensionData& d_prime) {
  if (!(d.kernel() == d_prime.kernel()) || !(d.quotient() == d_prime.quotient())) {
    throw Error(ErrorCode::DataMismatch, "data over different N or H are not comparable");
  }
  const PairPartition& e = d.partition();
  const PairPartition& ep = d_prime.partition();
  const Index N = d.kernel().size();
  const Index H = d.quotient().size();
  for (Index h = 0; h < H; ++h) {
    for (Index n = 0; n < N; ++n) {
      if (!ep.related(d.action()(h, n), h, d_prime.action()(h, n), h)) return false;
    }
  }
  for (Index h = 0; h < H; ++h) {
    for (Index a = 0; a < N; ++a) {
      for (Index b = 0; b < N; ++b) {
        if (e.related(a, h, b, h) && !ep.related(a, h, b, h)) return false;
      }
    }
  }
  return true;
}

}  // namespace cosetal
