#include "cosetal/extensions.hpp"

#include <algorithm>
#include <string>

namespace cosetal {

KernelDiagram::KernelDiagram(FiniteAbelianGroup n, FiniteMonoid g, FiniteMonoid h, MonoidHom k,
                             MonoidHom e)
    : kernel_(std::move(n)),
      total_(std::move(g)),
      quotient_(std::move(h)),
      k_(std::move(k)),
      e_(std::move(e)),
      fibers_(quotient_.size()),
      k_inverse_(total_.size(), kNone) {
  for (Index x = 0; x < total_.size(); ++x) fibers_[e_(x)].push_back(x);
  for (Index m = 0; m < kernel_.size(); ++m) k_inverse_[k_(m)] = m;
}

KernelDiagram validate_kernel_diagram(const FiniteAbelianGroup& n, const FiniteMonoid& g,
                                      const FiniteMonoid& h, const MonoidHom& k,
                                      const MonoidHom& e) {
  if (!(k.domain() == n.monoid()) || !(k.codomain() == g)) {
    throw Error(ErrorCode::DataMismatch, "k must be a homomorphism N -> G");
  }
  if (!(e.domain() == g) || !(e.codomain() == h)) {
    throw Error(ErrorCode::DataMismatch, "e must be a homomorphism G -> H");
  }
  for (Index a = 0; a < n.size(); ++a) {
    for (Index b = a + 1; b < n.size(); ++b) {
      if (k(a) == k(b)) throw Error(ErrorCode::KNotInjective, "", {a, b});
    }
  }
  if (k.image() != e.preimage(h.identity())) {
    throw Error(ErrorCode::KNotKernel, "image of k differs from e^-1(1)");
  }
  for (Index y = 0; y < h.size(); ++y) {
    if (e.preimage(y).empty()) throw Error(ErrorCode::ENotSurjective, "", {y});
  }
  return KernelDiagram(n, g, h, k, e);
}

bool is_cokernel(const KernelDiagram& d) {
  std::vector<std::pair<Index, Index>> seeds;
  for (Index n = 0; n < d.kernel().size(); ++n) {
    seeds.emplace_back(d.k()(n), d.total().identity());
  }
  const Congruence c = congruence_closure(d.total(), seeds);
  const std::vector<Index> generated(c.class_of().begin(), c.class_of().end());
  return generated == kernel_partition(d.e());
}

ExtensionDiagram validate_extension(const FiniteAbelianGroup& n, const FiniteMonoid& g,
                                    const FiniteMonoid& h, const MonoidHom& k,
                                    const MonoidHom& e) {
  KernelDiagram base = validate_kernel_diagram(n, g, h, k, e);
  if (!is_cokernel(base)) {
    throw Error(ErrorCode::ENotCokernel,
                "congruence generated by the image of k differs from the kernel of e");
  }
  return ExtensionDiagram(std::move(base));
}

SplitExtensionDiagram validate_split_extension(const KernelDiagram& base, const MonoidHom& s) {
  if (!(s.domain() == base.quotient()) || !(s.codomain() == base.total())) {
    throw Error(ErrorCode::DataMismatch, "splitting must be a homomorphism H -> G");
  }
  for (Index h = 0; h < base.quotient().size(); ++h) {
    if (base.e()(s(h)) != h) throw Error(ErrorCode::NotSection, "", {h});
  }
  return SplitExtensionDiagram{base, s};
}

CosetalCheck is_cosetal(const KernelDiagram& d) {
  const Index size = d.total().size();
  CosetalCheck out;
  out.holds = true;
  out.witness.assign(size * size, kNone);
  for (Index g = 0; g < size; ++g) {
    for (Index gp = 0; gp < size; ++gp) {
      if (d.e()(g) != d.e()(gp)) continue;
      for (Index n = 0; n < d.kernel().size(); ++n) {
        if (d.translate(n, gp) == g) {
          out.witness[g * size + gp] = n;
          break;
        }
      }
      if (out.witness[g * size + gp] == kNone && out.holds) {
        out.holds = false;
        out.counterexample = std::make_pair(g, gp);
      }
    }
  }
  return out;
}

CosetStructure cosets(const KernelDiagram& d) {
  if (const auto check = is_cosetal(d); !check) {
    throw Error(ErrorCode::NotCosetal, "",
                {check.counterexample->first, check.counterexample->second});
  }
  const FiniteMonoid& g = d.total();
  CosetStructure out;
  out.coset_of.assign(g.size(), kNone);
  for (Index x = 0; x < g.size(); ++x) {
    std::vector<Index> coset;
    for (Index n = 0; n < d.kernel().size(); ++n) coset.push_back(d.translate(n, x));
    std::sort(coset.begin(), coset.end());
    coset.erase(std::unique(coset.begin(), coset.end()), coset.end());
    auto it = std::find(out.cosets.begin(), out.cosets.end(), coset);
    out.coset_of[x] = static_cast<Index>(it - out.cosets.begin());
    if (it == out.cosets.end()) out.cosets.push_back(std::move(coset));
  }
  const Index m = out.cosets.size();
  std::vector<Index> table(m * m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      table[i * m + j] = out.coset_of[g.mul(out.cosets[i].front(), out.cosets[j].front())];
    }
  }
  out.monoid = validate_monoid(m, table, out.coset_of[g.identity()]);
  std::vector<Index> map(m);
  for (Index i = 0; i < m; ++i) map[i] = d.e()(out.cosets[i].front());
  out.to_quotient = validate_hom(map, out.monoid, d.quotient());
  if (!out.to_quotient.is_injective() || !out.to_quotient.is_surjective()) {
    throw Error(ErrorCode::IllFormed, "coset monoid is not isomorphic to the quotient");
  }
  return out;
}

Section validate_section(const KernelDiagram& d, std::span<const Index> map) {
  if (map.size() != d.quotient().size()) {
    throw Error(ErrorCode::SizeMismatch, "section must be defined on all of H");
  }
  for (Index h = 0; h < map.size(); ++h) {
    if (map[h] >= d.total().size() || d.e()(map[h]) != h) {
      throw Error(ErrorCode::NotSection, "", {h});
    }
  }
  if (map[d.quotient().identity()] != d.total().identity()) {
    throw Error(ErrorCode::NotSection, "section must preserve the identity");
  }
  return Section(std::vector<Index>(map.begin(), map.end()));
}

Section first_section(const KernelDiagram& d) {
  std::vector<Index> map(d.quotient().size());
  for (Index h = 0; h < map.size(); ++h) {
    map[h] = h == d.quotient().identity() ? d.total().identity() : d.fiber(h).front();
  }
  return Section(std::move(map));
}

std::vector<Section> enumerate_sections(const KernelDiagram& d, std::size_t bound) {
  const FiniteMonoid& h = d.quotient();
  std::size_t count = 1;
  for (Index y = 0; y < h.size(); ++y) {
    if (y == h.identity()) continue;
    const std::size_t fiber = d.fiber(y).size();
    if (count > bound / fiber) {
      throw Error(ErrorCode::TooManySections, "more than " + std::to_string(bound) + " sections");
    }
    count *= fiber;
  }
  if (count > bound) {
    throw Error(ErrorCode::TooManySections, "more than " + std::to_string(bound) + " sections");
  }
  std::vector<Section> out;
  out.reserve(count);
  std::vector<Index> choice(h.size(), 0);
  std::vector<Index> map(h.size());
  while (true) {
    for (Index y = 0; y < h.size(); ++y) {
      map[y] = y == h.identity() ? d.total().identity() : d.fiber(y)[choice[y]];
    }
    out.push_back(Section(map));
    Index y = h.size();
    bool done = true;
    while (y > 0) {
      --y;
      if (y == h.identity()) continue;
      if (++choice[y] < d.fiber(y).size()) {
        done = false;
        break;
      }
      choice[y] = 0;
    }
    if (done) return out;
  }
}

std::vector<MonoidHom> enumerate_splittings(const KernelDiagram& d, std::size_t bound) {
  std::vector<MonoidHom> out;
  const FiniteMonoid& h = d.quotient();
  const FiniteMonoid& g = d.total();
  for (const Section& s : enumerate_sections(d, bound)) {
    bool hom = true;
    for (Index x = 0; x < h.size() && hom; ++x) {
      for (Index y = 0; y < h.size() && hom; ++y) {
        hom = s(h.mul(x, y)) == g.mul(s(x), s(y));
      }
    }
    if (hom) out.push_back(validate_hom(s.map(), h, g));
  }
  return out;
}

std::vector<Index> section_translator(const KernelDiagram& d, const Section& s,
                                      const Section& s_prime) {
  std::vector<Index> t(d.quotient().size(), kNone);
  for (Index h = 0; h < t.size(); ++h) {
    for (Index n = 0; n < d.kernel().size(); ++n) {
      if (d.translate(n, s_prime(h)) == s(h)) {
        t[h] = n;
        break;
      }
    }
    if (t[h] == kNone) throw Error(ErrorCode::NotCosetal, "no translator at", {h});
  }
  return t;
}

KernelEquivalence kernel_equivalence_split_extension(const KernelDiagram& d) {
  const FiniteMonoid& g = d.total();
  const Index size = g.size();
  KernelEquivalence out;
  std::vector<Index> index_of(size * size, kNone);
  for (Index a = 0; a < size; ++a) {
    for (Index b = 0; b < size; ++b) {
      if (d.e()(a) != d.e()(b)) continue;
      index_of[a * size + b] = out.pairs.size();
      out.pairs.emplace_back(a, b);
    }
  }
  const Index m = out.pairs.size();
  std::vector<Index> table(m * m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      const Index first = g.mul(out.pairs[i].first, out.pairs[j].first);
      const Index second = g.mul(out.pairs[i].second, out.pairs[j].second);
      table[i * m + j] = index_of[first * size + second];
    }
  }
  FiniteMonoid eq =
      validate_monoid(m, table, index_of[g.identity() * size + g.identity()]);

  std::vector<Index> kernel_map(d.kernel().size());
  for (Index n = 0; n < kernel_map.size(); ++n) {
    kernel_map[n] = index_of[d.k()(n) * size + g.identity()];
  }
  std::vector<Index> pi2(m);
  for (Index i = 0; i < m; ++i) pi2[i] = out.pairs[i].second;
  std::vector<Index> diagonal(size);
  for (Index a = 0; a < size; ++a) diagonal[a] = index_of[a * size + a];

  MonoidHom k = validate_hom(kernel_map, d.kernel().monoid(), eq);
  MonoidHom e = validate_hom(pi2, eq, g);
  MonoidHom s = validate_hom(diagonal, g, eq);
  out.split = validate_split_extension(validate_kernel_diagram(d.kernel(), eq, g, k, e), s);
  return out;
}

WeaklySchreierCheck is_weakly_schreier(const SplitExtensionDiagram& s) {
  const KernelDiagram& d = s.base;
  WeaklySchreierCheck out;
  out.holds = true;
  out.witness.assign(d.total().size(), kNone);
  out.witness_count.assign(d.total().size(), 0);
  for (Index g = 0; g < d.total().size(); ++g) {
    const Index target = s.splitting(d.e()(g));
    for (Index n = 0; n < d.kernel().size(); ++n) {
      if (d.translate(n, target) != g) continue;
      if (out.witness[g] == kNone) out.witness[g] = n;
      ++out.witness_count[g];
    }
    if (out.witness[g] == kNone && out.holds) {
      out.holds = false;
      out.counterexample = g;
    }
  }
  return out;
}

bool is_schreier(const SplitExtensionDiagram& s) {
  const WeaklySchreierCheck check = is_weakly_schreier(s);
  return check.holds && std::all_of(check.witness_count.begin(), check.witness_count.end(),
                                    [](Index c) { return c == 1; });
}

bool is_special_schreier(const KernelDiagram& d) {
  return is_schreier(kernel_equivalence_split_extension(d).split);
}

}  // namespace cosetal
