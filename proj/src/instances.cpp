#include "hodgelef/instances.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hodgelef {

void PrimitiveDiamond::check() const {
  if (m < 0) throw StructuralError("middle degree must be nonnegative");
  for (const auto& [bg, dim] : b) {
    if (bg.p < 0 || bg.q < 0 || bg.p + bg.q > m)
      throw StructuralError("primitive bigrade (" + std::to_string(bg.p) + "," + std::to_string(bg.q) +
                            ") needs p + q <= m");
    if (dim < 0) throw StructuralError("negative primitive dimension");
    if (at(bg.q, bg.p) != dim) throw StructuralError("asymmetric primitive diamond");
  }
  if (at(0, 0) < 1) throw StructuralError("b^{0,0} must be at least 1");
}

int PrimitiveDiamond::at(int p, int q) const {
  if (p < 0 || q < 0 || p + q > m) return 0;
  auto it = b.find({p, q});
  return it == b.end() ? 0 : it->second;
}

namespace {

// Tower levels j with L^j B^{p-j,q-j} landing in H^{p,q}.
int first_level(int m, Bigrade target) { return std::max(0, target.degree() - m); }
int last_level(Bigrade target) { return std::min(target.p, target.q); }

std::size_t local_index(const PrimitiveDiamond& d, Bigrade target, int j, int i) {
  std::size_t s = 0;
  for (int jj = first_level(d.m, target); jj < j; ++jj) s += static_cast<std::size_t>(d.at(target.p - jj, target.q - jj));
  return s + static_cast<std::size_t>(i);
}

Rational ladder_constant(int m, int k, int j) {
  Rational c = 1;
  for (int i = 1; i <= j; ++i) c *= i * (m - k - i + 1);
  return c;
}

int form_sign(Bigrade g) {
  if (g.degree() % 2 != 0) return 1;
  return (g.degree() / 2 + g.q) % 2 == 0 ? 1 : -1;
}

struct Generator {
  Bigrade b;
  int i = 0;
  int tau = 0;
};

std::vector<Generator> generators(const PrimitiveDiamond& d) {
  std::vector<Generator> gens;
  for (const auto& [bg, dim] : d.b)
    for (int i = 0; i < dim; ++i) gens.push_back({bg, i, std::abs(bg.p - bg.q)});
  return gens;
}

// Coordinates of L^j e_g, or nothing when the tower stops before level j.
struct TowerSlot {
  int k = 0;
  std::size_t index = 0;
};

std::optional<TowerSlot> tower_slot(const PrimitiveDiamond& d, const HodgeFrame& f, const Generator& g, int j) {
  if (j < 0 || j > d.m - g.b.degree()) return std::nullopt;
  Bigrade target{g.b.p + j, g.b.q + j};
  return TowerSlot{target.degree(), f.offset(target) + local_index(d, target, j, g.i)};
}

struct FreeParts {
  HodgeFrame frame;
  BlockMap l_blocks;
  DegreeMap gram;
  BlockMap conj_blocks;
};

FreeParts free_parts(const PrimitiveDiamond& d) {
  d.check();
  FreeParts out;
  out.frame = induced_frame(d);
  const HodgeFrame& f = out.frame;
  const int m = d.m;
  for (int k = 0; k <= f.top_degree(); ++k) out.gram[k] = GMatrix(f.betti(k), f.betti(k));

  for (int k = 0; k <= f.top_degree(); ++k)
    for (const auto& b : f.blocks(k)) {
      const auto h = static_cast<std::size_t>(f.hodge(b));
      if (h == 0) continue;
      Bigrade up{b.p + 1, b.q + 1};
      const auto hu = static_cast<std::size_t>(f.hodge(up));
      GMatrix lb(hu, h);
      GMatrix cb(static_cast<std::size_t>(f.hodge(b.swapped())), h);
      for (int j = first_level(m, b); j <= last_level(b); ++j) {
        Bigrade g{b.p - j, b.q - j};
        const int k0 = g.degree();
        GaussRational w(ladder_constant(m, k0, j) * form_sign(g));
        for (int i = 0; i < d.at(g.p, g.q); ++i) {
          std::size_t src = local_index(d, b, j, i);
          if (j + 1 <= m - k0) lb(local_index(d, up, j + 1, i), src) = 1;
          cb(local_index(d, b.swapped(), j, i), src) = 1;
          std::size_t pos = f.offset(b) + src;
          out.gram[k](pos, pos) = w;
        }
      }
      if (hu > 0) out.l_blocks[b] = std::move(lb);
      out.conj_blocks[b] = std::move(cb);
    }
  return out;
}

LefschetzAlgebra build(const FreeParts& parts) {
  return LefschetzAlgebra::from_blocks(parts.frame, parts.l_blocks, parts.gram, parts.conj_blocks);
}

// Levels are the stored ones of the filtration, spans in free coordinates.
using LevelSpans = std::map<std::pair<int, int>, GMatrix>;

LevelSpans threshold_spans(const PrimitiveDiamond& d, const HodgeFrame& f, const std::vector<Generator>& gens) {
  LevelSpans spans;
  const int m = d.m;
  for (int k = 0; k <= f.top_degree(); ++k)
    for (int t = (k + 1) / 2; t < m; ++t) {
      std::vector<GVector> cols;
      for (const auto& g : gens) {
        const int k0 = g.b.degree();
        if (k0 > k || (k - k0) % 2 != 0 || g.tau > 2 * t - k) continue;
        auto slot = tower_slot(d, f, g, (k - k0) / 2);
        if (!slot) continue;
        GVector v(f.betti(k));
        v[slot->index] = 1;
        cols.push_back(std::move(v));
      }
      spans[{t, k}] = GMatrix::from_columns(f.betti(k), cols);
    }
  return spans;
}

MorphicFiltration to_filtration(const HodgeFrame& f, const LevelSpans& spans) {
  MorphicFiltration out(f);
  for (const auto& [tk, s] : spans) out.set(tk.first, tk.second, s);
  return out;
}

Instance algebraic_model(const PrimitiveDiamond& d, const std::map<Bigrade, int>& algebraic) {
  FreeParts parts = free_parts(d);
  auto gens = generators(d);
  for (auto& g : gens) {
    if (g.b.p != g.b.q) continue;
    auto it = algebraic.find(g.b);
    bool alg = g.b.p == 0 || (it != algebraic.end() && g.i < it->second);
    g.tau = alg ? 0 : 2;
  }
  Instance inst;
  inst.algebra = build(parts);
  inst.filtration = to_filtration(parts.frame, threshold_spans(d, parts.frame, gens));
  return inst;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

long param(const BuiltinParams& p, const std::string& key) {
  auto it = p.ints.find(key);
  if (it == p.ints.end()) throw StructuralError("missing parameter --" + key);
  return it->second;
}

}  // namespace

HodgeFrame induced_frame(const PrimitiveDiamond& d) {
  d.check();
  HodgeTable h;
  for (int p = 0; p <= d.m; ++p)
    for (int q = 0; q <= d.m; ++q) {
      int s = 0;
      for (int j = first_level(d.m, {p, q}); j <= last_level({p, q}); ++j) s += d.at(p - j, q - j);
      if (s > 0) h[{p, q}] = s;
    }
  return HodgeFrame::build(h, d.m);
}

LefschetzAlgebra free_algebra(const PrimitiveDiamond& d) { return build(free_parts(d)); }

Instance projective_space(int m) {
  require(m >= 1, "projective_space needs m >= 1");
  return algebraic_model({m, {{{0, 0}, 1}}}, {});
}

Instance surface(int q, int pg, int h11, int rho) {
  require(q >= 0 && pg >= 0, "surface needs q, p_g >= 0");
  require(h11 >= 1, "surface needs h11 >= 1");
  require(rho >= 1 && rho <= h11, "surface needs 1 <= rho <= h11");
  PrimitiveDiamond d{2, {{{0, 0}, 1}}};
  if (q > 0) d.b[{1, 0}] = d.b[{0, 1}] = q;
  if (pg > 0) d.b[{2, 0}] = d.b[{0, 2}] = pg;
  if (h11 > 1) d.b[{1, 1}] = h11 - 1;
  return algebraic_model(d, {{{1, 1}, rho - 1}});
}

Instance abelian_surface(int rho) { return surface(2, 1, 4, rho); }

Instance k3(int rho) { return surface(0, 1, 20, rho); }

Instance hypersurface(int n, const HodgeTable& middle, int r) {
  require(n >= 1, "hypersurface needs n >= 1");
  PrimitiveDiamond d{2 * n, {{{0, 0}, 1}}};
  for (const auto& [b, dim] : middle) {
    if (b.degree() != 2 * n)
      throw StructuralError("hypersurface primitive classes must have p + q = " + std::to_string(2 * n));
    if (dim > 0) d.b[b] = dim;
  }
  require(r >= 1 && r <= d.at(n, n) + 1, "hypersurface needs 1 <= r <= dim B^{n,n} + 1");
  return algebraic_model(d, {{{n, n}, r - 1}});
}

Instance builtin(std::string_view name, const BuiltinParams& params) {
  auto i = [&params](const char* key) { return static_cast<int>(param(params, key)); };
  if (name == "projective_space") return projective_space(i("m"));
  if (name == "surface") return surface(i("q"), i("pg"), i("h11"), i("rho"));
  if (name == "abelian_surface") return abelian_surface(i("rho"));
  if (name == "k3") return k3(i("rho"));
  if (name == "hypersurface") return hypersurface(i("n"), params.primitive, i("r"));
  throw StructuralError("unknown example '" + std::string(name) + "'");
}

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  GaussRational small_gauss(int radius) {
    return {Rational(between(-radius, radius)), Rational(between(-radius, radius))};
  }

 private:
  std::mt19937_64 rng_;
};

// Closure of the stored levels under L̃^{t-1} ⊆ L̃^t and L L̃^{t-1}H^{k-2} ⊆ L̃^t H^k.
void close_spans(LevelSpans& spans, const FreeParts& parts, const LefschetzAlgebra& alg) {
  const int m = parts.frame.m();
  for (int t = 0; t < m; ++t)
    for (int k = 0; k <= std::min(2 * t, parts.frame.top_degree()); ++k) {
      GMatrix s = spans.at({t, k});
      if (spans.count({t - 1, k})) s = hstack(s, spans.at({t - 1, k}));
      if (k >= 2 && spans.count({t - 1, k - 2})) s = hstack(s, alg.L(k - 2) * spans.at({t - 1, k - 2}));
      spans[{t, k}] = column_basis(s);
    }
}

struct Candidate {
  int t, k;
  Bigrade b;
};

void perturb(LevelSpans& spans, const FreeParts& parts, const LefschetzAlgebra& alg, Draw& draw,
             std::optional<Candidate> forced) {
  const HodgeFrame& f = parts.frame;
  const int m = f.m();
  std::vector<Candidate> preferred, fallback;
  for (const auto& [tk, s] : spans) {
    auto [t, k] = tk;
    for (const auto& b : f.blocks(k)) {
      if (f.hodge(b) == 0 || std::abs(b.p - b.q) > 2 * t - k) continue;
      if (block_part(f, s, b).cols() == static_cast<std::size_t>(f.hodge(b))) continue;
      if (k > m)
        preferred.push_back({t, k, b});
      else
        fallback.push_back({t, k, b});
    }
  }
  const auto& pool = preferred.empty() ? fallback : preferred;
  if (!forced && pool.empty()) return;
  Candidate c = forced ? *forced : pool[static_cast<std::size_t>(draw.below(static_cast<int>(pool.size())))];
  GMatrix& s = spans[{c.t, c.k}];
  auto idx = f.block_indices(c.b);
  GVector v(f.betti(c.k));
  for (auto i : idx) v[i] = draw.small_gauss(2);
  if (span_contains(s, GMatrix::column(v)))
    for (auto i : idx) {
      GVector e(f.betti(c.k));
      e[i] = 1;
      if (!span_contains(s, GMatrix::column(e))) {
        v = e;
        break;
      }
    }
  GVector cv = alg.conj(c.k) * conj(v);
  s = column_basis(hstack(s, GMatrix::from_columns(f.betti(c.k), {v, cv})));
  close_spans(spans, parts, alg);
}

GMatrix unit_triangular_product(std::size_t n, Draw& draw) {
  GMatrix lower = GMatrix::identity(n), upper = GMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) {
      if (draw.below(2) == 0) lower(r, c) = draw.small_gauss(1);
      if (draw.below(2) == 0) upper(c, r) = draw.small_gauss(1);
    }
  return lower * upper;
}

}  // namespace

Instance random_instance(std::uint64_t seed, const RandomBounds& bounds, RandomMode mode) {
  Draw draw(seed);
  const int m = draw.between(std::max(1, bounds.min_m), std::max(bounds.min_m, bounds.max_m));
  const int top_dim = std::max(1, bounds.max_dim);
  PrimitiveDiamond d{m, {}};
  for (int p = 0; p <= m; ++p)
    for (int q = p; p + q <= m; ++q) {
      int dim;
      if (p == 0 && q == 0)
        dim = draw.between(1, top_dim);
      else
        dim = draw.below(100) < bounds.zero_percent ? 0 : draw.between(1, top_dim);
      if (dim == 0) continue;
      d.b[{p, q}] = dim;
      d.b[{q, p}] = dim;
    }

  FreeParts parts = free_parts(d);
  LefschetzAlgebra alg = build(parts);
  auto gens = generators(d);
  std::map<std::pair<Bigrade, int>, int> tau;
  for (auto& g : gens) {
    if (g.b.p > g.b.q) continue;
    const int lo = g.b.q - g.b.p;
    const int k0 = g.b.degree();
    tau[{g.b, g.i}] = g.b.degree() == 0 ? 0 : lo + 2 * draw.below((k0 - lo) / 2 + 1);
  }
  for (auto& g : gens) g.tau = g.b.p <= g.b.q ? tau.at({g.b, g.i}) : tau.at({g.b.swapped(), g.i});

  // Arbitrary mode: hold one (p,p) tower back from the lowest levels and
  // reinsert a vector at an even degree above the middle, which breaks the
  // dimension symmetry of EH(0).
  std::optional<Candidate> forced;
  if (mode == RandomMode::Arbitrary) {
    std::vector<std::size_t> raisable;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const Bigrade b = gens[g].b;
      if (b.p == b.q && b.p >= 1 && 2 * m - 2 * b.p >= m + 1 + (m + 1) % 2) raisable.push_back(g);
    }
    if (!raisable.empty()) {
      Generator& g = gens[raisable[static_cast<std::size_t>(draw.below(static_cast<int>(raisable.size())))]];
      g.tau = std::max(g.tau, 2);
      const int lo = (m + 2) / 2;
      const int hi = m - g.b.p;
      const int half = draw.between(lo, hi);
      forced = Candidate{half, 2 * half, {half, half}};
    } else {
      std::vector<std::size_t> lifts;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const Bigrade b = gens[g].b;
        if (b.p < b.q && b.degree() < m && b.degree() > b.q - b.p) lifts.push_back(g);
      }
      if (!lifts.empty()) {
        const Generator pick = gens[lifts[static_cast<std::size_t>(draw.below(static_cast<int>(lifts.size())))]];
        for (auto& g : gens)
          if (g.i == pick.i && (g.b == pick.b || g.b == pick.b.swapped())) g.tau = pick.b.degree();
      }
    }
  }

  LevelSpans spans = threshold_spans(d, parts.frame, gens);
  if (mode == RandomMode::Arbitrary) perturb(spans, parts, alg, draw, forced);

  if (!bounds.scramble) return {alg, to_filtration(parts.frame, spans)};

  const HodgeFrame& f = parts.frame;
  std::map<Bigrade, GMatrix> change, change_inv;
  for (int k = 0; k <= f.top_degree(); ++k)
    for (const auto& b : f.blocks(k)) {
      auto h = static_cast<std::size_t>(f.hodge(b));
      if (h == 0) continue;
      change[b] = unit_triangular_product(h, draw);
      change_inv[b] = *inverse(change[b]);
    }
  auto degree_change = [&](int k, bool inv) {
    GMatrix out(f.betti(k), f.betti(k));
    for (const auto& b : f.blocks(k))
      if (f.hodge(b) > 0) out.set_block(f.offset(b), f.offset(b), inv ? change_inv.at(b) : change.at(b));
    return out;
  };

  FreeParts moved = parts;
  for (auto& [b, lb] : moved.l_blocks) lb = change_inv.at({b.p + 1, b.q + 1}) * lb * change.at(b);
  for (auto& [b, cb] : moved.conj_blocks) cb = change_inv.at(b.swapped()) * cb * change.at(b).conj();
  for (auto& [k, g] : moved.gram) {
    GMatrix pk = degree_change(k, false);
    g = pk.transpose() * g * pk.conj();
  }
  for (auto& [tk, s] : spans) s = degree_change(tk.second, true) * s;
  return {build(moved), to_filtration(f, spans)};
}

}  // namespace hodgelef
