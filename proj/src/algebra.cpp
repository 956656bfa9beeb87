#include "vinberg/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vinberg/error.hpp"

namespace vinberg {

namespace {

void finish_dimensions(const Poset& p, DimensionSystem& d) {
  const int n = p.size();
  d.n_below.assign(n, 0);
  d.n_above.assign(n, 0);
  d.n_i.assign(n, 1.0);
  d.dim_h = n;
  for (int i = 0; i < n; ++i)
    for (int mu = 0; mu < n; ++mu) {
      if (p.less(mu, i)) d.n_below[i] += d.n(i, mu);
      if (p.less(i, mu)) d.n_above[i] += d.n(mu, i);
      if (p.less(mu, i)) d.dim_h += d.n(i, mu);
    }
  d.n_total = 0;
  for (int i = 0; i < n; ++i) {
    d.n_i[i] = 1.0 + 0.5 * (d.n_below[i] + d.n_above[i]);
    d.n_total += d.n_i[i];
  }
}

double dot(const double* a, const double* b, int n) {
  double s = 0;
  for (int k = 0; k < n; ++k) s += a[k] * b[k];
  return s;
}

double frob(const Element& a) {
  double s = 0;
  for (double v : a.coeffs()) s += v * v;
  return std::sqrt(s);
}

}  // namespace

DimensionSystem unit_dimensions(const Poset& p) {
  return make_dimensions(p, {});
}

DimensionSystem make_dimensions(const Poset& p, const std::map<std::pair<int, int>, int>& dims) {
  const int n = p.size();
  DimensionSystem d;
  d.size = n;
  d.pair.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.comparable(i, j)) d.pair[i * n + j] = 1;
  for (const auto& [key, v] : dims) {
    auto [a, b] = key;
    if (a < 0 || b < 0 || a >= n || b >= n || a == b || !p.comparable(a, b))
      throw Error(ErrorCode::DimensionMismatch, "block dimension given for a non-comparable pair");
    if (v < 1) throw Error(ErrorCode::DimensionMismatch, "block dimensions must be positive");
    d.pair[a * n + b] = v;
    d.pair[b * n + a] = v;
  }
  finish_dimensions(p, d);
  return d;
}

Algebra::Algebra(Poset p, DimensionSystem dims, StructureConstants sc)
    : poset_(std::move(p)), dims_(std::move(dims)), sc_(std::move(sc)) {
  const int n = poset_.size();
  if (dims_.size != n) throw Error(ErrorCode::DimensionMismatch, "dimension table size differs from poset");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const bool want = i != j && poset_.comparable(i, j);
      if (want != (dims_.n(i, j) > 0))
        throw Error(ErrorCode::DimensionMismatch, "dimensions must be defined exactly on comparable pairs");
    }
  if (sc_.scalar) {
    for (int v : dims_.pair)
      if (v > 1) throw Error(ErrorCode::DimensionMismatch, "scalar preset requires all n_ij = 1");
  }

  offset_.assign(static_cast<std::size_t>(n) * n, -1);
  nbr_.assign(n, {});
  storage_ = static_cast<std::size_t>(n);
  for (int i = 0; i < n; ++i) offset_[i * n + i] = i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && poset_.comparable(i, j)) {
        offset_[i * n + j] = static_cast<std::ptrdiff_t>(storage_);
        storage_ += dims_.n(i, j);
        nbr_[i].push_back(j);
      }

  inv_.assign(static_cast<std::size_t>(n) * n, {});
  for (int h = 0; h < n; ++h)
    for (int l = 0; l < n; ++l) {
      if (!poset_.less(l, h)) continue;
      const int nd = dims_.n(h, l);
      std::vector<double> f(static_cast<std::size_t>(nd) * nd, 0.0);
      for (int k = 0; k < nd; ++k) f[k * nd + k] = 1.0;
      if (!sc_.scalar) {
        auto it = sc_.involutions.find({h, l});
        if (it == sc_.involutions.end()) it = sc_.involutions.find({l, h});
        if (it != sc_.involutions.end()) {
          if (it->second.size() != f.size())
            throw Error(ErrorCode::DimensionMismatch, "involution matrix has the wrong size");
          f = it->second;
        }
      }
      inv_[l * n + h] = f;
    }

  triple_index_.assign(static_cast<std::size_t>(n) * n * n, -1);
  for (int h = 0; h < n; ++h)
    for (int m = 0; m < n; ++m)
      for (int l = 0; l < n; ++l) {
        if (!(poset_.less(m, h) && poset_.less(l, m))) continue;
        Triple t;
        t.n_s = dims_.n(h, l);
        t.n_p = dims_.n(h, m);
        t.n_q = dims_.n(m, l);
        const std::size_t sz = static_cast<std::size_t>(t.n_s) * t.n_p * t.n_q;
        if (sc_.scalar) {
          t.lower.assign(1, 1.0);
        } else {
          auto it = sc_.products.find({h, m, l});
          if (it == sc_.products.end())
            throw Error(ErrorCode::MissingStructureConstant,
                        "no product for chain " + poset_.label(l) + " < " + poset_.label(m) + " < " +
                            poset_.label(h));
          if (it->second.size() != sz)
            throw Error(ErrorCode::DimensionMismatch, "product tensor has the wrong size");
          t.lower = it->second;
        }
        const double* fhl = involution(h, l);
        const double* fhm = involution(h, m);
        const double* fml = involution(m, l);
        t.upper.assign(sz, 0.0);
        for (int s2 = 0; s2 < t.n_s; ++s2)
          for (int q2 = 0; q2 < t.n_q; ++q2)
            for (int p2 = 0; p2 < t.n_p; ++p2) {
              double acc = 0;
              for (int s = 0; s < t.n_s; ++s)
                for (int p = 0; p < t.n_p; ++p)
                  for (int q = 0; q < t.n_q; ++q)
                    acc += fhl[s2 * t.n_s + s] * t.lower[(s * t.n_p + p) * t.n_q + q] *
                           fhm[p * t.n_p + p2] * fml[q * t.n_q + q2];
              t.upper[(s2 * t.n_q + q2) * t.n_p + p2] = acc;
            }
        triple_index_[(h * n + m) * n + l] = static_cast<int>(triples_.size());
        triples_.push_back(std::move(t));
      }

  for (int k : poset_.linear_extension()) basis_.push_back({k, k, 0});
  for (int hi : poset_.linear_extension())
    for (int lo : poset_.linear_extension())
      if (poset_.less(lo, hi))
        for (int c = 0; c < dims_.n(hi, lo); ++c) basis_.push_back({hi, lo, c});
}

const double* Algebra::involution(int i, int j) const {
  const int n = size();
  const int lo = poset_.less(i, j) ? i : j;
  const int hi = lo == i ? j : i;
  return inv_[lo * n + hi].data();
}

const Algebra::Triple& Algebra::triple(int h, int m, int l) const {
  const int n = size();
  return triples_[triple_index_[(h * n + m) * n + l]];
}

void Algebra::accumulate(int i, int mu, int j, const double* a, const double* b, double* out) const {
  const Poset& p = poset_;
  if (p.less(j, mu) && p.less(mu, i)) {
    // lower (i,mu) times lower (mu,j)
    const Triple& t = triple(i, mu, j);
    for (int s = 0; s < t.n_s; ++s) {
      double acc = 0;
      for (int pp = 0; pp < t.n_p; ++pp)
        for (int q = 0; q < t.n_q; ++q) acc += t.lower[(s * t.n_p + pp) * t.n_q + q] * a[pp] * b[q];
      out[s] += acc;
    }
  } else if (p.less(i, mu) && p.less(mu, j)) {
    // upper times upper
    const Triple& t = triple(j, mu, i);
    for (int s = 0; s < t.n_s; ++s) {
      double acc = 0;
      for (int q = 0; q < t.n_q; ++q)
        for (int pp = 0; pp < t.n_p; ++pp) acc += t.upper[(s * t.n_q + q) * t.n_p + pp] * a[q] * b[pp];
      out[s] += acc;
    }
  } else if (p.less(mu, i) && p.less(i, j)) {
    // lower (m,l) times upper (l,h) into upper (m,h)
    const Triple& t = triple(j, i, mu);
    for (int pp = 0; pp < t.n_p; ++pp) {
      double acc = 0;
      for (int s = 0; s < t.n_s; ++s)
        for (int q = 0; q < t.n_q; ++q) acc += t.lower[(s * t.n_p + pp) * t.n_q + q] * a[q] * b[s];
      out[pp] += acc;
    }
  } else if (p.less(i, j) && p.less(j, mu)) {
    // upper (l,h) times lower (h,m) into upper (l,m)
    const Triple& t = triple(mu, j, i);
    for (int q = 0; q < t.n_q; ++q) {
      double acc = 0;
      for (int s = 0; s < t.n_s; ++s)
        for (int pp = 0; pp < t.n_p; ++pp) acc += t.lower[(s * t.n_p + pp) * t.n_q + q] * a[s] * b[pp];
      out[q] += acc;
    }
  } else if (p.less(mu, j) && p.less(j, i)) {
    // lower (h,l) times upper (l,m) into lower (h,m)
    const Triple& t = triple(i, j, mu);
    for (int pp = 0; pp < t.n_p; ++pp) {
      double acc = 0;
      for (int s = 0; s < t.n_s; ++s)
        for (int q = 0; q < t.n_q; ++q) acc += t.upper[(s * t.n_q + q) * t.n_p + pp] * a[s] * b[q];
      out[pp] += acc;
    }
  } else {
    // upper (m,h) times lower (h,l) into lower (m,l)
    const Triple& t = triple(mu, i, j);
    for (int q = 0; q < t.n_q; ++q) {
      double acc = 0;
      for (int s = 0; s < t.n_s; ++s)
        for (int pp = 0; pp < t.n_p; ++pp) acc += t.upper[(s * t.n_q + q) * t.n_p + pp] * a[pp] * b[s];
      out[q] += acc;
    }
  }
}

AlgebraPtr build_algebra(const Poset& p, const DimensionSystem& dims, const StructureConstants& sc) {
  return std::make_shared<const Algebra>(p, dims, sc);
}

AlgebraPtr build_scalar_algebra(const Poset& p) {
  return build_algebra(p, unit_dimensions(p), StructureConstants::scalar_preset());
}

const DimensionSystem& dimension_profile(const Algebra& alg) { return alg.dims(); }

// ---- elements

Element::Element(AlgebraPtr alg) : alg_(std::move(alg)), c_(alg_->storage_size(), 0.0) {}

const double* Element::block(int i, int j) const {
  auto off = alg_->offset(i, j);
  return off < 0 ? nullptr : c_.data() + off;
}

double* Element::block(int i, int j) {
  auto off = alg_->offset(i, j);
  return off < 0 ? nullptr : c_.data() + off;
}

Element& Element::operator+=(const Element& o) {
  if (alg_.get() != o.alg_.get()) throw Error(ErrorCode::AlgebraMismatch, "adding elements of different algebras");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (alg_.get() != o.alg_.get()) throw Error(ErrorCode::AlgebraMismatch, "subtracting elements of different algebras");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Element& Element::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(double s, Element a) { return a *= s; }

Element zero(const AlgebraPtr& alg) { return Element(alg); }

Element unit(const AlgebraPtr& alg) {
  Element e(alg);
  for (int i = 0; i < alg->size(); ++i) e.diag(i) = 1.0;
  return e;
}

Element diagonal_unit(const AlgebraPtr& alg, int k) {
  Element e(alg);
  e.diag(k) = 1.0;
  return e;
}

Element upset_unit(const AlgebraPtr& alg, int i, bool strict) {
  Element e(alg);
  const Poset& p = alg->poset();
  for (int j = 0; j < p.size(); ++j)
    if (p.leq(i, j) && !(strict && j == i)) e.diag(j) = 1.0;
  return e;
}

Element diagonal(const AlgebraPtr& alg, const std::vector<double>& d) {
  if (static_cast<int>(d.size()) != alg->size()) throw Error(ErrorCode::DimensionMismatch, "diagonal length");
  Element e(alg);
  for (int i = 0; i < alg->size(); ++i) e.diag(i) = d[i];
  return e;
}

Element multiply(const Element& a, const Element& b) {
  if (a.algebra_ptr().get() != b.algebra_ptr().get())
    throw Error(ErrorCode::AlgebraMismatch, "multiplying elements of different algebras");
  const Algebra& alg = a.algebra();
  const Poset& p = alg.poset();
  const int n = alg.size();
  Element c(a.algebra_ptr());
  for (int i = 0; i < n; ++i) {
    double s = a.diag(i) * b.diag(i);
    for (int mu : alg.neighbours(i)) s += dot(a.block(i, mu), b.block(mu, i), alg.block_dim(i, mu));
    c.diag(i) = s;
  }
  for (int i = 0; i < n; ++i)
    for (int j : alg.neighbours(i)) {
      double* out = c.block(i, j);
      const int nd = alg.block_dim(i, j);
      const double* bij = b.block(i, j);
      const double* aij = a.block(i, j);
      for (int k = 0; k < nd; ++k) out[k] += a.diag(i) * bij[k] + aij[k] * b.diag(j);
      for (int mu : alg.neighbours(i))
        if (mu != j && p.comparable(mu, j)) alg.accumulate(i, mu, j, a.block(i, mu), b.block(mu, j), out);
    }
  return c;
}

Element involute(const Element& a) {
  const Algebra& alg = a.algebra();
  Element r(a.algebra_ptr());
  for (int i = 0; i < alg.size(); ++i) r.diag(i) = a.diag(i);
  for (int i = 0; i < alg.size(); ++i)
    for (int j : alg.neighbours(i)) {
      const int nd = alg.block_dim(i, j);
      const double* f = alg.involution(i, j);
      const double* src = a.block(j, i);
      double* dst = r.block(i, j);
      for (int r0 = 0; r0 < nd; ++r0) dst[r0] = dot(f + r0 * nd, src, nd);
    }
  return r;
}

double trace(const Element& a) {
  double s = 0;
  for (int i = 0; i < a.algebra().size(); ++i) s += a.diag(i);
  return s;
}

double pairing(const Element& a, const Element& b) {
  if (a.algebra_ptr().get() != b.algebra_ptr().get())
    throw Error(ErrorCode::AlgebraMismatch, "pairing elements of different algebras");
  const Algebra& alg = a.algebra();
  double s = 0;
  for (int i = 0; i < alg.size(); ++i) {
    s += a.diag(i) * b.diag(i);
    for (int j : alg.neighbours(i)) s += dot(a.block(i, j), b.block(j, i), alg.block_dim(i, j));
  }
  return s;
}

bool is_hermitian(const Element& a, double tol) {
  Element s = involute(a);
  return max_abs_diff(a, s) <= tol * std::max(1.0, max_abs(a));
}

bool is_lower_triangular(const Element& a) {
  const Algebra& alg = a.algebra();
  const Poset& p = alg.poset();
  for (int i = 0; i < alg.size(); ++i)
    for (int j : alg.neighbours(i))
      if (p.less(i, j)) {
        const double* b = a.block(i, j);
        for (int k = 0; k < alg.block_dim(i, j); ++k)
          if (b[k] != 0.0) return false;
      }
  return true;
}

double max_abs(const Element& a) {
  double m = 0;
  for (double v : a.coeffs()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const Element& a, const Element& b) {
  if (a.algebra_ptr().get() != b.algebra_ptr().get())
    throw Error(ErrorCode::AlgebraMismatch, "comparing elements of different algebras");
  double m = 0;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) m = std::max(m, std::abs(a.coeffs()[k] - b.coeffs()[k]));
  return m;
}

std::vector<double> hermitian_coords(const Element& a) {
  const Algebra& alg = a.algebra();
  std::vector<double> x;
  x.reserve(alg.dim_h());
  for (const auto& c : alg.hermitian_basis())
    x.push_back(c.hi == c.lo ? a.diag(c.hi) : a.block(c.hi, c.lo)[c.component]);
  return x;
}

Element from_hermitian_coords(const AlgebraPtr& alg, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != alg->dim_h())
    throw Error(ErrorCode::DimensionMismatch, "coordinate vector length differs from dim H");
  Element e(alg);
  const auto& basis = alg->hermitian_basis();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& c = basis[k];
    if (c.hi == c.lo) e.diag(c.hi) = x[k];
    else e.block(c.hi, c.lo)[c.component] = x[k];
  }
  for (int h = 0; h < alg->size(); ++h)
    for (int l : alg->neighbours(h))
      if (alg->poset().less(l, h)) {
        const int nd = alg->block_dim(h, l);
        const double* f = alg->involution(h, l);
        const double* src = e.block(h, l);
        double* dst = e.block(l, h);
        for (int r = 0; r < nd; ++r) dst[r] = dot(f + r * nd, src, nd);
      }
  return e;
}

Element hermitian_basis_element(const AlgebraPtr& alg, int c) {
  std::vector<double> x(alg->dim_h(), 0.0);
  x[c] = 1.0;
  return from_hermitian_coords(alg, x);
}

std::vector<double> pairing_weights(const Element& s) {
  const Algebra& alg = s.algebra();
  std::vector<double> w;
  w.reserve(alg.dim_h());
  for (const auto& c : alg.hermitian_basis()) {
    if (c.hi == c.lo) {
      w.push_back(s.diag(c.hi));
      continue;
    }
    // Z_lower = x e_c, Z_upper = x F e_c.
    const int nd = alg.block_dim(c.hi, c.lo);
    const double* f = alg.involution(c.hi, c.lo);
    const double* sl = s.block(c.hi, c.lo);
    const double* su = s.block(c.lo, c.hi);
    double v = su[c.component];
    for (int r = 0; r < nd; ++r) v += sl[r] * f[r * nd + c.component];
    w.push_back(v);
  }
  return w;
}

// ---- random elements

Element random_general(const AlgebraPtr& alg, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Element e(alg);
  for (double& v : e.coeffs()) v = g(rng);
  return e;
}

Element random_lower(const AlgebraPtr& alg, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Element e(alg);
  const Poset& p = alg->poset();
  for (int i = 0; i < alg->size(); ++i) {
    e.diag(i) = std::abs(g(rng)) + 0.1;
    for (int j : alg->neighbours(i))
      if (p.less(j, i)) {
        double* b = e.block(i, j);
        for (int k = 0; k < alg->block_dim(i, j); ++k) b[k] = g(rng);
      }
  }
  return e;
}

Element random_hermitian(const AlgebraPtr& alg, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> x(alg->dim_h());
  for (double& v : x) v = g(rng);
  return from_hermitian_coords(alg, x);
}

// ---- axiom checker

bool AxiomReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.pass; });
}

const AxiomResult& AxiomReport::find(const std::string& name) const {
  for (const auto& r : results)
    if (r.name == name) return r;
  throw Error(ErrorCode::SpecError, "no axiom named " + name);
}

namespace {

double rel(double diff, double scale) {
  return scale > 0 ? diff / scale : diff;
}

// y = F x for the pair (i, j).
std::vector<double> apply_f(const Algebra& alg, int i, int j, const std::vector<double>& x) {
  const int nd = alg.block_dim(i, j);
  const double* f = alg.involution(i, j);
  std::vector<double> y(nd, 0.0);
  for (int r = 0; r < nd; ++r) y[r] = dot(f + r * nd, x.data(), nd);
  return y;
}

std::vector<double> gauss_vec(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> v(n);
  for (double& x : v) x = g(rng);
  return v;
}

double norm2(const std::vector<double>& v) { return std::sqrt(dot(v.data(), v.data(), static_cast<int>(v.size()))); }

}  // namespace

AxiomReport axiom_check(const AlgebraPtr& alg, int samples, double tol, std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::SpecError, "axiom_check needs at least one sample");
  std::mt19937_64 rng(seed);
  const Poset& p = alg->poset();
  const int n = alg->size();

  double worst_pos = std::numeric_limits<double>::infinity();
  double r_inv = 0, r2 = 0, r3 = 0, r4 = 0, r5 = 0, r6 = 0, c1 = 0, c2 = 0;
  for (int it = 0; it < samples; ++it) {
    Element a = random_general(alg, rng);
    Element b = random_general(alg, rng);
    Element c = random_general(alg, rng);
    const double na = frob(a), nb = frob(b), nc = frob(c);

    worst_pos = std::min(worst_pos, trace(multiply(a, involute(a))) / (na * na));
    r_inv = std::max(r_inv, rel(max_abs_diff(involute(involute(a)), a), max_abs(a)));
    r2 = std::max(r2, rel(max_abs_diff(involute(multiply(a, b)), multiply(involute(b), involute(a))), na * nb));
    r3 = std::max(r3, rel(std::abs(trace(multiply(a, b)) - trace(multiply(b, a))), na * nb));
    r4 = std::max(r4, rel(std::abs(trace(multiply(a, multiply(b, c))) - trace(multiply(multiply(a, b), c))),
                          na * nb * nc));

    Element s = random_lower(alg, rng), t = random_lower(alg, rng), u = random_lower(alg, rng);
    const double ns = frob(s), nt = frob(t), nu = frob(u);
    r5 = std::max(r5, rel(max_abs_diff(multiply(multiply(s, t), u), multiply(s, multiply(t, u))), ns * nt * nu));
    const Element ustar = involute(u);
    r6 = std::max(r6, rel(max_abs_diff(multiply(t, multiply(u, ustar)), multiply(multiply(t, u), ustar)),
                          nt * nu * nu));

    // Inner-product conditions on every chain l < m < h (and a fourth index above).
    for (int h = 0; h < n; ++h)
      for (int m = 0; m < n; ++m)
        for (int l = 0; l < n; ++l) {
          if (!(p.less(m, h) && p.less(l, m))) continue;
          const int n_hm = alg->block_dim(h, m), n_ml = alg->block_dim(m, l), n_hl = alg->block_dim(h, l);
          std::vector<double> x = gauss_vec(n_hm, rng), y = gauss_vec(n_ml, rng);
          std::vector<double> z(n_hl, 0.0);
          alg->accumulate(h, m, l, x.data(), y.data(), z.data());
          const double lhs = dot(z.data(), apply_f(*alg, h, l, z).data(), n_hl);
          const double rhs = dot(x.data(), apply_f(*alg, h, m, x).data(), n_hm) *
                             dot(y.data(), apply_f(*alg, m, l, y).data(), n_ml);
          c1 = std::max(c1, rel(std::abs(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs))));

          // Condition 2: a in E_hl orthogonal to E_hm * y, then (d a, c y) = 0 above h.
          std::vector<std::vector<double>> span;
          for (int q = 0; q < n_hm; ++q) {
            std::vector<double> ep(n_hm, 0.0), w(n_hl, 0.0);
            ep[q] = 1.0;
            alg->accumulate(h, m, l, ep.data(), y.data(), w.data());
            std::vector<double> fw = apply_f(*alg, h, l, w);
            for (const auto& v : span) {
              const double d = dot(fw.data(), v.data(), n_hl);
              for (int k = 0; k < n_hl; ++k) fw[k] -= d * v[k];
            }
            const double nn = norm2(fw);
            if (nn > 1e-12) {
              for (double& v : fw) v /= nn;
              span.push_back(fw);
            }
          }
          std::vector<double> av = gauss_vec(n_hl, rng);
          for (const auto& v : span) {
            const double d = dot(av.data(), v.data(), n_hl);
            for (int k = 0; k < n_hl; ++k) av[k] -= d * v[k];
          }
          for (int top = 0; top < n; ++top) {
            if (!p.less(h, top)) continue;
            std::vector<double> dv = gauss_vec(alg->block_dim(top, h), rng);
            std::vector<double> cv = gauss_vec(alg->block_dim(top, m), rng);
            const int n_tl = alg->block_dim(top, l);
            std::vector<double> left(n_tl, 0.0), right(n_tl, 0.0);
            alg->accumulate(top, h, l, dv.data(), av.data(), left.data());
            alg->accumulate(top, m, l, cv.data(), y.data(), right.data());
            const double ip = dot(left.data(), apply_f(*alg, top, l, right).data(), n_tl);
            const double scale = norm2(dv) * norm2(av) * norm2(cv) * norm2(y);
            c2 = std::max(c2, rel(std::abs(ip), scale));
          }
        }
  }

  AxiomReport rep;
  rep.results.push_back({"i", std::max(0.0, -worst_pos), worst_pos > 0});
  rep.results.push_back({"ii", r2, r2 <= tol});
  rep.results.push_back({"iii", r3, r3 <= tol});
  rep.results.push_back({"iv", r4, r4 <= tol});
  rep.results.push_back({"v", r5, r5 <= tol});
  rep.results.push_back({"vi", r6, r6 <= tol});
  rep.results.push_back({"involution", r_inv, r_inv <= tol});
  rep.results.push_back({"condition1", c1, c1 <= tol});
  rep.results.push_back({"condition2", c2, c2 <= tol});
  return rep;
}

}  // namespace vinberg
