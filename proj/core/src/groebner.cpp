#include "mica/groebner.hpp"

#include <algorithm>
#include <set>

namespace mica {

IdealGens::IdealGens(ContextPtr ctx, Field field, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)), field_(field), gens_(std::move(gens)) {
  if (gens_.empty()) throw InputError("ideal needs at least one generator");
  homogeneous_ = true;
  for (const auto& g : gens_) {
    check_same_context(ctx_, g.context());
    if (!(g.field() == field_)) throw InputError("generator field mismatch");
    if (g.is_zero()) throw InputError("zero generator not allowed");
    if (!g.is_homogeneous()) homogeneous_ = false;
  }
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis,
                  MonomialOrder order) {
  for (const auto& g : basis) {
    check_same_context(f.context(), g.context());
    if (g.is_zero()) throw InputError("zero polynomial in reduction basis");
  }
  Polynomial p = f.with_order(order);
  Polynomial rem = Polynomial::zero(f.context(), f.field(), order);
  std::vector<Polynomial> gs;
  gs.reserve(basis.size());
  for (const auto& g : basis) gs.push_back(g.with_order(order));

  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    bool divided = false;
    for (const auto& g : gs) {
      const Term& gl = g.leading_term();
      if (divides(gl.mono, lt.mono)) {
        Polynomial q = Polynomial::monomial(p.context(),
                                            lt.coeff / gl.coeff,
                                            mono_div(lt.mono, gl.mono), order);
        p = p - q * g;
        divided = true;
        break;
      }
    }
    if (!divided) {
      Polynomial head =
          Polynomial::monomial(p.context(), lt.coeff, lt.mono, order);
      rem = rem + head;
      p = p - head;
    }
  }
  return rem;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        MonomialOrder order) {
  if (f.is_zero() || g.is_zero()) {
    throw InputError("s-polynomial of a zero polynomial");
  }
  check_same_context(f.context(), g.context());
  Polynomial a = f.with_order(order), b = g.with_order(order);
  const Term& la = a.leading_term();
  const Term& lb = b.leading_term();
  Exponents L = mono_lcm(la.mono, lb.mono);
  Polynomial ma = Polynomial::monomial(
      a.context(), la.coeff.inverse(), mono_div(L, la.mono), order);
  Polynomial mb = Polynomial::monomial(
      b.context(), lb.coeff.inverse(), mono_div(L, lb.mono), order);
  return ma * a - mb * b;
}

namespace {

struct Pair {
  int degree;      // total degree of the lcm
  Exponents lcm;
  std::size_t i, j;  // i < j

  bool operator<(const Pair& o) const {
    if (degree != o.degree) return degree < o.degree;
    if (auto c = compare(MonomialOrder::GrevLex, lcm, o.lcm); c != 0)
      return c == std::strong_ordering::less;
    return std::tie(i, j) < std::tie(o.i, o.j);
  }
};

}  // namespace

GroebnerBasis buchberger(const IdealGens& ideal, MonomialOrder order,
                         const BuchbergerLimits& limits) {
  std::vector<Polynomial> basis;
  for (const auto& g : ideal.generators()) {
    basis.push_back(g.with_order(order).monic());
  }

  std::set<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> handled;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Exponents L =
          mono_lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
      queue.insert(Pair{total_degree(L), std::move(L), i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  std::size_t processed = 0;
  while (!queue.empty()) {
    Pair pair = *queue.begin();
    queue.erase(queue.begin());
    handled.insert({pair.i, pair.j});

    if (limits.max_pairs && ++processed > limits.max_pairs) {
      throw ResourceError("pair cap exceeded (" +
                          std::to_string(limits.max_pairs) + ")");
    }
    if (limits.max_degree && pair.degree > limits.max_degree) {
      throw ResourceError("degree cap exceeded (" +
                          std::to_string(limits.max_degree) + ")");
    }

    const Exponents& li = basis[pair.i].leading_monomial();
    const Exponents& lj = basis[pair.j].leading_monomial();
    // coprime criterion
    if (pair.lcm == mono_mul(li, lj)) continue;
    // chain criterion
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!divides(basis[k].leading_monomial(), pair.lcm)) continue;
      auto ik = std::minmax(pair.i, k);
      auto jk = std::minmax(pair.j, k);
      if (handled.count({ik.first, ik.second}) &&
          handled.count({jk.first, jk.second})) {
        chained = true;
      }
    }
    if (chained) continue;

    Polynomial s = s_polynomial(basis[pair.i], basis[pair.j], order);
    Polynomial nf = reduce(s, basis, order);
    if (!nf.is_zero()) {
      basis.push_back(nf.monic());
      push_pairs(basis.size() - 1);
    }
  }

  // minimalize: keep only generators whose lead is not divisible by another
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (divides(basis[j].leading_monomial(), basis[i].leading_monomial()) &&
          !(basis[i].leading_monomial() == basis[j].leading_monomial() &&
            j > i)) {
        drop = true;
        break;
      }
    }
    if (!drop) minimal.push_back(basis[i]);
  }

  // inter-reduce tails
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      Polynomial nf = reduce(minimal[i], others, order).monic();
      if (!(nf == minimal[i])) {
        minimal[i] = nf;
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return compare(order, a.leading_monomial(),
                             b.leading_monomial()) ==
                     std::strong_ordering::greater;
            });
  return GroebnerBasis{std::move(minimal), order, true};
}

MonomialIdeal initial_ideal(const GroebnerBasis& basis) {
  if (basis.gens.empty()) throw InputError("empty basis");
  std::vector<Exponents> leads;
  for (const auto& g : basis.gens) leads.push_back(g.leading_monomial());
  return MonomialIdeal::from_monomials(basis.gens.front().context(),
                                       std::move(leads));
}

bool membership(const Polynomial& f, const GroebnerBasis& basis) {
  if (f.is_zero()) return true;
  return reduce(f, basis.gens, basis.order).is_zero();
}

namespace {

// Gaussian elimination rank check.
bool is_invertible(Field field, const std::vector<std::vector<Scalar>>& m) {
  auto a = m;
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    Scalar inv = a[col][col].inverse();
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col].is_zero()) continue;
      Scalar factor = a[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) {
        a[row][k] = a[row][k] - factor * a[col][k];
      }
    }
  }
  (void)field;
  return true;
}

}  // namespace

LinearChange::LinearChange(Field field,
                           std::vector<std::vector<Scalar>> matrix)
    : field_(field), matrix_(std::move(matrix)) {
  const std::size_t n = matrix_.size();
  if (n == 0) throw InputError("empty matrix");
  for (const auto& row : matrix_) {
    if (row.size() != n) throw InputError("matrix must be square");
    for (const auto& e : row) {
      if (!(e.field() == field_)) throw InputError("matrix entry field mismatch");
    }
  }
  if (!is_invertible(field_, matrix_)) {
    throw InputError("coordinate change matrix is singular");
  }
}

LinearChange LinearChange::identity(Field field, std::size_t n) {
  std::vector<std::vector<Scalar>> m(
      n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar::one(field);
  return LinearChange(field, std::move(m));
}

LinearChange LinearChange::random(Field field, std::size_t n,
                                  std::mt19937_64& rng, long height) {
  for (;;) {
    std::vector<std::vector<Scalar>> m(
        n, std::vector<Scalar>(n, Scalar::zero(field)));
    for (auto& row : m) {
      for (auto& e : row) {
        if (field.is_prime_field()) {
          std::uniform_int_distribution<unsigned long> d(1, field.modulus - 1);
          e = Scalar::from_int(field, static_cast<long>(d(rng)));
        } else {
          std::uniform_int_distribution<long> d(-height, height);
          long v = 0;
          while (v == 0) v = d(rng);
          e = Scalar::from_int(field, v);
        }
      }
    }
    if (is_invertible(field, m)) return LinearChange(field, std::move(m));
  }
}

bool LinearChange::lower_triangular() const {
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    for (std::size_t j = i + 1; j < matrix_.size(); ++j) {
      if (!matrix_[i][j].is_zero()) return false;
    }
  }
  return true;
}

Polynomial LinearChange::apply(const Polynomial& f) const {
  const auto& ctx = f.context();
  if (ctx->size() != matrix_.size()) {
    throw InputError("matrix size does not match variable count");
  }
  MonomialOrder order = f.order();
  std::vector<Polynomial> images;
  images.reserve(matrix_.size());
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    Polynomial img = Polynomial::zero(ctx, field_, order);
    for (std::size_t j = 0; j < matrix_.size(); ++j) {
      if (matrix_[i][j].is_zero()) continue;
      img = img +
            Polynomial::variable(ctx, field_, j, order) * matrix_[i][j];
    }
    images.push_back(std::move(img));
  }
  Polynomial out = Polynomial::zero(ctx, field_, order);
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(ctx, t.coeff, order);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] > 0) {
        prod = prod * images[i].pow(static_cast<unsigned>(t.mono[i]));
      }
    }
    out = out + prod;
  }
  return out;
}

IdealGens LinearChange::apply(const IdealGens& ideal) const {
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(apply(g));
  return IdealGens(ideal.context(), ideal.field(), std::move(gens));
}

LinearChange LinearChange::compose(const LinearChange& o) const {
  if (size() != o.size()) throw InputError("matrix size mismatch");
  // substitution is a right action on matrices: the change realizing
  // "apply this after o" carries x_i -> sum_k (o.matrix * matrix)_ik x_k
  const std::size_t n = size();
  std::vector<std::vector<Scalar>> m(
      n, std::vector<Scalar>(n, Scalar::zero(field_)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar s = Scalar::zero(field_);
      for (std::size_t k = 0; k < n; ++k) {
        s = s + o.matrix_[i][k] * matrix_[k][j];
      }
      m[i][j] = std::move(s);
    }
  }
  return LinearChange(field_, std::move(m));
}

MonomialIdeal gin(const IdealGens& ideal, MonomialOrder order,
                  std::uint64_t seed, int trials,
                  const BuchbergerLimits& limits) {
  if (trials < 2) throw InputError("gin requires at least 2 trials");
  std::mt19937_64 rng(seed);
  std::optional<MonomialIdeal> result;
  for (int t = 0; t < trials; ++t) {
    LinearChange g =
        LinearChange::random(ideal.field(), ideal.context()->size(), rng);
    MonomialIdeal in = initial_ideal(buchberger(g.apply(ideal), order, limits));
    if (!result) {
      result = std::move(in);
    } else if (!(*result == in)) {
      throw UnstableError(
          "gin trials disagree; increase trials or entropy range");
    }
  }
  return *result;
}

}  // namespace mica
