#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "famalg/error.hpp"
#include "famalg/scalar.hpp"
#include "famalg/semigroup.hpp"

namespace famalg {

/// Index tuple of a product, padded with zeros beyond its arity.
using IndexTuple = std::array<int, 2>;

inline IndexTuple make_index_tuple(std::span<const int> idx) {
  IndexTuple t{0, 0};
  if (idx.size() > 2) throw Error("ArityMismatch", "index tuples have at most two components");
  for (std::size_t i = 0; i < idx.size(); ++i) t[i] = idx[i];
  return t;
}

/// Key of one structure-constant entry: e_i *_idx e_j = sum_k c * e_k.
/// Lexicographic order (idx, i, j, k) is the canonical entry order.
struct EntryKey {
  IndexTuple idx{0, 0};
  int i = 0;
  int j = 0;
  int k = 0;
  auto operator<=>(const EntryKey&) const = default;
};

template <class S>
using Vec = std::vector<S>;

template <class S>
Vec<S> zero_vec(int n) {
  return Vec<S>(static_cast<std::size_t>(n), S::zero());
}

template <class S>
Vec<S> basis_vec(int n, int i) {
  Vec<S> v = zero_vec<S>(n);
  v[static_cast<std::size_t>(i)] = S::one();
  return v;
}

template <class S>
bool is_zero_vec(const Vec<S>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class S>
Vec<S> vec_add(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

template <class S>
Vec<S> vec_sub(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

/// Sparse structure-constant tensor of one bilinear product, indexed by
/// 0, 1 or 2 semigroup parameters. Absent entries are zero; explicit
/// zeros are never stored.
template <class S>
struct Product {
  std::string name;
  int index_arity = 0; // 0 = ordinary, 1 = family, 2 = relative
  int dim = 0;
  std::map<EntryKey, S> entries;

  /// Accumulates into an entry, erasing it if the sum cancels to zero.
  void add(const EntryKey& key, const S& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = entries.try_emplace(key, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) entries.erase(it);
    }
  }

  void set(const EntryKey& key, const S& value) {
    if (value.is_zero())
      entries.erase(key);
    else
      entries[key] = value;
  }

  S at(const EntryKey& key) const {
    auto it = entries.find(key);
    return it == entries.end() ? S::zero() : it->second;
  }

  /// Visits all entries with the given index tuple: f(i, j, k, coeff).
  template <class F>
  void for_index(const IndexTuple& idx, F&& f) const {
    auto it = entries.lower_bound(EntryKey{idx, 0, 0, 0});
    for (; it != entries.end() && it->first.idx == idx; ++it)
      f(it->first.i, it->first.j, it->first.k, it->second);
  }

  /// Visits the column e_i *_idx e_j: f(k, coeff).
  template <class F>
  void for_basis_pair(const IndexTuple& idx, int i, int j, F&& f) const {
    auto it = entries.lower_bound(EntryKey{idx, i, j, 0});
    for (; it != entries.end() && it->first.idx == idx && it->first.i == i && it->first.j == j; ++it)
      f(it->first.k, it->second);
  }

  friend bool operator==(const Product& a, const Product& b) {
    return a.name == b.name && a.index_arity == b.index_arity && a.dim == b.dim &&
           a.entries == b.entries;
  }
};

/// A finite-dimensional algebra presentation: scalar field (the template
/// parameter), an index semigroup, a dimension, and named products.
/// `kind` is the declared identity-kind tag from the file, if any.
template <class S>
struct Algebra {
  CommutativeSemigroup semigroup = CommutativeSemigroup::trivial();
  int dim = 0;
  std::map<std::string, Product<S>> products;
  std::optional<std::string> kind;

  const Product<S>& product(const std::string& name) const {
    auto it = products.find(name);
    if (it == products.end())
      throw Error("MissingProduct", "algebra has no product named '" + name + "'");
    return it->second;
  }

  const Product<S>& product(const std::string& name, int arity) const {
    const Product<S>& p = product(name);
    if (p.index_arity != arity)
      throw Error("ArityMismatch", "product '" + name + "' has index arity " +
                                       std::to_string(p.index_arity) + ", expected " +
                                       std::to_string(arity));
    return p;
  }

  bool has_product(const std::string& name, int arity) const {
    auto it = products.find(name);
    return it != products.end() && it->second.index_arity == arity;
  }

  /// All nonzero structure constants across all products.
  std::size_t entry_count() const {
    std::size_t n = 0;
    for (const auto& [name, p] : products) n += p.entries.size();
    return n;
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.semigroup == b.semigroup && a.dim == b.dim && a.products == b.products &&
           a.kind == b.kind;
  }
};

/// Bilinear evaluation: sum_{i,j,k} x_i y_j c[idx][i][j][k] e_k.
template <class S>
Vec<S> product_eval(const Product<S>& p, std::span<const int> indices, const Vec<S>& x,
                    const Vec<S>& y) {
  if (static_cast<int>(indices.size()) != p.index_arity)
    throw Error("ArityMismatch", "product '" + p.name + "' expects " +
                                     std::to_string(p.index_arity) + " indices, got " +
                                     std::to_string(indices.size()));
  if (static_cast<int>(x.size()) != p.dim || static_cast<int>(y.size()) != p.dim)
    throw Error("DimensionMismatch", "vector length does not match product dimension");
  Vec<S> out = zero_vec<S>(p.dim);
  p.for_index(make_index_tuple(indices), [&](int i, int j, int k, const S& c) {
    const S xi = x[static_cast<std::size_t>(i)];
    if (xi.is_zero()) return;
    const S yj = y[static_cast<std::size_t>(j)];
    if (yj.is_zero()) return;
    out[static_cast<std::size_t>(k)] += xi * yj * c;
  });
  return out;
}

/// Dense n x n matrix, row major: (M v)[r] = sum_c M[r][c] v[c].
template <class S>
struct Matrix {
  int n = 0;
  std::vector<S> a; // n*n, row major

  static Matrix zero(int n) { return Matrix{n, std::vector<S>(static_cast<std::size_t>(n) * n, S::zero())}; }
  static Matrix identity(int n) {
    Matrix m = zero(n);
    for (int i = 0; i < n; ++i) m.set(i, i, S::one());
    return m;
  }

  const S& get(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
  void set(int r, int c, const S& v) { a[static_cast<std::size_t>(r) * n + c] = v; }

  Vec<S> apply(const Vec<S>& v) const {
    if (static_cast<int>(v.size()) != n)
      throw Error("DimensionMismatch", "matrix/vector dimension mismatch");
    Vec<S> out = zero_vec<S>(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const S& m = get(r, c);
        if (!m.is_zero() && !v[static_cast<std::size_t>(c)].is_zero())
          out[static_cast<std::size_t>(r)] += m * v[static_cast<std::size_t>(c)];
      }
    return out;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) { return x.n == y.n && x.a == y.a; }
};

/// A semigroup-indexed family of linear endomorphisms: one n x n matrix
/// per semigroup element. Used for every Rota-Baxter variant.
template <class S>
struct OperatorFamily {
  int dim = 0;
  std::vector<Matrix<S>> maps; // maps[w] for semigroup element w

  static OperatorFamily zero(int order, int n) {
    OperatorFamily f;
    f.dim = n;
    f.maps.assign(static_cast<std::size_t>(order), Matrix<S>::zero(n));
    return f;
  }
  static OperatorFamily identity(int order, int n) {
    OperatorFamily f;
    f.dim = n;
    f.maps.assign(static_cast<std::size_t>(order), Matrix<S>::identity(n));
    return f;
  }

  const Matrix<S>& map(int w) const { return maps[static_cast<std::size_t>(w)]; }

  void check_against(const Algebra<S>& a, const std::string& role) const {
    if (dim != a.dim)
      throw Error("DimensionMismatch", role + " has dimension " + std::to_string(dim) +
                                           ", algebra has " + std::to_string(a.dim));
    if (static_cast<int>(maps.size()) != a.semigroup.order())
      throw Error("DimensionMismatch", role + " has " + std::to_string(maps.size()) +
                                           " maps, semigroup has order " +
                                           std::to_string(a.semigroup.order()));
  }
};

} // namespace famalg
