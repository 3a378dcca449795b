#pragma once

#include "hecke/determinant.hpp"
#include "hecke/ext_field.hpp"
#include "hecke/matrix.hpp"

#include <optional>
#include <vector>

namespace hecke {

/// Reduced row echelon form: rows() == rank, pivots[i] is the pivot column of row i.
struct RowEchelon {
  RatMatrix rows;
  std::vector<std::size_t> pivots;
};

RowEchelon rref(const Fp& f, RatMatrix a);
std::size_t rank(const Fp& f, const PolyMatrix& a);
std::size_t rank(const Fp& f, const RatMatrix& a);

/// Linear subspace of F_p(t)^n with a canonical basis: each basis vector has
/// its last nonzero coordinate (the pivot) equal to 1, every other basis
/// vector vanishes there, and pivots increase strictly. Equality of subspaces
/// is equality of bases.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t n);
  static Subspace full(std::size_t n);
  /// Span of arbitrary vectors of length n.
  static Subspace span(const Fp& f, std::size_t n, const std::vector<RatVector>& vectors);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  bool is_full() const noexcept { return basis_.size() == n_; }
  const std::vector<RatVector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool operator==(const Subspace&) const = default;

 private:
  friend Subspace kernel_basis(const Fp& f, const RatMatrix& a);
  friend Subspace subspace_inflate(const Subspace& u, std::size_t stride);
  std::size_t n_ = 0;
  std::vector<RatVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Right kernel over F_p(t); the Laurent scale is irrelevant and ignored.
Subspace kernel_basis(const Fp& f, const PolyMatrix& a);
Subspace kernel_basis(const Fp& f, const RatMatrix& a);

Subspace subspace_intersect(const Fp& f, const Subspace& u, const Subspace& v);
Subspace subspace_sum(const Fp& f, const Subspace& u, const Subspace& v);
bool subspace_contains(const Fp& f, const Subspace& u, const RatVector& w);
bool subspace_contains(const Fp& f, const Subspace& u, const Subspace& v);
/// Coordinates of w in u's basis, or nullopt when w is not in u.
std::optional<RatVector> coordinates(const Fp& f, const Subspace& u, const RatVector& w);

/// Ker(a) intersected with u, as u's basis times Ker(a * basis).
Subspace kernel_within(const Fp& f, const PolyMatrix& a, const Subspace& u);
/// a(u), the span of the images of u's basis.
Subspace image(const Fp& f, const PolyMatrix& a, const Subspace& u);
/// Substitutes t -> t^stride in every basis vector (canonical form is preserved).
Subspace subspace_inflate(const Subspace& u, std::size_t stride);

/// Basis vectors of u as the columns of an n x dim matrix.
RatMatrix basis_matrix(const Subspace& u);

/// Matrix of a on u in u's basis; throws NotInvariant when a(u) is not inside u.
RatMatrix restrict_operator(const Fp& f, const PolyMatrix& a, const Subspace& u);

/// det(X I - a) with coefficients in F_p(t), lowest degree first.
std::vector<RatFn> charpoly_rat(const Fp& f, const RatMatrix& a);

/// Rank of a with t specialized to tau.
std::size_t specialized_rank(const ExtField& field, const PolyMatrix& a, ExtField::Elem tau);

}  // namespace hecke
