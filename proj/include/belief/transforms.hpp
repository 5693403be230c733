#pragma once

// Fast zeta / Moebius transforms over the subset lattice of an n-element
// frame. Vectors are indexed by SubsetIndex and must have length 2^n.
// All transforms are O(n 2^n) and run in place on any dense Eigen vector.

#include <Eigen/Core>

#include <bit>
#include <cassert>
#include <cstddef>

namespace belief {

namespace detail {

template <typename Derived>
int lattice_order(const Eigen::DenseBase<Derived>& v) {
  const auto size = static_cast<std::size_t>(v.size());
  assert(size > 0 && std::has_single_bit(size));
  return std::countr_zero(size);
}

// Calls op(lower, upper) for every pair (A, A | bit) with bit not in A.
template <typename Derived, typename Op>
void for_each_lattice_edge(Eigen::DenseBase<Derived>& v, Op op) {
  const int n = lattice_order(v);
  const Eigen::Index size = v.size();
  for (int i = 0; i < n; ++i) {
    const Eigen::Index bit = Eigen::Index{1} << i;
    for (Eigen::Index base = 0; base < size; base += bit << 1) {
      for (Eigen::Index a = base; a < base + bit; ++a) {
        op(v.coeffRef(a), v.coeffRef(a | bit));
      }
    }
  }
}

}  // namespace detail

/// v(A) <- sum_{B >= A} v(B). Mass to commonality.
template <typename Derived>
void superset_sum_inplace(Eigen::DenseBase<Derived>& v) {
  detail::for_each_lattice_edge(v, [](auto& lo, const auto& hi) { lo += hi; });
}

/// Inverse of superset_sum_inplace. Commonality to mass.
template <typename Derived>
void superset_mobius_inplace(Eigen::DenseBase<Derived>& v) {
  detail::for_each_lattice_edge(v, [](auto& lo, const auto& hi) { lo -= hi; });
}

/// v(A) <- sum_{B <= A} v(B). Mass to implicability.
template <typename Derived>
void subset_sum_inplace(Eigen::DenseBase<Derived>& v) {
  detail::for_each_lattice_edge(v, [](const auto& lo, auto& hi) { hi += lo; });
}

/// Inverse of subset_sum_inplace. Implicability to mass.
template <typename Derived>
void subset_mobius_inplace(Eigen::DenseBase<Derived>& v) {
  detail::for_each_lattice_edge(v, [](const auto& lo, auto& hi) { hi -= lo; });
}

template <typename Derived>
typename Derived::PlainObject superset_sum(const Eigen::DenseBase<Derived>& v) {
  typename Derived::PlainObject out = v;
  superset_sum_inplace(out);
  return out;
}

template <typename Derived>
typename Derived::PlainObject superset_mobius(const Eigen::DenseBase<Derived>& v) {
  typename Derived::PlainObject out = v;
  superset_mobius_inplace(out);
  return out;
}

template <typename Derived>
typename Derived::PlainObject subset_sum(const Eigen::DenseBase<Derived>& v) {
  typename Derived::PlainObject out = v;
  subset_sum_inplace(out);
  return out;
}

template <typename Derived>
typename Derived::PlainObject subset_mobius(const Eigen::DenseBase<Derived>& v) {
  typename Derived::PlainObject out = v;
  subset_mobius_inplace(out);
  return out;
}

}  // namespace belief
