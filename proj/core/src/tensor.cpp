// Copyright 2026 The entmeter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entmeter/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "entmeter/tolerances.hpp"

namespace entmeter {

namespace {

using RowMajorMatrixXcd =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                  Eigen::RowMajor>;

void check_leg_subset(const std::vector<int>& legs, const LegLayout& layout,
                      const char* what) {
  std::set<int> seen;
  for (int i : legs) {
    if (i < 0 || i >= layout.leg_count()) {
      throw std::invalid_argument(std::string(what) + ": leg index " +
                                  std::to_string(i) + " out of range");
    }
    if (!seen.insert(i).second) {
      throw std::invalid_argument(std::string(what) + ": duplicate leg index " +
                                  std::to_string(i));
    }
  }
}

// Flat-index remap table: entry old -> flat index of the same multi-index
// under a permuted leg order. new_stride_of_old[j] is the stride the old
// j-th leg has in the permuted layout.
std::vector<std::int64_t> remap_table(
    const std::vector<int>& dims,
    const std::vector<std::int64_t>& new_stride_of_old) {
  const size_t n_legs = dims.size();
  std::int64_t total = 1;
  for (int d : dims) total *= d;

  std::vector<std::int64_t> table(static_cast<size_t>(total));
  std::vector<int> idx(n_legs, 0);
  std::int64_t mapped = 0;
  for (std::int64_t flat = 0; flat < total; ++flat) {
    table[static_cast<size_t>(flat)] = mapped;
    // Odometer increment, last leg fastest.
    for (size_t l = n_legs; l-- > 0;) {
      ++idx[l];
      mapped += new_stride_of_old[l];
      if (idx[l] < dims[l]) break;
      idx[l] = 0;
      mapped -= static_cast<std::int64_t>(dims[l]) * new_stride_of_old[l];
    }
  }
  return table;
}

}  // namespace

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::VectorXcd kron(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  Eigen::VectorXcd out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

StateVector nfold_copy(const StateVector& psi, int n) {
  if (n < 1) throw std::invalid_argument("nfold_copy: n must be >= 1");
  Eigen::VectorXcd amps = psi.amplitudes;
  for (int c = 1; c < n; ++c) amps = kron(amps, psi.amplitudes);
  return StateVector(std::move(amps), psi.layout.tensor_power(n));
}

StateVector tensor_product(const std::vector<StateVector>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("tensor_product: no factors");
  }
  for (const StateVector& f : factors) {
    if (f.layout != factors[0].layout) {
      throw std::invalid_argument(
          "tensor_product: factors must share one single-copy layout");
    }
  }
  Eigen::VectorXcd amps = factors[0].amplitudes;
  for (size_t i = 1; i < factors.size(); ++i) {
    amps = kron(amps, factors[i].amplitudes);
  }
  return StateVector(std::move(amps),
                     factors[0].layout.tensor_power(
                         static_cast<int>(factors.size())));
}

StateVector reorder_legs(const StateVector& psi,
                         const std::vector<int>& new_order) {
  const LegLayout& layout = psi.layout;
  const int n_legs = layout.leg_count();
  if (static_cast<int>(new_order.size()) != n_legs) {
    throw std::invalid_argument("reorder_legs: order length mismatch");
  }
  check_leg_subset(new_order, layout, "reorder_legs");

  std::vector<Leg> new_legs(static_cast<size_t>(n_legs));
  for (int i = 0; i < n_legs; ++i) {
    new_legs[static_cast<size_t>(i)] = layout.leg(new_order[i]);
  }
  LegLayout new_layout(std::move(new_legs));

  // Stride each old leg acquires in the new order.
  const auto new_strides = new_layout.strides();
  std::vector<std::int64_t> stride_of_old(static_cast<size_t>(n_legs));
  for (int i = 0; i < n_legs; ++i) {
    stride_of_old[static_cast<size_t>(new_order[i])] = new_strides[i];
  }

  const auto table = remap_table(leg_dims(layout), stride_of_old);
  Eigen::VectorXcd out(psi.amplitudes.size());
  for (std::int64_t i = 0; i < psi.amplitudes.size(); ++i) {
    out(table[static_cast<size_t>(i)]) = psi.amplitudes(i);
  }
  return StateVector(std::move(out), std::move(new_layout));
}

StateVector permute_copies(const StateVector& psi,
                           const std::vector<int>& perm) {
  const LegLayout& layout = psi.layout;
  const int n = layout.n_copies();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("permute_copies: permutation length " +
                                std::to_string(perm.size()) +
                                " does not match copy count " +
                                std::to_string(n));
  }
  std::vector<int> inverse(static_cast<size_t>(n), -1);
  for (int c = 0; c < n; ++c) {
    const int dest = perm[static_cast<size_t>(c)];
    if (dest < 0 || dest >= n || inverse[static_cast<size_t>(dest)] != -1) {
      throw std::invalid_argument("permute_copies: not a permutation of 0..n-1");
    }
    inverse[static_cast<size_t>(dest)] = c;
  }
  if (!layout.uniform_copies()) {
    throw std::invalid_argument(
        "permute_copies: copies carry different subsystem structure");
  }

  // Leg (c, s) of the result receives the amplitudes leg (perm^-1(c), s)
  // held; gather accordingly, then keep the original leg labels.
  std::vector<int> gather(static_cast<size_t>(layout.leg_count()));
  for (int i = 0; i < layout.leg_count(); ++i) {
    const Leg& leg = layout.leg(i);
    gather[static_cast<size_t>(i)] =
        layout.require(inverse[static_cast<size_t>(leg.copy)], leg.subsystem);
  }
  StateVector gathered = reorder_legs(psi, gather);
  return StateVector(std::move(gathered.amplitudes), layout);
}

DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<int>& keep) {
  const LegLayout& layout = rho.layout;
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set must be nonempty");
  }
  check_leg_subset(keep, layout, "partial_trace");

  std::vector<int> keep_sorted = keep;
  std::sort(keep_sorted.begin(), keep_sorted.end());
  std::vector<bool> kept(static_cast<size_t>(layout.leg_count()), false);
  for (int i : keep_sorted) kept[static_cast<size_t>(i)] = true;

  const auto strides = layout.strides();
  std::vector<Leg> out_legs;
  std::vector<int> keep_dims, rest_dims;
  std::vector<std::int64_t> keep_strides, rest_strides;
  for (int i = 0; i < layout.leg_count(); ++i) {
    if (kept[static_cast<size_t>(i)]) {
      out_legs.push_back(layout.leg(i));
      keep_dims.push_back(layout.leg(i).dim);
      keep_strides.push_back(strides[static_cast<size_t>(i)]);
    } else {
      rest_dims.push_back(layout.leg(i).dim);
      rest_strides.push_back(strides[static_cast<size_t>(i)]);
    }
  }

  // Flat offsets of every keep multi-index and every traced multi-index.
  auto offsets = [](const std::vector<int>& dims,
                    const std::vector<std::int64_t>& strides_in) {
    std::int64_t total = 1;
    for (int d : dims) total *= d;
    std::vector<std::int64_t> out(static_cast<size_t>(total), 0);
    std::vector<int> idx(dims.size(), 0);
    std::int64_t acc = 0;
    for (std::int64_t f = 0; f < total; ++f) {
      out[static_cast<size_t>(f)] = acc;
      for (size_t l = dims.size(); l-- > 0;) {
        ++idx[l];
        acc += strides_in[l];
        if (idx[l] < dims[l]) break;
        idx[l] = 0;
        acc -= static_cast<std::int64_t>(dims[l]) * strides_in[l];
      }
    }
    return out;
  };
  const auto keep_off = offsets(keep_dims, keep_strides);
  const auto rest_off = offsets(rest_dims, rest_strides);

  const std::int64_t dk = static_cast<std::int64_t>(keep_off.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
  for (std::int64_t i = 0; i < dk; ++i) {
    for (std::int64_t j = 0; j < dk; ++j) {
      std::complex<double> acc = 0.0;
      for (std::int64_t r = 0; r < static_cast<std::int64_t>(rest_off.size());
           ++r) {
        acc += rho.matrix(keep_off[static_cast<size_t>(i)] +
                              rest_off[static_cast<size_t>(r)],
                          keep_off[static_cast<size_t>(j)] +
                              rest_off[static_cast<size_t>(r)]);
      }
      out(i, j) = acc;
    }
  }

  // Re-base copy indices so the result is again a legal layout.
  std::set<int> copies;
  for (const Leg& leg : out_legs) copies.insert(leg.copy);
  std::vector<int> sorted_copies(copies.begin(), copies.end());
  for (Leg& leg : out_legs) {
    leg.copy = static_cast<int>(
        std::lower_bound(sorted_copies.begin(), sorted_copies.end(),
                         leg.copy) -
        sorted_copies.begin());
  }
  return DensityOperator(std::move(out), LegLayout(std::move(out_legs)));
}

Eigen::VectorXcd apply_to_legs(const Eigen::MatrixXcd& op,
                               const std::vector<int>& targets,
                               const Eigen::VectorXcd& amplitudes,
                               const LegLayout& layout) {
  if (amplitudes.size() != layout.total_dim()) {
    throw std::invalid_argument("apply_to_legs: amplitude/layout mismatch");
  }
  if (targets.empty()) {
    throw std::invalid_argument("apply_to_legs: no target legs");
  }
  check_leg_subset(targets, layout, "apply_to_legs");

  std::int64_t op_dim = 1;
  for (int t : targets) op_dim *= layout.leg(t).dim;
  if (op.rows() != op.cols() || op.rows() != op_dim) {
    throw std::invalid_argument(
        "apply_to_legs: operator dimension " + std::to_string(op.rows()) +
        " does not match target legs (" + std::to_string(op_dim) + ")");
  }

  // Permuted order: targets first (as given), remaining legs after.
  const int n_legs = layout.leg_count();
  std::vector<bool> is_target(static_cast<size_t>(n_legs), false);
  for (int t : targets) is_target[static_cast<size_t>(t)] = true;
  std::vector<int> order = targets;
  for (int i = 0; i < n_legs; ++i) {
    if (!is_target[static_cast<size_t>(i)]) order.push_back(i);
  }

  const auto dims = leg_dims(layout);
  std::vector<int> perm_dims(static_cast<size_t>(n_legs));
  for (int i = 0; i < n_legs; ++i) {
    perm_dims[static_cast<size_t>(i)] = dims[static_cast<size_t>(order[i])];
  }
  std::vector<std::int64_t> perm_strides(static_cast<size_t>(n_legs));
  std::int64_t acc = 1;
  for (size_t i = perm_dims.size(); i-- > 0;) {
    perm_strides[i] = acc;
    acc *= perm_dims[i];
  }
  std::vector<std::int64_t> stride_of_old(static_cast<size_t>(n_legs));
  for (int i = 0; i < n_legs; ++i) {
    stride_of_old[static_cast<size_t>(order[i])] = perm_strides[i];
  }

  const auto table = remap_table(dims, stride_of_old);
  const std::int64_t total = layout.total_dim();
  const std::int64_t rest_dim = total / op_dim;

  Eigen::VectorXcd gathered(total);
  for (std::int64_t i = 0; i < total; ++i) {
    gathered(table[static_cast<size_t>(i)]) = amplitudes(i);
  }

  // With targets slowest the permuted vector is an (op_dim x rest) matrix.
  Eigen::Map<RowMajorMatrixXcd> mat(gathered.data(), op_dim, rest_dim);
  RowMajorMatrixXcd transformed = op * mat;

  Eigen::VectorXcd out(total);
  const Eigen::Map<const Eigen::VectorXcd> flat(transformed.data(), total);
  for (std::int64_t i = 0; i < total; ++i) {
    out(i) = flat(table[static_cast<size_t>(i)]);
  }
  return out;
}

StateVector apply_to_legs(const Eigen::MatrixXcd& op,
                          const std::vector<int>& targets,
                          const StateVector& psi) {
  return StateVector(apply_to_legs(op, targets, psi.amplitudes, psi.layout),
                     psi.layout);
}

Eigen::MatrixXcd embed_on_legs(const Eigen::MatrixXcd& op,
                               const std::vector<int>& targets,
                               const LegLayout& layout) {
  const std::int64_t total = layout.total_dim();
  if (total > tol::kDenseDimCap) {
    throw std::invalid_argument(
        "embed_on_legs: dimension " + std::to_string(total) +
        " exceeds the dense cap " + std::to_string(tol::kDenseDimCap));
  }
  Eigen::MatrixXcd out(total, total);
  Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(total);
  for (std::int64_t j = 0; j < total; ++j) {
    basis(j) = 1.0;
    out.col(j) = apply_to_legs(op, targets, basis, layout);
    basis(j) = 0.0;
  }
  return out;
}

namespace {

// Copies psi into the (block_a x complement) coefficient matrix.
Eigen::MatrixXcd bipartition_matrix(const StateVector& psi,
                                    const std::vector<int>& block_a) {
  const LegLayout& layout = psi.layout;
  if (block_a.empty() ||
      static_cast<int>(block_a.size()) >= layout.leg_count()) {
    throw std::invalid_argument(
        "bipartition: block must be a proper nonempty leg subset");
  }
  check_leg_subset(block_a, layout, "bipartition");

  std::vector<bool> in_a(static_cast<size_t>(layout.leg_count()), false);
  for (int i : block_a) in_a[static_cast<size_t>(i)] = true;
  std::vector<int> order = block_a;
  for (int i = 0; i < layout.leg_count(); ++i) {
    if (!in_a[static_cast<size_t>(i)]) order.push_back(i);
  }
  StateVector reordered = reorder_legs(psi, order);

  std::int64_t da = 1;
  for (int i : block_a) da *= layout.leg(i).dim;
  const std::int64_t db = layout.total_dim() / da;
  return Eigen::Map<const RowMajorMatrixXcd>(reordered.amplitudes.data(), da,
                                             db);
}

}  // namespace

Eigen::VectorXd schmidt_coefficients(const StateVector& psi,
                                     const std::vector<int>& block_a) {
  const Eigen::MatrixXcd m = bipartition_matrix(psi, block_a);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues();
}

DensityOperator reduced_density(const StateVector& psi,
                                const std::vector<int>& block_a) {
  const Eigen::MatrixXcd m = bipartition_matrix(psi, block_a);
  std::vector<Leg> legs;
  for (int i : block_a) legs.push_back(psi.layout.leg(i));
  std::set<int> copies;
  for (const Leg& leg : legs) copies.insert(leg.copy);
  std::vector<int> sorted_copies(copies.begin(), copies.end());
  for (Leg& leg : legs) {
    leg.copy = static_cast<int>(
        std::lower_bound(sorted_copies.begin(), sorted_copies.end(),
                         leg.copy) -
        sorted_copies.begin());
  }
  return DensityOperator(m * m.adjoint(), LegLayout(std::move(legs)));
}

DensityOperator partial_transpose(const DensityOperator& rho,
                                  const std::vector<int>& transposed) {
  const LegLayout& layout = rho.layout;
  check_leg_subset(transposed, layout, "partial_transpose");
  if (transposed.empty()) {
    throw std::invalid_argument("partial_transpose: no legs given");
  }

  const auto dims = leg_dims(layout);
  const auto strides = layout.strides();
  std::vector<bool> flip(static_cast<size_t>(layout.leg_count()), false);
  for (int i : transposed) flip[static_cast<size_t>(i)] = true;

  const std::int64_t total = layout.total_dim();
  Eigen::MatrixXcd out(total, total);
  std::vector<int> ridx(dims.size()), cidx(dims.size());
  for (std::int64_t r = 0; r < total; ++r) {
    std::int64_t rr = r;
    for (size_t l = 0; l < dims.size(); ++l) {
      ridx[l] = static_cast<int>(rr / strides[l]);
      rr %= strides[l];
    }
    for (std::int64_t c = 0; c < total; ++c) {
      std::int64_t cc = c;
      std::int64_t sr = 0, sc = 0;
      for (size_t l = 0; l < dims.size(); ++l) {
        cidx[l] = static_cast<int>(cc / strides[l]);
        cc %= strides[l];
        if (flip[l]) {
          sr += cidx[l] * strides[l];
          sc += ridx[l] * strides[l];
        } else {
          sr += ridx[l] * strides[l];
          sc += cidx[l] * strides[l];
        }
      }
      out(sr, sc) = rho.matrix(r, c);
    }
  }
  return DensityOperator(std::move(out), layout);
}

}  // namespace entmeter
