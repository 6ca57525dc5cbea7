// Copyright 2026 The nc2ent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nc2ent/oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "nc2ent/tolerances.hpp"

namespace nc2ent::oracle {

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t out = 1;
  for (int k = 0; k < exp; ++k) out *= base;
  return out;
}

sym::Occupation occupation_of(std::size_t index, int levels, int particles) {
  sym::Occupation occ(static_cast<std::size_t>(levels), 0);
  for (int f = 0; f < particles; ++f) {
    ++occ[index % static_cast<std::size_t>(levels)];
    index /= static_cast<std::size_t>(levels);
  }
  return occ;
}

double h2(double p) {
  if (p <= tol::kEntropyCut || p >= 1.0 - tol::kEntropyCut) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace

Vector tensor_power(const Vector& v, int particles) {
  Vector out = Vector::Ones(1);
  for (int f = 0; f < particles; ++f) out = kron(out, v);
  return out;
}

Vector dicke_tensor(int levels, const sym::Occupation& occ) {
  int particles = 0;
  for (int n : occ) particles += n;
  const std::size_t total = ipow(static_cast<std::size_t>(levels), particles);
  Vector out = Vector::Zero(static_cast<Eigen::Index>(total));
  for (std::size_t i = 0; i < total; ++i) {
    if (occupation_of(i, levels, particles) == occ) out(static_cast<Eigen::Index>(i)) = 1.0;
  }
  return out / out.norm();
}

Vector project_to_dicke(const Vector& tensor, int levels, int particles) {
  const sym::DickeBasis basis(levels, particles);
  if (static_cast<std::size_t>(tensor.size()) != ipow(static_cast<std::size_t>(levels), particles)) {
    throw std::invalid_argument("project_to_dicke: dimension mismatch");
  }
  Vector out = Vector::Zero(static_cast<Eigen::Index>(basis.size()));
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(out.size());
  for (Eigen::Index i = 0; i < tensor.size(); ++i) {
    const auto k = static_cast<Eigen::Index>(basis.index_of(occupation_of(static_cast<std::size_t>(i), levels, particles)));
    out(k) += tensor(i);
    counts(k) += 1.0;
  }
  for (Eigen::Index k = 0; k < out.size(); ++k) out(k) /= std::sqrt(counts(k));
  return out;
}

Vector embed_symmetric(const Vector& dicke, int levels, int particles) {
  const sym::DickeBasis basis(levels, particles);
  if (static_cast<std::size_t>(dicke.size()) != basis.size()) throw std::invalid_argument("embed_symmetric: dimension mismatch");
  Vector out = Vector::Zero(static_cast<Eigen::Index>(ipow(static_cast<std::size_t>(levels), particles)));
  for (std::size_t k = 0; k < basis.size(); ++k) out += dicke(static_cast<Eigen::Index>(k)) * dicke_tensor(levels, basis[k]);
  return out;
}

Vector split_first_quantized(const Vector& dicke, int levels, int particles, int nx, int ny) {
  if (nx < 0 || ny < 0 || nx + ny != particles) throw std::invalid_argument("split_first_quantized: bad split");
  const Vector t = embed_symmetric(dicke, levels, particles);
  const auto rows = static_cast<Eigen::Index>(ipow(static_cast<std::size_t>(levels), nx));
  const auto cols = static_cast<Eigen::Index>(ipow(static_cast<std::size_t>(levels), ny));
  // t index = x * cols + y.
  Matrix m(rows, cols);
  for (Eigen::Index x = 0; x < rows; ++x) m.row(x) = t.segment(x * cols, cols).transpose();
  Matrix half(static_cast<Eigen::Index>(sym::dicke_dim(levels, nx)), cols);
  for (Eigen::Index y = 0; y < cols; ++y) half.col(y) = project_to_dicke(m.col(y), levels, nx);
  const auto dy = static_cast<Eigen::Index>(sym::dicke_dim(levels, ny));
  Vector out(half.rows() * dy);
  for (Eigen::Index x = 0; x < half.rows(); ++x) {
    out.segment(x * dy, dy) = project_to_dicke(half.row(x).transpose(), levels, ny);
  }
  return out;
}

Vector apply_each_factor(const Matrix& op, const Vector& tensor, int particles) {
  const auto d = static_cast<std::size_t>(op.rows());
  if (op.rows() != op.cols() || static_cast<std::size_t>(tensor.size()) != ipow(d, particles)) {
    throw std::invalid_argument("apply_each_factor: dimension mismatch");
  }
  Vector cur = tensor;
  for (int f = 0; f < particles; ++f) {
    const std::size_t stride = ipow(d, particles - 1 - f);
    const std::size_t block = stride * d;
    Vector next = Vector::Zero(cur.size());
    for (std::size_t base = 0; base < static_cast<std::size_t>(cur.size()); base += block) {
      for (std::size_t s = 0; s < stride; ++s) {
        for (std::size_t i = 0; i < d; ++i) {
          cplx acc = 0.0;
          for (std::size_t j = 0; j < d; ++j) {
            acc += op(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *
                   cur(static_cast<Eigen::Index>(base + j * stride + s));
          }
          next(static_cast<Eigen::Index>(base + i * stride + s)) = acc;
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<Matrix> tunneling_first_quantized(const Vector& dicke, int levels, int particles,
                                              const modesplit::Tunneling& w) {
  const int k2 = 2 * levels;
  // Mode A occupies single-particle indices 0..K-1, so each base-K digit string
  // keeps its digits in base 2K.
  const Vector in_k = embed_symmetric(dicke, levels, particles);
  Vector in_a = Vector::Zero(static_cast<Eigen::Index>(ipow(static_cast<std::size_t>(k2), particles)));
  for (std::size_t i = 0; i < static_cast<std::size_t>(in_k.size()); ++i) {
    std::size_t rest = i;
    std::size_t j = 0;
    std::size_t place = 1;
    for (int f = 0; f < particles; ++f) {
      j += (rest % static_cast<std::size_t>(levels)) * place;
      rest /= static_cast<std::size_t>(levels);
      place *= static_cast<std::size_t>(k2);
    }
    in_a(static_cast<Eigen::Index>(j)) = in_k(static_cast<Eigen::Index>(i));
  }

  Matrix op = Matrix::Zero(k2, k2);
  for (int j = 0; j < levels; ++j) {
    op(j, j) = w.r;
    op(levels + j, j) = w.t;
    op(j, levels + j) = std::conj(w.t);
    op(levels + j, levels + j) = -std::conj(w.r);
  }
  const Vector out = project_to_dicke(apply_each_factor(op, in_a, particles), k2, particles);

  std::vector<Matrix> sectors;
  std::vector<sym::DickeBasis> bases;
  for (int n = 0; n <= particles; ++n) bases.emplace_back(levels, n);
  for (int na = 0; na <= particles; ++na) {
    sectors.push_back(Matrix::Zero(static_cast<Eigen::Index>(bases[static_cast<std::size_t>(na)].size()),
                                   static_cast<Eigen::Index>(bases[static_cast<std::size_t>(particles - na)].size())));
  }
  const sym::DickeBasis full(k2, particles);
  for (std::size_t i = 0; i < full.size(); ++i) {
    const sym::Occupation& occ = full[i];
    sym::Occupation a(occ.begin(), occ.begin() + levels);
    sym::Occupation b(occ.begin() + levels, occ.end());
    int na = 0;
    for (int n : a) na += n;
    const auto ia = bases[static_cast<std::size_t>(na)].index_of(a);
    const auto ib = bases[static_cast<std::size_t>(particles - na)].index_of(b);
    sectors[static_cast<std::size_t>(na)](static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(ib)) =
        out(static_cast<Eigen::Index>(i));
  }
  return sectors;
}

std::size_t schmidt_rank_qr(const Vector& psi, std::size_t dim_a, std::size_t dim_b) {
  if (static_cast<std::size_t>(psi.size()) != dim_a * dim_b) throw std::invalid_argument("schmidt_rank_qr: dimension mismatch");
  Matrix m(static_cast<Eigen::Index>(dim_a), static_cast<Eigen::Index>(dim_b));
  for (std::size_t a = 0; a < dim_a; ++a) {
    for (std::size_t b = 0; b < dim_b; ++b) {
      m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = psi(static_cast<Eigen::Index>(a * dim_b + b));
    }
  }
  Eigen::ColPivHouseholderQR<Matrix> qr(m);
  const auto& r = qr.matrixR();
  const Eigen::Index n = std::min(r.rows(), r.cols());
  if (n == 0) return 0;
  const double top = std::abs(r(0, 0));
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(r(i, i)) > tol::kRank * top) ++rank;
  }
  return rank;
}

Matrix gram_direct(std::span<const StateVector> states) {
  const auto n = static_cast<Eigen::Index>(states.size());
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& a = states[static_cast<std::size_t>(i)];
      const auto& b = states[static_cast<std::size_t>(j)];
      if (a.dim() != b.dim()) throw std::invalid_argument("gram_direct: dimension mismatch");
      cplx acc = 0.0;
      for (std::size_t k = 0; k < a.dim(); ++k) acc += std::conj(a[k]) * b[k];
      g(i, j) = acc;
    }
  }
  return g;
}

double epsilon_max_closed(double lambda_min) {
  if (lambda_min >= 1.0) return std::numeric_limits<double>::infinity();
  return lambda_min / (1.0 - lambda_min);
}

double gcnot_epsilon_max(double theta) { return 1.0 / std::abs(std::cos(theta)) - 1.0; }

double gcnot_optimal_mu(double theta) { return std::sqrt(std::abs(std::cos(theta))); }

double gcnot_entropy_closed(double theta, double mu, const Vector& input) {
  const double h = 0.5 * theta;
  const cplx x = input(0) / std::cos(h);
  const cplx y = input(1) / std::sin(h);
  const cplx a0 = 0.5 * (x + y);
  const cplx a1 = 0.5 * (x - y);
  const double p = mu;
  const double q = std::cos(theta) / mu;
  const double n = std::norm(a0) + std::norm(a1) + 2.0 * (std::conj(a1) * a0).real() * p * q;
  const double det = std::norm(a0) * std::norm(a1) * (1.0 - p * p) * (1.0 - q * q) / (n * n);
  const double disc = std::sqrt(std::max(0.0, 1.0 - 4.0 * det));
  return h2(0.5 * (1.0 - disc));
}

}  // namespace nc2ent::oracle
