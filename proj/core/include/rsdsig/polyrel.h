#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rsdsig/field.h"
#include "rsdsig/rsdp.h"

namespace rsdsig {

class Xof;

// Vector of univariate polynomials over K, coefficient-major ascending.
// Every row shares the same formal degree bound; trailing coefficients may
// be zero.
class PolyVec {
 public:
  PolyVec() = default;
  PolyVec(size_t rows, unsigned degree_bound)
      : rows_(rows), cols_(degree_bound + 1), coeffs_(rows * cols_) {}

  size_t rows() const { return rows_; }
  unsigned degree_bound() const { return cols_ == 0 ? 0 : cols_ - 1; }
  ExtElem& at(size_t row, unsigned deg) { return coeffs_[row * cols_ + deg]; }
  const ExtElem& at(size_t row, unsigned deg) const { return coeffs_[row * cols_ + deg]; }
  std::span<ExtElem> row(size_t i) { return {coeffs_.data() + i * cols_, cols_}; }
  std::span<const ExtElem> row(size_t i) const { return {coeffs_.data() + i * cols_, cols_}; }

  std::vector<ExtElem> leading_coeffs() const;  // formal coefficient at the bound
  ExtElem eval_row(const ExtField& kf, size_t i, const ExtElem& x) const;
  std::vector<ExtElem> eval(const ExtField& kf, const ExtElem& x) const;

  friend bool operator==(const PolyVec&, const PolyVec&) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<ExtElem> coeffs_;
};

struct BatchMatrix {
  size_t rows = 0, cols = 0;  // eta x n_constraints
  std::vector<ExtElem> m;     // row-major
  const ExtElem& at(size_t r, size_t c) const { return m[r * cols + c]; }
};

BatchMatrix sample_batch_matrix(Xof& xof, const ExtField& kf, size_t eta, size_t n);
// gamma * v for a length-cols vector
std::vector<ExtElem> apply_batch_matrix(const ExtField& kf, const BatchMatrix& gamma,
                                        std::span<const ExtElem> v);

// P~_w = P_w + X*delta_w: adds the witness offset to the degree-1 coefficients
PolyVec lift_witness(const ExtField& kf, const PolyVec& p_w,
                     std::span<const uint16_t> delta_w);

// F(P~_w)(X): n rows of formal degree d; row j < k is
// sum_l c_l X^(d-l) P~_{w,j}(X)^l, row k+i uses b[i] and <a_i, P~_w(X)>.
// Leading coefficients equal evaluate_modeling of the lifted witness.
PolyVec relation_poly(const ExtField& kf, const RsdpInstance& inst,
                      const HomogeneousTables& tables, const PolyVec& pw_tilde);

// value of relation_poly at X = r given only v = P~_w(r)
std::vector<ExtElem> relation_eval_at(const ExtField& kf, const RsdpInstance& inst,
                                      const HomogeneousTables& tables, const ExtElem& r,
                                      std::span<const ExtElem> v);

// gamma * rel over K[X]; degree preserved
PolyVec batch(const ExtField& kf, const BatchMatrix& gamma, const PolyVec& rel);

// Q = P_u + batched, truncated to degree d-1; a nonzero degree-d
// coefficient means the committed witness is invalid
PolyVec mask_and_truncate(const ExtField& kf, const PolyVec& p_u, const PolyVec& batched);

}  // namespace rsdsig
