#include "rsdsig/polyrel.h"

#include <stdexcept>

#include "rsdsig/xof.h"

namespace rsdsig {

std::vector<ExtElem> PolyVec::leading_coeffs() const {
  std::vector<ExtElem> out(rows_);
  for (size_t i = 0; i < rows_; i++) out[i] = coeffs_[i * cols_ + (cols_ - 1)];
  return out;
}

ExtElem PolyVec::eval_row(const ExtField& kf, size_t i, const ExtElem& x) const {
  ExtElem acc{};
  for (size_t d = cols_; d-- > 0;) acc = kf.add(kf.mul(acc, x), at(i, unsigned(d)));
  return acc;
}

std::vector<ExtElem> PolyVec::eval(const ExtField& kf, const ExtElem& x) const {
  std::vector<ExtElem> out(rows_);
  for (size_t i = 0; i < rows_; i++) out[i] = eval_row(kf, i, x);
  return out;
}

BatchMatrix sample_batch_matrix(Xof& xof, const ExtField& kf, size_t eta, size_t n) {
  BatchMatrix g;
  g.rows = eta;
  g.cols = n;
  g.m.resize(eta * n);
  BitSource bits(xof);
  for (auto& e : g.m) e = sample_ext(bits, kf);
  return g;
}

std::vector<ExtElem> apply_batch_matrix(const ExtField& kf, const BatchMatrix& gamma,
                                        std::span<const ExtElem> v) {
  if (v.size() != gamma.cols) throw std::runtime_error("batch dimension mismatch");
  std::vector<ExtElem> out(gamma.rows);
  for (size_t r = 0; r < gamma.rows; r++) {
    ExtElem acc{};
    for (size_t c = 0; c < gamma.cols; c++)
      acc = kf.add(acc, kf.mul(gamma.at(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

PolyVec lift_witness(const ExtField& kf, const PolyVec& p_w,
                     std::span<const uint16_t> delta_w) {
  if (p_w.rows() != delta_w.size()) throw std::runtime_error("offset length mismatch");
  if (p_w.degree_bound() != 1) throw std::runtime_error("witness polynomials must be degree 1");
  PolyVec out = p_w;
  for (size_t j = 0; j < out.rows(); j++)
    out.at(j, 1) = kf.add(out.at(j, 1), kf.embed(delta_w[j]));
  return out;
}

namespace {

// out[l] for l in [0, z]: the value sum_m coeff[m] * X^(d-m) * base(X)^m where
// base is degree <= 1, accumulated as a degree-d polynomial. Iterated products
// keep this simple: powers of base grow one degree per step.
void accumulate_row(const ExtField& kf, std::span<const uint16_t> table,
                    const ExtElem& b0, const ExtElem& b1, unsigned d,
                    std::span<ExtElem> out) {
  std::vector<ExtElem> pw(d + 1);  // base^m, ascending
  pw[0] = kf.one();
  for (unsigned m = 0; m <= d; m++) {
    // add table[m] * X^(d-m) * pw; pw has degree <= m
    if (table[m] != 0)
      for (unsigned l = 0; l <= m; l++)
        out[d - m + l] = kf.add(out[d - m + l], kf.scalar_mul(table[m], pw[l]));
    if (m == d) break;
    // pw *= (b0 + b1 X)
    for (unsigned l = m + 1; l-- > 0;) {
      ExtElem hi = kf.mul(pw[l], b1);
      pw[l + 1] = kf.add(pw[l + 1], hi);
      pw[l] = kf.mul(pw[l], b0);
    }
  }
}

}  // namespace

PolyVec relation_poly(const ExtField& kf, const RsdpInstance& inst,
                      const HomogeneousTables& tables, const PolyVec& pw_tilde) {
  if (pw_tilde.rows() != inst.k) throw std::runtime_error("witness rows mismatch");
  unsigned d = inst.restriction.z();
  PolyVec out(inst.n, d);
  for (unsigned j = 0; j < inst.k; j++)
    accumulate_row(kf, tables.c, pw_tilde.at(j, 0), pw_tilde.at(j, 1), d, out.row(j));
  for (unsigned i = 0; i < inst.r(); i++) {
    // L_i(X) = <a_i, P~_w(X)>, degree <= 1
    ExtElem l0{}, l1{};
    auto row = inst.a_row(i);
    for (unsigned j = 0; j < inst.k; j++) {
      if (row[j] == 0) continue;
      l0 = kf.add(l0, kf.scalar_mul(row[j], pw_tilde.at(j, 0)));
      l1 = kf.add(l1, kf.scalar_mul(row[j], pw_tilde.at(j, 1)));
    }
    accumulate_row(kf, tables.b_row(i), l0, l1, d, out.row(inst.k + i));
  }
  return out;
}

std::vector<ExtElem> relation_eval_at(const ExtField& kf, const RsdpInstance& inst,
                                      const HomogeneousTables& tables, const ExtElem& r,
                                      std::span<const ExtElem> v) {
  if (v.size() != inst.k) throw std::runtime_error("evaluation vector mismatch");
  unsigned d = inst.restriction.z();
  // r^(d-m) for m = 0..d
  std::vector<ExtElem> rp(d + 1);
  rp[d] = kf.one();
  for (unsigned m = d; m-- > 0;) rp[m] = kf.mul(rp[m + 1], r);
  auto eval_scalar = [&](std::span<const uint16_t> table, const ExtElem& x) {
    ExtElem acc{};
    ExtElem xp = kf.one();
    for (unsigned m = 0; m <= d; m++) {
      if (table[m] != 0) acc = kf.add(acc, kf.scalar_mul(table[m], kf.mul(rp[m], xp)));
      if (m < d) xp = kf.mul(xp, x);
    }
    return acc;
  };
  std::vector<ExtElem> out(inst.n);
  for (unsigned j = 0; j < inst.k; j++) out[j] = eval_scalar(tables.c, v[j]);
  for (unsigned i = 0; i < inst.r(); i++) {
    ExtElem li{};
    auto row = inst.a_row(i);
    for (unsigned j = 0; j < inst.k; j++)
      if (row[j] != 0) li = kf.add(li, kf.scalar_mul(row[j], v[j]));
    out[inst.k + i] = eval_scalar(tables.b_row(i), li);
  }
  return out;
}

PolyVec batch(const ExtField& kf, const BatchMatrix& gamma, const PolyVec& rel) {
  if (gamma.cols != rel.rows()) throw std::runtime_error("batch dimension mismatch");
  PolyVec out(gamma.rows, rel.degree_bound());
  for (size_t r = 0; r < gamma.rows; r++)
    for (size_t c = 0; c < gamma.cols; c++) {
      const ExtElem& g = gamma.at(r, c);
      if (kf.is_zero(g)) continue;
      for (unsigned dd = 0; dd <= rel.degree_bound(); dd++)
        out.at(r, dd) = kf.add(out.at(r, dd), kf.mul(g, rel.at(c, dd)));
    }
  return out;
}

PolyVec mask_and_truncate(const ExtField& kf, const PolyVec& p_u, const PolyVec& batched) {
  if (p_u.rows() != batched.rows()) throw std::runtime_error("mask dimension mismatch");
  unsigned d = batched.degree_bound();
  if (p_u.degree_bound() != d - 1) throw std::runtime_error("mask degree mismatch");
  for (size_t r = 0; r < batched.rows(); r++)
    if (!kf.is_zero(batched.at(r, d)))
      throw std::runtime_error("witness does not satisfy relation");
  PolyVec q(p_u.rows(), d - 1);
  for (size_t r = 0; r < q.rows(); r++)
    for (unsigned dd = 0; dd < d; dd++)
      q.at(r, dd) = kf.add(p_u.at(r, dd), batched.at(r, dd));
  return q;
}

}  // namespace rsdsig
