#include "nilq/cohomology.hpp"

#include <algorithm>

namespace nilq {

void CupData::validate() const {
  if (dim_h1 < 0 || dim_h2 < 0) throw InputError("cup data dimensions must be >= 0");
  if (static_cast<int>(components.size()) != dim_h2)
    throw InputError("cup data needs one matrix per H2 coordinate");
  for (const QMatrix& m : components) {
    if (m.rows() != dim_h1 || m.cols() != dim_h1)
      throw InputError("cup component has inconsistent dimensions");
    for (int i = 0; i < dim_h1; ++i)
      for (int j = 0; j < dim_h1; ++j)
        if (m.at(i, j) != -m.at(j, i))
          throw InputError("cup tensor is not antisymmetric");
  }
}

namespace {

void enumerate_tuples(int n, int p, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(static_cast<size_t>(p));
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == p) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
}

// Sign and target index of inserting k into the sorted tuple rest (which must
// not contain k); returns the position count for the permutation sign.
std::optional<std::pair<int, std::vector<int>>> insert_sorted(int k,
                                                              const std::vector<int>& rest) {
  std::vector<int> merged;
  merged.reserve(rest.size() + 1);
  int shifts = 0;
  bool placed = false;
  for (int v : rest) {
    if (v == k) return std::nullopt;
    if (!placed && v > k) {
      merged.push_back(k);
      placed = true;
    }
    if (!placed) ++shifts;
    merged.push_back(v);
  }
  if (!placed) merged.push_back(k);
  return std::make_pair(shifts, merged);
}

}  // namespace

CochainComplex::CochainComplex(const GradedQuotient& q, int max_p, int dim_cap)
    : q_(&q), n_(q.total_dim()) {
  if (n_ > dim_cap)
    throw CapExceeded("algebra dimension " + std::to_string(n_) +
                      " exceeds cohomology dimension cap " + std::to_string(dim_cap));
  if (max_p < 0 || max_p > n_) max_p = n_;

  for (int p = 0; p <= max_p; ++p) {
    std::vector<std::vector<int>> t;
    enumerate_tuples(n_, p, t);
    std::map<std::vector<int>, int> idx;
    for (size_t i = 0; i < t.size(); ++i) idx[t[i]] = static_cast<int>(i);
    tuples_.push_back(std::move(t));
    index_.push_back(std::move(idx));
  }

  // d_p columns: differentials of the dual basis tuples
  for (int p = 0; p <= max_p; ++p) {
    int rows = (p + 1 <= max_p) ? dim(p + 1) : 0;
    QMatrix m(rows, dim(p));
    if (rows > 0 && p >= 1) {
      const auto& row_tuples = tuples_[static_cast<size_t>(p + 1)];
      for (size_t ri = 0; ri < row_tuples.size(); ++ri) {
        const std::vector<int>& s = row_tuples[ri];
        for (size_t a = 0; a < s.size(); ++a) {
          for (size_t b = a + 1; b < s.size(); ++b) {
            int sign_ab = ((a + b) % 2 == 0) ? 1 : -1;  // (-1)^{a+b}, a<b
            std::vector<int> rest;
            rest.reserve(s.size() - 2);
            for (size_t t2 = 0; t2 < s.size(); ++t2)
              if (t2 != a && t2 != b) rest.push_back(s[t2]);
            for (const auto& [k2, c] : q.structure(s[a], s[b])) {
              auto ins = insert_sorted(k2, rest);
              if (!ins) continue;
              auto& [shifts, merged] = *ins;
              auto it = index_[static_cast<size_t>(p)].find(merged);
              if (it == index_[static_cast<size_t>(p)].end()) continue;
              int sign = sign_ab * ((shifts % 2 == 0) ? 1 : -1);
              m.at(static_cast<int>(ri), it->second) += Rat(sign) * c;
            }
          }
        }
      }
    }
    d_.push_back(std::move(m));
  }
}

int CochainComplex::dim(int p) const {
  if (p < 0 || p > max_p()) return 0;
  return static_cast<int>(tuples_[static_cast<size_t>(p)].size());
}

const std::vector<std::vector<int>>& CochainComplex::tuples(int p) const {
  return tuples_.at(static_cast<size_t>(p));
}

int CochainComplex::tuple_index(int p, const std::vector<int>& tuple) const {
  auto it = index_.at(static_cast<size_t>(p)).find(tuple);
  if (it == index_.at(static_cast<size_t>(p)).end()) throw Error("tuple not in basis");
  return it->second;
}

const QMatrix& CochainComplex::d(int p) const { return d_.at(static_cast<size_t>(p)); }

int CochainComplex::tuple_weight(int p, int index) const {
  int w = 0;
  for (int i : tuples_.at(static_cast<size_t>(p)).at(static_cast<size_t>(index)))
    w += q_->degree_of(i);
  return w;
}

CohomologyClass make_class(const CochainComplex& cx, int p, QVec representative) {
  if (static_cast<int>(representative.size()) != cx.dim(p))
    throw InputError("representative has wrong dimension");
  if (p + 1 <= cx.max_p()) {
    if (!is_zero_vec(cx.d(p).apply(representative)))
      throw InputError("representative is not closed");
  }
  CohomologyClass c;
  c.degree = p;
  c.representative = std::move(representative);
  std::optional<int> weight;
  bool homogeneous = true;
  for (size_t i = 0; i < c.representative.size(); ++i) {
    if (c.representative[i] == 0) continue;
    int w = cx.tuple_weight(p, static_cast<int>(i));
    if (!weight) weight = w;
    else if (*weight != w) homogeneous = false;
  }
  if (homogeneous && weight) c.weight = weight;
  return c;
}

namespace {

RowReducer coboundaries(const CochainComplex& cx, int p) {
  RowReducer red(cx.dim(p));
  if (p >= 1) {
    const QMatrix& dm = cx.d(p - 1);
    for (int j = 0; j < dm.cols(); ++j) {
      QVec col(static_cast<size_t>(dm.rows()), Rat(0));
      for (int i = 0; i < dm.rows(); ++i) col[static_cast<size_t>(i)] = dm.at(i, j);
      red.add(std::move(col));
    }
  }
  return red;
}

}  // namespace

bool class_is_zero(const CochainComplex& cx, const CohomologyClass& c) {
  return coboundaries(cx, c.degree).contains(c.representative);
}

bool classes_equal(const CochainComplex& cx, const CohomologyClass& a,
                   const CohomologyClass& b) {
  if (a.degree != b.degree) return false;
  QVec diff = a.representative;
  for (size_t i = 0; i < diff.size(); ++i) diff[i] -= b.representative[i];
  return coboundaries(cx, a.degree).contains(diff);
}

BettiResult betti(const CochainComplex& cx, int p) {
  BettiResult res;
  if (p < 0 || p > cx.max_p()) return res;
  std::vector<QVec> kernel;
  if (p + 1 <= cx.max_p()) {
    kernel = nullspace(cx.d(p));
  } else {
    // top degree: everything is closed
    for (int i = 0; i < cx.dim(p); ++i) {
      QVec v(static_cast<size_t>(cx.dim(p)), Rat(0));
      v[static_cast<size_t>(i)] = 1;
      kernel.push_back(std::move(v));
    }
  }
  RowReducer red = coboundaries(cx, p);
  int boundary_rank = red.rank();
  for (const QVec& v : kernel) {
    if (red.add(v)) res.representatives.push_back(v);
  }
  res.dim = red.rank() - boundary_rank;
  return res;
}

CohomologyClass dual_class(const CochainComplex& cx, int flat_index) {
  QVec v(static_cast<size_t>(cx.dim(1)), Rat(0));
  v.at(static_cast<size_t>(flat_index)) = 1;
  return make_class(cx, 1, std::move(v));
}

QVec wedge11(const CochainComplex& cx, const QVec& a, const QVec& b) {
  const int n = cx.algebra_dim();
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw InputError("wedge11: 1-cochain dimension mismatch");
  QVec out(static_cast<size_t>(cx.dim(2)), Rat(0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Rat v = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)] -
              a[static_cast<size_t>(j)] * b[static_cast<size_t>(i)];
      if (v != 0) out[static_cast<size_t>(cx.tuple_index(2, {i, j}))] = v;
    }
  }
  return out;
}

CohomologyClass cup(const CochainComplex& cx, const CohomologyClass& a,
                    const CohomologyClass& b) {
  if (a.degree != 1 || b.degree != 1) throw InputError("cup needs degree-1 classes");
  return make_class(cx, 2, wedge11(cx, a.representative, b.representative));
}

namespace {

std::optional<QVec> solve_ordered(const QMatrix& m, const QVec& rhs, SolverOrder order) {
  if (order == SolverOrder::Standard) return solve(m, rhs);
  // reversed variable preference: permute columns, solve, permute back
  QMatrix perm(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) perm.at(i, j) = m.at(i, m.cols() - 1 - j);
  auto x = solve(perm, rhs);
  if (!x) return std::nullopt;
  QVec out(static_cast<size_t>(m.cols()), Rat(0));
  for (int j = 0; j < m.cols(); ++j) out[static_cast<size_t>(m.cols() - 1 - j)] = (*x)[static_cast<size_t>(j)];
  return out;
}

}  // namespace

MasseyResult massey(const CochainComplex& cx, const CohomologyClass& a,
                    const CohomologyClass& b, const CohomologyClass& c,
                    SolverOrder order) {
  if (a.degree != 1 || b.degree != 1 || c.degree != 1)
    throw InputError("massey needs degree-1 classes");
  MasseyResult res;

  RowReducer bdry = coboundaries(cx, 2);
  QVec ab = wedge11(cx, a.representative, b.representative);
  QVec bc = wedge11(cx, b.representative, c.representative);
  if (!bdry.contains(ab) || !bdry.contains(bc)) {
    res.status = MasseyResult::Status::Undefined;
    return res;
  }

  // ds = -a^b, dt = -b^c; least-index solutions
  QVec neg_ab = ab, neg_bc = bc;
  for (auto& x : neg_ab) x = -x;
  for (auto& x : neg_bc) x = -x;
  auto s = solve_ordered(cx.d(1), neg_ab, order);
  auto t = solve_ordered(cx.d(1), neg_bc, order);
  if (!s || !t) throw Error("internal: coboundary system inconsistent");

  QVec value = wedge11(cx, a.representative, *t);
  QVec sc = wedge11(cx, *s, c.representative);
  for (size_t i = 0; i < value.size(); ++i) value[i] += sc[i];

  // indeterminacy a^H1 + H1^c
  BettiResult h1 = betti(cx, 1);
  RowReducer span = coboundaries(cx, 2);
  int base_rank = span.rank();
  for (const QVec& h : h1.representatives) {
    QVec w1 = wedge11(cx, a.representative, h);
    QVec w2 = wedge11(cx, h, c.representative);
    if (span.add(w1)) res.indeterminacy.push_back(w1);
    if (span.add(w2)) res.indeterminacy.push_back(w2);
  }
  res.indeterminacy_dim = span.rank() - base_rank;

  res.value = make_class(cx, 2, value);
  res.status = span.contains(value) ? MasseyResult::Status::Vanishing
                                    : MasseyResult::Status::NonVanishing;
  return res;
}

ExtensionObstruction extension_lift_obstruction(const GradedQuotient& g,
                                                const GradedQuotient& h,
                                                const QMatrix& omega, int vdim,
                                                const QMatrix& phi) {
  const int ng = g.total_dim();
  const int nh = h.total_dim();
  CochainComplex cg(g, std::min(3, ng));
  CochainComplex ch(h, std::min(3, nh));
  if (omega.rows() != ch.dim(2) || omega.cols() != vdim)
    throw InputError("omega must be a Lambda^2(h)-by-V matrix");
  if (phi.rows() != nh || phi.cols() != ng)
    throw InputError("phi must be an h-by-g matrix");

  // omega must be closed, columnwise
  if (ch.max_p() >= 3) {
    for (int v = 0; v < vdim; ++v) {
      QVec col(static_cast<size_t>(ch.dim(2)), Rat(0));
      for (int i = 0; i < ch.dim(2); ++i) col[static_cast<size_t>(i)] = omega.at(i, v);
      if (!is_zero_vec(ch.d(2).apply(col)))
        throw InputError("omega is not a cocycle");
    }
  }

  // phi must be a homomorphism on structure constants
  std::vector<QVec> phi_cols(static_cast<size_t>(ng));
  for (int j = 0; j < ng; ++j) {
    QVec col(static_cast<size_t>(nh), Rat(0));
    for (int i = 0; i < nh; ++i) col[static_cast<size_t>(i)] = phi.at(i, j);
    phi_cols[static_cast<size_t>(j)] = std::move(col);
  }
  for (int i = 0; i < ng; ++i) {
    for (int j = i + 1; j < ng; ++j) {
      QVec lhs(static_cast<size_t>(nh), Rat(0));
      for (const auto& [k2, c] : g.structure(i, j))
        for (int r = 0; r < nh; ++r)
          lhs[static_cast<size_t>(r)] += c * phi_cols[static_cast<size_t>(k2)][static_cast<size_t>(r)];
      QVec rhs = h.bracket_coords(phi_cols[static_cast<size_t>(i)], phi_cols[static_cast<size_t>(j)]);
      if (lhs != rhs) throw InputError("phi is not a Lie homomorphism");
    }
  }

  // pullback: (phi^* omega)(e_i, e_j) = omega(phi e_i, phi e_j)
  ExtensionObstruction res;
  res.obstruction = QMatrix(cg.dim(2), vdim);
  for (int i = 0; i < ng; ++i) {
    for (int j = i + 1; j < ng; ++j) {
      int row = cg.tuple_index(2, {i, j});
      for (int p = 0; p < nh; ++p) {
        for (int q2 = p + 1; q2 < nh; ++q2) {
          Rat f = phi.at(p, i) * phi.at(q2, j) - phi.at(p, j) * phi.at(q2, i);
          if (f == 0) continue;
          int hrow = ch.tuple_index(2, {p, q2});
          for (int v = 0; v < vdim; ++v)
            res.obstruction.at(row, v) += f * omega.at(hrow, v);
        }
      }
    }
  }

  // class vanishes iff d lambda = -pullback is solvable columnwise
  QMatrix lambda(ng, vdim);
  res.vanishes = true;
  for (int v = 0; v < vdim; ++v) {
    QVec rhs(static_cast<size_t>(cg.dim(2)), Rat(0));
    for (int i = 0; i < cg.dim(2); ++i) rhs[static_cast<size_t>(i)] = -res.obstruction.at(i, v);
    auto sol = solve(cg.d(1), rhs);
    if (!sol) {
      res.vanishes = false;
      break;
    }
    for (int i = 0; i < ng; ++i) lambda.at(i, v) = (*sol)[static_cast<size_t>(i)];
  }
  if (res.vanishes) {
    // verify the lift (phi, lambda) against the extension bracket
    for (int i = 0; i < ng; ++i) {
      for (int j = i + 1; j < ng; ++j) {
        for (int v = 0; v < vdim; ++v) {
          Rat lhs(0);
          for (const auto& [k2, c] : g.structure(i, j)) lhs += c * lambda.at(k2, v);
          if (lhs != res.obstruction.at(cg.tuple_index(2, {i, j}), v))
            throw Error("internal: produced lift is not a homomorphism");
        }
      }
    }
    res.correcting_cochain = std::move(lambda);
  }
  return res;
}

bool pairing_nondegenerate(const CupData& data) {
  data.validate();
  if (data.dim_h1 == 0) return true;
  QMatrix contraction(data.dim_h1, data.dim_h1 * data.dim_h2);
  for (int k = 0; k < data.dim_h2; ++k)
    for (int i = 0; i < data.dim_h1; ++i)
      for (int j = 0; j < data.dim_h1; ++j)
        contraction.at(i, k * data.dim_h1 + j) = data.components[static_cast<size_t>(k)].at(i, j);
  return contraction.rank() == data.dim_h1;
}

}  // namespace nilq
