#include "nilq/bch.hpp"

#include <map>
#include <mutex>

namespace nilq {

LieElement bch(const LieElement& a, const LieElement& b, int klass, int max_class) {
  a.require_compatible(b);
  if (klass < 1) throw InputError("bch class must be >= 1");
  if (klass > max_class)
    throw CapExceeded("bch class " + std::to_string(klass) + " exceeds hard limit " +
                      std::to_string(max_class));
  const Alphabet& alphabet = a.alphabet();
  TensorElement ta = expand_lie(a.truncated(klass));
  TensorElement tb = expand_lie(b.truncated(klass));
  // expand_lie inherits the element cap; recap both at the bch class
  TensorElement xa(alphabet.size(), klass), xb(alphabet.size(), klass);
  for (const auto& [w, c] : ta.terms()) xa.add_term(w, c);
  for (const auto& [w, c] : tb.terms()) xb.add_term(w, c);
  TensorElement z = log_truncated(exp_truncated(xa) * exp_truncated(xb));
  return lie_project(z, alphabet, klass);
}

const LieElement& universal_bch(int klass, int max_class) {
  if (klass < 1) throw InputError("bch class must be >= 1");
  if (klass > max_class)
    throw CapExceeded("bch class " + std::to_string(klass) + " exceeds hard limit " +
                      std::to_string(max_class));
  static std::mutex mu;
  static std::map<int, LieElement> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(klass);
  if (it != cache.end()) return it->second;
  Alphabet ab({{"a"}, {"b"}});
  LieElement x = LieElement::generator(ab, 0, klass);
  LieElement y = LieElement::generator(ab, 1, klass);
  return cache.emplace(klass, bch(x, y, klass, max_class)).first->second;
}

GroupElement group_identity(const GradedQuotient& q) {
  return {&q, QVec(static_cast<size_t>(q.total_dim()), Rat(0))};
}

GroupElement group_element(const GradedQuotient& q, const LieElement& log) {
  return {&q, q.coords(log)};
}

namespace {

// Evaluates a bracket tree over two-letter leaves at concrete quotient
// coordinates, using the structure constants.
QVec eval_tree(const GradedQuotient& q, const BracketTree& t, const QVec& a, const QVec& b) {
  if (t.is_leaf()) return t.leaf == 0 ? a : b;
  return q.bracket_coords(eval_tree(q, *t.left, a, b), eval_tree(q, *t.right, a, b));
}

}  // namespace

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
  if (a.quotient != b.quotient)
    throw InputError("group elements live in different quotients");
  const GradedQuotient& q = *a.quotient;
  int klass = std::max(q.nilpotency_class(), 1);
  const LieElement& series = universal_bch(klass);
  QVec out(static_cast<size_t>(q.total_dim()), Rat(0));
  for (const auto& [w, c] : series.terms()) {
    QVec v = eval_tree(q, *standard_bracketing(w), a.log_coords, b.log_coords);
    for (size_t i = 0; i < out.size(); ++i)
      if (v[i] != 0) out[i] += c * v[i];
  }
  return {&q, std::move(out)};
}

GroupElement group_inv(const GroupElement& a) {
  GroupElement r = a;
  for (auto& c : r.log_coords) c = -c;
  return r;
}

AutomorphismResult automorphism_check(const GradedQuotient& q,
                                      const std::vector<LieElement>& images) {
  const int k = q.alphabet().size();
  const int n = q.total_dim();
  if (static_cast<int>(images.size()) != k)
    throw InputError("one image per generator required");
  std::vector<QVec> image_coords;
  for (const auto& im : images) image_coords.push_back(q.coords(im));

  AutomorphismResult res;
  res.matrix = QMatrix(n, n);

  // extend over the basis: evaluate each basis word's bracketing at the images
  std::vector<QVec> basis_images(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Word& w = q.basis_elt(i).word;
    auto eval = [&](auto&& self, const BracketTree& t) -> QVec {
      if (t.is_leaf()) return image_coords[static_cast<size_t>(t.leaf)];
      return q.bracket_coords(self(self, *t.left), self(self, *t.right));
    };
    basis_images[static_cast<size_t>(i)] = eval(eval, *standard_bracketing(w));
    for (int r = 0; r < n; ++r) res.matrix.at(r, i) = basis_images[static_cast<size_t>(i)][static_cast<size_t>(r)];
  }

  // Lie endomorphism: T[e_i, e_j] = [T e_i, T e_j] on all basis pairs
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      QVec lhs(static_cast<size_t>(n), Rat(0));
      for (const auto& [k2, c] : q.structure(i, j))
        for (size_t r = 0; r < lhs.size(); ++r)
          lhs[r] += c * basis_images[static_cast<size_t>(k2)][r];
      QVec rhs = q.bracket_coords(basis_images[static_cast<size_t>(i)],
                                  basis_images[static_cast<size_t>(j)]);
      for (size_t r = 0; r < lhs.size(); ++r) {
        if (lhs[r] != rhs[r]) {
          res.ok = false;
          res.reason = "bracket not preserved on basis pair (" + q.basis_name(i) +
                       ", " + q.basis_name(j) + ")";
          res.counterexample = {i, j};
          return res;
        }
      }
    }
  }

  if (res.matrix.rank() != n) {
    res.ok = false;
    res.reason = "not invertible";
    return res;
  }
  res.ok = true;

  // consistency assertion: BCH equivariance on a fixed sample
  if (n > 0 && q.nilpotency_class() >= 1) {
    auto apply = [&](const QVec& v) {
      QVec out(static_cast<size_t>(n), Rat(0));
      for (int i = 0; i < n; ++i)
        if (v[static_cast<size_t>(i)] != 0)
          for (size_t r = 0; r < out.size(); ++r)
            out[r] += v[static_cast<size_t>(i)] * basis_images[static_cast<size_t>(i)][r];
      return out;
    };
    std::vector<QVec> sample;
    for (int i = 0; i < std::min(n, 3); ++i) {
      QVec v(static_cast<size_t>(n), Rat(0));
      v[static_cast<size_t>(i)] = Rat(i + 1, 2);
      v.back() = Rat(1, 3);
      sample.push_back(std::move(v));
    }
    for (const QVec& u : sample) {
      for (const QVec& v : sample) {
        GroupElement gu{&q, u}, gv{&q, v};
        QVec lhs = apply(group_mul(gu, gv).log_coords);
        GroupElement fu{&q, apply(u)}, fv{&q, apply(v)};
        QVec rhs = group_mul(fu, fv).log_coords;
        if (lhs != rhs) throw Error("internal: BCH equivariance violated by automorphism");
      }
    }
  }
  return res;
}

LatticeResult lattice_closed(const GradedQuotient& q, const LatticeSpec& lattice) {
  const int n = q.total_dim();
  if (static_cast<int>(lattice.basis.size()) != n)
    throw InputError("lattice basis must have exactly total_dim elements");
  QMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    QVec col = q.coords(lattice.basis[static_cast<size_t>(j)]);
    for (int i = 0; i < n; ++i) m.at(i, j) = col[static_cast<size_t>(i)];
  }
  if (m.rank() != n) throw InputError("lattice basis does not span the quotient");

  LatticeResult res;
  for (int i = 0; i < n && res.closed; ++i) {
    for (int j = 0; j < n && res.closed; ++j) {
      GroupElement a{&q, QVec{}}, b{&q, QVec{}};
      a.log_coords = q.coords(lattice.basis[static_cast<size_t>(i)]);
      b.log_coords = q.coords(lattice.basis[static_cast<size_t>(j)]);
      GroupElement prod = group_mul(a, b);
      auto x = solve(m, prod.log_coords);
      if (!x) throw Error("internal: spanning lattice failed to solve");
      for (int r = 0; r < n; ++r) {
        if (!is_integer((*x)[static_cast<size_t>(r)])) {
          res.closed = false;
          res.offending_pair = {i, j};
          res.offending_coord = r;
          res.offending_value = (*x)[static_cast<size_t>(r)];
          break;
        }
      }
    }
  }
  // inverses: -log always has integral coordinates when the element does,
  // but check anyway so the report can cite it
  for (int i = 0; i < n && res.closed; ++i) {
    GroupElement a{&q, q.coords(lattice.basis[static_cast<size_t>(i)])};
    auto x = solve(m, group_inv(a).log_coords);
    for (int r = 0; r < n; ++r) {
      if (!is_integer((*x)[static_cast<size_t>(r)])) {
        res.closed = false;
        res.offending_pair = {i, i};
        res.offending_coord = r;
        res.offending_value = (*x)[static_cast<size_t>(r)];
        break;
      }
    }
  }
  return res;
}

}  // namespace nilq
