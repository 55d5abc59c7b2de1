#include "nilq/quotient.hpp"

#include <sstream>

namespace nilq {

namespace {

// Per-degree ideal data shared by nilpotent_quotient and the minimal-relation
// computations: J_n rows, plus the relation components that enlarged J_n past
// the saturated part [F_1, J_{n-1}].
struct IdealLayers {
  std::vector<std::vector<Word>> free_words;  // degree n at index n-1
  std::vector<RowReducer> ideal;
  std::vector<int> minimal_indices;  // into pres.homogeneous_relations()
  std::vector<int> minimal_degrees;  // matching degrees, ascending
};

QVec word_coords(const LieElement& e, const std::vector<Word>& words) {
  QVec v(words.size(), Rat(0));
  for (size_t i = 0; i < words.size(); ++i) v[i] = e.coeff(words[i]);
  return v;
}

LieElement from_coords(const QVec& v, const std::vector<Word>& words,
                       const Alphabet& alphabet, int cap) {
  LieElement e(alphabet, cap);
  for (size_t i = 0; i < words.size(); ++i)
    if (v[i] != 0) e.add_term(words[i], v[i]);
  return e;
}

IdealLayers build_ideal_layers(const LiePresentation& pres, int max_class) {
  const int c = pres.class_cap();
  if (c > max_class)
    throw CapExceeded("class cap " + std::to_string(c) + " exceeds hard limit " +
                      std::to_string(max_class));
  const Alphabet& alphabet = pres.alphabet();
  const int k = alphabet.size();

  IdealLayers layers;
  layers.free_words.reserve(static_cast<size_t>(c));
  for (int n = 1; n <= c; ++n) layers.free_words.push_back(lyndon_words(k, n));

  for (int n = 1; n <= c; ++n) {
    const auto& words = layers.free_words[static_cast<size_t>(n - 1)];
    RowReducer red(static_cast<int>(words.size()));
    // saturate: bracket generators with the degree-(n-1) ideal rows
    if (n >= 3) {
      const auto& below_words = layers.free_words[static_cast<size_t>(n - 2)];
      const RowReducer& below = layers.ideal[static_cast<size_t>(n - 2)];
      for (const QVec& row : below.basis()) {
        LieElement elem = from_coords(row, below_words, alphabet, c);
        for (int g = 0; g < k; ++g) {
          LieElement br = bracket(LieElement::generator(alphabet, g, c), elem);
          red.add(word_coords(br, words));
        }
      }
    }
    const auto& components = pres.homogeneous_relations();
    for (size_t i = 0; i < components.size(); ++i) {
      const LieElement& r = components[i];
      std::vector<int> ls = r.lengths();
      if (ls.size() != 1 || ls[0] != n) continue;
      if (red.add(word_coords(r, words))) {
        layers.minimal_indices.push_back(static_cast<int>(i));
        layers.minimal_degrees.push_back(n);
      }
    }
    layers.ideal.push_back(std::move(red));
  }
  return layers;
}

}  // namespace

std::string GradedQuotient::basis_name(int flat) const {
  return tree_to_string(standard_bracketing(basis_elt(flat).word), alphabet_);
}

QVec GradedQuotient::reduce_degree(int degree, const QVec& free_coords) const {
  return ideal_[static_cast<size_t>(degree - 1)].reduce(free_coords);
}

QVec GradedQuotient::coords(const LieElement& e) const {
  if (e.alphabet() != alphabet_) throw InputError("element over a different generator set");
  QVec out(basis_.size(), Rat(0));
  for (int n = 1; n <= class_cap_; ++n) {
    const auto& words = free_words_[static_cast<size_t>(n - 1)];
    QVec v(words.size(), Rat(0));
    bool any = false;
    for (size_t i = 0; i < words.size(); ++i) {
      Rat ci = e.coeff(words[i]);
      if (ci != 0) {
        v[i] = ci;
        any = true;
      }
    }
    if (!any) continue;
    QVec r = reduce_degree(n, v);
    for (size_t i = 0; i < words.size(); ++i) {
      if (r[i] == 0) continue;
      auto it = word_index_.find(words[i]);
      if (it == word_index_.end()) throw Error("internal: residual on a pivot word");
      out[static_cast<size_t>(it->second)] = r[i];
    }
  }
  return out;
}

LieElement GradedQuotient::element(const QVec& v) const {
  if (v.size() != basis_.size()) throw InputError("coordinate length mismatch");
  LieElement e(alphabet_, class_cap_);
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) e.add_term(basis_[i].word, v[i]);
  return e;
}

const SparseVec& GradedQuotient::structure(int i, int j) const {
  return structure_.at(static_cast<size_t>(i) * basis_.size() + static_cast<size_t>(j));
}

QVec GradedQuotient::bracket_coords(const QVec& a, const QVec& b) const {
  if (a.size() != basis_.size() || b.size() != basis_.size())
    throw InputError("coordinate length mismatch");
  QVec out(basis_.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      Rat f = a[i] * b[j];
      for (const auto& [k2, c] : structure(static_cast<int>(i), static_cast<int>(j)))
        out[static_cast<size_t>(k2)] += f * c;
    }
  }
  return out;
}

const RowReducer& GradedQuotient::ideal_rows(int degree) const {
  return ideal_.at(static_cast<size_t>(degree - 1));
}

const std::vector<Word>& GradedQuotient::free_words(int degree) const {
  return free_words_.at(static_cast<size_t>(degree - 1));
}

GradedQuotient nilpotent_quotient(const LiePresentation& pres, int max_class) {
  IdealLayers layers = build_ideal_layers(pres, max_class);
  const int c = pres.class_cap();
  const Alphabet& alphabet = pres.alphabet();

  GradedQuotient q;
  q.alphabet_ = alphabet;
  q.class_cap_ = c;
  q.free_words_ = std::move(layers.free_words);
  q.ideal_ = std::move(layers.ideal);

  for (int n = 1; n <= c; ++n) {
    const auto& words = q.free_words_[static_cast<size_t>(n - 1)];
    std::vector<bool> is_pivot(words.size(), false);
    for (int p : q.ideal_[static_cast<size_t>(n - 1)].pivot_columns())
      is_pivot[static_cast<size_t>(p)] = true;
    int dim = 0;
    for (size_t i = 0; i < words.size(); ++i) {
      if (is_pivot[i]) continue;
      q.word_index_[words[i]] = static_cast<int>(q.basis_.size());
      q.basis_.push_back({n, words[i]});
      ++dim;
    }
    q.dims_.push_back(dim);
    if (dim > 0) q.nilpotency_class_ = n;
  }

  // structure constants from the free bracket reduced modulo the ideal
  const size_t total = q.basis_.size();
  q.structure_.assign(total * total, SparseVec{});
  for (size_t i = 0; i < total; ++i) {
    for (size_t j = i + 1; j < total; ++j) {
      int m = q.basis_[i].degree + q.basis_[j].degree;
      if (m > c) continue;
      LieElement bi(alphabet, c), bj(alphabet, c);
      bi.add_term(q.basis_[i].word, 1);
      bj.add_term(q.basis_[j].word, 1);
      QVec v = q.coords(bracket(bi, bj));
      SparseVec sv, nsv;
      for (size_t k2 = 0; k2 < total; ++k2) {
        if (v[k2] != 0) {
          sv.emplace_back(static_cast<int>(k2), v[k2]);
          nsv.emplace_back(static_cast<int>(k2), -v[k2]);
        }
      }
      q.structure_[i * total + j] = std::move(sv);
      q.structure_[j * total + i] = std::move(nsv);
    }
  }
  return q;
}

std::vector<int> lcs_dims(const GradedQuotient& q) {
  const int n = q.total_dim();
  std::vector<int> out;
  if (n == 0) return out;
  // gamma_1 = everything
  std::vector<QVec> layer;
  for (int i = 0; i < n; ++i) {
    QVec e(static_cast<size_t>(n), Rat(0));
    e[static_cast<size_t>(i)] = 1;
    layer.push_back(std::move(e));
  }
  int prev_rank = n;
  for (int depth = 1; depth <= q.nilpotency_class(); ++depth) {
    RowReducer next(n);
    for (int i = 0; i < n; ++i) {
      QVec e(static_cast<size_t>(n), Rat(0));
      e[static_cast<size_t>(i)] = 1;
      for (const QVec& v : layer) next.add(q.bracket_coords(e, v));
    }
    out.push_back(prev_rank - next.rank());
    prev_rank = next.rank();
    layer = next.basis();
  }
  return out;
}

std::vector<int> minimal_relation_degrees(const LiePresentation& pres, int max_class) {
  return build_ideal_layers(pres, max_class).minimal_degrees;
}

std::vector<int> minimal_relation_subset(const LiePresentation& pres, int max_class) {
  return build_ideal_layers(pres, max_class).minimal_indices;
}

}  // namespace nilq
