#include "gpp/linearity.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "gpp/error.hpp"

namespace gpp {

std::vector<int> adjacent_transposition_word(const Perm& p) {
  std::vector<int> arr = p.images();
  int n = static_cast<int>(arr.size());
  std::vector<int> swaps;
  bool sorted = false;
  while (!sorted) {
    sorted = true;
    for (int i = 0; i + 1 < n; ++i)
      if (arr[static_cast<std::size_t>(i)] > arr[static_cast<std::size_t>(i + 1)]) {
        std::swap(arr[static_cast<std::size_t>(i)], arr[static_cast<std::size_t>(i + 1)]);
        swaps.push_back(i);
        sorted = false;
      }
  }
  // sorting multiplied p on the right by each transposition, so p equals the
  // product of the swaps in reverse order
  std::vector<int> word(swaps.rbegin(), swaps.rend());
  Perm check = Perm::identity(n);
  for (int i : word) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(x)] = x;
    std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(i + 1)]);
    check = check * Perm(std::move(img));
  }
  if (check != p) throw InternalCheckFailed("transposition factorization failed");
  return word;
}

SymmetricEmbedding embed_symmetric(const PairFamily& fam) {
  SymmetricEmbedding emb;
  std::vector<CoxeterPair> pairs;
  for (int v = 0; v < fam.n(); ++v) {
    const VertexPair& p = fam.pair(v);
    CoxeterPair cp;
    switch (p.kind) {
      case VKind::FreeZ:
        cp.w = CoxeterMatrix::inf_dihedral("s", "t");
        cp.parabolic = {0};
        break;
      case VKind::InfDih:
        cp.w = CoxeterMatrix::inf_dihedral("s", "t");
        cp.parabolic = {};
        break;
      default: {
        Subgroup n_v = core(p.group, p.a);
        if (n_v.order() != 1)
          throw HypothesisRefused(
              "the coset action at vertex " + fam.graph().labels()[static_cast<std::size_t>(v)] +
              " is not effective (the subgroup contains a nontrivial normal subgroup of order " +
              std::to_string(n_v.order()) + "); reduce the family first");
        cp.w = CoxeterMatrix::symmetric_group(static_cast<int>(p.cosets.size()), "s");
        for (int i = 1; i < p.cosets.size() - 1; ++i) cp.parabolic.push_back(i);
        break;
      }
    }
    pairs.push_back(std::move(cp));
  }
  emb.target = coxeter_from_pairs(fam.graph(), pairs);
  int off = 0;
  for (int v = 0; v < fam.n(); ++v) {
    emb.block_offset.push_back(off);
    emb.block_size.push_back(pairs[static_cast<std::size_t>(v)].w.n());
    off += pairs[static_cast<std::size_t>(v)].w.n();
  }
  emb.blocks = std::move(pairs);

  for (int v = 0; v < fam.n(); ++v) {
    const VertexPair& p = fam.pair(v);
    std::vector<std::pair<std::string, std::vector<int>>> words;
    int o = emb.block_offset[static_cast<std::size_t>(v)];
    switch (p.kind) {
      case VKind::FreeZ:
        words.emplace_back("x", std::vector<int>{o, o + 1});
        break;
      case VKind::InfDih:
        words.emplace_back("s", std::vector<int>{o});
        words.emplace_back("t", std::vector<int>{o + 1});
        break;
      default:
        for (const Perm& g : p.group->generators()) {
          std::vector<int> img(static_cast<std::size_t>(p.cosets.size()));
          for (int x = 0; x < p.cosets.size(); ++x) img[static_cast<std::size_t>(x)] = p.cosets.act(g, x);
          std::vector<int> word;
          for (int i : adjacent_transposition_word(Perm(std::move(img)))) word.push_back(o + i);
          words.emplace_back(g.to_cycles(), std::move(word));
        }
        break;
    }
    emb.gen_words.push_back(std::move(words));
  }
  return emb;
}

PairFamily reduce_family(const PairFamily& fam) {
  std::vector<VertexPair> pairs;
  for (int v = 0; v < fam.n(); ++v) {
    const VertexPair& p = fam.pair(v);
    if (!p.is_finite()) {
      pairs.push_back(p);
      continue;
    }
    Subgroup n_v = core(p.group, p.a);
    if (n_v.order() == 1) {
      pairs.push_back(p);
      continue;
    }
    int m = p.cosets.size();
    auto action_perm = [&](const Perm& g) {
      std::vector<int> img(static_cast<std::size_t>(m));
      for (int x = 0; x < m; ++x) img[static_cast<std::size_t>(x)] = p.cosets.act(g, x);
      return Perm(std::move(img));
    };
    std::vector<Perm> ggens, agens;
    for (const Perm& g : p.group->generators()) ggens.push_back(action_perm(g));
    for (const Perm& a : p.a.generators()) agens.push_back(action_perm(a));
    GroupPtr quotient =
        FiniteGroup::make(m, std::move(ggens), p.group->label().empty() ? "" : p.group->label() + "/N");
    pairs.push_back(VertexPair::finite(quotient, std::move(agens)));
  }
  return PairFamily(fam.graph(), std::move(pairs));
}

MatrixEngine::MatrixEngine(const PairFamily& fam)
    : fam_(fam), emb_(embed_symmetric(fam)), tits_(tits_rep(emb_.target)) {}

IMat MatrixEngine::letter_matrix(int v, const VElem& g) const {
  std::pair<int, std::string> key{v, velem_str(g)};
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  int o = emb_.block_offset[static_cast<std::size_t>(v)];
  IMat result = IMat::identity(dim());
  if (std::holds_alternative<Perm>(g)) {
    const VertexPair& p = fam_.pair(v);
    if (!p.contains(g)) throw InvalidInput("letter value not in the vertex group");
    const Perm& perm = std::get<Perm>(g);
    std::vector<int> img(static_cast<std::size_t>(p.cosets.size()));
    for (int x = 0; x < p.cosets.size(); ++x) img[static_cast<std::size_t>(x)] = p.cosets.act(perm, x);
    std::vector<int> word;
    for (int i : adjacent_transposition_word(Perm(std::move(img)))) word.push_back(o + i);
    result = tits_.word_matrix(word);
  } else if (std::holds_alternative<long long>(g)) {
    long long nn = std::get<long long>(g);
    IMat st = tits_.gen[static_cast<std::size_t>(o)] * tits_.gen[static_cast<std::size_t>(o + 1)];
    if (nn >= 0)
      result = st.pow(nn);
    else {
      IMat ts = tits_.gen[static_cast<std::size_t>(o + 1)] * tits_.gen[static_cast<std::size_t>(o)];
      result = ts.pow(-nn);
    }
  } else {
    std::vector<int> word;
    for (int x : std::get<DihElem>(g).st_word()) word.push_back(o + x);
    result = tits_.word_matrix(word);
  }
  cache_.emplace(std::move(key), result);
  return result;
}

IMat MatrixEngine::raw_matrix(const RawWord& raw) const {
  IMat acc = IMat::identity(dim());
  for (const auto& [v, g] : raw) acc = acc * letter_matrix(v, g);
  return acc;
}

IMat MatrixEngine::element_matrix(const GPElement& x) const {
  return raw_matrix(to_raw(fam_, x));
}

MatrixEngine::RelationReport MatrixEngine::verify_relations() const {
  RelationReport rep;
  // multiplication tables of the finite vertex groups
  for (int v = 0; v < fam_.n() && rep.ok; ++v) {
    const VertexPair& p = fam_.pair(v);
    if (!p.is_finite()) continue;
    std::vector<IMat> mats;
    for (const Perm& g : p.group->elements()) mats.push_back(letter_matrix(v, VElem(g)));
    for (std::size_t i = 0; i < p.group->order() && rep.ok; ++i)
      for (std::size_t j = 0; j < p.group->order(); ++j) {
        int k = p.group->index_of(p.group->elements()[i] * p.group->elements()[j]);
        ++rep.products_checked;
        if (!(mats[i] * mats[j] == mats[static_cast<std::size_t>(k)])) {
          rep.ok = false;
          rep.failure = "vertex-group multiplication is not respected at vertex " +
                        fam_.graph().labels()[static_cast<std::size_t>(v)];
          break;
        }
      }
  }
  // commutators imposed by the presentation
  auto commute = [&](const IMat& a, const IMat& b) { return a * b == b * a; };
  for (int v = 0; v < fam_.n() && rep.ok; ++v)
    for (int w = 0; w < fam_.n() && rep.ok; ++w) {
      if (v == w) continue;
      const VertexPair& pv = fam_.pair(v);
      const VertexPair& pw = fam_.pair(w);
      if (fam_.adjacent(v, w)) {
        if (w < v) continue;  // unordered once
        for (const VElem& a : pv.group_generators())
          for (const VElem& b : pw.group_generators()) {
            ++rep.commutators_checked;
            if (!commute(letter_matrix(v, a), letter_matrix(w, b))) {
              rep.ok = false;
              rep.failure = "edge commutator fails between vertices " +
                            fam_.graph().labels()[static_cast<std::size_t>(v)] + " and " +
                            fam_.graph().labels()[static_cast<std::size_t>(w)];
            }
          }
      } else {
        for (const VElem& a : pv.subgroup_generators())
          for (const VElem& b : pw.group_generators()) {
            ++rep.commutators_checked;
            if (!commute(letter_matrix(v, a), letter_matrix(w, b))) {
              rep.ok = false;
              rep.failure = "subgroup commutator fails between vertices " +
                            fam_.graph().labels()[static_cast<std::size_t>(v)] + " and " +
                            fam_.graph().labels()[static_cast<std::size_t>(w)];
            }
          }
      }
    }
  return rep;
}

LinearityReport linearity_pipeline(const PairFamily& fam, int sample_length, const Limits& lim) {
  LinearityReport rep;
  MatrixEngine engine(fam);
  rep.matrix_dim = engine.dim();
  auto rel = engine.verify_relations();
  rep.relations_ok = rel.ok;
  rep.failure = rel.failure;
  rep.products_checked = rel.products_checked;
  rep.commutators_checked = rel.commutators_checked;
  if (!rel.ok) return rep;

  // Distinct normal forms in the ball must give distinct matrices. Matrices
  // are carried incrementally along the BFS; relation verification above
  // makes the letter product independent of the path.
  std::map<GPElement, IMat> mats;
  std::map<std::string, const GPElement*> by_matrix;
  std::deque<GPElement> queue;
  GPElement id = identity_element(fam);
  mats.emplace(id, IMat::identity(engine.dim()));
  queue.push_back(id);
  RawWord alphabet = generator_alphabet(fam);
  rep.injective_on_sample = true;
  for (int step = 0; step < sample_length; ++step) {
    std::deque<GPElement> next;
    for (const GPElement& x : queue) {
      IMat mx = mats.at(x);
      for (const auto& [v, g] : alphabet) {
        GPElement y = mul_letter(fam, x, v, g);
        if (mats.count(y)) continue;
        IMat my = mx * engine.letter_matrix(v, g);
        mats.emplace(y, my);
        next.push_back(y);
        if (mats.size() > lim.complex_vertex_cap) throw CapExceeded("sample ball exceeds cap");
      }
    }
    queue = std::move(next);
  }
  for (const auto& [x, m] : mats) {
    auto [it, fresh] = by_matrix.emplace(m.str(), &x);
    if (!fresh) {
      rep.injective_on_sample = false;
      rep.collision = element_str(fam, *it->second) + "  vs  " + element_str(fam, x);
      break;
    }
  }
  rep.sample_elements = mats.size();
  return rep;
}

std::vector<GPElement> enumerate_ball(const PairFamily& fam, int length, const Limits& lim) {
  std::set<GPElement> seen;
  std::deque<GPElement> queue;
  GPElement id = identity_element(fam);
  seen.insert(id);
  queue.push_back(id);
  RawWord alphabet = generator_alphabet(fam);
  for (int step = 0; step < length; ++step) {
    std::deque<GPElement> next;
    for (const GPElement& x : queue) {
      for (const auto& [v, g] : alphabet) {
        GPElement y = mul_letter(fam, x, v, g);
        if (seen.insert(y).second) {
          next.push_back(y);
          if (seen.size() > lim.complex_vertex_cap) throw CapExceeded("element ball exceeds cap");
        }
      }
    }
    queue = std::move(next);
  }
  return std::vector<GPElement>(seen.begin(), seen.end());
}

}  // namespace gpp
