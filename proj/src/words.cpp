#include "gpp/words.hpp"

#include <algorithm>
#include <sstream>

#include "gpp/error.hpp"

namespace gpp {

namespace {

Letter encode_letter(const PairFamily& fam, int v, const VElem& value) {
  const VertexPair& p = fam.pair(v);
  Letter l;
  l.v = v;
  switch (p.kind) {
    case VKind::FreeZ:
      l.a = std::get<long long>(value);
      break;
    case VKind::InfDih: {
      const DihElem& d = std::get<DihElem>(value);
      l.a = d.shift;
      l.b = d.flip;
      break;
    }
    default:
      l.a = p.cosets.coset_of(std::get<Perm>(value));
      break;
  }
  return l;
}

/// Rewriting state maintaining the invariant: the stored word is
/// shuffle-reduced (no two same-vertex letters joinable by edge shuffles)
/// and the element equals word * apart.
struct Normalizer {
  const PairFamily& fam;
  Word word;
  std::vector<int> apart;

  explicit Normalizer(const PairFamily& f) : fam(f), apart(static_cast<std::size_t>(f.n()), 0) {}

  void seed(const GPElement& x) {
    word = x.word;
    apart = x.apart;
  }

  void push(int v, const VElem& g) {
    const VertexPair& p = fam.pair(v);
    if (!p.contains(g))
      throw InvalidInput("letter value " + velem_str(g) + " not in the vertex group at vertex " +
                         fam.graph().labels()[static_cast<std::size_t>(v)]);
    if (p.is_finite()) {
      push_finite(v, std::get<Perm>(g));
    } else {
      push_preset(v, g);
    }
  }

  GPElement take() {
    canonical_sort();
    GPElement e;
    e.word = std::move(word);
    e.apart = std::move(apart);
    e.family_id = fam.id();
    return e;
  }

 private:
  void push_finite(int v, const Perm& g) {
    const VertexPair& p = fam.pair(v);
    std::size_t vi = static_cast<std::size_t>(v);
    Perm h = p.a.elements()[static_cast<std::size_t>(apart[vi])] * g;
    if (p.a.contains(h)) {
      apart[vi] = p.a.index_of(h);
      return;
    }
    for (std::size_t j = word.size(); j-- > 0;) {
      if (word[j].v == v) {
        Perm m = p.cosets.rep(static_cast<int>(word[j].a)) * h;
        int point = p.cosets.coset_of(m);
        if (point == 0) {  // merged into the subgroup; the letter vanishes
          word.erase(word.begin() + static_cast<std::ptrdiff_t>(j));
          apart[vi] = p.a.index_of(m);
        } else {
          word[j].a = point;
          apart[vi] = p.a.index_of(p.cosets.rep(point).inverse() * m);
        }
        return;
      }
      if (!fam.adjacent(word[j].v, v)) break;
    }
    int point = p.cosets.coset_of(h);
    word.push_back(Letter{v, point, 0});
    apart[vi] = p.a.index_of(p.cosets.rep(point).inverse() * h);
  }

  void push_preset(int v, const VElem& g) {
    if (velem_is_identity(g)) return;
    const VertexPair& p = fam.pair(v);
    for (std::size_t j = word.size(); j-- > 0;) {
      if (word[j].v == v) {
        VElem m = p.mult(letter_value(fam, word[j]), g);
        if (velem_is_identity(m))
          word.erase(word.begin() + static_cast<std::ptrdiff_t>(j));
        else
          word[j] = encode_letter(fam, v, m);
        return;
      }
      if (!fam.adjacent(word[j].v, v)) break;
    }
    word.push_back(encode_letter(fam, v, g));
  }

  // Lexicographically least linearization of the shuffle class: repeatedly
  // emit the least-vertex letter among those movable to the front.
  void canonical_sort() {
    Word out;
    out.reserve(word.size());
    std::vector<char> used(word.size(), 0);
    for (std::size_t step = 0; step < word.size(); ++step) {
      int best = -1;
      for (std::size_t i = 0; i < word.size(); ++i) {
        if (used[i]) continue;
        bool movable = true;
        for (std::size_t j = 0; j < i; ++j) {
          if (used[j]) continue;
          if (word[j].v == word[i].v || !fam.adjacent(word[j].v, word[i].v)) {
            movable = false;
            break;
          }
        }
        if (movable && (best < 0 || word[i].v < word[static_cast<std::size_t>(best)].v))
          best = static_cast<int>(i);
      }
      out.push_back(word[static_cast<std::size_t>(best)]);
      used[static_cast<std::size_t>(best)] = 1;
    }
    word = std::move(out);
  }
};

void require_same_family(const PairFamily& fam, const GPElement& x) {
  if (x.family_id != fam.id()) throw InvalidInput("element belongs to a different family");
}

}  // namespace

bool GPElement::is_identity() const {
  if (!word.empty()) return false;
  for (int a : apart)
    if (a != 0) return false;
  return true;
}

GPElement identity_element(const PairFamily& fam) {
  GPElement e;
  e.apart.assign(static_cast<std::size_t>(fam.n()), 0);
  e.family_id = fam.id();
  return e;
}

VElem letter_value(const PairFamily& fam, const Letter& l) {
  const VertexPair& p = fam.pair(l.v);
  switch (p.kind) {
    case VKind::FreeZ:
      return VElem(l.a);
    case VKind::InfDih:
      return VElem(DihElem{l.a, static_cast<int>(l.b)});
    default:
      return VElem(p.cosets.rep(static_cast<int>(l.a)));
  }
}

GPElement normalize(const PairFamily& fam, const RawWord& raw) {
  Normalizer state(fam);
  for (const auto& [v, g] : raw) {
    if (v < 0 || v >= fam.n()) throw InvalidInput("letter vertex out of range");
    state.push(v, g);
  }
  return state.take();
}

GPElement multiply(const PairFamily& fam, const GPElement& x, const GPElement& y) {
  require_same_family(fam, x);
  require_same_family(fam, y);
  Normalizer state(fam);
  state.seed(x);
  for (const Letter& l : y.word) state.push(l.v, letter_value(fam, l));
  for (int v = 0; v < fam.n(); ++v) {
    const VertexPair& p = fam.pair(v);
    if (p.is_finite() && y.apart[static_cast<std::size_t>(v)] != 0)
      state.push(v, VElem(p.a.elements()[static_cast<std::size_t>(y.apart[static_cast<std::size_t>(v)])]));
  }
  return state.take();
}

GPElement inverse(const PairFamily& fam, const GPElement& x) {
  require_same_family(fam, x);
  Normalizer state(fam);
  for (int v = 0; v < fam.n(); ++v) {
    const VertexPair& p = fam.pair(v);
    if (p.is_finite() && x.apart[static_cast<std::size_t>(v)] != 0)
      state.push(v, p.inverse(VElem(p.a.elements()[static_cast<std::size_t>(x.apart[static_cast<std::size_t>(v)])])));
  }
  for (std::size_t i = x.word.size(); i-- > 0;) {
    const Letter& l = x.word[i];
    state.push(l.v, fam.pair(l.v).inverse(letter_value(fam, l)));
  }
  return state.take();
}

GPElement mul_letter(const PairFamily& fam, const GPElement& x, int v, const VElem& g) {
  require_same_family(fam, x);
  Normalizer state(fam);
  state.seed(x);
  state.push(v, g);
  return state.take();
}

GPElement power(const PairFamily& fam, const GPElement& x, long long n) {
  GPElement base = n < 0 ? inverse(fam, x) : x;
  long long k = n < 0 ? -n : n;
  GPElement acc = identity_element(fam);
  for (long long i = 0; i < k; ++i) acc = multiply(fam, acc, base);
  return acc;
}

std::vector<VElem> product_image(const PairFamily& fam, const GPElement& x) {
  require_same_family(fam, x);
  std::vector<VElem> out;
  out.reserve(static_cast<std::size_t>(fam.n()));
  for (int v = 0; v < fam.n(); ++v) out.push_back(fam.pair(v).identity());
  for (const Letter& l : x.word) {
    std::size_t vi = static_cast<std::size_t>(l.v);
    out[vi] = fam.pair(l.v).mult(out[vi], letter_value(fam, l));
  }
  for (int v = 0; v < fam.n(); ++v) {
    const VertexPair& p = fam.pair(v);
    if (p.is_finite() && x.apart[static_cast<std::size_t>(v)] != 0) {
      std::size_t vi = static_cast<std::size_t>(v);
      out[vi] = p.mult(out[vi], VElem(p.a.elements()[static_cast<std::size_t>(x.apart[vi])]));
    }
  }
  return out;
}

bool product_image_trivial(const PairFamily& fam, const GPElement& x) {
  for (const VElem& c : product_image(fam, x))
    if (!velem_is_identity(c)) return false;
  return true;
}

bool supported_on(const PairFamily& fam, const GPElement& x, std::uint32_t clique_mask) {
  require_same_family(fam, x);
  for (const Letter& l : x.word)
    if (!((clique_mask >> l.v) & 1u)) return false;
  return true;
}

Word coset_word(const PairFamily& fam, const GPElement& x, std::uint32_t clique_mask) {
  require_same_family(fam, x);
  Word w = x.word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = w.size(); i-- > 0;) {
      if (!((clique_mask >> w[i].v) & 1u)) continue;
      bool trailing = true;
      for (std::size_t j = i + 1; j < w.size(); ++j)
        if (w[j].v == w[i].v || !fam.adjacent(w[j].v, w[i].v)) {
          trailing = false;
          break;
        }
      if (trailing) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      }
    }
  }
  // canonical linearization, same rule as for normal forms
  GPElement tmp = element_of_word(fam, w);
  return tmp.word;
}

GPElement element_of_word(const PairFamily& fam, const Word& w) {
  Normalizer state(fam);
  for (const Letter& l : w) state.push(l.v, letter_value(fam, l));
  GPElement e = state.take();
  for (int a : e.apart)
    if (a != 0) throw InternalCheckFailed("coset word produced a subgroup part");
  return e;
}

RawWord to_raw(const PairFamily& fam, const GPElement& x) {
  require_same_family(fam, x);
  RawWord raw;
  for (const Letter& l : x.word) raw.emplace_back(l.v, letter_value(fam, l));
  for (int v = 0; v < fam.n(); ++v) {
    const VertexPair& p = fam.pair(v);
    if (p.is_finite() && x.apart[static_cast<std::size_t>(v)] != 0)
      raw.emplace_back(v, VElem(p.a.elements()[static_cast<std::size_t>(x.apart[static_cast<std::size_t>(v)])]));
  }
  return raw;
}

RawWord generator_alphabet(const PairFamily& fam) {
  RawWord out;
  for (int v = 0; v < fam.n(); ++v) {
    const VertexPair& p = fam.pair(v);
    std::vector<VElem> seen;
    auto add = [&](const VElem& g) {
      if (velem_is_identity(g)) return;
      for (const VElem& s : seen)
        if (s == g) return;
      seen.push_back(g);
      out.emplace_back(v, g);
    };
    for (const VElem& g : p.group_generators()) add(g);
    for (const VElem& g : p.subgroup_generators()) add(g);
  }
  return out;
}

std::string word_str(const PairFamily& fam, const Word& w) {
  if (w.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << " ";
    out << fam.graph().labels()[static_cast<std::size_t>(w[i].v)] << ":"
        << velem_str(letter_value(fam, w[i]));
  }
  return out.str();
}

std::string element_str(const PairFamily& fam, const GPElement& x) {
  std::ostringstream out;
  out << word_str(fam, x.word);
  bool any = false;
  for (int v = 0; v < fam.n(); ++v) {
    const VertexPair& p = fam.pair(v);
    if (p.is_finite() && x.apart[static_cast<std::size_t>(v)] != 0) {
      out << (any ? ", " : " @ ");
      out << fam.graph().labels()[static_cast<std::size_t>(v)] << ":"
          << p.a.elements()[static_cast<std::size_t>(x.apart[static_cast<std::size_t>(v)])].to_cycles();
      any = true;
    }
  }
  return out.str();
}

}  // namespace gpp
