#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpp/family.hpp"

namespace gpp {

/// One letter of a normal-form word: a nontrivial coset representative of
/// A_v in G_v, encoded compactly. For finite vertices `a` is the coset point
/// (>= 1); for Z it is the exponent; for the infinite dihedral group (a, b)
/// is (shift, flip).
struct Letter {
  int v = 0;
  long long a = 0;
  long long b = 0;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// Element of the graph product of pairs in canonical normal form: a
/// shuffle-reduced coset word, lexicographically least in its shuffle class
/// under the vertex order, followed by one subgroup element per vertex.
struct GPElement {
  Word word;
  std::vector<int> apart;  // per vertex: index into A_v's element list
  std::uint64_t family_id = 0;

  bool is_identity() const;
  int length() const { return static_cast<int>(word.size()); }
  auto operator<=>(const GPElement&) const = default;
};

using RawWord = std::vector<std::pair<int, VElem>>;

GPElement identity_element(const PairFamily& fam);

/// Rewrite an arbitrary word over vertex-group elements into normal form.
/// Subgroup parts migrate right past letters of other vertex groups; letters
/// of the same vertex merge whenever edge-shuffles connect them.
GPElement normalize(const PairFamily& fam, const RawWord& raw);

GPElement multiply(const PairFamily& fam, const GPElement& x, const GPElement& y);
GPElement inverse(const PairFamily& fam, const GPElement& x);
GPElement mul_letter(const PairFamily& fam, const GPElement& x, int v, const VElem& g);
GPElement power(const PairFamily& fam, const GPElement& x, long long n);

/// The coset-representative value of a letter, as a vertex-group element.
VElem letter_value(const PairFamily& fam, const Letter& l);

/// Image in the direct product of the vertex groups: component at v is the
/// ordered product of the v-letters times the subgroup part. A surjective
/// homomorphism; its kernel is the deck group of the associated covering.
std::vector<VElem> product_image(const PairFamily& fam, const GPElement& x);
bool product_image_trivial(const PairFamily& fam, const GPElement& x);

/// True iff x lies in the subgroup attached to the clique S (all word
/// letters supported on S; the subgroup part is unconstrained).
bool supported_on(const PairFamily& fam, const GPElement& x, std::uint32_t clique_mask);

/// Canonical representative word of the coset x * G_S: trailing-shuffleable
/// letters with vertex in S are deleted and the subgroup part cleared.
Word coset_word(const PairFamily& fam, const GPElement& x, std::uint32_t clique_mask);

/// Element whose normal form is the given (reduced) word with trivial
/// subgroup part.
GPElement element_of_word(const PairFamily& fam, const Word& w);

RawWord to_raw(const PairFamily& fam, const GPElement& x);

/// Letters (v, g) for g running over the generators of G_v and of A_v.
RawWord generator_alphabet(const PairFamily& fam);

std::string element_str(const PairFamily& fam, const GPElement& x);
std::string word_str(const PairFamily& fam, const Word& w);

}  // namespace gpp
