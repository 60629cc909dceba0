#pragma once

#include <map>
#include <string>
#include <vector>

#include "gpp/coxeter.hpp"
#include "gpp/words.hpp"

namespace gpp {

/// Embedding of a family into a graph product of (Coxeter group, parabolic)
/// pairs: finite vertices with effective coset actions land in symmetric
/// groups on their coset spaces via adjacent transpositions, Z lands in an
/// infinite dihedral pair as the product of the two reflections, and
/// infinite dihedral vertices map identically.
struct SymmetricEmbedding {
  CoxeterMatrix target;
  std::vector<int> block_offset;  // per vertex
  std::vector<int> block_size;
  std::vector<CoxeterPair> blocks;
  /// For reporting: per vertex, each group generator with its word in the
  /// target generators (0-based indices).
  std::vector<std::vector<std::pair<std::string, std::vector<int>>>> gen_words;
};

SymmetricEmbedding embed_symmetric(const PairFamily& fam);

/// Per-vertex quotient by the kernel of the coset action: the reduced family
/// acts effectively on the same coset counts.
PairFamily reduce_family(const PairFamily& fam);

/// Adjacent-transposition word for a permutation (bubble-sort factorization),
/// self-verified. Entry i stands for the transposition (i, i+1).
std::vector<int> adjacent_transposition_word(const Perm& p);

/// Exact-matrix equality engine: the composite of the embedding above with
/// the reflection representation of the target Coxeter group. Used as the
/// independent oracle for the word problem.
class MatrixEngine {
 public:
  explicit MatrixEngine(const PairFamily& fam);

  const SymmetricEmbedding& embedding() const { return emb_; }
  const TitsRep& tits() const { return tits_; }
  int dim() const { return tits_.matrix.n(); }

  IMat letter_matrix(int v, const VElem& g) const;
  IMat raw_matrix(const RawWord& raw) const;
  IMat element_matrix(const GPElement& x) const;

  struct RelationReport {
    bool ok = true;
    std::string failure;
    std::size_t products_checked = 0;
    std::size_t commutators_checked = 0;
  };
  /// Verifies the defining relations: full multiplication tables of the
  /// finite vertex groups, plus every commutator the presentation imposes.
  RelationReport verify_relations() const;

 private:
  PairFamily fam_;  // copies share the original's identity
  SymmetricEmbedding emb_;
  TitsRep tits_;
  mutable std::map<std::pair<int, std::string>, IMat> cache_;
};

struct LinearityReport {
  bool relations_ok = false;
  std::string failure;
  int matrix_dim = 0;
  std::size_t sample_elements = 0;
  bool injective_on_sample = false;
  std::string collision;
  std::size_t products_checked = 0;
  std::size_t commutators_checked = 0;
};

/// Relation verification plus sampled faithfulness: all distinct normal
/// forms in the ball of the given radius (over the generator alphabet) must
/// map to distinct matrices.
LinearityReport linearity_pipeline(const PairFamily& fam, int sample_length,
                                   const Limits& lim = Limits::defaults());

/// All distinct elements that are products of at most `length` alphabet
/// letters, paired with their matrices when an engine is supplied.
std::vector<GPElement> enumerate_ball(const PairFamily& fam, int length,
                                      const Limits& lim = Limits::defaults());

}  // namespace gpp
