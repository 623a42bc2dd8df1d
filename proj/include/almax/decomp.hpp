// Subposets of the cube that break M_D apart, the three skein sequences
// and the simplification moves.
//
// All comparisons happen on chain complexes.  Subposet complexes use the
// same degrees as C_*(M); their realizations are read with the shift from
// realization_homology.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "almax/algebra.hpp"
#include "almax/functors.hpp"
#include "almax/model.hpp"
#include "almax/statecube.hpp"

namespace almax {

enum class SubposetKind { X, Xe, Y, Zb };
std::string to_string(SubposetKind k);

struct Subposet {
  SubposetKind kind = SubposetKind::X;
  // Xe: the monochord e.  Zb: the smallest bichord index of the class.
  ChordIndex parameter = -1;
  // Zb: every bichord of D(1) in the class, ascending.
  std::vector<ChordIndex> bichord_class;
  int n = 0;
  std::vector<std::uint32_t> members;   // ascending

  std::string name() const;   // "X", "X^e3", "Y", "Z^b1"
  bool contains(std::uint32_t u) const;
  // Members by weight.
  std::vector<int> profile() const;
};

// Throws std::invalid_argument when the parameter is not a monochord (Xe)
// or not a bichord (Zb) of D(1).
Subposet build_subposet(const CubeIndex& cube, SubposetKind which, ChordIndex parameter = -1);

// X, one X^e per monochord, Y, one Z^b per parallel class.
std::vector<Subposet> all_subposets(const CubeIndex& cube);

GradedChainComplex subposet_complex(const CubeIndex& cube, const Subposet& s);

// Circle of D(1) carried by each component of G(u), for Phi(u) = 0.
std::vector<int> component_top_circles(const CubeIndex& cube, std::uint32_t u);

struct SubposetHomology {
  std::string name;
  std::vector<int> profile;
  HomologyResult homology;   // of the subposet complex
};

struct CofibreReport {
  bool partition = true;          // every M generator in exactly one family
  bool block_triangular = true;   // the Phi = 1 part is a subcomplex
  bool sub_matches = true;        // Phi = 1 part = sum of Y and Z^b complexes
  bool quotient_matches = true;   // Phi = 0 part = sum of X copies and X^e
  std::vector<LesReport> les;
  std::string first_failure;
  std::optional<std::uint32_t> witness_state;
  std::vector<SubposetHomology> subposets;
  HomologyResult total;           // H of C_*(M)

  bool ok() const;
};
CofibreReport verify_cofibre_partition(const CubeIndex& cube, int jobs = 1);

// D[c=0] or D[c=1] at the level of D(1).  Value 1 deletes the chord, value
// 0 surgers along it first.  The endpoints stay behind as markers so circle
// identities survive.  Throws std::invalid_argument on a missing chord or
// a bad value.
ChordDiagram smooth(const ChordDiagram& d, ChordIndex c, int value);

enum class SkeinKind { monochord, bichord, x_sequence };
std::string to_string(SkeinKind k);

// Sequences that apply to chord a of D(1): monochords get the M and X
// sequences, bichords the mixed one.
std::vector<SkeinKind> eligible_skeins(const ChordDiagram& top, ChordIndex a);

struct SkeinReport {
  SkeinKind kind = SkeinKind::monochord;
  ChordIndex chord = 0;
  bool embeds = true;             // middle term = the u_a = 0 part
  bool quotient_matches = true;   // left term = the u_a = 1 part
  std::vector<LesReport> les;
  HomologyResult left, middle, right;
  std::string first_failure;

  bool ok() const;
};
// Throws std::invalid_argument on a chord-kind mismatch.
SkeinReport verify_skein(const CubeIndex& cube, ChordIndex a, SkeinKind kind, int jobs = 1);

struct SimplifyMove {
  std::string lemma;   // "equivalent-bichords" or "nested-monochords"
  ChordIndex chord = 0;
  std::vector<ChordIndex> witnesses;
};
struct Simplification {
  ChordDiagram reduced;
  int suspensions = 0;
  std::vector<SimplifyMove> moves;
};
// H_k(C_*(M_D)) = H_{k - suspensions}(C_*(M_reduced)).
Simplification simplify(const ChordDiagram& d);

// Restriction of a functor cube to the face u_i = value, reindexed as a
// cube of dimension n - 1 with its own signs.
FunctorCube cube_face(const FunctorCube& f, int coordinate, int value);

// Generator identities that survive smoothing: endpoint sets for circles
// and components, chord indices for edges.  Indexed like f.generators.
std::vector<std::vector<std::string>> generator_keys(const CubeIndex& cube, const FunctorCube& f);

// Same generators (by key) per state and the same signed edge entries.
bool same_functor(const FunctorCube& a, const std::vector<std::vector<std::string>>& keys_a,
                  const FunctorCube& b, const std::vector<std::vector<std::string>>& keys_b,
                  std::string* why = nullptr);

}  // namespace almax
