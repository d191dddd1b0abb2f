#pragma once

#include <map>
#include <string>
#include <vector>

#include "hg/johnson.hpp"

namespace hg {

// Node of a binary tree presentation. The edge above the node carries one
// F-word bead whose arrow points down, toward this node; crossing an edge
// along its arrow applies the bead, against the arrow its inverse. Children
// are listed counter-clockwise after the parent edge.
struct TreeNode {
  Word bead;
  Letter color;  // meaningful at leaves only
  std::vector<TreeNode> ch;  // empty or exactly two
  bool leaf() const { return ch.empty(); }
  bool operator==(const TreeNode&) const = default;
};

// Tree with a rational coefficient, presented along a distinguished edge
// joining the two halves; each half keeps its part of that edge's bead
// (arrow pointing into the half).
struct Tree {
  Rat coeff = Rat(1);
  TreeNode a, b;
  bool operator==(const Tree&) const = default;
};

int tree_degree(const Tree& t);  // leaves - 1

std::string tree_str(const Tree& t);
Tree tree_parse(const std::string& text);
// one tree per line / newline separated
std::string trees_str(const std::vector<Tree>& ts);
std::vector<Tree> trees_parse(const std::string& text);

// Element of the tree space in canonical form: the g slots of its image under
// the leaf-reading isomorphism (slot i <-> a_i (x) -), with an optional
// retained tree presentation.
struct DiagElt {
  int genus = 0;
  int degree = 1;
  std::vector<LieElt> slot;
  std::vector<Tree> trees;  // a presentation; not part of equality

  bool operator==(const DiagElt& o) const {
    return genus == o.genus && degree == o.degree && slot == o.slot;
  }
};

std::string diag_str(const DiagElt& d);

// Leaf-reading map: for every leaf, its color paired with the Lie word of the
// rest of the tree (beads applied along the path). Raw version, no membership
// check; kills the defining tree relations.
std::vector<LieElt> eta_slots(const std::vector<Tree>& ts, int genus);

// Validating constructors. Both enforce homogeneity and the membership
// condition "sum_i [a_i, slot_i] has zero coinvariant class"
// (CodedError "NOT_IN_D0" otherwise).
DiagElt eta_tree(const std::vector<Tree>& ts, int genus);
DiagElt make_diag(int genus, int degree, std::vector<LieElt> slot);

// Section of the leaf-reading map: 1/(k+1)-symmetrized presentation by trees
// rooted at an a_i-leaf. Exactness (eta o present = id) is oracle-tested.
std::vector<Tree> tree_present(const DiagElt& d);

// Bracket on tree presentations: branching over leaf pairs plus grafting over
// bead/leaf pairs in both directions. Works on beaded presentations.
std::vector<Tree> tree_bracket_trees(const std::vector<Tree>& D,
                                     const std::vector<Tree>& E, int genus);
DiagElt tree_bracket(const DiagElt& d, const DiagElt& e);

// Value of the derivation attached to a tree combination on an element of the
// module side, computed from the presentation (leaf and bead local terms).
LieElt tree_derivation_apply(const std::vector<Tree>& ts, int genus, const LieElt& u);
LieElt tree_derivation_apply(const DiagElt& d, const LieElt& u);

// Both directions of the derivation <-> diagram dictionary (slot_i = -c(x_i)).
SpecialDerivation diag_to_sder(const DiagElt& d);
DiagElt sder_to_diag(const SpecialDerivation& s);

// Diagrammatic Johnson value.
DiagElt tau_d(const Endo& f, int k, const Expansion& th);

// Degree-one diagram -1/2 sum a_i --m_ij-- a_j from a hermitian matrix.
DiagElt tree_from_matrix(const Mat& m);

// -1/2 [u]---[u] for u in A: the degree-one value of the twist along a disk
// with boundary u.
DiagElt disk_twist_tau1(const Word& u, int genus);

// Upper-left Magnus entry of a degree-one diagram after x_k -> t, as a
// Laurent polynomial (exponent -> coefficient).
std::map<long, Rat> mccullough_m(const DiagElt& d);

// Degree-one value a_2 --x_3^-n--> a_1 (genus >= 3); cross-checked internally
// against the disk-twist composite route.
DiagElt ell_n_tau1(long n, int genus);

// Drop the presentation trees carrying two or more index-1 leaves.
std::vector<Tree> project_mod_R(const DiagElt& d);

// Derivation series of -1/2 log theta(u) --- log theta(u), leaf-expanded
// degree by degree (degrees 1..th.N). Requires th special and u in A.
std::vector<SpecialDerivation> kk_rhs(const Expansion& th, const Word& u);

// Milnor-type invariants of formal commutator words in the symbols t_ij
// ("t12", "[t12,t23]", ...): mu brackets a_i---a_j by gluing along equal
// colors; the tau_d side brackets -a_i---a_j with tree_bracket.
DiagElt milnor_mu(const std::string& w, int genus);
DiagElt milnor_tau_d(const std::string& w, int genus);
// (-1)^k mu_k(w) mapped into the beaded space equals tau_k^d(w)?
bool milnor_square_check(const std::string& w, int genus);

}  // namespace hg
