#pragma once
#include "seqop/surjection.hpp"
#include <optional>
#include <utility>

// Index data for splitting a coefficient computation into l tensor slots:
// decompositions of the generator multiset over the slots, overlapping
// partitions of each value fiber, and the shuffle permutation sigma_alpha
// realigning generator copies with their slots.

namespace seqop {

// (generator index, copy number): the copy-th occurrence of generator i
using ElemKey = std::pair<int, int>;
using Block = std::vector<ElemKey>;   // sorted
using Decomp = std::vector<Block>;    // one block per slot, all nonempty
using PosSet = std::vector<int>;      // sorted 0-based positions into f
using Cover = std::vector<PosSet>;    // one position set per slot

struct LIndex {
    Decomp E;
    Cover S;
};

// distribute es[i] copies of generator i+1 over l blocks, every block nonempty
std::vector<Decomp> elem_decomps(const std::vector<int>& es, int l);

// split the ordered set F into s consecutive pieces, adjacent pieces sharing
// their boundary element
std::vector<std::vector<PosSet>> overlapping_partitions(const PosSet& F, int s);

// covers of the positions of f by l sets, each fiber distributed over a
// subset of slots via an overlapping partition, every slot nonempty
std::vector<Cover> value_covers(const Seq& f, int l);

// pairs (E, S) with matching tags: the values of f on S_j equal the
// generator indices present in E_j
std::vector<LIndex> l_indices(const Seq& f, const std::vector<int>& es, int l);

// subsequence of f at S relabeled by order; nullopt when adjacent entries
// collide (degenerate)
std::optional<Seq> restrict_to(const Seq& f, const PosSet& S);

// multiplicity of each distinct generator tag in E, in increasing tag order
std::vector<int> eargs(const Block& E);

// block-major enumeration mu of the copies in E, read back in generator-major
// order: sigma_alpha[sum(es[:i-1]) + r] = mu(i, r)
std::vector<int> sigma_alpha(const std::vector<int>& es, const Decomp& E);

}  // namespace seqop
