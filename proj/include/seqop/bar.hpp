#pragma once
#include "seqop/ealgebra.hpp"

// Bar complex of an algebra: words of basis elements of positive degree,
// graded by sum of (degree - 1).  The differential applies d letterwise and
// merges adjacent letters with the product, both with prefix signs.

namespace seqop {

using Word = std::vector<int>;  // algebra basis ids
using BarSum = Sum<Word>;

int bar_degree(const EAlgebra& A, const Word& w);
BarSum bar_boundary(const EAlgebra& A, const Word& w);
BarSum bar_boundary(const EAlgebra& A, const BarSum& x);

// all words over the given letters with bar degree exactly n (the empty word
// is the single word of degree 0)
std::vector<Word> bar_words(const EAlgebra& A, const std::vector<int>& letters,
                            int n);

std::string show_word(const EAlgebra& A, const Word& w);
std::string show_barsum(const EAlgebra& A, const BarSum& x);

}  // namespace seqop
