#include "seqop/bar.hpp"
#include <sstream>
#include <stdexcept>

namespace seqop {

int bar_degree(const EAlgebra& A, const Word& w) {
    int d = 0;
    for (int id : w) d += A.degree(id) - 1;
    return d;
}

BarSum bar_boundary(const EAlgebra& A, const Word& w) {
    BarSum out;
    long long pre = 0;
    for (size_t j = 0; j < w.size(); ++j) {
        for (const auto& [a2, c2] : A.differential(w[j])) {
            Word w2 = w;
            w2[j] = a2;
            add_term(out, w2, c2 * sign_pow(pre));
        }
        pre += A.degree(w[j]) - 1;
    }
    pre = 0;
    for (size_t j = 0; j + 1 < w.size(); ++j) {
        pre += A.degree(w[j]) - 1;
        for (const auto& [a2, c2] : A.act(Seq{1, 2}, {w[j], w[j + 1]})) {
            Word w2;
            w2.insert(w2.end(), w.begin(), w.begin() + j);
            w2.push_back(a2);
            w2.insert(w2.end(), w.begin() + j + 2, w.end());
            add_term(out, w2, c2 * sign_pow(pre));
        }
    }
    return out;
}

BarSum bar_boundary(const EAlgebra& A, const BarSum& x) {
    BarSum out;
    for (const auto& [w, c] : x) add(out, bar_boundary(A, w), c);
    return out;
}

std::vector<Word> bar_words(const EAlgebra& A, const std::vector<int>& letters,
                            int n) {
    for (int id : letters)
        if (A.degree(id) < 2)
            throw std::invalid_argument(
                "bar word enumeration needs letters of degree >= 2");
    std::vector<Word> out;
    Word cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int id : letters) {
            int step = A.degree(id) - 1;
            if (step > left) continue;
            cur.push_back(id);
            rec(left - step);
            cur.pop_back();
        }
    };
    if (n == 0) return {Word{}};
    rec(n);
    return out;
}

std::string show_word(const EAlgebra& A, const Word& w) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << "|";
        os << A.show(w[i]);
    }
    os << "]";
    return os.str();
}

std::string show_barsum(const EAlgebra& A, const BarSum& x) {
    return show_sum<Word>(x, [&](const Word& w) { return show_word(A, w); });
}

}  // namespace seqop
