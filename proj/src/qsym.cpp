#include "hopf/qsym.hpp"

#include <functional>
#include <vector>

#include "hopf/enumerate.hpp"
#include "hopf/errors.hpp"
#include "hopf/permutation.hpp"
#include "hopf/shuffle.hpp"
#include "hopf/word.hpp"

namespace hopf {

namespace {

// All compositions refining I: refine each part independently and concatenate.
std::vector<Composition> refinements(const Composition& I) {
    std::vector<Composition> acc{Composition()};
    for (int p : I.parts()) {
        std::vector<Composition> next;
        for (const Composition& head : acc)
            for (const Composition& piece : all_compositions(p)) next.push_back(head.concat(piece));
        acc = std::move(next);
    }
    return acc;
}

CompComb change_MF(const CompComb& x, bool signed_inverse) {
    CompComb r;
    for (const auto& [I, c] : x.terms()) {
        for (const Composition& J : refinements(I)) {
            bool flip = signed_inverse && (J.length() - I.length()) % 2 != 0;
            r.add(J, flip ? -c : c);
        }
    }
    return r;
}

// F_I F_J through one representative per descent class; the q coefficient of
// each shuffle term counts its crossing inversions.
CompComb fproduct(const CompComb& x, const CompComb& y, bool q_deformed) {
    auto label_product = [&](const Composition& I, const Composition& J) {
        Word u = Word::from_permutation(alpha_of(I));
        Word v = Word::from_permutation(alpha_of(J));
        CompComb r;
        auto collect = [&r](const Word& w, const QPoly& c) {
            r.add(descent_composition(Permutation(w.letters())), c);
        };
        if (q_deformed) {
            LinComb<Word, QPoly> sh = shifted_q_shuffle(u, v);
            for (const auto& [w, c] : sh.terms()) collect(w, c);
        } else {
            LinComb<Word, Rat> sh = shifted_shuffle(u, v);
            for (const auto& [w, c] : sh.terms()) collect(w, QPoly(c));
        }
        return r;
    };
    return CompComb::bilinear(x, y, label_product);
}

} // namespace

QSymElem qs_single(QBasis basis, const Composition& I, const QPoly& c) {
    return QSymElem{basis, CompComb::single(I, c)};
}

QSymElem qsym_to_basis(const QSymElem& e, QBasis target) {
    if (e.basis == target) return e;
    // F_I = sum over refinements of M (unsigned); the inverse direction,
    // M_I = sum over refinements of F, carries the sign (-1)^{l(J) - l(I)}.
    bool from_M = e.basis == QBasis::M;
    return QSymElem{target, change_MF(e.terms, /*signed_inverse=*/from_M)};
}

QSymElem qsym_product(const QSymElem& x, const QSymElem& y) {
    CompComb xf = qsym_to_basis(x, QBasis::F).terms;
    CompComb yf = qsym_to_basis(y, QBasis::F).terms;
    return QSymElem{QBasis::F, fproduct(xf, yf, /*q_deformed=*/false)};
}

QSymElem qsym_q_product(const QSymElem& x, const QSymElem& y) {
    CompComb xf = qsym_to_basis(x, QBasis::F).terms;
    CompComb yf = qsym_to_basis(y, QBasis::F).terms;
    return QSymElem{QBasis::F, fproduct(xf, yf, /*q_deformed=*/true)};
}

namespace {

// Sum of x_{j_1}^{p_1} ... x_{j_n} ^{p_n} over weakly increasing index
// sequences that increase strictly at the marked positions.
Rat value_of_shape(const std::vector<int>& powers, const std::vector<bool>& strict_after,
                   const std::vector<Rat>& x) {
    const int n = static_cast<int>(powers.size());
    const int k = static_cast<int>(x.size());
    Rat total(0);
    std::function<void(int, int, const Rat&)> walk = [&](int pos, int lo, const Rat& acc) {
        if (pos == n) {
            total = total + acc;
            return;
        }
        for (int j = lo; j < k; ++j) {
            Rat piece = acc;
            for (int e = 0; e < powers[pos]; ++e) piece = piece * x[j];
            if (piece == Rat(0)) continue;  // zero argument kills the whole branch
            walk(pos + 1, strict_after[pos] ? j + 1 : j, piece);
        }
    };
    walk(0, 0, Rat(1));
    return total;
}

Rat label_value(QBasis basis, const Composition& I, const std::vector<Rat>& x) {
    if (basis == QBasis::M) {
        // Strictly increasing indices, one power per part.
        std::vector<bool> strict(I.length(), true);
        return value_of_shape(I.parts(), strict, x);
    }
    // F: weakly increasing letters, strict across the descents of I.
    const int n = I.weight();
    std::vector<int> powers(n, 1);
    std::vector<bool> strict(n, false);
    for (int d : I.descent_set()) strict[d - 1] = true;
    return value_of_shape(powers, strict, x);
}

} // namespace

Rat qsym_evaluate(const QSymElem& e, const std::vector<Rat>& x) {
    Rat total(0);
    for (const auto& [I, c] : e.terms.terms()) {
        require(c.degree() <= 0, "qsym_evaluate needs q-free coefficients");
        total = total + c.coeff(0) * label_value(e.basis, I, x);
    }
    return total;
}

std::string qs_str(const QSymElem& e) {
    const std::string name = e.basis == QBasis::M ? "M" : "F";
    return e.terms.str([&](const Composition& I) { return name + I.str(); },
                       [](const QPoly& c) { return c.str(); });
}

} // namespace hopf
