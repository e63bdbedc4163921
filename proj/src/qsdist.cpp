#include "hopf/qsdist.hpp"

#include <cstdint>
#include <map>
#include <vector>

#include "hopf/enumerate.hpp"
#include "hopf/errors.hpp"
#include "hopf/qpoly.hpp"
#include "hopf/tableau.hpp"

namespace hopf {

std::pair<CompComb, CompComb> invmaj_sides(int n) {
    CompComb inv_side, maj_side;
    for (const Permutation& s : all_permutations(n)) {
        Composition I = descent_composition(s.inverse());
        inv_side.add(I, QPoly::monomial(Rat(1), s.length()));
        maj_side.add(I, QPoly::monomial(Rat(1), s.maj()));
    }
    return {inv_side, maj_side};
}

namespace {

using u64 = std::uint64_t;
constexpr u64 kPrime = 2147483647;  // 2^31 - 1

u64 mulmod(u64 a, u64 b) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

u64 reduce_int(const Int& v) {
    Int m = v % Int(kPrime);
    if (m < 0) m += Int(kPrime);
    return static_cast<u64>(m);
}

using ModMat = std::vector<std::vector<u64>>;

ModMat mod_mul(const ModMat& a, const ModMat& b) {
    const size_t n = a.size();
    ModMat r(n, std::vector<u64>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            const u64 aik = a[i][k];
            for (size_t j = 0; j < n; ++j)
                r[i][j] = (r[i][j] + mulmod(aik, b[k][j])) % kPrime;
        }
    return r;
}

int mod_rank(ModMat m) {
    const size_t rows = m.size();
    if (rows == 0) return 0;
    const size_t cols = m[0].size();
    int rank = 0;
    for (size_t col = 0; col < cols && static_cast<size_t>(rank) < rows; ++col) {
        size_t piv = rows;
        for (size_t i = rank; i < rows; ++i)
            if (m[i][col] != 0) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        // Normalize the pivot row via Fermat inversion.
        u64 inv = 1, base = m[rank][col], e = kPrime - 2;
        while (e) {
            if (e & 1) inv = mulmod(inv, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        for (size_t j = col; j < cols; ++j) m[rank][j] = mulmod(m[rank][j], inv);
        for (size_t i = 0; i < rows; ++i) {
            if (static_cast<int>(i) == rank || m[i][col] == 0) continue;
            const u64 f = m[i][col];
            for (size_t j = col; j < cols; ++j)
                m[i][j] = (m[i][j] + mulmod(kPrime - f, m[rank][j])) % kPrime;
        }
        ++rank;
    }
    return rank;
}

// Certify that the operator is diagonalizable with the prescribed eigenvalue
// multiplicities. The annihilating product over the distinct prescribed
// values is checked exactly over the integers (denominators cleared), which
// proves every eigenvalue is among them and the operator is diagonalizable.
// The multiplicity of value v then equals the rank of the product over the
// other values; ranks only drop under reduction mod a prime, so mod-p ranks
// matching multiplicities that already sum to the full dimension force the
// exact ranks to match as well.
bool certify_spectrum(const Matrix<Rat>& gamma, const std::map<Rat, Int>& mult_of_value) {
    const int N = gamma.rows();
    // Clear denominators: scale by the lcm D of every denominator in sight.
    Int D = 1;
    auto fold_denominator = [&D](const Rat& v) {
        Int den = denominator(v);
        D = D / gcd(D, den) * den;
    };
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) fold_denominator(gamma(i, j));
    for (const auto& [v, m] : mult_of_value) fold_denominator(v);

    Matrix<Int> G(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            Rat scaled = gamma(i, j) * Rat(D);
            HOPF_CHECK(denominator(scaled) == 1, "denominator clearing failed");
            G(i, j) = numerator(scaled);
        }
    std::vector<Int> values;       // D * v, distinct
    std::vector<Int> mults;        // prescribed multiplicities
    for (const auto& [v, m] : mult_of_value) {
        Rat scaled = v * Rat(D);
        HOPF_CHECK(denominator(scaled) == 1, "denominator clearing failed");
        values.push_back(numerator(scaled));
        mults.push_back(m);
    }
    const size_t k = values.size();

    // Exact annihilator: prod over distinct values of (G - value, both scaled).
    Matrix<Int> A = Matrix<Int>::identity(N);
    for (size_t j = 0; j < k; ++j) {
        Matrix<Int> f = G;
        for (int i = 0; i < N; ++i) f(i, i) -= values[j];
        A = A * f;
    }
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (A(i, j) != 0) return false;

    // Multiplicities via mod-p ranks of the partial products.
    Int total = 0;
    for (const Int& m : mults) total += m;
    if (total != Int(N)) return false;

    std::vector<ModMat> factors;
    for (size_t j = 0; j < k; ++j) {
        ModMat f(N, std::vector<u64>(N, 0));
        const u64 shift = reduce_int(values[j]);
        for (int i = 0; i < N; ++i) {
            for (int c = 0; c < N; ++c) f[i][c] = reduce_int(G(i, c));
            f[i][i] = (f[i][i] + kPrime - shift) % kPrime;
        }
        factors.push_back(std::move(f));
    }
    ModMat id(N, std::vector<u64>(N, 0));
    for (int i = 0; i < N; ++i) id[i][i] = 1;
    std::vector<ModMat> prefix(k + 1, id), suffix(k + 1, id);
    for (size_t j = 0; j < k; ++j) prefix[j + 1] = mod_mul(prefix[j], factors[j]);
    for (size_t j = k; j-- > 0;) suffix[j] = mod_mul(factors[j], suffix[j + 1]);
    for (size_t j = 0; j < k; ++j) {
        ModMat partial = mod_mul(prefix[j], suffix[j + 1]);
        if (Int(mod_rank(std::move(partial))) != mults[j]) return false;
    }
    return true;
}

} // namespace

QSDistReport qs_distribution(const std::vector<Rat>& x, int n) {
    require(n >= 1, "the symmetric group degree must be at least 1");
    require_scale(n <= 5, "distribution reports stop at degree 5");
    Rat total(0);
    for (const Rat& xi : x) {
        require(xi >= 0, "probabilities must be nonnegative");
        total = total + xi;
    }
    require(total == Rat(1), "probabilities must sum to 1");

    QSDistReport rep;
    rep.n = n;
    rep.x = x;
    rep.perms = all_permutations(n);
    const int N = static_cast<int>(rep.perms.size());

    std::map<Permutation, int> index;
    for (int i = 0; i < N; ++i) index[rep.perms[i]] = i;
    Rat mass(0);
    for (const Permutation& s : rep.perms) {
        Rat p = qsym_evaluate(
            qs_single(QBasis::F, descent_composition(s.inverse())), x);
        rep.prob.push_back(p);
        mass = mass + p;
    }
    HOPF_CHECK(mass == Rat(1), "distribution does not have total mass 1");

    rep.gamma = Matrix<Rat>(N, N);
    for (int i = 0; i < N; ++i) {
        if (rep.prob[i] == Rat(0)) continue;
        for (int j = 0; j < N; ++j)
            rep.gamma(index.at(rep.perms[i] * rep.perms[j]), j) =
                rep.gamma(index.at(rep.perms[i] * rep.perms[j]), j) + rep.prob[i];
    }

    std::map<Rat, Int> mult_of_value;
    for (const auto& parts : partitions(n)) {
        Composition lambda(parts);
        SpectrumLine line;
        line.lambda = lambda;
        line.value = power_sum_evaluate(lambda, x);
        line.multiplicity = factorial(n) / z_of(lambda);
        mult_of_value[line.value] += line.multiplicity;
        rep.spectrum.push_back(line);
    }

    if (n <= 4) {
        rep.spectrum_method = "charpoly";
        QPoly expected(Rat(1));
        const QPoly t = QPoly::variable();
        for (const auto& [v, m] : mult_of_value)
            expected = expected * (t - QPoly(v)).pow(static_cast<int>(m));
        rep.spectrum_verified = charpoly(rep.gamma) == expected;
    } else {
        rep.spectrum_method = "annihilator+rank";
        rep.spectrum_verified = certify_spectrum(rep.gamma, mult_of_value);
    }

    auto [inv_side, maj_side] = invmaj_sides(n);
    rep.invmaj_verified = inv_side == maj_side;
    return rep;
}

} // namespace hopf
