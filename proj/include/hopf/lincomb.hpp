#pragma once
// Free module over a ring R with basis labelled by an ordered type B:
// the workhorse container for all algebra elements in this library.
// Invariant: no explicitly stored zero coefficients; iteration order is the
// label order, so printing and serialization are deterministic.
#include <map>
#include <functional>
#include <string>
#include <sstream>

#include "hopf/errors.hpp"
#include "hopf/rational.hpp"

namespace hopf {

template <class B, class R>
class LinComb {
  public:
    using Terms = std::map<B, R>;

    LinComb() = default;
    static LinComb single(const B& b, const R& c = R(1)) {
        LinComb x;
        x.add(b, c);
        return x;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    R coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? R(0) : it->second;
    }

    void add(const B& b, const R& c) {
        using hopf::is_zero;
        if (is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(b, c);
        if (!fresh) {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, R(0) - c);
        return *this;
    }
    LinComb operator+(const LinComb& o) const {
        LinComb r = *this;
        r += o;
        return r;
    }
    LinComb operator-(const LinComb& o) const {
        LinComb r = *this;
        r -= o;
        return r;
    }
    LinComb operator-() const {
        LinComb r;
        for (const auto& [b, c] : terms_) r.add(b, R(0) - c);
        return r;
    }
    LinComb operator*(const R& s) const {
        LinComb r;
        for (const auto& [b, c] : terms_) r.add(b, c * s);
        return r;
    }
    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }
    bool operator<(const LinComb& o) const { return terms_ < o.terms_; }

    // Bilinear extension of a product on basis labels.
    template <class F>
    static LinComb bilinear(const LinComb& x, const LinComb& y, F&& basis_product) {
        LinComb r;
        for (const auto& [a, ca] : x.terms_)
            for (const auto& [b, cb] : y.terms_) {
                LinComb p = basis_product(a, b);
                for (const auto& [t, ct] : p.terms_) r.add(t, ca * cb * ct);
            }
        return r;
    }

    // Linear extension of a map on basis labels.
    template <class F>
    LinComb map_terms(F&& f) const {
        LinComb r;
        for (const auto& [b, c] : terms_) {
            LinComb img = f(b);
            for (const auto& [t, ct] : img.terms_) r.add(t, c * ct);
        }
        return r;
    }

    // Linear extension of a label -> label' map into another LinComb type.
    template <class B2, class F>
    LinComb<B2, R> map_labels(F&& f) const {
        LinComb<B2, R> r;
        for (const auto& [b, c] : terms_) r.add(f(b), c);
        return r;
    }

    // Pairing <x, y> = sum_{a,b} x_a y_b dual(a, b).
    template <class F>
    static R pairing(const LinComb& x, const LinComb& y, F&& dual) {
        R acc(0);
        for (const auto& [a, ca] : x.terms_)
            for (const auto& [b, cb] : y.terms_) acc = acc + ca * cb * dual(a, b);
        return acc;
    }

    std::string str(const std::function<std::string(const B&)>& label,
                    const std::function<std::string(const R&)>& scalar) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [b, c] : terms_) {
            std::string cs = scalar(c);
            // A sign past position 0 means a multi-term scalar: parenthesize it
            // whole rather than splitting off its leading sign.
            bool needs_parens = cs.size() > 1 && cs.find_first_of("+-", 1) != std::string::npos;
            bool neg = !needs_parens && !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) { os << "-"; cs = cs.substr(1); }
            } else {
                os << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            if (cs == "1") {
                os << label(b);
            } else if (needs_parens) {
                os << "(" << cs << ")*" << label(b);
            } else {
                os << cs << "*" << label(b);
            }
            first = false;
        }
        return os.str();
    }

  private:
    Terms terms_;
};

template <class B, class R>
LinComb<B, R> operator*(const R& s, const LinComb<B, R>& x) { return x * s; }

template <class B, class R>
bool is_zero(const LinComb<B, R>& x) { return x.is_zero(); }

} // namespace hopf
