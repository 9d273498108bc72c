#include "nccw/intlinalg.hpp"

#include <sstream>
#include <stdexcept>

namespace nccw {

namespace {

// Position of the nonzero entry of smallest absolute value in the block [t.., t..], if any.
bool smallest_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            if (!found || abs(d(i, j)) < abs(d(pi, pj))) {
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()), 0};
    IntMatrix& d = s.D;
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi = 0, pj = 0;
        if (!smallest_pivot(d, t, pi, pj)) break;
        d.swap_rows(t, pi), s.U.swap_rows(t, pi);
        d.swap_cols(t, pj), s.V.swap_cols(t, pj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0) continue;
                Integer q = d(i, t) / d(t, t);  // truncating: the remainder is smaller than the pivot
                d.add_row_multiple(i, t, -q), s.U.add_row_multiple(i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0) continue;
                Integer q = d(t, j) / d(t, t);
                d.add_col_multiple(j, t, -q), s.V.add_col_multiple(j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) {
                // A remainder survived: move the smallest one into the pivot and sweep again.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < d.rows(); ++i)
                    if (d(i, t) != 0 && abs(d(i, t)) < abs(d(bi, bj))) bi = i, bj = t;
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d(t, j) != 0 && abs(d(t, j)) < abs(d(bi, bj))) bi = t, bj = j;
                d.swap_rows(t, bi), s.U.swap_rows(t, bi);
                d.swap_cols(t, bj), s.V.swap_cols(t, bj);
                continue;
            }
            std::size_t bad = d.rows();
            for (std::size_t i = t + 1; i < d.rows() && bad == d.rows(); ++i)
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == d.rows()) break;
            d.add_row_multiple(t, bad, Integer(1)), s.U.add_row_multiple(t, bad, Integer(1));
        }
        if (d(t, t) < 0) d.negate_row(t), s.U.negate_row(t);
        s.rank = t + 1;
    }
    return s;
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string out;
    for (const auto& d : invariant_factors) out += (out.empty() ? "" : " + ") + std::string("Z/") + d.get_str();
    if (free_rank > 0) {
        out += out.empty() ? "" : " + ";
        out += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    }
    return out;
}

AbelianGroup parse_abelian_group(const std::string& text) {
    AbelianGroup g;
    if (text == "0") return g;
    std::istringstream in(text);
    std::string term;
    bool expect_plus = false;
    while (in >> term) {
        if (expect_plus) {
            if (term != "+") throw std::invalid_argument("malformed group: " + text);
            expect_plus = false;
            continue;
        }
        if (term == "Z") {
            g.free_rank += 1;
        } else if (term.rfind("Z^", 0) == 0) {
            g.free_rank += std::stoul(term.substr(2));
        } else if (term.rfind("Z/", 0) == 0) {
            const Integer d = parse_integer(term.substr(2));
            if (d < 2 || (!g.invariant_factors.empty() && d % g.invariant_factors.back() != 0))
                throw std::invalid_argument("invariant factors must be >= 2 and form a divisor chain: " + text);
            g.invariant_factors.push_back(d);
        } else {
            throw std::invalid_argument("malformed group: " + text);
        }
        expect_plus = true;
    }
    if (!expect_plus) throw std::invalid_argument("malformed group: " + text);
    return g;
}

bool is_surjective(const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    if (s.rank != m.rows()) return false;
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.D(i, i) != 1) return false;
    return true;
}

KernelCokernel kernel_and_cokernel(const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    KernelCokernel kc;
    for (std::size_t j = s.rank; j < m.cols(); ++j) kc.kernel_basis.push_back(s.V.column(j));
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.D(i, i) != 1) kc.cokernel.invariant_factors.push_back(s.D(i, i));
    kc.cokernel.free_rank = m.rows() - s.rank;
    return kc;
}

Integer Polynomial::eval(const Integer& t) const {
    Integer acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::string Polynomial::to_string(char var) const {
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Integer& c = coeffs[k];
        if (c == 0) continue;
        Integer a = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (a != 1 || k == 0) out += a.get_str();
        if (k >= 1) out += var;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

// Faddeev-LeVerrier; every division by k is exact over Z.
Polynomial char_poly(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("char_poly of a non-square matrix");
    const std::size_t n = a.rows();
    Polynomial p;
    p.coeffs.assign(n + 1, Integer(0));
    p.coeffs[n] = 1;
    IntMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += p.coeffs[n - k + 1];
        IntMatrix am = a * m;
        Integer tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        if (tr % Integer(static_cast<unsigned long>(k)) != 0) throw std::logic_error("char_poly: inexact trace division");
        p.coeffs[n - k] = -tr / Integer(static_cast<unsigned long>(k));
    }
    return p;
}

// Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            a.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::vector<IntVector> lattice_hnf(const IntMatrix& m) {
    IntMatrix g = m.transpose();  // generators as rows
    std::size_t r = 0;
    for (std::size_t j = 0; j < g.cols() && r < g.rows(); ++j) {
        for (;;) {
            std::size_t best = g.rows();
            for (std::size_t i = r; i < g.rows(); ++i)
                if (g(i, j) != 0 && (best == g.rows() || abs(g(i, j)) < abs(g(best, j)))) best = i;
            if (best == g.rows()) break;
            g.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < g.rows(); ++i) {
                if (g(i, j) == 0) continue;
                g.add_row_multiple(i, r, -Integer(g(i, j) / g(r, j)));
                if (g(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (g(r, j) == 0) continue;
        if (g(r, j) < 0) g.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), g(i, j).get_mpz_t(), g(r, j).get_mpz_t());
            g.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < r; ++i) out.push_back(g.row(i));
    return out;
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) return false;
    return lattice_hnf(a) == lattice_hnf(b);
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_integer: size mismatch");
    SmithForm s = smith_normal_form(m);
    IntVector ub = s.U * b;
    IntVector y(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i < s.rank) {
            if (ub[i] % s.D(i, i) != 0) return std::nullopt;
            y[i] = ub[i] / s.D(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V * y;
}

Integer row_gcd(const IntMatrix& m, std::size_t i) {
    Integer g = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m(i, j).get_mpz_t());
    return g;
}

}  // namespace nccw
