#include "ladderlie/suites.hpp"

#include "ladderlie/fock.hpp"
#include "ladderlie/gl.hpp"
#include "ladderlie/heisenberg.hpp"
#include "ladderlie/hopf.hpp"
#include "ladderlie/lambda.hpp"
#include "ladderlie/lie.hpp"
#include "ladderlie/serialize.hpp"
#include "ladderlie/smodule.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace ladderlie {
namespace {

// Per-trial splitting: trial t draws from its own splitmix64 stream
// seeded with seed + t, so trial outcomes do not depend on execution
// order or parallel scheduling.
struct TrialRng {
    std::uint64_t state;

    explicit TrialRng(std::uint64_t seed, long trial)
        : state(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1))
    {
    }

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    Index below(Index bound) { return static_cast<Index>(next() % static_cast<std::uint64_t>(bound)); }
};

struct Sink {
    std::vector<std::string>& failures;

    void check(bool ok, const std::function<std::string()>& describe)
    {
        if (!ok && failures.size() < 32)
            failures.push_back(describe());
    }
};

std::string gen_name(const GenIndex& g)
{
    return "Z[" + std::to_string(g.n) + "," + std::to_string(g.m) + "]";
}

bool is_homogeneous(const LieElement& x, Index degree)
{
    for (const auto& [g, c] : x.terms())
        if (g.degree() != degree)
            return false;
    return true;
}

// all multisets of positive integers with sum <= bound
std::vector<std::vector<Index>> partitions_up_to(Index bound)
{
    std::vector<std::vector<Index>> out;
    std::vector<Index> cur;
    std::function<void(Index, Index)> rec = [&](Index remaining, Index max_part) {
        out.push_back(cur);
        for (Index p = 1; p <= std::min(remaining, max_part); ++p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(bound, bound);
    return out;
}

// exact rank of a list of row vectors over Q(i)
std::size_t rank(std::vector<std::vector<Scalar>> rows)
{
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c].is_zero())
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        Scalar inv = rows[r][c].inverse();
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero())
                continue;
            Scalar factor = rows[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] -= factor * rows[r][j];
        }
        ++r;
    }
    return r;
}

// ---------------------------------------------------------------- suites

void suite_antisymmetry(Sink& sink, const SuiteOptions& opts)
{
    const Index B = opts.max_index > 0 ? opts.max_index : 12;
    for (Index n = 0; n <= B; ++n)
        for (Index m = 0; m <= B; ++m)
            for (Index l = 0; l <= B; ++l)
                for (Index s = 0; s <= B; ++s) {
                    GenIndex a(n, m), b(l, s);
                    LieElement r = bracket_basis(a, b) + bracket_basis(b, a);
                    sink.check(r.is_zero(), [&] {
                        return "[a,b]+[b,a] != 0 for a=" + gen_name(a) + " b=" + gen_name(b) +
                               ": " + format(r);
                    });
                }
}

void suite_jacobi(Sink& sink, const SuiteOptions& opts)
{
    const Index B = opts.max_index > 0 ? opts.max_index : 10;
    const long trials = opts.trials > 0 ? opts.trials : 1000;
    for (long t = 0; t < trials; ++t) {
        TrialRng rng(opts.seed, t);
        GenIndex a(rng.below(B + 1), rng.below(B + 1));
        GenIndex b(rng.below(B + 1), rng.below(B + 1));
        GenIndex c(rng.below(B + 1), rng.below(B + 1));
        LieElement x = LieElement::generator(a.n, a.m);
        LieElement y = LieElement::generator(b.n, b.m);
        LieElement z = LieElement::generator(c.n, c.m);
        LieElement r = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) +
                       bracket(bracket(z, x), y);
        sink.check(r.is_zero(), [&] {
            return "Jacobi fails for " + gen_name(a) + ", " + gen_name(b) + ", " +
                   gen_name(c) + ": " + format(r);
        });
    }
}

void suite_grading(Sink& sink, const SuiteOptions& opts)
{
    const Index B = opts.max_index > 0 ? opts.max_index : 10;
    for (Index n = 0; n <= B; ++n)
        for (Index m = 0; m <= B; ++m)
            for (Index l = 0; l <= B; ++l)
                for (Index s = 0; s <= B; ++s) {
                    GenIndex a(n, m), b(l, s);
                    LieElement br = bracket_basis(a, b);
                    sink.check(is_homogeneous(br, a.degree() + b.degree()), [&] {
                        return "bracket of " + gen_name(a) + ", " + gen_name(b) +
                               " is not homogeneous of degree " +
                               std::to_string(a.degree() + b.degree()) + ": " + format(br);
                    });
                    // L0 commutative; [L+-, L0] stays on the same side
                    if (b.degree() == 0) {
                        if (a.degree() == 0)
                            sink.check(br.is_zero(), [&] {
                                return "L0 not commutative at " + gen_name(a) + ", " +
                                       gen_name(b);
                            });
                        else {
                            GradedPart side =
                                a.degree() > 0 ? GradedPart::plus : GradedPart::minus;
                            sink.check(project(br, side) == br, [&] {
                                return "[" + gen_name(a) + "," + gen_name(b) +
                                       "] leaves the graded side";
                            });
                        }
                    }
                }
    // projections partition any element
    TrialRng rng(opts.seed, 0);
    for (int t = 0; t < 50; ++t) {
        LieElement x;
        for (int i = 0; i < 5; ++i)
            x.add_term(GenIndex(rng.below(B + 1), rng.below(B + 1)),
                       Scalar(Rational(static_cast<long>(rng.below(7)) - 3)));
        LieElement re = project(x, GradedPart::plus) + project(x, GradedPart::zero) +
                        project(x, GradedPart::minus);
        sink.check(re == x, [&] { return "graded projections do not sum back: " + format(x); });
        auto parts = degree_decompose(x);
        LieElement sum;
        for (const auto& [d, comp] : parts) {
            sum += comp;
            sink.check(is_homogeneous(comp, d),
                       [&] { return "inhomogeneous degree component of " + format(x); });
        }
        sink.check(sum == x, [&] { return "degree components do not sum back: " + format(x); });
    }
}

void suite_module(Sink& sink, const SuiteOptions& opts)
{
    const Index B = opts.max_index > 0 ? opts.max_index : 8;
    const Index K = 16;
    for (Index n = 0; n <= B; ++n)
        for (Index m = 0; m <= B; ++m)
            for (Index l = 0; l <= B; ++l)
                for (Index s = 0; s <= B; ++s)
                    for (Index k = 0; k <= K; ++k) {
                        LieElement x = LieElement::generator(n, m);
                        LieElement y = LieElement::generator(l, s);
                        SVector tk = SVector::basis(k);
                        SVector lhs = act(bracket(x, y), tk);
                        SVector rhs = act(x, act(y, tk)) - act(y, act(x, tk));
                        sink.check(lhs == rhs, [&] {
                            return "representation property fails for " +
                                   gen_name(GenIndex(n, m)) + ", " + gen_name(GenIndex(l, s)) +
                                   " on t[" + std::to_string(k) + "]";
                        });
                    }
    // graded module of finite type: x in l_d moves t_k to degree k+d
    for (Index n = 0; n <= B; ++n)
        for (Index m = 0; m <= B; ++m)
            for (Index k = 0; k <= K; ++k) {
                SVector img = act(LieElement::generator(n, m), SVector::basis(k));
                sink.check(img.is_zero() || img == SVector::basis(k + n - m), [&] {
                    return gen_name(GenIndex(n, m)) + " t[" + std::to_string(k) +
                           "] is not 0 or t[k+d]";
                });
            }
    // star product: associative, commutative, unital, degree-additive
    for (Index a = 0; a <= 10; ++a)
        for (Index b = 0; b <= 10; ++b) {
            SVector ta = SVector::basis(a), tb = SVector::basis(b);
            sink.check(star(ta, tb) == SVector::basis(a + b),
                       [&] { return "star is not degree-additive"; });
            sink.check(star(ta, tb) == star(tb, ta), [&] { return "star is not commutative"; });
            for (Index c = 0; c <= 6; ++c)
                sink.check(star(star(ta, tb), SVector::basis(c)) ==
                               star(ta, star(tb, SVector::basis(c))),
                           [&] { return "star is not associative"; });
        }
    TrialRng rng(opts.seed, 1);
    for (int t = 0; t < 20; ++t) {
        SVector v;
        for (int i = 0; i < 4; ++i)
            v.add_term(rng.below(12), Scalar(Rational(static_cast<long>(rng.below(9)) - 4)));
        sink.check(star(SVector::basis(0), v) == v, [&] { return "t[0] is not a star unit"; });
    }
    // highest-weight structure at t_0
    for (Index j = 1; j <= 16; ++j)
        sink.check(act(LieElement::generator(0, j), SVector::basis(0)).is_zero(),
                   [&] { return "Z[0," + std::to_string(j) + "] does not kill t[0]"; });
    sink.check(is_singular(SVector::basis(0)), [] { return std::string("t[0] not singular"); });
    for (Index k = 1; k <= 16; ++k)
        sink.check(!is_singular(SVector::basis(k)),
                   [&] { return "t[" + std::to_string(k) + "] wrongly singular"; });
    for (Index k = 0; k <= 16; ++k)
        sink.check(hw_generate(k) == SVector::basis(k),
                   [&] { return "hw_generate(" + std::to_string(k) + ") != t[k]"; });
}

void suite_matrix(Sink& sink, const SuiteOptions& opts)
{
    const Index B = opts.max_index > 0 ? opts.max_index : 6;
    const Index N = 20;
    for (Index n = 0; n <= B; ++n)
        for (Index m = 0; m <= B; ++m) {
            TruncatedMatrix mat = matrix(LieElement::generator(n, m), N);
            bool ok = true;
            for (Index r = 0; r <= N && ok; ++r)
                for (Index c = 0; c <= N && ok; ++c) {
                    Scalar expected =
                        (c >= m && r == c - m + n) ? Scalar(1) : Scalar(0);
                    ok = mat.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] ==
                         expected;
                }
            sink.check(ok, [&] {
                return "matrix of " + gen_name(GenIndex(n, m)) + " deviates from closed form";
            });
        }
    // commutator matches the bracket image on the interior block
    for (Index n = 0; n <= B; ++n)
        for (Index m = 0; m <= B; ++m)
            for (Index l = 0; l <= B; ++l)
                for (Index s = 0; s <= B; ++s) {
                    LieElement x = LieElement::generator(n, m);
                    LieElement y = LieElement::generator(l, s);
                    TruncatedMatrix mx = matrix(x, N), my = matrix(y, N);
                    TruncatedMatrix comm = matrix_multiply(mx, my);
                    comm -= matrix_multiply(my, mx);
                    TruncatedMatrix mb = matrix(bracket(x, y), N);
                    const Index interior = N + 1 - 2 * B;
                    bool ok = true;
                    for (Index r = 0; r < interior && ok; ++r)
                        for (Index c = 0; c < interior && ok; ++c)
                            ok = comm.entries[static_cast<std::size_t>(r)]
                                             [static_cast<std::size_t>(c)] ==
                                 mb.entries[static_cast<std::size_t>(r)]
                                           [static_cast<std::size_t>(c)];
                    sink.check(ok, [&] {
                        return "truncated commutator mismatch for " + gen_name(GenIndex(n, m)) +
                               ", " + gen_name(GenIndex(l, s));
                    });
                }
    // faithfulness: distinct generators give independent truncations
    {
        const Index Nf = 6;
        std::vector<std::vector<Scalar>> rows;
        for (Index n = 0; n < Nf; ++n)
            for (Index m = 0; m < Nf; ++m) {
                TruncatedMatrix mat = matrix(LieElement::generator(n, m), Nf);
                std::vector<Scalar> flat;
                for (const auto& row : mat.entries)
                    flat.insert(flat.end(), row.begin(), row.end());
                rows.push_back(std::move(flat));
            }
        sink.check(rank(rows) == rows.size(),
                   [] { return std::string("generator truncations are linearly dependent"); });
    }
}

void suite_embedding(Sink& sink, const SuiteOptions& opts)
{
    const Index B = opts.max_index > 0 ? opts.max_index : 8;
    for (Index i = 0; i <= B; ++i)
        for (Index j = 0; j <= B; ++j)
            for (Index n = 0; n <= B; ++n)
                for (Index m = 0; m <= B; ++m) {
                    GlElement x = GlElement::unit(i, j), y = GlElement::unit(n, m);
                    LieElement lhs = embed_phi(gl_bracket(x, y));
                    LieElement rhs = bracket(embed_phi(x), embed_phi(y));
                    sink.check(lhs == rhs, [&] {
                        return "phi not a homomorphism at E[" + std::to_string(i) + "," +
                               std::to_string(j) + "], E[" + std::to_string(n) + "," +
                               std::to_string(m) + "]";
                    });
                    sink.check(trace(gl_bracket(x, y)).is_zero(),
                               [&] { return std::string("bracket has nonzero trace"); });
                }
    // injectivity on the span of units with indices <= 4, via truncation
    {
        const Index Bu = 4, N = 2 * Bu + 2;
        std::vector<std::vector<Scalar>> rows;
        for (Index i = 0; i <= Bu; ++i)
            for (Index j = 0; j <= Bu; ++j) {
                TruncatedMatrix mat = matrix(embed_phi(GlElement::unit(i, j)), N);
                std::vector<Scalar> flat;
                for (const auto& row : mat.entries)
                    flat.insert(flat.end(), row.begin(), row.end());
                rows.push_back(std::move(flat));
            }
        sink.check(rank(rows) == rows.size(),
                   [] { return std::string("phi has a kernel on the bounded span"); });
    }
    // eps_i pairing on the Cartan part
    sink.check(epsilon(1, GlElement::unit(1, 1)) == Scalar(1),
               [] { return std::string("eps_1(E[1,1]) != 1"); });
    sink.check(epsilon(2, GlElement::unit(0, 0)).is_zero(),
               [] { return std::string("eps_2(E[0,0]) != 0"); });
    sink.check(epsilon(1, GlElement::unit(1, 1) - GlElement::unit(2, 2)) == Scalar(1),
               [] { return std::string("eps_1(E[1,1]-E[2,2]) != 1"); });
}

void suite_chevalley(Sink& sink, const SuiteOptions& opts)
{
    const Index B = opts.max_index > 0 ? opts.max_index : 10;
    for (Index i = 0; i <= B; ++i)
        for (Index j = 0; j <= B; ++j) {
            LieElement ef = bracket(chevalley_e(i), chevalley_f(j));
            LieElement expected = i == j ? coroot(i) : LieElement::zero();
            sink.check(ef == expected, [&] {
                return "[e_" + std::to_string(i) + ", f_" + std::to_string(j) +
                       "] != delta coroot: " + format(ef);
            });
            long A = i == j ? 2 : ((i - j == 1 || j - i == 1) ? -1 : 0);
            LieElement he = bracket(coroot(i), chevalley_e(j));
            LieElement hf = bracket(coroot(i), chevalley_f(j));
            sink.check(he == Scalar(A) * chevalley_e(j), [&] {
                return "[h_" + std::to_string(i) + ", e_" + std::to_string(j) + "] mismatch";
            });
            sink.check(hf == Scalar(-A) * chevalley_f(j), [&] {
                return "[h_" + std::to_string(i) + ", f_" + std::to_string(j) + "] mismatch";
            });
            sink.check(cartan_pairing(i, j) == Scalar(A), [&] {
                return "cartan_pairing(" + std::to_string(i) + "," + std::to_string(j) +
                       ") mismatch";
            });
        }
}

void suite_involution(Sink& sink, const SuiteOptions& opts)
{
    const Index B = opts.max_index > 0 ? opts.max_index : 10;
    for (Index n = 0; n <= B; ++n)
        for (Index m = 0; m <= B; ++m) {
            LieElement x = LieElement::generator(n, m);
            sink.check(involution_C(involution_C(x)) == x,
                       [&] { return "C^2 != id at " + gen_name(GenIndex(n, m)); });
            sink.check(is_homogeneous(involution_C(x), -(n - m)),
                       [&] { return "C does not flip the grading at " + gen_name(GenIndex(n, m)); });
            for (Index l = 0; l <= B; ++l)
                for (Index s = 0; s <= B; ++s) {
                    LieElement y = LieElement::generator(l, s);
                    sink.check(involution_C(bracket(x, y)) ==
                                   bracket(involution_C(x), involution_C(y)),
                               [&] {
                                   return "C not a homomorphism at " + gen_name(GenIndex(n, m)) +
                                          ", " + gen_name(GenIndex(l, s));
                               });
                }
        }
    for (Index i = 0; i <= B; ++i) {
        sink.check(involution_C(chevalley_f(i)) == -chevalley_e(i),
                   [&] { return "C(f_" + std::to_string(i) + ") != -e_i"; });
        sink.check(involution_C(chevalley_e(i)) == -chevalley_f(i),
                   [&] { return "C(e_" + std::to_string(i) + ") != -f_i"; });
        sink.check(involution_C(coroot(i)) == -coroot(i),
                   [&] { return "C(h_" + std::to_string(i) + ") != -h_i"; });
    }
}

void suite_heisenberg(Sink& sink, const SuiteOptions& opts)
{
    const Index B = opts.max_index > 0 ? opts.max_index : 20;
    // a+/a- are bijective relabelings compatible with the involution:
    // d(a+(x)) = -a-(C(x)) on basis generators
    for (Index k = 0; k <= B; ++k) {
        GenIndex plus(k, 0);
        sink.check(a_plus_inverse(a_plus(plus)) == plus,
                   [&] { return "a+ not inverted at " + gen_name(plus); });
        GenIndex minus(0, k);
        sink.check(a_minus_inverse(a_minus(minus)) == minus,
                   [&] { return "a- not inverted at " + gen_name(minus); });
        // C(Z[k,0]) = -Z[0,k]; the label is preserved and the sign flips
        LieElement img = involution_C(LieElement::generator(k, 0));
        GenIndex mirrored = img.terms().begin()->first;
        Scalar sign = img.terms().begin()->second;
        sink.check(a_minus(mirrored).n == a_plus(plus).n && sign == Scalar(-1), [&] {
            return "involution compatibility of a+/a- fails at " + gen_name(plus);
        });
    }
    // l+ and l- are abelian
    for (Index n = 0; n <= 10; ++n)
        for (Index m = 0; m <= 10; ++m) {
            sink.check(bracket_basis(GenIndex(n, 0), GenIndex(m, 0)).is_zero(),
                       [&] { return std::string("[l+, l+] != 0"); });
            sink.check(bracket_basis(GenIndex(0, n), GenIndex(0, m)).is_zero(),
                       [&] { return std::string("[l-, l-] != 0"); });
        }
    // cocycle antisymmetry and the (degenerate) 2-cocycle identity
    for (Index n = -8; n <= 8; ++n)
        for (Index m = -8; m <= 8; ++m) {
            HeisLabel a{Side::plus, n}, b{Side::plus, m};
            sink.check(cocycle(a, b) == -cocycle(b, a),
                       [&] { return std::string("cocycle not antisymmetric"); });
            // [x,y] = 0 in the abelian source, so each cyclic summand is
            // the cocycle against a zero bracket
            sink.check(cocycle(HeisLabel{Side::plus, 0}, HeisLabel{Side::plus, 0}).is_zero(),
                       [&] { return std::string("cocycle identity violated"); });
        }
    sink.check(cocycle(HeisLabel{Side::plus, 3}, HeisLabel{Side::plus, -3}) ==
                   Scalar(Rational(3)),
               [] { return std::string("c(Z_3, Z_-3) != 3"); });
    // Heisenberg bracket is central and matches the cocycle
    for (Index n = -6; n <= 6; ++n)
        for (Index m = -6; m <= 6; ++m) {
            HeisenbergElement x = HeisenbergElement::generator(HeisLabel{Side::plus, n});
            HeisenbergElement y = HeisenbergElement::generator(HeisLabel{Side::plus, m});
            HeisenbergElement br = heis_bracket(x, y);
            sink.check(br.terms().empty() &&
                           br.central_part() ==
                               cocycle(HeisLabel{Side::plus, n}, HeisLabel{Side::plus, m}),
                       [&] { return std::string("Heisenberg bracket is not the cocycle"); });
            sink.check(heis_bracket(x, HeisenbergElement::central(Scalar(1))).is_zero(),
                       [&] { return std::string("[Z_n, C] != 0"); });
        }
    // Fock commutation [Z_n, Z_m] = n delta_{n,-m} id on monomials
    FockConfig cfg{Scalar(Rational(1, 2)), Scalar(Rational(1, 3))};
    auto monomials = partitions_up_to(8);
    for (Index n = -6; n <= 6; ++n)
        for (Index m = -6; m <= 6; ++m)
            for (const auto& mon : monomials) {
                FockVector v = FockVector::monomial(mon);
                FockVector lhs = fock_apply(cfg, n, fock_apply(cfg, m, v)) -
                                 fock_apply(cfg, m, fock_apply(cfg, n, v));
                FockVector rhs;
                if (n == -m)
                    rhs = Scalar(Rational(static_cast<long>(n))) * v;
                sink.check(lhs == rhs, [&] {
                    return "Fock commutation fails for n=" + std::to_string(n) +
                           " m=" + std::to_string(m);
                });
            }
}

void suite_virasoro(Sink& sink, const SuiteOptions& opts)
{
    const Index B = opts.max_index > 0 ? opts.max_index : 4;
    const std::vector<FockConfig> params = {
        {Scalar(0), Scalar(0)},
        {Scalar(1), Scalar(0)},
        {Scalar(0), Scalar(1)},
        {Scalar(Rational(1, 2)), Scalar(Rational(1, 3))},
        {Scalar(2), Scalar(Rational(3, 2))},
    };
    auto monomials = partitions_up_to(6);
    for (const auto& cfg : params)
        for (Index n = -B; n <= B; ++n)
            for (Index m = -B; m <= B; ++m)
                for (const auto& mon : monomials) {
                    FockVector v = FockVector::monomial(mon);
                    FockVector r = virasoro_residual(cfg, n, m, v);
                    sink.check(r.is_zero(), [&] {
                        std::ostringstream os;
                        os << "Virasoro residual nonzero at n=" << n << " m=" << m
                           << " mu=" << scalar_to_string(cfg.mu)
                           << " lambda=" << scalar_to_string(cfg.lambda) << " v="
                           << to_json(v).dump() << " residual=" << to_json(r).dump();
                        return os.str();
                    });
                }
    // degree shift and window independence
    FockConfig cfg{Scalar(1), Scalar(Rational(1, 3))};
    for (Index n = -3; n <= 3; ++n)
        for (const auto& mon : partitions_up_to(5)) {
            FockVector v = FockVector::monomial(mon);
            FockVector img = virasoro_L(cfg, n, v);
            if (n != 0)
                sink.check(img == virasoro_L(cfg, n, v, v.max_degree() + 4),
                           [&] { return std::string("L_n depends on the summation window"); });
            Index target = monomial_degree(mon) - n;
            bool homogeneous = true;
            for (const auto& [im, c] : img.terms()) {
                Index d = 0;
                for (Index k : im)
                    d += k;
                homogeneous = homogeneous && d == target;
            }
            sink.check(img.is_zero() || homogeneous,
                       [&] { return std::string("L_n does not shift Fock degree by -n"); });
        }
}

void suite_hopf_axioms(Sink& sink, const SuiteOptions& opts)
{
    const Index D = opts.max_index > 0 ? opts.max_index : 12;
    auto monomials = partitions_up_to(std::min<Index>(D, 10));
    using Triple = std::tuple<HopfMonomial, HopfMonomial, HopfMonomial>;
    for (const auto& mon : monomials) {
        HopfElement x = HopfElement::monomial(mon);
        TensorElement dx = coproduct(x);
        // cocommutativity
        sink.check(dx.swapped() == dx,
                   [&] { return "coproduct not cocommutative on " + format(x); });
        // coassociativity via three-leg expansion
        std::map<Triple, Scalar> left, right;
        for (const auto& [key, c] : dx.terms()) {
            TensorElement d_left = coproduct(HopfElement::monomial(key.first));
            for (const auto& [k2, c2] : d_left.terms()) {
                auto& slot = left[{k2.first, k2.second, key.second}];
                slot += c * c2;
                if (slot.is_zero())
                    left.erase({k2.first, k2.second, key.second});
            }
            TensorElement d_right = coproduct(HopfElement::monomial(key.second));
            for (const auto& [k2, c2] : d_right.terms()) {
                auto& slot = right[{key.first, k2.first, k2.second}];
                slot += c * c2;
                if (slot.is_zero())
                    right.erase({key.first, k2.first, k2.second});
            }
        }
        sink.check(left == right, [&] { return "coproduct not coassociative on " + format(x); });
        // counit axioms
        HopfElement left_counit, right_counit;
        for (const auto& [key, c] : dx.terms()) {
            if (key.first.empty())
                left_counit.add_term(key.second, c);
            if (key.second.empty())
                right_counit.add_term(key.first, c);
        }
        sink.check(left_counit == x && right_counit == x,
                   [&] { return "counit axiom fails on " + format(x); });
    }
    // antipode axiom m(S (x) id) Delta = counit . unit, up to degree D
    for (const auto& mon : partitions_up_to(D)) {
        HopfElement x = HopfElement::monomial(mon);
        HopfElement conv;
        TensorElement dx2 = coproduct(x);
        for (const auto& [key, c] : dx2.terms())
            conv += c * (antipode(HopfElement::monomial(key.first)) *
                         HopfElement::monomial(key.second));
        HopfElement expected = counit(x) * HopfElement::one();
        sink.check(conv == expected, [&] { return "antipode axiom fails on " + format(x); });
    }
    // D3 reproduces the antipode on generators; D1 is m . Delta
    for (Index m = 0; m <= D; ++m) {
        HopfElement expected_d3 =
            m == 0 ? HopfElement{} : antipode(HopfElement::generator(m));
        sink.check(D3(m) == expected_d3,
                   [&] { return "D3(" + std::to_string(m) + ") != antipode"; });
        HopfElement md;
        TensorElement dg = coproduct(HopfElement::generator(m));
        for (const auto& [key, c] : dg.terms())
            md += c * (HopfElement::monomial(key.first) * HopfElement::monomial(key.second));
        sink.check(D1(m) == md, [&] { return "D1(" + std::to_string(m) + ") != m . Delta"; });
    }
    // Y is a derivation
    TrialRng rng(opts.seed, 2);
    for (int t = 0; t < 60; ++t) {
        HopfMonomial a, b;
        for (Index i = 0, len = rng.below(3) + 1; i < len; ++i)
            a.push_back(rng.below(4) + 1);
        for (Index i = 0, len = rng.below(3) + 1; i < len; ++i)
            b.push_back(rng.below(4) + 1);
        HopfElement u = HopfElement::monomial(a), v = HopfElement::monomial(b);
        sink.check(grading_Y(u * v) == grading_Y(u) * v + u * grading_Y(v),
                   [&] { return "Y violates Leibniz on " + format(u) + ", " + format(v); });
    }
    // character convolution routes agree for random small characters
    for (long t = 0; t < 40; ++t) {
        TrialRng rng2(opts.seed, 100 + t);
        Character f, g;
        const Scalar pool[] = {Scalar(-1), Scalar(0), Scalar(1), Scalar(Rational(1, 2))};
        for (Index k = 1; k <= 8; ++k) {
            f.values[k] = pool[rng2.below(4)];
            g.values[k] = pool[rng2.below(4)];
        }
        for (Index m = 0; m <= 8; ++m) {
            try {
                char_convolve(f, g, HopfElement::generator(m));
            } catch (const std::logic_error& e) {
                sink.check(false, [&] {
                    return "char_convolve routes disagree at m=" + std::to_string(m);
                });
            }
        }
    }
}

void suite_sy_equivalence(Sink& sink, const SuiteOptions& opts)
{
    const Index D = opts.max_index > 0 ? opts.max_index : 12;
    for (Index m = 0; m <= D; ++m) {
        HopfElement a = s_star_y(m), b = s_star_y_direct(m);
        sink.check(a == b, [&] {
            return "S*Y routes disagree at m=" + std::to_string(m) + ": recursion " +
                   format(a) + " vs direct " + format(b);
        });
    }
}

void suite_lambda_diagrams(Sink& sink, const SuiteOptions& opts)
{
    const Index B = opts.max_index > 0 ? opts.max_index : 10;
    // bullet: associative, commutative, unital up to level 20
    std::vector<LambdaBasis> labels;
    for (Index l = 0; l <= 20; ++l) {
        labels.emplace_back(Parity::even, l);
        if (l >= 1)
            labels.emplace_back(Parity::odd, l);
    }
    const LambdaBasis unit(Parity::even, 0);
    for (const auto& a : labels)
        for (const auto& b : labels) {
            sink.check(bullet(a, b) == bullet(b, a),
                       [] { return std::string("bullet not commutative"); });
            sink.check(bullet(unit, a) == a, [] { return std::string("bullet unit fails"); });
            for (const auto& c : labels)
                if (c.level <= 6)
                    sink.check(bullet(bullet(a, b), c) == bullet(a, bullet(b, c)),
                               [] { return std::string("bullet not associative"); });
        }
    // phi is an algebra isomorphism S -> Lambda
    for (Index u = 0; u <= 20; ++u)
        for (Index v = 0; v <= 20; ++v) {
            LambdaElement lhs = phi_iso(star(SVector::basis(u), SVector::basis(v)));
            LambdaElement rhs = bullet(LambdaElement::basis(phi_iso(u)),
                                       LambdaElement::basis(phi_iso(v)));
            sink.check(lhs == rhs, [&] {
                return "phi breaks the product at t[" + std::to_string(u) + "], t[" +
                       std::to_string(v) + "]";
            });
            sink.check(phi_inv(phi_iso(SVector::basis(u))) == SVector::basis(u),
                       [&] { return std::string("phi_inv . phi != id"); });
        }
    // the four commuting diagrams
    for (Index n = 0; n <= B; ++n)
        for (Index k = 0; k <= B; ++k) {
            for (GenIndex g : {GenIndex(2 * n, 0), GenIndex(0, 2 * n)})
                sink.check(diagram_check(g, k), [&] {
                    return "diagram fails for " + gen_name(g) + " at t[" + std::to_string(k) + "]";
                });
            if (n >= 1)
                for (GenIndex g : {GenIndex(2 * n - 1, 0), GenIndex(0, 2 * n - 1)})
                    sink.check(diagram_check(g, k), [&] {
                        return "diagram fails for " + gen_name(g) + " at t[" +
                               std::to_string(k) + "]";
                    });
        }
    // operators for distinct labels commute (the algebras are abelian)
    for (Index a = -5; a <= 5; ++a)
        for (Index b = -5; b <= 5; ++b)
            for (const auto& l : labels) {
                if (l.level > 10)
                    continue;
                LambdaElement w = LambdaElement::basis(l);
                for (Side side : {Side::plus, Side::minus}) {
                    LambdaElement ab = lambda_act(side, a, lambda_act(side, b, w));
                    LambdaElement ba = lambda_act(side, b, lambda_act(side, a, w));
                    sink.check(ab == ba,
                               [] { return std::string("lambda operators do not commute"); });
                }
            }
}

using SuiteFn = void (*)(Sink&, const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"antisymmetry", suite_antisymmetry},
        {"jacobi", suite_jacobi},
        {"grading", suite_grading},
        {"module", suite_module},
        {"matrix", suite_matrix},
        {"embedding", suite_embedding},
        {"chevalley", suite_chevalley},
        {"involution", suite_involution},
        {"heisenberg", suite_heisenberg},
        {"virasoro", suite_virasoro},
        {"hopf-axioms", suite_hopf_axioms},
        {"sy-equivalence", suite_sy_equivalence},
        {"lambda-diagrams", suite_lambda_diagrams},
    };
    return table;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry())
            n.push_back(name);
        return n;
    }();
    return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const SuiteOptions& opts)
{
    std::vector<SuiteReport> reports;
    auto run_one = [&](const std::string& suite, SuiteFn fn) {
        SuiteReport report;
        report.suite = suite;
        report.seed = opts.seed;
        report.trials = opts.trials;
        Sink sink{report.failures};
        auto start = std::chrono::steady_clock::now();
        fn(sink, opts);
        report.elapsed_ms = static_cast<long>(
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count());
        reports.push_back(std::move(report));
    };
    if (name == "all") {
        for (const auto& [suite, fn] : registry())
            run_one(suite, fn);
        return reports;
    }
    for (const auto& [suite, fn] : registry())
        if (suite == name) {
            run_one(suite, fn);
            return reports;
        }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string report_to_json_line(const SuiteReport& report)
{
    json j{{"suite", report.suite},
           {"seed", report.seed},
           {"trials", report.trials},
           {"pass", report.pass()},
           {"failures", report.failures},
           {"elapsed_ms", report.elapsed_ms}};
    return j.dump();
}

} // namespace ladderlie
