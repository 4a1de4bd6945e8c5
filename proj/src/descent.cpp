#include "descent.hpp"

#include "error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace skewmat {

namespace {

FElem lift_elem(const FieldPtr& from, const FieldPtr& to, const FElem& x) {
    if (from->same(*to)) return x;
    if (from->kind() == FieldKind::prime && to->finite() &&
        to->characteristic() == from->characteristic())
        return to->from_int(x.v[0]);
    fail(errc::unsupported, "coefficient lift between these fields is not supported");
}

Vec lift_vec(const FieldPtr& from, const FieldPtr& to, const Vec& v) {
    Vec out;
    for (const auto& x : v) out.push_back(lift_elem(from, to, x));
    return out;
}

Poly lift_poly(const FieldPtr& from, const FieldPtr& to, const Poly& p) {
    return poly_make(to, lift_vec(from, to, p.c));
}

Vec unit_at(const FieldPtr& f, unsigned dim, unsigned t) {
    Vec v = zero_vec(f, dim);
    v[t] = f->one();
    return v;
}

FElem small_coeff(const FieldPtr& f, std::mt19937_64& rng) {
    if (f->finite()) {
        Int q = f->order();
        Int span = q < 64 ? q : Int(64);
        return f->element_at(Int(rng() % to_u64(span)));
    }
    return f->from_int(Int(static_cast<long long>(rng() % 7) - 3));
}

// Shared preparation for the splitting operations: lifts everything to E and
// validates the splitting data.
struct split_setup {
    FieldPtr e;
    StructAlgebra ae;
    Vec ue;
    unsigned n;
    std::vector<Vec> idem;
};

split_setup prepare_split(const SplitInput& in) {
    const FieldPtr& f = in.a.field();
    const FieldPtr& e = in.e;
    unsigned n = static_cast<unsigned>(in.k_basis.size());
    if (n == 0) fail(errc::bad_input, "empty subalgebra basis");
    if (in.a.dim() != n * n) fail(errc::bad_shape, "algebra dimension is not the square of the subalgebra degree");
    if (in.roots.size() != n) fail(errc::bad_input, "the number of roots must equal the subalgebra degree");
    for (std::size_t i = 0; i < in.roots.size(); ++i) {
        if (!in.roots[i].f->same(*e)) fail(errc::field_mismatch, "root from the wrong field");
        for (std::size_t j = i + 1; j < in.roots.size(); ++j)
            if (e->eq(in.roots[i], in.roots[j])) fail(errc::roots_not_distinct, "repeated root");
    }
    BasisFrame kframe(f, in.k_basis);
    if (!kframe.contains(in.u)) fail(errc::bad_input, "the generator lies outside the subalgebra");
    Poly mu = min_poly(in.a, in.u);
    if (static_cast<unsigned>(poly_deg(mu)) != n)
        fail(errc::bad_input, "the generator minimal polynomial does not have the subalgebra degree");
    if (!poly_squarefree(mu)) fail(errc::bad_input, "the generator minimal polynomial is not squarefree");
    split_setup s{e, base_change(in.a, e), lift_vec(f, e, in.u), n, {}};
    Poly mue = lift_poly(f, e, mu);
    for (const auto& r : in.roots)
        if (!e->is_zero(poly_eval(mue, r))) fail(errc::bad_input, "supplied value is not a root of the minimal polynomial");
    // Lagrange idempotents at the roots
    for (unsigned i = 0; i < n; ++i) {
        Vec acc = s.ae.unit();
        FElem denom = e->one();
        for (unsigned m = 0; m < n; ++m) {
            if (m == i) continue;
            acc = s.ae.mul(acc, sub_vec(s.ue, scale_vec(in.roots[m], s.ae.unit())));
            denom = e->mul(denom, e->sub(in.roots[i], in.roots[m]));
        }
        s.idem.push_back(scale_vec(e->inv(denom), acc));
    }
    // defining properties, exactly
    Vec total = zero_vec(e, s.ae.dim());
    for (unsigned i = 0; i < n; ++i) {
        total = add_vec(total, s.idem[i]);
        for (unsigned j = 0; j < n; ++j) {
            Vec prod = s.ae.mul(s.idem[i], s.idem[j]);
            Vec expect = i == j ? s.idem[i] : zero_vec(e, s.ae.dim());
            for (unsigned t = 0; t < s.ae.dim(); ++t)
                if (!e->eq(prod[t], expect[t])) fail(errc::split_failed, "idempotents are not orthogonal");
        }
        Vec left = s.ae.mul(s.ue, s.idem[i]);
        Vec right = scale_vec(in.roots[i], s.idem[i]);
        for (unsigned t = 0; t < s.ae.dim(); ++t)
            if (!e->eq(left[t], right[t])) fail(errc::split_failed, "idempotent is not an eigenvector of the generator");
    }
    for (unsigned t = 0; t < s.ae.dim(); ++t)
        if (!e->eq(total[t], s.ae.unit()[t])) fail(errc::split_failed, "idempotents do not sum to one");
    return s;
}

}  // namespace

Poly find_irreducible(const FieldPtr& prime_field, unsigned k) {
    if (prime_field->kind() != FieldKind::prime)
        fail(errc::bad_input, "modulus search needs a prime field");
    if (k == 0) fail(errc::bad_input, "the degree must be positive");
    Int p = prime_field->characteristic();
    Int bound = int_pow(p, k);
    for (Int counter = 0; counter < bound; ++counter) {
        Vec coeffs;
        Int t = counter;
        for (unsigned i = 0; i < k; ++i) {
            coeffs.push_back(prime_field->from_int(t % p));
            t /= p;
        }
        coeffs.push_back(prime_field->one());
        Poly cand = poly_make(prime_field, std::move(coeffs));
        if (poly_irreducible(cand)) return cand;
    }
    fail(errc::internal, "no irreducible polynomial of the requested degree");
}

FieldPtr make_gfq(const Int& p, unsigned k) {
    if (k <= 1) return Field::prime(p);
    FieldPtr fp = Field::prime(p);
    Poly m = find_irreducible(fp, k);
    std::vector<Int> mod;
    for (const auto& c : m.c) mod.push_back(c.v[0]);
    return Field::extension(p, k, mod);
}

std::vector<Vec> lagrange_idempotents(const SplitInput& in) { return prepare_split(in).idem; }

SplitResult split_to_skew(const SplitInput& in, const std::optional<Vec>& v, std::uint64_t seed) {
    split_setup s = prepare_split(in);
    const FieldPtr& e = s.e;
    unsigned n = s.n;
    unsigned dim = s.ae.dim();
    std::mt19937_64 rng(seed ^ 0x5b117ull);
    auto try_vector = [&](const Vec& cand) -> std::optional<SplitResult> {
        // v_ij = e_i v e_j must form a basis
        std::vector<Vec> vij(static_cast<std::size_t>(n) * n);
        RowSpace span(e, dim);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                Vec w = s.ae.mul(s.ae.mul(s.idem[i], cand), s.idem[j]);
                vij[static_cast<std::size_t>(i) * n + j] = w;
                span.insert(w);
            }
        if (span.rank() != dim) return std::nullopt;
        BasisFrame bf(e, vij);
        // read the skew constants off v_ij v_kl = delta_jk c_ijl v_il
        std::vector<FElem> c(static_cast<std::size_t>(n) * n * n, e->zero());
        auto cref = [&](unsigned i, unsigned j, unsigned l) -> FElem& {
            return c[(static_cast<std::size_t>(i) * n + j) * n + l];
        };
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                for (unsigned k = 0; k < n; ++k)
                    for (unsigned l = 0; l < n; ++l) {
                        Vec prod = s.ae.mul(vij[static_cast<std::size_t>(i) * n + j],
                                            vij[static_cast<std::size_t>(k) * n + l]);
                        auto co = bf.coordinates(prod);
                        if (!co) fail(errc::split_failed, "product left the candidate basis span");
                        for (unsigned t = 0; t < dim; ++t) {
                            bool allowed = j == k && t == i * n + l;
                            if (!allowed && !e->is_zero((*co)[t]))
                                fail(errc::split_failed, "products do not follow the skew pattern");
                        }
                        if (j == k) cref(i, j, l) = (*co)[i * n + l];
                    }
        for (unsigned i = 0; i < n; ++i)
            if (e->is_zero(cref(i, i, i))) return std::nullopt;  // diagonal not invertible, retry
        // normalize: e_ij = c_iii^{-1} v_ij carries the reduced set
        SkewSet cs = SkewSet::trivial(e, n);
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = 1; j <= n; ++j)
                for (unsigned k = 1; k <= n; ++k) {
                    FElem val = e->mul(e->inv(cref(j - 1, j - 1, j - 1)), cref(i - 1, j - 1, k - 1));
                    if (SkewSet::forced(i, j, k)) {
                        if (!e->is_one(val)) fail(errc::split_failed, "normalized set is not reduced");
                    } else {
                        cs.set(i, j, k, val);
                    }
                }
        std::vector<Vec> eij(static_cast<std::size_t>(n) * n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                eij[static_cast<std::size_t>(i) * n + j] =
                    scale_vec(e->inv(cref(i, i, i)), vij[static_cast<std::size_t>(i) * n + j]);
        // full multiplication table in the new basis
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = 1; j <= n; ++j)
                for (unsigned k = 1; k <= n; ++k)
                    for (unsigned l = 1; l <= n; ++l) {
                        Vec prod = s.ae.mul(eij[static_cast<std::size_t>(i - 1) * n + (j - 1)],
                                            eij[static_cast<std::size_t>(k - 1) * n + (l - 1)]);
                        Vec expect = zero_vec(e, dim);
                        if (j == k)
                            expect = scale_vec(cs.at(i, j, l),
                                               eij[static_cast<std::size_t>(i - 1) * n + (l - 1)]);
                        for (unsigned t = 0; t < dim; ++t)
                            if (!e->eq(prod[t], expect[t]))
                                fail(errc::split_failed, "multiplication table mismatch after normalization");
                    }
        Mat trans(e, dim, dim);
        for (unsigned r = 0; r < dim; ++r) trans.set_row(r, eij[r]);
        return SplitResult{std::move(cs), std::move(trans), cand};
    };
    if (v) {
        Vec cand = *v;
        if (cand.size() != dim) fail(errc::bad_shape, "cyclic vector has the wrong length");
        if (!cand.empty() && !cand[0].f->same(*e)) cand = lift_vec(in.a.field(), e, cand);
        auto res = try_vector(cand);
        if (res) return std::move(*res);
        fail(errc::no_cyclic_generator, "the supplied vector does not generate a cyclic basis");
    }
    for (unsigned attempt = 0; attempt < 64; ++attempt) {
        Vec cand(dim, e->zero());
        for (unsigned t = 0; t < dim; ++t) cand[t] = small_coeff(e, rng);
        auto res = try_vector(cand);
        if (res) return std::move(*res);
    }
    fail(errc::no_cyclic_generator, "no cyclic vector found within the attempt bound");
}

Json DescentDatum::to_json() const {
    Json j;
    j["field"] = c.field()->to_json();
    j["skewset"] = c.to_json();
    Json p = Json::array();
    for (unsigned x : perm) p.push_back(x);
    j["perm"] = p;
    return j;
}

DescentDatum DescentDatum::from_json(const Json& j) {
    if (!j.is_object() || !j.contains("skewset") || !j.contains("perm"))
        fail(errc::bad_input, "descent document needs \"skewset\" and \"perm\"");
    Json sj = j["skewset"];
    if (!sj.contains("field")) {
        if (!j.contains("field")) fail(errc::bad_input, "descent document needs a field");
        sj["field"] = j["field"];
    }
    SkewSet c = SkewSet::from_json(sj);
    if (!j["perm"].is_array() || j["perm"].size() != c.n())
        fail(errc::bad_input, "\"perm\" must list the image of every index");
    std::vector<unsigned> perm;
    for (const auto& x : j["perm"]) {
        if (!x.is_number_unsigned()) fail(errc::bad_input, "permutation entries must be unsigned");
        perm.push_back(x.get<unsigned>());
    }
    return DescentDatum{std::move(c), std::move(perm)};
}

namespace {

void validate_perm(const std::vector<unsigned>& perm, unsigned n) {
    if (perm.size() != n) fail(errc::bad_shape, "permutation length mismatch");
    std::vector<bool> seen(n, false);
    for (unsigned x : perm) {
        if (x < 1 || x > n || seen[x - 1]) fail(errc::bad_input, "not a permutation");
        seen[x - 1] = true;
    }
}

unsigned perm_order(const std::vector<unsigned>& perm) {
    unsigned n = static_cast<unsigned>(perm.size());
    unsigned ord = 1;
    std::vector<bool> seen(n, false);
    for (unsigned i = 0; i < n; ++i) {
        if (seen[i]) continue;
        unsigned len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j] - 1;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

// GF(p)-basis of the subfield GF(p^ell) inside E, via the kernel of
// Frobenius^ell - id on the coefficient space.
std::vector<FElem> subfield_basis(const FieldPtr& e, unsigned ell) {
    if (e->kind() == FieldKind::prime) return {e->one()};
    unsigned k = e->degree();
    FieldPtr fp = Field::prime(e->characteristic());
    Mat m(fp, k, k);
    for (unsigned t = 0; t < k; ++t) {
        std::vector<Int> coeffs(k, Int(0));
        coeffs[t] = 1;
        FElem img = e->frobenius(e->from_coeffs(coeffs), ell);
        for (unsigned r = 0; r < k; ++r) {
            Int val = r < img.v.size() ? img.v[r] : Int(0);
            if (r == t) val -= 1;
            m.at(r, t) = fp->from_int(val);
        }
    }
    Mat ker = kernel(m);
    if (ker.rows() != ell) fail(errc::internal, "unexpected subfield dimension");
    std::vector<FElem> out;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        std::vector<Int> coeffs;
        for (unsigned t = 0; t < k; ++t) coeffs.push_back(ker.at(r, t).v[0]);
        out.push_back(e->from_coeffs(coeffs));
    }
    return out;
}

}  // namespace

ConjugacyCheck check_conjugacy(const DescentDatum& d) {
    const FieldPtr& e = d.c.field();
    if (!e->finite()) fail(errc::bad_input, "descent needs a finite field");
    unsigned n = d.c.n();
    validate_perm(d.perm, n);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned k = 1; k <= n; ++k) {
                FElem lhs = e->frobenius(d.c.at(i, j, k), 1);
                const FElem& rhs = d.c.at(d.perm[i - 1], d.perm[j - 1], d.perm[k - 1]);
                if (!e->eq(lhs, rhs)) return ConjugacyCheck{false, i, j, k};
            }
    return ConjugacyCheck{};
}

DescentResult fixed_subalgebra(const DescentDatum& d, std::uint64_t seed) {
    const FieldPtr& e = d.c.field();
    if (!e->finite()) fail(errc::bad_input, "descent needs a finite field");
    unsigned n = d.c.n();
    validate_perm(d.perm, n);
    unsigned k = e->kind() == FieldKind::prime ? 1 : e->degree();
    if (k % perm_order(d.perm) != 0)
        fail(errc::bad_input, "the permutation order must divide the extension degree");
    ConjugacyCheck cc = check_conjugacy(d);
    if (!cc.ok)
        fail(errc::conjugacy_violated, "conjugacy condition fails at (" + std::to_string(cc.i) + "," +
                                           std::to_string(cc.j) + "," + std::to_string(cc.k) + ")");
    StructAlgebra ae = StructAlgebra::from_skew(d.c);
    unsigned dim = n * n;
    FieldPtr fp = e->kind() == FieldKind::prime ? e : Field::prime(e->characteristic());
    auto act = [&](unsigned i) { return d.perm[i - 1]; };

    // fixed-point basis, one vector per (position orbit, subfield basis element)
    std::vector<Vec> w;
    std::vector<Pos> reps;
    std::vector<bool> diag_flag;
    std::vector<std::vector<bool>> visited(n + 1, std::vector<bool>(n + 1, false));
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j) {
            if (visited[i][j]) continue;
            std::vector<Pos> orbit;
            unsigned ci = i, cj = j;
            while (!visited[ci][cj]) {
                visited[ci][cj] = true;
                orbit.emplace_back(ci, cj);
                ci = act(ci);
                cj = act(cj);
            }
            unsigned ell = static_cast<unsigned>(orbit.size());
            for (const FElem& beta : subfield_basis(e, ell)) {
                Vec vec = zero_vec(e, dim);
                for (unsigned t = 0; t < ell; ++t) {
                    auto [oi, oj] = orbit[t];
                    vec[(oi - 1) * n + (oj - 1)] = e->frobenius(beta, t);
                }
                w.push_back(std::move(vec));
                reps.emplace_back(i, j);
                diag_flag.push_back(i == j);
            }
        }
    if (w.size() != dim) fail(errc::internal, "fixed space has unexpected dimension");
    BasisFrame bf(e, w);
    auto descend_coords = [&](const Vec& x) {
        auto co = bf.coordinates(x);
        if (!co) fail(errc::internal, "fixed space is not closed");
        Vec out;
        for (const auto& val : *co) {
            if (e->kind() == FieldKind::prime) {
                out.push_back(val);
                continue;
            }
            for (std::size_t t = 1; t < val.v.size(); ++t)
                if (val.v[t] != 0)
                    fail(errc::internal, "structure constant of the fixed algebra is not rational over the prime field");
            out.push_back(fp->from_int(val.v.empty() ? Int(0) : val.v[0]));
        }
        return out;
    };
    StructAlgebra fixed(fp, dim);
    for (unsigned s = 0; s < dim; ++s)
        for (unsigned t = 0; t < dim; ++t)
            fixed.set_product(s, t, slin_from_vec(*fp, descend_coords(ae.mul(w[s], w[t]))));
    fixed.set_unit(descend_coords(ae.unit()));

    DescentResult res{std::move(fixed), {}, std::nullopt, poly_zero(fp), std::move(w), std::move(reps)};
    for (std::size_t t = 0; t < dim; ++t)
        if (diag_flag[t]) res.diagonal.push_back(t);
    std::vector<Vec> kb;
    for (std::size_t idx : res.diagonal) kb.push_back(unit_at(fp, dim, static_cast<unsigned>(idx)));
    SubAlgebra ka = induced_algebra(res.fixed, kb, res.fixed.unit());
    try {
        EtaleReport et = verify_etale(ka.alg, seed);
        if (et.etale) {
            Vec gen = zero_vec(fp, dim);
            for (std::size_t t = 0; t < kb.size(); ++t)
                gen = add_vec(gen, scale_vec(et.generator[t], kb[t]));
            res.k_generator = std::move(gen);
            res.k_min_poly = et.minimal;
        }
    } catch (const error& err) {
        if (err.code() != errc::no_generator) throw;  // genuine failures propagate
    }
    return res;
}

RealizeResult realize_sigma(const Int& p, const std::vector<RealizeTarget>& targets,
                            std::uint64_t seed) {
    if (!is_prime(p)) fail(errc::not_prime, "the characteristic must be prime");
    if (targets.empty()) fail(errc::bad_input, "at least one target is required");
    unsigned n = 0, big = 1;
    for (const auto& t : targets) {
        if (t.m == 0 || t.d == 0) fail(errc::bad_input, "target degrees must be positive");
        n += t.m * t.d;
        big = std::lcm(big, t.m);
    }
    if (n > 10) fail(errc::bad_shape, "total degree too large");
    FieldPtr e = make_gfq(p, big);
    std::vector<std::vector<unsigned>> blocks;
    std::vector<unsigned> perm(n, 0);
    std::vector<unsigned> block_of(n + 1, 0);
    unsigned base = 0;
    for (const auto& t : targets) {
        for (unsigned r = 0; r < t.m; ++r) {
            std::vector<unsigned> block;
            for (unsigned s = 0; s < t.d; ++s) {
                unsigned idx = base + r * t.d + s + 1;
                block.push_back(idx);
                block_of[idx] = static_cast<unsigned>(blocks.size());
                perm[idx - 1] = base + ((r + 1) % t.m) * t.d + s + 1;
            }
            blocks.push_back(std::move(block));
        }
        base += t.m * t.d;
    }
    SkewSet envelope = radical_envelope(e, blocks);
    DescentDatum datum{std::move(envelope), std::move(perm)};
    DescentResult desc = fixed_subalgebra(datum, seed);
    std::vector<Vec> candidate;
    for (std::size_t t = 0; t < desc.orbit_rep.size(); ++t) {
        auto [i, j] = desc.orbit_rep[t];
        if (block_of[i] != block_of[j])
            candidate.push_back(unit_at(desc.fixed.field(), desc.fixed.dim(), static_cast<unsigned>(t)));
    }
    SigmaResult sig = sigma(desc.fixed, &candidate);
    std::vector<SigmaAtom> expected;
    for (const auto& t : targets) expected.push_back({t.d * t.d * t.m, t.m});
    std::sort(expected.begin(), expected.end(), [](const SigmaAtom& x, const SigmaAtom& y) {
        if (x.dim != y.dim) return x.dim < y.dim;
        return x.center_dim < y.center_dim;
    });
    if (expected.size() != sig.atoms.size()) fail(errc::internal, "realized algebra has the wrong atom count");
    for (std::size_t t = 0; t < expected.size(); ++t)
        if (expected[t].dim != sig.atoms[t].dim || expected[t].center_dim != sig.atoms[t].center_dim)
            fail(errc::internal, "realized algebra has unexpected atoms");
    return RealizeResult{std::move(desc.fixed), std::move(candidate), std::move(sig)};
}

StructAlgebra quaternion(const FieldPtr& f, const FElem& d, const FElem& b1, const FElem& b2) {
    for (const FElem* x : {&d, &b1, &b2})
        if (!x->f->same(*f)) fail(errc::field_mismatch, "parameter from the wrong field");
    if (f->nth_root(d, 2).has_value()) fail(errc::d_is_square, "d has a square root in the base field");
    // basis 1, s, z, w = sz
    StructAlgebra q(f, 4);
    FElem one = f->one();
    auto neg = [&](const FElem& x) { return f->neg(x); };
    for (unsigned t = 0; t < 4; ++t) {
        q.set_product(0, t, {{t, one}});
        if (t > 0) q.set_product(t, 0, {{t, one}});
    }
    FElem bd = f->mul(b2, d);
    q.set_product(1, 1, {{0, d}});
    q.set_product(1, 2, {{3, one}});
    q.set_product(1, 3, {{2, d}});
    q.set_product(2, 1, {{3, neg(one)}});
    q.set_product(2, 2, {{0, b1}, {1, b2}});
    q.set_product(2, 3, {{0, neg(bd)}, {1, neg(b1)}});
    q.set_product(3, 1, {{2, neg(d)}});
    q.set_product(3, 2, {{0, bd}, {1, b1}});
    q.set_product(3, 3, {{0, f->mul(neg(d), b1)}, {1, f->mul(neg(d), b2)}});
    Vec u = zero_vec(f, 4);
    u[0] = one;
    q.set_unit(std::move(u));
    return q;
}

}  // namespace skewmat
