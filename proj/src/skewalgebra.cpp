#include "skewalgebra.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace skewmat {

Vec elem_zero(const SkewSet& c) {
    return zero_vec(c.field(), static_cast<std::size_t>(c.n()) * c.n());
}

Vec elem_unit(const SkewSet& c, unsigned i, unsigned j) {
    Vec v = elem_zero(c);
    v[(i - 1) * c.n() + (j - 1)] = c.field()->one();
    return v;
}

Vec elem_identity(const SkewSet& c) {
    Vec v = elem_zero(c);
    for (unsigned i = 1; i <= c.n(); ++i) v[(i - 1) * c.n() + (i - 1)] = c.field()->one();
    return v;
}

Vec multiply(const SkewSet& c, const Vec& x, const Vec& y) {
    unsigned n = c.n();
    const Field& F = *c.field();
    if (x.size() != static_cast<std::size_t>(n) * n || y.size() != x.size()) {
        fail(errc::bad_shape, "element coordinate table has wrong size");
    }
    Vec z = elem_zero(c);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j) {
            const FElem& xij = x[(i - 1) * n + (j - 1)];
            if (F.is_zero(xij)) continue;
            for (unsigned l = 1; l <= n; ++l) {
                const FElem& yjl = y[(j - 1) * n + (l - 1)];
                if (F.is_zero(yjl)) continue;
                const FElem& cf = c.at(i, j, l);
                if (F.is_zero(cf)) continue;
                FElem& zil = z[(i - 1) * n + (l - 1)];
                zil = F.add(zil, F.mul(F.mul(xij, yjl), cf));
            }
        }
    return z;
}

Vec associator(const SkewSet& c, const Vec& x, const Vec& y, const Vec& z) {
    return sub_vec(multiply(c, multiply(c, x, y), z), multiply(c, x, multiply(c, y, z)));
}

FElem chain_obstruction(const SkewSet& c, unsigned i, unsigned j, unsigned k, unsigned l) {
    const Field& F = *c.field();
    return F.sub(F.mul(c.at(i, j, k), c.at(i, k, l)), F.mul(c.at(i, j, l), c.at(j, k, l)));
}

std::optional<Chain> associativity_violation(const SkewSet& c) {
    unsigned n = c.n();
    const Field& F = *c.field();
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned k = 1; k <= n; ++k)
                for (unsigned l = 1; l <= n; ++l) {
                    if (!F.is_zero(chain_obstruction(c, i, j, k, l))) {
                        return Chain{i, j, k, l};
                    }
                }
    return std::nullopt;
}

bool is_associative(const SkewSet& c) { return !associativity_violation(c).has_value(); }

namespace {

// Partition analysis of a reflexive relation given as a position set.
struct RelationCheck {
    bool is_partition = true;
    std::string violation;
    std::vector<std::vector<unsigned>> blocks;
};

RelationCheck analyze_relation(unsigned n, const PosSet& rel) {
    RelationCheck out;
    std::vector<std::vector<bool>> has(n + 1, std::vector<bool>(n + 1, false));
    for (const auto& [i, j] : rel) has[i][j] = true;
    for (unsigned i = 1; i <= n && out.is_partition; ++i) {
        if (!has[i][i]) {
            out.is_partition = false;
            std::ostringstream os;
            os << "not reflexive at " << i;
            out.violation = os.str();
        }
    }
    for (unsigned i = 1; i <= n && out.is_partition; ++i)
        for (unsigned j = 1; j <= n && out.is_partition; ++j) {
            if (has[i][j] && !has[j][i]) {
                out.is_partition = false;
                std::ostringstream os;
                os << "not symmetric at (" << i << "," << j << ")";
                out.violation = os.str();
            }
        }
    for (unsigned i = 1; i <= n && out.is_partition; ++i)
        for (unsigned j = 1; j <= n && out.is_partition; ++j) {
            if (!has[i][j]) continue;
            for (unsigned k = 1; k <= n; ++k) {
                if (has[j][k] && !has[i][k]) {
                    out.is_partition = false;
                    std::ostringstream os;
                    os << "not transitive at (" << i << "," << j << "," << k << ")";
                    out.violation = os.str();
                    break;
                }
            }
        }
    if (!out.is_partition) return out;
    std::vector<bool> done(n + 1, false);
    for (unsigned i = 1; i <= n; ++i) {
        if (done[i]) continue;
        std::vector<unsigned> block;
        for (unsigned j = 1; j <= n; ++j) {
            if (has[i][j]) {
                block.push_back(j);
                done[j] = true;
            }
        }
        out.blocks.push_back(std::move(block));
    }
    return out;
}

}  // namespace

NucleusReport nuclei(const SkewSet& c) {
    unsigned n = c.n();
    const Field& F = *c.field();
    NucleusReport rep;
    auto obstruction_zero = [&](unsigned i, unsigned j, unsigned k, unsigned l) {
        return F.is_zero(chain_obstruction(c, i, j, k, l));
    };
    for (unsigned a = 1; a <= n; ++a)
        for (unsigned b = 1; b <= n; ++b) {
            bool in_left = true, in_middle = true, in_right = true;
            for (unsigned x = 1; x <= n && in_left; ++x)
                for (unsigned y = 1; y <= n; ++y) {
                    if (!obstruction_zero(a, b, x, y)) {
                        in_left = false;
                        break;
                    }
                }
            for (unsigned x = 1; x <= n && in_middle; ++x)
                for (unsigned y = 1; y <= n; ++y) {
                    if (!obstruction_zero(x, a, b, y)) {
                        in_middle = false;
                        break;
                    }
                }
            for (unsigned x = 1; x <= n && in_right; ++x)
                for (unsigned y = 1; y <= n; ++y) {
                    if (!obstruction_zero(x, y, a, b)) {
                        in_right = false;
                        break;
                    }
                }
            if (in_left) rep.left.emplace_back(a, b);
            if (in_middle) rep.middle.emplace_back(a, b);
            if (in_right) rep.right.emplace_back(a, b);
            if (in_left && in_middle && in_right) rep.nucleus.emplace_back(a, b);
        }
    PosSet s_support;
    for (const auto& [i, j] : rep.nucleus) {
        if (F.is_zero(c.at(i, j, i))) {
            rep.j_positions.emplace_back(i, j);
        } else {
            s_support.emplace_back(i, j);
        }
    }
    rep.regular = rep.j_positions.empty();
    RelationCheck s_check = analyze_relation(n, s_support);
    rep.s_is_partition = s_check.is_partition;
    rep.s_violation = s_check.violation;
    rep.s_blocks = std::move(s_check.blocks);
    for (const auto& block : rep.s_blocks) rep.atoms.push_back(static_cast<unsigned>(block.size()));
    std::sort(rep.atoms.begin(), rep.atoms.end());
    RelationCheck n_check = analyze_relation(n, rep.nucleus);
    rep.nucleus_is_partition = n_check.is_partition;
    return rep;
}

Json NucleusReport::to_json() const {
    Json j;
    j["left"] = pos_set_to_json(left);
    j["middle"] = pos_set_to_json(middle);
    j["right"] = pos_set_to_json(right);
    j["nucleus"] = pos_set_to_json(nucleus);
    j["regular"] = regular;
    j["j_positions"] = pos_set_to_json(j_positions);
    j["s_is_partition"] = s_is_partition;
    if (!s_violation.empty()) j["s_violation"] = s_violation;
    Json blocks = Json::array();
    for (const auto& b : s_blocks) {
        Json bj = Json::array();
        for (unsigned v : b) bj.push_back(v);
        blocks.push_back(std::move(bj));
    }
    j["s_blocks"] = std::move(blocks);
    Json at = Json::array();
    for (unsigned a : atoms) at.push_back(a);
    j["atoms"] = std::move(at);
    j["nucleus_is_partition"] = nucleus_is_partition;
    return j;
}

std::vector<Vec> center(const SkewSet& c) {
    unsigned n = c.n();
    const Field& F = *c.field();
    const FieldPtr& fp = c.field();
    std::size_t dim = static_cast<std::size_t>(n) * n;
    // rows: one equation per (commutator unit, output position); cols: x coords
    Mat sys(fp, dim * dim, dim);
    for (unsigned k = 1; k <= n; ++k)
        for (unsigned l = 1; l <= n; ++l) {
            std::size_t eq_base = (static_cast<std::size_t>(k - 1) * n + (l - 1)) * dim;
            // x * e_kl contributes x[i][k] * c[i][k][l] at output (i, l)
            for (unsigned i = 1; i <= n; ++i) {
                std::size_t row = eq_base + (i - 1) * n + (l - 1);
                std::size_t col = (i - 1) * n + (k - 1);
                sys.at(row, col) = F.add(sys.at(row, col), c.at(i, k, l));
            }
            // e_kl * x contributes -x[l][j] * c[k][l][j] at output (k, j)
            for (unsigned j = 1; j <= n; ++j) {
                std::size_t row = eq_base + (k - 1) * n + (j - 1);
                std::size_t col = (l - 1) * n + (j - 1);
                sys.at(row, col) = F.sub(sys.at(row, col), c.at(k, l, j));
            }
        }
    Mat ker = kernel(sys);
    std::vector<Vec> basis;
    for (std::size_t r = 0; r < ker.rows(); ++r) basis.push_back(ker.row(r));
    return basis;
}

std::vector<Vec> ideal_generated(const SkewSet& c, const Vec& x) {
    unsigned n = c.n();
    const Field& F = *c.field();
    std::size_t dim = static_cast<std::size_t>(n) * n;
    if (x.size() != dim) fail(errc::bad_shape, "element coordinate table has wrong size");
    RowSpace span(c.field(), dim);
    std::deque<Vec> work;
    work.push_back(x);
    while (!work.empty()) {
        Vec v = std::move(work.front());
        work.pop_front();
        if (!span.insert(v)) continue;
        for (unsigned k = 1; k <= n; ++k)
            for (unsigned l = 1; l <= n; ++l) {
                // e_kl * v lives in row k: coefficient at (k,j) is v[l][j]*c[k][l][j]
                Vec left = zero_vec(c.field(), dim);
                bool nz = false;
                for (unsigned j = 1; j <= n; ++j) {
                    const FElem& vl = v[(l - 1) * n + (j - 1)];
                    if (F.is_zero(vl)) continue;
                    FElem t = F.mul(vl, c.at(k, l, j));
                    if (!F.is_zero(t)) {
                        left[(k - 1) * n + (j - 1)] = std::move(t);
                        nz = true;
                    }
                }
                if (nz) work.push_back(std::move(left));
                // v * e_kl lives in column l: coefficient at (i,l) is v[i][k]*c[i][k][l]
                Vec right = zero_vec(c.field(), dim);
                nz = false;
                for (unsigned i = 1; i <= n; ++i) {
                    const FElem& vk = v[(i - 1) * n + (k - 1)];
                    if (F.is_zero(vk)) continue;
                    FElem t = F.mul(vk, c.at(i, k, l));
                    if (!F.is_zero(t)) {
                        right[(i - 1) * n + (l - 1)] = std::move(t);
                        nz = true;
                    }
                }
                if (nz) work.push_back(std::move(right));
            }
    }
    return span.basis();
}

PosSet elem_support(const SkewSet& c, const Vec& x) {
    unsigned n = c.n();
    const Field& F = *c.field();
    PosSet s;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j) {
            if (!F.is_zero(x[(i - 1) * n + (j - 1)])) s.emplace_back(i, j);
        }
    return s;
}

}  // namespace skewmat
