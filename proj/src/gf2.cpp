#include "forge/gf2.hpp"

#include "forge/caps.hpp"

#include <algorithm>

namespace forge {

namespace {

// Carry-less multiply of a*b modulo x^deg + irred_low, inputs of degree
// < deg. Reduces every shift step, so deg = 64 stays inside uint64.
std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b,
                         std::uint64_t irred_low, unsigned deg,
                         std::uint64_t mask) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        const bool carry = (a >> (deg - 1)) & 1;
        a = (a << 1) & mask;
        if (carry) a ^= irred_low;
    }
    return r;
}

std::uint64_t mask_for(unsigned deg) {
    return deg == 64 ? ~std::uint64_t{0}
                     : (std::uint64_t{1} << deg) - 1;
}

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Polynomial gcd over GF(2); operands may carry the degree-64 bit.
unsigned __int128 gf2_gcd(unsigned __int128 a, unsigned __int128 b) {
    auto deg = [](unsigned __int128 v) {
        int d = -1;
        while (v) { v >>= 1; ++d; }
        return d;
    };
    while (b) {
        int da = deg(a), db = deg(b);
        while (da >= db && a) {
            a ^= b << (da - db);
            da = deg(a);
        }
        std::swap(a, b);
    }
    return a;
}

} // namespace

// `poly` is the full modulus for degree <= 63; for degree 64 the x^64
// bit is implied and `poly` holds the low coefficients.
bool gf2_poly_irreducible(std::uint64_t poly, unsigned degree) {
    if (degree == 0 || degree > 64) return false;
    const std::uint64_t mask = mask_for(degree);
    const std::uint64_t low = degree == 64 ? poly : (poly & mask);
    if ((low & 1) == 0) return false; // divisible by x
    if (degree < 64 && ((poly >> degree) & 1) == 0) return false;
    if (degree == 1) return true;

    // Rabin: x^(2^degree) == x, and x^(2^(degree/p)) - x coprime to the
    // modulus for every prime p | degree.
    auto frob = [&](std::uint64_t v, unsigned times) {
        for (unsigned i = 0; i < times; ++i)
            v = gf2_mulmod(v, v, low, degree, mask);
        return v;
    };
    if (frob(2, degree) != 2) return false;
    const unsigned __int128 full =
        (static_cast<unsigned __int128>(1) << degree) | low;
    for (unsigned p : prime_factors(degree)) {
        const std::uint64_t h = frob(2, degree / p) ^ 2;
        if (gf2_gcd(full, h) != 1) return false;
    }
    return true;
}

BinaryField::BinaryField(unsigned lambda, std::uint64_t irreducible)
    : lambda_(lambda) {
    require(lambda >= 1 && lambda <= 64,
            "BinaryField: lambda must be in [1, 64]");
    mask_ = mask_for(lambda);
    if (lambda == 64) {
        irred_low_ = irreducible;
        irred_full_ = irreducible;
    } else {
        require(((irreducible >> lambda) & 1) != 0 &&
                    (irreducible >> lambda) == 1,
                "BinaryField: modulus degree must equal lambda");
        irred_full_ = irreducible;
        irred_low_ = irreducible & mask_;
    }
    require(gf2_poly_irreducible(irreducible, lambda),
            "BinaryField: modulus is reducible");
}

std::uint64_t BinaryField::mul(std::uint64_t a, std::uint64_t b) const {
    return gf2_mulmod(a & mask_, b & mask_, irred_low_, lambda_, mask_);
}

std::uint64_t BinaryField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a &= mask_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t BinaryField::inv(std::uint64_t a) const {
    require((a & mask_) != 0, "BinaryField: zero has no inverse");
    // a^(2^lambda - 2)
    const std::uint64_t e =
        lambda_ == 64 ? ~std::uint64_t{1} : (std::uint64_t{1} << lambda_) - 2;
    return pow(a, e);
}

BinaryField build_field_any_degree(unsigned lambda) {
    require(lambda >= 1 && lambda <= 64,
            "build_field: lambda must be in [1, 64]");
    if (lambda == 1) return BinaryField(1, 0b11); // x + 1
    // Scan constant-term-1 candidates in ascending bit-string order.
    for (std::uint64_t c = 1;; c += 2) {
        const std::uint64_t poly =
            lambda == 64 ? c : ((std::uint64_t{1} << lambda) | c);
        if (gf2_poly_irreducible(poly, lambda)) return BinaryField(lambda, poly);
        if (lambda < 64 && c + 2 >= (std::uint64_t{1} << lambda))
            throw ParamError("build_field: no irreducible found"); // unreachable
    }
}

BinaryField build_field(unsigned lambda) {
    require(lambda >= 1 && (lambda & (lambda - 1)) == 0,
            "build_field: lambda must be a power of two");
    return build_field_any_degree(lambda);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require(field == o.field, "FieldElement: field mismatch");
    return {field, field.add(bits, o.bits)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require(field == o.field, "FieldElement: field mismatch");
    return {field, field.mul(bits, o.bits)};
}

FieldMatrix::FieldMatrix(BinaryField field, std::size_t rows,
                         std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, 0) {
    require(rows >= 1 && cols >= 1, "FieldMatrix: need rows, cols >= 1");
}

FieldMatrix field_vandermonde(std::size_t rows, std::size_t cols,
                              const BinaryField& field) {
    const std::uint64_t size = field.size_or_zero();
    if (size != 0) {
        require(rows < size, "field_vandermonde: rows must be < |F|");
        require(cols < size, "field_vandermonde: cols must be < |F|");
    }
    FieldMatrix v(field, rows, cols);
    for (std::size_t j = 1; j <= cols; ++j) {
        const std::uint64_t point = j; // j-th nonzero element, ascending bits
        std::uint64_t p = 1;
        for (std::size_t i = 1; i <= rows; ++i) {
            p = field.mul(p, point);
            v.at(i - 1, j - 1) = p;
        }
    }
    return v;
}

FieldMatrix field_cast(const FieldMatrix& g, const BinaryField& target) {
    const BinaryField& src = g.field();
    require(target.lambda() % src.lambda() == 0,
            "field_cast: source lambda must divide target lambda");
    if (src == target) return g;

    const unsigned ls = src.lambda();
    const unsigned lt = target.lambda();

    // Subfield F_{2^ls} inside the target = kernel of z -> z^(2^ls) - z,
    // an F_2-linear map. Compute it on the lt basis bits.
    std::vector<std::uint64_t> cols(lt);
    for (unsigned b = 0; b < lt; ++b) {
        std::uint64_t z = std::uint64_t{1} << b;
        for (unsigned i = 0; i < ls; ++i) z = target.mul(z, z);
        cols[b] = z ^ (std::uint64_t{1} << b);
    }
    // GF(2) kernel via elimination; dependent columns yield kernel vectors.
    std::vector<std::uint64_t> rowspace, combo, kernel_basis;
    for (unsigned b = 0; b < lt; ++b) {
        std::uint64_t v = cols[b], c = std::uint64_t{1} << b;
        for (std::size_t i = 0; i < rowspace.size(); ++i) {
            const int top = 63 - __builtin_clzll(rowspace[i]);
            if ((v >> top) & 1) { v ^= rowspace[i]; c ^= combo[i]; }
        }
        if (v) { rowspace.push_back(v); combo.push_back(c); }
        else kernel_basis.push_back(c);
    }
    require(kernel_basis.size() == ls,
            "field_cast: unexpected subfield dimension");

    // Enumerate the 2^ls subfield elements and take the smallest root of
    // the source modulus; determinism comes from the bit-string order.
    std::uint64_t root = 0;
    bool found = false;
    const std::uint64_t count = std::uint64_t{1} << ls;
    for (std::uint64_t m = 0; m < count; ++m) {
        std::uint64_t z = 0;
        for (unsigned i = 0; i < ls; ++i)
            if ((m >> i) & 1) z ^= kernel_basis[i];
        // Horner with the full source modulus coefficients.
        std::uint64_t acc = 1; // leading coefficient of x^ls
        for (int i = static_cast<int>(ls) - 1; i >= 0; --i) {
            acc = target.mul(acc, z);
            if ((src.irreducible() >> i) & 1) acc ^= 1;
        }
        if (acc == 0 && (!found || z < root)) { root = z; found = true; }
    }
    require(found, "field_cast: source modulus has no root in target");

    std::vector<std::uint64_t> pw(ls);
    pw[0] = 1;
    for (unsigned i = 1; i < ls; ++i) pw[i] = target.mul(pw[i - 1], root);

    FieldMatrix out(target, g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) {
            std::uint64_t bits = g.at(i, j), mapped = 0;
            for (unsigned b = 0; b < ls; ++b)
                if ((bits >> b) & 1) mapped ^= pw[b];
            out.at(i, j) = mapped;
        }
    return out;
}

std::uint64_t field_mv_weight(const FieldMatrix& g,
                              const std::vector<std::uint64_t>& x) {
    require(x.size() == g.rows(), "field_mv_weight: dimension mismatch");
    const BinaryField& f = g.field();
    std::uint64_t weight = 0;
    for (std::size_t j = 0; j < g.cols(); ++j) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < g.rows(); ++i)
            if (x[i]) acc ^= f.mul(x[i], g.at(i, j));
        if (acc) ++weight;
    }
    return weight;
}

FieldMatrix field_tensor(const FieldMatrix& a, const FieldMatrix& b,
                         std::uint64_t max_entries) {
    require(a.field() == b.field(), "field_tensor: field mismatch");
    const std::uint64_t r = std::uint64_t{a.rows()} * b.rows();
    const std::uint64_t c = std::uint64_t{a.cols()} * b.cols();
    require_cap(r != 0 && c != 0 && r <= max_entries / c,
                "field_tensor: result exceeds entry cap");
    FieldMatrix out(a.field(), r, c);
    const BinaryField& f = a.field();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t ip = 0; ip < b.rows(); ++ip)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                const std::uint64_t av = a.at(i, j);
                if (!av) continue;
                for (std::size_t jp = 0; jp < b.cols(); ++jp) {
                    const std::uint64_t bv = b.at(ip, jp);
                    if (bv)
                        out.at(i * b.rows() + ip, j * b.cols() + jp) =
                            f.mul(av, bv);
                }
            }
    return out;
}

FieldMatrix field_hconcat(const std::vector<const FieldMatrix*>& parts) {
    require(!parts.empty(), "field_hconcat: no parts");
    const std::size_t rows = parts.front()->rows();
    std::size_t cols = 0;
    for (const FieldMatrix* p : parts) {
        require(p->rows() == rows, "field_hconcat: row count mismatch");
        require(p->field() == parts.front()->field(),
                "field_hconcat: field mismatch");
        cols += p->cols();
    }
    FieldMatrix out(parts.front()->field(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        std::size_t off = 0;
        for (const FieldMatrix* p : parts) {
            for (std::size_t j = 0; j < p->cols(); ++j)
                out.at(i, off + j) = p->at(i, j);
            off += p->cols();
        }
    }
    return out;
}

std::size_t field_rank(const FieldMatrix& g) {
    const BinaryField& f = g.field();
    std::vector<std::vector<std::uint64_t>> a(
        g.rows(), std::vector<std::uint64_t>(g.cols()));
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) a[i][j] = g.at(i, j);
    std::size_t r = 0;
    for (std::size_t c = 0; c < g.cols() && r < g.rows(); ++c) {
        std::size_t sel = r;
        while (sel < g.rows() && a[sel][c] == 0) ++sel;
        if (sel == g.rows()) continue;
        std::swap(a[sel], a[r]);
        const std::uint64_t ipiv = f.inv(a[r][c]);
        for (std::size_t j = c; j < g.cols(); ++j)
            a[r][j] = f.mul(a[r][j], ipiv);
        for (std::size_t i = 0; i < g.rows(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const std::uint64_t fac = a[i][c];
            for (std::size_t j = c; j < g.cols(); ++j)
                a[i][j] ^= f.mul(fac, a[r][j]);
        }
        ++r;
    }
    return r;
}

} // namespace forge
