#include "charfield/weylb.hpp"

#include <cstdlib>
#include <stdexcept>

namespace charfield {

SignedPerm::SignedPerm(std::vector<int> images) : images_(std::move(images)) {
    const int n = rank();
    std::vector<bool> seen(n + 1, false);
    for (int x : images_) {
        int ax = std::abs(x);
        if (ax < 1 || ax > n || seen[ax]) throw std::invalid_argument("not a signed permutation");
        seen[ax] = true;
    }
}

SignedPerm SignedPerm::identity(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i + 1;
    return SignedPerm(std::move(im));
}

int SignedPerm::operator()(int i) const {
    if (i == 0 || std::abs(i) > rank()) throw std::out_of_range("signed permutation index");
    return i > 0 ? images_[i - 1] : -images_[-i - 1];
}

SignedPerm SignedPerm::operator*(const SignedPerm& other) const {
    if (other.rank() != rank()) throw std::invalid_argument("rank mismatch");
    std::vector<int> im(rank());
    for (int i = 1; i <= rank(); ++i) im[i - 1] = (*this)(other(i));
    return SignedPerm(std::move(im));
}

SignedPerm SignedPerm::inverse() const {
    std::vector<int> im(rank());
    for (int i = 1; i <= rank(); ++i) {
        int x = images_[i - 1];
        im[std::abs(x) - 1] = x > 0 ? i : -i;
    }
    return SignedPerm(std::move(im));
}

bool SignedPerm::is_identity() const {
    for (int i = 0; i < rank(); ++i)
        if (images_[i] != i + 1) return false;
    return true;
}

std::string to_string(const SignedPerm& w) {
    std::string s = "[";
    for (int i = 0; i < w.rank(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.images()[i]);
    }
    return s + "]";
}

SignedPerm generator(int n, int i) {
    if (n < 1 || i < 1 || i > n) throw std::out_of_range("generator index out of range");
    auto w = SignedPerm::identity(n).images();
    if (i < n) std::swap(w[i - 1], w[i]);
    else w[n - 1] = -n;
    return SignedPerm(std::move(w));
}

SignedPerm special_element(int n, SpecialKind kind, int m) {
    auto w = SignedPerm::identity(n).images();
    if (kind == SpecialKind::t) {
        if (m < 1 || m > n) throw std::out_of_range("t_m needs 1 <= m <= n");
        w[m - 1] = -m;
    } else {
        if (m < 1 || m >= n) throw std::out_of_range("u_m needs 1 <= m < n");
        w[m - 1] = -m;
        w[n - 1] = -n;
    }
    return SignedPerm(std::move(w));
}

int length(const SignedPerm& w) {
    // Relabel i -> n+1-i so that the sign-change generator sits at position 1,
    // then use inv(v) - sum of negative entries of v.
    const int n = w.rank();
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) {
        int x = w(n + 1 - i);
        v[i - 1] = x > 0 ? n + 1 - x : -(n + 1 + x);
    }
    int len = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j)
            if (v[i] > v[j]) ++len;
        if (v[i] < 0) len -= v[i];
    }
    return len;
}

std::string to_string(const CoxeterType& t) {
    std::string s;
    for (const auto& f : t) {
        if (f.rank == 0) continue;
        if (!s.empty()) s += " x ";
        switch (f.kind) {
            case CoxeterFactor::Kind::B: s += "B" + std::to_string(f.rank); break;
            case CoxeterFactor::Kind::D: s += "D" + std::to_string(f.rank); break;
            case CoxeterFactor::Kind::Bpp: s += "B''" + std::to_string(f.rank); break;
        }
    }
    return s.empty() ? "1" : s;
}

SeriesDescriptor::SeriesDescriptor(GroupSpec group_, bool principal_, int m_, int a_, int b_, bool cusp)
    : group(group_), principal(principal_), m(m_), a(a_), b(b_), cuspidal_part_nontrivial(cusp) {
    if (a < 0 || b < 0 || a + b != m) throw std::invalid_argument("descriptor needs a + b = m with a, b >= 0");
    if (m > group.n) throw std::invalid_argument("descriptor torus rank exceeds n");
    if (principal && m != group.n) throw std::invalid_argument("principal series needs m = n");
    if (!principal && m > group.n - 2) throw std::invalid_argument("non-principal series needs m <= n - 2");
    if (principal && cuspidal_part_nontrivial) throw std::invalid_argument("principal series has no cuspidal part");
}

SeriesDescriptor SeriesDescriptor::principal_series(GroupSpec group, int a, int b) {
    return SeriesDescriptor(group, true, group.n, a, b, false);
}

SeriesDescriptor SeriesDescriptor::levi(GroupSpec group, int m, int a, int b) {
    return SeriesDescriptor(group, false, m, a, b, true);
}

namespace {

using K = CoxeterFactor::Kind;

RelWeylData with_generator(RelWeylData d, SignedPerm g) {
    d.c_order = 2;
    d.c_generator_length_parity = length(g) % 2 == 0 ? Parity::even : Parity::odd;
    d.c_generator = std::move(g);
    return d;
}

}  // namespace

RelWeylData relative_weyl(const SeriesDescriptor& desc) {
    const int n = desc.group.n;
    const int a = desc.a, b = desc.b, m = desc.m;
    RelWeylData d;
    switch (desc.group.family) {
        case Family::SOeven:
            if (desc.principal) {
                if (b < 1) throw std::invalid_argument("so-even principal series needs b >= 1");
                if (desc.group.eps_twist == 1) {
                    d.w_type = {{K::B, a}, {K::B, b}};
                    d.r_type = {{K::D, a}, {K::D, b}};
                } else {
                    d.w_type = {{K::B, a}, {K::Bpp, b}};
                    d.r_type = {{K::D, a}, {K::Bpp, b}};
                }
                // With a = 0 the element u_1 = t_1 t_n lies in the single factor R(lambda).
                if (a >= 1) d = with_generator(d, special_element(n, SpecialKind::u, 1));
            } else {
                d.w_type = {{K::B, a}, {K::B, b}};
                d.r_type = {{K::B, a}, {K::D, b}};
                if (b >= 1) d = with_generator(d, special_element(n, SpecialKind::u, m));
            }
            return d;
        case Family::SOodd:
            d.w_type = {{K::B, a}, {K::B, b}};
            d.r_type = d.w_type;
            return d;
        case Family::Sp:
            d.w_type = {{K::B, a}, {K::B, b}};
            d.r_type = {{K::B, a}, {K::D, b}};
            if (desc.principal) {
                if (b < 1) throw std::invalid_argument("sp principal series with trivial lambda is unipotent; C is trivial");
                return with_generator(d, generator(n, n));
            }
            // TODO: confirm this row against the published classification of the
            // symplectic non-principal relative Weyl groups.
            d.externally_sourced = true;
            if (b >= 1) d = with_generator(d, special_element(n, SpecialKind::t, m));
            return d;
        case Family::GL:
            break;
    }
    throw std::invalid_argument("relative_weyl: family not covered");
}

}  // namespace charfield
