#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charfield/group.hpp"

namespace charfield {

// Signed permutation of {+-1, ..., +-n}; images[i-1] is the image of i.
class SignedPerm {
public:
    SignedPerm() = default;
    explicit SignedPerm(std::vector<int> images);
    static SignedPerm identity(int n);

    int rank() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const;
    const std::vector<int>& images() const { return images_; }

    // (a * b)(i) = a(b(i)).
    SignedPerm operator*(const SignedPerm& other) const;
    SignedPerm inverse() const;
    bool is_identity() const;

    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
    friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

private:
    std::vector<int> images_;
};

std::string to_string(const SignedPerm& w);

// s_i = (i, i+1)(-i, -i-1) for i < n, s_n = (n, -n).
SignedPerm generator(int n, int i);

enum class SpecialKind { t, u };
// t_m = (m, -m); u_m = (m, -m)(n, -n).
SignedPerm special_element(int n, SpecialKind kind, int m);

// Word length with respect to s_1, ..., s_n.
int length(const SignedPerm& w);

// Formal Coxeter type, e.g. B2 x D3. Kind B'' of rank b stands for W_b'' (type B_{b-1}).
struct CoxeterFactor {
    enum class Kind { B, D, Bpp } kind = Kind::B;
    int rank = 0;
    friend bool operator==(const CoxeterFactor&, const CoxeterFactor&) = default;
};
using CoxeterType = std::vector<CoxeterFactor>;
std::string to_string(const CoxeterType& t);

struct SeriesDescriptor {
    GroupSpec group;
    bool principal = true;
    int m = 0;
    int a = 0;
    int b = 0;
    bool cuspidal_part_nontrivial = false;

    SeriesDescriptor() = default;
    SeriesDescriptor(GroupSpec group, bool principal, int m, int a, int b, bool cuspidal_part_nontrivial);
    static SeriesDescriptor principal_series(GroupSpec group, int a, int b);
    static SeriesDescriptor levi(GroupSpec group, int m, int a, int b);
};

enum class Parity { even, odd };

struct RelWeylData {
    CoxeterType w_type;
    CoxeterType r_type;
    int c_order = 1;
    std::optional<SignedPerm> c_generator;
    std::optional<Parity> c_generator_length_parity;
    // Set for the symplectic non-principal row, which rests on an outside source.
    bool externally_sourced = false;
};

RelWeylData relative_weyl(const SeriesDescriptor& desc);

}  // namespace charfield
