#pragma once

#include <map>
#include <string>
#include <vector>

namespace charfield {

class Partition {
public:
    Partition() = default;
    // Sorts into weakly decreasing order and drops zero parts.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n_total() const { return total_; }
    // Multiplicity r_m of the part m.
    int r(int m) const;
    std::map<int, int> multiplicities() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

std::string to_string(const Partition& p);
std::vector<Partition> partitions_of(int n);

// A partition in P_eps(N): parts of parity eps occur with even multiplicity.
class EpsPartition {
public:
    EpsPartition(Partition base, int eps);
    const Partition& base() const { return base_; }
    int eps() const { return eps_; }
    static bool admissible(const Partition& p, int eps);

private:
    Partition base_;
    int eps_;
};

std::vector<EpsPartition> eps_partitions_of(int n, int eps);

struct EpsStats {
    int a = 0;
    int delta = 0;
    friend bool operator==(const EpsStats&, const EpsStats&) = default;
};
EpsStats eps_stats(const EpsPartition& mu);

struct ComponentOrders {
    long aG = 1;
    long aG0 = 1;
    long aGad = 1;
    friend bool operator==(const ComponentOrders&, const ComponentOrders&) = default;
};
ComponentOrders component_orders(const EpsPartition& mu);

// Two-row symbol. gap = 0 for ordinary symbols (rows weakly built from bipartitions)
// and gap = 2 for symbols whose rows have consecutive entries at least 2 apart.
struct LSymbol {
    std::vector<int> top;
    std::vector<int> bottom;
    int gap = 0;

    LSymbol() = default;
    LSymbol(std::vector<int> top, std::vector<int> bottom, int gap = 0);

    int defect() const { return static_cast<int>(top.size()) - static_cast<int>(bottom.size()); }
    int rank() const;
    // Shift equivalence: prepend `count` entries, keeping the gap pattern.
    LSymbol shifted(int count) const;

    friend bool operator==(const LSymbol&, const LSymbol&) = default;
};

std::string to_string(const LSymbol& s);

// Entrywise sum after shifting both summands to a common length; the result
// carries the larger gap.
LSymbol operator+(const LSymbol& x, const LSymbol& y);

LSymbol special_symbol(int e, int delta);
// The unique gap-2 symbol of rank 0 and defect delta with `rows` bottom entries.
LSymbol zero_gap2_symbol(int rows, int delta);

// Sort all entries and subtract 0, 1, 2, ...; returns the resulting weakly
// decreasing sequence including zeros.
std::vector<int> symbol_to_mu(const LSymbol& s);

bool cuspidal_admissible(int e, int f, int delta);
// S_{e,delta} + S_{f,delta} + Lambda^2_{0,delta} with e <= f after swapping.
LSymbol springer_symbol(int e, int f, int delta);
EpsPartition wavefront_partition(int e, int f, int delta);
long n_cuspidal(int e, int f, int delta);

}  // namespace charfield
