#pragma once

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qpde/errors.hpp"

namespace qpde {

using complexd = std::complex<double>;

enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char axis_char(PauliAxis a) { return "IXYZ"[static_cast<int>(a)]; }

/// A tensor product of single-qubit Pauli operators. Qubit 0 is the leftmost
/// character in the text form, e.g. "XZIY" acts with X on qubit 0.
class PauliString {
  public:
    explicit PauliString(std::vector<PauliAxis> axes) : axes_(std::move(axes)) {}

    static PauliString identity(std::size_t n) {
        return PauliString(std::vector<PauliAxis>(n, PauliAxis::I));
    }

    static PauliString parse(std::string_view text) {
        std::vector<PauliAxis> axes;
        axes.reserve(text.size());
        for (char c : text) {
            switch (c) {
                case 'I': axes.push_back(PauliAxis::I); break;
                case 'X': axes.push_back(PauliAxis::X); break;
                case 'Y': axes.push_back(PauliAxis::Y); break;
                case 'Z': axes.push_back(PauliAxis::Z); break;
                default:
                    throw input_error("invalid Pauli axis character '" +
                                      std::string(1, c) + "' in \"" + std::string(text) + "\"");
            }
        }
        return PauliString(std::move(axes));
    }

    std::size_t qubit_count() const { return axes_.size(); }
    PauliAxis axis(std::size_t q) const { return axes_[q]; }

    bool is_identity() const {
        return std::all_of(axes_.begin(), axes_.end(),
                           [](PauliAxis a) { return a == PauliAxis::I; });
    }

    std::string str() const {
        std::string s;
        s.reserve(axes_.size());
        for (PauliAxis a : axes_) s.push_back(axis_char(a));
        return s;
    }

    /// Bit masks in index convention: qubit q maps to bit (n-1-q) so that the
    /// text form read left to right matches the binary index read MSB first.
    std::uint64_t x_mask() const { return mask_of(PauliAxis::X); }
    std::uint64_t y_mask() const { return mask_of(PauliAxis::Y); }
    std::uint64_t z_mask() const { return mask_of(PauliAxis::Z); }
    /// Qubits whose basis bit is flipped by this string (X or Y axes).
    std::uint64_t flip_mask() const { return x_mask() | y_mask(); }
    /// Qubits contributing a (-1)^bit phase (Y or Z axes).
    std::uint64_t phase_mask() const { return y_mask() | z_mask(); }
    int y_count() const {
        return static_cast<int>(std::count(axes_.begin(), axes_.end(), PauliAxis::Y));
    }

    friend bool operator==(const PauliString& a, const PauliString& b) {
        return a.axes_ == b.axes_;
    }
    /// Lexicographic over axes with I < X < Y < Z; the deterministic tie rule.
    friend bool operator<(const PauliString& a, const PauliString& b) {
        return a.axes_ < b.axes_;
    }

  private:
    std::uint64_t mask_of(PauliAxis want) const {
        std::uint64_t m = 0;
        const std::size_t n = axes_.size();
        for (std::size_t q = 0; q < n; ++q)
            if (axes_[q] == want) m |= std::uint64_t{1} << (n - 1 - q);
        return m;
    }

    std::vector<PauliAxis> axes_;
};

struct PauliTerm {
    PauliString string;
    double coefficient = 0.0;  // Hartree
};

/// Real-weighted sum of Pauli strings; the qubit Hamiltonian. The identity
/// component is held apart from the term list.
class PauliSum {
  public:
    PauliSum(std::size_t qubit_count, double identity_coefficient,
             std::vector<PauliTerm> terms)
        : qubit_count_(qubit_count),
          identity_coefficient_(identity_coefficient),
          terms_(std::move(terms)) {}

    std::size_t qubit_count() const { return qubit_count_; }
    double identity_coefficient() const { return identity_coefficient_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }

  private:
    std::size_t qubit_count_ = 0;
    double identity_coefficient_ = 0.0;
    std::vector<PauliTerm> terms_;
};

inline constexpr double kDefaultPruneTolerance = 1e-12;

/// Combine duplicate strings, peel the identity into its own slot, and drop
/// terms below the prune tolerance.
inline PauliSum merge_terms(const std::vector<PauliTerm>& raw,
                            double prune_tolerance = kDefaultPruneTolerance) {
    if (raw.empty()) return PauliSum(0, 0.0, {});
    const std::size_t n = raw.front().string.qubit_count();
    std::map<std::string, double> acc;
    double identity = 0.0;
    for (const auto& t : raw) {
        if (t.string.qubit_count() != n)
            throw input_error("mixed Pauli string lengths in term list");
        if (t.string.is_identity())
            identity += t.coefficient;
        else
            acc[t.string.str()] += t.coefficient;
    }
    std::vector<PauliTerm> merged;
    merged.reserve(acc.size());
    for (const auto& [s, c] : acc)
        if (std::abs(c) >= prune_tolerance)
            merged.push_back({PauliString::parse(s), c});
    return PauliSum(n, identity, std::move(merged));
}

/// Terms sorted by decreasing |coefficient|; ties broken lexicographically
/// over the axis sequence so the ordering is deterministic.
inline std::vector<PauliTerm> magnitude_order(const PauliSum& sum) {
    std::vector<PauliTerm> out = sum.terms();
    std::sort(out.begin(), out.end(), [](const PauliTerm& a, const PauliTerm& b) {
        const double ma = std::abs(a.coefficient), mb = std::abs(b.coefficient);
        if (ma != mb) return ma > mb;
        return a.string < b.string;
    });
    return out;
}

inline constexpr std::size_t kDenseQubitGuard = 14;

namespace detail {

inline Eigen::Matrix2cd single_pauli_matrix(PauliAxis a) {
    Eigen::Matrix2cd m;
    const complexd i{0.0, 1.0};
    switch (a) {
        case PauliAxis::I: m << 1, 0, 0, 1; break;
        case PauliAxis::X: m << 0, 1, 1, 0; break;
        case PauliAxis::Y: m << 0, -i, i, 0; break;
        case PauliAxis::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

/// P|s> = pauli_phase(P, s) |s ^ flip_mask>, the basis action used by every
/// kernel that applies a Pauli string without materializing it.
inline complexd pauli_phase(const PauliString& p, std::uint64_t basis_index) {
    static constexpr complexd i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    complexd phase = i_pow[p.y_count() & 3];
    if (std::popcount(basis_index & p.phase_mask()) & 1) phase = -phase;
    return phase;
}

}  // namespace detail

/// Dense Hermitian realization of the sum, identity coefficient included.
inline Eigen::MatrixXcd realize_matrix(const PauliSum& sum) {
    const std::size_t n = sum.qubit_count();
    if (n > kDenseQubitGuard)
        throw guard_error("dense realization limited to " +
                          std::to_string(kDenseQubitGuard) + " qubits, got " +
                          std::to_string(n));
    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    m.diagonal().setConstant(sum.identity_coefficient());
    for (const auto& term : sum.terms()) {
        const std::uint64_t flip = term.string.flip_mask();
        for (std::uint64_t s = 0; s < dim; ++s)
            m(s ^ flip, s) += term.coefficient * detail::pauli_phase(term.string, s);
    }
    return m;
}

}  // namespace qpde
