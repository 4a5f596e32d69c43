#pragma once

#include <confmech/states.hpp>
#include <confmech/wronskian.hpp>

#include <optional>
#include <string>
#include <vector>

namespace confmech {

// Seed-state selection: positive n picks the oscillator bound state psi_n,
// negative -n picks the non-normalizable partner. 0 picks psi_0 and is
// classified mixed because the mirror-diagram rules need strictly positive
// indices; reduce_mixed removes it.
class Scheme {
  public:
    enum class SignClass { positive, negative, mixed };

    Scheme() = default;
    explicit Scheme(std::vector<int> indices);  // sorts, rejects duplicates
    static Scheme parse(const std::string& text);

    const std::vector<int>& indices() const { return idx_; }
    bool empty() const { return idx_.empty(); }
    size_t size() const { return idx_.size(); }
    bool contains(int i) const;
    SignClass sign_class() const;
    // n_m = max |index|; -1 for the empty scheme
    int max_magnitude() const;
    std::vector<EigenState> states() const;

    std::string to_string() const;
    bool operator==(const Scheme& o) const { return idx_ == o.idx_; }

  private:
    std::vector<int> idx_;
};

struct DualityResult {
    Scheme dual;
    Rat shift;              // L_pos - L_neg over the pair, = 2(n_m+1)
    int gaussian_exponent;  // the n_m+1 weight relating the two Wronskians
};

// Mirror-diagram complement. Requires a purely positive or purely negative
// scheme; applying it twice returns the input.
DualityResult dual(const Scheme& s);

struct Reduction {
    Scheme positive;  // 0-free, strictly positive representative
    Rat shift;        // L_input = L_positive + shift
};

// Iterated insertion/annihilation chain taking any scheme to an equivalent
// strictly positive one. Positive input returns unchanged with shift 0;
// negative input reproduces dual() with the sign of the shift flipped.
Reduction reduce_mixed(const Scheme& s);

struct Regularity {
    bool regular;
    int root_count;  // distinct Wronskian-core roots on (0, inf)
    Poly core;
    std::optional<std::pair<Rat, Rat>> root_window;  // brackets one root when singular
};

// Direct verdict from root isolation on the seed Wronskian core.
Regularity regularity(const Scheme& s);

struct Band {
    Rat lowest;                // in the positive-representative convention
    std::optional<int> count;  // nullopt marks the final infinite band
};

struct SpectrumModel {
    std::vector<Band> bands;  // spacing 4 inside a band, gaps >= 8 between
    Scheme positive_rep;
    Rat rep_shift;            // L_input = L_rep + rep_shift
    Rat shift_to_negative;    // L_rep - L_(dual of rep)

    // first k energies in the positive-representative convention
    std::vector<Rat> lowest(int k) const;
    // same levels expressed for the Hamiltonian the input scheme generates
    std::vector<Rat> lowest_input_convention(int k) const;
    // states in finite bands
    int valence_count() const;
};

// Physical levels that survive the transformation: {4l+3} minus the levels
// of odd seeds in the positive representative, grouped into bands.
SpectrumModel predict_spectrum(const Scheme& s);

// Number of equidistant-band states the highest-order ladder annihilates,
// by the parity-appropriate counting formula.
int n_infinity(const Scheme& s);

}  // namespace confmech
