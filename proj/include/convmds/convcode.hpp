#ifndef CONVMDS_CONVCODE_HPP
#define CONVMDS_CONVCODE_HPP

#include <optional>
#include <vector>

#include "convmds/poly.hpp"

namespace convmds {

// Full-row-rank k x n polynomial generator matrix, row-major entries.
struct GeneratorMatrix {
    const Field* field;
    int k;
    int n;
    std::vector<Poly> entries;

    const Poly& at(int row, int col) const { return entries[size_t(row) * n + col]; }
};

// An (n, k, delta) convolutional code given by a generator matrix. The
// degree delta (maximum degree among the k x k full-size minors) is computed
// and cached at construction, and rank-deficient generators are rejected.
class ConvCode {
  public:
    // Grid of ascending coefficient lists, k rows of n lists each.
    static ConvCode make(const Field& f, int k, int n,
                         const std::vector<std::vector<std::vector<int64_t>>>& grid);
    static ConvCode from_entries(const Field& f, int k, int n, std::vector<Poly> entries);

    const Field& field() const { return *gen_.field; }
    int k() const { return gen_.k; }
    int n() const { return gen_.n; }
    int degree() const { return degree_; }
    const GeneratorMatrix& generator() const { return gen_; }
    const Poly& entry(int row, int col) const { return gen_.at(row, col); }

  private:
    ConvCode(GeneratorMatrix gen, int degree) : gen_(std::move(gen)), degree_(degree) {}

    GeneratorMatrix gen_;
    int degree_;
};

// All k x k minors of the generator, columns chosen in ascending
// lexicographic order. Laplace expansion; supports k <= 4.
std::vector<Poly> full_size_minors(const GeneratorMatrix& g);

// Maximum degree among the full-size minors.
int code_degree(const ConvCode& code);

// (n - k) * (floor(delta / k) + 1) + delta + 1.
int singleton_bound(int n, int k, int delta);

// v(D) = u(D) G(D); u has k entries over the code's field.
std::vector<Poly> encode(const ConvCode& code, const std::vector<Poly>& u);
std::vector<Poly> encode(const ConvCode& code, const Poly& u);  // k = 1

// Total number of nonzero field coefficients across all entries.
int codeword_weight(const std::vector<Poly>& v);

struct CapabilityReport {
    int d_free;
    int detect_s;   // d_free - 1
    int correct_t;  // floor((d_free - 1) / 2)
};
CapabilityReport error_capabilities(int d_free);

struct CatastrophicityReport {
    Poly minor_gcd;                     // monic gcd of all full-size minors
    bool is_catastrophic;               // deg(minor_gcd) >= 1
    std::optional<Poly> witness_factor; // monic irreducible divisor, when catastrophic
};

// Noncatastrophic iff the gcd of the full-size minors is a nonzero constant.
CatastrophicityReport is_catastrophic(const ConvCode& code);

}  // namespace convmds

#endif
