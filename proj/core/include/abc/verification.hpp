#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abc/graph.hpp"
#include "abc/report.hpp"

namespace abc {

/// Margins at or below this count as marginal; at or below zero as violated.
inline constexpr double kComparisonTol = 1e-9;

struct BoundCheck {
    double bound = 0.0;
    double slack = 0.0;  // oriented so >= 0 means the bound holds
};

/// rho <= sqrt(Delta + (2m-n+1)/Delta - 2); slack = bound - rho.
BoundCheck bound_upper_lin(const Graph& g);
BoundCheck bound_upper_lin(const Graph& g, double rho);

/// rho >= sqrt(2(n - 2 R_{-1})/n); slack = rho - bound. The radicand is
/// trace(M^2)/n, which pins the R_{-1} coefficient.
BoundCheck bound_lower_chen(const Graph& g);
BoundCheck bound_lower_chen(const Graph& g, double rho);

/// (2/n) ABC(G) <= rho <= max row sum of M(G).
struct EstradaBounds {
    double lower = 0.0;
    double upper = 0.0;
    double lower_slack = 0.0;  // rho - lower
    double upper_slack = 0.0;  // upper - rho
};
EstradaBounds bounds_estrada(const Graph& g);
EstradaBounds bounds_estrada(const Graph& g, double rho);

// ---- theorem harness -------------------------------------------------
// All sweep-style verifiers accept threads = 0 meaning default_threads().

/// Over all trees of order n: S_n is the unique maximum and S_{n-3,1} the
/// unique second maximum (n >= 4, capacity n <= 16).
VerificationReport verify_lemma12(int n, unsigned threads = 0);

/// Top-5 ordering S_n > S_{n-3,1} > T1 > T2 > T3 > rest over all trees of
/// order n; status is inapplicable below the n >= 10 hypothesis but the
/// observed order is still recorded.
VerificationReport verify_theorem31(int n, unsigned threads = 0);

/// Sign of rho(T1) - rho(T2): negative for n in {6,7,8}, positive for n >= 9.
VerificationReport verify_lemma34_crossover(int n_lo, int n_hi);

/// The displayed characteristic polynomial of T_i (i in {1,2,4,5,6}),
/// evaluated via the lambda-cleared equivalent.
double closed_form_charpoly(int tree_index, int n, double lambda);

/// closed_form_charpoly against determinant evaluation of the constructed
/// trees on a 25-point lambda grid, n in [n_lo, n_hi].
VerificationReport verify_charpoly_closed_forms(int n_lo, int n_hi);

/// Lemmas 3.2, 3.5, 3.6, 3.7 at order n, each gated by its own hypothesis.
VerificationReport verify_sqrt_gap_lemmas(int n, unsigned threads = 0);

/// Survivors rho <= sqrt(2) + tol over all connected graphs of order
/// 4..n_max; asserts the conjectured survivors {P_n, C_n, S_4} are present
/// and publishes (never asserts absence of) anything else found.
VerificationReport conjecture41_search(int n_max, unsigned threads = 0);

/// argmax/argmin of rho over trees with maximum degree exactly delta;
/// ties within tolerance are reported as sets.
struct ExtremalResult {
    std::vector<std::string> maximizers;  // graph6
    std::vector<std::string> minimizers;
    double max_rho = 0.0;
    double min_rho = 0.0;
    std::size_t class_size = 0;
};
ExtremalResult extremal_in_class(int n, int delta, unsigned threads = 0);
VerificationReport extremal_report(int n, int delta, unsigned threads = 0);

/// |rho(S_n) - sqrt(n-2)| <= 1e-10 for n in [n_lo, n_hi].
VerificationReport verify_star_closed_form(int n_lo, int n_hi);

/// Lemma 2.1 / 2.2 identities over a seeded corpus of random tree pairs
/// whose joined order stays <= max_joined_order; 25 lambda samples each.
VerificationReport verify_union_corpus(int max_joined_order, int pairs, std::uint64_t seed);
VerificationReport verify_join_corpus(int max_joined_order, int pairs, std::uint64_t seed);

/// Lemma 2.5 closed forms over every pendant path (k >= 2, d(v0) >= 3) of
/// every tree of order n; also checks the strict decay bound and
/// rho >= sqrt(2) for the non-path hosts.
VerificationReport verify_pendant_profiles(int n, unsigned threads = 0);

/// Theorem 2.3 margins over bases K_{1,d} (d = 3..8) at the center,
/// k >= l >= 1, k+l <= 6.
VerificationReport verify_star_shift_grid();

/// Theorem 2.4 margins, variants 1-3, bases K_{1,d} (d = 3..6) at the
/// center over the admissible (k,l) with k+l <= 8.
VerificationReport verify_path_shift_grid();

/// Exploratory report on the conjectured rho(G_{k+l-1,1}) > ... >
/// rho(G_{k+l,0}) chain; observed orderings are recorded, never asserted.
VerificationReport explore_chain_report(int total_lo, int total_hi);

/// Bound sandwich at order n: every tree of order n and (n <= 8) every
/// connected graph of order n.
VerificationReport verify_bound_sandwich(int n, unsigned threads = 0);

// ---- sweep table (CSV interface) -------------------------------------

struct GraphTableRow {
    std::string graph6;
    int n = 0;
    int delta = 0;
    double rho = 0.0;
    double abc = 0.0;
    double r_minus_one = 0.0;
    double lower_estrada = 0.0;
    double lower_chen = 0.0;
    double upper_estrada = 0.0;
    double upper_lin = 0.0;
};
GraphTableRow table_row(const Graph& g);
std::string table_csv_header();
std::string table_row_csv(const GraphTableRow& row);

// ---- claim registry (CLI front end) -----------------------------------

struct ClaimRequest {
    std::string claim;
    int n_lo = 0;
    int n_hi = 0;
    std::uint64_t seed = 0x5eed;
    unsigned threads = 0;
};

std::vector<std::string> known_claims();

/// Runs a named claim over its n range (range semantics depend on the
/// claim); contract error for unknown names.
std::vector<VerificationReport> run_claim(const ClaimRequest& request);

}  // namespace abc
