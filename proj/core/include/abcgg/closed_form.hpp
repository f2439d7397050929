#pragma once

#include <cstdint>

#include "abcgg/errors.hpp"

namespace abcgg {

// Domain checks are strict by default: parity and range constraints on
// the parameters are enforced and violations raise FormulaDomainError.
// kOff evaluates the expression anyway (CLI-only escape hatch).
enum class Check { kStrict, kOff };

// Index of the graph made of two odd cycles C_p, C_q sharing one vertex.
double lemma1_oddodd(int p, int q, Check check = Check::kStrict);

// Same, both cycles even.
double lemma2_eveneven(int p, int q, Check check = Check::kStrict);

// Same, C_p odd and C_q even.
double lemma3_oddeven(int p, int q, Check check = Check::kStrict);

// Odd order n = 2k-1, both cycles odd. Reparameterization of
// lemma1_oddodd(3+x, 2k-3-x); x counts vertices moved between cycles,
// even, with 0 <= x <= k-3 for odd k and 0 <= x <= k-4 for even k.
double f_oddodd(int k, int x, Check check = Check::kStrict);

// f_oddodd without its last term 2*sqrt(x)/(x+2).
double g_oddodd(int k, int x, Check check = Check::kStrict);

// Odd order n = 2k-1, both cycles even. Equals
// lemma2_eveneven(4+x, 2k-4-x); x even, 0 <= x <= k-5 (odd k) or k-4
// (even k).
double f_eveneven(int k, int x, Check check = Check::kStrict);

// Even order n, one odd and one even cycle. Equals the index of
// b1(3+x, n-2-x); x even, 0 <= x <= n-6, n even >= 10.
double f_oddeven(int n, int x, Check check = Check::kStrict);

// f_oddeven without its last term 2*sqrt(x)/(x+2).
double g_oddeven(int n, int x, Check check = Check::kStrict);

// Both sides of the exact integer identity
//   (2k+x)^3 (2k-x-4) - (x+2)(4k-x-6)^3 = 16 (k-1) (k-x-3)^3,
// evaluated in exact integer arithmetic (128-bit internally).
struct TGap {
  long long lhs = 0;
  long long rhs = 0;
};
TGap t_gap(long long k, long long x);

// The n-odd lower bound exists in two forms: the printed one uses
// sqrt(n-1) in its first denominator, while the form consistent with the
// minimum value of f_oddodd at x = 0 uses sqrt(n+1). Both are exposed;
// the verify module decides empirically which one the extremal scans
// match. For even n the two variants coincide.
enum class Theorem1Variant { kPrinted, kLemmaConsistent };
double theorem1_bound(int n, Theorem1Variant variant, Check check = Check::kStrict);

// Conjectured lower bound over all bicyclic graphs of order n >= 9:
// odd n: 2(n+1) sqrt((n-2)/(n^2-1)); even n: (6/n) sqrt(n-2) + 2(n-2)/sqrt(n+2).
double conjecture2_bound(int n, Check check = Check::kStrict);

// Conjectured upper bound over all bicyclic graphs of order n >= 8.
// The printed constant term sqrt(2)/2 does not reproduce the index of the
// conjectured extremal graph h_graph(n); the h-consistent variant with
// constant sqrt(2) does, exactly (H has two edges whose split is (2,1),
// each contributing sqrt(2)/2). Both are exposed; kHConsistent is the
// default and the one extremal scans match.
enum class Conjecture3Variant { kPrinted, kHConsistent };
double conjecture3_bound(int n,
                         Conjecture3Variant variant = Conjecture3Variant::kHConsistent,
                         Check check = Check::kStrict);

}  // namespace abcgg
