#include "abcgg/closed_form.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace abcgg {
namespace {

void require(bool ok, const char* formula, const char* parameter,
             const char* range, Check check) {
  if (check == Check::kStrict && !ok)
    throw FormulaDomainError(formula, parameter, range);
}

}  // namespace

double lemma1_oddodd(int p, int q, Check check) {
  require(p >= 3 && p % 2 == 1, "lemma1_oddodd", "p", "odd, >= 3", check);
  require(q >= 3 && q % 2 == 1, "lemma1_oddodd", "q", "odd, >= 3", check);
  const double P = p, Q = q;
  return 2.0 * (P - 1) * std::sqrt((P + Q - 4) / ((P - 1) * (P + 2 * Q - 3))) +
         2.0 * std::sqrt(P - 3) / (P - 1) +
         2.0 * (Q - 1) * std::sqrt((P + Q - 4) / ((2 * P + Q - 3) * (Q - 1))) +
         2.0 * std::sqrt(Q - 3) / (Q - 1);
}

double lemma2_eveneven(int p, int q, Check check) {
  require(p >= 4 && p % 2 == 0, "lemma2_eveneven", "p", "even, >= 4", check);
  require(q >= 4 && q % 2 == 0, "lemma2_eveneven", "q", "even, >= 4", check);
  const double P = p, Q = q;
  return 2.0 * P * std::sqrt((P + Q - 3) / (P * (P + 2 * Q - 2))) +
         2.0 * Q * std::sqrt((P + Q - 3) / (Q * (2 * P + Q - 2)));
}

double lemma3_oddeven(int p, int q, Check check) {
  require(p >= 3 && p % 2 == 1, "lemma3_oddeven", "p", "odd, >= 3", check);
  require(q >= 4 && q % 2 == 0, "lemma3_oddeven", "q", "even, >= 4", check);
  const double P = p, Q = q;
  return 2.0 * std::sqrt(P - 3) / (P - 1) +
         2.0 * (P - 1) * std::sqrt((P + Q - 4) / ((P + 2 * Q - 3) * (P - 1))) +
         2.0 * Q * std::sqrt((P + Q - 3) / (Q * (2 * P + Q - 2)));
}

double f_oddodd(int k, int x, Check check) {
  require(k >= 5, "f_oddodd", "k", ">= 5", check);
  require(x >= 0 && x % 2 == 0, "f_oddodd", "x", "even, >= 0", check);
  const int hi = k % 2 == 1 ? k - 3 : k - 4;
  require(x <= hi, "f_oddodd", "x",
          k % 2 == 1 ? "0 <= x <= k-3 for odd k" : "0 <= x <= k-4 for even k",
          check);
  const double K = k, X = x;
  return 2.0 * (X + 2) * std::sqrt((2 * K - 4) / ((4 * K - X - 6) * (X + 2))) +
         2.0 * (2 * K - X - 4) *
             std::sqrt((2 * K - 4) / ((2 * K + X) * (2 * K - X - 4))) +
         2.0 * std::sqrt(2 * K - X - 6) / (2 * K - X - 4) +
         2.0 * std::sqrt(X) / (X + 2);
}

double g_oddodd(int k, int x, Check check) {
  return f_oddodd(k, x, check) - 2.0 * std::sqrt(double(x)) / (x + 2);
}

double f_eveneven(int k, int x, Check check) {
  require(k >= 5, "f_eveneven", "k", ">= 5", check);
  require(x >= 0 && x % 2 == 0, "f_eveneven", "x", "even, >= 0", check);
  const int hi = k % 2 == 1 ? k - 5 : k - 4;
  require(x <= hi, "f_eveneven", "x",
          k % 2 == 1 ? "0 <= x <= k-5 for odd k" : "0 <= x <= k-4 for even k",
          check);
  const double K = k, X = x;
  return 2.0 * (X + 4) * std::sqrt((2 * K - 3) / ((4 * K - X - 6) * (X + 4))) +
         2.0 * (2 * K - X - 4) *
             std::sqrt((2 * K - 3) / ((2 * K + X + 2) * (2 * K - X - 4)));
}

double f_oddeven(int n, int x, Check check) {
  require(n >= 10 && n % 2 == 0, "f_oddeven", "n", "even, >= 10", check);
  require(x >= 0 && x % 2 == 0 && x <= n - 6, "f_oddeven", "x",
          "even, 0 <= x <= n-6", check);
  const double N = n, X = x;
  return 2.0 * (N - X - 2) * std::sqrt((N - 2) / ((N + X + 2) * (N - X - 2))) +
         2.0 * (X + 2) * std::sqrt((N - 3) / ((2 * N - X - 4) * (X + 2))) +
         2.0 * std::sqrt(X) / (X + 2);
}

double g_oddeven(int n, int x, Check check) {
  return f_oddeven(n, x, check) - 2.0 * std::sqrt(double(x)) / (x + 2);
}

TGap t_gap(long long k, long long x) {
  using I = __int128;
  const I K = k, X = x;
  const I lhs = (2 * K + X) * (2 * K + X) * (2 * K + X) * (2 * K - X - 4) -
                (X + 2) * (4 * K - X - 6) * (4 * K - X - 6) * (4 * K - X - 6);
  const I rhs = I{16} * (K - 1) * (K - X - 3) * (K - X - 3) * (K - X - 3);
  const I lo = std::numeric_limits<long long>::min();
  const I hi = std::numeric_limits<long long>::max();
  if (lhs < lo || lhs > hi || rhs < lo || rhs > hi)
    throw LimitError("t_gap: value exceeds 64-bit range");
  return {static_cast<long long>(lhs), static_cast<long long>(rhs)};
}

double theorem1_bound(int n, Theorem1Variant variant, Check check) {
  require(n >= 9, "theorem1_bound", "n", ">= 9", check);
  const double N = n;
  if (n % 2 == 0)
    return 2.0 * std::sqrt((N - 3) / (N - 2)) + 2.0 * (N - 2) / std::sqrt(N + 2);
  const double denom =
      variant == Theorem1Variant::kPrinted ? std::sqrt(N - 1) : std::sqrt(N + 1);
  return 2.0 * (N - 3) / denom + 2.0 * std::sqrt((N - 3) / (N - 2)) +
         2.0 * std::sqrt(N - 5) / (N - 3);
}

double conjecture2_bound(int n, Check check) {
  require(n >= 9, "conjecture2_bound", "n", ">= 9", check);
  const double N = n;
  if (n % 2 == 1) return 2.0 * (N + 1) * std::sqrt((N - 2) / (N * N - 1));
  return (6.0 / N) * std::sqrt(N - 2) + 2.0 * (N - 2) * std::sqrt(1.0 / (N + 2));
}

double conjecture3_bound(int n, Conjecture3Variant variant, Check check) {
  require(n >= 8, "conjecture3_bound", "n", ">= 8", check);
  const double N = n;
  const double tail = variant == Conjecture3Variant::kPrinted
                          ? std::sqrt(2.0) / 2.0
                          : std::sqrt(2.0);
  return (N - 4) * std::sqrt((N - 2) / (N - 1)) + std::sqrt((N - 4) / (N - 3)) +
         2.0 * std::sqrt((N - 3) / (N - 2)) + tail;
}

}  // namespace abcgg
