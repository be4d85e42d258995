#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stackpat/bigint.hpp"

namespace stackpat {

class SingularStep : public std::runtime_error {
  public:
    explicit SingularStep(long long n)
        : std::runtime_error("leading coefficient vanishes at n = " + std::to_string(n)), n(n) {}
    long long n;
};

class NonIntegralStep : public std::runtime_error {
  public:
    explicit NonIntegralStep(long long n)
        : std::runtime_error("recurrence step is not integral at n = " + std::to_string(n)),
          n(n) {}
    long long n;
};

// q_0(n) a_n + q_1(n) a_{n-1} + ... + q_k(n) a_{n-k} = 0, with integer
// polynomial coefficients (ascending degree) and seeds a_1..a_k.
struct PolyRecurrence {
    std::vector<std::vector<BigInt>> coeffs;  // q_0..q_k
    std::vector<BigInt> seeds;                // a_1..a_k

    int order() const { return static_cast<int>(coeffs.size()) - 1; }

    static PolyRecurrence from_json(const std::string& text);
    std::string to_json() const;
};

BigInt eval_poly(const std::vector<BigInt>& coeffs, long long x);

// Exact terms a_1..a_N.
std::vector<BigInt> eval(const PolyRecurrence& rec, long long upto);

// Parity word alpha_n = a_n mod 2 as a '0'/'1' string.
std::string mod2_word(const PolyRecurrence& rec, long long upto);

// Shortest binary word of length <= maxlen absent from `word` as a factor
// (lexicographically least among the shortest), or nullopt when every binary
// word of length <= maxlen occurs.
std::optional<std::string> missing_subword(const std::string& word, int maxlen);

}  // namespace stackpat
