// Table-based arithmetic for GF(p^n), q = p^n capped at 3^16 by default.
//
// Elements are integer codes in [0, q): the base-p digits of the code are
// the coefficients of the residue polynomial, constant term first.
// Multiplication runs on exp/log tables; addition on per-chunk digit tables.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdu {

using Element = std::uint32_t;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidPolynomialError : FieldError {
    using FieldError::FieldError;
};
struct IrreducibilityError : FieldError {
    using FieldError::FieldError;
};
struct DatabaseMissError : FieldError {
    using FieldError::FieldError;
};
struct SizeCapError : FieldError {
    using FieldError::FieldError;
};
struct DivisionByZeroError : FieldError {
    using FieldError::FieldError;
};

struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::vector<std::uint32_t> modulus;  // c0..cn, monic, length n+1
};

bool is_prime(std::uint64_t m);

// True iff poly (c0..cdeg, monic, coefficients in [0,p)) is irreducible over
// GF(p): gcd(x^{p^k} - x, poly) = 1 for every k <= deg/2.
bool check_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

class Field {
public:
    const FieldSpec& spec() const { return spec_; }
    std::uint32_t p() const { return spec_.p; }
    std::uint32_t n() const { return spec_.n; }
    std::uint32_t q() const { return q_; }
    std::uint32_t order() const { return q_ - 1; }  // multiplicative group
    Element generator() const { return generator_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }

    // constant polynomial v mod p
    Element scalar(std::uint64_t v) const { return static_cast<Element>(v % spec_.p); }

    Element add(Element x, Element y) const {
        if (chunk_ == 0) return add_widedigit(x, y);
        Element r = 0, mult = 1;
        while (x | y) {
            r += mult * add_chunk_[(x % chunk_) * chunk_ + y % chunk_];
            x /= chunk_;
            y /= chunk_;
            mult *= chunk_;
        }
        return r;
    }

    Element neg(Element x) const {
        if (chunk_ == 0) return neg_widedigit(x);
        Element r = 0, mult = 1;
        while (x) {
            r += mult * neg_chunk_[x % chunk_];
            x /= chunk_;
            mult *= chunk_;
        }
        return r;
    }

    Element sub(Element x, Element y) const { return add(x, neg(y)); }

    Element mul(Element x, Element y) const {
        if (x == 0 || y == 0) return 0;
        return exp_[log_[x] + log_[y]];
    }

    Element inv(Element x) const {
        if (x == 0) throw DivisionByZeroError("inv(0) is undefined");
        return exp_[(q_ - 1) - log_[x]];
    }

    Element div(Element x, Element y) const { return mul(x, inv(y)); }

    // 0^0 = 1, 0^d = 0 for d >= 1; exponent reduction mod q-1 on nonzero base
    Element pow(Element x, std::uint64_t d) const {
        if (x == 0) return d == 0 ? 1 : 0;
        std::uint64_t dm = d % (q_ - 1);
        return exp_[(static_cast<std::uint64_t>(log_[x]) * dm) % (q_ - 1)];
    }

    // discrete log of nonzero x, in [0, q-1)
    std::uint32_t log(Element x) const {
        if (x == 0) throw DivisionByZeroError("log(0) is undefined");
        return log_[x];
    }

    // generator^(i mod q-1)
    Element exp_at(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }

    const std::vector<Element>& exp_table() const { return exp_; }
    const std::vector<std::uint32_t>& log_table() const { return log_; }

    bool in_range(Element x) const { return x < q_; }

    // prime factors of q-1, ascending (trial division at build time)
    const std::vector<std::uint32_t>& order_prime_factors() const { return order_factors_; }

private:
    friend Field build_field_impl(FieldSpec spec, std::uint64_t cap);

    FieldSpec spec_;
    std::uint32_t q_ = 0;
    Element generator_ = 0;
    std::uint32_t chunk_ = 0;  // p^k with p^k <= 256; add/neg tables work on chunks
    std::vector<std::uint32_t> log_;        // length q, log_[0] unused
    std::vector<Element> exp_;              // length 2(q-1), doubled
    std::vector<std::uint16_t> add_chunk_;  // chunk_ * chunk_
    std::vector<std::uint16_t> neg_chunk_;  // chunk_
    std::vector<std::uint32_t> order_factors_;
};

struct FieldOptions {
    std::uint64_t cap = 43046721;  // 3^16
    std::optional<std::string> db_path;
};

// Builds GF(p^n). If modulus is omitted it is looked up in the bundled
// polynomial database. The modulus is always re-checked for irreducibility.
Field build_field(std::uint32_t p, std::uint32_t n,
                  std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                  const FieldOptions& opts = {});

// Polynomial database: text lines "p n c0 c1 ... cn", '#' starts a comment.
std::vector<std::uint32_t> lookup_modulus(std::uint32_t p, std::uint32_t n,
                                          const std::string& db_path);
std::string default_db_path();  // honors the CDU_POLY_DB environment variable

}  // namespace cdu
