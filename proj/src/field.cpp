#include "cdu/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cdu {

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

namespace {

// ---- dense polynomial helpers over GF(p), coefficients c0..cdeg --------

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

// reduce a modulo monic f in place
void pmod(Poly& a, const Poly& f, std::uint32_t p) {
    const std::size_t df = f.size() - 1;
    if (df == 0) {
        a.assign(1, 0);
        return;
    }
    for (std::size_t i = a.size(); i-- > df;) {
        std::uint32_t c = a[i];
        if (c == 0) continue;
        a[i] = 0;
        for (std::size_t j = 0; j < df; ++j)
            a[i - df + j] = (a[i - df + j] + (p - 1) * c % p * f[j]) % p;
    }
    trim(a);
}

Poly psub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    trim(r);
    return r;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    std::uint32_t r = 1;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
    }
    return r;
}

Poly pgcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!(b.size() == 1 && b[0] == 0)) {
        if (b.size() == 1) return {1};
        if (b.back() != 1) {
            std::uint32_t il = inv_mod_p(b.back(), p);
            for (auto& c : b) c = c * il % p;
        }
        pmod(a, b, p);
        std::swap(a, b);
    }
    return a;
}

// base^e mod f
Poly ppow(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly r{1};
    pmod(base, f, p);
    while (e) {
        if (e & 1) {
            r = pmul(r, base, p);
            pmod(r, f, p);
        }
        e >>= 1;
        if (e) {
            base = pmul(base, base, p);
            pmod(base, f, p);
        }
    }
    return r;
}

// ---- code <-> digit vector ---------------------------------------------

Poly code_to_poly(Element x, std::uint32_t p, std::uint32_t n) {
    Poly d(n, 0);
    for (std::uint32_t i = 0; i < n && x; ++i) {
        d[i] = x % p;
        x /= p;
    }
    trim(d);
    return d;
}

Element poly_to_code(const Poly& d, std::uint32_t p) {
    Element x = 0;
    for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
    return x;
}

std::vector<std::uint32_t> factor_trial(std::uint64_t m) {
    std::vector<std::uint32_t> fs;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            fs.push_back(static_cast<std::uint32_t>(d));
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) fs.push_back(static_cast<std::uint32_t>(m));
    return fs;
}

}  // namespace

bool check_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    if (!is_prime(p)) throw InvalidPolynomialError("characteristic is not prime");
    if (poly.size() < 2) throw InvalidPolynomialError("degree must be at least 1");
    if (poly.back() != 1) throw InvalidPolynomialError("polynomial must be monic");
    for (auto c : poly)
        if (c >= p) throw InvalidPolynomialError("coefficient out of range [0, p)");
    const std::size_t deg = poly.size() - 1;
    if (deg == 1) return true;
    const Poly x{0, 1};
    Poly h = x;
    for (std::size_t k = 1; k <= deg / 2; ++k) {
        h = ppow(h, p, poly, p);  // h = x^{p^k} mod poly
        Poly g = pgcd(psub(h, x, p), poly, p);
        if (g.size() > 1) return false;
    }
    return true;
}

namespace {

// multiplication of codes without tables, used only during construction
Element raw_mul(Element x, Element y, const FieldSpec& s) {
    Poly a = code_to_poly(x, s.p, s.n);
    Poly b = code_to_poly(y, s.p, s.n);
    if ((a.size() == 1 && a[0] == 0) || (b.size() == 1 && b[0] == 0)) return 0;
    Poly r = pmul(a, b, s.p);
    pmod(r, s.modulus, s.p);
    return poly_to_code(r, s.p);
}

Element raw_pow(Element x, std::uint64_t e, const FieldSpec& s) {
    Element r = 1, b = x;
    while (e) {
        if (e & 1) r = raw_mul(r, b, s);
        e >>= 1;
        if (e) b = raw_mul(b, b, s);
    }
    return r;
}

}  // namespace

Field build_field_impl(FieldSpec spec, std::uint64_t cap) {
    const std::uint32_t p = spec.p;
    const std::uint32_t n = spec.n;
    if (!is_prime(p)) throw FieldError("p must be prime");
    if (n < 1) throw FieldError("extension degree must be positive");

    std::uint64_t q64 = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        q64 *= p;
        if (q64 > cap)
            throw SizeCapError("q = p^n exceeds the table cap (" + std::to_string(cap) + ")");
    }
    const std::uint32_t q = static_cast<std::uint32_t>(q64);

    if (spec.modulus.size() != n + 1)
        throw InvalidPolynomialError("modulus must have exactly n+1 coefficients");
    if (!check_irreducible(spec.modulus, p))
        throw IrreducibilityError("modulus is reducible over GF(p)");

    Field F;
    F.spec_ = std::move(spec);
    F.q_ = q;
    F.order_factors_ = factor_trial(q - 1);

    // generator: first code g = 2, 3, ... with multiplicative order q-1
    Element g = 0;
    if (q == 2) {
        g = 1;
    } else {
        for (Element cand = 2; cand < q; ++cand) {
            bool ok = true;
            for (auto ell : F.order_factors_) {
                if (raw_pow(cand, (q - 1) / ell, F.spec_) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                g = cand;
                break;
            }
        }
        if (g == 0) throw FieldError("no generator found (internal)");
    }
    F.generator_ = g;

    // exp/log tables; exp doubled so products index without reduction
    F.exp_.assign(2 * (q - 1), 0);
    F.log_.assign(q, 0);
    const bool g_is_x = (g == p);  // multiplication by x is a digit shift
    Poly acc{1};
    Element cur = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        F.exp_[i] = cur;
        F.log_[cur] = i;
        if (g_is_x) {
            acc.insert(acc.begin(), 0);
            pmod(acc, F.spec_.modulus, p);
            cur = poly_to_code(acc, p);
        } else {
            cur = raw_mul(cur, g, F.spec_);
        }
    }
    if (cur != 1) throw FieldError("generator order mismatch (internal)");
    for (std::uint32_t i = 0; i < q - 1; ++i) F.exp_[q - 1 + i] = F.exp_[i];

    // exp/log round-trip over every nonzero element
    for (Element x = 1; x < q; ++x)
        if (F.exp_[F.log_[x]] != x) throw FieldError("exp/log tables inconsistent (internal)");

    // chunked digit add/neg tables: chunk = p^k, largest with p^k <= 256
    std::uint32_t chunk = p;
    while (chunk * p <= 256) chunk *= p;
    F.chunk_ = chunk;
    F.add_chunk_.assign(static_cast<std::size_t>(chunk) * chunk, 0);
    F.neg_chunk_.assign(chunk, 0);
    for (std::uint32_t a = 0; a < chunk; ++a) {
        std::uint32_t na = 0, mult = 1;
        for (std::uint32_t t = a; t; t /= p) {
            na += mult * ((p - t % p) % p);
            mult *= p;
        }
        F.neg_chunk_[a] = static_cast<std::uint16_t>(na);
        for (std::uint32_t b = 0; b < chunk; ++b) {
            std::uint32_t r = 0, m2 = 1;
            for (std::uint32_t ta = a, tb = b; ta | tb; ta /= p, tb /= p) {
                r += m2 * ((ta % p + tb % p) % p);
                m2 *= p;
            }
            F.add_chunk_[static_cast<std::size_t>(a) * chunk + b] =
                static_cast<std::uint16_t>(r);
        }
    }
    return F;
}

Field build_field(std::uint32_t p, std::uint32_t n,
                  std::optional<std::vector<std::uint32_t>> modulus,
                  const FieldOptions& opts) {
    FieldSpec spec;
    spec.p = p;
    spec.n = n;
    if (modulus) {
        spec.modulus = std::move(*modulus);
    } else {
        std::string path = opts.db_path ? *opts.db_path : default_db_path();
        spec.modulus = lookup_modulus(p, n, path);
    }
    return build_field_impl(std::move(spec), opts.cap);
}

std::vector<std::uint32_t> lookup_modulus(std::uint32_t p, std::uint32_t n,
                                          const std::string& db_path) {
    std::ifstream in(db_path);
    if (!in)
        throw DatabaseMissError("cannot open polynomial database: " + db_path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::uint32_t fp, fn;
        if (!(ss >> fp >> fn)) continue;
        if (fp != p || fn != n) continue;
        std::vector<std::uint32_t> coeffs;
        std::uint32_t c;
        while (ss >> c) coeffs.push_back(c);
        if (coeffs.size() != n + 1)
            throw DatabaseMissError("malformed database record for p=" + std::to_string(p) +
                                    " n=" + std::to_string(n));
        return coeffs;
    }
    throw DatabaseMissError("no modulus for p=" + std::to_string(p) +
                            " n=" + std::to_string(n) + " in " + db_path);
}

std::string default_db_path() {
    if (const char* env = std::getenv("CDU_POLY_DB")) return env;
#ifdef CDU_DATA_DIR
    return std::string(CDU_DATA_DIR) + "/conway_polynomials.txt";
#else
    return "data/conway_polynomials.txt";
#endif
}

}  // namespace cdu
