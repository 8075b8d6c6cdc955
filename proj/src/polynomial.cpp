#include "lucasnomial/polynomial.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "lucasnomial/errors.hpp"

namespace lucasnomial {

// ---------------------------------------------------------------------------
// UnivariatePolynomial

UnivariatePolynomial::UnivariatePolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

UnivariatePolynomial UnivariatePolynomial::constant(const Integer& c) {
    return UnivariatePolynomial(std::vector<Integer>{c});
}

UnivariatePolynomial UnivariatePolynomial::monomial(const Integer& c, std::size_t exp) {
    std::vector<Integer> coeffs(exp + 1);
    coeffs[exp] = c;
    return UnivariatePolynomial(std::move(coeffs));
}

void UnivariatePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Integer UnivariatePolynomial::coeff(std::size_t exp) const {
    return exp < coeffs_.size() ? coeffs_[exp] : Integer(0);
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
    UnivariatePolynomial out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& lhs, const UnivariatePolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::pow(unsigned exp) const {
    UnivariatePolynomial result = constant(1);
    UnivariatePolynomial base = *this;
    while (exp != 0) {
        if (exp & 1U) {
            result = result * base;
        }
        exp >>= 1U;
        if (exp != 0) {
            base = base * base;
        }
    }
    return result;
}

Integer UnivariatePolynomial::eval(const Integer& q0) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q0 + *it;
    }
    return acc;
}

UnivariatePolynomial exact_div(const UnivariatePolynomial& p, const UnivariatePolynomial& d) {
    if (d.is_zero()) {
        throw DomainError("division by the zero polynomial");
    }
    if (p.is_zero()) {
        return {};
    }
    if (p.degree() < d.degree()) {
        throw IndivisibleError("dividend degree below divisor degree");
    }
    std::vector<Integer> rem = p.coeffs();
    const auto& dc = d.coeffs();
    const std::size_t dd = dc.size() - 1;
    std::vector<Integer> quot(rem.size() - dd);
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Integer& lead = rem[i + dd];
        if (lead == 0) {
            continue;
        }
        if (!mpz_divisible_p(lead.get_mpz_t(), dc[dd].get_mpz_t())) {
            throw IndivisibleError("leading coefficient not divisible");
        }
        Integer factor = lead / dc[dd];
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[i + j] -= factor * dc[j];
        }
        quot[i] = std::move(factor);
    }
    for (const auto& c : rem) {
        if (c != 0) {
            throw IndivisibleError("nonzero remainder");
        }
    }
    return UnivariatePolynomial(std::move(quot));
}

namespace {

// Appends one signed term to out; `body` is the unsigned monomial text or empty.
void append_term(std::string& out, const Integer& c, const std::string& body, bool first) {
    const bool negative = c < 0;
    Integer mag = abs(c);
    if (first) {
        if (negative) {
            out += '-';
        }
    } else {
        out += negative ? " - " : " + ";
    }
    if (body.empty()) {
        out += mag.get_str();
    } else if (mag == 1) {
        out += body;
    } else {
        out += mag.get_str();
        out += '*';
        out += body;
    }
}

std::string power_text(char var, std::uint64_t exp) {
    std::string out(1, var);
    if (exp != 1) {
        out += '^';
        out += std::to_string(exp);
    }
    return out;
}

}  // namespace

std::string to_canonical_text(const UnivariatePolynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    const auto& coeffs = p.coeffs();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) {
            continue;
        }
        append_term(out, coeffs[i], i == 0 ? std::string{} : power_text('q', i), first);
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// BivariatePolynomial

BivariatePolynomial::BivariatePolynomial(const Integer& c) {
    if (c != 0) {
        terms_.emplace(Monomial{}, c);
    }
}

BivariatePolynomial BivariatePolynomial::monomial(const Integer& c, std::uint32_t s_exp, std::uint32_t t_exp) {
    BivariatePolynomial out;
    if (c != 0) {
        out.terms_.emplace(Monomial{s_exp, t_exp}, c);
    }
    return out;
}

Integer BivariatePolynomial::coeff(std::uint32_t s_exp, std::uint32_t t_exp) const {
    auto it = terms_.find(Monomial{s_exp, t_exp});
    return it == terms_.end() ? Integer(0) : it->second;
}

void BivariatePolynomial::add_term(const Monomial& mono, const Integer& c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

BivariatePolynomial BivariatePolynomial::operator-() const {
    BivariatePolynomial out = *this;
    for (auto& [mono, c] : out.terms_) {
        c = -c;
    }
    return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& rhs) {
    for (const auto& [mono, c] : rhs.terms_) {
        add_term(mono, c);
    }
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& rhs) {
    for (const auto& [mono, c] : rhs.terms_) {
        add_term(mono, -c);
    }
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& lhs, const BivariatePolynomial& rhs) {
    BivariatePolynomial out;
    Integer prod;
    for (const auto& [lm, lc] : lhs.terms_) {
        for (const auto& [rm, rc] : rhs.terms_) {
            prod = lc * rc;
            out.add_term(Monomial{lm.s_exp + rm.s_exp, lm.t_exp + rm.t_exp}, prod);
        }
    }
    return out;
}

BivariatePolynomial add(const BivariatePolynomial& p, const BivariatePolynomial& q) { return p + q; }

BivariatePolynomial mul(const BivariatePolynomial& p, const BivariatePolynomial& q) { return p * q; }

BivariatePolynomial exact_div(const BivariatePolynomial& p, const BivariatePolynomial& d) {
    if (d.is_zero()) {
        throw DomainError("division by the zero polynomial");
    }
    const auto& [d_mono, d_coeff] = d.leading_term();
    BivariatePolynomial quotient;
    BivariatePolynomial remainder = p;
    // Each step strictly lowers the leading monomial of the remainder, and lex
    // order on N^2 is a well-order, so this terminates.
    while (!remainder.is_zero()) {
        const auto& [r_mono, r_coeff] = remainder.leading_term();
        if (r_mono.s_exp < d_mono.s_exp || r_mono.t_exp < d_mono.t_exp ||
            !mpz_divisible_p(r_coeff.get_mpz_t(), d_coeff.get_mpz_t())) {
            throw IndivisibleError("leading term " + to_canonical_text(BivariatePolynomial::monomial(
                                                         r_coeff, r_mono.s_exp, r_mono.t_exp)) +
                                   " not divisible by " +
                                   to_canonical_text(BivariatePolynomial::monomial(d_coeff, d_mono.s_exp,
                                                                                   d_mono.t_exp)));
        }
        const BivariatePolynomial step = BivariatePolynomial::monomial(
            Integer(r_coeff / d_coeff), r_mono.s_exp - d_mono.s_exp, r_mono.t_exp - d_mono.t_exp);
        quotient += step;
        remainder -= step * d;
    }
    return quotient;
}

BivariatePolynomial exact_div(const BivariatePolynomial& p, const Integer& c) {
    if (c == 0) {
        throw DomainError("division by zero");
    }
    BivariatePolynomial out;
    for (const auto& [mono, coeff] : p.terms()) {
        if (!mpz_divisible_p(coeff.get_mpz_t(), c.get_mpz_t())) {
            throw IndivisibleError("coefficient " + coeff.get_str() + " not divisible by " + c.get_str());
        }
        out.add_term(mono, Integer(coeff / c));
    }
    return out;
}

namespace {

Integer int_pow(const Integer& base, std::uint32_t exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

}  // namespace

Integer eval_int(const BivariatePolynomial& p, const Integer& s0, const Integer& t0) {
    Integer acc = 0;
    for (const auto& [mono, c] : p.terms()) {
        acc += c * int_pow(s0, mono.s_exp) * int_pow(t0, mono.t_exp);
    }
    return acc;
}

UnivariatePolynomial subst_univar(const BivariatePolynomial& p, const UnivariatePolynomial& s_sub,
                                  const UnivariatePolynomial& t_sub) {
    std::map<std::uint32_t, UnivariatePolynomial> s_powers;
    std::map<std::uint32_t, UnivariatePolynomial> t_powers;
    auto power_of = [](std::map<std::uint32_t, UnivariatePolynomial>& cache, const UnivariatePolynomial& base,
                       std::uint32_t exp) -> const UnivariatePolynomial& {
        auto it = cache.find(exp);
        if (it == cache.end()) {
            it = cache.emplace(exp, base.pow(exp)).first;
        }
        return it->second;
    };
    UnivariatePolynomial out;
    for (const auto& [mono, c] : p.terms()) {
        out += UnivariatePolynomial::constant(c) * power_of(s_powers, s_sub, mono.s_exp) *
               power_of(t_powers, t_sub, mono.t_exp);
    }
    return out;
}

std::string to_canonical_text(const BivariatePolynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        std::string body;
        if (mono.s_exp != 0) {
            body = power_text('s', mono.s_exp);
        }
        if (mono.t_exp != 0) {
            if (!body.empty()) {
                body += '*';
            }
            body += power_text('t', mono.t_exp);
        }
        append_term(out, c, body, first);
        first = false;
    }
    return out;
}

std::string to_latex(const BivariatePolynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    auto latex_power = [](char var, std::uint32_t exp) {
        std::string s(1, var);
        if (exp != 1) {
            s += "^{" + std::to_string(exp) + "}";
        }
        return s;
    };
    for (const auto& [mono, c] : p.terms()) {
        const bool negative = c < 0;
        if (first) {
            out << (negative ? "-" : "");
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        Integer mag = abs(c);
        std::vector<std::string> factors;
        if (mono.s_exp != 0) {
            factors.push_back(latex_power('s', mono.s_exp));
        }
        if (mono.t_exp != 0) {
            factors.push_back(latex_power('t', mono.t_exp));
        }
        if (factors.empty() || mag != 1) {
            factors.insert(factors.begin(), mag.get_str());
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            out << (i ? " " : "") << factors[i];
        }
    }
    return out.str();
}

namespace {

class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view text) : text_(text) {}

    BivariatePolynomial parse() {
        skip_space();
        if (at_end()) {
            fail("empty input");
        }
        BivariatePolynomial out;
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        parse_term(out, negative);
        while (true) {
            skip_space();
            if (at_end()) {
                break;
            }
            const char op = peek();
            if (op != '+' && op != '-') {
                fail("expected '+' or '-'");
            }
            ++pos_;
            parse_term(out, op == '-');
        }
        return out;
    }

private:
    void parse_term(BivariatePolynomial& out, bool negative) {
        skip_space();
        Integer coeff = 1;
        Monomial mono;
        bool have_factor = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_integer();
            have_factor = true;
            skip_space();
            if (at_end() || peek() != '*') {
                add(out, mono, coeff, negative);
                return;
            }
            ++pos_;
        }
        do {
            skip_space();
            if (at_end()) {
                fail("expected a variable");
            }
            const char var = peek();
            if (var != 's' && var != 't') {
                fail("expected 's' or 't'");
            }
            ++pos_;
            std::uint32_t exp = 1;
            skip_space();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_space();
                Integer e = parse_integer();
                if (!e.fits_uint_p() || e == 0) {
                    fail("bad exponent");
                }
                exp = static_cast<std::uint32_t>(e.get_ui());
            }
            (var == 's' ? mono.s_exp : mono.t_exp) += exp;
            have_factor = true;
            skip_space();
        } while (!at_end() && peek() == '*' && (++pos_, true));
        if (!have_factor) {
            fail("empty term");
        }
        add(out, mono, coeff, negative);
    }

    static void add(BivariatePolynomial& out, const Monomial& mono, const Integer& coeff, bool negative) {
        out.add_term(mono, negative ? Integer(-coeff) : coeff);
    }

    Integer parse_integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an integer");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

BivariatePolynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

bool is_homogeneous(const BivariatePolynomial& p, std::uint64_t weight_degree) {
    for (const auto& [mono, c] : p.terms()) {
        if (std::uint64_t{mono.s_exp} + 2 * std::uint64_t{mono.t_exp} != weight_degree) {
            return false;
        }
    }
    return true;
}

bool has_nonnegative_coefficients(const BivariatePolynomial& p) {
    for (const auto& [mono, c] : p.terms()) {
        if (c < 0) {
            return false;
        }
    }
    return true;
}

}  // namespace lucasnomial
