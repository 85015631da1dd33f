#include "hopfwb/field.hpp"

#include <cctype>

namespace hopfwb {

namespace {

bool is_prime_number(unsigned long p)
{
    if (p < 2)
        return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace

Field Field::prime(unsigned long p)
{
    if (!is_prime_number(p))
        throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    return Field(Kind::Prime, p);
}

void Field::reduce(Scalar& a) const
{
    if (kind_ == Kind::Rationals)
        return;
    mpz_class m(p_);
    mpz_class num = a.get_num() % m;
    if (num < 0)
        num += m;
    mpz_class den = a.get_den() % m;
    if (den == 0)
        throw FieldError("denominator " + a.get_den().get_str() + " is not invertible mod " + std::to_string(p_));
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    num = (num * den_inv) % m;
    a = Scalar(num);
}

Scalar Field::from_rational(const Scalar& q) const
{
    Scalar r = q;
    reduce(r);
    return r;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const
{
    Scalar r = a + b;
    if (kind_ == Kind::Prime && r >= p_)
        r -= p_;
    return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const
{
    Scalar r = a - b;
    if (kind_ == Kind::Prime && r < 0)
        r += p_;
    return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const
{
    Scalar r = a * b;
    if (kind_ == Kind::Prime) {
        mpz_class n = r.get_num() % p_;
        r = Scalar(n);
    }
    return r;
}

void Field::add_mul_to(Scalar& acc, const Scalar& a, const Scalar& b) const
{
    if (kind_ == Kind::Rationals) {
        acc += a * b;
        return;
    }
    acc = add(acc, mul(a, b));
}

Scalar Field::neg(const Scalar& a) const
{
    if (kind_ == Kind::Prime)
        return a == 0 ? a : Scalar(p_) - a;
    return -a;
}

Scalar Field::inv(const Scalar& a) const
{
    if (a == 0)
        throw FieldError("division by zero");
    if (kind_ == Kind::Rationals)
        return 1 / a;
    mpz_class m(p_), r;
    mpz_class n = a.get_num();
    mpz_invert(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return Scalar(r);
}

Scalar Field::parse(std::string_view text) const
{
    std::string s(text);
    auto bad = [&] { return FieldError("malformed scalar \"" + s + "\""); };
    if (s.empty())
        throw bad();
    auto slash = s.find('/');
    auto check_int = [&](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size())
            throw bad();
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw bad();
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    check_int(num);
    check_int(den);
    if (num[0] == '+')
        num.erase(0, 1);
    if (den[0] == '+')
        den.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0)
        throw FieldError("zero denominator in \"" + s + "\"");
    if (kind_ == Kind::Prime && d % p_ == 0)
        throw FieldError("\"" + s + "\" has no value over F_" + std::to_string(p_) + " (denominator not invertible)");
    Scalar q(n, d);
    q.canonicalize();
    reduce(q);
    return q;
}

std::string Field::to_string(const Scalar& a) const
{
    return a.get_str();
}

std::string Field::name() const
{
    return kind_ == Kind::Rationals ? "Q" : "F_" + std::to_string(p_);
}

} // namespace hopfwb
