#include "burnside/scalar.hpp"

#include <cctype>

#include "burnside/limits.hpp"

namespace burnside {

Limits& limits() {
  static Limits l;
  return l;
}

CoeffRing CoeffRing::residues(const mpz_class& n) {
  if (n < 2) throw Error("Z/n requires n >= 2");
  return {RingKind::Residues, n};
}

std::string CoeffRing::to_string() const {
  switch (kind) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Residues:
      return "Z/" + modulus.get_str();
    case RingKind::Gaussian:
      return "Zi";
    case RingKind::Rationals:
      return "Q";
  }
  return "?";
}

CoeffRing CoeffRing::parse(const std::string& s) {
  if (s == "Z") return integers();
  if (s == "Zi") return gaussian();
  if (s == "Q") return rationals();
  if (s.rfind("Z/", 0) == 0) {
    mpz_class n;
    if (n.set_str(s.substr(2), 10) != 0) throw ParseError("bad modulus in coeff ring: " + s);
    return residues(n);
  }
  throw ParseError("unknown coefficient ring: " + s + " (expected Z, Z/<n>, Zi, Q)");
}

Scalar::Scalar(CoeffRing ring) : ring_(std::move(ring)) {}

Scalar::Scalar(CoeffRing ring, const mpz_class& value) : ring_(std::move(ring)) {
  if (ring_.kind == RingKind::Rationals) {
    rat_ = mpq_class(value);
  } else {
    re_ = value;
  }
  canonicalize();
}

Scalar Scalar::gaussian(const mpz_class& re, const mpz_class& im) {
  Scalar s(CoeffRing::gaussian());
  s.re_ = re;
  s.im_ = im;
  return s;
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s(CoeffRing::rationals());
  // componentwise copy: q may carry a negative denominator, and mpq-level
  // operations require canonical operands
  mpz_set(mpq_numref(s.rat_.get_mpq_t()), mpq_numref(q.get_mpq_t()));
  mpz_set(mpq_denref(s.rat_.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  s.rat_.canonicalize();
  return s;
}

void Scalar::canonicalize() {
  if (ring_.kind == RingKind::Residues) {
    mpz_mod(re_.get_mpz_t(), re_.get_mpz_t(), ring_.modulus.get_mpz_t());
  } else if (ring_.kind == RingKind::Rationals) {
    rat_.canonicalize();
  }
}

bool Scalar::is_zero() const {
  if (ring_.kind == RingKind::Rationals) return rat_ == 0;
  return re_ == 0 && im_ == 0;
}

bool Scalar::is_one() const {
  if (ring_.kind == RingKind::Rationals) return rat_ == 1;
  return re_ == 1 && im_ == 0;
}

static void require_same(const CoeffRing& a, const CoeffRing& b) {
  if (a != b) throw RingMismatch("scalar rings differ: " + a.to_string() + " vs " + b.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(ring_, o.ring_);
  Scalar r(ring_);
  if (ring_.kind == RingKind::Rationals) {
    r.rat_ = rat_ + o.rat_;
  } else {
    r.re_ = re_ + o.re_;
    r.im_ = im_ + o.im_;
  }
  r.canonicalize();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar r(ring_);
  if (ring_.kind == RingKind::Rationals) {
    r.rat_ = -rat_;
  } else {
    r.re_ = -re_;
    r.im_ = -im_;
  }
  r.canonicalize();
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(ring_, o.ring_);
  Scalar r(ring_);
  switch (ring_.kind) {
    case RingKind::Rationals:
      r.rat_ = rat_ * o.rat_;
      break;
    case RingKind::Gaussian:
      r.re_ = re_ * o.re_ - im_ * o.im_;
      r.im_ = re_ * o.im_ + im_ * o.re_;
      break;
    default:
      r.re_ = re_ * o.re_;
  }
  r.canonicalize();
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (ring_ != o.ring_) return false;
  if (ring_.kind == RingKind::Rationals) return rat_ == o.rat_;
  return re_ == o.re_ && im_ == o.im_;
}

Scalar Scalar::divide_exact(const Scalar& d) const {
  require_same(ring_, d.ring_);
  if (d.is_zero()) throw NotIntegral("division by zero");
  Scalar r(ring_);
  switch (ring_.kind) {
    case RingKind::Rationals:
      r.rat_ = rat_ / d.rat_;
      break;
    case RingKind::Integers: {
      mpz_class q, rem;
      mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), re_.get_mpz_t(), d.re_.get_mpz_t());
      if (rem != 0) throw NotIntegral(re_.get_str() + " not divisible by " + d.re_.get_str());
      r.re_ = q;
      break;
    }
    case RingKind::Gaussian: {
      // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2), exact iff both parts divide.
      mpz_class nrm = d.re_ * d.re_ + d.im_ * d.im_;
      mpz_class nre = re_ * d.re_ + im_ * d.im_;
      mpz_class nim = im_ * d.re_ - re_ * d.im_;
      mpz_class q1, r1, q2, r2;
      mpz_tdiv_qr(q1.get_mpz_t(), r1.get_mpz_t(), nre.get_mpz_t(), nrm.get_mpz_t());
      mpz_tdiv_qr(q2.get_mpz_t(), r2.get_mpz_t(), nim.get_mpz_t(), nrm.get_mpz_t());
      if (r1 != 0 || r2 != 0)
        throw NotIntegral("Gaussian quotient " + to_string() + " / " + d.to_string() +
                          " is not integral");
      r.re_ = q1;
      r.im_ = q2;
      break;
    }
    case RingKind::Residues: {
      mpz_class g, inv;
      if (mpz_invert(inv.get_mpz_t(), d.re_.get_mpz_t(), ring_.modulus.get_mpz_t()) == 0)
        throw NotIntegral(d.re_.get_str() + " not invertible mod " + ring_.modulus.get_str());
      r.re_ = re_ * inv;
      break;
    }
  }
  r.canonicalize();
  return r;
}

mpz_class Scalar::integer_value() const {
  switch (ring_.kind) {
    case RingKind::Integers:
    case RingKind::Residues:
      return re_;
    case RingKind::Gaussian:
      if (im_ != 0) throw NotIntegral("Gaussian scalar " + to_string() + " has no integer value");
      return re_;
    case RingKind::Rationals:
      if (rat_.get_den() != 1)
        throw NotIntegral("rational scalar " + to_string() + " has no integer value");
      return rat_.get_num();
  }
  return 0;
}

std::string Scalar::to_string() const {
  switch (ring_.kind) {
    case RingKind::Rationals:
      return rat_.get_str();
    case RingKind::Gaussian: {
      if (im_ == 0) return re_.get_str();
      std::string im_part = (im_ == 1) ? "i" : (im_ == -1 ? "-i" : im_.get_str() + "i");
      if (re_ == 0) return im_part;
      return re_.get_str() + (im_ > 0 ? "+" : "") + im_part;
    }
    default:
      return re_.get_str();
  }
}

// Accepts "3", "-2", "1/2", "2+1i", "-i", "3i", "2-3i".
Scalar Scalar::parse(CoeffRing ring, const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty scalar");

  auto parse_int = [](std::string t) {
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    mpz_class v;
    if (t.empty() || v.set_str(t, 10) != 0) throw ParseError("bad integer literal: '" + t + "'");
    return v;
  };

  if (ring.kind == RingKind::Rationals) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Scalar(ring, parse_int(s));
    mpz_class num = parse_int(s.substr(0, slash));
    mpz_class den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator");
    return Scalar::rational(mpq_class(num, den));
  }

  if (ring.kind == RingKind::Gaussian && s.find('i') != std::string::npos) {
    // split a+bi / bi at the sign that starts the imaginary part
    size_t ipos = s.find('i');
    if (ipos != s.size() - 1) throw ParseError("bad Gaussian literal: " + raw);
    std::string body = s.substr(0, ipos);
    // find split point: last '+'/'-' not at position 0
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
      if (body[k] == '+' || body[k] == '-') {
        split = k;
        break;
      }
    }
    std::string re_part, im_part;
    if (split == std::string::npos) {
      re_part = "0";
      im_part = body;
    } else {
      re_part = body.substr(0, split);
      im_part = body.substr(split);
    }
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    return Scalar::gaussian(parse_int(re_part), parse_int(im_part));
  }

  return Scalar(ring, parse_int(s));
}

Scalar extend_scalar(const Scalar& s, const CoeffRing& target) {
  if (s.ring() == target) return s;
  switch (s.ring().kind) {
    case RingKind::Integers:
      switch (target.kind) {
        case RingKind::Residues:
          return Scalar(target, s.re());
        case RingKind::Gaussian:
          return Scalar::gaussian(s.re(), 0);
        case RingKind::Rationals:
          return Scalar::rational(mpq_class(s.re()));
        default:
          break;
      }
      break;
    case RingKind::Residues:
      if (target.kind == RingKind::Residues && s.ring().modulus % target.modulus == 0)
        return Scalar(target, s.re());
      break;
    default:
      break;
  }
  throw RingMismatch("no coefficient map " + s.ring().to_string() + " -> " + target.to_string());
}

}  // namespace burnside
