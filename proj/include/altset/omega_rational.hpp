#pragma once

#include <altset/errors.hpp>
#include <altset/polynomial.hpp>
#include <altset/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

namespace altset
{

/*!
  \brief Element of the ordered field of rational functions in one infinite element ω.

  Ordering is eventual dominance: x < y iff y - x is positive for all
  sufficiently large real ω. Standard rationals are the constants; 1/ω is a
  positive infinitesimal and ω an infinite natural number.

  Canonical form: numerator and denominator coprime, denominator monic.
*/
class omega_rational
{
public:
  omega_rational() : den_( 1 ) {}

  omega_rational( Rational const& r ) : num_( r ), den_( 1 ) {}

  omega_rational( int r ) : omega_rational( Rational( r ) ) {}

  omega_rational( polynomial const& p ) : num_( p ), den_( 1 ) {}

  /// Throws division_by_zero when den is the zero polynomial.
  omega_rational( polynomial num, polynomial den ) : num_( std::move( num ) ), den_( std::move( den ) )
  {
    if ( den_.is_zero() )
      throw division_by_zero( "zero denominator polynomial" );
    canonicalize();
  }

  /// The infinite element ω itself.
  static omega_rational omega() { return omega_rational( polynomial::monomial( 1, 1 ) ); }

  polynomial const& numerator() const { return num_; }
  polynomial const& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  /// Degree-0 over degree-0: an ordinary rational number.
  bool is_standard() const { return num_.is_constant() && den_.is_constant(); }

  /// The standard value; only meaningful when is_standard().
  Rational standard_value() const { return num_.coefficient( 0 ) / den_.coefficient( 0 ); }

  /// Sign under the eventual-dominance order.
  int sign() const { return num_.leading().sign(); }

  Rational evaluate_at( Rational const& w ) const
  {
    Rational const d = den_.evaluate( w );
    if ( d == 0 )
      throw division_by_zero( "denominator vanishes at substitution point" );
    return num_.evaluate( w ) / d;
  }

  omega_rational operator-() const
  {
    omega_rational out = *this;
    out.num_ = -out.num_;
    return out;
  }

  friend omega_rational operator+( omega_rational const& a, omega_rational const& b )
  {
    if ( a.den_ == b.den_ )
      return omega_rational( a.num_ + b.num_, a.den_ );
    return omega_rational( a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_ );
  }

  friend omega_rational operator-( omega_rational const& a, omega_rational const& b ) { return a + ( -b ); }

  friend omega_rational operator*( omega_rational const& a, omega_rational const& b )
  {
    return omega_rational( a.num_ * b.num_, a.den_ * b.den_ );
  }

  friend omega_rational operator/( omega_rational const& a, omega_rational const& b )
  {
    if ( b.is_zero() )
      throw division_by_zero();
    return omega_rational( a.num_ * b.den_, a.den_ * b.num_ );
  }

  omega_rational& operator+=( omega_rational const& o ) { return *this = *this + o; }
  omega_rational& operator-=( omega_rational const& o ) { return *this = *this - o; }
  omega_rational& operator*=( omega_rational const& o ) { return *this = *this * o; }
  omega_rational& operator/=( omega_rational const& o ) { return *this = *this / o; }

  friend bool operator==( omega_rational const& a, omega_rational const& b ) = default;

  friend std::strong_ordering operator<=>( omega_rational const& a, omega_rational const& b )
  {
    int const s = ( a - b ).sign();
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// `(<numerator>)/(<denominator>)`, re-parseable by parse_omega.
  std::string to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

private:
  void canonicalize()
  {
    if ( num_.is_zero() )
    {
      den_ = polynomial( 1 );
      return;
    }
    polynomial const g = gcd( num_, den_ );
    if ( g.degree() > 0 )
    {
      num_ = divmod( num_, g ).first;
      den_ = divmod( den_, g ).first;
    }
    Rational const lc = den_.leading();
    if ( lc != 1 )
    {
      polynomial const scale( Rational( 1 ) / lc );
      num_ = num_ * scale;
      den_ = den_ * scale;
    }
  }

  polynomial num_;
  polynomial den_;
};

inline omega_rational abs( omega_rational const& x )
{
  return x.sign() < 0 ? -x : x;
}

inline omega_rational inverse( omega_rational const& x )
{
  return omega_rational( 1 ) / x;
}

enum class field_op
{
  add,
  sub,
  mul,
  div,
  neg,
  inv
};

/// Dispatching form of the field operations; `y` is ignored for neg and inv.
inline omega_rational field_arith( field_op op, omega_rational const& x, omega_rational const& y = {} )
{
  switch ( op )
  {
  case field_op::add:
    return x + y;
  case field_op::sub:
    return x - y;
  case field_op::mul:
    return x * y;
  case field_op::div:
    return x / y;
  case field_op::neg:
    return -x;
  case field_op::inv:
    return inverse( x );
  }
  throw std::logic_error( "unknown field operation" );
}

inline std::strong_ordering compare( omega_rational const& x, omega_rational const& y )
{
  return x <=> y;
}

struct classification
{
  bool is_infinitesimal = false;
  bool is_bounded = true;
  bool is_infinite = false;

  friend bool operator==( classification const&, classification const& ) = default;
};

/*!
  Degree test. With n ranging over the standard naturals:
  |x| < 1/n for all n  iff  deg(num) < deg(den) or x = 0;
  |x| > n for all n    iff  deg(num) > deg(den).
*/
inline classification classify( omega_rational const& x )
{
  int const dn = x.numerator().degree();
  int const dd = x.denominator().degree();
  classification c;
  c.is_infinitesimal = x.is_zero() || dn < dd;
  c.is_infinite = dn > dd;
  c.is_bounded = !c.is_infinite;
  return c;
}

inline std::string to_string( classification const& c )
{
  if ( c.is_infinite )
    return "infinite";
  return c.is_infinitesimal ? "infinitesimal bounded" : "bounded";
}

inline bool is_infinitesimal( omega_rational const& x )
{
  return classify( x ).is_infinitesimal;
}

inline bool is_infinitesimal( Rational const& x )
{
  return x == 0;
}

/// x ≐ y: the difference is infinitely small.
inline bool infinitely_near( omega_rational const& x, omega_rational const& y )
{
  return is_infinitesimal( x - y );
}

/// The unique standard rational infinitely near x; represents the monad of x.
inline Rational standard_part( omega_rational const& x )
{
  auto const c = classify( x );
  if ( c.is_infinite )
    throw infinite_argument( "standard part of infinite element " + x.to_string() );
  if ( c.is_infinitesimal )
    return 0;
  return x.numerator().leading() / x.denominator().leading();
}

/// A standard natural number: degree 0, non-negative integer.
inline bool is_finite_natural( omega_rational const& x )
{
  if ( !x.is_standard() )
    return false;
  Rational const v = x.standard_value();
  return v >= 0 && boost::multiprecision::denominator( v ) == 1;
}

/// Natural number, possibly infinite: an integer-coefficient polynomial in ω that is ≥ 0.
inline bool is_natural( omega_rational const& x )
{
  if ( x.denominator().degree() != 0 || x.sign() < 0 )
    return false;
  for ( auto const& c : x.numerator().coefficients() )
  {
    if ( boost::multiprecision::denominator( c ) != 1 )
      return false;
  }
  return true;
}

/*!
  \brief A countable sequence n ↦ rule(n) given by a rational function of the index.

  The denominator may not vanish at any n ∈ {0, 1, 2, ...}; construction fails otherwise.
*/
class definable_sequence
{
public:
  explicit definable_sequence( omega_rational rule ) : rule_( std::move( rule ) )
  {
    if ( has_nonnegative_integer_root( rule_.denominator() ) )
      throw domain_error( "sequence rule " + rule_.to_string() + " is undefined at some index n >= 0" );
  }

  omega_rational const& rule() const { return rule_; }

  Rational at( std::uint64_t n ) const { return rule_.evaluate_at( Rational( n ) ); }

  /// The sequence m ↦ rule(m + k).
  definable_sequence shifted( std::uint64_t k ) const
  {
    Rational const s( k );
    return definable_sequence( omega_rational( rule_.numerator().shifted( s ), rule_.denominator().shifted( s ) ) );
  }

  /// Guards a rule whose denominator vanishes at some n >= 0 by the least index shift that avoids it.
  static definable_sequence with_guard_shift( omega_rational const& rule )
  {
    polynomial const& den = rule.denominator();
    Integer const bound = den.degree() > 0 ? root_bound( den ) : Integer( 0 );
    for ( Integer k = 0;; ++k )
    {
      polynomial const shifted_den = den.shifted( Rational( k ) );
      if ( k > bound || !has_nonnegative_integer_root( shifted_den ) )
        return definable_sequence( omega_rational( rule.numerator().shifted( Rational( k ) ), shifted_den ) );
    }
  }

private:
  omega_rational rule_;
};

/// Value of the sequence at the infinite index ω.
inline omega_rational prolong( definable_sequence const& seq )
{
  return seq.rule();
}

} // namespace altset
