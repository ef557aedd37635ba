#pragma once

#include <altset/errors.hpp>
#include <altset/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace altset
{

/// Univariate polynomial with exact rational coefficients; index = degree.
class polynomial
{
public:
  polynomial() = default;

  polynomial( Rational const& constant )
  {
    if ( constant != 0 )
      coeffs_.push_back( constant );
  }

  polynomial( int constant ) : polynomial( Rational( constant ) ) {}

  /// Coefficients from lowest to highest degree.
  explicit polynomial( std::vector<Rational> coeffs ) : coeffs_( std::move( coeffs ) ) { trim(); }

  polynomial( std::initializer_list<Rational> coeffs ) : coeffs_( coeffs ) { trim(); }

  /// The generator: c·x^k.
  static polynomial monomial( Rational const& c, std::size_t k )
  {
    std::vector<Rational> v( k + 1 );
    v[k] = c;
    return polynomial( std::move( v ) );
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>( coeffs_.size() ) - 1; }

  Rational leading() const { return coeffs_.empty() ? Rational( 0 ) : coeffs_.back(); }

  Rational coefficient( std::size_t k ) const { return k < coeffs_.size() ? coeffs_[k] : Rational( 0 ); }

  std::vector<Rational> const& coefficients() const { return coeffs_; }

  bool is_constant() const { return degree() <= 0; }

  Rational evaluate( Rational const& x ) const
  {
    Rational acc = 0;
    for ( auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it )
      acc = acc * x + *it;
    return acc;
  }

  polynomial derivative() const
  {
    if ( coeffs_.size() <= 1 )
      return {};
    std::vector<Rational> d( coeffs_.size() - 1 );
    for ( std::size_t k = 1; k < coeffs_.size(); ++k )
      d[k - 1] = coeffs_[k] * static_cast<long long>( k );
    return polynomial( std::move( d ) );
  }

  /// p(x + shift), via Horner's scheme on (x + shift).
  polynomial shifted( Rational const& shift ) const
  {
    polynomial const linear{ shift, Rational( 1 ) };
    polynomial acc;
    for ( auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it )
      acc = acc * linear + polynomial( *it );
    return acc;
  }

  polynomial monic() const
  {
    if ( is_zero() )
      return {};
    polynomial out = *this;
    Rational const lc = leading();
    for ( auto& c : out.coeffs_ )
      c /= lc;
    return out;
  }

  polynomial operator-() const
  {
    polynomial out = *this;
    for ( auto& c : out.coeffs_ )
      c = -c;
    return out;
  }

  friend polynomial operator+( polynomial const& a, polynomial const& b )
  {
    std::vector<Rational> out( std::max( a.coeffs_.size(), b.coeffs_.size() ) );
    for ( std::size_t k = 0; k < out.size(); ++k )
      out[k] = a.coefficient( k ) + b.coefficient( k );
    return polynomial( std::move( out ) );
  }

  friend polynomial operator-( polynomial const& a, polynomial const& b ) { return a + ( -b ); }

  friend polynomial operator*( polynomial const& a, polynomial const& b )
  {
    if ( a.is_zero() || b.is_zero() )
      return {};
    std::vector<Rational> out( a.coeffs_.size() + b.coeffs_.size() - 1 );
    for ( std::size_t i = 0; i < a.coeffs_.size(); ++i )
    {
      if ( a.coeffs_[i] == 0 )
        continue;
      for ( std::size_t j = 0; j < b.coeffs_.size(); ++j )
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return polynomial( std::move( out ) );
  }

  friend bool operator==( polynomial const& a, polynomial const& b ) = default;

  /// Euclidean division: {quotient, remainder} with deg(remainder) < deg(divisor).
  friend std::pair<polynomial, polynomial> divmod( polynomial const& a, polynomial const& b )
  {
    if ( b.is_zero() )
      throw division_by_zero( "polynomial division by zero" );
    if ( a.degree() < b.degree() )
      return { polynomial{}, a };
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot( a.coeffs_.size() - b.coeffs_.size() + 1 );
    Rational const lc = b.leading();
    for ( std::size_t k = quot.size(); k-- > 0; )
    {
      Rational const factor = rem[k + b.coeffs_.size() - 1] / lc;
      quot[k] = factor;
      if ( factor == 0 )
        continue;
      for ( std::size_t j = 0; j < b.coeffs_.size(); ++j )
        rem[k + j] -= factor * b.coeffs_[j];
    }
    rem.resize( b.coeffs_.size() - 1 );
    return { polynomial( std::move( quot ) ), polynomial( std::move( rem ) ) };
  }

  /// Monic greatest common divisor (zero only when both inputs are zero).
  friend polynomial gcd( polynomial a, polynomial b )
  {
    while ( !b.is_zero() )
    {
      auto r = divmod( a, b ).second.monic();
      a = std::move( b );
      b = std::move( r );
    }
    return a.monic();
  }

  /// Human syntax in the variable `var`, e.g. `3*w^2 - w + 1/2`.
  std::string to_string( char var = 'w' ) const
  {
    if ( is_zero() )
      return "0";
    std::string out;
    for ( std::size_t k = coeffs_.size(); k-- > 0; )
    {
      Rational const& c = coeffs_[k];
      if ( c == 0 )
        continue;
      bool const negative = c < 0;
      if ( out.empty() )
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      Rational const magnitude = negative ? Rational( -c ) : c;
      if ( k == 0 )
      {
        out += magnitude.str();
        continue;
      }
      if ( magnitude != 1 )
        out += magnitude.str() + "*";
      out += var;
      if ( k > 1 )
        out += "^" + std::to_string( k );
    }
    return out;
  }

private:
  void trim()
  {
    while ( !coeffs_.empty() && coeffs_.back() == 0 )
      coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

namespace detail
{

inline int sign_changes( std::vector<polynomial> const& chain, Rational const& x )
{
  int changes = 0;
  int last = 0;
  for ( auto const& p : chain )
  {
    int const s = p.evaluate( x ).sign();
    if ( s == 0 )
      continue;
    if ( last != 0 && s != last )
      ++changes;
    last = s;
  }
  return changes;
}

} // namespace detail

/// Sturm chain of a square-free polynomial.
inline std::vector<polynomial> sturm_chain( polynomial const& p )
{
  std::vector<polynomial> chain{ p, p.derivative() };
  while ( !chain.back().is_zero() )
  {
    auto r = divmod( chain[chain.size() - 2], chain.back() ).second;
    if ( r.is_zero() )
      break;
    chain.push_back( -r );
  }
  if ( chain.back().is_zero() )
    chain.pop_back();
  return chain;
}

/// Square-free part p / gcd(p, p'), same real roots each with multiplicity one.
inline polynomial square_free_part( polynomial const& p )
{
  if ( p.degree() <= 0 )
    return p;
  return divmod( p, gcd( p, p.derivative() ) ).first;
}

/// Integer bound on the magnitude of every real root (Cauchy).
inline Integer root_bound( polynomial const& p )
{
  Rational m = 0;
  Rational const lc = abs( p.leading() );
  for ( int k = 0; k < p.degree(); ++k )
    m = std::max( m, Rational( abs( p.coefficient( static_cast<std::size_t>( k ) ) ) / lc ) );
  Rational const bound = m + 1;
  Integer q = boost::multiprecision::numerator( bound ) / boost::multiprecision::denominator( bound );
  return q + 1;
}

/// Whether p has a root in {0, 1, 2, ...}. Exact: Sturm isolation over integer intervals.
inline bool has_nonnegative_integer_root( polynomial const& p )
{
  if ( p.is_zero() )
    return true;
  if ( p.degree() == 0 )
    return false;
  if ( p.coefficient( 0 ) == 0 )
    return true;
  polynomial const q = square_free_part( p );
  auto const chain = sturm_chain( q );
  auto roots_in = [&]( Integer const& lo, Integer const& hi ) {
    return detail::sign_changes( chain, Rational( lo ) ) - detail::sign_changes( chain, Rational( hi ) );
  };
  // Roots counted in half-open (lo, hi].
  std::vector<std::pair<Integer, Integer>> pending{ { Integer( 0 ), root_bound( q ) } };
  while ( !pending.empty() )
  {
    auto [lo, hi] = pending.back();
    pending.pop_back();
    if ( roots_in( lo, hi ) == 0 )
      continue;
    if ( hi - lo <= 16 )
    {
      for ( Integer x = lo + 1; x <= hi; ++x )
      {
        if ( q.evaluate( Rational( x ) ) == 0 )
          return true;
      }
      continue;
    }
    Integer const mid = ( lo + hi ) / 2;
    pending.emplace_back( lo, mid );
    pending.emplace_back( mid, hi );
  }
  return false;
}

} // namespace altset
