#pragma once

#include <altset/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

namespace altset
{

/// Exact arbitrary-precision rational. Every number in the kernel is built on this.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline int sign( Rational const& r )
{
  return r.sign();
}

inline Rational abs( Rational const& r )
{
  return r.sign() < 0 ? Rational( -r ) : r;
}

/// `p/q` in lowest terms, or `p` when the denominator is 1.
inline std::string to_string( Rational const& r )
{
  return r.str();
}

namespace detail
{

inline Integer parse_digits( std::string_view digits, std::string_view whole )
{
  if ( digits.empty() )
    throw parse_error( "expected digits in '" + std::string( whole ) + "'" );
  Integer value = 0;
  for ( char c : digits )
  {
    if ( !std::isdigit( static_cast<unsigned char>( c ) ) )
      throw parse_error( "unexpected character '" + std::string( 1, c ) + "' in '" + std::string( whole ) + "'" );
    value = value * 10 + ( c - '0' );
  }
  return value;
}

inline Integer pow10( unsigned e )
{
  Integer p = 1;
  for ( unsigned i = 0; i < e; ++i )
    p *= 10;
  return p;
}

} // namespace detail

/// Parses `p/q`, an integer, or a decimal literal such as `-0.15` or `1e-6`, exactly.
inline Rational parse_rational( std::string_view text )
{
  std::string_view const whole = text;
  while ( !text.empty() && std::isspace( static_cast<unsigned char>( text.front() ) ) )
    text.remove_prefix( 1 );
  while ( !text.empty() && std::isspace( static_cast<unsigned char>( text.back() ) ) )
    text.remove_suffix( 1 );
  if ( text.empty() )
    throw parse_error( "empty number" );

  bool negative = false;
  if ( text.front() == '-' || text.front() == '+' )
  {
    negative = text.front() == '-';
    text.remove_prefix( 1 );
  }

  Rational value;
  if ( auto slash = text.find( '/' ); slash != std::string_view::npos )
  {
    Integer const p = detail::parse_digits( text.substr( 0, slash ), whole );
    Integer const q = detail::parse_digits( text.substr( slash + 1 ), whole );
    if ( q == 0 )
      throw division_by_zero( "zero denominator in '" + std::string( whole ) + "'" );
    value = Rational( p, q );
  }
  else
  {
    long exponent = 0;
    if ( auto e = text.find_first_of( "eE" ); e != std::string_view::npos )
    {
      std::string_view exp_text = text.substr( e + 1 );
      bool exp_negative = false;
      if ( !exp_text.empty() && ( exp_text.front() == '-' || exp_text.front() == '+' ) )
      {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix( 1 );
      }
      if ( exp_text.size() > 6 )
        throw parse_error( "exponent too large in '" + std::string( whole ) + "'" );
      exponent = static_cast<long>( detail::parse_digits( exp_text, whole ) );
      if ( exp_negative )
        exponent = -exponent;
      text = text.substr( 0, e );
    }
    std::string_view int_part = text;
    std::string_view frac_part;
    if ( auto dot = text.find( '.' ); dot != std::string_view::npos )
    {
      int_part = text.substr( 0, dot );
      frac_part = text.substr( dot + 1 );
      if ( int_part.empty() && frac_part.empty() )
        throw parse_error( "malformed number '" + std::string( whole ) + "'" );
    }
    Integer mantissa = int_part.empty() ? Integer( 0 ) : detail::parse_digits( int_part, whole );
    if ( !frac_part.empty() )
      mantissa = mantissa * detail::pow10( static_cast<unsigned>( frac_part.size() ) ) + detail::parse_digits( frac_part, whole );
    exponent -= static_cast<long>( frac_part.size() );
    if ( exponent >= 0 )
      value = Rational( mantissa * detail::pow10( static_cast<unsigned>( exponent ) ) );
    else
      value = Rational( mantissa, detail::pow10( static_cast<unsigned>( -exponent ) ) );
  }
  return negative ? Rational( -value ) : value;
}

} // namespace altset
