#pragma once

#include <altset/errors.hpp>
#include <altset/omega_rational.hpp>
#include <altset/rational.hpp>

#include <cctype>
#include <string>
#include <string_view>

namespace altset
{

namespace detail
{

// expr    := term (('+' | '-') term)*
// term    := unary (('*' | '/') unary)*
// unary   := ('-' | '+') unary | power
// power   := primary ('^' digits)?
// primary := number | variable | '(' expr ')'
class expression_parser
{
public:
  expression_parser( std::string_view text, char variable ) : text_( text ), variable_( variable ) {}

  omega_rational parse()
  {
    omega_rational const value = expr();
    skip();
    if ( pos_ != text_.size() )
      fail( "unexpected '" + std::string( 1, text_[pos_] ) + "'" );
    return value;
  }

private:
  [[noreturn]] void fail( std::string const& what ) const
  {
    throw parse_error( what + " at offset " + std::to_string( pos_ ) + " in '" + std::string( text_ ) + "'" );
  }

  void skip()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
      ++pos_;
  }

  bool accept( char c )
  {
    skip();
    if ( pos_ < text_.size() && text_[pos_] == c )
    {
      ++pos_;
      return true;
    }
    return false;
  }

  omega_rational expr()
  {
    omega_rational acc = term();
    while ( true )
    {
      if ( accept( '+' ) )
        acc = acc + term();
      else if ( accept( '-' ) )
        acc = acc - term();
      else
        return acc;
    }
  }

  omega_rational term()
  {
    omega_rational acc = unary();
    while ( true )
    {
      if ( accept( '*' ) )
        acc = acc * unary();
      else if ( accept( '/' ) )
      {
        omega_rational const d = unary();
        if ( d.is_zero() )
          throw division_by_zero( "in expression '" + std::string( text_ ) + "'" );
        acc = acc / d;
      }
      else
        return acc;
    }
  }

  omega_rational unary()
  {
    if ( accept( '-' ) )
      return -unary();
    if ( accept( '+' ) )
      return unary();
    return power();
  }

  omega_rational power()
  {
    omega_rational const base = primary();
    if ( !accept( '^' ) )
      return base;
    skip();
    std::size_t const start = pos_;
    while ( pos_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
      ++pos_;
    if ( start == pos_ || pos_ - start > 4 )
      fail( "expected a small non-negative integer exponent" );
    unsigned const e = static_cast<unsigned>( std::stoul( std::string( text_.substr( start, pos_ - start ) ) ) );
    omega_rational out( 1 );
    for ( unsigned i = 0; i < e; ++i )
      out = out * base;
    return out;
  }

  omega_rational primary()
  {
    skip();
    if ( pos_ >= text_.size() )
      fail( "unexpected end of input" );
    char const c = text_[pos_];
    if ( accept( '(' ) )
    {
      omega_rational const inner = expr();
      if ( !accept( ')' ) )
        fail( "expected ')'" );
      return inner;
    }
    if ( c == variable_ )
    {
      ++pos_;
      return omega_rational::omega();
    }
    if ( std::isdigit( static_cast<unsigned char>( c ) ) || c == '.' )
    {
      std::size_t const start = pos_;
      while ( pos_ < text_.size() && ( std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) || text_[pos_] == '.' ) )
        ++pos_;
      return omega_rational( parse_rational( text_.substr( start, pos_ - start ) ) );
    }
    fail( "unexpected '" + std::string( 1, c ) + "'" );
  }

  std::string_view text_;
  char variable_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses `3*w^2 - w + 1/2`, `(1)/(w)` and the like; `w` denotes ω.
inline omega_rational parse_omega( std::string_view text )
{
  return detail::expression_parser( text, 'w' ).parse();
}

/// Parses a sequence rule in the index variable `n`, e.g. `1/(n+1)`.
inline definable_sequence parse_sequence( std::string_view text )
{
  return definable_sequence( detail::expression_parser( text, 'n' ).parse() );
}

} // namespace altset
