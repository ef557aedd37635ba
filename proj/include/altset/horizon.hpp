#pragma once

#include <altset/errors.hpp>
#include <altset/rational.hpp>

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <utility>
#include <variant>

namespace altset
{

/// Witness budget `hard` with a vague band starting at `soft`; 0 < soft < hard.
class horizon
{
public:
  horizon( std::uint64_t soft, std::uint64_t hard ) : soft_( soft ), hard_( hard )
  {
    if ( soft == 0 || soft >= hard )
      throw domain_error( "horizon requires 0 < soft < hard (soft=" + std::to_string( soft ) +
                          ", hard=" + std::to_string( hard ) + ")" );
  }

  std::uint64_t soft_bound() const { return soft_; }
  std::uint64_t hard_bound() const { return hard_; }

  /// Same band start, hard bound multiplied by `factor`.
  horizon widened( std::uint64_t factor ) const { return horizon( soft_, hard_ * factor ); }

  friend bool operator==( horizon const&, horizon const& ) = default;

private:
  std::uint64_t soft_;
  std::uint64_t hard_;
};

inline constexpr std::uint64_t default_soft_bound = 1000;
inline constexpr std::uint64_t default_hard_bound = 10000;

enum class verdict
{
  out,
  beyond_horizon,
  in
};

inline std::string to_string( verdict v )
{
  switch ( v )
  {
  case verdict::in:
    return "In";
  case verdict::out:
    return "Out";
  case verdict::beyond_horizon:
    return "BeyondHorizon";
  }
  return "?";
}

enum class family_kind
{
  sigma,
  pi
};

inline std::string to_string( family_kind k )
{
  return k == family_kind::sigma ? "Sigma" : "Pi";
}

/*!
  \brief Indexed family of decidable classes A_n, read as a countable union (σ) or intersection (π).

  The generator must be pure and total for every index below the horizon.
*/
template<typename Element>
struct class_family
{
  family_kind kind = family_kind::sigma;
  std::function<bool( std::uint64_t, Element const& )> generator;
  std::string domain = "element";
};

/// Verdict together with the index that decided it, if any.
struct membership
{
  verdict value = verdict::beyond_horizon;
  std::optional<std::uint64_t> witness_index;
};

template<typename Element>
membership evaluate_sigma( class_family<Element> const& family, Element const& x, horizon const& h )
{
  if ( family.kind != family_kind::sigma )
    throw std::invalid_argument( "sigma membership requested for a Pi family" );
  for ( std::uint64_t n = 0; n < h.hard_bound(); ++n )
  {
    if ( family.generator( n, x ) )
      return { verdict::in, n };
  }
  return {};
}

template<typename Element>
membership evaluate_pi( class_family<Element> const& family, Element const& x, horizon const& h )
{
  if ( family.kind != family_kind::pi )
    throw std::invalid_argument( "pi membership requested for a Sigma family" );
  for ( std::uint64_t n = 0; n < h.hard_bound(); ++n )
  {
    if ( !family.generator( n, x ) )
      return { verdict::out, n };
  }
  return {};
}

/// In on a witness below the horizon, otherwise BeyondHorizon. Never Out.
template<typename Element>
verdict sigma_member( class_family<Element> const& family, Element const& x, horizon const& h )
{
  return evaluate_sigma( family, x, h ).value;
}

/// Out on a counterexample below the horizon, otherwise BeyondHorizon. Never In.
template<typename Element>
verdict pi_member( class_family<Element> const& family, Element const& x, horizon const& h )
{
  return evaluate_pi( family, x, h ).value;
}

template<typename Element>
membership evaluate( class_family<Element> const& family, Element const& x, horizon const& h )
{
  return family.kind == family_kind::sigma ? evaluate_sigma( family, x, h ) : evaluate_pi( family, x, h );
}

template<typename Element>
class_family<Element> complement_family( class_family<Element> family )
{
  family.kind = family.kind == family_kind::sigma ? family_kind::pi : family_kind::sigma;
  family.generator = [g = std::move( family.generator )]( std::uint64_t n, Element const& x ) { return !g( n, x ); };
  family.domain = "complement of " + family.domain;
  return family;
}

/// Soritical "n is small": In below the band, Out at or past the hard bound.
inline verdict feasible( std::uint64_t n, horizon const& h )
{
  if ( n < h.soft_bound() )
    return verdict::in;
  if ( n >= h.hard_bound() )
    return verdict::out;
  return verdict::beyond_horizon;
}

template<typename Element>
struct semiset_report
{
  bool is_semiset = false;
  std::optional<Element> witness;
};

/// A class is a witnessed semiset of `bounding` when membership is undecided for some element of it.
template<typename Element, typename Evaluator>
  requires std::is_invocable_r_v<verdict, Evaluator, Element const&>
semiset_report<Element> is_witnessed_semiset( Evaluator&& membership_of, std::span<Element const> bounding )
{
  if ( bounding.empty() )
    throw empty_input( "semiset check needs a non-empty bounding set" );
  for ( auto const& x : bounding )
  {
    if ( membership_of( x ) == verdict::beyond_horizon )
      return { true, x };
  }
  return {};
}

template<typename Element>
semiset_report<Element> is_witnessed_semiset( class_family<Element> const& family, std::span<Element const> bounding,
                                              horizon const& h )
{
  return is_witnessed_semiset<Element>( [&]( Element const& x ) { return evaluate( family, x, h ).value; },
                                        bounding );
}

/// {x : x < n}
inline class_family<Rational> below_index_family()
{
  return { family_kind::sigma, []( std::uint64_t n, Rational const& x ) { return x < Rational( n ); }, "x < n" };
}

/// B_n = {q : |q| < 1/n}, B_0 = everything. The π-class of infinitesimals.
inline class_family<Rational> infinitesimal_band_family()
{
  return { family_kind::pi,
           []( std::uint64_t n, Rational const& q ) { return n == 0 || abs( q ) * Rational( n ) < 1; },
           "|q| < 1/n" };
}

/// A_n = {x : x > c + 1/n}, A_0 = nothing. "Discernibly above c"; vague just above c.
inline class_family<Rational> threshold_family( Rational const& c )
{
  return { family_kind::sigma,
           [c]( std::uint64_t n, Rational const& x ) { return n > 0 && ( x - c ) * Rational( n ) > 1; },
           "x > " + c.str() + " + 1/n" };
}

/// The feasibility cut of the horizon, addressable by name alongside families.
struct feasibility_cut
{
};

using named_class = std::variant<class_family<Rational>, feasibility_cut>;

/// Registry lookup: `feasible`, `infinitesimal-band`, `below-index`, `threshold:<c>`.
inline named_class resolve_family( std::string const& name )
{
  if ( name == "feasible" )
    return feasibility_cut{};
  if ( name == "infinitesimal-band" )
    return infinitesimal_band_family();
  if ( name == "below-index" )
    return below_index_family();
  if ( name.starts_with( "threshold:" ) )
    return threshold_family( parse_rational( name.substr( 10 ) ) );
  throw domain_error( "unknown family '" + name + "'" );
}

/// Plain `key=value` lines; blank lines and `#` comments skipped; whitespace around tokens trimmed.
inline std::map<std::string, std::string> read_key_values( std::istream& in )
{
  auto trim = []( std::string s ) {
    auto const b = s.find_first_not_of( " \t\r" );
    if ( b == std::string::npos )
      return std::string();
    auto const e = s.find_last_not_of( " \t\r" );
    return s.substr( b, e - b + 1 );
  };
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t lineno = 0;
  while ( std::getline( in, line ) )
  {
    ++lineno;
    line = trim( line );
    if ( line.empty() || line.front() == '#' )
      continue;
    auto const eq = line.find( '=' );
    if ( eq == std::string::npos )
      throw parse_error( "line " + std::to_string( lineno ) + ": expected key=value" );
    out[trim( line.substr( 0, eq ) )] = trim( line.substr( eq + 1 ) );
  }
  return out;
}

inline std::uint64_t parse_count( std::string const& text, std::string const& key )
{
  if ( text.empty() || text.find_first_not_of( "0123456789" ) != std::string::npos || text.size() > 18 )
    throw parse_error( key + ": expected a non-negative integer, got '" + text + "'" );
  return std::stoull( text );
}

/// Horizon from `horizon.soft` / `horizon.hard` keys, falling back to the given defaults.
inline horizon horizon_from_config( std::map<std::string, std::string> const& config,
                                    std::uint64_t soft = default_soft_bound, std::uint64_t hard = default_hard_bound )
{
  if ( auto it = config.find( "horizon.soft" ); it != config.end() )
    soft = parse_count( it->second, it->first );
  if ( auto it = config.find( "horizon.hard" ); it != config.end() )
    hard = parse_count( it->second, it->first );
  return horizon( soft, hard );
}

} // namespace altset
