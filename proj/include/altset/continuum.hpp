#pragma once

#include <altset/errors.hpp>
#include <altset/omega_rational.hpp>
#include <altset/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace altset
{

/// Coordinates in S ⊆ F^n over an exact ordered field F (Rational or omega_rational).
template<typename Scalar>
struct basic_point
{
  std::vector<Scalar> coords;

  basic_point() = default;
  basic_point( std::initializer_list<Scalar> c ) : coords( c ) {}
  explicit basic_point( std::vector<Scalar> c ) : coords( std::move( c ) ) {}

  std::size_t dimension() const { return coords.size(); }

  friend bool operator==( basic_point const&, basic_point const& ) = default;
};

using point = basic_point<Rational>;

/// Read-only view over points; Scalar is deduced from the other arguments.
template<typename Scalar>
using point_view = std::span<basic_point<std::type_identity_t<Scalar>> const>;

inline std::string to_string( point const& p )
{
  std::string out;
  for ( std::size_t i = 0; i < p.coords.size(); ++i )
  {
    if ( i > 0 )
      out += ',';
    out += p.coords[i].str();
  }
  return out;
}

namespace detail
{

template<typename Scalar>
void require_same_dimension( basic_point<Scalar> const& x, basic_point<Scalar> const& y )
{
  if ( x.dimension() != y.dimension() )
    throw dimension_mismatch( "points of dimension " + std::to_string( x.dimension() ) + " and " +
                              std::to_string( y.dimension() ) );
}

template<typename Scalar>
void require_same_dimension( std::span<basic_point<Scalar> const> xs, std::size_t dim )
{
  for ( auto const& p : xs )
  {
    if ( p.dimension() != dim )
      throw dimension_mismatch( "expected dimension " + std::to_string( dim ) + ", got " +
                                std::to_string( p.dimension() ) );
  }
}

/// Max-coordinate (Chebyshev) distance.
template<typename Scalar>
Scalar chebyshev( basic_point<Scalar> const& x, basic_point<Scalar> const& y )
{
  Scalar best( 0 );
  for ( std::size_t i = 0; i < x.coords.size(); ++i )
  {
    Scalar const d = abs( Scalar( x.coords[i] - y.coords[i] ) );
    if ( best < d )
      best = d;
  }
  return best;
}

template<typename Scalar>
Scalar chebyshev_norm( basic_point<Scalar> const& x )
{
  Scalar best( 0 );
  for ( auto const& c : x.coords )
  {
    Scalar const a = abs( c );
    if ( best < a )
      best = a;
  }
  return best;
}

} // namespace detail

/// x ≈ y iff x/d ≐ y/d in every coordinate.
template<typename Scalar>
struct ideal_uniform
{
  Scalar scale;
};

/// x ≈ y iff max|x_i - y_i| < theta.
template<typename Scalar>
struct witnessed_uniform
{
  Scalar theta;
};

/// x ≈ y iff max|x_i - y_i| < epsilon * max(|x|, |y|, 1).
template<typename Scalar>
struct witnessed_relative
{
  Scalar epsilon;
};

/*!
  \brief A concrete indiscernibility relation over points.

  Reflexive and symmetric by construction. The witnessed modes fix the
  countable family R_n at the horizon index; the ideal mode is infinite
  nearness after scaling and is therefore transitive.
*/
template<typename Scalar>
class basic_indiscernibility
{
public:
  using mode_type = std::variant<ideal_uniform<Scalar>, witnessed_uniform<Scalar>, witnessed_relative<Scalar>>;

  static basic_indiscernibility ideal( Scalar scale ) { return basic_indiscernibility( ideal_uniform<Scalar>{ std::move( scale ) } ); }
  static basic_indiscernibility uniform( Scalar theta ) { return basic_indiscernibility( witnessed_uniform<Scalar>{ std::move( theta ) } ); }
  static basic_indiscernibility relative( Scalar epsilon ) { return basic_indiscernibility( witnessed_relative<Scalar>{ std::move( epsilon ) } ); }

  explicit basic_indiscernibility( mode_type mode ) : mode_( std::move( mode ) )
  {
    if ( !( Scalar( 0 ) < parameter() ) )
      throw domain_error( "indiscernibility parameter must be positive" );
  }

  mode_type const& mode() const { return mode_; }

  Scalar const& parameter() const
  {
    return std::visit(
        []( auto const& m ) -> Scalar const& {
          using M = std::decay_t<decltype( m )>;
          if constexpr ( std::is_same_v<M, ideal_uniform<Scalar>> )
            return m.scale;
          else if constexpr ( std::is_same_v<M, witnessed_uniform<Scalar>> )
            return m.theta;
          else
            return m.epsilon;
        },
        mode_ );
  }

  bool is_ideal() const { return std::holds_alternative<ideal_uniform<Scalar>>( mode_ ); }

  bool operator()( basic_point<Scalar> const& x, basic_point<Scalar> const& y ) const
  {
    detail::require_same_dimension( x, y );
    return std::visit(
        [&]( auto const& m ) -> bool {
          using M = std::decay_t<decltype( m )>;
          if constexpr ( std::is_same_v<M, ideal_uniform<Scalar>> )
          {
            for ( std::size_t i = 0; i < x.coords.size(); ++i )
            {
              if ( !is_infinitesimal( Scalar( ( x.coords[i] - y.coords[i] ) / m.scale ) ) )
                return false;
            }
            return true;
          }
          else if constexpr ( std::is_same_v<M, witnessed_uniform<Scalar>> )
          {
            return detail::chebyshev( x, y ) < m.theta;
          }
          else
          {
            Scalar reference( 1 );
            for ( auto const& n : { detail::chebyshev_norm( x ), detail::chebyshev_norm( y ) } )
            {
              if ( reference < n )
                reference = n;
            }
            return detail::chebyshev( x, y ) < Scalar( m.epsilon * reference );
          }
        },
        mode_ );
  }

private:
  mode_type mode_;
};

using indiscernibility = basic_indiscernibility<Rational>;

template<typename Scalar>
bool indiscernible( basic_indiscernibility<Scalar> const& spec, basic_point<Scalar> const& x,
                    basic_point<Scalar> const& y )
{
  return spec( x, y );
}

/// Members of X indiscernible from x, in X's order.
template<typename Scalar>
std::vector<basic_point<Scalar>> monad( basic_indiscernibility<Scalar> const& spec, basic_point<Scalar> const& x,
                                        point_view<Scalar> X )
{
  detail::require_same_dimension( X, x.dimension() );
  std::vector<basic_point<Scalar>> out;
  for ( auto const& y : X )
  {
    if ( spec( x, y ) )
      out.push_back( y );
  }
  return out;
}

/// Members of the ambient set indiscernible from some member of X, in ambient order.
template<typename Scalar>
std::vector<basic_point<Scalar>> figure( basic_indiscernibility<Scalar> const& spec,
                                         point_view<Scalar> X,
                                         point_view<Scalar> ambient )
{
  if ( !X.empty() )
  {
    detail::require_same_dimension( X, X.front().dimension() );
    detail::require_same_dimension( ambient, X.front().dimension() );
  }
  std::vector<basic_point<Scalar>> out;
  for ( auto const& y : ambient )
  {
    if ( std::any_of( X.begin(), X.end(), [&]( auto const& x ) { return spec( x, y ); } ) )
      out.push_back( y );
  }
  return out;
}

template<typename Scalar>
struct connectivity_report
{
  bool connected = true;
  /// When disconnected: a component and its complement, with no indiscernible pair across.
  std::vector<basic_point<Scalar>> part;
  std::vector<basic_point<Scalar>> rest;
};

/// Connectedness as connectivity of the indiscernibility graph on X.
template<typename Scalar>
connectivity_report<Scalar> is_connected( basic_indiscernibility<Scalar> const& spec,
                                          point_view<Scalar> X )
{
  if ( X.empty() )
    throw empty_input( "connectedness of an empty point set" );
  detail::require_same_dimension( X, X.front().dimension() );

  std::vector<std::size_t> parent( X.size() );
  std::iota( parent.begin(), parent.end(), std::size_t{ 0 } );
  auto find = [&]( std::size_t i ) {
    while ( parent[i] != i )
      i = parent[i] = parent[parent[i]];
    return i;
  };
  for ( std::size_t i = 0; i < X.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < X.size(); ++j )
    {
      if ( find( i ) != find( j ) && spec( X[i], X[j] ) )
        parent[find( i )] = find( j );
    }
  }

  connectivity_report<Scalar> report;
  std::size_t const root = find( 0 );
  for ( std::size_t i = 0; i < X.size(); ++i )
    ( find( i ) == root ? report.part : report.rest ).push_back( X[i] );
  report.connected = report.rest.empty();
  if ( report.connected )
    report.part.clear();
  return report;
}

template<typename Scalar>
struct chain
{
  basic_point<Scalar> x, y, z;
};

/// First (x, y, z) in index order with x ≈ y, y ≈ z and not x ≈ z.
template<typename Scalar>
std::optional<chain<Scalar>> transitivity_defect( basic_indiscernibility<Scalar> const& spec,
                                                  point_view<Scalar> X )
{
  if ( X.empty() )
    return std::nullopt;
  detail::require_same_dimension( X, X.front().dimension() );
  std::size_t const n = X.size();
  std::vector<char> related( n * n );
  for ( std::size_t i = 0; i < n; ++i )
  {
    for ( std::size_t j = i; j < n; ++j )
      related[i * n + j] = related[j * n + i] = spec( X[i], X[j] ) ? 1 : 0;
  }
  for ( std::size_t i = 0; i < n; ++i )
  {
    for ( std::size_t j = 0; j < n; ++j )
    {
      if ( !related[i * n + j] )
        continue;
      for ( std::size_t k = 0; k < n; ++k )
      {
        if ( related[j * n + k] && !related[i * n + k] )
          return chain<Scalar>{ X[i], X[j], X[k] };
      }
    }
  }
  return std::nullopt;
}

} // namespace altset
