#include <altset/expression.hpp>
#include <altset/omega_rational.hpp>

#include "generators.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace altset;

namespace
{

omega_rational const w = omega_rational::omega();

omega_rational parse( char const* text )
{
  return parse_omega( text );
}

} // namespace

TEST_CASE( "field arithmetic examples", "[omega]" )
{
  CHECK( field_arith( field_op::add, w, 1 ) == parse( "w + 1" ) );
  CHECK( field_arith( field_op::sub, parse( "w + 1" ), w ) == omega_rational( 1 ) );
  CHECK( field_arith( field_op::inv, w ) == parse( "1/w" ) );
  CHECK( field_arith( field_op::inv, w ).to_string() == "(1)/(w)" );
  CHECK( field_arith( field_op::mul, parse( "1/w" ), w * w ) == w );
  CHECK( field_arith( field_op::neg, w ).to_string() == "(-w)/(1)" );
  CHECK( field_arith( field_op::div, parse( "w^2 - 1" ), parse( "w - 1" ) ) == parse( "w + 1" ) );
  CHECK_THROWS_AS( field_arith( field_op::div, w, 0 ), division_by_zero );
  CHECK_THROWS_AS( field_arith( field_op::inv, 0 ), division_by_zero );
}

TEST_CASE( "canonical form", "[omega]" )
{
  auto const x = omega_rational( polynomial{ -2, 0, 2 }, polynomial{ -4, 4 } ); // (2w^2-2)/(4w-4)
  CHECK( x.to_string() == "(1/2*w + 1/2)/(1)" );
  auto const y = omega_rational( polynomial{ 1 }, polynomial{ 0, -3 } ); // 1/(-3w)
  CHECK( y.denominator().leading() == 1 );
  CHECK( y.to_string() == "(-1/3)/(w)" );
  CHECK( omega_rational( polynomial(), polynomial{ 0, 7 } ).to_string() == "(0)/(1)" );
  CHECK_THROWS_AS( omega_rational( polynomial{ 1 }, polynomial() ), division_by_zero );
}

TEST_CASE( "eventual dominance order", "[omega]" )
{
  CHECK( compare( w, parse( "10^100" ) ) == std::strong_ordering::greater );
  // 1/w - 1/(w+1) = 1/(w(w+1)) has positive leading sign.
  auto const diff = parse( "1/w" ) - parse( "1/(w+1)" );
  CHECK( diff == parse( "1/(w^2 + w)" ) );
  CHECK( compare( parse( "1/w" ), parse( "1/(w+1)" ) ) == std::strong_ordering::greater );
  CHECK( compare( Rational( 5, 7 ), Rational( 5, 7 ) ) == std::strong_ordering::equal );
  CHECK( -w < Rational( -1000000 ) );
  CHECK( parse( "w - 1000" ) > parse( "999" ) );
}

TEST_CASE( "compare agrees with numeric evaluation at a huge substitution", "[omega][oracle]" )
{
  testing::generator gen( 2024 );
  Rational const big = Rational( Integer( 1000000 ) * 1000000 );
  int checked = 0;
  for ( int i = 0; i < 300; ++i )
  {
    auto const x = gen.element( 3, 1000 );
    auto const y = gen.element( 3, 1000 );
    auto const d = x - y;
    // Only where the substitution point lies beyond every real root of the difference.
    if ( !d.is_zero() && !( Rational( root_bound( d.numerator() ) ) < big && Rational( root_bound( d.denominator() ) ) < big ) )
      continue;
    ++checked;
    int const numeric = sign( Rational( x.evaluate_at( big ) - y.evaluate_at( big ) ) );
    REQUIRE( ( x < y ? -1 : x == y ? 0 : 1 ) == numeric );
  }
  CHECK( checked > 250 );
}

TEST_CASE( "classification", "[omega]" )
{
  CHECK( classify( parse( "1/w" ) ) == classification{ true, true, false } );
  CHECK( classify( parse( "w^2 + 3" ) ) == classification{ false, false, true } );
  CHECK( classify( parse( "(w+1)/w" ) ) == classification{ false, true, false } );
  CHECK( classify( omega_rational( 0 ) ).is_infinitesimal );
  CHECK( to_string( classify( parse( "(1)/(w)" ) ) ) == "infinitesimal bounded" );

  // (w+1)/w = 1 + 1/w is not below 1/n for sampled standard n, and is below n >= 2.
  auto const x = parse( "(w+1)/w" );
  for ( int n : { 1, 2, 10, 1000, 1000000 } )
  {
    CHECK_FALSE( abs( x ) < omega_rational( Rational( 1, n ) ) );
    if ( n >= 2 )
      CHECK( abs( x ) < omega_rational( n ) );
  }
}

TEST_CASE( "infinite nearness and standard part", "[omega]" )
{
  CHECK( infinitely_near( parse( "1 + 1/w" ), 1 ) );
  CHECK_FALSE( infinitely_near( 1, 2 ) );
  CHECK( parse( "(w^2+w)/w^2" ) == parse( "1 + 1/w" ) );
  CHECK( infinitely_near( parse( "(w^2+w)/w^2" ), parse( "1 + 1/w" ) ) );

  CHECK( standard_part( parse( "(2*w+1)/w" ) ) == 2 );
  CHECK( standard_part( parse( "1/w" ) ) == 0 );
  CHECK_THROWS_AS( standard_part( w ), infinite_argument );

  auto const x = parse( "(3*w^2 - w)/(6*w^2 + 5)" );
  CHECK( standard_part( x ) == Rational( 1, 2 ) );
  // Oracle: substituting w = 10^k converges to 1/2.
  Rational previous_gap = 1;
  Rational scale = 1000;
  for ( int k = 3; k <= 9; ++k, scale *= 10 )
  {
    Rational const gap = abs( Rational( x.evaluate_at( scale ) - Rational( 1, 2 ) ) );
    CHECK( gap < previous_gap );
    CHECK( gap < Rational( 1 ) / scale );
    previous_gap = gap;
  }
}

TEST_CASE( "naturals", "[omega]" )
{
  CHECK( is_finite_natural( omega_rational( 7 ) ) );
  CHECK_FALSE( is_finite_natural( w ) );
  CHECK( is_natural( w ) );
  CHECK( is_natural( parse( "w^2 - 3" ) ) );
  CHECK_FALSE( is_natural( parse( "-w" ) ) );
  CHECK_FALSE( is_natural( parse( "1/w" ) ) );
  CHECK_FALSE( is_natural( parse( "w/2" ) ) );
}

TEST_CASE( "prolongation of definable sequences", "[omega]" )
{
  auto const identity = parse_sequence( "n" );
  CHECK( prolong( identity ) == w );
  CHECK( identity.at( 5 ) == 5 );

  auto const harmonic = parse_sequence( "1/(n+1)" );
  CHECK( prolong( harmonic ) == parse( "1/(w+1)" ) );
  CHECK( classify( prolong( harmonic ) ).is_infinitesimal );
  for ( std::uint64_t n = 0; n < 20; ++n )
    CHECK( harmonic.at( n ) == Rational( 1, n + 1 ) );

  CHECK_THROWS_AS( parse_sequence( "(n^2+1)/n^2" ), domain_error );
  CHECK_THROWS_AS( parse_sequence( "1/(n^2 - 5*n + 6)" ), domain_error ); // roots 2, 3
  CHECK_NOTHROW( parse_sequence( "1/(n^2 + 1)" ) );
  CHECK_NOTHROW( parse_sequence( "1/(2*n - 1)" ) );

  auto const guarded =
      definable_sequence::with_guard_shift( detail::expression_parser( "(n^2+1)/n^2", 'n' ).parse() );
  CHECK( guarded.rule() == detail::expression_parser( "((n+1)^2+1)/(n+1)^2", 'n' ).parse() );
  CHECK( standard_part( prolong( guarded ) ) == 1 );
  CHECK( guarded.at( 0 ) == 2 );
}

TEST_CASE( "expression syntax", "[omega]" )
{
  CHECK( parse( "3*w^2 - w + 1/2" ).to_string() == "(3*w^2 - w + 1/2)/(1)" );
  CHECK( parse( "0.25*w" ) == parse( "w/4" ) );
  CHECK( parse( "-(w)^2" ) == -( w * w ) );
  CHECK_THROWS_AS( parse( "3w" ), parse_error );
  CHECK_THROWS_AS( parse( "w +" ), parse_error );
  CHECK_THROWS_AS( parse( "x" ), parse_error );
  CHECK_THROWS_AS( parse( "1/(w-w)" ), division_by_zero );

  testing::generator gen( 3 );
  for ( int i = 0; i < 200; ++i )
  {
    auto const x = gen.element();
    REQUIRE( parse_omega( x.to_string() ) == x );
  }
}

TEST_CASE( "ordered field laws on random elements", "[omega][property]" )
{
  testing::generator gen( 42 );
  for ( int i = 0; i < 100; ++i )
  {
    auto const a = gen.element( 3, 30 );
    auto const b = gen.element( 3, 30 );
    auto const c = gen.element( 3, 30 );
    REQUIRE( ( a + b ) + c == a + ( b + c ) );
    REQUIRE( a * ( b + c ) == a * b + a * c );
    REQUIRE( a + b == b + a );
    REQUIRE( a - a == omega_rational( 0 ) );
    if ( !a.is_zero() )
      REQUIRE( a * inverse( a ) == omega_rational( 1 ) );
    if ( a < b )
      REQUIRE( a + c < b + c );
  }
}

TEST_CASE( "ideal and duality properties", "[omega][property]" )
{
  testing::generator gen( 8 );
  for ( int i = 0; i < 100; ++i )
  {
    auto const e1 = gen.infinitesimal_element();
    auto const e2 = gen.infinitesimal_element();
    auto const b = gen.bounded_element();
    REQUIRE( is_infinitesimal( e1 + e2 ) );
    REQUIRE( is_infinitesimal( b * e1 ) );
    auto const x = gen.nonzero_element();
    REQUIRE( classify( x ).is_infinitesimal == classify( inverse( x ) ).is_infinite );
  }
}
