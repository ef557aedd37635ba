// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// `acceptance --regenerate-golden` rewrites the CLI golden files instead.

#include <altset/altset.hpp>
#include <altset/cli.hpp>

#include "generators.hpp"
#include "golden_cases.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace altset;
using altset::testing::generator;

namespace
{

struct outcome
{
  bool pass = true;
  std::string detail;
};

outcome fail( std::string detail )
{
  return { false, std::move( detail ) };
}

// 1
outcome ordered_field_axioms()
{
  generator gen( 1001 );
  omega_rational const zero( 0 );
  omega_rational const one( 1 );
  int violations = 0;
  for ( int i = 0; i < 1000; ++i )
  {
    auto const a = gen.element( 4, 100 );
    auto const b = gen.element( 4, 100 );
    auto const c = gen.element( 4, 100 );
    bool ok = ( a + b ) + c == a + ( b + c ) && ( a * b ) * c == a * ( b * c ) && a + b == b + a && a * b == b * a &&
              a * ( b + c ) == a * b + a * c && a + zero == a && a * one == a && a + ( -a ) == zero;
    if ( !a.is_zero() )
      ok = ok && a * inverse( a ) == one && ( b / a ) * a == b;
    int const relations = ( a < b ) + ( a == b ) + ( a > b );
    ok = ok && relations == 1;
    if ( a < b && b < c )
      ok = ok && a < c;
    if ( a < b )
      ok = ok && a + c < b + c;
    if ( zero < a && zero < b )
      ok = ok && zero < a * b;
    violations += ok ? 0 : 1;
  }
  if ( violations )
    return fail( std::to_string( violations ) + " triples violate a law" );
  return { true, "1000 triples, 0 violations" };
}

// 2
outcome nearness_is_equivalence()
{
  generator gen( 2002 );
  int premises = 0;
  int violations = 0;
  for ( int i = 0; i < 500; ++i )
  {
    auto const y = gen.bounded_element( 3, 100 );
    bool const near_mode = i % 5 != 0;
    auto const x = near_mode ? y + gen.infinitesimal_element( 3, 100 ) : gen.bounded_element( 3, 100 );
    auto const z = near_mode ? y + gen.infinitesimal_element( 3, 100 ) : gen.bounded_element( 3, 100 );
    if ( !infinitely_near( x, x ) || infinitely_near( x, y ) != infinitely_near( y, x ) )
      ++violations;
    if ( infinitely_near( x, y ) && infinitely_near( y, z ) )
    {
      ++premises;
      if ( !infinitely_near( x, z ) )
        ++violations;
    }
  }
  if ( violations )
    return fail( std::to_string( violations ) + " violations" );
  if ( premises < 100 )
    return fail( "only " + std::to_string( premises ) + " triples exercised transitivity" );
  return { true, "500 triples (" + std::to_string( premises ) + " with x≐y≐z), 0 violations" };
}

// 3
outcome standard_part_homomorphism()
{
  generator gen( 3003 );
  for ( int i = 0; i < 500; ++i )
  {
    auto const x = gen.bounded_element( 4, 100 );
    auto const y = gen.bounded_element( 4, 100 );
    if ( standard_part( x + y ) != standard_part( x ) + standard_part( y ) )
      return fail( "additivity fails on pair " + std::to_string( i ) );
    if ( standard_part( x * y ) != standard_part( x ) * standard_part( y ) )
      return fail( "multiplicativity fails on pair " + std::to_string( i ) );
  }
  for ( int i = 0; i < 100; ++i )
  {
    auto const q = gen.rational( 1000, 97 );
    if ( standard_part( omega_rational( q ) ) != q )
      return fail( "st(q) != q for q = " + q.str() );
  }
  return { true, "500 pairs exact, 100 standard rationals fixed" };
}

// 4
outcome reciprocal_duality()
{
  generator gen( 4004 );
  int infinitesimals = 0;
  for ( int i = 0; i < 200; ++i )
  {
    auto const x = gen.nonzero_element( 4, 100 );
    bool const small = classify( x ).is_infinitesimal;
    infinitesimals += small ? 1 : 0;
    if ( small != classify( inverse( x ) ).is_infinite )
      return fail( "exception at " + x.to_string() );
  }
  return { true, "200 elements (" + std::to_string( infinitesimals ) + " infinitesimal), 0 exceptions" };
}

// 5
outcome non_archimedean()
{
  auto const w = omega_rational::omega();
  auto const eps = inverse( w );
  for ( long n : { 1L, 10L, 1000L, 1000000L } )
  {
    omega_rational const nn{ Rational( n ) };
    if ( compare( w, nn ) != std::strong_ordering::greater )
      return fail( "w not greater than " + std::to_string( n ) );
    if ( compare( eps, inverse( nn ) ) != std::strong_ordering::less )
      return fail( "1/w not less than 1/" + std::to_string( n ) );
    if ( !( omega_rational( 0 ) < eps ) )
      return fail( "1/w not positive" );
  }
  return { true, "n in {1, 10, 10^3, 10^6}" };
}

bool connected_by_subsets( indiscernibility const& spec, std::vector<point> const& X )
{
  std::size_t const n = X.size();
  for ( std::uint32_t mask = 1; mask + 1 < ( 1u << n ); ++mask )
  {
    bool crossing = false;
    for ( std::size_t i = 0; i < n && !crossing; ++i )
    {
      for ( std::size_t j = 0; j < n && !crossing; ++j )
        crossing = ( mask >> i & 1u ) && !( mask >> j & 1u ) && spec( X[i], X[j] );
    }
    if ( !crossing )
      return false;
  }
  return true;
}

// 6
outcome connectedness_oracle()
{
  generator gen( 6006 );
  int connected = 0;
  for ( int i = 0; i < 50; ++i )
  {
    auto const X = gen.points( static_cast<std::size_t>( gen.integer( 1, 10 ) ), 1 + i % 2, 8, 2 );
    auto const spec = indiscernibility::uniform( Rational( gen.integer( 1, 48 ), 4 ) );
    bool const graph = is_connected( spec, std::span<point const>( X ) ).connected;
    connected += graph ? 1 : 0;
    if ( graph != connected_by_subsets( spec, X ) )
      return fail( "mismatch on instance " + std::to_string( i ) );
  }
  return { true, "50/50 agree (" + std::to_string( connected ) + " connected)" };
}

// 7
outcome figure_is_union_of_monads()
{
  generator gen( 7007 );
  for ( int i = 0; i < 50; ++i )
  {
    auto const ambient = gen.points( static_cast<std::size_t>( gen.integer( 1, 30 ) ), 2, 10, 3 );
    auto const X = gen.points( static_cast<std::size_t>( gen.integer( 1, 6 ) ), 2, 10, 3 );
    auto const spec = indiscernibility::uniform( Rational( gen.integer( 1, 30 ), 3 ) );
    auto fig = figure( spec, std::span<point const>( X ), std::span<point const>( ambient ) );
    std::vector<point> unioned;
    for ( auto const& x : X )
    {
      auto const m = monad( spec, x, std::span<point const>( ambient ) );
      unioned.insert( unioned.end(), m.begin(), m.end() );
    }
    auto const key = []( point const& a, point const& b ) { return a.coords < b.coords; };
    std::sort( fig.begin(), fig.end(), key );
    fig.erase( std::unique( fig.begin(), fig.end() ), fig.end() );
    std::sort( unioned.begin(), unioned.end(), key );
    unioned.erase( std::unique( unioned.begin(), unioned.end() ), unioned.end() );
    if ( fig != unioned )
      return fail( "set inequality on instance " + std::to_string( i ) );
  }
  return { true, "50 instances, exact set equality" };
}

// 8
outcome non_transitivity_witness()
{
  for ( Rational theta : { Rational( 1 ), Rational( 1, 100 ), Rational( 7, 3 ) } )
  {
    for ( int count = 3; count <= 8; ++count )
    {
      std::vector<point> grid;
      for ( int k = 0; k < count; ++k )
        grid.push_back( point{ theta * Rational( 6 * k, 10 ) } );
      if ( !transitivity_defect( indiscernibility::uniform( theta ), std::span<point const>( grid ) ) )
        return fail( "no chain on grid of " + std::to_string( count ) + " points, theta=" + theta.str() );
    }
  }
  generator gen( 8008 );
  using opoint = basic_point<omega_rational>;
  for ( int i = 0; i < 200; ++i )
  {
    auto const spec = basic_indiscernibility<omega_rational>::ideal( omega_rational( Rational( gen.integer( 1, 5 ), gen.integer( 1, 5 ) ) ) );
    std::vector<opoint> X;
    for ( int k = 0; k < 5; ++k )
      X.push_back( opoint{ omega_rational( gen.integer( -1, 1 ) ) + gen.infinitesimal_element( 2, 9 ) } );
    if ( transitivity_defect( spec, std::span<opoint const>( X ) ) )
      return fail( "ideal spec produced a chain in trial " + std::to_string( i ) );
  }
  return { true, "chain found on every 0.6·theta grid; 200 ideal trials, 0 chains" };
}

// 9
outcome sorites_band()
{
  horizon const h( 1000, 10000 );
  if ( feasible( 0, h ) != verdict::in )
    return fail( "feasible(0) != In" );
  if ( feasible( 10000, h ) != verdict::out )
    return fail( "feasible(10^4) != Out" );
  int phase = 0; // 0 = In, 1 = BeyondHorizon, 2 = Out
  std::size_t counts[3] = { 0, 0, 0 };
  for ( std::uint64_t n = 0; n <= 10000; ++n )
  {
    auto const v = feasible( n, h );
    int const p = v == verdict::in ? 0 : v == verdict::beyond_horizon ? 1 : 2;
    if ( p < phase )
      return fail( "pattern not In*, BeyondHorizon*, Out* at n=" + std::to_string( n ) );
    if ( n > 0 && phase == 0 && p == 2 )
      return fail( "sharp In->Out step at n=" + std::to_string( n ) );
    phase = p;
    ++counts[p];
  }
  return { true, "In x" + std::to_string( counts[0] ) + ", BeyondHorizon x" + std::to_string( counts[1] ) + ", Out x" +
                     std::to_string( counts[2] ) };
}

// 10
outcome duality_and_budget()
{
  generator gen( 1010 );
  horizon const h( 100, 1000 );
  horizon const doubled = h.widened( 2 );
  int definite = 0;
  for ( int i = 0; i < 500; ++i )
  {
    class_family<Rational> family;
    switch ( gen.integer( 0, 3 ) )
    {
    case 0:
      family = below_index_family();
      break;
    case 1:
      family = infinitesimal_band_family();
      break;
    case 2:
      family = threshold_family( gen.rational( 10, 4 ) );
      break;
    default:
      family = complement_family( threshold_family( gen.rational( 10, 4 ) ) );
      break;
    }
    Rational const x = gen.coin() ? gen.rational( 2000, 3 ) : Rational( gen.integer( -5, 5 ), gen.integer( 1, 3000 ) );
    auto const v = evaluate( family, x, h ).value;
    auto const c = evaluate( complement_family( family ), x, h ).value;
    bool const dual = ( v == verdict::in && c == verdict::out ) || ( v == verdict::out && c == verdict::in ) ||
                      ( v == verdict::beyond_horizon && c == verdict::beyond_horizon );
    if ( !dual )
      return fail( "complement does not flip verdict on pair " + std::to_string( i ) );
    auto const refined = evaluate( family, x, doubled ).value;
    if ( v != verdict::beyond_horizon )
    {
      ++definite;
      if ( refined != v )
        return fail( "doubling the budget flipped a definite verdict on pair " + std::to_string( i ) );
    }
  }
  return { true, "500 pairs (" + std::to_string( definite ) + " definite), duality and monotonicity hold" };
}

// 11
outcome zeno()
{
  auto const a = zeno_dichotomy( Rational( 1, 1000000 ) );
  if ( a.steps != 20 || a.final_distance != Rational( 1, 1048576 ) )
    return fail( "theta=1e-6 gave n=" + std::to_string( a.steps ) );
  auto const b = zeno_dichotomy( Rational( 1, 2 ) );
  if ( b.steps != 2 )
    return fail( "theta=1/2 gave n=" + std::to_string( b.steps ) );
  return { true, "theta=1e-6 -> n=20, theta=1/2 -> n=2" };
}

// 12
outcome motion_checks()
{
  Rational const theta( 15, 100 );
  auto const spec = indiscernibility::uniform( theta );
  std::vector<sample> identity;
  std::vector<sample> constant;
  for ( int i = 0; i <= 10; ++i )
  {
    Rational const t( i, 10 );
    identity.push_back( { t, point{ t } } );
    constant.push_back( { t, point{ 0 } } );
  }
  motion_trace const id( identity, spec, spec );
  if ( !check_continuous( id ).holds || !check_observable( id ).holds )
    return fail( "identity trace" );
  motion_trace const still( constant, spec, spec );
  if ( !check_continuous( still ).holds || check_observable( still ).holds )
    return fail( "constant trace" );
  motion_trace const step( { { 0, point{ 0 } }, { Rational( 1, 10 ), point{ 5 } } }, spec, indiscernibility::uniform( 1 ) );
  auto const c = check_continuous( step );
  if ( c.holds || !c.violation || c.violation->first != 0 || c.violation->second != 1 )
    return fail( "step trace" );
  return { true, "identity continuous+observable; constant continuous, not observable; step fails at (0, 1/10)" };
}

// 13
outcome hf_universe()
{
  std::mt19937_64 rng( 1313 );
  auto const u4 = universe_up_to_rank( 4 );
  for ( int trial = 0; trial < 500; ++trial )
  {
    std::vector<hf_set> picks;
    for ( int i = 0; i < 10; ++i )
      picks.push_back( u4[rng() % u4.size()] );
    hf_set a;
    for ( auto const& p : picks )
      a = adjoin( a, p );
    std::shuffle( picks.begin(), picks.end(), rng );
    hf_set b;
    for ( auto const& p : picks )
      b = adjoin( adjoin( b, p ), p );
    if ( !( a == b ) || a.to_string() != b.to_string() )
      return fail( "extensionality violated in trial " + std::to_string( trial ) );
  }
  auto const u5 = universe_up_to_rank( 5 );
  if ( u5.size() != 65536 )
    return fail( "|universe_up_to_rank(5)| = " + std::to_string( u5.size() ) );
  std::size_t witnessed = 0;
  for ( auto const& x : u5 )
  {
    if ( x.is_empty() )
      continue;
    auto const w = regularity_witness( x );
    if ( !x.contains( w ) )
      return fail( "witness not an element of " + x.to_string() );
    for ( auto const& z : w.elements() )
    {
      if ( x.contains( z ) )
        return fail( "witness meets " + x.to_string() );
    }
    ++witnessed;
  }
  return { true, "500 permutations equal; " + std::to_string( witnessed ) + " regularity witnesses; size 65536" };
}

std::string run_cli( std::vector<std::string> args, int& status )
{
  std::ostringstream out;
  std::ostringstream err;
  status = cli::run( std::move( args ), out, err );
  return out.str();
}

std::string slurp( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// 14
outcome cli_golden()
{
  auto const cases = altset::testing::golden_cases();
  for ( auto const& c : cases )
  {
    int status1 = 0;
    int status2 = 0;
    auto const first = run_cli( c.args, status1 );
    auto const second = run_cli( c.args, status2 );
    if ( status1 != 0 || status2 != 0 )
      return fail( c.name + " exited with " + std::to_string( status1 ) );
    if ( first != second )
      return fail( c.name + " is not deterministic" );
    if ( first != slurp( altset::testing::golden_file( c.name ) ) )
      return fail( c.name + " differs from " + altset::testing::golden_file( c.name ) );
  }
  return { true, std::to_string( cases.size() ) + " subcommands byte-identical to golden files" };
}

int regenerate_golden()
{
  for ( auto const& c : altset::testing::golden_cases() )
  {
    int status = 0;
    auto const out = run_cli( c.args, status );
    std::ofstream( altset::testing::golden_file( c.name ), std::ios::binary ) << out;
    std::cout << "wrote " << altset::testing::golden_file( c.name ) << " (exit " << status << ")\n";
  }
  return 0;
}

} // namespace

int main( int argc, char** argv )
{
  if ( argc > 1 && std::string( argv[1] ) == "--regenerate-golden" )
    return regenerate_golden();

  struct criterion
  {
    int id;
    char const* name;
    std::function<outcome()> check;
  };
  std::vector<criterion> const criteria{
      { 1, "ordered-field axioms", ordered_field_axioms },
      { 2, "infinite nearness is an equivalence", nearness_is_equivalence },
      { 3, "standard part is a ring homomorphism", standard_part_homomorphism },
      { 4, "reciprocal duality", reciprocal_duality },
      { 5, "non-Archimedean order", non_archimedean },
      { 6, "connectedness oracle equivalence", connectedness_oracle },
      { 7, "figure equals union of monads", figure_is_union_of_monads },
      { 8, "non-transitivity witness", non_transitivity_witness },
      { 9, "sorites band", sorites_band },
      { 10, "sigma/pi duality and budget monotonicity", duality_and_budget },
      { 11, "zeno dichotomy", zeno },
      { 12, "motion checks", motion_checks },
      { 13, "hereditarily finite universe", hf_universe },
      { 14, "CLI golden determinism", cli_golden },
  };

  int failures = 0;
  for ( auto const& c : criteria )
  {
    auto const start = std::chrono::steady_clock::now();
    outcome result;
    try
    {
      result = c.check();
    }
    catch ( std::exception const& e )
    {
      result = fail( std::string( "exception: " ) + e.what() );
    }
    auto const ms =
        std::chrono::duration_cast<std::chrono::milliseconds>( std::chrono::steady_clock::now() - start ).count();
    failures += result.pass ? 0 : 1;
    std::cout << ( result.pass ? "[PASS] " : "[FAIL] " ) << c.id << ". " << c.name << ": " << result.detail << " ("
              << ms << " ms)\n";
  }
  std::cout << ( criteria.size() - static_cast<std::size_t>( failures ) ) << "/" << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
