#pragma once

#include <altset/continuum.hpp>
#include <altset/errors.hpp>
#include <altset/expression.hpp>
#include <altset/hf_set.hpp>
#include <altset/horizon.hpp>
#include <altset/io.hpp>
#include <altset/motion.hpp>
#include <altset/omega_rational.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace altset::cli
{

/// Bad flag combination or value; exit status 2.
class usage_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

namespace detail
{

inline std::string format_points( std::vector<point> const& ps )
{
  std::string out;
  for ( auto const& p : ps )
  {
    if ( !out.empty() )
      out += ' ';
    out += "(" + to_string( p ) + ")";
  }
  return out.empty() ? "none" : out;
}

struct options
{
  std::string config_path;
  std::optional<std::uint64_t> soft;
  std::optional<std::uint64_t> hard;
  std::string theta;
  std::string epsilon;

  std::map<std::string, std::string> config() const
  {
    if ( config_path.empty() )
      return {};
    std::ifstream in( config_path );
    if ( !in )
      throw file_error( "cannot read file '" + config_path + "'" );
    auto kv = read_key_values( in );
    for ( auto const& [key, value] : kv )
    {
      if ( key != "horizon.soft" && key != "horizon.hard" && key != "theta" && key != "epsilon" )
        throw usage_error( config_path + ": unknown config key '" + key + "'" );
    }
    return kv;
  }

  horizon resolve_horizon() const
  {
    auto const kv = config();
    auto const base = horizon_from_config( kv );
    return horizon( soft.value_or( base.soft_bound() ), hard.value_or( base.hard_bound() ) );
  }

  indiscernibility resolve_spec() const
  {
    auto const kv = config();
    std::string t = theta;
    std::string e = epsilon;
    if ( t.empty() && e.empty() )
    {
      if ( auto it = kv.find( "theta" ); it != kv.end() )
        t = it->second;
      if ( auto it = kv.find( "epsilon" ); it != kv.end() )
        e = it->second;
    }
    if ( t.empty() == e.empty() )
      throw usage_error( "exactly one of --theta or --epsilon is required" );
    return t.empty() ? indiscernibility::relative( parse_rational( e ) ) : indiscernibility::uniform( parse_rational( t ) );
  }
};

inline void add_horizon_flags( CLI::App* sub, options& opt )
{
  sub->add_option( "--soft", opt.soft, "start of the vague band" );
  sub->add_option( "--hard", opt.hard, "witness budget" );
  sub->add_option( "--config", opt.config_path, "key=value config file" );
}

inline void add_spec_flags( CLI::App* sub, options& opt )
{
  sub->add_option( "--theta", opt.theta, "uniform indiscernibility threshold" );
  sub->add_option( "--epsilon", opt.epsilon, "relative indiscernibility threshold" );
  sub->add_option( "--config", opt.config_path, "key=value config file" );
}

inline void report_membership( std::ostream& out, std::string const& family_name, std::string const& x_text,
                               family_kind wanted, horizon const& h )
{
  auto const named = resolve_family( family_name );
  if ( std::holds_alternative<feasibility_cut>( named ) )
  {
    auto const x = parse_rational( x_text );
    if ( x < 0 || boost::multiprecision::denominator( x ) != 1 )
      throw usage_error( "family 'feasible' takes a non-negative integer --x" );
    auto const n = static_cast<std::uint64_t>( boost::multiprecision::numerator( x ) );
    out << "family=feasible x=" << x.str() << " verdict=" << to_string( feasible( n, h ) ) << "\n";
    return;
  }
  auto family = std::get<class_family<Rational>>( named );
  if ( family.kind != wanted )
    family = complement_family( std::move( family ) );
  auto const x = parse_rational( x_text );
  auto const m = evaluate( family, x, h );
  out << "family=" << family_name << " kind=" << to_string( family.kind ) << " x=" << x.str()
      << " verdict=" << to_string( m.value );
  if ( m.witness_index )
    out << " witness=" << *m.witness_index;
  out << "\n";
}

} // namespace detail

/*!
  \brief Runs one CLI invocation. `args` excludes the program name.

  Exit status: 0 success, 1 domain error, 2 usage error.
*/
inline int run( std::vector<std::string> args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Exact kernel for horizon-bounded nonstandard arithmetic and indiscernibility", "altset" };
  app.require_subcommand( 1 );

  detail::options opt;
  std::string expr;
  std::string family;
  std::string x_text;
  std::string points_path;
  std::string ambient_path;
  std::string trace_path;
  std::string time_theta;
  std::string space_theta;
  std::string space_epsilon;
  std::string start = "1";
  std::string ratio = "1/2";
  std::size_t guard = 0;
  bool guard_shift = false;
  std::size_t hf_rank = 3;
  std::size_t hf_vn = 4;

  auto* classify_cmd = app.add_subcommand( "classify", "infinitesimal / bounded / infinite" );
  classify_cmd->add_option( "expr", expr, "element, e.g. \"(1)/(w)\"" )->required();

  auto* st_cmd = app.add_subcommand( "st", "standard part of a bounded element" );
  st_cmd->add_option( "expr", expr )->required();

  auto* prolong_cmd = app.add_subcommand( "prolong", "value of a sequence rule in n at the infinite index" );
  prolong_cmd->add_option( "rule", expr, "rule in n, e.g. \"1/(n+1)\"" )->required();
  prolong_cmd->add_option( "--shift", guard, "index shift n -> n + k" );
  prolong_cmd->add_flag( "--guard-shift", guard_shift, "shift past indices where the rule is undefined" );

  auto* scan_cmd = app.add_subcommand( "feasible-scan", "verdicts of the feasibility cut for n = 0..hard" );
  detail::add_horizon_flags( scan_cmd, opt );

  auto* sigma_cmd = app.add_subcommand( "sigma", "sigma-class membership" );
  auto* pi_cmd = app.add_subcommand( "pi", "pi-class membership" );
  for ( auto* sub : { sigma_cmd, pi_cmd } )
  {
    sub->add_option( "--family", family, "feasible | infinitesimal-band | below-index | threshold:<c>" )->required();
    sub->add_option( "--x", x_text, "element" )->required();
    detail::add_horizon_flags( sub, opt );
  }

  auto* connected_cmd = app.add_subcommand( "connected", "connectedness of a point set" );
  connected_cmd->add_option( "--points", points_path )->required();
  detail::add_spec_flags( connected_cmd, opt );

  auto* figure_cmd = app.add_subcommand( "figure", "figure of a point set within an ambient set" );
  figure_cmd->add_option( "--points", points_path )->required();
  figure_cmd->add_option( "--ambient", ambient_path )->required();
  detail::add_spec_flags( figure_cmd, opt );

  auto* defect_cmd = app.add_subcommand( "defect", "non-transitivity witness x≈y, y≈z, not x≈z" );
  defect_cmd->add_option( "--points", points_path )->required();
  detail::add_spec_flags( defect_cmd, opt );

  auto* motion_cmd = app.add_subcommand( "motion-check", "continuity and observability of a sampled motion" );
  motion_cmd->add_option( "--trace", trace_path )->required();
  motion_cmd->add_option( "--time-theta", time_theta )->required();
  motion_cmd->add_option( "--space-theta", space_theta );
  motion_cmd->add_option( "--space-epsilon", space_epsilon );

  auto* zeno_cmd = app.add_subcommand( "zeno", "halving steps until the goal is indiscernible" );
  zeno_cmd->add_option( "--theta", opt.theta )->required();
  zeno_cmd->add_option( "--start", start );
  zeno_cmd->add_option( "--ratio", ratio );

  auto* hf_cmd = app.add_subcommand( "hf-demo", "hereditarily finite sets: numerals, universe, regularity" );
  hf_cmd->add_option( "--rank", hf_rank, "universe of rank < k" )->check( CLI::Range( 0, 5 ) );
  hf_cmd->add_option( "--vn", hf_vn, "largest von Neumann numeral shown" )->check( CLI::Range( 0, 16 ) );

  try
  {
    std::reverse( args.begin(), args.end() );
    app.parse( args );
  }
  catch ( CLI::CallForHelp const& )
  {
    out << app.help();
    return 0;
  }
  catch ( CLI::ParseError const& e )
  {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try
  {
    if ( classify_cmd->parsed() )
    {
      out << to_string( classify( parse_omega( expr ) ) ) << "\n";
    }
    else if ( st_cmd->parsed() )
    {
      out << "st=" << standard_part( parse_omega( expr ) ).str() << "\n";
    }
    else if ( prolong_cmd->parsed() )
    {
      auto const rule = altset::detail::expression_parser( expr, 'n' ).parse();
      auto seq = guard_shift ? definable_sequence::with_guard_shift( rule ) : definable_sequence( rule );
      if ( guard > 0 )
        seq = seq.shifted( guard );
      auto const value = prolong( seq );
      auto const c = classify( value );
      out << "rule=" << seq.rule().to_string() << "\n";
      out << "prolonged=" << value.to_string() << "\n";
      out << "class=" << to_string( c ) << "\n";
      if ( c.is_bounded )
        out << "st=" << standard_part( value ).str() << "\n";
    }
    else if ( scan_cmd->parsed() )
    {
      auto const h = opt.resolve_horizon();
      for ( std::uint64_t n = 0; n <= h.hard_bound(); ++n )
        out << "n=" << n << " verdict=" << to_string( feasible( n, h ) ) << "\n";
    }
    else if ( sigma_cmd->parsed() || pi_cmd->parsed() )
    {
      detail::report_membership( out, family, x_text, sigma_cmd->parsed() ? family_kind::sigma : family_kind::pi,
                                 opt.resolve_horizon() );
    }
    else if ( connected_cmd->parsed() )
    {
      auto const spec = opt.resolve_spec();
      auto const X = read_points_file( points_path );
      auto const r = is_connected( spec, std::span<point const>( X ) );
      out << "points=" << X.size() << "\n";
      out << "connected=" << ( r.connected ? "true" : "false" ) << "\n";
      if ( !r.connected )
      {
        out << "part=" << detail::format_points( r.part ) << "\n";
        out << "rest=" << detail::format_points( r.rest ) << "\n";
      }
    }
    else if ( figure_cmd->parsed() )
    {
      auto const spec = opt.resolve_spec();
      auto const X = read_points_file( points_path );
      auto const ambient = read_points_file( ambient_path );
      auto const fig = figure( spec, std::span<point const>( X ), std::span<point const>( ambient ) );
      out << "size=" << fig.size() << "\n";
      for ( auto const& p : fig )
        out << "point=(" << to_string( p ) << ")\n";
    }
    else if ( defect_cmd->parsed() )
    {
      auto const spec = opt.resolve_spec();
      auto const X = read_points_file( points_path );
      auto const c = transitivity_defect( spec, std::span<point const>( X ) );
      if ( c )
        out << "chain=(" << to_string( c->x ) << ") (" << to_string( c->y ) << ") (" << to_string( c->z ) << ")\n";
      else
        out << "chain=none\n";
    }
    else if ( motion_cmd->parsed() )
    {
      if ( space_theta.empty() == space_epsilon.empty() )
        throw usage_error( "exactly one of --space-theta or --space-epsilon is required" );
      auto const space = space_theta.empty() ? indiscernibility::relative( parse_rational( space_epsilon ) )
                                             : indiscernibility::uniform( parse_rational( space_theta ) );
      motion_trace const trace( read_trace_file( trace_path ), indiscernibility::uniform( parse_rational( time_theta ) ),
                                space );
      auto report = [&]( std::string const& name, motion_check const& m ) {
        out << name << "=" << ( m.holds ? "true" : "false" );
        if ( m.violation )
        {
          auto const& s = trace.samples();
          out << " t1=" << s[m.violation->first].t.str() << " t2=" << s[m.violation->second].t.str();
        }
        out << "\n";
      };
      out << "samples=" << trace.samples().size() << "\n";
      report( "continuous", check_continuous( trace ) );
      report( "observable", check_observable( trace ) );
    }
    else if ( zeno_cmd->parsed() )
    {
      auto const r = zeno_dichotomy( parse_rational( opt.theta ), parse_rational( start ), parse_rational( ratio ) );
      out << "n=" << r.steps << " final=" << r.final_distance.str() << "\n";
    }
    else if ( hf_cmd->parsed() )
    {
      for ( std::size_t n = 0; n <= hf_vn; ++n )
        out << "vn(" << n << ")=" << von_neumann( n ).to_string() << "\n";
      auto const universe = universe_up_to_rank( hf_rank );
      out << "universe_rank_lt_" << hf_rank << " size=" << universe.size() << "\n";
      if ( universe.size() <= 16 )
      {
        for ( auto const& s : universe )
          out << "set=" << s.to_string() << "\n";
      }
      std::size_t checked = 0;
      for ( auto const& s : universe )
      {
        if ( s.is_empty() )
          continue;
        auto const w = regularity_witness( s );
        if ( !s.contains( w ) )
          throw std::logic_error( "regularity witness is not an element" );
        ++checked;
      }
      out << "regularity_witnesses=" << checked << "\n";
    }
  }
  catch ( parse_error const& e )
  {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  catch ( usage_error const& e )
  {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  catch ( file_error const& e )
  {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  catch ( domain_error const& e )
  {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace altset::cli
