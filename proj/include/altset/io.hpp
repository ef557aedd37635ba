#pragma once

#include <altset/continuum.hpp>
#include <altset/errors.hpp>
#include <altset/motion.hpp>
#include <altset/rational.hpp>

#include <fstream>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace altset
{

class file_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

namespace detail
{

inline std::vector<std::string> split_commas( std::string const& line )
{
  std::vector<std::string> fields;
  std::size_t start = 0;
  while ( true )
  {
    auto const comma = line.find( ',', start );
    fields.push_back( line.substr( start, comma - start ) );
    if ( comma == std::string::npos )
      return fields;
    start = comma + 1;
  }
}

inline bool is_blank_or_comment( std::string const& line )
{
  auto const first = line.find_first_not_of( " \t\r" );
  return first == std::string::npos || line[first] == '#';
}

inline std::vector<Rational> parse_row( std::string const& line, std::string const& source, std::size_t lineno )
{
  std::vector<Rational> row;
  for ( auto const& field : split_commas( line ) )
  {
    try
    {
      row.push_back( parse_rational( field ) );
    }
    catch ( domain_error const& e )
    {
      throw parse_error( source + ":" + std::to_string( lineno ) + ": " + e.what() );
    }
  }
  return row;
}

inline std::ifstream open_or_throw( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw file_error( "cannot read file '" + path + "'" );
  return in;
}

} // namespace detail

/// One point per line, comma-separated exact rationals or decimals; `#` lines ignored.
inline std::vector<point> read_points( std::istream& in, std::string const& source = "<input>" )
{
  std::vector<point> out;
  std::string line;
  std::size_t lineno = 0;
  while ( std::getline( in, line ) )
  {
    ++lineno;
    if ( detail::is_blank_or_comment( line ) )
      continue;
    point p( detail::parse_row( line, source, lineno ) );
    if ( !out.empty() && p.dimension() != out.front().dimension() )
      throw dimension_mismatch( source + ":" + std::to_string( lineno ) + ": expected " +
                                std::to_string( out.front().dimension() ) + " coordinates" );
    out.push_back( std::move( p ) );
  }
  return out;
}

inline std::vector<point> read_points_file( std::string const& path )
{
  auto in = detail::open_or_throw( path );
  return read_points( in, path );
}

/// Header `t,x1,...,xn`, then one sample `t,x1,...,xn` per line.
inline std::vector<sample> read_trace( std::istream& in, std::string const& source = "<input>" )
{
  std::string line;
  std::size_t lineno = 0;
  std::size_t dim = 0;
  bool have_header = false;
  std::vector<sample> out;
  while ( std::getline( in, line ) )
  {
    ++lineno;
    if ( detail::is_blank_or_comment( line ) )
      continue;
    if ( !have_header )
    {
      auto fields = detail::split_commas( line );
      for ( auto& f : fields )
      {
        auto const b = f.find_first_not_of( " \t\r" );
        auto const e = f.find_last_not_of( " \t\r" );
        f = b == std::string::npos ? std::string() : f.substr( b, e - b + 1 );
      }
      if ( fields.size() < 2 || fields[0] != "t" )
        throw parse_error( source + ":" + std::to_string( lineno ) + ": expected header 't,x1,...,xn'" );
      for ( std::size_t i = 1; i < fields.size(); ++i )
      {
        if ( fields[i] != "x" + std::to_string( i ) )
          throw parse_error( source + ":" + std::to_string( lineno ) + ": expected column 'x" + std::to_string( i ) + "'" );
      }
      dim = fields.size() - 1;
      have_header = true;
      continue;
    }
    auto row = detail::parse_row( line, source, lineno );
    if ( row.size() != dim + 1 )
      throw dimension_mismatch( source + ":" + std::to_string( lineno ) + ": expected " + std::to_string( dim + 1 ) +
                                " fields" );
    sample s{ row.front(), point( std::vector<Rational>( row.begin() + 1, row.end() ) ) };
    out.push_back( std::move( s ) );
  }
  if ( !have_header )
    throw parse_error( source + ": missing header line" );
  return out;
}

inline std::vector<sample> read_trace_file( std::string const& path )
{
  auto in = detail::open_or_throw( path );
  return read_trace( in, path );
}

} // namespace altset
