#pragma once

#include <stdexcept>
#include <string>

namespace altset
{

/// Base of every domain error raised by the kernel. The CLI maps these to exit status 1.
class domain_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class empty_input : public domain_error
{
public:
  explicit empty_input( std::string const& what ) : domain_error( "EmptyInput: " + what ) {}
};

class cap_exceeded : public domain_error
{
public:
  explicit cap_exceeded( std::string const& what ) : domain_error( "CapExceeded: " + what ) {}
};

class division_by_zero : public domain_error
{
public:
  explicit division_by_zero( std::string const& what = "division by zero" )
    : domain_error( "DivisionByZero: " + what )
  {
  }
};

class infinite_argument : public domain_error
{
public:
  explicit infinite_argument( std::string const& what ) : domain_error( "InfiniteArgument: " + what ) {}
};

class dimension_mismatch : public domain_error
{
public:
  explicit dimension_mismatch( std::string const& what ) : domain_error( "DimensionMismatch: " + what ) {}
};

class too_few_samples : public domain_error
{
public:
  explicit too_few_samples( std::string const& what ) : domain_error( "TooFewSamples: " + what ) {}
};

class parse_error : public domain_error
{
public:
  explicit parse_error( std::string const& what ) : domain_error( "ParseError: " + what ) {}
};

} // namespace altset
