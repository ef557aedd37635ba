#pragma once

#include <altset/continuum.hpp>
#include <altset/errors.hpp>
#include <altset/rational.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace altset
{

struct sample
{
  Rational t;
  point p;
};

/// A point motion f : (T, ~) -> (S, ≈) presented as finitely many samples.
class motion_trace
{
public:
  motion_trace( std::vector<sample> samples, indiscernibility time_spec, indiscernibility space_spec )
    : samples_( std::move( samples ) ), time_spec_( std::move( time_spec ) ), space_spec_( std::move( space_spec ) )
  {
    for ( std::size_t i = 1; i < samples_.size(); ++i )
    {
      if ( !( samples_[i - 1].t < samples_[i].t ) )
        throw domain_error( "sample times must be strictly increasing (sample " + std::to_string( i ) + ")" );
      if ( samples_[i].p.dimension() != samples_[0].p.dimension() )
        throw dimension_mismatch( "sample " + std::to_string( i ) + " has dimension " +
                                  std::to_string( samples_[i].p.dimension() ) );
    }
  }

  std::vector<sample> const& samples() const { return samples_; }
  indiscernibility const& time_spec() const { return time_spec_; }
  indiscernibility const& space_spec() const { return space_spec_; }

  bool times_indiscernible( std::size_t i, std::size_t j ) const
  {
    return time_spec_( point{ samples_[i].t }, point{ samples_[j].t } );
  }

  bool points_indiscernible( std::size_t i, std::size_t j ) const
  {
    return space_spec_( samples_[i].p, samples_[j].p );
  }

private:
  std::vector<sample> samples_;
  indiscernibility time_spec_;
  indiscernibility space_spec_;
};

struct motion_check
{
  bool holds = true;
  /// Indices (i < j) of the first violating pair in time order.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

namespace detail
{

template<typename Violates>
motion_check first_violation( motion_trace const& trace, Violates&& violates )
{
  auto const n = trace.samples().size();
  if ( n < 2 )
    throw too_few_samples( "motion check needs at least 2 samples, got " + std::to_string( n ) );
  for ( std::size_t i = 0; i < n; ++i )
  {
    for ( std::size_t j = i + 1; j < n; ++j )
    {
      if ( violates( i, j ) )
        return { false, std::pair{ i, j } };
    }
  }
  return {};
}

} // namespace detail

/// Continuous: t ~ s implies f(t) ≈ f(s), over all sample pairs.
inline motion_check check_continuous( motion_trace const& trace )
{
  return detail::first_violation( trace, [&]( std::size_t i, std::size_t j ) {
    return trace.times_indiscernible( i, j ) && !trace.points_indiscernible( i, j );
  } );
}

/// Observable: f(t) ≈ f(s) implies t ~ s, over all sample pairs.
inline motion_check check_observable( motion_trace const& trace )
{
  return detail::first_violation( trace, [&]( std::size_t i, std::size_t j ) {
    return trace.points_indiscernible( i, j ) && !trace.times_indiscernible( i, j );
  } );
}

struct zeno_result
{
  std::size_t steps = 0;
  Rational final_distance;
};

/// Least n >= 1 with start·ratio^n < theta: the walk has entered the goal's monad.
inline zeno_result zeno_dichotomy( Rational const& theta, Rational const& start = 1, Rational const& ratio = Rational( 1, 2 ) )
{
  if ( !( ratio > 0 && ratio < 1 ) )
    throw domain_error( "zeno ratio must lie in (0, 1), got " + ratio.str() );
  if ( !( start > 0 ) )
    throw domain_error( "zeno start must be positive, got " + start.str() );
  if ( !( theta > 0 ) )
    throw domain_error( "zeno theta must be positive, got " + theta.str() );
  zeno_result r{ 0, start };
  do
  {
    r.final_distance *= ratio;
    ++r.steps;
  } while ( !( r.final_distance < theta ) );
  return r;
}

} // namespace altset
