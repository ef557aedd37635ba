#pragma once

#include <altset/errors.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace altset
{

/*!
  \brief Hereditarily finite set in canonical form.

  Elements are kept sorted under the recursive lexicographic order and
  deduplicated, so two sets are equal exactly when their element sequences
  match position by position. Values are immutable and share structure.
*/
class hf_set
{
  struct node
  {
    std::vector<hf_set> elements;
    std::uint64_t hash = 0;
    std::size_t rank = 0;
  };

public:
  /// The empty set.
  hf_set() = default;

  /// Canonicalizes an arbitrary element list (order and repetition are irrelevant).
  static hf_set from_elements( std::vector<hf_set> elements )
  {
    std::sort( elements.begin(), elements.end() );
    elements.erase( std::unique( elements.begin(), elements.end() ), elements.end() );
    return from_sorted_unique( std::move( elements ) );
  }

  std::span<hf_set const> elements() const
  {
    if ( !node_ )
      return {};
    return node_->elements;
  }

  std::size_t cardinality() const { return node_ ? node_->elements.size() : 0u; }
  bool is_empty() const { return cardinality() == 0u; }

  /// rank(∅) = 0, rank(x) = max over elements of rank + 1.
  std::size_t rank() const { return node_ ? node_->rank : 0u; }

  std::uint64_t hash() const { return node_ ? node_->hash : empty_hash; }

  bool contains( hf_set const& y ) const
  {
    auto const elems = elements();
    return std::binary_search( elems.begin(), elems.end(), y );
  }

  /// x ∪ {y}
  hf_set adjoin( hf_set const& y ) const
  {
    auto const elems = elements();
    auto const pos = std::lower_bound( elems.begin(), elems.end(), y );
    if ( pos != elems.end() && *pos == y )
      return *this;
    std::vector<hf_set> out;
    out.reserve( elems.size() + 1 );
    out.insert( out.end(), elems.begin(), pos );
    out.push_back( y );
    out.insert( out.end(), pos, elems.end() );
    return from_sorted_unique( std::move( out ) );
  }

  friend std::strong_ordering operator<=>( hf_set const& a, hf_set const& b )
  {
    if ( a.node_ == b.node_ )
      return std::strong_ordering::equal;
    auto const ea = a.elements();
    auto const eb = b.elements();
    auto const n = std::min( ea.size(), eb.size() );
    for ( std::size_t i = 0; i < n; ++i )
    {
      if ( auto c = ea[i] <=> eb[i]; c != 0 )
        return c;
    }
    return ea.size() <=> eb.size();
  }

  friend bool operator==( hf_set const& a, hf_set const& b )
  {
    if ( a.node_ == b.node_ )
      return true;
    if ( a.hash() != b.hash() || a.cardinality() != b.cardinality() || a.rank() != b.rank() )
      return false;
    return ( a <=> b ) == 0;
  }

  /// Brace serialization in canonical order, e.g. `{{},{{}}}`.
  std::string to_string() const
  {
    std::string out;
    append_to( out );
    return out;
  }

private:
  static constexpr std::uint64_t empty_hash = 0x9e3779b97f4a7c15ull;

  static hf_set from_sorted_unique( std::vector<hf_set> elements )
  {
    if ( elements.empty() )
      return {};
    auto n = std::make_shared<node>();
    std::uint64_t h = 0xcbf29ce484222325ull;
    std::size_t r = 0;
    for ( auto const& e : elements )
    {
      h ^= e.hash() + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
      h *= 0x100000001b3ull;
      r = std::max( r, e.rank() + 1 );
    }
    n->hash = h ^ elements.size();
    n->rank = r;
    n->elements = std::move( elements );
    hf_set s;
    s.node_ = std::move( n );
    return s;
  }

  void append_to( std::string& out ) const
  {
    out.push_back( '{' );
    bool first = true;
    for ( auto const& e : elements() )
    {
      if ( !first )
        out.push_back( ',' );
      first = false;
      e.append_to( out );
    }
    out.push_back( '}' );
  }

  friend std::vector<hf_set> universe_up_to_rank( std::size_t );

  std::shared_ptr<node const> node_;
};

inline constexpr std::size_t von_neumann_cap = 16;
inline constexpr std::size_t universe_rank_cap = 5;

inline hf_set empty()
{
  return {};
}

inline hf_set adjoin( hf_set const& x, hf_set const& y )
{
  return x.adjoin( y );
}

inline bool equals( hf_set const& x, hf_set const& y )
{
  return x == y;
}

inline std::size_t rank( hf_set const& x )
{
  return x.rank();
}

/// An element e ∈ x with e ∩ x = ∅. Throws empty_input for x = ∅.
inline hf_set regularity_witness( hf_set const& x )
{
  if ( x.is_empty() )
    throw empty_input( "regularity witness of the empty set" );
  for ( auto const& e : x.elements() )
  {
    auto const inner = e.elements();
    if ( std::none_of( inner.begin(), inner.end(), [&]( hf_set const& z ) { return x.contains( z ); } ) )
      return e;
  }
  // Unreachable for well-founded sets: the element of least rank is always disjoint.
  throw std::logic_error( "regularity violated by " + x.to_string() );
}

/// n = {0, 1, ..., n-1}
inline hf_set von_neumann( std::size_t n )
{
  if ( n > von_neumann_cap )
    throw cap_exceeded( "von Neumann numeral " + std::to_string( n ) + " exceeds cap " + std::to_string( von_neumann_cap ) );
  std::vector<hf_set> smaller;
  smaller.reserve( n );
  hf_set current;
  for ( std::size_t i = 0; i < n; ++i )
  {
    smaller.push_back( current );
    current = hf_set::from_elements( smaller );
  }
  return current;
}

/// Every set of rank < k, in canonical order: the k-th iterated powerset of ∅.
inline std::vector<hf_set> universe_up_to_rank( std::size_t k )
{
  if ( k > universe_rank_cap )
    throw cap_exceeded( "universe of rank < " + std::to_string( k ) + " exceeds cap " + std::to_string( universe_rank_cap ) );
  std::vector<hf_set> level;
  for ( std::size_t stage = 0; stage < k; ++stage )
  {
    std::size_t const n = level.size();
    std::vector<hf_set> next;
    next.reserve( std::size_t{ 1 } << n );
    for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << n ); ++mask )
    {
      std::vector<hf_set> subset;
      for ( std::size_t i = 0; i < n; ++i )
      {
        if ( mask >> i & 1u )
          subset.push_back( level[i] );
      }
      // `level` is sorted, so picking indices in ascending order keeps the subset canonical.
      next.push_back( hf_set::from_sorted_unique( std::move( subset ) ) );
    }
    std::sort( next.begin(), next.end() );
    level = std::move( next );
  }
  return level;
}

/// Parses the brace serialization produced by hf_set::to_string (whitespace allowed).
inline hf_set parse_hf( std::string_view text )
{
  std::size_t pos = 0;
  auto skip = [&] {
    while ( pos < text.size() && ( text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ) )
      ++pos;
  };
  std::function<hf_set()> parse_set = [&]() -> hf_set {
    skip();
    if ( pos >= text.size() || text[pos] != '{' )
      throw parse_error( "expected '{' at offset " + std::to_string( pos ) );
    ++pos;
    std::vector<hf_set> elems;
    skip();
    if ( pos < text.size() && text[pos] == '}' )
    {
      ++pos;
      return {};
    }
    while ( true )
    {
      elems.push_back( parse_set() );
      skip();
      if ( pos < text.size() && text[pos] == ',' )
      {
        ++pos;
        continue;
      }
      if ( pos < text.size() && text[pos] == '}' )
      {
        ++pos;
        break;
      }
      throw parse_error( "expected ',' or '}' at offset " + std::to_string( pos ) );
    }
    return hf_set::from_elements( std::move( elems ) );
  };
  hf_set const result = parse_set();
  skip();
  if ( pos != text.size() )
    throw parse_error( "trailing input at offset " + std::to_string( pos ) );
  return result;
}

struct induction_report
{
  bool base_holds = true;
  bool step_holds = true;
  bool conclusion_holds = true;
  /// First set on which the conclusion fails, if any.
  std::vector<hf_set> counterexamples;

  bool premises_hold() const { return base_holds && step_holds; }
};

/*!
  \brief Checks one instance of the ∈-induction schema over a finite universe.

  Premises: φ(∅), and φ(x) ⇒ φ(x ∪ {y}) for every x, y in the universe.
  Conclusion: φ holds on every member of the universe.
*/
template<typename Predicate>
induction_report check_induction( Predicate&& phi, std::span<hf_set const> universe )
{
  induction_report report;
  report.base_holds = static_cast<bool>( phi( empty() ) );
  for ( auto const& x : universe )
  {
    if ( !phi( x ) )
      continue;
    for ( auto const& y : universe )
    {
      if ( !phi( x.adjoin( y ) ) )
      {
        report.step_holds = false;
        break;
      }
    }
    if ( !report.step_holds )
      break;
  }
  for ( auto const& x : universe )
  {
    if ( !phi( x ) )
    {
      report.conclusion_holds = false;
      report.counterexamples.push_back( x );
    }
  }
  return report;
}

} // namespace altset

template<>
struct std::hash<altset::hf_set>
{
  std::size_t operator()( altset::hf_set const& s ) const noexcept { return static_cast<std::size_t>( s.hash() ); }
};
