#pragma once

#include "boolean_function.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

namespace boolsens
{

namespace detail
{

/// Recursive-descent parser producing whole truth tables per sub-expression.
/// Precedence from tightest: ! then & then ^ then |; binary operators are left-associative.
class ExpressionParser
{
public:
  ExpressionParser( std::string_view text, int n ) : text_( text ), n_( n ) {}

  BitTable parse()
  {
    auto t = parse_or();
    skip_space();
    if ( pos_ != text_.size() )
      throw ParseError( std::string( "unexpected '" ) + text_[pos_] + "'", pos_ );
    return t;
  }

private:
  void skip_space()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
      ++pos_;
  }

  bool accept( char c )
  {
    skip_space();
    if ( pos_ < text_.size() && text_[pos_] == c )
    {
      ++pos_;
      return true;
    }
    return false;
  }

  BitTable parse_or()
  {
    auto t = parse_xor();
    while ( accept( '|' ) )
      t |= parse_xor();
    return t;
  }

  BitTable parse_xor()
  {
    auto t = parse_and();
    while ( accept( '^' ) )
      t ^= parse_and();
    return t;
  }

  BitTable parse_and()
  {
    auto t = parse_unary();
    while ( accept( '&' ) )
      t &= parse_unary();
    return t;
  }

  BitTable parse_unary()
  {
    if ( accept( '!' ) )
      return ~parse_unary();
    return parse_primary();
  }

  BitTable parse_primary()
  {
    skip_space();
    if ( pos_ >= text_.size() )
      throw ParseError( "unexpected end of expression", pos_ );
    char const c = text_[pos_];
    if ( c == '(' )
    {
      ++pos_;
      auto t = parse_or();
      if ( !accept( ')' ) )
        throw ParseError( "expected ')'", pos_ );
      return t;
    }
    if ( c == '0' || c == '1' )
    {
      ++pos_;
      return BitTable( size(), c == '1' );
    }
    if ( c == 'x' )
    {
      std::size_t const start = pos_++;
      std::size_t digits = 0;
      std::uint64_t index = 0;
      while ( pos_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
      {
        index = std::min<std::uint64_t>( index * 10 + static_cast<std::uint64_t>( text_[pos_] - '0' ), 1u << 20 );
        ++pos_;
        ++digits;
      }
      if ( digits == 0 )
        throw ParseError( "expected variable index after 'x'", pos_ );
      if ( index < 1 || index > static_cast<std::uint64_t>( n_ ) )
        throw ParseError( "variable x" + std::string( text_.substr( start + 1, digits ) ) + " out of range [1, " +
                              std::to_string( n_ ) + "]",
                          start );
      return variable( static_cast<int>( index ) - 1 );
    }
    throw ParseError( std::string( "unexpected '" ) + c + "'", pos_ );
  }

  std::size_t size() const { return std::size_t{ 1 } << n_; }

  BitTable variable( int bit ) const
  {
    BitTable t( size() );
    for ( std::uint64_t x = 0; x < size(); ++x )
      if ( ( x >> bit ) & 1 )
        t.set( x );
    return t;
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses an expression over x1..xn with operators ! & ^ |, parentheses and constants 0, 1.
inline BooleanFunction parse_expression( std::string_view text, int n, int max_vars = default_max_vars )
{
  if ( n < 0 )
    throw InvalidInput( "negative variable count" );
  check_cap( "parse_expression", n, max_vars );
  return BooleanFunction( n, detail::ExpressionParser( text, n ).parse(), max_vars );
}

} // namespace boolsens
