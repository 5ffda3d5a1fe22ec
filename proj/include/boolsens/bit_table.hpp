#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace boolsens
{

/// Packed bit vector used for truth tables and hypercube vertex sets.
/// Bits past size() in the last word are always zero.
class BitTable
{
public:
  BitTable() = default;

  explicit BitTable( std::size_t size, bool value = false )
      : size_( size ), words_( ( size + 63 ) / 64, value ? ~std::uint64_t{ 0 } : 0 )
  {
    trim();
  }

  std::size_t size() const noexcept { return size_; }

  bool test( std::size_t i ) const noexcept { return ( words_[i >> 6] >> ( i & 63 ) ) & 1u; }
  bool operator[]( std::size_t i ) const noexcept { return test( i ); }

  void set( std::size_t i, bool value = true ) noexcept
  {
    auto const mask = std::uint64_t{ 1 } << ( i & 63 );
    if ( value )
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  std::size_t count() const noexcept
  {
    std::size_t c = 0;
    for ( auto w : words_ )
      c += static_cast<std::size_t>( std::popcount( w ) );
    return c;
  }

  bool none() const noexcept
  {
    for ( auto w : words_ )
      if ( w )
        return false;
    return true;
  }

  bool all() const noexcept { return count() == size_; }

  std::span<std::uint64_t const> words() const noexcept { return words_; }
  std::span<std::uint64_t> mutable_words() noexcept { return words_; }

  BitTable operator~() const
  {
    BitTable r = *this;
    for ( auto& w : r.words_ )
      w = ~w;
    r.trim();
    return r;
  }

  BitTable& operator&=( BitTable const& o ) noexcept
  {
    for ( std::size_t k = 0; k < words_.size(); ++k )
      words_[k] &= o.words_[k];
    return *this;
  }
  BitTable& operator|=( BitTable const& o ) noexcept
  {
    for ( std::size_t k = 0; k < words_.size(); ++k )
      words_[k] |= o.words_[k];
    return *this;
  }
  BitTable& operator^=( BitTable const& o ) noexcept
  {
    for ( std::size_t k = 0; k < words_.size(); ++k )
      words_[k] ^= o.words_[k];
    return *this;
  }

  friend BitTable operator&( BitTable a, BitTable const& b ) { return a &= b; }
  friend BitTable operator|( BitTable a, BitTable const& b ) { return a |= b; }
  friend BitTable operator^( BitTable a, BitTable const& b ) { return a ^= b; }

  friend bool operator==( BitTable const&, BitTable const& ) = default;

  std::size_t hash() const noexcept
  {
    std::size_t seed = std::hash<std::size_t>{}( size_ );
    for ( auto w : words_ )
      seed ^= std::hash<std::uint64_t>{}( w ) + 0x9e3779b97f4a7c15ull + ( seed << 6 ) + ( seed >> 2 );
    return seed;
  }

private:
  void trim() noexcept
  {
    if ( size_ % 64 != 0 && !words_.empty() )
      words_.back() &= ( std::uint64_t{ 1 } << ( size_ % 64 ) ) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace boolsens

template<>
struct std::hash<boolsens::BitTable>
{
  std::size_t operator()( boolsens::BitTable const& t ) const noexcept { return t.hash(); }
};
