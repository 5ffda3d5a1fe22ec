#include "cli_app.hpp"

int main( int argc, char** argv )
{
  return boolsens::cli::run( std::vector<std::string>( argv, argv + argc ), std::cout, std::cerr );
}
