// Walkthrough: realize a prescribed Alexander polynomial as a ribbon pair,
// build the band surface with its saddle annotation, and inspect the
// almost classical boundary diagram.

#include <iostream>

#include "vknot/band.hpp"

using namespace vknot;

int main() {
  LaurentPoly target = LaurentPoly::parse("t-1+t^-1");
  SeifertPair pair = realize_alexander(target);

  std::cout << "target Delta = " << target.str() << "\n";
  std::cout << "realized pair genus " << pair.genus() << ", Delta = "
            << alexander_conway(pair).str() << "\n";
  std::cout << "null-concordant with the identity certificate: "
            << (null_concordance_verify(pair, id_mat(pair.dim())) ? "yes"
                                                                  : "no")
            << "\n";

  BandSurface surface = realize_null_concordant(pair);
  std::cout << "surface: " << band_surface_to_json(surface).dump() << "\n";

  GaussDiagram boundary = boundary_gauss_diagram(surface);
  std::cout << "boundary Gauss code: " << serialize_gauss_code(boundary)
            << "\n";
  std::cout << "almost classical: "
            << (is_almost_classical(boundary) ? "yes" : "no") << "\n";

  // Round trip an arbitrary pair through the band construction.
  IntMat vplus{{1, -1}, {0, 1}};
  IntMat vminus{{1, 0}, {-1, 1}};
  RealizedSurface rs = realize_seifert_pair(SeifertPair(vplus, vminus));
  SeifertPair back = band_surface_vlk(rs.surface);
  std::cout << "trefoil surface kinks: " << rs.surface.kinks[0] << ","
            << rs.surface.kinks[1] << "  twists: " << rs.surface.twists.size()
            << "\n";
  std::cout << "round-trip Delta = " << alexander_conway(back).str() << "\n";
  return 0;
}
