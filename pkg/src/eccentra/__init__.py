"""Anti-adjacency (eccentricity) spectra of graphs and mixed star extensions."""

from .extension import StarParams, normalize, parse_star_params, recognize_star_extension, star_extension
from .graph import Graph, distances, ecc_profile
from .spectral import anti_adjacency, char_poly_exact, eigenvalues

__all__ = [
    "Graph", "StarParams", "anti_adjacency", "char_poly_exact", "distances", "ecc_profile",
    "eigenvalues", "normalize", "parse_star_params", "recognize_star_extension", "star_extension",
]
__version__ = "0.1.0"
