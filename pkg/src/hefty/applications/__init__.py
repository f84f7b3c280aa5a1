"""Consequences of the covering results: k-facets, levels, chambers, hypersimplices."""

from hefty.applications.chambers import (
    BoxTooSmall, Chamber, HemisphereCensus, enumerate_chambers, gen_hexmesh, heft_census,
    hemisphere_chambers, perturbed_hexmesh, random_hemispheres, regular_polygon_normals,
    sphere_chambers,
)
from hefty.applications.facets import (
    KFacet, facet_counts, facet_transfer, invert, k_facets, line_entry_count, oriented_facets,
)
from hefty.applications.identities import (
    EulerianTable, IdentityCheck, eulerian, eulerian_by_scan, hypersimplex_identity_check,
    hypersimplex_relative_volume, worpitzky_check,
)
from hefty.applications.levels import (
    AffineFunction, Arrangement, level_maxima, level_minima, level_value, random_arrangement,
)
from hefty.applications.mosaic import MosaicCell, cell_location, cells_containing, order_n_mosaic_cells

__all__ = [
    "AffineFunction", "Arrangement", "BoxTooSmall", "Chamber", "EulerianTable", "HemisphereCensus",
    "IdentityCheck", "KFacet", "MosaicCell", "cell_location", "cells_containing",
    "enumerate_chambers", "eulerian", "eulerian_by_scan", "facet_counts", "facet_transfer",
    "gen_hexmesh", "heft_census", "hemisphere_chambers", "hypersimplex_identity_check",
    "hypersimplex_relative_volume", "invert", "k_facets", "level_maxima", "level_minima",
    "level_value", "line_entry_count", "order_n_mosaic_cells", "oriented_facets",
    "perturbed_hexmesh", "random_arrangement", "random_hemispheres", "regular_polygon_normals",
    "sphere_chambers", "worpitzky_check",
]
