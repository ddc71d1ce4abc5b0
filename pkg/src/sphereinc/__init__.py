"""Exact point-sphere incidence counting and distance experiments in R^3."""

from .geom import (Circle3, Empty, Plane, Point3, Sphere, Tangent,
                   circle_from, circle_in_sphere, circle_through, cocircular,
                   on_sphere, point_on_circle, sphere_pair_circle,
                   squared_distance)
from .surface import SurfacePoly, circle_in_variety, on_variety
from .lifting import (Hyperplane4, Point4, dual_incidence, lift_point,
                      point_to_dual_hyperplane, sphere_to_dual_point,
                      sphere_to_hyperplane)
from .incidence import (IncidenceGraph, PointSet, SphereSet, contains_k33,
                        incidences_bruteforce, incidences_bucketed,
                        unit_incidences)
from .decomposition import (Decomposition, NoWitness, RichCircleBlock,
                            decompose, degenerate_replacement_circle,
                            enumerate_rich_circles, multiplicity_filter,
                            quadruple_witness, strongly_degenerate,
                            verify_decomposition)
from .distances import (DistanceCensus, center_locus_circle,
                        distinct_distances, distinct_distances_bipartite,
                        reduction_spheres_for_distinct, unit_distances,
                        unit_distances_bipartite)
from .generators import (GeneratorSpec, SplitMix64, gen_grid, gen_random_points,
                         gen_random_spheres, gen_sphere_half, gen_sphere_pencil,
                         gen_surface_points, torus_poly, cylinder_poly)
from .harness import (ExperimentConfig, ScalingReport, check_residual_bound,
                      fit_exponent, residual_bound_value, run_experiment)

__version__ = "0.1.0"
