"""Exact inversion of the integer wedge map, with Gauss composition via 2x2x2 cubes."""
from .binforms import BinaryQuadraticForm, Form, compose, compose_arndt, compose_dirichlet, reduce_definite, reduced_forms
from .cubes import BhargavaCube, build_cube, compose_cubes, cube_form, cube_forms
from .errors import NotDecomposableError, PreconditionError, ShapeError, UnsupportedGradeError
from .exterior import PluckerVector, hat, plucker_check, wedge, wedge2
from .inversion import invert, invert_rank2, transition_matrix

__version__ = "0.1.0"
