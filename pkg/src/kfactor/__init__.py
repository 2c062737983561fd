"""Statistic-preserving bijections between minimal cycle factorizations,
edge-coloured rooted forests and parking functions."""

from .factorization import KFactorization, area_stats, canonical, lower, upper
from .forest import KForest, RootedForest, stats
from .archmap import cda, cda_inverse, jcdal, jcdal_inverse
from .parking import ParkingFunction, L, L_inverse, disp

__version__ = "0.1.0"
