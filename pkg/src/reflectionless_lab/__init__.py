"""Exactly solvable reflectionless potentials: real sech^2 wells, their
isospectral deformations, complex PT-symmetric Scarf-II potentials and their
rational extensions, with closed-form spectra, eigenfunctions and scattering
amplitudes checked against an independent numerical solver."""

from .catalog import CatalogEntry, enumerate_catalog, spectrum_split
from .errors import ConvergenceError, DomainError, PoleError, SingularPointError
from .potentials import Family, GridFunction, PotentialSpec, evaluate, partner_potential, sample
from .scattering import ScatteringAmplitudes, analytic_amplitudes, numeric_scatter
from .spectra import BoundState, bound_energies, eigenfunction, schrodinger_residual
from .susyqm import Superpotential, superpotential

__version__ = "0.1.0"

__all__ = [
    "BoundState",
    "CatalogEntry",
    "ConvergenceError",
    "DomainError",
    "Family",
    "GridFunction",
    "PoleError",
    "PotentialSpec",
    "ScatteringAmplitudes",
    "SingularPointError",
    "Superpotential",
    "analytic_amplitudes",
    "bound_energies",
    "eigenfunction",
    "enumerate_catalog",
    "evaluate",
    "numeric_scatter",
    "partner_potential",
    "sample",
    "schrodinger_residual",
    "spectrum_split",
    "superpotential",
]
