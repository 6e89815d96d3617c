"""Arc Scatter - second-kind integral equations for Helmholtz scattering by open arcs."""

__version__ = "0.1.0"
