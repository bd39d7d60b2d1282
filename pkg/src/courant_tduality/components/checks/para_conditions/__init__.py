"""Para-Hermitian conditions component."""

from .component import ParaConditionsComponent

__all__ = ["ParaConditionsComponent"]
