"""Brill-Noether numerology, incidence counts and emptiness certificates
for intersections of incidence and secant varieties on general curves."""

__version__ = "0.1.0"
