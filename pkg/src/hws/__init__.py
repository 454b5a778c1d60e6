"""Higher weight spectra and graded Betti numbers of small Reed-Muller codes."""
__version__ = "0.1.0"
