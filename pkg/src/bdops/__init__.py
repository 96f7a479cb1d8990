"""Dense-domain basic vectors and exact certificates for the integral operators T_{-m,n}."""

__version__ = "0.1.0"
