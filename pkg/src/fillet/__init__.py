"""Certificates for induced filletings in coherent massed graphs."""
