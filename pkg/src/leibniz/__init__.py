"""Exact structure theory for finite-dimensional left Leibniz algebras."""
