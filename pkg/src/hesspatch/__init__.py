"""Exact Gröbner, GVD and Frobenius-splitting computations for Hessenberg patch ideals."""
