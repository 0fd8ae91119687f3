"""Exact-arithmetic verification of identities and congruences for the
Franel-type sequences g_n(x), f_n(x), A_n(x) and their q-analogues."""

__version__ = "0.1.0"
