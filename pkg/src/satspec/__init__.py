"""Exact tools for graphs saturated with respect to k vertex-disjoint cycles."""

__version__ = "1.0.0"
