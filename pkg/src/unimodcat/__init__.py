"""Exact decision procedure for unimodularity of comodule-algebra module categories."""
