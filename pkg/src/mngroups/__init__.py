"""Exact computations around groups whose maximal subgroups are all normal."""
