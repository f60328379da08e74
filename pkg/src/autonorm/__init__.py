"""Automatic shifted-logarithm transformation of data features toward normality."""

__version__ = "0.1.0"
