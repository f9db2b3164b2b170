"""Symbolic ordinal arithmetic below epsilon_0, prae-dilators and their extensions."""

__version__ = '0.4.0'
