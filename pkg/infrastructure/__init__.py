"""
Infrastructure Layer Package

Contains adapters for external dependencies.
Implements domain interfaces using concrete technologies.
"""
__all__ = ['repositories']
