"""
Application Layer Package

Contains use cases, one per command.
Orchestrates domain entities, services and interfaces.
"""
__all__ = ['use_cases']
