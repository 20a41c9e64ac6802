"""
Domain services module

Pure algorithms over the domain entities. Modules are imported directly
(linear_code depends on linalg, so nothing is re-exported here).
"""
__all__ = [
    'linalg',
    'gray_map',
    'double_code_ops',
    'divisor_search',
    'dual',
    'distance',
    'construction',
]
