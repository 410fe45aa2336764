"""
Source package for the monotone CLT toolkit.
"""
