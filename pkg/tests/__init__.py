"""
Test package for the monotone CLT toolkit.
"""
